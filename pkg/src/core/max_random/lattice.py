"""格子上の型と D 型の比較."""
from fractions import Fraction

import numpy as np

from src.core.transforms import lt_evaluate
from src.models import DtypeMaxtypeComparison, LatticeDF, LTSpec, PGFComparisonRow

EXAMPLE_Q = Fraction(1, 4)
EXAMPLE_C = Fraction(1, 2)
# EXAMPLE_Q ** EXAMPLE_C
EXAMPLE_Q_POWER = Fraction(1, 2)
EXAMPLE_GRID = tuple(Fraction(i, 4) for i in range(5))


def _geometric_pgf(r: Fraction, s: Fraction) -> Fraction:
    """P{X = n} = (1 - r) r^n の PGF."""
    return (1 - r) / (1 - r * s)


def example2_report() -> DtypeMaxtypeComparison:
    """格子上の分布関数 1 - q^k と 1 - (q^c)^k の対で、D 型の関係を有理数で調べる.

    q = 1/4, c = 1/2 のとき Q_X(s) = 3/(4-s), Q_Y(s) = 1/(2-s),
    Q_X(1/2 + s/2) = 6/(7-s), Q_Y(1/2 + s/2) = 2/(3-s)。
    """
    c = EXAMPLE_C
    rows = []
    for s in EXAMPLE_GRID:
        thinned = 1 - c + c * s
        rows.append(
            PGFComparisonRow(
                s=s,
                q_x=_geometric_pgf(EXAMPLE_Q, s),
                q_y=_geometric_pgf(EXAMPLE_Q_POWER, s),
                q_x_thinned=_geometric_pgf(EXAMPLE_Q, thinned),
                q_y_thinned=_geometric_pgf(EXAMPLE_Q_POWER, thinned),
            )
        )

    forward = max(abs(row.q_x - row.q_y_thinned) for row in rows)
    backward = max(abs(row.q_y - row.q_x_thinned) for row in rows)
    max_deviation = min(forward, backward)
    return DtypeMaxtypeComparison(
        q=EXAMPLE_Q,
        c=c,
        rows=tuple(rows),
        deviation_at_zero=abs(rows[0].q_x - rows[0].q_y_thinned),
        max_deviation=max_deviation,
        not_equivalent=max_deviation > Fraction(1, 100),
    )


def lattice_table(df: LatticeDF, kmax: int) -> np.ndarray:
    """F(k) = 1 - m(scale·k), k = 0..kmax."""
    if kmax < 0:
        raise ValueError(f"kmax must be >= 0, got {kmax}")
    k = np.arange(kmax + 1, dtype=float)
    return 1.0 - np.asarray(lt_evaluate(df.m, df.scale * k), dtype=float)


def lattice_dtype_pair(m: LTSpec, alpha: float, kmax: int) -> tuple[np.ndarray, np.ndarray]:
    """F(k) = 1 - m(k) と G(k) = F(αk) = 1 - m(αk) の表（αk は格子点でなくてもよい）."""
    return lattice_table(LatticeDF(m), kmax), lattice_table(LatticeDF(m, alpha), kmax)
