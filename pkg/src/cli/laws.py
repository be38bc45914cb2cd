"""分布の文字列表現の解析.

文法は ``family:key=val[,key=val]`` または ``@file.json``（.json で終わるパスは @ を省略可）。
"""
import json
import logging
from pathlib import Path
from typing import Any, Union

from src.core.divisibility import ExampleKind, make_example_law
from src.core.dtype_stable import discrete_stable_pgf
from src.models import (
    DiscreteStableSpec,
    InvalidSpec,
    LTFamily,
    LTSpec,
    MaxBase,
    MaxCaseFamily,
    MaxStabilityCase,
    PGFSpec,
    ProbSeq,
)

logger = logging.getLogger(__name__)

LT_GRAMMAR = "family:key=val[,key=val] with family in {" + ", ".join(f.value for f in LTFamily) + "}"
PMF_FAMILIES = ("poisson", "geometric", "binomial", "negbinom", "degenerate", "ex1a", "ex1b")
PMF_GRAMMAR = (
    "family:key=val[,key=val] with family in {" + ", ".join(PMF_FAMILIES) + "}, or @file.json"
)


class ParseError(ValueError):
    """文字列表現の解析エラー（position は入力中の文字位置）."""

    code = "IDLAB-U001"

    def __init__(self, message: str, text: str, position: int, grammar: str = ""):
        self.text = text
        self.position = position
        self.grammar = grammar
        super().__init__(f"{message} at position {position} in '{text}'")


def _is_file_reference(text: str) -> bool:
    return text.startswith("@") or (":" not in text and text.endswith(".json"))


def _load_json(text: str, grammar: str) -> Any:
    path = Path(text[1:] if text.startswith("@") else text)
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except (OSError, ValueError) as e:
        raise ParseError(f"Cannot read JSON file {path}: {e}", text, 0, grammar) from e


def split_law(text: str, grammar: str) -> tuple[str, dict[str, float]]:
    """``family:key=val,...`` を (family, {key: 数値}) に分解.

    Raises:
        ParseError: 文法に合わない場合
    """
    text = text.strip()
    if not text:
        raise ParseError("Empty law string", text, 0, grammar)
    family, sep, body = text.partition(":")
    if not family:
        raise ParseError("Missing family name", text, 0, grammar)

    params: dict[str, float] = {}
    position = len(family) + len(sep)
    if sep and not body:
        raise ParseError("Missing key=val after ':'", text, position, grammar)
    for item in body.split(",") if body else []:
        key, eq, value = item.partition("=")
        if not eq or not key:
            raise ParseError(f"Expected key=val, got '{item}'", text, position, grammar)
        if key in params:
            raise ParseError(f"Duplicate key '{key}'", text, position, grammar)
        try:
            params[key.strip()] = float(value)
        except ValueError:
            raise ParseError(
                f"Value of '{key}' is not a number: '{value}'",
                text,
                position + len(key) + 1,
                grammar,
            ) from None
        position += len(item) + 1
    return family.strip(), params


def _int_param(params: dict[str, float], key: str, text: str, grammar: str) -> int:
    value = params[key]
    if not value.is_integer():
        raise ParseError(f"'{key}' must be an integer, got {value:g}", text, text.find(key), grammar)
    return int(value)


def _validated(text: str, grammar: str, build: Any) -> Any:
    try:
        return build()
    except KeyError as e:
        raise ParseError(f"Missing required key {e}", text, len(text), grammar) from e
    except (InvalidSpec, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(str(e), text, text.find(":") + 1, grammar) from e


def parse_lt_string(text: str) -> LTSpec:
    """ラプラス変換の文字列表現（例: gamma:shape=2,rate=1）を解析.

    Raises:
        ParseError: 文法違反、未知の族・キー、値の範囲外
    """
    if _is_file_reference(text):
        data = _load_json(text, LT_GRAMMAR)
        return _validated(text, LT_GRAMMAR, lambda: LTSpec.from_dict(data))

    family, params = split_law(text, LT_GRAMMAR)
    try:
        lt_family = LTFamily(family)
    except ValueError:
        raise ParseError(f"Unknown Laplace transform family '{family}'", text, 0, LT_GRAMMAR) from None
    return _validated(text, LT_GRAMMAR, lambda: LTSpec(lt_family, params))


def parse_pmf_string(text: str, order: int) -> ProbSeq:
    """確率列の文字列表現（例: poisson:lambda=2）または JSON ファイルを解析.

    Raises:
        ParseError: 文法違反、未知の族・キー、値の範囲外
    """
    if _is_file_reference(text):
        data = _load_json(text, PMF_GRAMMAR)
        return _validated(text, PMF_GRAMMAR, lambda: ProbSeq.from_dict(data))

    family, params = split_law(text, PMF_GRAMMAR)
    allowed = {
        "poisson": {"lambda"},
        "geometric": {"p", "shift"},
        "binomial": {"n", "p"},
        "negbinom": {"t", "p"},
        "degenerate": {"k"},
        "ex1a": {"p", "k", "t"},
        "ex1b": {"p", "k", "t"},
    }
    if family not in allowed:
        raise ParseError(f"Unknown pmf family '{family}'", text, 0, PMF_GRAMMAR)
    unknown = sorted(set(params) - allowed[family])
    if unknown:
        raise ParseError(
            f"Unknown key '{unknown[0]}' for {family} (allowed: {', '.join(sorted(allowed[family]))})",
            text,
            text.find(unknown[0]),
            PMF_GRAMMAR,
        )

    def build() -> ProbSeq:
        if family == "poisson":
            return ProbSeq.poisson(params["lambda"], order)
        if family == "geometric":
            shift = _int_param(params, "shift", text, PMF_GRAMMAR) if "shift" in params else 0
            return ProbSeq.geometric(params["p"], order, shift=shift)
        if family == "binomial":
            n = _int_param(params, "n", text, PMF_GRAMMAR)
            return ProbSeq.binomial(n, params["p"], max(order, n))
        if family == "negbinom":
            return ProbSeq.negative_binomial(params["t"], params["p"], order)
        if family == "degenerate":
            return ProbSeq.degenerate(_int_param(params, "k", text, PMF_GRAMMAR), order)
        k = _int_param(params, "k", text, PMF_GRAMMAR)
        return make_example_law(ExampleKind(family), params["p"], k, params["t"], order)

    return _validated(text, PMF_GRAMMAR, build)


def parse_pgf_string(text: str, order: int) -> PGFSpec:
    """確率列、または閉形式の離散安定則 ``dstable:alpha=..,lambda=..`` を解析."""
    if not _is_file_reference(text) and text.startswith("dstable:"):
        grammar = "dstable:alpha=A,lambda=L"
        _, params = split_law(text, grammar)
        spec = _validated(text, grammar, lambda: DiscreteStableSpec(params["alpha"], params["lambda"]))
        return discrete_stable_pgf(spec)
    return PGFSpec.from_probseq(parse_pmf_string(text, order), label=text)


def parse_law_string(text: str, order: int = 64) -> Union[LTSpec, ProbSeq]:
    """ラプラス変換または確率列の文字列表現を解析（族名で判別）."""
    family = text.partition(":")[0]
    if not _is_file_reference(text) and family in {f.value for f in LTFamily} and family != "degenerate":
        return parse_lt_string(text)
    if _is_file_reference(text):
        data = _load_json(text, PMF_GRAMMAR)
        if isinstance(data, dict) and "family" in data:
            return _validated(text, LT_GRAMMAR, lambda: LTSpec.from_dict(data))
        return _validated(text, PMF_GRAMMAR, lambda: ProbSeq.from_dict(data))
    if family == "degenerate" and "c=" in text:
        return parse_lt_string(text)
    return parse_pmf_string(text, order)


def parse_max_case(text: str) -> MaxStabilityCase:
    """``pareto-min:p=0.1,a=2`` / ``logistic-max:p=0.2`` / ``exponential-geo-min:p=0.5``."""
    grammar = "case:p=P[,a=A] with case in {" + ", ".join(c.value for c in MaxCaseFamily) + "}"
    family, params = split_law(text, grammar)
    unknown = sorted(set(params) - {"p", "a"})
    if unknown:
        raise ParseError(f"Unknown key '{unknown[0]}'", text, text.find(unknown[0]), grammar)
    return _validated(
        text, grammar, lambda: MaxStabilityCase(MaxCaseFamily(family), params["p"], params.get("a"))
    )


def parse_max_base(text: str) -> MaxBase:
    """``exponential`` または ``pareto:a=2``."""
    grammar = "exponential | pareto:a=A"
    family, params = split_law(text, grammar)
    unknown = sorted(set(params) - {"a"})
    if unknown:
        raise ParseError(f"Unknown key '{unknown[0]}'", text, text.find(unknown[0]), grammar)
    return _validated(text, grammar, lambda: MaxBase(family, params.get("a")))
