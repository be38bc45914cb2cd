"""idlab - CLI エントリーポイント."""
import argparse
import json
import logging
import sys
import typing
from dataclasses import replace
from pathlib import Path
from typing import Any, Optional, Sequence

from pydantic import ValidationError
from pydantic.fields import FieldInfo

from src import __version__
from src.cli import EXIT_USAGE, PARAM_MODELS, ParseError, UsageError, run
from src.cli.laws import LT_GRAMMAR, PMF_GRAMMAR
from src.config import ConfigError, get_settings
from src.models import VERBS, Report, RunConfig
from src.utils.logging_setup import setup_logging

logger = logging.getLogger(__name__)

VERB_HELP = {
    "idcheck": "離散無限分解可能性の判定（compound Poisson 分解）",
    "decompose": "λ と A(s) の係数、再合成誤差を出力",
    "thin": "D 型 thinning Q(1-c+cs) と D 型同値の比較",
    "sdtest": "離散自己分解可能性の判定",
    "stable-check": "離散安定則の安定性恒等式と吸引域の収束",
    "pgf-from-lt": "LT φ から PGF φ(1-s) を作り ID 性を確認",
    "pphi": "混合ポアソン計数 N_θ の PGF と標本",
    "lemma3": "θ→0 で θN_θ → U の収束",
    "transfer-sum": "φ-ID 乱数和の極限への収束",
    "theorem7": "φ-ID 判定の p0 > 0 条件",
    "opstable2d": "2 次元演算子 φ-安定和（対角のみ）",
    "maxstab": "幾何的最大・最小安定性",
    "phi-mid": "φ-MID 乱数最大値の極限への収束",
    "simulate": "サンプラーの検証（標本ダンプ付き）",
    "example2": "D 型と max 型が一致しない格子例",
}

LAW_FIELDS = {"phi": LT_GRAMMAR, "mix": LT_GRAMMAR, "summand": LT_GRAMMAR, "pmf": PMF_GRAMMAR, "compare": PMF_GRAMMAR}


class ArgumentParser(argparse.ArgumentParser):
    """使い方エラーを終了コード 3 で返すパーサー."""

    def error(self, message: str) -> typing.NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error [IDLAB-U002]: {message}\n")


def _is_list(annotation: Any) -> bool:
    if typing.get_origin(annotation) is list:
        return True
    return any(typing.get_origin(arg) is list for arg in typing.get_args(annotation))


def _add_param_arguments(parser: argparse.ArgumentParser, verb: str) -> None:
    """パラメータモデルのフィールドから --key オプションを生成.

    値は文字列のまま渡し、型変換と検証はパラメータモデルに任せる。
    """
    model = PARAM_MODELS[verb]
    for name, info in model.model_fields.items():
        parser.add_argument(
            f"--{name.replace('_', '-')}",
            dest=name,
            nargs="+" if _is_list(info.annotation) else None,
            default=argparse.SUPPRESS,
            help=_field_help(name, info),
        )


def _field_help(name: str, info: FieldInfo) -> str:
    parts = [info.description or name]
    if name in LAW_FIELDS:
        parts.append(f"grammar: {LAW_FIELDS[name]}")
    if info.is_required():
        parts.append("required")
    else:
        parts.append(f"default: {info.get_default(call_default_factory=True)!r}")
    return "; ".join(parts)


def build_parser() -> ArgumentParser:
    """コマンドラインパーサーを作成."""
    parser = ArgumentParser(
        prog="idlab",
        description="離散無限分解可能性・離散安定則・φ-ID 乱数和・φ-MID 乱数最大値の検証ツール",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
例:
  idlab idcheck --pmf poisson:lambda=2 --terms 64
  idlab idcheck --pmf binom2.json
  idlab example2
  idlab lemma3 --phi gamma:shape=2,rate=1 --seed 7
  idlab --config run.json
""",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", type=Path, help="RunConfig JSON ファイル")
    parser.add_argument("--log-level", help="ログレベル (DEBUG, INFO, WARNING, ERROR)")
    parser.add_argument("--schema", action="store_true", help="JSON スキーマを出力して終了")

    common = ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="乱数シード")
    common.add_argument("--samples", type=int, default=None, help="標本数")
    common.add_argument("--terms", type=int, default=None, help="級数の打ち切り次数")
    common.add_argument("-o", "--out", default="out", help="出力ディレクトリ (デフォルト: out)")
    common.add_argument("--record-time", action="store_true", help="レポートに実行時間を含める")
    common.add_argument(
        "--schema",
        action="store_true",
        default=argparse.SUPPRESS,
        help="この動詞の JSON スキーマを出力して終了",
    )

    subparsers = parser.add_subparsers(dest="verb", metavar="verb", parser_class=ArgumentParser)
    for verb in VERBS:
        sub = subparsers.add_parser(
            verb,
            parents=[common],
            help=VERB_HELP[verb],
            description=VERB_HELP[verb],
        )
        _add_param_arguments(sub, verb)
    return parser


def _schema(verb: Optional[str]) -> dict[str, Any]:
    schema: dict[str, Any] = {"report": Report.model_json_schema()}
    if verb is None:
        schema["run_config"] = RunConfig.model_json_schema()
    else:
        schema["params"] = PARAM_MODELS[verb].model_json_schema()
    return schema


def _load_run_config(path: Path) -> RunConfig:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"Cannot read run config {path}: {e}") from e
    return RunConfig.model_validate_json(text)


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = PARAM_MODELS[args.verb].model_fields
    params = {name: getattr(args, name) for name in fields if hasattr(args, name)}
    return RunConfig(
        verb=args.verb,
        params=params,
        seed=args.seed,
        samples=args.samples,
        terms=args.terms,
        out_dir=args.out,
        record_time=args.record_time,
    )


def _report_usage(code: str, message: str, detail: str = "") -> int:
    print(f"error [{code}]: {message}", file=sys.stderr)
    if detail:
        print(detail, file=sys.stderr)
    return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    """メイン関数.

    Returns:
        終了コード（0: PASS/ID, 1: FAIL/NOT_ID, 2: INCONCLUSIVE, 3: 使い方エラー）
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = get_settings()
    except ConfigError as e:
        return _report_usage(ConfigError.code, str(e))

    logging_config = settings.logging
    if args.log_level:
        logging_config = replace(logging_config, level=args.log_level.upper())
    setup_logging(logging_config)

    if args.schema:
        print(json.dumps(_schema(args.verb), indent=2, sort_keys=True, ensure_ascii=False))
        return 0

    try:
        if args.config is not None:
            config = _load_run_config(args.config)
        elif args.verb is None:
            parser.print_usage(sys.stderr)
            return _report_usage(UsageError.code, "a verb or --config is required")
        else:
            config = _config_from_args(args)
        code, report, path = run(config, settings)
    except ParseError as e:
        return _report_usage(e.code, str(e), f"expected grammar: {e.grammar}" if e.grammar else "")
    except ValidationError as e:
        lines = [f"  {'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors()]
        return _report_usage(UsageError.code, f"invalid parameters for {e.title}", "\n".join(lines))
    except ConfigError as e:
        return _report_usage(e.code, str(e))
    except ValueError as e:
        return _report_usage(getattr(e, "code", UsageError.code), str(e))
    except Exception as e:
        code_attr = getattr(e, "code", None)
        if code_attr is None:
            raise
        logger.debug("Run aborted with %s", code_attr, exc_info=True)
        return _report_usage(code_attr, str(e))

    print(f"{config.verb}: {report.verdict} (exit {code}) -> {path}")
    return code


if __name__ == "__main__":
    sys.exit(main())
