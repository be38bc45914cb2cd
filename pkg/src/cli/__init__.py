"""コマンドラインインターフェース."""
from .laws import (
    ParseError,
    parse_law_string,
    parse_lt_string,
    parse_max_base,
    parse_max_case,
    parse_pgf_string,
    parse_pmf_string,
)
from .params import PARAM_MODELS
from .reporting import EXIT_USAGE, exit_code_for, render_report
from .runner import resolve_config, run
from .verbs import HANDLERS, RunContext, UsageError, VerbResult

__all__ = [
    "run",
    "resolve_config",
    "parse_law_string",
    "parse_lt_string",
    "parse_pmf_string",
    "parse_pgf_string",
    "parse_max_case",
    "parse_max_base",
    "render_report",
    "exit_code_for",
    "EXIT_USAGE",
    "PARAM_MODELS",
    "HANDLERS",
    "RunContext",
    "VerbResult",
    "ParseError",
    "UsageError",
]
