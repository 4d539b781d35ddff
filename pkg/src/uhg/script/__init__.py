"""The ``.uhg`` construction language."""
from .evaluator import Evaluation, ScriptTypeError, StatementResult, evaluate, format_value, run_source
from .syntax import Diagnostic, Program, ScriptError, diagnostics, parse, pretty

__all__ = [
    "Diagnostic",
    "Evaluation",
    "Program",
    "ScriptError",
    "ScriptTypeError",
    "StatementResult",
    "diagnostics",
    "evaluate",
    "format_value",
    "parse",
    "pretty",
    "run_source",
]
