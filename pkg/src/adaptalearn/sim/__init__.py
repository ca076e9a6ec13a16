"""Deterministic replay harness and CLI."""

from .replay import (
    DEFAULT_PERIOD,
    ReplayReport,
    TABLE1_GOLDEN_SCRIPTS,
    gen_trace,
    replay,
    verify_table1,
)
from .script import (
    EventStep,
    ExpectStep,
    ScriptError,
    Step,
    TickStep,
    TraceScript,
    parse_script,
    serialize_script,
)

__all__ = [
    "DEFAULT_PERIOD", "EventStep", "ExpectStep", "ReplayReport",
    "ScriptError", "Step", "TABLE1_GOLDEN_SCRIPTS", "TickStep", "TraceScript",
    "gen_trace", "parse_script", "replay", "serialize_script", "verify_table1",
]
