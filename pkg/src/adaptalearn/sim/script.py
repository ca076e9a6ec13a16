"""Line-oriented trace scripts for deterministic replay.

Format (one statement per line, '#' comments allowed):

    user <id>                   optional, defaults to monika123
    init scores <4 ints>        required before any step
    init accs <4 ints>          required before any step
    event <BehaviorEventKind>
    tick
    expect scores <4 ints>
    expect accs <4 ints>

Vectors are in canonical dimension order (AR SI VV SG).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ..styles import (
    BehaviorEventKind,
    DIMENSIONS,
    LearnerStyleProfile,
    StyleValidationError,
)

DEFAULT_USER = "monika123"


class ScriptError(ValueError):
    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        where = f" at line {line_no}" if line_no is not None else ""
        super().__init__(f"{message}{where}")


@dataclass(frozen=True)
class EventStep:
    kind: BehaviorEventKind


@dataclass(frozen=True)
class TickStep:
    pass


@dataclass(frozen=True)
class ExpectStep:
    target: str  # "scores" | "accs"
    values: tuple[int, int, int, int]


Step = Union[EventStep, TickStep, ExpectStep]


@dataclass(frozen=True)
class TraceScript:
    user_id: str
    scores: tuple[int, int, int, int]
    accumulators: tuple[int, int, int, int]
    steps: tuple[Step, ...] = field(default_factory=tuple)

    def initial_profile(self) -> LearnerStyleProfile:
        return LearnerStyleProfile(
            self.user_id,
            dict(zip(DIMENSIONS, self.scores)),
            dict(zip(DIMENSIONS, self.accumulators)),
        )


def _vector(tokens: list[str], line_no: int) -> tuple[int, int, int, int]:
    if len(tokens) != 4:
        raise ScriptError(f"expected 4 integers, got {len(tokens)}", line_no)
    try:
        values = tuple(int(t) for t in tokens)
    except ValueError:
        raise ScriptError(f"non-integer in vector {' '.join(tokens)!r}", line_no) from None
    return values  # type: ignore[return-value]


def parse_script(text: str) -> TraceScript:
    user_id = DEFAULT_USER
    scores: tuple[int, int, int, int] | None = None
    accs: tuple[int, int, int, int] | None = None
    steps: list[Step] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "user":
            if len(tokens) != 2:
                raise ScriptError("user line needs exactly one id", line_no)
            user_id = tokens[1]
        elif head == "init":
            if len(tokens) < 2 or tokens[1] not in ("scores", "accs"):
                raise ScriptError("init needs 'scores' or 'accs'", line_no)
            if steps:
                raise ScriptError("init must precede all steps", line_no)
            if tokens[1] == "scores":
                scores = _vector(tokens[2:], line_no)
            else:
                accs = _vector(tokens[2:], line_no)
        elif head == "event":
            if len(tokens) != 2:
                raise ScriptError("event needs exactly one kind", line_no)
            try:
                steps.append(EventStep(BehaviorEventKind(tokens[1])))
            except ValueError:
                raise ScriptError(f"unknown event kind {tokens[1]!r}", line_no) from None
        elif head == "tick":
            if len(tokens) != 1:
                raise ScriptError("tick takes no arguments", line_no)
            steps.append(TickStep())
        elif head == "expect":
            if len(tokens) < 2 or tokens[1] not in ("scores", "accs"):
                raise ScriptError("expect needs 'scores' or 'accs'", line_no)
            steps.append(ExpectStep(tokens[1], _vector(tokens[2:], line_no)))
        else:
            raise ScriptError(f"unknown statement {head!r}", line_no)

    if scores is None or accs is None:
        raise ScriptError("script must declare 'init scores' and 'init accs'")
    script = TraceScript(user_id, scores, accs, tuple(steps))
    try:
        script.initial_profile()
    except StyleValidationError as exc:
        raise ScriptError(f"bad initial profile: {exc}") from None
    return script


def serialize_script(script: TraceScript) -> str:
    lines = [
        f"user {script.user_id}",
        "init scores " + " ".join(str(v) for v in script.scores),
        "init accs " + " ".join(str(v) for v in script.accumulators),
    ]
    for step in script.steps:
        if isinstance(step, EventStep):
            lines.append(f"event {step.kind.value}")
        elif isinstance(step, TickStep):
            lines.append("tick")
        else:
            lines.append(f"expect {step.target} "
                         + " ".join(str(v) for v in step.values))
    return "\n".join(lines) + "\n"
