"""Append-only behavior-event audit log.

Line format (bit-exact):
    <RFC3339 timestamp> <user_id> <event_kind> <DIM> <delta:+2|-2> <accumulator_after>

Under a simulated clock, timestamps are the fixed epoch 2015-01-01T00:00:00Z
plus whole simulated seconds, keeping replay output byte-identical.
"""

from __future__ import annotations

import threading
from datetime import datetime, timedelta, timezone
from pathlib import Path

from ..agents import SimulatedClock, WallClock
from ..styles import BehaviorEventKind, Dimension

SIM_EPOCH = datetime(2015, 1, 1, tzinfo=timezone.utc)


def format_timestamp(clock: SimulatedClock | WallClock | None) -> str:
    if clock is not None and clock.simulated:
        moment = SIM_EPOCH + timedelta(seconds=int(clock.now))
    else:
        moment = datetime.now(timezone.utc)
    return moment.strftime("%Y-%m-%dT%H:%M:%SZ")


def format_event_line(timestamp: str, user_id: str, kind: BehaviorEventKind,
                      dimension: Dimension, delta: int,
                      accumulator_after: int) -> str:
    return (f"{timestamp} {user_id} {kind.value} {dimension.value} "
            f"{delta:+d} {accumulator_after}")


class EventLog:
    def __init__(self, path: str | Path,
                 clock: SimulatedClock | WallClock | None = None):
        self.path = Path(path)
        self.clock = clock
        self._lock = threading.Lock()
        self.path.parent.mkdir(parents=True, exist_ok=True)
        if not self.path.exists():
            self.path.touch()

    def append(self, user_id: str, kind: BehaviorEventKind, dimension: Dimension,
               delta: int, accumulator_after: int) -> str:
        line = format_event_line(format_timestamp(self.clock), user_id, kind,
                                 dimension, delta, accumulator_after)
        with self._lock:
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(line + "\n")
        return line

    def lines(self) -> list[str]:
        with self._lock:
            return self.path.read_text(encoding="utf-8").splitlines()
