"""Monitor and Update agents: the adaptation loop over the knowledge store.

Flow: the web layer gateway-sends ``user_id=<id>`` to a session's Monitor;
the Monitor kills its waiting behavior, starts its ticker, and on every
tick scans the stored profile.  When any change accumulator reaches the
threshold it INFORMs the Update agent, which settles the profile through
the style engine, writes it back atomically, and replies CONFIRM on the
same conversation.

Wire formats (bit-exact):
    INFORM  content: "update-dims user=<id> AR=<int> SI=<int> VV=<int> SG=<int>"
            (only dimensions whose |accumulator| >= threshold appear)
    CONFIRM content: "updated user=<id> <DIM>:<old>-><new> ..."
            (one entry per dimension the settlement actually moved)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..ontology import NotFoundError, OntologyStore, read_profile, write_profile
from ..styles import DIMENSIONS, Dimension, DimensionChange, SETTLE_THRESHOLD, settle
from .platform import (
    ACLMessage,
    AgentContext,
    AgentId,
    AgentPlatform,
    CyclicBehavior,
    Performative,
    TickerBehavior,
)

logger = logging.getLogger(__name__)

UPDATE_AGENT_NAME = "update"
DEFAULT_MONITOR_PERIOD = 30.0


class NoticeFormatError(ValueError):
    pass


@dataclass(frozen=True)
class DimChangeNotice:
    """Qualifying accumulator values carried monitor -> update."""

    user_id: str
    entries: tuple[tuple[Dimension, int], ...]  # canonical dimension order

    def render(self) -> str:
        parts = [f"update-dims user={self.user_id}"]
        parts += [f"{dim.value}={value}" for dim, value in self.entries]
        return " ".join(parts)


def parse_notice(content: str) -> DimChangeNotice:
    tokens = content.split(" ")
    if len(tokens) < 3 or tokens[0] != "update-dims" or not tokens[1].startswith("user="):
        raise NoticeFormatError(f"malformed update-dims content: {content!r}")
    user_id = tokens[1][len("user="):]
    if not user_id:
        raise NoticeFormatError("update-dims content has an empty user id")
    by_dim: dict[Dimension, int] = {}
    for token in tokens[2:]:
        key, sep, value = token.partition("=")
        try:
            dim = Dimension(key)
        except ValueError:
            raise NoticeFormatError(f"unknown dimension {key!r}") from None
        if not sep or dim in by_dim:
            raise NoticeFormatError(f"bad dimension entry {token!r}")
        try:
            by_dim[dim] = int(value)
        except ValueError:
            raise NoticeFormatError(f"non-integer value in {token!r}") from None
    entries = tuple((d, by_dim[d]) for d in DIMENSIONS if d in by_dim)
    return DimChangeNotice(user_id, entries)


def render_confirm(user_id: str, changes: list[DimensionChange]) -> str:
    parts = [f"updated user={user_id}"]
    parts += [
        f"{c.dimension.value}:{c.old_score}->{c.new_score}" for c in changes
    ]
    return " ".join(parts)


def spawn_update_agent(platform: AgentPlatform, store: OntologyStore,
                       local_name: str = UPDATE_AGENT_NAME) -> AgentId:
    """The platform-wide Update agent: settles profiles on INFORM notices."""

    def on_message(ctx: AgentContext, msg: ACLMessage) -> None:
        if msg.performative != Performative.INFORM:
            return  # e.g. AMS failure notices; nothing to settle
        try:
            notice = parse_notice(msg.content)
        except NoticeFormatError as exc:
            ctx.reply(msg, Performative.FAILURE, f"malformed-notice {exc}")
            return
        try:
            def settle_in_store(graph):
                profile = read_profile(graph, notice.user_id)
                settled, changes = settle(profile)
                return write_profile(graph, settled), changes
            changes = store.mutate_user(settle_in_store)
        except (NotFoundError, OSError, ValueError) as exc:
            ctx.reply(msg, Performative.FAILURE, f"update-failed {exc}")
            return
        ctx.reply(msg, Performative.CONFIRM, render_confirm(notice.user_id, changes))

    return platform.spawn(local_name, [CyclicBehavior(on_message, "settle-on-inform")])


class MonitorAgent:
    """One learner session's Monitor: dormant until told its user id."""

    def __init__(self, platform: AgentPlatform, store: OntologyStore,
                 update_aid: AgentId, local_name: str,
                 period: float = DEFAULT_MONITOR_PERIOD):
        self.platform = platform
        self.store = store
        self.update_aid = update_aid
        self.period = period
        self.user_id: str | None = None
        self._informs_sent = 0
        self.aid = platform.spawn(
            local_name, [CyclicBehavior(self._await_user_id, "await-user-id")])

    @property
    def active(self) -> bool:
        return self.user_id is not None

    def _await_user_id(self, ctx: AgentContext, msg: ACLMessage) -> None:
        if not msg.content.startswith("user_id=") or len(msg.content) <= len("user_id="):
            logger.warning("monitor %s ignoring malformed content %r",
                           self.aid.guid, msg.content)
            return
        self.user_id = msg.content[len("user_id="):]
        assert ctx.current_behavior is not None
        ctx.current_behavior.kill()
        ctx.add_behavior(TickerBehavior(self.period, self._tick, "scan-profile"))

    def _tick(self, ctx: AgentContext) -> None:
        assert self.user_id is not None
        try:
            profile = read_profile(self.store.user_graph(), self.user_id)
        except NotFoundError as exc:
            logger.error("monitor %s: FAILURE reading profile: %s", self.aid.guid, exc)
            return
        entries = tuple(
            (d, profile.accumulators[d]) for d in DIMENSIONS
            if abs(profile.accumulators[d]) >= SETTLE_THRESHOLD
        )
        if not entries:
            return
        self._informs_sent += 1
        notice = DimChangeNotice(self.user_id, entries)
        ctx.send(self.update_aid, Performative.INFORM, notice.render(),
                 conversation_id=f"adapt-{self.user_id}-{self._informs_sent}")
