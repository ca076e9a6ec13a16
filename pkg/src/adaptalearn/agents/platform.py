"""In-process FIPA-lite agent platform.

One platform hosts named agents, routes ACL messages between their
mailboxes (FIFO per receiver, platform-wide sequence numbers), records
every delivered message in a sniffer trace, and schedules three behavior
kinds: one-shot (runs once), cyclic (runs per received message), and
ticker (runs on fixed-period clock deadlines).

Under a simulated clock the whole platform is driven single-threaded and
any scripted scenario is bit-reproducible: ticker firings are ordered by
(deadline, spawn order, registration order) and message dispatch walks
agents in spawn order.  A platform-wide lock also makes the router safe to
call from concurrent threads when running against the wall clock.
"""

from __future__ import annotations

import itertools
import logging
import threading
import time
from collections import deque
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable, Iterable, Optional

logger = logging.getLogger(__name__)

AMS_NAME = "ams"
GATEWAY_NAME = "gateway"


class PlatformError(RuntimeError):
    pass


class DuplicateAgentNameError(PlatformError):
    pass


class UnknownReceiverError(PlatformError):
    pass


class Performative(Enum):
    INFORM = "INFORM"
    REQUEST = "REQUEST"
    CONFIRM = "CONFIRM"
    FAILURE = "FAILURE"


@dataclass(frozen=True)
class AgentId:
    local_name: str
    platform: str

    @property
    def guid(self) -> str:
        return f"{self.local_name}@{self.platform}"

    def __str__(self) -> str:
        return self.guid


@dataclass(frozen=True)
class ACLMessage:
    performative: Performative
    sender: AgentId
    receiver: AgentId
    content: str
    conversation_id: str = ""
    sequence_no: int = 0  # assigned by the router at send time

    def trace_line(self) -> str:
        return (
            f"{self.sequence_no} {self.performative.value} "
            f"{self.sender.guid} -> {self.receiver.guid} "
            f"[{self.conversation_id}] {self.content}"
        )


class Behavior:
    """Base: a named reaction bound to one agent; killed behaviors never run."""

    def __init__(self, name: str = ""):
        self.name = name or type(self).__name__
        self.alive = True

    def kill(self) -> None:
        self.alive = False


class OneShotBehavior(Behavior):
    def __init__(self, fn: Callable[["AgentContext"], None], name: str = ""):
        super().__init__(name)
        self.fn = fn


class CyclicBehavior(Behavior):
    def __init__(self, fn: Callable[["AgentContext", ACLMessage], None], name: str = ""):
        super().__init__(name)
        self.fn = fn


class TickerBehavior(Behavior):
    def __init__(self, period: float, fn: Callable[["AgentContext"], None], name: str = ""):
        if period <= 0:
            raise PlatformError("ticker period must be positive")
        super().__init__(name)
        self.period = period
        self.fn = fn
        self.next_deadline = 0.0  # set when registered


class SimulatedClock:
    """Explicitly advanced clock; time never moves backward."""

    def __init__(self, start: float = 0.0):
        self._now = start

    @property
    def now(self) -> float:
        return self._now

    def advance_to(self, t: float) -> None:
        if t < self._now:
            raise PlatformError(f"clock cannot move backward ({t} < {self._now})")
        self._now = t

    @property
    def simulated(self) -> bool:
        return True


class WallClock:
    def __init__(self):
        self._origin = time.monotonic()

    @property
    def now(self) -> float:
        return time.monotonic() - self._origin

    @property
    def simulated(self) -> bool:
        return False


@dataclass
class _Agent:
    aid: AgentId
    spawn_index: int
    behaviors: list[Behavior] = field(default_factory=list)
    mailbox: deque = field(default_factory=deque)
    pending_oneshots: list[OneShotBehavior] = field(default_factory=list)


class AgentContext:
    """Handed to behavior callbacks: send/reply and self-kill."""

    def __init__(self, platform: "AgentPlatform", aid: AgentId):
        self.platform = platform
        self.aid = aid
        self.current_behavior: Optional[Behavior] = None

    @property
    def now(self) -> float:
        return self.platform.clock.now

    def send(self, receiver: AgentId, performative: Performative, content: str,
             conversation_id: str = "") -> int:
        return self.platform.send(ACLMessage(
            performative, self.aid, receiver, content, conversation_id))

    def reply(self, to: ACLMessage, performative: Performative, content: str) -> int:
        return self.platform.send(ACLMessage(
            performative, self.aid, to.sender, content, to.conversation_id))

    def add_behavior(self, behavior: Behavior) -> None:
        self.platform.add_behavior(self.aid, behavior)


class AgentPlatform:
    def __init__(self, name: str = "adaptalearn",
                 clock: SimulatedClock | WallClock | None = None):
        self.name = name
        self.clock = clock if clock is not None else SimulatedClock()
        self._lock = threading.RLock()
        self._mail_ready = threading.Condition(self._lock)
        self._agents: dict[str, _Agent] = {}
        self._contexts: dict[str, AgentContext] = {}
        self._spawn_counter = itertools.count()
        self._seq_counter = itertools.count(1)
        self._trace: list[ACLMessage] = []
        self.ams_id = AgentId(AMS_NAME, name)
        self.gateway_id = AgentId(GATEWAY_NAME, name)

    # -- registry ----------------------------------------------------------

    def spawn(self, local_name: str, behaviors: Iterable[Behavior] = ()) -> AgentId:
        with self._lock:
            if local_name in self._agents:
                raise DuplicateAgentNameError(
                    f"agent name {local_name!r} already registered")
            if local_name in (AMS_NAME, GATEWAY_NAME):
                raise DuplicateAgentNameError(
                    f"agent name {local_name!r} is reserved")
            aid = AgentId(local_name, self.name)
            agent = _Agent(aid, next(self._spawn_counter))
            self._agents[local_name] = agent
            self._contexts[local_name] = AgentContext(self, aid)
            for behavior in behaviors:
                self._register_behavior(agent, behavior)
            return aid

    def is_registered(self, aid: AgentId) -> bool:
        with self._lock:
            return aid.platform == self.name and aid.local_name in self._agents

    def agents(self) -> list[AgentId]:
        """Registry listing in spawn order."""
        with self._lock:
            return [a.aid for a in
                    sorted(self._agents.values(), key=lambda a: a.spawn_index)]

    def add_behavior(self, aid: AgentId, behavior: Behavior) -> None:
        with self._lock:
            agent = self._require_agent(aid)
            self._register_behavior(agent, behavior)

    def mailbox_size(self, aid: AgentId) -> int:
        with self._lock:
            return len(self._require_agent(aid).mailbox)

    def _register_behavior(self, agent: _Agent, behavior: Behavior) -> None:
        if isinstance(behavior, TickerBehavior):
            behavior.next_deadline = self.clock.now + behavior.period
        agent.behaviors.append(behavior)
        if isinstance(behavior, OneShotBehavior):
            agent.pending_oneshots.append(behavior)

    def _require_agent(self, aid: AgentId) -> _Agent:
        if aid.platform != self.name or aid.local_name not in self._agents:
            raise UnknownReceiverError(f"no agent {aid.guid!r} on this platform")
        return self._agents[aid.local_name]

    # -- messaging ---------------------------------------------------------

    def send(self, msg: ACLMessage) -> int:
        """Route one message; returns its platform-wide sequence number.

        Unknown receivers never drop silently: the sender gets exactly one
        FAILURE from the AMS (or, for non-agent callers, an exception).
        """
        with self._lock:
            seq = next(self._seq_counter)
            msg = replace(msg, sequence_no=seq)
            receiver = self._agents.get(msg.receiver.local_name)
            if receiver is None or msg.receiver.platform != self.name:
                if msg.sender.local_name in self._agents:
                    self._deliver(ACLMessage(
                        Performative.FAILURE, self.ams_id, msg.sender,
                        f"undeliverable to={msg.receiver.guid} original-seq={seq}",
                        msg.conversation_id, next(self._seq_counter)))
                    return seq
                raise UnknownReceiverError(
                    f"no agent {msg.receiver.guid!r} on this platform")
            self._deliver(msg)
            return seq

    def _deliver(self, msg: ACLMessage) -> None:
        self._agents[msg.receiver.local_name].mailbox.append(msg)
        self._trace.append(msg)
        self._mail_ready.notify_all()

    def gateway_send(self, receiver: AgentId, content: str,
                     conversation_id: str = "") -> int:
        """Inject an INFORM from the synthetic gateway identity."""
        with self._lock:
            self._require_agent(receiver)
            return self.send(ACLMessage(
                Performative.INFORM, self.gateway_id, receiver,
                content, conversation_id))

    def receive(self, aid: AgentId, blocking: bool = False,
                timeout: float | None = None) -> ACLMessage | None:
        with self._lock:
            agent = self._require_agent(aid)
            if not agent.mailbox and blocking:
                if self.clock.simulated:
                    raise PlatformError(
                        "blocking receive would deadlock under a simulated clock")
                self._mail_ready.wait_for(lambda: bool(agent.mailbox), timeout)
            return agent.mailbox.popleft() if agent.mailbox else None

    # -- sniffer -----------------------------------------------------------

    def sniffer_trace(self) -> tuple[ACLMessage, ...]:
        """Immutable snapshot of every delivered message, in sequence order."""
        with self._lock:
            return tuple(self._trace)

    def export_trace(self) -> str:
        return "".join(m.trace_line() + "\n" for m in self.sniffer_trace())

    # -- scheduling --------------------------------------------------------

    def advance_clock(self, delta: float) -> int:
        """Advance the simulated clock, firing due tickers in deadline order.

        Ties break by (spawn order, behavior registration order).  Messages
        sent by ticker callbacks stay queued until run_until_quiet.
        """
        if not self.clock.simulated:
            raise PlatformError("advance_clock requires a simulated clock")
        if delta < 0:
            raise PlatformError("cannot advance by a negative delta")
        with self._lock:
            target = self.clock.now + delta
            fired = 0
            while True:
                due = self._next_due_ticker(target)
                if due is None:
                    break
                agent, ticker = due
                self.clock.advance_to(ticker.next_deadline)
                ticker.next_deadline += ticker.period
                self._invoke(agent, ticker, lambda ctx: ticker.fn(ctx))
                fired += 1
            self.clock.advance_to(target)
            return fired

    def pump(self) -> int:
        """Wall-clock counterpart: fire every ticker due as of now."""
        with self._lock:
            now = self.clock.now
            fired = 0
            while True:
                due = self._next_due_ticker(now)
                if due is None:
                    break
                agent, ticker = due
                ticker.next_deadline += ticker.period
                self._invoke(agent, ticker, lambda ctx: ticker.fn(ctx))
                fired += 1
            return fired

    def _next_due_ticker(self, limit: float) -> tuple[_Agent, TickerBehavior] | None:
        best: tuple[float, int, int, _Agent, TickerBehavior] | None = None
        for agent in self._agents.values():
            for b_index, behavior in enumerate(agent.behaviors):
                if (isinstance(behavior, TickerBehavior) and behavior.alive
                        and behavior.next_deadline <= limit):
                    key = (behavior.next_deadline, agent.spawn_index, b_index)
                    if best is None or key < best[:3]:
                        best = (*key, agent, behavior)
        return (best[3], best[4]) if best else None

    def run_until_quiet(self, max_steps: int = 10_000) -> int:
        """Dispatch queued messages and pending one-shots to quiescence.

        An agent is runnable when it has pending one-shots, or mail plus at
        least one live cyclic behavior.  Agents are visited in spawn order;
        one visit consumes one message (handed to every live cyclic behavior
        in registration order).  Returns the number of activations.
        """
        with self._lock:
            steps = 0
            progress = True
            while progress:
                progress = False
                for agent in sorted(self._agents.values(), key=lambda a: a.spawn_index):
                    while agent.pending_oneshots:
                        behavior = agent.pending_oneshots.pop(0)
                        if behavior.alive:
                            self._invoke(agent, behavior, behavior.fn)
                            behavior.kill()
                            steps = self._bump(steps, max_steps)
                            progress = True
                    while agent.mailbox and self._live_cyclics(agent):
                        msg = agent.mailbox.popleft()
                        for behavior in self._live_cyclics(agent):
                            if behavior.alive:  # an earlier handler may kill it
                                self._invoke(agent, behavior,
                                             lambda ctx, b=behavior: b.fn(ctx, msg))
                        steps = self._bump(steps, max_steps)
                        progress = True
            return steps

    @staticmethod
    def _bump(steps: int, max_steps: int) -> int:
        steps += 1
        if steps > max_steps:
            raise PlatformError(f"platform did not quiesce within {max_steps} steps")
        return steps

    def _live_cyclics(self, agent: _Agent) -> list[CyclicBehavior]:
        return [b for b in agent.behaviors
                if isinstance(b, CyclicBehavior) and b.alive]

    def _invoke(self, agent: _Agent, behavior: Behavior,
                call: Callable[[AgentContext], None]) -> None:
        ctx = self._contexts[agent.aid.local_name]
        ctx.current_behavior = behavior
        try:
            call(ctx)
        except Exception:
            logger.exception("behavior %s of %s raised", behavior.name, agent.aid.guid)
        finally:
            ctx.current_behavior = None
