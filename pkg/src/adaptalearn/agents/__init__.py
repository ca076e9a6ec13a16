"""FIPA-lite agent runtime and the adaptation agents."""

from .adaptation import (
    DEFAULT_MONITOR_PERIOD,
    DimChangeNotice,
    MonitorAgent,
    NoticeFormatError,
    UPDATE_AGENT_NAME,
    parse_notice,
    render_confirm,
    spawn_update_agent,
)
from .platform import (
    ACLMessage,
    AgentContext,
    AgentId,
    AgentPlatform,
    Behavior,
    CyclicBehavior,
    DuplicateAgentNameError,
    OneShotBehavior,
    Performative,
    PlatformError,
    SimulatedClock,
    TickerBehavior,
    UnknownReceiverError,
    WallClock,
)

__all__ = [
    "ACLMessage", "AgentContext", "AgentId", "AgentPlatform", "Behavior",
    "CyclicBehavior", "DEFAULT_MONITOR_PERIOD", "DimChangeNotice",
    "DuplicateAgentNameError", "MonitorAgent", "NoticeFormatError",
    "OneShotBehavior", "Performative", "PlatformError", "SimulatedClock",
    "TickerBehavior", "UPDATE_AGENT_NAME", "UnknownReceiverError",
    "WallClock", "parse_notice", "render_confirm", "spawn_update_agent",
]
