"""HTTP service layer."""

from .accounts import AccountStore, Session, SessionStore, UserAccount
from .app import Engine, create_app
from .eventlog import EventLog, format_event_line, format_timestamp
from .survey import (
    EVALUATION_DIMENSIONS,
    SurveyStore,
    SurveyValidationError,
    validate_scores,
)

__all__ = [
    "AccountStore", "EVALUATION_DIMENSIONS", "Engine", "EventLog", "Session",
    "SessionStore", "SurveyStore", "SurveyValidationError", "UserAccount",
    "create_app", "format_event_line", "format_timestamp", "validate_scores",
]
