"""adaptalearn: ontology-driven adaptive e-learning engine.

Subpackages: ``styles`` (learning-style math), ``ontology`` (triple store,
Turtle subset, queries, validation), ``agents`` (FIPA-lite platform plus
the Monitor/Update adaptation loop), ``service`` (HTTP API), ``sim``
(deterministic replay harness).
"""

from .styles import (
    BehaviorEventKind,
    DIMENSIONS,
    Dimension,
    DimensionChange,
    LearnerStyleProfile,
    PresentationPlan,
    SETTLE_THRESHOLD,
    StyleValidationError,
    apply_event,
    compose_page,
    event_delta,
    fold_events,
    score_ils,
    settle,
)

__version__ = "0.1.0"

__all__ = [
    "BehaviorEventKind", "DIMENSIONS", "Dimension", "DimensionChange",
    "LearnerStyleProfile", "PresentationPlan", "SETTLE_THRESHOLD",
    "StyleValidationError", "apply_event", "compose_page", "event_delta",
    "fold_events", "score_ils", "settle", "__version__",
]
