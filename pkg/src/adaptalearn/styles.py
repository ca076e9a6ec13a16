"""Felder-Silverman learning-style engine.

Pure value-level functions: questionnaire scoring, behavior-event deltas,
the threshold/residual settlement rule, and presentation-plan composition.
Nothing here touches storage, agents, or the network, so every function is
safe to call from any number of concurrent callers.

Conventions:
    A dimension score is an odd integer in [-11, 11].  The sign selects the
    pole: positive means Active / Sensing / Visual / Sequential, negative
    means Reflective / Intuitive / Verbal / Global.  Each dimension carries
    a change accumulator that sums +/-2 behavior deltas; once its magnitude
    reaches SETTLE_THRESHOLD the score moves by SCORE_STEP in the
    accumulator's direction and SETTLE_THRESHOLD units are consumed, repeated
    until the magnitude drops below the threshold.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Mapping, Sequence

SCORE_MIN = -11
SCORE_MAX = 11
SETTLE_THRESHOLD = 5
SCORE_STEP = 2
EVENT_DELTA = 2
ILS_QUESTION_COUNT = 44


class Dimension(Enum):
    """The four learning-style axes, in canonical serialization order."""

    AR = "AR"  # Active-Reflective
    SI = "SI"  # Sensing-Intuitive
    VV = "VV"  # Visual-Verbal
    SG = "SG"  # Sequential-Global


DIMENSIONS: tuple[Dimension, ...] = (
    Dimension.AR,
    Dimension.SI,
    Dimension.VV,
    Dimension.SG,
)


class BehaviorEventKind(Enum):
    """Learner clicks that signal a drift away from the presented pole."""

    HIDE_CHALLENGES = "HideChallenges"
    SHOW_ALL_CHALLENGES = "ShowAllChallenges"
    HIDE_QUIZZES = "HideQuizzes"
    SHOW_ALL_QUIZZES = "ShowAllQuizzes"
    TEXT_EXPLANATION = "TextExplanation"
    WATCH_VIDEO = "WatchVideo"
    GALLERY_VIEW = "GalleryView"
    CONTENT_VIEW = "ContentView"


# Each event kind maps to exactly one dimension and one signed delta.
# Clicking toward the positive pole (Active/Sensing/Visual/Sequential)
# yields +2; toward the negative pole yields -2.
_EVENT_TABLE: dict[BehaviorEventKind, tuple[Dimension, int]] = {
    BehaviorEventKind.HIDE_CHALLENGES: (Dimension.AR, -EVENT_DELTA),
    BehaviorEventKind.SHOW_ALL_CHALLENGES: (Dimension.AR, +EVENT_DELTA),
    BehaviorEventKind.HIDE_QUIZZES: (Dimension.SI, -EVENT_DELTA),
    BehaviorEventKind.SHOW_ALL_QUIZZES: (Dimension.SI, +EVENT_DELTA),
    BehaviorEventKind.TEXT_EXPLANATION: (Dimension.VV, -EVENT_DELTA),
    BehaviorEventKind.WATCH_VIDEO: (Dimension.VV, +EVENT_DELTA),
    BehaviorEventKind.GALLERY_VIEW: (Dimension.SG, -EVENT_DELTA),
    BehaviorEventKind.CONTENT_VIEW: (Dimension.SG, +EVENT_DELTA),
}


class StyleValidationError(ValueError):
    """Raised when a sheet, score, or profile violates its invariants."""


def validate_score(value: int) -> int:
    """Check a single dimension score: odd integer in [-11, 11]."""
    if not isinstance(value, int) or isinstance(value, bool):
        raise StyleValidationError(f"score must be an integer, got {value!r}")
    if value % 2 == 0:
        raise StyleValidationError(f"score must be odd, got {value}")
    if not SCORE_MIN <= value <= SCORE_MAX:
        raise StyleValidationError(
            f"score must be in [{SCORE_MIN}, {SCORE_MAX}], got {value}"
        )
    return value


@dataclass(frozen=True)
class LearnerStyleProfile:
    """One learner's four dimension scores plus four change accumulators."""

    learner_id: str
    scores: Mapping[Dimension, int]
    accumulators: Mapping[Dimension, int]

    def __post_init__(self) -> None:
        for dim in DIMENSIONS:
            if dim not in self.scores:
                raise StyleValidationError(f"missing score for {dim.value}")
            if dim not in self.accumulators:
                raise StyleValidationError(f"missing accumulator for {dim.value}")
            validate_score(self.scores[dim])
        # Freeze the maps so profiles can be shared across threads.
        object.__setattr__(self, "scores", dict(self.scores))
        object.__setattr__(self, "accumulators", dict(self.accumulators))

    @classmethod
    def fresh(cls, learner_id: str, scores: Mapping[Dimension, int]) -> "LearnerStyleProfile":
        """Profile with the given scores and all accumulators at zero."""
        return cls(learner_id, dict(scores), {d: 0 for d in DIMENSIONS})

    def score_vector(self) -> tuple[int, int, int, int]:
        return tuple(self.scores[d] for d in DIMENSIONS)  # type: ignore[return-value]

    def accumulator_vector(self) -> tuple[int, int, int, int]:
        return tuple(self.accumulators[d] for d in DIMENSIONS)  # type: ignore[return-value]


@dataclass(frozen=True)
class DimensionChange:
    """Record of one dimension's settlement: old/new score and consumed mass.

    ``consumed`` is the signed accumulator mass removed (before - after); its
    magnitude is always a multiple of the settle threshold.
    """

    dimension: Dimension
    old_score: int
    new_score: int
    consumed: int


@dataclass(frozen=True)
class PresentationPlan:
    """Per-learner page composition derived from score signs alone."""

    show_challenges: bool
    show_quizzes: bool
    primary_medium: str  # "video" | "text"
    layout: str  # "content" | "gallery"
    offered_toggles: frozenset[BehaviorEventKind]


def question_dimension(index: int) -> Dimension:
    """Dimension owning 0-based questionnaire question ``index``.

    Questions cycle AR, SI, VV, SG by index mod 4, giving each dimension
    exactly 11 of the 44 questions.
    """
    return DIMENSIONS[index % 4]


def score_ils(answers: Sequence[str]) -> dict[Dimension, int]:
    """Score a 44-answer questionnaire sheet.

    Each answer is "A" or "B".  Per dimension, the score is the number of A
    answers minus the number of B answers over that dimension's 11 questions,
    which is always odd and within [-11, 11].

    Args:
        answers: exactly 44 entries, each "A" or "B" (case-sensitive).

    Returns:
        Mapping from each dimension to its score.

    Raises:
        StyleValidationError: wrong sheet length or an entry that is not
            "A"/"B".
    """
    if len(answers) != ILS_QUESTION_COUNT:
        raise StyleValidationError(
            f"answer sheet must have exactly {ILS_QUESTION_COUNT} entries, "
            f"got {len(answers)}"
        )
    scores = {d: 0 for d in DIMENSIONS}
    for i, answer in enumerate(answers):
        if answer == "A":
            scores[question_dimension(i)] += 1
        elif answer == "B":
            scores[question_dimension(i)] -= 1
        else:
            raise StyleValidationError(
                f"answer {i} must be 'A' or 'B', got {answer!r}"
            )
    return scores


def event_delta(kind: BehaviorEventKind) -> tuple[Dimension, int]:
    """The (dimension, signed delta) a behavior event contributes.

    Total function over the 8 event kinds; e.g. a gallery-view click leans
    Global, so it yields (SG, -2).
    """
    return _EVENT_TABLE[kind]


def apply_event(
    profile: LearnerStyleProfile, kind: BehaviorEventKind
) -> LearnerStyleProfile:
    """Fold one behavior event into the profile's accumulators.

    Scores are untouched; only the event's dimension accumulator moves.
    """
    dim, delta = event_delta(kind)
    accumulators = dict(profile.accumulators)
    accumulators[dim] += delta
    return replace(profile, accumulators=accumulators)


def settle_dimension(score: int, accumulator: int) -> tuple[int, int, int]:
    """Settle a single (score, accumulator) pair.

    While the accumulator magnitude is at least the threshold, the score
    steps by 2 toward the accumulator's sign (clamped to [-11, 11]; the
    accumulator is consumed even when the score saturates at a bound) and
    5 units of accumulator are consumed.

    Returns:
        (new_score, new_accumulator, triggers) where ``triggers`` counts the
        threshold crossings applied.
    """
    triggers = 0
    while abs(accumulator) >= SETTLE_THRESHOLD:
        sign = 1 if accumulator > 0 else -1
        score = max(SCORE_MIN, min(SCORE_MAX, score + sign * SCORE_STEP))
        accumulator -= sign * SETTLE_THRESHOLD
        triggers += 1
    return score, accumulator, triggers


def settle(
    profile: LearnerStyleProfile,
) -> tuple[LearnerStyleProfile, list[DimensionChange]]:
    """Convert accumulated behavior mass into score moves, per dimension.

    Dimensions settle independently; the returned changes list one entry per
    dimension that crossed the threshold at least once, in canonical
    dimension order.  Settling is idempotent: afterwards every accumulator
    magnitude is below the threshold.
    """
    scores = dict(profile.scores)
    accumulators = dict(profile.accumulators)
    changes: list[DimensionChange] = []
    for dim in DIMENSIONS:
        old_score = scores[dim]
        old_acc = accumulators[dim]
        new_score, new_acc, triggers = settle_dimension(old_score, old_acc)
        if triggers:
            scores[dim] = new_score
            accumulators[dim] = new_acc
            changes.append(
                DimensionChange(
                    dimension=dim,
                    old_score=old_score,
                    new_score=new_score,
                    consumed=old_acc - new_acc,
                )
            )
    return replace(profile, scores=scores, accumulators=accumulators), changes


# Toggle offered per dimension, keyed by the sign of the current score.
# The offered toggle always points away from the learner's current pole.
_OFFER_TABLE: dict[Dimension, dict[int, BehaviorEventKind]] = {
    Dimension.AR: {
        +1: BehaviorEventKind.HIDE_CHALLENGES,
        -1: BehaviorEventKind.SHOW_ALL_CHALLENGES,
    },
    Dimension.SI: {
        +1: BehaviorEventKind.HIDE_QUIZZES,
        -1: BehaviorEventKind.SHOW_ALL_QUIZZES,
    },
    Dimension.VV: {
        +1: BehaviorEventKind.TEXT_EXPLANATION,
        -1: BehaviorEventKind.WATCH_VIDEO,
    },
    Dimension.SG: {
        +1: BehaviorEventKind.GALLERY_VIEW,
        -1: BehaviorEventKind.CONTENT_VIEW,
    },
}


def compose_page(profile: LearnerStyleProfile) -> PresentationPlan:
    """Compose the page plan from the profile's score signs.

    Scores are odd, hence never zero, so every dimension has a definite
    pole:
        AR > 0 shows challenges, SI > 0 shows quizzes, VV > 0 selects video
        over text, SG > 0 selects the content layout over the gallery.
    Each dimension contributes the one toggle pointing away from the current
    pole (an active learner is offered HideChallenges, never
    ShowAllChallenges).
    """
    signs = {d: 1 if profile.scores[d] > 0 else -1 for d in DIMENSIONS}
    return PresentationPlan(
        show_challenges=signs[Dimension.AR] > 0,
        show_quizzes=signs[Dimension.SI] > 0,
        primary_medium="video" if signs[Dimension.VV] > 0 else "text",
        layout="content" if signs[Dimension.SG] > 0 else "gallery",
        offered_toggles=frozenset(
            _OFFER_TABLE[d][signs[d]] for d in DIMENSIONS
        ),
    )


def fold_events(
    profile: LearnerStyleProfile,
    events: Iterable[BehaviorEventKind],
) -> LearnerStyleProfile:
    """Apply a sequence of behavior events (no settling)."""
    for kind in events:
        profile = apply_event(profile, kind)
    return profile
