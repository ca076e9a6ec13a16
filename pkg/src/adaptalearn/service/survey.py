"""Evaluation-survey intake and per-dimension averages.

The 15 questions map onto five evaluation dimensions, three questions each:
Q1-Q3 Learner, Q4-Q6 Instructor, Q7-Q9 Course, Q10-Q12 Design,
Q13-Q15 Technology.  Every score is an integer from 1 to 5.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path

SURVEY_QUESTION_COUNT = 15
SCORE_RANGE = (1, 5)

EVALUATION_DIMENSIONS = ("Learner", "Instructor", "Course", "Design", "Technology")
# question index (0-based) -> dimension: three consecutive questions each
_QUESTION_BLOCKS = {
    dim: range(i * 3, i * 3 + 3) for i, dim in enumerate(EVALUATION_DIMENSIONS)
}


class SurveyValidationError(ValueError):
    pass


def validate_scores(scores: list[int]) -> list[int]:
    if len(scores) != SURVEY_QUESTION_COUNT:
        raise SurveyValidationError(
            f"survey needs exactly {SURVEY_QUESTION_COUNT} scores, got {len(scores)}")
    low, high = SCORE_RANGE
    for i, score in enumerate(scores):
        if not isinstance(score, int) or isinstance(score, bool) or not low <= score <= high:
            raise SurveyValidationError(
                f"score Q{i + 1} must be an integer in [{low}, {high}], got {score!r}")
    return scores


class SurveyStore:
    """JSONL-backed store of survey responses."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._responses: list[list[int]] = []
        if self.path.exists():
            for line in self.path.read_text(encoding="utf-8").splitlines():
                if line:
                    record = json.loads(line)
                    self._responses.append(validate_scores(record["scores"]))
        else:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self.path.touch()

    def submit(self, respondent_id: str, scores: list[int]) -> int:
        scores = validate_scores(scores)
        with self._lock:
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(
                    {"respondent_id": respondent_id, "scores": scores}) + "\n")
            self._responses.append(scores)
            return len(self._responses)

    def summary(self) -> dict[str, float | None]:
        """Arithmetic mean per evaluation dimension; None marks no data."""
        with self._lock:
            responses = list(self._responses)
        out: dict[str, float | None] = {}
        for dim in EVALUATION_DIMENSIONS:
            values = [r[q] for r in responses for q in _QUESTION_BLOCKS[dim]]
            out[dim] = (sum(values) / len(values)) if values else None
        return out

    def count(self) -> int:
        with self._lock:
            return len(self._responses)
