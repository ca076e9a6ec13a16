"""Shipped ontology fixtures (clean per the validator's six rules)."""

from importlib import resources

from ..ontology import TripleGraph, parse


def _load(filename: str) -> str:
    return (resources.files(__package__) / filename).read_text(encoding="utf-8")


def user_fixture_text() -> str:
    return _load("user.owl.ttl")


def course_fixture_text() -> str:
    return _load("course.owl.ttl")


def user_fixture() -> TripleGraph:
    return parse(user_fixture_text())


def course_fixture() -> TripleGraph:
    return parse(course_fixture_text())
