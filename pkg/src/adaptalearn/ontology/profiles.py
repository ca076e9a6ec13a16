"""Learner-profile and course-content views over the triple graphs."""

from __future__ import annotations

from dataclasses import dataclass

from ..styles import DIMENSIONS, LearnerStyleProfile
from .model import (
    GraphError,
    Literal,
    Name,
    RDF_IRI,
    Triple,
    TripleGraph,
    int_literal,
    node_sort_key,
    well_known_name,
)
from .schema import COURSE_SCHEMA, USER_SCHEMA


class NotFoundError(LookupError):
    """The requested individual does not exist in the graph."""


class GraphDataError(GraphError):
    """The graph holds data the fixed schema cannot interpret."""


def find_learner(graph: TripleGraph, learner_id: str) -> Name:
    subjects = graph.subjects(USER_SCHEMA.has_id, Literal(learner_id))
    if not subjects:
        raise NotFoundError(f"no learner with id {learner_id!r}")
    return subjects[0]


def learner_exists(graph: TripleGraph, learner_id: str) -> bool:
    return bool(graph.subjects(USER_SCHEMA.has_id, Literal(learner_id)))


def _single_int(graph: TripleGraph, subject: Name, prop: Name) -> int:
    values = graph.objects(subject, prop)
    if len(values) != 1:
        raise GraphDataError(
            f"{subject} must have exactly one {prop}, found {len(values)}"
        )
    obj = values[0]
    if not isinstance(obj, Literal) or obj.datatype != "integer":
        raise GraphDataError(f"{subject} {prop} must be an integer literal")
    return obj.as_int()


def read_profile(graph: TripleGraph, learner_id: str) -> LearnerStyleProfile:
    """Assemble a LearnerStyleProfile from the learner's 8 data properties."""
    learner = find_learner(graph, learner_id)
    scores = {
        d: _single_int(graph, learner, USER_SCHEMA.dim_props[d]) for d in DIMENSIONS
    }
    accumulators = {
        d: _single_int(graph, learner, USER_SCHEMA.change_props[d])
        for d in DIMENSIONS
    }
    return LearnerStyleProfile(learner_id, scores, accumulators)


def write_profile(graph: TripleGraph, profile: LearnerStyleProfile) -> TripleGraph:
    """Replace the learner's 8 dim/change triples (creating the learner if new).

    For an existing learner the graph diff is exactly the 8 removed plus the
    8 added triples; a first write also asserts the rdf:type and hasId
    triples.
    """
    try:
        learner = find_learner(graph, profile.learner_id)
    except NotFoundError:
        learner = Name("", profile.learner_id)
        rdf_type = well_known_name(graph.prefixes, RDF_IRI, "type")
        graph = graph.with_triples([
            Triple(learner, rdf_type, USER_SCHEMA.learner_class),
            Triple(learner, USER_SCHEMA.has_id, Literal(profile.learner_id)),
        ])

    stale = [
        t for t in graph.triples
        if t.subject == learner and t.predicate in set(USER_SCHEMA.profile_props())
    ]
    fresh = [
        Triple(learner, USER_SCHEMA.dim_props[d], int_literal(profile.scores[d]))
        for d in DIMENSIONS
    ] + [
        Triple(learner, USER_SCHEMA.change_props[d], int_literal(profile.accumulators[d]))
        for d in DIMENSIONS
    ]
    return graph.without_triples(stale).with_triples(fresh)


def set_learner_name(graph: TripleGraph, learner_id: str, display_name: str) -> TripleGraph:
    learner = find_learner(graph, learner_id)
    stale = [t for t in graph.triples
             if t.subject == learner and t.predicate == USER_SCHEMA.has_name]
    return graph.without_triples(stale).with_triples(
        [Triple(learner, USER_SCHEMA.has_name, Literal(display_name))]
    )


@dataclass(frozen=True)
class ResourceEntry:
    name: Name
    url: str
    kind: str
    order_index: int


def _typed(graph: TripleGraph, cls: Name) -> list[Name]:
    rdf_type = well_known_name(graph.prefixes, RDF_IRI, "type")
    return graph.subjects(rdf_type, cls)


def list_modules(graph: TripleGraph) -> list[tuple[Name, Name | None]]:
    """All modules with their owning course (if asserted), in name order."""
    out = []
    for module in _typed(graph, COURSE_SCHEMA.module_class):
        courses = graph.subjects(COURSE_SCHEMA.has_module, module)
        out.append((module, courses[0] if courses else None))
    return sorted(out, key=lambda pair: node_sort_key(pair[0]))


def list_module_resources(graph: TripleGraph, module: Name) -> list[ResourceEntry]:
    """The module's resources sorted by orderIndex ascending."""
    rdf_type = well_known_name(graph.prefixes, RDF_IRI, "type")
    if not graph.has(module, rdf_type, COURSE_SCHEMA.module_class):
        raise NotFoundError(f"no module named {module}")
    entries = []
    for obj in graph.objects(module, COURSE_SCHEMA.has_resource):
        if not isinstance(obj, Name):
            raise GraphDataError(f"{module} hasResource object must be a name")
        url_values = graph.objects(obj, COURSE_SCHEMA.resource_url)
        kind_values = graph.objects(obj, COURSE_SCHEMA.resource_kind)
        if not url_values or not isinstance(url_values[0], Literal):
            raise GraphDataError(f"{obj} lacks a resourceURL")
        if not kind_values or not isinstance(kind_values[0], Literal):
            raise GraphDataError(f"{obj} lacks a resourceKind")
        entries.append(ResourceEntry(
            name=obj,
            url=url_values[0].lexical,
            kind=kind_values[0].lexical,
            order_index=_single_int(graph, obj, COURSE_SCHEMA.order_index),
        ))
    return sorted(entries, key=lambda e: (e.order_index, node_sort_key(e.name)))
