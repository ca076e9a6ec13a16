"""Fixed vocabularies for the learner and course ontologies.

Both ontologies share one instance namespace bound to the default (empty)
prefix, alongside the standard rdf/rdfs/xsd bindings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..styles import DIMENSIONS, Dimension
from .model import RDF_IRI, RDFS_IRI, XSD_IRI, Name

INSTANCE_IRI = "http://adaptalearn.dev/onto#"

STANDARD_PREFIXES: dict[str, str] = {
    "": INSTANCE_IRI,
    "rdf": RDF_IRI,
    "rdfs": RDFS_IRI,
    "xsd": XSD_IRI,
}

RESOURCE_KINDS = ("video", "text", "quiz", "challenge")


def n(local: str) -> Name:
    """Instance-namespace name under the default prefix."""
    return Name("", local)


@dataclass(frozen=True)
class UserOntologySchema:
    learner_class: Name = n("Learner")
    has_id: Name = n("hasId")
    has_name: Name = n("hasName")
    takes_course: Name = n("takesCourse")
    dim_props: dict[Dimension, Name] = field(
        default_factory=lambda: {d: n(f"dim{d.value}") for d in DIMENSIONS}
    )
    change_props: dict[Dimension, Name] = field(
        default_factory=lambda: {d: n(f"change{d.value}") for d in DIMENSIONS}
    )

    def profile_props(self) -> list[Name]:
        return [self.dim_props[d] for d in DIMENSIONS] + [
            self.change_props[d] for d in DIMENSIONS
        ]


@dataclass(frozen=True)
class CourseOntologySchema:
    field_class: Name = n("Field")
    course_class: Name = n("Course")
    module_class: Name = n("Module")
    resource_class: Name = n("Resource")
    has_course: Name = n("hasCourse")
    has_module: Name = n("hasModule")
    has_resource: Name = n("hasResource")
    resource_url: Name = n("resourceURL")
    resource_kind: Name = n("resourceKind")
    order_index: Name = n("orderIndex")


USER_SCHEMA = UserOntologySchema()
COURSE_SCHEMA = CourseOntologySchema()
