"""Ontology knowledge store: triple model, Turtle subset, queries, rules."""

from .model import (
    GraphError,
    Literal,
    Name,
    NodeValue,
    Triple,
    TripleGraph,
    UndeclaredPrefixError,
    int_literal,
)
from .profiles import (
    GraphDataError,
    NotFoundError,
    ResourceEntry,
    find_learner,
    learner_exists,
    list_module_resources,
    list_modules,
    read_profile,
    set_learner_name,
    write_profile,
)
from .query import (
    ClassAtom,
    QueryExpr,
    QuerySyntaxError,
    SomeRestriction,
    UnknownNameError,
    ValueRestriction,
    parse_query,
    query,
    run_query,
)
from .schema import (
    COURSE_SCHEMA,
    INSTANCE_IRI,
    RESOURCE_KINDS,
    STANDARD_PREFIXES,
    USER_SCHEMA,
    n,
)
from .store import OntologyStore, empty_graph
from .turtle import TurtleSyntaxError, parse, serialize
from .validate import Finding, ValidationReport, validate

__all__ = [
    "COURSE_SCHEMA", "ClassAtom", "Finding", "GraphDataError", "GraphError",
    "INSTANCE_IRI", "Literal", "Name", "NodeValue", "NotFoundError",
    "OntologyStore", "QueryExpr", "QuerySyntaxError", "RESOURCE_KINDS",
    "ResourceEntry", "STANDARD_PREFIXES", "SomeRestriction", "Triple",
    "TripleGraph", "TurtleSyntaxError", "USER_SCHEMA", "UndeclaredPrefixError",
    "UnknownNameError", "ValidationReport", "ValueRestriction", "empty_graph",
    "find_learner", "int_literal", "learner_exists", "list_module_resources",
    "list_modules", "n", "parse", "parse_query", "query", "read_profile",
    "run_query", "serialize", "set_learner_name", "validate", "write_profile",
]
