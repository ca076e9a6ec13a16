"""Triple-graph data model for the ontology store.

A graph is a prefix table plus a set of (subject, predicate, object)
triples.  Graphs are value objects: every mutation helper returns a new
graph, so snapshots handed to readers are safe to share across threads.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Union

RDF_IRI = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_IRI = "http://www.w3.org/2000/01/rdf-schema#"
XSD_IRI = "http://www.w3.org/2001/XMLSchema#"
OWL_IRI = "http://www.w3.org/2002/07/owl#"

LITERAL_DATATYPES = ("integer", "string", "boolean", "anyURI")


class GraphError(ValueError):
    """Base class for graph construction/consistency errors."""


class UndeclaredPrefixError(GraphError):
    def __init__(self, prefix: str, line: int | None = None, column: int | None = None):
        self.prefix = prefix
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"undeclared prefix {prefix + ':'!r}{where}")


@dataclass(frozen=True, order=True)
class Name:
    """A prefixed name; expands to the prefix IRI plus the local part."""

    prefix: str
    local: str

    def __post_init__(self) -> None:
        if not self.local:
            raise GraphError("name local part must be non-empty")

    def __str__(self) -> str:
        return f"{self.prefix}:{self.local}"

    def expand(self, prefixes: dict[str, str]) -> str:
        try:
            return prefixes[self.prefix] + self.local
        except KeyError:
            raise UndeclaredPrefixError(self.prefix) from None


@dataclass(frozen=True)
class Literal:
    """A typed literal value.

    ``datatype`` is logical (one of integer/string/boolean/anyURI); the
    lexical form is kept canonical so literal equality is value equality.
    """

    lexical: str
    datatype: str = "string"

    def __post_init__(self) -> None:
        if self.datatype not in LITERAL_DATATYPES:
            raise GraphError(f"unsupported literal datatype {self.datatype!r}")
        if self.datatype == "integer":
            try:
                canonical = str(int(self.lexical))
            except ValueError:
                raise GraphError(f"bad integer literal {self.lexical!r}") from None
            object.__setattr__(self, "lexical", canonical)
        elif self.datatype == "boolean":
            if self.lexical not in ("true", "false"):
                raise GraphError(f"bad boolean literal {self.lexical!r}")
        elif self.datatype == "anyURI":
            if not self.lexical:
                raise GraphError("anyURI literal must be non-empty")

    def as_int(self) -> int:
        if self.datatype != "integer":
            raise GraphError(f"literal {self.lexical!r} is not an integer")
        return int(self.lexical)

    def sort_key(self) -> tuple:
        return (1, self.datatype, self.lexical)


NodeValue = Union[Name, Literal]


def node_sort_key(value: NodeValue) -> tuple:
    if isinstance(value, Name):
        return (0, value.prefix, value.local)
    return value.sort_key()


@dataclass(frozen=True)
class Triple:
    subject: Name
    predicate: Name
    object: NodeValue

    def sort_key(self) -> tuple:
        return (
            node_sort_key(self.subject),
            node_sort_key(self.predicate),
            node_sort_key(self.object),
        )


def int_literal(value: int) -> Literal:
    return Literal(str(value), "integer")


def _names_of(triple: Triple) -> Iterable[Name]:
    yield triple.subject
    yield triple.predicate
    if isinstance(triple.object, Name):
        yield triple.object


@dataclass
class TripleGraph:
    """Prefix declarations plus a duplicate-free triple set.

    Invariants enforced at construction: every name's prefix is declared,
    and if any non-string literal is present some prefix must be bound to
    the XSD namespace (otherwise the graph could not be serialized).
    Treat instances as immutable; use ``with_triples``/``without_triples``
    to derive new graphs.
    """

    prefixes: dict[str, str] = field(default_factory=dict)
    triples: frozenset[Triple] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        self.triples = frozenset(self.triples)
        needs_xsd = False
        for triple in self.triples:
            for name in _names_of(triple):
                if name.prefix not in self.prefixes:
                    raise UndeclaredPrefixError(name.prefix)
            if isinstance(triple.object, Literal) and triple.object.datatype != "string":
                needs_xsd = True
        if needs_xsd and XSD_IRI not in self.prefixes.values():
            raise GraphError(
                "graph holds typed literals but no prefix is bound to the XSD namespace"
            )

    def with_triples(self, new: Iterable[Triple]) -> "TripleGraph":
        return TripleGraph(dict(self.prefixes), self.triples | frozenset(new))

    def without_triples(self, old: Iterable[Triple]) -> "TripleGraph":
        return TripleGraph(dict(self.prefixes), self.triples - frozenset(old))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TripleGraph):
            return NotImplemented
        return self.prefixes == other.prefixes and self.triples == other.triples

    # -- lookup helpers (linear scans; graphs here are small) --------------

    def objects(self, subject: Name, predicate: Name) -> list[NodeValue]:
        return sorted(
            (t.object for t in self.triples
             if t.subject == subject and t.predicate == predicate),
            key=node_sort_key,
        )

    def subjects(self, predicate: Name, obj: NodeValue) -> list[Name]:
        return sorted(
            {t.subject for t in self.triples
             if t.predicate == predicate and t.object == obj},
            key=node_sort_key,
        )

    def has(self, subject: Name, predicate: Name, obj: NodeValue) -> bool:
        return Triple(subject, predicate, obj) in self.triples

    def sorted_triples(self) -> list[Triple]:
        return sorted(self.triples, key=Triple.sort_key)

    def canonical_hash(self) -> str:
        from .turtle import serialize

        return hashlib.sha256(serialize(self).encode("utf-8")).hexdigest()


# Well-known vocabulary handles.  The concrete prefix label a graph binds to
# these namespaces may vary; resolve_well_known maps labels by IRI.

def well_known_name(graph_prefixes: dict[str, str], namespace_iri: str, local: str) -> Name:
    """Name ``local`` under whichever declared prefix is bound to the IRI.

    When several prefixes share the namespace the lexicographically first
    label wins, keeping serialization canonical.
    """
    labels = sorted(p for p, iri in graph_prefixes.items() if iri == namespace_iri)
    if not labels:
        raise GraphError(f"no prefix bound to namespace {namespace_iri!r}")
    return Name(labels[0], local)


def rdf_type(prefixes: dict[str, str]) -> Name:
    return well_known_name(prefixes, RDF_IRI, "type")


def rdfs_subclass_of(prefixes: dict[str, str]) -> Name:
    return well_known_name(prefixes, RDFS_IRI, "subClassOf")
