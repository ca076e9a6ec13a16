"""Conjunctive class-expression queries with subclass closure.

Supported expression grammar (Manchester-style fragment):

    expr := atom ("and" atom)*
    atom := NAME                      class membership
          | NAME "value" NAME         property has the given individual
          | NAME "some" NAME          property reaches some member of class

Class membership follows rdfs:subClassOf transitively.  Name resolution is
closed-world against the queried graph: a class name must be mentioned by a
type assertion, a subclass axiom, or an explicit class declaration; a
property name must occur as a predicate or be declared a property.  A graph
with no triples answers every query with the empty set (there is nothing to
resolve names against, and no individual can match).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Union

from .model import (
    GraphError,
    Name,
    OWL_IRI,
    RDF_IRI,
    RDFS_IRI,
    Triple,
    TripleGraph,
    node_sort_key,
)

_CLASS_DECL_IRIS = {RDFS_IRI + "Class", OWL_IRI + "Class"}
_PROPERTY_DECL_IRIS = {
    RDF_IRI + "Property",
    OWL_IRI + "ObjectProperty",
    OWL_IRI + "DatatypeProperty",
}


class QuerySyntaxError(GraphError):
    """Malformed query text."""


class UnknownNameError(GraphError):
    """Query mentions class/property names the graph does not know."""

    def __init__(self, names: list[Name]):
        self.names = names
        listing = ", ".join(str(n) for n in names)
        super().__init__(f"unknown name(s) in query: {listing}")


@dataclass(frozen=True)
class ClassAtom:
    cls: Name


@dataclass(frozen=True)
class ValueRestriction:
    prop: Name
    individual: Name


@dataclass(frozen=True)
class SomeRestriction:
    prop: Name
    cls: Name


Atom = Union[ClassAtom, ValueRestriction, SomeRestriction]
QueryExpr = tuple[Atom, ...]


def parse_query(text: str, prefixes: dict[str, str]) -> QueryExpr:
    """Parse query text, resolving names against declared prefixes.

    A bare token such as ``Learner`` is a default-prefix name; prefixed
    tokens (``:CS101``, ``rdf:type``) resolve via their label.
    """
    tokens = text.split()
    if not tokens:
        raise QuerySyntaxError("query must have at least one atom")

    def to_name(token: str) -> Name:
        if token in ("and", "value", "some"):
            raise QuerySyntaxError(f"expected a name, got keyword {token!r}")
        prefix, _, local = token.rpartition(":")
        if not local:
            raise QuerySyntaxError(f"bad name token {token!r}")
        if prefix not in prefixes:
            raise UndeclaredQueryPrefix(prefix, token)
        return Name(prefix, local)

    atoms: list[Atom] = []
    pos = 0
    while True:
        head = to_name(tokens[pos])
        pos += 1
        if pos < len(tokens) and tokens[pos] == "value":
            if pos + 1 >= len(tokens):
                raise QuerySyntaxError("'value' needs an individual name")
            atoms.append(ValueRestriction(head, to_name(tokens[pos + 1])))
            pos += 2
        elif pos < len(tokens) and tokens[pos] == "some":
            if pos + 1 >= len(tokens):
                raise QuerySyntaxError("'some' needs a class name")
            atoms.append(SomeRestriction(head, to_name(tokens[pos + 1])))
            pos += 2
        else:
            atoms.append(ClassAtom(head))
        if pos == len(tokens):
            return tuple(atoms)
        if tokens[pos] != "and":
            raise QuerySyntaxError(f"expected 'and', got {tokens[pos]!r}")
        pos += 1
        if pos == len(tokens):
            raise QuerySyntaxError("dangling 'and' at end of query")


class UndeclaredQueryPrefix(GraphError):
    def __init__(self, prefix: str, token: str):
        self.prefix = prefix
        super().__init__(f"query token {token!r} uses undeclared prefix {prefix + ':'!r}")


class _GraphView:
    """Per-query indexes over a graph."""

    def __init__(self, graph: TripleGraph):
        self.type_name = _optional_well_known(graph, RDF_IRI, "type")
        self.subclass_name = _optional_well_known(graph, RDFS_IRI, "subClassOf")
        self.instances: dict[Name, set[Name]] = {}
        self.children: dict[Name, set[Name]] = {}
        self.by_predicate: dict[Name, list[Triple]] = {}
        self.predicates: set[Name] = set()
        self.declared_classes: set[Name] = set()
        self.declared_properties: set[Name] = set()
        prefixes = graph.prefixes
        for t in graph.triples:
            self.predicates.add(t.predicate)
            self.by_predicate.setdefault(t.predicate, []).append(t)
            if t.predicate == self.type_name and isinstance(t.object, Name):
                self.instances.setdefault(t.object, set()).add(t.subject)
                self.declared_classes.add(t.object)
                obj_iri = _safe_expand(t.object, prefixes)
                if obj_iri in _CLASS_DECL_IRIS:
                    self.declared_classes.add(t.subject)
                if obj_iri in _PROPERTY_DECL_IRIS:
                    self.declared_properties.add(t.subject)
            if t.predicate == self.subclass_name and isinstance(t.object, Name):
                self.children.setdefault(t.object, set()).add(t.subject)
                self.declared_classes.add(t.subject)
                self.declared_classes.add(t.object)

    def knows_class(self, name: Name) -> bool:
        return name in self.declared_classes

    def knows_property(self, name: Name) -> bool:
        return name in self.predicates or name in self.declared_properties

    def descendants(self, cls: Name) -> set[Name]:
        """The class plus everything below it, cycle-safe."""
        seen = {cls}
        frontier = deque([cls])
        while frontier:
            for child in self.children.get(frontier.popleft(), ()):
                if child not in seen:
                    seen.add(child)
                    frontier.append(child)
        return seen

    def members(self, cls: Name) -> set[Name]:
        out: set[Name] = set()
        for c in self.descendants(cls):
            out |= self.instances.get(c, set())
        return out


def _optional_well_known(graph: TripleGraph, iri: str, local: str) -> Name | None:
    labels = sorted(p for p, v in graph.prefixes.items() if v == iri)
    return Name(labels[0], local) if labels else None


def _safe_expand(name: Name, prefixes: dict[str, str]) -> str:
    try:
        return name.expand(prefixes)
    except GraphError:
        return ""


def query(graph: TripleGraph, expr: QueryExpr) -> set[Name]:
    """Individuals satisfying every atom of the conjunction.

    Raises UnknownNameError when the (non-empty) graph does not know a
    class or property the expression mentions.
    """
    if not expr:
        raise QuerySyntaxError("query must have at least one atom")
    if not graph.triples:
        return set()

    view = _GraphView(graph)
    unknown: list[Name] = []
    for atom in expr:
        if isinstance(atom, ClassAtom):
            if not view.knows_class(atom.cls):
                unknown.append(atom.cls)
        elif isinstance(atom, ValueRestriction):
            if not view.knows_property(atom.prop):
                unknown.append(atom.prop)
        else:
            if not view.knows_property(atom.prop):
                unknown.append(atom.prop)
            if not view.knows_class(atom.cls):
                unknown.append(atom.cls)
    if unknown:
        raise UnknownNameError(unknown)

    result: set[Name] | None = None
    for atom in expr:
        if isinstance(atom, ClassAtom):
            matched = view.members(atom.cls)
        elif isinstance(atom, ValueRestriction):
            matched = {
                t.subject
                for t in view.by_predicate.get(atom.prop, ())
                if t.object == atom.individual
            }
        else:
            targets = view.members(atom.cls)
            matched = {
                t.subject
                for t in view.by_predicate.get(atom.prop, ())
                if isinstance(t.object, Name) and t.object in targets
            }
        result = matched if result is None else (result & matched)
        if not result:
            return set()
    assert result is not None
    return result


def run_query(graph: TripleGraph, text: str) -> list[Name]:
    """Parse and evaluate, returning matches in canonical order."""
    expr = parse_query(text, graph.prefixes)
    return sorted(query(graph, expr), key=node_sort_key)
