"""DL-query-lite evaluator vs a brute-force per-individual oracle."""

from __future__ import annotations

import random

import pytest

from adaptalearn.fixtures import user_fixture
from adaptalearn.ontology import (
    ClassAtom,
    Name,
    QuerySyntaxError,
    SomeRestriction,
    Triple,
    TripleGraph,
    UnknownNameError,
    ValueRestriction,
    n,
    parse_query,
    query,
    run_query,
)
from adaptalearn.ontology.schema import STANDARD_PREFIXES

RDF_TYPE = Name("rdf", "type")
SUBCLASS = Name("rdfs", "subClassOf")


def graph_of(triples) -> TripleGraph:
    return TripleGraph(dict(STANDARD_PREFIXES), frozenset(triples))


# -- brute-force oracle: naive scans and fixed-point subclass expansion ----

def oracle_descendants(graph: TripleGraph, cls: Name) -> set[Name]:
    closure = {cls}
    changed = True
    while changed:
        changed = False
        for t in graph.triples:
            if (t.predicate == SUBCLASS and isinstance(t.object, Name)
                    and t.object in closure and t.subject not in closure):
                closure.add(t.subject)
                changed = True
    return closure


def oracle_holds(graph: TripleGraph, individual: Name, atom) -> bool:
    if isinstance(atom, ClassAtom):
        classes = oracle_descendants(graph, atom.cls)
        return any(t.subject == individual and t.predicate == RDF_TYPE
                   and t.object in classes for t in graph.triples)
    if isinstance(atom, ValueRestriction):
        return any(t.subject == individual and t.predicate == atom.prop
                   and t.object == atom.individual for t in graph.triples)
    classes = oracle_descendants(graph, atom.cls)
    for t in graph.triples:
        if t.subject == individual and t.predicate == atom.prop \
                and isinstance(t.object, Name):
            if any(u.subject == t.object and u.predicate == RDF_TYPE
                   and u.object in classes for u in graph.triples):
                return True
    return False


def oracle_query(graph: TripleGraph, atoms) -> set[Name]:
    candidates = {t.subject for t in graph.triples}
    return {i for i in candidates
            if all(oracle_holds(graph, i, a) for a in atoms)}


# -- fixture behavior -------------------------------------------------------

def test_class_enumeration_lists_all_learners():
    got = run_query(user_fixture(), "Learner")
    assert [x.local for x in got] == ["anna456", "monika123", "ravi789"]


def test_value_restriction_matches_brute_force_on_fixture():
    graph = user_fixture()
    text = "Learner and takesCourse value :CS101"
    expr = parse_query(text, graph.prefixes)
    got = query(graph, expr)
    assert got == oracle_query(graph, expr)
    assert {x.local for x in got} == {"anna456", "monika123"}


def test_query_on_empty_graph_returns_empty_set():
    empty = graph_of([])
    assert query(empty, (ClassAtom(n("Learner")),)) == set()


def test_unknown_class_name_raises_listing_it():
    with pytest.raises(UnknownNameError) as err:
        query(user_fixture(), (ClassAtom(n("Spaceship")),))
    assert err.value.names == [n("Spaceship")]


def test_unknown_property_name_raises():
    with pytest.raises(UnknownNameError, match="noSuchProp"):
        query(user_fixture(), (ValueRestriction(n("noSuchProp"), n("CS101")),))


def test_subclass_closure():
    g = graph_of([
        Triple(n("GradStudent"), SUBCLASS, n("Student")),
        Triple(n("PhdStudent"), SUBCLASS, n("GradStudent")),
        Triple(n("alice"), RDF_TYPE, n("PhdStudent")),
        Triple(n("bob"), RDF_TYPE, n("Student")),
    ])
    got = query(g, (ClassAtom(n("Student")),))
    assert {x.local for x in got} == {"alice", "bob"}
    assert got == oracle_query(g, (ClassAtom(n("Student")),))


def test_subclass_cycle_still_terminates():
    g = graph_of([
        Triple(n("A"), SUBCLASS, n("B")),
        Triple(n("B"), SUBCLASS, n("A")),
        Triple(n("x"), RDF_TYPE, n("A")),
    ])
    assert {m.local for m in query(g, (ClassAtom(n("B")),))} == {"x"}


def test_some_restriction():
    g = graph_of([
        Triple(n("CS101"), RDF_TYPE, n("Course")),
        Triple(n("alice"), n("takes"), n("CS101")),
        Triple(n("bob"), n("takes"), n("bob")),  # object is not a Course
    ])
    expr = (SomeRestriction(n("takes"), n("Course")),)
    got = query(g, expr)
    assert {x.local for x in got} == {"alice"}
    assert got == oracle_query(g, expr)


def test_parse_query_grammar_errors():
    prefixes = dict(STANDARD_PREFIXES)
    with pytest.raises(QuerySyntaxError):
        parse_query("", prefixes)
    with pytest.raises(QuerySyntaxError):
        parse_query("Learner and", prefixes)
    with pytest.raises(QuerySyntaxError):
        parse_query("Learner Learner", prefixes)
    with pytest.raises(QuerySyntaxError):
        parse_query("takesCourse value", prefixes)


# -- randomized equivalence -------------------------------------------------

def random_graph(rng: random.Random) -> TripleGraph:
    n_classes = rng.randint(1, 6)
    n_individuals = rng.randint(0, 50)
    classes = [n(f"C{i}") for i in range(n_classes)]
    individuals = [n(f"i{i}") for i in range(n_individuals)]
    props = [n(f"p{i}") for i in range(rng.randint(1, 3))]
    triples: set[Triple] = set()
    # acyclic subclass edges: child index > parent index
    for child in range(1, n_classes):
        if rng.random() < 0.6:
            parent = rng.randrange(child)
            triples.add(Triple(classes[child], SUBCLASS, classes[parent]))
    for ind in individuals:
        for _ in range(rng.randint(0, 2)):
            triples.add(Triple(ind, RDF_TYPE, rng.choice(classes)))
        for _ in range(rng.randint(0, 4)):
            if rng.random() < 0.7 and individuals:
                triples.add(Triple(ind, rng.choice(props),
                                   rng.choice(individuals)))
    return graph_of(list(triples)[:300])


def random_expr(rng: random.Random, graph: TripleGraph):
    view_classes = sorted(
        {t.object for t in graph.triples if t.predicate == RDF_TYPE
         if isinstance(t.object, Name)}
        | {t.subject for t in graph.triples if t.predicate == SUBCLASS}
        | {t.object for t in graph.triples if t.predicate == SUBCLASS
           if isinstance(t.object, Name)})
    view_props = sorted({t.predicate for t in graph.triples
                         if t.predicate not in (RDF_TYPE, SUBCLASS)})
    individuals = sorted({t.subject for t in graph.triples})
    atoms = []
    for _ in range(rng.randint(1, 3)):
        roll = rng.random()
        if roll < 0.4 and view_classes:
            atoms.append(ClassAtom(rng.choice(view_classes)))
        elif roll < 0.7 and view_props and individuals:
            atoms.append(ValueRestriction(rng.choice(view_props),
                                          rng.choice(individuals)))
        elif view_props and view_classes:
            atoms.append(SomeRestriction(rng.choice(view_props),
                                         rng.choice(view_classes)))
    return tuple(atoms)


def test_query_equals_brute_force_on_200_random_graphs():
    rng = random.Random(1234)
    checked = 0
    for _ in range(200):
        graph = random_graph(rng)
        expr = random_expr(rng, graph)
        if not expr:
            continue
        if not graph.triples:
            assert query(graph, expr) == set()
            continue
        assert query(graph, expr) == oracle_query(graph, expr)
        checked += 1
    assert checked >= 150
