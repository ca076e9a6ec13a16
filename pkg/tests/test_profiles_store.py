"""Profile read/write, module resources, and the file-backed store."""

from __future__ import annotations

import threading

import pytest

from adaptalearn.fixtures import course_fixture, user_fixture
from adaptalearn.ontology import (
    Name,
    NotFoundError,
    OntologyStore,
    Triple,
    empty_graph,
    list_module_resources,
    list_modules,
    n,
    parse,
    read_profile,
    serialize,
    write_profile,
)
from adaptalearn.styles import DIMENSIONS, LearnerStyleProfile


def profile(uid, scores, accs):
    return LearnerStyleProfile(uid, dict(zip(DIMENSIONS, scores)),
                               dict(zip(DIMENSIONS, accs)))


class TestProfileIO:
    def test_write_then_read_round_trips(self):
        g = write_profile(empty_graph(), profile("zed", (1, -3, 5, 11), (4, 0, -2, 9)))
        got = read_profile(g, "zed")
        assert got == profile("zed", (1, -3, 5, 11), (4, 0, -2, 9))

    def test_fixture_accumulators_match_published_exchange(self):
        got = read_profile(user_fixture(), "monika123")
        assert got.accumulator_vector() == (0, 4, 0, -5)

    def test_unknown_learner_not_found(self):
        with pytest.raises(NotFoundError, match="ghost"):
            read_profile(user_fixture(), "ghost")

    def test_rewrite_diff_bounded_and_confined_to_learner(self):
        before = user_fixture()
        after = write_profile(before, profile("monika123", (3, 3, -1, -1),
                                              (0, 0, 0, 0)))
        removed = before.triples - after.triples
        added = after.triples - before.triples
        assert len(removed) <= 8 and len(added) <= 8
        assert len(removed | added) <= 16
        assert {t.subject.local for t in removed | added} == {"monika123"}

    def test_rewrite_changing_every_value_swaps_exactly_eight(self):
        before = user_fixture()  # monika123: (1,3,-1,1) / (0,4,0,-5)
        after = write_profile(before, profile("monika123", (3, 5, 1, 3),
                                              (1, 5, 1, -4)))
        assert len(before.triples - after.triples) == 8
        assert len(after.triples - before.triples) == 8

    def test_first_write_creates_learner_with_type_and_id(self):
        g = write_profile(empty_graph(), profile("new1", (1, 1, 1, 1), (0, 0, 0, 0)))
        assert g.has(n("new1"), Name("rdf", "type"), n("Learner"))
        assert len(g.triples) == 10  # type + hasId + 8 profile triples


class TestModuleResources:
    def test_sorted_by_order_index(self):
        resources = list_module_resources(course_fixture(), n("CS101_M2"))
        assert [r.order_index for r in resources] == [1, 2, 3]
        assert [r.name.local for r in resources] == [
            "CS101_M2_SortingVideo", "CS101_M2_SortingText", "CS101_M2_Quiz"]

    def test_fixture_module_matches_independent_read(self):
        # Independent route: scan the serialized text for this module's
        # resources and their indices rather than using the graph API.
        text = serialize(course_fixture())
        import re
        members = re.findall(r"^:CS101_M1 :hasResource :(\w+) \.$", text, re.M)
        idx = dict(re.findall(r"^:(\w+) :orderIndex \"(-?\d+)\"", text, re.M))
        expected = sorted(members, key=lambda r: int(idx[r]))
        got = [r.name.local for r in
               list_module_resources(course_fixture(), n("CS101_M1"))]
        assert got == expected
        assert got == ["CS101_M1_IntroVideo", "CS101_M1_IntroText",
                       "CS101_M1_Quiz", "CS101_M1_Challenge"]

    def test_module_without_resources_is_empty(self):
        g = course_fixture().with_triples(
            [Triple(n("EmptyMod"), Name("rdf", "type"), n("Module"))])
        assert list_module_resources(g, n("EmptyMod")) == []

    def test_unknown_module_not_found(self):
        with pytest.raises(NotFoundError):
            list_module_resources(course_fixture(), n("NoSuchModule"))

    def test_list_modules_includes_owner_course(self):
        modules = dict((m.local, c.local if c else None)
                       for m, c in list_modules(course_fixture()))
        assert modules == {"CS101_M1": "CS101", "CS101_M2": "CS101",
                           "MA201_M1": "MA201"}


class TestOntologyStore:
    def test_persists_and_reloads(self, tmp_path):
        store = OntologyStore(tmp_path)
        store.replace_user(user_fixture())
        again = OntologyStore(tmp_path)
        assert again.user_graph() == user_fixture()

    def test_mutation_is_atomic_on_disk(self, tmp_path):
        store = OntologyStore(tmp_path)
        store.replace_user(user_fixture())
        # the rewrite leaves no temp file behind and the file always parses
        store.mutate_user(lambda g: (write_profile(
            g, profile("monika123", (1, 3, -1, -1), (0, 4, 0, 0))), None))
        leftovers = [p.name for p in tmp_path.iterdir() if p.suffix == ".tmp"]
        assert leftovers == []
        on_disk = parse((tmp_path / "user.owl.ttl").read_text())
        assert on_disk == store.user_graph()

    def test_failed_mutation_leaves_graph_unchanged(self, tmp_path):
        store = OntologyStore(tmp_path)
        store.replace_user(user_fixture())
        before = store.user_graph()
        with pytest.raises(RuntimeError):
            store.mutate_user(lambda g: (_ for _ in ()).throw(RuntimeError("boom")))
        assert store.user_graph() == before
        assert parse((tmp_path / "user.owl.ttl").read_text()) == before

    def test_concurrent_writers_both_land(self, tmp_path):
        store = OntologyStore(tmp_path)
        store.replace_user(write_profile(
            empty_graph(), profile("u", (1, 1, 1, 1), (0, 0, 0, 0))))

        def bump():
            for _ in range(25):
                def fn(g):
                    p = read_profile(g, "u")
                    accs = dict(p.accumulators)
                    accs[DIMENSIONS[0]] += 2
                    return write_profile(
                        g, LearnerStyleProfile("u", p.scores, accs)), None
                store.mutate_user(fn)

        threads = [threading.Thread(target=bump) for _ in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert read_profile(store.user_graph(), "u").accumulators[DIMENSIONS[0]] == 200
