"""File-backed ontology store: one Turtle file per graph, atomic rewrites.

Single-writer, multiple-reader: every mutation runs under the store lock
and lands on disk via write-temp-then-rename before the in-memory snapshot
is swapped, so readers always see a complete committed graph and a crash
never leaves a torn file.
"""

from __future__ import annotations

import os
import threading
from pathlib import Path
from typing import Callable, TypeVar

from .model import TripleGraph
from .schema import STANDARD_PREFIXES
from .turtle import parse, serialize

T = TypeVar("T")

USER_GRAPH_FILE = "user.owl.ttl"
COURSE_GRAPH_FILE = "course.owl.ttl"


def empty_graph() -> TripleGraph:
    return TripleGraph(dict(STANDARD_PREFIXES), frozenset())


class OntologyStore:
    """Holds the user and course graphs with file persistence."""

    def __init__(self, data_dir: str | os.PathLike):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self.lock = threading.RLock()
        self._graphs: dict[str, TripleGraph] = {}
        for filename in (USER_GRAPH_FILE, COURSE_GRAPH_FILE):
            path = self.data_dir / filename
            if path.exists():
                self._graphs[filename] = parse(path.read_text(encoding="utf-8"))
            else:
                graph = empty_graph()
                self._write_file(filename, graph)
                self._graphs[filename] = graph

    def user_graph(self) -> TripleGraph:
        return self._graphs[USER_GRAPH_FILE]

    def course_graph(self) -> TripleGraph:
        return self._graphs[COURSE_GRAPH_FILE]

    def mutate_user(self, fn: Callable[[TripleGraph], tuple[TripleGraph, T]]) -> T:
        return self._mutate(USER_GRAPH_FILE, fn)

    def mutate_course(self, fn: Callable[[TripleGraph], tuple[TripleGraph, T]]) -> T:
        return self._mutate(COURSE_GRAPH_FILE, fn)

    def replace_user(self, graph: TripleGraph) -> None:
        self.mutate_user(lambda _old: (graph, None))

    def replace_course(self, graph: TripleGraph) -> None:
        self.mutate_course(lambda _old: (graph, None))

    def _mutate(self, filename: str, fn: Callable[[TripleGraph], tuple[TripleGraph, T]]) -> T:
        with self.lock:
            new_graph, result = fn(self._graphs[filename])
            if new_graph is not self._graphs[filename]:
                self._write_file(filename, new_graph)
                self._graphs[filename] = new_graph
            return result

    def _write_file(self, filename: str, graph: TripleGraph) -> None:
        path = self.data_dir / filename
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text(serialize(graph), encoding="utf-8")
        os.replace(tmp, path)
