"""Rule-based consistency validator (fixed rule set, no inference).

Six rules:
    R1  learner dim* values are odd integers in [-11, 11]
    R2  learner change* values are integers
    R3  each Learner has exactly one value per dim*/change* property
    R4  each Resource has a non-empty resourceURL and a legal resourceKind
    R5  the rdfs:subClassOf graph is acyclic
    R6  orderIndex values are distinct within each Module

Violations are data, not errors: validate always returns a report, and the
report is deterministic (findings sorted by subject then rule id).
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Literal, Name, RDFS_IRI, TripleGraph, node_sort_key
from .query import _GraphView, _optional_well_known
from .schema import RESOURCE_KINDS, CourseOntologySchema, UserOntologySchema
from ..styles import SCORE_MAX, SCORE_MIN


@dataclass(frozen=True)
class Finding:
    subject: Name
    rule_id: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...]

    @property
    def consistent(self) -> bool:
        return not self.findings

    def by_rule(self, rule_id: str) -> list[Finding]:
        return [f for f in self.findings if f.rule_id == rule_id]

    def render(self) -> str:
        if self.consistent:
            return "consistent\n"
        return "".join(
            f"{f.rule_id} {f.subject} {f.message}\n" for f in self.findings
        )


def _int_value(obj) -> int | None:
    if isinstance(obj, Literal) and obj.datatype == "integer":
        return obj.as_int()
    return None


def _typed_individuals(view: _GraphView, cls: Name) -> list[Name]:
    return sorted(view.members(cls), key=node_sort_key)


def validate(
    graph: TripleGraph,
    schema: UserOntologySchema | CourseOntologySchema,
) -> ValidationReport:
    """Run every rule the schema's vocabulary activates."""
    findings: list[Finding] = []
    view = _GraphView(graph)

    if isinstance(schema, UserOntologySchema):
        learners = _typed_individuals(view, schema.learner_class)
        for learner in learners:
            for dim, prop in schema.dim_props.items():
                values = graph.objects(learner, prop)
                for obj in values:
                    value = _int_value(obj)
                    if value is None:
                        findings.append(Finding(
                            learner, "R1",
                            f"{prop} must be an integer literal",
                        ))
                    elif value % 2 == 0 or not SCORE_MIN <= value <= SCORE_MAX:
                        findings.append(Finding(
                            learner, "R1",
                            f"{prop} must be odd in [{SCORE_MIN}, {SCORE_MAX}], got {value}",
                        ))
            for dim, prop in schema.change_props.items():
                for obj in graph.objects(learner, prop):
                    if _int_value(obj) is None:
                        findings.append(Finding(
                            learner, "R2",
                            f"{prop} must be an integer literal",
                        ))
            for prop in schema.profile_props():
                count = len(graph.objects(learner, prop))
                if count != 1:
                    findings.append(Finding(
                        learner, "R3",
                        f"{prop} must have exactly one value, found {count}",
                    ))

    if isinstance(schema, CourseOntologySchema):
        for resource in _typed_individuals(view, schema.resource_class):
            urls = graph.objects(resource, schema.resource_url)
            if not urls or all(
                not isinstance(u, Literal) or not u.lexical for u in urls
            ):
                findings.append(Finding(
                    resource, "R4",
                    f"{schema.resource_url} missing or empty",
                ))
            kinds = graph.objects(resource, schema.resource_kind)
            if not kinds or any(
                not isinstance(k, Literal) or k.lexical not in RESOURCE_KINDS
                for k in kinds
            ):
                findings.append(Finding(
                    resource, "R4",
                    f"{schema.resource_kind} must be one of {', '.join(RESOURCE_KINDS)}",
                ))
        for module in _typed_individuals(view, schema.module_class):
            seen: dict[int, list[Name]] = {}
            for obj in graph.objects(module, schema.has_resource):
                if not isinstance(obj, Name):
                    continue
                for idx_obj in graph.objects(obj, schema.order_index):
                    idx = _int_value(idx_obj)
                    if idx is not None:
                        seen.setdefault(idx, []).append(obj)
            duplicated = sorted(i for i, rs in seen.items() if len(rs) > 1)
            if duplicated:
                findings.append(Finding(
                    module, "R6",
                    "duplicate orderIndex values: "
                    + ", ".join(str(i) for i in duplicated),
                ))

    findings.extend(_subclass_cycles(graph, view))

    ordered = sorted(
        set(findings),
        key=lambda f: (node_sort_key(f.subject), f.rule_id, f.message),
    )
    return ValidationReport(tuple(ordered))


def _subclass_cycles(graph: TripleGraph, view: _GraphView) -> list[Finding]:
    """R5: one finding per subclass cycle, anchored at its smallest member."""
    subclass = _optional_well_known(graph, RDFS_IRI, "subClassOf")
    if subclass is None:
        return []
    parents: dict[Name, set[Name]] = {}
    for t in graph.triples:
        if t.predicate == subclass and isinstance(t.object, Name):
            parents.setdefault(t.subject, set()).add(t.object)

    findings = []
    in_cycle: set[Name] = set()
    for start in sorted(parents, key=node_sort_key):
        if start in in_cycle:
            continue
        # Walk everything reachable upward; returning to start means a cycle.
        stack, seen = [start], set()
        while stack:
            node = stack.pop()
            for parent in parents.get(node, ()):
                if parent == start:
                    cycle_members = _cycle_members(start, parents)
                    in_cycle |= cycle_members
                    anchor = min(cycle_members, key=node_sort_key)
                    findings.append(Finding(
                        anchor, "R5",
                        "subclass cycle through "
                        + ", ".join(str(m) for m in sorted(cycle_members, key=node_sort_key)),
                    ))
                    stack.clear()
                    break
                if parent not in seen:
                    seen.add(parent)
                    stack.append(parent)
    return findings


def _cycle_members(start: Name, parents: dict[Name, set[Name]]) -> set[Name]:
    """Nodes that can reach start and are reachable from start (one SCC)."""
    up = _reachable(start, parents)
    children: dict[Name, set[Name]] = {}
    for child, ps in parents.items():
        for p in ps:
            children.setdefault(p, set()).add(child)
    down = _reachable(start, children)
    return up & down


def _reachable(start: Name, edges: dict[Name, set[Name]]) -> set[Name]:
    seen = {start}
    stack = [start]
    while stack:
        for nxt in edges.get(stack.pop(), ()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen
