"""Semicompleteness and completeness verdicts for labelled graphs.

The semicompleteness decision first strips the central clique (vertices whose
star is everything, with abelian labels), then walks a fixed rule list:

  1. nothing left                            -> Yes
  2. a vertex group known not semicomplete   -> No
  3. a single vertex                         -> Yes / Undetermined from its label
  4. a separating star                       -> No
  5. a non-abelian label, graph not a star   -> No
  6. all labels f.g. abelian                 -> Yes
  7. otherwise                               -> Undetermined

Completeness is only decided for f.g. abelian labels, on the prime-power
expansion, by six graph conditions that must all hold.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Hashable, Mapping, Optional

from .abelian import ExpandedGraph, FGAbelian, GroupLabel, expand_graph
from .graph import (
    SimplicialGraph,
    full_star_vertices,
    has_separating_star,
    induced_components,
    link_condition_holds,
    star_complement_components,
    star_containments,
)
from .symmetry import nontrivial_automorphism

MIN_COMPLETE_VERTICES = 7


class Verdict(str, enum.Enum):
    YES = "Yes"
    NO = "No"
    UNDETERMINED = "Undetermined"

    def __str__(self):
        return self.value


# citation tags
CITE_CENTER = "central clique splits off as a direct factor"
CITE_SUBGROUP = "every vertex group of a semicomplete graph product is semicomplete"
CITE_SEP_STAR = "separating star gives a non-inner partial conjugation"
CITE_ABELIAN = "non-abelian vertex group off a star gives a non-inner IA map"
CITE_FG_ABELIAN = "f.g. abelian vertex groups: semicomplete iff no separating star"
CITE_LINK = "link condition: semicomplete iff abelian labels and no separating star"
CITE_NO_CRITERION = "star-shaped graph with non-abelian tip: no general criterion"
CITE_TRIVIAL = "abelian groups are semicomplete"
CITE_COMPLETE = "completeness criterion for Z/2 labels"
CITE_NONABELIAN_COMPLETE = "completeness criterion needs indecomposable labels with non-trivial centre"


@dataclass(frozen=True)
class Evidence:
    topic: str  # "semicomplete" or "complete"
    condition: str
    holds: Optional[bool]
    citation: str
    witness: Any = None


@dataclass
class ClassificationReport:
    semicomplete: Verdict
    complete: Verdict
    center_delta: frozenset
    evidence: list = field(default_factory=list)
    expansion: Optional[ExpandedGraph] = None

    def to_dict(self) -> dict:
        return {
            "semicomplete": self.semicomplete.value,
            "complete": self.complete.value,
            "center_delta": _plain(sorted(self.center_delta)),
            "expanded": self.expansion is not None,
            "expanded_vertices": None if self.expansion is None else len(self.expansion.graph),
            "evidence": [
                {
                    "topic": e.topic,
                    "condition": e.condition,
                    "holds": e.holds,
                    "witness": _plain(e.witness),
                    "citation": e.citation,
                }
                for e in self.evidence
            ],
        }

    def to_text(self) -> str:
        lines = [
            f"semicomplete: {self.semicomplete}",
            f"complete: {self.complete}",
            f"center: {_fmt(sorted(self.center_delta))}",
        ]
        if self.expansion is not None:
            lines.append(f"expansion: {len(self.expansion.graph)} cyclic vertices")
        for e in self.evidence:
            holds = {True: "holds", False: "fails", None: "n/a"}[e.holds]
            lines.append(
                f"[{e.topic}] {e.condition}: {holds}; witness={_fmt(e.witness)}; cite={e.citation}"
            )
        return "\n".join(lines) + "\n"


def _plain(x):
    """JSON-friendly copy: tuples and sets become lists."""
    if isinstance(x, (frozenset, set)):
        return [_plain(y) for y in sorted(x)]
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return x


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, (frozenset, set)):
        return "{" + ", ".join(_fmt(y) for y in sorted(x)) + "}"
    if isinstance(x, list):
        return "[" + ", ".join(_fmt(y) for y in x) + "]"
    if isinstance(x, tuple):
        return "(" + ", ".join(_fmt(y) for y in x) + ")"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{_fmt(k)}->{_fmt(v)}" for k, v in x.items()) + "}"
    return str(x)


def _is_abelian(label: GroupLabel) -> bool:
    return isinstance(label, FGAbelian)


def center_delta(g: SimplicialGraph, labels: Mapping[Hashable, GroupLabel]) -> frozenset:
    """Vertices adjacent to everything whose vertex group is abelian."""
    return frozenset(v for v in full_star_vertices(g) if _is_abelian(labels[v]))


def reduce_center(g: SimplicialGraph, labels: Mapping) -> tuple[SimplicialGraph, list[frozenset]]:
    """Delete central abelian vertices until none remain."""
    removed = []
    while len(g):
        d = center_delta(g, labels)
        if not d:
            break
        removed.append(d)
        g = g.induced(set(g.vertices) - d)
    return g, removed


def classify_semicomplete(
    g: SimplicialGraph, labels: Mapping[Hashable, GroupLabel]
) -> tuple[Verdict, list[Evidence]]:
    ev: list[Evidence] = []

    def add(condition, holds, citation, witness=None):
        ev.append(Evidence("semicomplete", condition, holds, citation, witness))

    h, removed = reduce_center(g, labels)
    for d in removed:
        add("central clique removed", True, CITE_CENTER, d)

    verdict = _semicomplete_rules(h, labels, add)
    if verdict is not Verdict.UNDETERMINED and len(g):
        ok, pair = link_condition_holds(g)
        if ok:
            add("link condition (verdict also certified)", True, CITE_LINK)
    return verdict, ev


def _semicomplete_rules(h: SimplicialGraph, labels: Mapping, add) -> Verdict:
    vs = h.vertices
    if not vs:
        add("graph empty after reduction", True, CITE_TRIVIAL)
        return Verdict.YES

    flagged = [v for v in vs if getattr(labels[v], "known_semicomplete", None) == "no"]
    if flagged:
        add("all vertex groups semicomplete", False, CITE_SUBGROUP, flagged[0])
        return Verdict.NO

    if len(vs) == 1:
        v = vs[0]
        lab = labels[v]
        if _is_abelian(lab):
            add("single abelian vertex", True, CITE_TRIVIAL, v)
            return Verdict.YES
        if lab.known_semicomplete == "yes":
            add("single vertex group known semicomplete", True, CITE_SUBGROUP, v)
            return Verdict.YES
        add("single vertex group of unknown semicompleteness", None, CITE_SUBGROUP, v)
        return Verdict.UNDETERMINED

    sep = has_separating_star(h)
    if sep is not None:
        add(
            "no separating star",
            False,
            CITE_SEP_STAR,
            {"vertex": sep, "components": star_complement_components(h, sep)},
        )
        return Verdict.NO

    nonab = [v for v in vs if not _is_abelian(labels[v])]
    if nonab:
        whole = frozenset(vs)
        if not any(h.star(v) == whole for v in vs):
            add("all vertex groups abelian (graph is not a star)", False, CITE_ABELIAN, nonab[0])
            return Verdict.NO
        add("no separating star", True, CITE_SEP_STAR)
        add("star-shaped graph with non-abelian label", None, CITE_NO_CRITERION, nonab[0])
        return Verdict.UNDETERMINED

    add("no separating star", True, CITE_FG_ABELIAN)
    return Verdict.YES


def classify_complete(
    g: SimplicialGraph, labels: Mapping[Hashable, GroupLabel]
) -> tuple[Verdict, list[Evidence], Optional[ExpandedGraph]]:
    ev: list[Evidence] = []

    def add(condition, holds, witness=None, citation=CITE_COMPLETE):
        ev.append(Evidence("complete", condition, holds, citation, witness))

    if not len(g):
        # the trivial group is excluded by the vertex-count condition
        add(f"at least {MIN_COMPLETE_VERTICES} vertices", False, 0)
        return Verdict.NO, ev, None

    nonab = [v for v in g.vertices if not _is_abelian(labels[v])]
    if nonab:
        add("all labels finitely generated abelian", None, nonab[0], CITE_NONABELIAN_COMPLETE)
        return Verdict.UNDETERMINED, ev, None

    eg = expand_graph(g, labels)
    h = eg.graph
    add("labels expanded into prime-power cyclic cliques", True, len(h))

    not_z2 = [v for v in h.vertices if eg.factor_of[v] != 2]
    add("all vertex groups Z/2", not not_z2, not_z2[0] if not_z2 else None)

    comps = induced_components(h, h.vertices)
    add("connected", len(comps) == 1, None if len(comps) == 1 else comps)

    n = len(h)
    add(f"at least {MIN_COMPLETE_VERTICES} vertices", n >= MIN_COMPLETE_VERTICES, n)

    sep = has_separating_star(h)
    add("no separating star", sep is None, sep)

    sigma = nontrivial_automorphism(h)
    add("asymmetric", sigma is None, None if sigma is None else dict(
        (k, v) for k, v in sigma.items() if k != v))

    pairs = star_containments(h)
    add("no star containment", not pairs, pairs[0] if pairs else None)

    checks = [e.holds for e in ev[1:]]
    return (Verdict.YES if all(checks) else Verdict.NO), ev, eg


def classify(g: SimplicialGraph, labels: Mapping[Hashable, GroupLabel]) -> ClassificationReport:
    missing = [v for v in g.vertices if v not in labels]
    if missing:
        raise ValueError(f"no label for vertex {missing[0]!r}")
    semi, semi_ev = classify_semicomplete(g, labels)
    comp, comp_ev, eg = classify_complete(g, labels)
    if eg is None and all(_is_abelian(labels[v]) for v in g.vertices) and len(g):
        eg = expand_graph(g, labels)
    return ClassificationReport(semi, comp, center_delta(g, labels), semi_ev + comp_ev, eg)
