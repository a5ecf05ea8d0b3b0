"""Graph automorphisms, canonical forms and the small-graph census.

Automorphisms are found by backtracking over vertex images.  Candidates are
restricted to the vertex's colour class after iterated neighbourhood-colour
refinement (seeded with labels and degrees), and every partial assignment is
checked against adjacency with the vertices already placed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Hashable, Mapping, Optional

from .graph import SimplicialGraph, has_separating_star

CANONICAL_BOUND = 10
CENSUS_MAX = 7


class SymmetryError(ValueError):
    pass


class Permutation:
    """A bijection of a finite vertex set, stored as a dict."""

    __slots__ = ("_map", "_key")

    def __init__(self, mapping: Mapping):
        m = dict(mapping)
        if set(m.values()) != set(m):
            raise SymmetryError("not a bijection of its domain")
        self._map = m
        self._key = tuple(sorted(m.items()))

    @classmethod
    def identity(cls, domain) -> "Permutation":
        return cls({v: v for v in domain})

    def __call__(self, v):
        return self._map[v]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        moved = {k: v for k, v in self._key if k != v}
        return f"Permutation({moved})"

    @property
    def domain(self) -> list:
        return [k for k, _ in self._key]

    def items(self):
        return self._key

    def images(self) -> tuple:
        """Images listed in sorted domain order (the permutation word)."""
        return tuple(v for _, v in self._key)

    def is_identity(self) -> bool:
        return all(k == v for k, v in self._key)

    def compose(self, other: "Permutation") -> "Permutation":
        """``self`` after ``other``."""
        return Permutation({v: self._map[other._map[v]] for v in other._map})

    def inverse(self) -> "Permutation":
        return Permutation({v: k for k, v in self._map.items()})

    def preserves(self, g: SimplicialGraph, labels: Optional[Mapping] = None) -> bool:
        if set(self._map) != set(g.vertices):
            return False
        if labels is not None and any(labels[v] != labels[self._map[v]] for v in g.vertices):
            return False
        mapped = {frozenset(self._map[v] for v in e) for e in g.edges}
        return mapped == g.edges


def _refine(adj: list[set], colors: list[int]) -> list[int]:
    """Iterated colour refinement; colours are renumbered by sorted signature."""
    n = len(adj)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if len(order) == len(set(colors)):
            return new
        colors = new


def _initial_colors(vs, labels) -> list[int]:
    if labels is None:
        return [0] * len(vs)
    # labels need only support equality; classes are numbered by first appearance
    classes: list = []
    out = []
    for v in vs:
        lab = labels[v]
        for i, c in enumerate(classes):
            if c == lab:
                out.append(i)
                break
        else:
            classes.append(lab)
            out.append(len(classes) - 1)
    return out


def _iter_automorphisms(g: SimplicialGraph, labels: Optional[Mapping]):
    """Yield automorphisms as index lists over ``g.vertices``."""
    vs = list(g.vertices)
    n = len(vs)
    if labels is not None:
        missing = [v for v in vs if v not in labels]
        if missing:
            raise SymmetryError(f"no label for vertex {missing[0]!r}")
    idx = {v: i for i, v in enumerate(vs)}
    adj = [{idx[w] for w in g.link(v)} for v in vs]
    seeds = [(c, len(adj[i])) for i, c in enumerate(_initial_colors(vs, labels))]
    rank = {s: i for i, s in enumerate(sorted(set(seeds)))}
    colors = _refine(adj, [rank[s] for s in seeds])

    order = _search_order(adj, colors)
    image = [-1] * n
    used = [False] * n

    def extend(k: int):
        if k == n:
            yield image[:]
            return
        v = order[k]
        placed = order[:k]
        for w in range(n):
            if used[w] or colors[w] != colors[v]:
                continue
            if any((u in adj[v]) != (image[u] in adj[w]) for u in placed):
                continue
            image[v] = w
            used[w] = True
            yield from extend(k + 1)
            used[w] = False
        image[v] = -1

    return extend(0)


def automorphisms(g: SimplicialGraph, labels: Optional[Mapping] = None) -> list[Permutation]:
    """The full (label-preserving) automorphism group as an explicit list.

    Identity first, the rest sorted by their permutation words.
    """
    vs = list(g.vertices)
    n = len(vs)
    ident = list(range(n))
    rest = sorted(p for p in _iter_automorphisms(g, labels) if p != ident)
    return [Permutation({vs[i]: vs[p[i]] for i in range(n)}) for p in [ident] + rest]


def nontrivial_automorphism(g: SimplicialGraph, labels: Optional[Mapping] = None) -> Optional[Permutation]:
    """Some non-identity automorphism, or None if the graph is asymmetric."""
    vs = list(g.vertices)
    ident = list(range(len(vs)))
    for p in _iter_automorphisms(g, labels):
        if p != ident:
            return Permutation({v: vs[i] for v, i in zip(vs, p)})
    return None


def _search_order(adj: list[set], colors: list[int]) -> list[int]:
    """Vertices from small colour classes first, then breadth-first by adjacency."""
    n = len(adj)
    size = {}
    for c in colors:
        size[c] = size.get(c, 0) + 1
    remaining = set(range(n))
    order: list[int] = []
    while remaining:
        start = min(remaining, key=lambda v: (size[colors[v]], v))
        queue = [start]
        remaining.discard(start)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(adj[v], key=lambda w: (size[colors[w]], w)):
                if w in remaining:
                    remaining.discard(w)
                    queue.append(w)
    return order


def is_asymmetric(g: SimplicialGraph, labels: Optional[Mapping] = None) -> bool:
    return nontrivial_automorphism(g, labels) is None


# --- canonical forms -------------------------------------------------------

@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Vertex count plus the edge set on canonical labels ``0..n-1``."""

    n: int
    edges: tuple

    def graph(self) -> SimplicialGraph:
        return SimplicialGraph(range(self.n), self.edges)


def _pair_positions(n: int) -> list[list[int]]:
    pos = [[-1] * n for _ in range(n)]
    for k, (i, j) in enumerate(combinations(range(n), 2)):
        pos[i][j] = pos[j][i] = k
    return pos


def _canonical_mask(n: int, adj: list[set], edges: list[tuple], pos) -> int:
    colors = _refine(adj, [len(a) for a in adj])
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    ordered = [cells[c] for c in sorted(cells)]
    slots = []
    start = 0
    for cell in ordered:
        slots.append(range(start, start + len(cell)))
        start += len(cell)
    best = None
    label = [0] * n
    for choice in product(*(permutations(s) for s in slots)):
        for cell, targets in zip(ordered, choice):
            for v, t in zip(cell, targets):
                label[v] = t
        mask = 0
        for u, w in edges:
            mask |= 1 << pos[label[u]][label[w]]
        if best is None or mask < best:
            best = mask
    return best if best is not None else 0


def _mask_edges(n: int, mask: int) -> tuple:
    return tuple(p for k, p in enumerate(combinations(range(n), 2)) if mask >> k & 1)


def canonical_form(g: SimplicialGraph, bound: int = CANONICAL_BOUND) -> CanonicalForm:
    """Isomorphism-invariant encoding: least adjacency bitmask over refined orderings."""
    n = len(g)
    if n > bound:
        raise SymmetryError(f"canonical_form limited to {bound} vertices, got {n}")
    idx = {v: i for i, v in enumerate(g.vertices)}
    adj = [{idx[w] for w in g.link(v)} for v in g.vertices]
    edges = [(idx[u], idx[w]) for u, w in g.edge_list()]
    mask = _canonical_mask(n, adj, edges, _pair_positions(n))
    return CanonicalForm(n, _mask_edges(n, mask))


# --- census ----------------------------------------------------------------

@dataclass
class CensusReport:
    n: int
    total_classes: int
    asymmetric_classes: int
    asymmetric_with_separating_star: int
    representatives: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "total_classes": self.total_classes,
            "asymmetric_classes": self.asymmetric_classes,
            "asymmetric_with_separating_star": self.asymmetric_with_separating_star,
            "representatives": [
                [list(e) for e in g.edge_list()] for g in self.representatives
            ],
        }


def census_classes(n: int) -> dict[int, int]:
    """Map canonical bitmask -> number of labelled graphs in that class."""
    if not 1 <= n <= CENSUS_MAX:
        raise SymmetryError(f"census needs 1 <= n <= {CENSUS_MAX}, got {n}")
    pairs = list(combinations(range(n), 2))
    pos = _pair_positions(n)
    counts: dict[int, int] = {}
    for mask in range(1 << len(pairs)):
        adj = [set() for _ in range(n)]
        edges = []
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                adj[i].add(j)
                adj[j].add(i)
                edges.append((i, j))
        c = _canonical_mask(n, adj, edges, pos)
        counts[c] = counts.get(c, 0) + 1
    return counts


def census(n: int) -> CensusReport:
    """Enumerate all labelled graphs on ``n`` vertices and report isomorphism classes."""
    counts = census_classes(n)
    reps = []
    with_star = 0
    for mask in sorted(counts):
        g = SimplicialGraph(range(n), _mask_edges(n, mask))
        if is_asymmetric(g):
            reps.append(g)
            if has_separating_star(g) is not None:
                with_star += 1
    return CensusReport(n, len(counts), len(reps), with_star, reps)
