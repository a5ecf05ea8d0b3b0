"""Finite simplicial graphs and the link/star predicates used by the classifiers.

Vertices may be any mutually comparable hashable values (ints, strings,
tuples).  The vertex order is the sorted order of the ids and every search in
this module returns the least witness under that order.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Hashable, Iterable, Optional


class GraphError(ValueError):
    pass


class SimplicialGraph:
    """Immutable finite simplicial graph (no loops, no multi-edges)."""

    __slots__ = ("_vertices", "_adj", "_edges", "_index")

    def __init__(self, vertices: Iterable[Hashable], edges: Iterable[Iterable[Hashable]] = ()):
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            raise GraphError("duplicate vertex id")
        try:
            vs.sort()
        except TypeError as exc:
            raise GraphError("vertex ids must be mutually comparable") from exc
        adj: dict = {v: set() for v in vs}
        es = set()
        for e in edges:
            u, w = tuple(e)
            if u == w:
                raise GraphError(f"loop at vertex {u!r}")
            if u not in adj or w not in adj:
                missing = u if u not in adj else w
                raise GraphError(f"edge references unknown vertex {missing!r}")
            adj[u].add(w)
            adj[w].add(u)
            es.add(frozenset((u, w)))
        self._vertices = tuple(vs)
        self._adj = {v: frozenset(n) for v, n in adj.items()}
        self._edges = frozenset(es)
        self._index = {v: i for i, v in enumerate(vs)}

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edges(self) -> frozenset:
        return self._edges

    def edge_list(self) -> list[tuple]:
        """Edges as sorted pairs, in sorted order."""
        return sorted(tuple(sorted(e)) for e in self._edges)

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"SimplicialGraph({list(self._vertices)!r}, {self.edge_list()!r})"

    def index(self, v) -> int:
        return self._index[v]

    def adjacent(self, u, w) -> bool:
        return w in self._adj[u]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def link(self, v) -> frozenset:
        return self._adj[v]

    def star(self, v) -> frozenset:
        return self._adj[v] | {v}

    def induced(self, vertices: Iterable) -> "SimplicialGraph":
        keep = set(vertices)
        self._check_subset(keep)
        return SimplicialGraph(keep, (e for e in self._edges if e <= keep))

    def _check_subset(self, s) -> None:
        for v in s:
            if v not in self._adj:
                raise GraphError(f"unknown vertex {v!r}")


def induced_components(g: SimplicialGraph, s: Iterable) -> list[frozenset]:
    """Connected components of the subgraph spanned by ``s``.

    Components are sorted by their least vertex; an empty ``s`` gives ``[]``.
    """
    s = set(s)
    g._check_subset(s)
    seen: set = set()
    comps = []
    for start in sorted(s):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.link(u):
                if w in s and w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(g: SimplicialGraph) -> bool:
    return len(induced_components(g, g.vertices)) <= 1


def star_complement_components(g: SimplicialGraph, v) -> list[frozenset]:
    return induced_components(g, set(g.vertices) - g.star(v))


def separating_star_vertices(g: SimplicialGraph) -> list:
    """All vertices whose star complement has at least two components."""
    return [v for v in g.vertices if len(star_complement_components(g, v)) >= 2]


def has_separating_star(g: SimplicialGraph) -> Optional[Hashable]:
    """Least vertex ``v`` such that removing ``st(v)`` disconnects the graph, or None.

    An empty complement counts as connected, so cliques have no separating star.
    """
    for v in g.vertices:
        if len(star_complement_components(g, v)) >= 2:
            return v
    return None


def is_sil(g: SimplicialGraph, x, y, z) -> bool:
    """Check whether ``(x, y | z)`` is a separating intersection of links."""
    triple = (x, y, z)
    if len(set(triple)) != 3:
        return False
    if any(g.adjacent(a, b) for a, b in combinations(triple, 2)):
        return False
    cut = g.link(x) & g.link(y)
    for comp in induced_components(g, set(g.vertices) - cut):
        if z in comp:
            return x not in comp and y not in comp
    return False


def has_sil(g: SimplicialGraph) -> Optional[tuple]:
    """Lexicographically least SIL ``(x, y, z)`` with ``x < y``, or None."""
    vs = g.vertices
    for x, y in combinations(vs, 2):
        if g.adjacent(x, y):
            continue
        cut = g.link(x) & g.link(y)
        zs = [
            z
            for comp in induced_components(g, set(vs) - cut)
            if x not in comp and y not in comp
            for z in comp
            if not (g.adjacent(z, x) or g.adjacent(z, y))
        ]
        if zs:
            return (x, y, min(zs))
    return None


def star_containments(g: SimplicialGraph) -> list[tuple]:
    """All ordered pairs ``(v, w)``, ``v != w``, with ``st(v) <= st(w)``, sorted."""
    return [
        (v, w)
        for v in g.vertices
        for w in g.vertices
        if v != w and g.star(v) <= g.star(w)
    ]


def link_condition_holds(g: SimplicialGraph) -> tuple[bool, Optional[tuple]]:
    """Return ``(True, None)`` if ``lk(v)`` is never inside ``st(w)`` for ``v != w``.

    Otherwise ``(False, (v, w))`` with the least violating ordered pair.
    """
    for v in g.vertices:
        for w in g.vertices:
            if v != w and g.link(v) <= g.star(w):
                return False, (v, w)
    return True, None


def full_star_vertices(g: SimplicialGraph) -> frozenset:
    n = len(g)
    return frozenset(v for v in g.vertices if g.degree(v) == n - 1)


# --- standard graphs -------------------------------------------------------

def cycle_graph(n: int, prefix: str = "v") -> SimplicialGraph:
    vs = [f"{prefix}{i}" for i in range(n)]
    return SimplicialGraph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path_graph(vertices: Iterable) -> SimplicialGraph:
    vs = list(vertices)
    return SimplicialGraph(vs, zip(vs, vs[1:]))


def complete_graph(vertices: Iterable) -> SimplicialGraph:
    vs = list(vertices)
    return SimplicialGraph(vs, combinations(vs, 2))


def lcf_graph(shifts: list[int], repeats: int = 1) -> SimplicialGraph:
    """Cubic Hamiltonian graph from LCF notation, vertices ``0..n-1``."""
    seq = list(shifts) * repeats
    n = len(seq)
    edges = {frozenset((i, (i + 1) % n)) for i in range(n)}
    for i, s in enumerate(seq):
        edges.add(frozenset((i, (i + s) % n)))
    return SimplicialGraph(range(n), edges)


FRUCHT_LCF = [-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2]


def frucht_graph() -> SimplicialGraph:
    """The 12-vertex cubic asymmetric graph, vertices ``0..11``."""
    return lcf_graph(FRUCHT_LCF)


def star_graph() -> SimplicialGraph:
    """Centre ``c`` joined to three leaves ``x, y, z``."""
    return SimplicialGraph("cxyz", [("c", "x"), ("c", "y"), ("c", "z")])


def ladder_graph() -> SimplicialGraph:
    """The 2 x 5 ladder; the middle bottom vertex is named ``v`` so it sorts first.

    Bottom row: w0 w1 v w3 w4, top row: x0 .. x4.
    """
    bottom = ["w0", "w1", "v", "w3", "w4"]
    top = [f"x{i}" for i in range(5)]
    edges = list(zip(bottom, bottom[1:])) + list(zip(top, top[1:])) + list(zip(bottom, top))
    return SimplicialGraph(bottom + top, edges)
