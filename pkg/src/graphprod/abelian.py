"""Vertex-group labels and the clique expansion into prime-power cyclic factors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping, Union

from .graph import SimplicialGraph

MAX_TORSION = 2**31

INFINITE = 0  # order of an infinite cyclic factor


class LabelError(ValueError):
    pass


@dataclass(frozen=True)
class FGAbelian:
    """Z^free_rank x Z/t1 x ... x Z/tk.  Torsion need not be in invariant-factor form."""

    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if not isinstance(self.free_rank, int) or self.free_rank < 0:
            raise LabelError(f"free_rank must be a nonnegative integer, got {self.free_rank!r}")
        for t in self.torsion:
            if not isinstance(t, int) or t < 2:
                raise LabelError(f"torsion entries must be integers >= 2, got {t!r}")
            if t >= MAX_TORSION:
                raise LabelError(f"torsion entry {t} exceeds 2^31")
        if self.free_rank == 0 and not self.torsion:
            raise LabelError("vertex groups must be non-trivial")

    @property
    def is_abelian(self) -> bool:
        return True

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " x ".join(parts)


@dataclass(frozen=True)
class NonAbelian:
    """Opaque non-abelian vertex group; only its semicompleteness flag is known."""

    name: str
    known_semicomplete: str = "unknown"

    def __post_init__(self):
        if self.known_semicomplete not in ("yes", "no", "unknown"):
            raise LabelError(
                f"known_semicomplete must be yes/no/unknown, got {self.known_semicomplete!r}"
            )

    @property
    def is_abelian(self) -> bool:
        return False

    def __str__(self):
        return self.name


GroupLabel = Union[FGAbelian, NonAbelian]


def cyclic(order: int) -> FGAbelian:
    """Label of a cyclic group; order 0 means infinite cyclic."""
    return FGAbelian(1, ()) if order == INFINITE else FGAbelian(0, (order,))


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, as ``[(p, e), ...]`` ascending."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def primary_decomposition(label: FGAbelian) -> list[int]:
    """Cyclic factor orders: ``free_rank`` zeros, then prime powers in ascending order."""
    if not isinstance(label, FGAbelian):
        raise LabelError(f"not a finitely generated abelian label: {label!r}")
    finite = []
    for t in label.torsion:
        if t < 2:
            raise LabelError(f"torsion entry {t} < 2")
        finite.extend(p**e for p, e in factorize(t))
    return [INFINITE] * label.free_rank + sorted(finite)


def is_prime_power(n: int) -> bool:
    f = factorize(n) if n >= 2 else []
    return len(f) == 1


@dataclass(frozen=True)
class ExpandedGraph:
    """Graph whose vertices are ``(original id, factor index)`` pairs."""

    graph: SimplicialGraph
    factor_of: Mapping
    origin_of: Mapping

    def order(self, v) -> int:
        return self.factor_of[v]

    def vertices_of(self, original) -> list:
        return [v for v in self.graph.vertices if self.origin_of[v] == original]


def _expansion_factors(label: FGAbelian) -> list[int]:
    # finite factors get the low indices, free factors follow
    dec = primary_decomposition(label)
    return [o for o in dec if o != INFINITE] + [o for o in dec if o == INFINITE]


def expand_graph(g: SimplicialGraph, labels: Mapping[Hashable, GroupLabel]) -> ExpandedGraph:
    """Replace each vertex by a clique of its prime-power cyclic factors."""
    factor_of = {}
    origin_of = {}
    blocks: dict = {}
    for v in g.vertices:
        lab = labels[v]
        if not isinstance(lab, FGAbelian):
            raise LabelError(f"vertex {v!r} has non-abelian label {lab}")
        block = []
        for i, order in enumerate(_expansion_factors(lab)):
            node = (v, i)
            factor_of[node] = order
            origin_of[node] = v
            block.append(node)
        blocks[v] = block
    edges = []
    for block in blocks.values():
        edges.extend((a, b) for i, a in enumerate(block) for b in block[i + 1:])
    for u, w in g.edge_list():
        edges.extend((a, b) for a in blocks[u] for b in blocks[w])
    eg = SimplicialGraph(factor_of, edges)
    return ExpandedGraph(eg, factor_of, origin_of)


def abelianization_signature(eg: ExpandedGraph) -> tuple:
    """Cyclic orders (0 = infinite) of the expanded vertices, in vertex order."""
    return tuple(eg.factor_of[v] for v in eg.graph.vertices)


def cyclic_expansion(g: SimplicialGraph, orders: Mapping[Hashable, int]) -> ExpandedGraph:
    """Expansion of a graph already labelled by cyclic prime-power orders."""
    for v, o in orders.items():
        if o != INFINITE and not is_prime_power(o):
            raise LabelError(f"order {o} at {v!r} is not 0 or a prime power")
    return expand_graph(g, {v: cyclic(orders[v]) for v in g.vertices})
