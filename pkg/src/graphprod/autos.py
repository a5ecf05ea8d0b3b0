"""Endomorphisms of graph products of cyclic groups given by generator images.

The constructors build the standard automorphism families (partial
conjugations, factor automorphisms, dominated and commutator transvections,
graph symmetries, inner automorphisms).  ``validate_homomorphism`` checks the
defining relations on the images, ``is_ia`` decides membership in the kernel
of the action on the abelianization exactly, and ``find_conjugator`` looks for
an inner witness inside a bounded ball.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Hashable, Iterable, Mapping, Optional, Union

from .abelian import INFINITE
from .graph import star_complement_components
from .symmetry import Permutation
from .words import BALL_BOUND, Presentation, Word

MAX_EXPONENT = 2**16
DEFAULT_CONJUGATOR_RADIUS = 8

KINDS = (
    "partial_conjugation",
    "factor",
    "dominated_transvection",
    "commutator_transvection",
    "graph",
    "inner",
    "composite",
    "custom",
)


class AutError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorMap:
    images: Mapping[Hashable, Word]
    kind: str = "custom"
    params: tuple = ()

    def __call__(self, v) -> Word:
        return self.images[v]

    def __eq__(self, other):
        if not isinstance(other, GeneratorMap):
            return NotImplemented
        return dict(self.images) == dict(other.images)

    def __hash__(self):
        return hash(tuple(sorted(self.images.items())))

    def moved(self) -> dict:
        """Generators whose image is not themselves."""
        return {v: w for v, w in self.images.items() if w != ((v, 1),)}


@dataclass(frozen=True)
class RelationViolation:
    relation: str  # "power", "commute" or "undefined"
    vertices: tuple

    def __str__(self):
        if self.relation == "power":
            return f"image of {self.vertices[0]!r} does not satisfy its order relation"
        if self.relation == "commute":
            u, w = self.vertices
            return f"images of {u!r} and {w!r} do not commute"
        return f"no image for generator {self.vertices[0]!r}"


@dataclass(frozen=True)
class IaVerdict:
    in_ia: bool
    witness: Optional[Hashable] = None
    witness_vector: Optional[tuple] = field(default=None, compare=False)


def _map(p: Presentation, images: Mapping, kind: str, params: tuple) -> GeneratorMap:
    full = {v: p.normalize(images.get(v, ((v, 1),))) for v in p.generators}
    return GeneratorMap(full, kind, params)


def identity_map(p: Presentation) -> GeneratorMap:
    return _map(p, {}, "custom", ())


def custom_map(p: Presentation, images: Mapping) -> GeneratorMap:
    for v, w in images.items():
        if v not in p.orders:
            raise AutError(f"unknown generator {v!r}")
        _check_exponents(w)
    return _map(p, images, "custom", ())


def _check_exponents(w: Iterable) -> None:
    for _, e in w:
        if abs(e) > MAX_EXPONENT:
            raise AutError(f"exponent {e} exceeds 2^16")


def _legal_exponent(p: Presentation, v, exponent: int) -> int:
    if v not in p.orders:
        raise AutError(f"unknown generator {v!r}")
    o = p.order(v)
    e = exponent % o if o else exponent
    if e == 0:
        raise AutError(f"exponent {exponent} is trivial for generator {v!r} of order {o}")
    if abs(exponent) > MAX_EXPONENT:
        raise AutError(f"exponent {exponent} exceeds 2^16")
    return e


def make_partial_conjugation(p: Presentation, v, exponent: int, component: Iterable) -> GeneratorMap:
    """Conjugate the generators of one component of ``V - st(v)`` by ``v^exponent``."""
    e = _legal_exponent(p, v, exponent)
    comp = frozenset(component)
    comps = star_complement_components(p.graph, v)
    if comp not in comps:
        raise AutError(f"{sorted(comp)!r} is not a connected component of V - st({v!r})")
    x = ((v, e),)
    images = {w: p.conjugate(x, ((w, 1),)) for w in comp}
    return _map(p, images, "partial_conjugation", (v, e, tuple(sorted(comp))))


def partial_conjugations(p: Presentation, v, exponent: int) -> list[GeneratorMap]:
    """One partial conjugation per component of ``V - st(v)``."""
    return [
        make_partial_conjugation(p, v, exponent, c)
        for c in star_complement_components(p.graph, v)
    ]


def make_factor_automorphism(p: Presentation, v, multiplier: int) -> GeneratorMap:
    """``v -> v^multiplier``; the multiplier must be a unit modulo the order of ``v``."""
    if v not in p.orders:
        raise AutError(f"unknown generator {v!r}")
    o = p.order(v)
    if o == INFINITE:
        if multiplier not in (1, -1):
            raise AutError(f"multiplier {multiplier} is not a unit of Z")
    elif gcd(multiplier, o) != 1:
        raise AutError(f"multiplier {multiplier} is not a unit modulo {o}")
    return _map(p, {v: ((v, multiplier),)}, "factor", (v, multiplier))


def make_dominated_transvection(p: Presentation, u, v) -> GeneratorMap:
    """``u -> u v`` when ``st(u)`` is contained in ``st(v)``."""
    for x in (u, v):
        if x not in p.orders:
            raise AutError(f"unknown generator {x!r}")
    if u == v:
        raise AutError("dominated transvection needs u != v")
    g = p.graph
    if not g.star(u) <= g.star(v):
        raise AutError(f"st({u!r}) is not contained in st({v!r})")
    ou, ov = p.order(u), p.order(v)
    if ou != INFINITE and (ov == INFINITE or ou % ov):
        raise AutError(f"order of {v!r} ({ov}) must divide order of {u!r} ({ou})")
    return _map(p, {u: ((u, 1), (v, 1))}, "dominated_transvection", (u, v))


def commutator_transvection_obstruction(p: Presentation, u, v, w) -> Optional[str]:
    """Name of the first failed precondition, or None when ``(u, v, w)`` is admissible."""
    g = p.graph
    for x in (u, v, w):
        if x not in p.orders:
            return f"unknown generator {x!r}"
    if len({u, v, w}) != 3:
        return "u, v, w must be pairwise distinct"
    if p.order(u) != INFINITE:
        return f"{u!r} does not have infinite order"
    if g.adjacent(v, w):
        return f"{v!r} and {w!r} are adjacent"
    if not g.link(u) <= g.star(v):
        return f"lk({u!r}) is not contained in st({v!r})"
    if not g.link(u) <= g.star(w):
        return f"lk({u!r}) is not contained in st({w!r})"
    return None


def make_commutator_transvection(p: Presentation, u, v, w) -> GeneratorMap:
    """``u -> u [v, w]`` for infinite-order ``u`` with ``lk(u)`` inside ``st(v)`` and ``st(w)``."""
    why = commutator_transvection_obstruction(p, u, v, w)
    if why is not None:
        raise AutError(f"no commutator transvection: {why}")
    image = ((u, 1),) + p.commutator(((v, 1),), ((w, 1),))
    return _map(p, {u: image}, "commutator_transvection", (u, v, w))


def make_graph_automorphism(p: Presentation, sigma: Union[Permutation, Mapping]) -> GeneratorMap:
    if not isinstance(sigma, Permutation):
        sigma = Permutation({v: sigma.get(v, v) for v in p.generators})
    if not sigma.preserves(p.graph, p.orders):
        raise AutError("permutation does not preserve adjacency and orders")
    images = {v: ((sigma(v), 1),) for v in p.generators}
    return _map(p, images, "graph", tuple(sigma.images()))


def inner(p: Presentation, a: Iterable) -> GeneratorMap:
    """Conjugation ``g -> a g a^-1``."""
    a = p.normalize(a)
    images = {v: p.conjugate(a, ((v, 1),)) for v in p.generators}
    return GeneratorMap(images, "inner", (a,))


def apply(p: Presentation, f: GeneratorMap, w: Iterable) -> Word:
    parts: list = []
    for v, e in w:
        if abs(e) > MAX_EXPONENT:
            raise AutError(f"exponent {e} exceeds 2^16")
        parts.extend(p.power(f.images[v], e))
    return p.normalize(parts)


def compose(p: Presentation, f: GeneratorMap, g: GeneratorMap) -> GeneratorMap:
    """``f`` after ``g``."""
    images = {v: apply(p, f, g.images[v]) for v in p.generators}
    return GeneratorMap(images, "composite", (f.kind, g.kind))


def validate_homomorphism(p: Presentation, f: GeneratorMap) -> Optional[RelationViolation]:
    """First relation the images fail, or None if ``f`` defines an endomorphism."""
    for v in p.generators:
        if v not in f.images:
            return RelationViolation("undefined", (v,))
    for v in p.generators:
        o = p.order(v)
        if o != INFINITE and p.power(f.images[v], o):
            return RelationViolation("power", (v,))
    for u, w in p.graph.edge_list():
        if p.commutator(f.images[u], f.images[w]):
            return RelationViolation("commute", (u, w))
    return None


def is_ia(p: Presentation, f: GeneratorMap) -> IaVerdict:
    """Does ``f`` act trivially on the abelianization?"""
    bad = validate_homomorphism(p, f)
    if bad is not None:
        raise AutError(f"not a homomorphism: {bad}")
    for v in p.generators:
        vec = p.ab_vector(f.images[v])
        if vec != p.unit_vector(v):
            return IaVerdict(False, v, vec)
    return IaVerdict(True)


def find_conjugator(
    p: Presentation,
    f: GeneratorMap,
    max_radius: int = DEFAULT_CONJUGATOR_RADIUS,
) -> Optional[Word]:
    """Shortlex-least ``a`` in the ball of ``max_radius`` with ``f = inner(a)``.

    None means only that no witness exists within the ball.
    """
    bad = validate_homomorphism(p, f)
    if bad is not None:
        raise AutError(f"not a homomorphism: {bad}")
    targets = [((v, 1),) for v in p.generators]
    want = [f.images[v] for v in p.generators]
    for a in p.enumerate_ball(max_radius, bound=max(max_radius, BALL_BOUND)):
        inv = p.invert(a)
        if all(p.normalize(a + t + inv) == img for t, img in zip(targets, want)):
            return a
    return None

