"""Words in graph products of cyclic groups.

A word is a tuple of syllables ``(generator, exponent)``.  ``normalize``
returns the canonical representative of the element: a reduced word (no
syllable can be shuffled next to another syllable on the same generator),
linearised as the lexicographically least of its commuting shuffles.
Syllables compare by generator position, then exponent.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Mapping, Optional

from .abelian import INFINITE, ExpandedGraph, is_prime_power
from .graph import SimplicialGraph

Syllable = tuple  # (generator, exponent)
Word = tuple  # tuple of syllables

BALL_BOUND = 8
EPSILON: Word = ()


class WordError(ValueError):
    pass


class Presentation:
    """Graph product of cyclic groups: generators are the vertices of ``graph``."""

    def __init__(self, graph: SimplicialGraph, orders: Mapping[Hashable, int]):
        for v in graph.vertices:
            if v not in orders:
                raise WordError(f"no order for generator {v!r}")
            o = orders[v]
            if o != INFINITE and not is_prime_power(o):
                raise WordError(f"order of {v!r} must be 0 or a prime power, got {o}")
        self.graph = graph
        self.generators = graph.vertices
        self.orders = {v: orders[v] for v in graph.vertices}
        self._index = {v: i for i, v in enumerate(self.generators)}
        self._order = [self.orders[v] for v in self.generators]
        n = len(self.generators)
        self._commute = [[False] * n for _ in range(n)]
        for e in graph.edges:
            u, w = (self._index[x] for x in e)
            self._commute[u][w] = self._commute[w][u] = True

    @classmethod
    def from_expanded(cls, eg: ExpandedGraph) -> "Presentation":
        return cls(eg.graph, eg.factor_of)

    def __repr__(self):
        return f"Presentation({self.graph!r}, {self.orders!r})"

    def order(self, v) -> int:
        return self.orders[v]

    def commute(self, u, w) -> bool:
        return u == w or self.graph.adjacent(u, w)

    # -- internal index form ------------------------------------------------

    def _reduce(self, i: int, e: int) -> int:
        o = self._order[i]
        return e % o if o else e

    def _encode(self, w: Iterable) -> list[tuple[int, int]]:
        out = []
        for syl in w:
            try:
                v, e = syl
            except (TypeError, ValueError):
                raise WordError(f"malformed syllable {syl!r}") from None
            if v not in self._index:
                raise WordError(f"unknown generator {v!r}")
            out.append((self._index[v], int(e)))
        return out

    def _decode(self, w: list[tuple[int, int]]) -> Word:
        gens = self.generators
        return tuple((gens[i], e) for i, e in w)

    def _reduced(self, w: list[tuple[int, int]]) -> list[tuple[int, int]]:
        """Green-style left-to-right reduction; keeps a reduced word at every step."""
        comm = self._commute
        out: list[tuple[int, int]] = []
        for i, e in w:
            e = self._reduce(i, e)
            if e == 0:
                continue
            merged = False
            for j in range(len(out) - 1, -1, -1):
                k, f = out[j]
                if k == i:
                    m = self._reduce(i, f + e)
                    if m == 0:
                        del out[j]
                    else:
                        out[j] = (i, m)
                    merged = True
                    break
                if not comm[i][k]:
                    break
            if not merged:
                out.append((i, e))
        return out

    def _lex_least(self, w: list[tuple[int, int]]) -> list[tuple[int, int]]:
        """Least linearisation of the shuffle class of ``w``."""
        comm = self._commute
        n = len(w)
        blockers = [0] * n
        after: list[list[int]] = [[] for _ in range(n)]
        for q in range(n):
            for p in range(q):
                if not comm[w[p][0]][w[q][0]]:
                    blockers[q] += 1
                    after[p].append(q)
        ready = [q for q in range(n) if blockers[q] == 0]
        out = []
        while ready:
            q = min(ready, key=lambda t: w[t])
            ready.remove(q)
            out.append(w[q])
            for r in after[q]:
                blockers[r] -= 1
                if blockers[r] == 0:
                    ready.append(r)
        return out

    def _normal(self, w: list[tuple[int, int]]) -> list[tuple[int, int]]:
        return self._lex_least(self._reduced(w))

    # -- public operations --------------------------------------------------

    def normalize(self, w: Iterable) -> Word:
        return self._decode(self._normal(self._encode(w)))

    def multiply(self, a: Iterable, b: Iterable) -> Word:
        return self.normalize(tuple(a) + tuple(b))

    def invert(self, a: Iterable) -> Word:
        return self.normalize(tuple((v, -e) for v, e in reversed(tuple(a))))

    def power(self, a: Iterable, k: int) -> Word:
        base = self.normalize(a)
        if k < 0:
            base, k = self.invert(base), -k
        result: Word = EPSILON
        while k:
            if k & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            k >>= 1
        return result

    def conjugate(self, a: Iterable, w: Iterable) -> Word:
        """``a w a^-1``."""
        a = tuple(a)
        return self.normalize(a + tuple(w) + self.invert(a))

    def commutator(self, a: Iterable, b: Iterable) -> Word:
        """``a b a^-1 b^-1``."""
        a, b = tuple(a), tuple(b)
        return self.normalize(a + b + self.invert(a) + self.invert(b))

    def equals(self, a: Iterable, b: Iterable) -> bool:
        return self.normalize(a) == self.normalize(b)

    def is_identity(self, a: Iterable) -> bool:
        return not self.normalize(a)

    def syllable_key(self, syl: Syllable) -> tuple:
        return (self._index[syl[0]], syl[1])

    def shortlex_key(self, w: Word) -> tuple:
        return (len(w), tuple(self.syllable_key(s) for s in w))

    def enumerate_ball(self, radius: int, bound: int = BALL_BOUND) -> list[Word]:
        """All elements whose normal form has at most ``radius`` syllables, shortlex.

        Infinite-order exponents are restricted to ``[-radius, radius]``.
        """
        if radius < 0:
            raise WordError("radius must be nonnegative")
        if radius > bound:
            raise WordError(f"radius {radius} exceeds bound {bound}")
        alphabet = []
        for i, o in enumerate(self._order):
            exps = range(1, o) if o else [e for e in range(-radius, radius + 1) if e]
            alphabet.extend((i, e) for e in exps)
        levels = [[[]]]
        seen = {()}
        for k in range(1, radius + 1):
            layer = []
            for w in levels[-1]:
                for syl in alphabet:
                    nw = self._normal(w + [syl])
                    if len(nw) != k:
                        continue
                    key = tuple(nw)
                    if key not in seen:
                        seen.add(key)
                        layer.append(nw)
            levels.append(layer)
        ball = [self._decode(w) for layer in levels for w in layer]
        ball.sort(key=self.shortlex_key)
        return ball

    def ab_vector(self, w: Iterable) -> tuple:
        """Exponent sum per generator, reduced modulo finite orders."""
        vec = [0] * len(self.generators)
        for i, e in self._encode(w):
            vec[i] += e
        return tuple(self._reduce(i, x) for i, x in enumerate(vec))

    def unit_vector(self, v) -> tuple:
        return self.ab_vector(((v, 1),))

    # -- text form ----------------------------------------------------------

    def parse(self, text: str, resolve: Optional[Callable[[str], Hashable]] = None) -> Word:
        """Parse ``"a^2 b c^-1"``.  ``resolve`` maps a token name to a generator."""
        if resolve is None:
            names = {str(v): v for v in self.generators}

            def resolve(name):
                if name not in names:
                    raise WordError(f"unknown generator {name!r}")
                return names[name]

        out = []
        for tok in text.split():
            name, _, exp = tok.partition("^")
            if not name:
                raise WordError(f"malformed token {tok!r}")
            try:
                e = int(exp) if exp else 1
            except ValueError:
                raise WordError(f"bad exponent in {tok!r}") from None
            out.append((resolve(name), e))
        return tuple(out)

    def format(self, w: Word, name: Callable[[Hashable], str] = str) -> str:
        if not w:
            return "1"
        return " ".join(name(v) if e == 1 else f"{name(v)}^{e}" for v, e in w)
