"""Temperley-Lieb state sums straight from the Kauffman relations.

Diagrams live in a rectangle with ``n`` endpoints on the bottom and ``n`` on
the top.  Boundary points are numbered 0..n-1 along the bottom and n..2n-1
along the top, both left to right.  A diagram word is read top to bottom:
the first generator sits above the second, matching the stacking product.

Nothing here knows about the graded formulas, which makes it an independent
check of them.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .qring import LaurentPoly

Q = LaurentPoly.monomial(1)
LOOP = LaurentPoly({2: -1, -2: -1})  # value of a trivial loop, -q^2 - q^-2


class DiagramError(ValueError):
    """Malformed matching or diagram word."""


@dataclass(frozen=True)
class PlanarMatching:
    """A non-crossing perfect matching: ``partner[p]`` is the point joined to ``p``."""

    n: int
    partner: tuple[int, ...]

    def __post_init__(self):
        p = self.partner
        if len(p) != 2 * self.n:
            raise DiagramError(f"matching on {self.n} strands needs {2 * self.n} entries")
        for i, j in enumerate(p):
            if not 0 <= j < 2 * self.n or j == i or p[j] != i:
                raise DiagramError(f"point {i} is not matched consistently")
        # around the boundary circle: bottom left->right, then top right->left
        pos = [i if i < self.n else 3 * self.n - 1 - i for i in range(2 * self.n)]
        chords = {tuple(sorted((pos[i], pos[j]))) for i, j in enumerate(p)}
        for (a, b), (c, d) in itertools.combinations(chords, 2):
            if a < c < b < d or c < a < d < b:
                raise DiagramError("matching is not planar")

    @classmethod
    def identity(cls, n: int) -> PlanarMatching:
        return cls(n, tuple(list(range(n, 2 * n)) + list(range(n))))

    @classmethod
    def cap_cup(cls, n: int, i: int) -> PlanarMatching:
        """e_i for 1 <= i <= n-1: joins strands i and i+1 at the bottom and at the top."""
        if not 1 <= i <= n - 1:
            raise DiagramError(f"cap-cup index {i} out of range 1..{n - 1}")
        p = list(range(n, 2 * n)) + list(range(n))
        a, b = i - 1, i
        p[a], p[b] = b, a
        p[n + a], p[n + b] = n + b, n + a
        return cls(n, tuple(p))

    def is_identity(self) -> bool:
        return self == PlanarMatching.identity(self.n)

    def through_strands(self) -> int:
        return sum(1 for i in range(self.n) if self.partner[i] >= self.n)

    def __str__(self) -> str:
        chords = sorted({tuple(sorted((i, j))) for i, j in enumerate(self.partner)})
        return "{" + ",".join(f"{a}-{b}" for a, b in chords) + "}"


def _trace(adj: Mapping[object, list], outer: Sequence) -> tuple[dict, int]:
    """Follow degree-<=2 paths.  Returns outer-point pairing and the number of closed loops."""
    outer_set = set(outer)
    pairing: dict = {}
    seen = set()
    for start in outer:
        if start in pairing:
            continue
        (cur,) = adj[start]
        prev = start
        seen.update((start, cur))
        while cur not in outer_set:
            nbrs = list(adj[cur])
            nbrs.remove(prev)
            prev, cur = cur, nbrs[0]
            seen.add(cur)
        pairing[start], pairing[cur] = cur, start
    loops = 0
    for v in adj:
        if v in seen:
            continue
        loops += 1
        stack = [v]
        while stack:
            u = stack.pop()
            if u not in seen:
                seen.add(u)
                stack.extend(adj[u])
    return pairing, loops


def compose(top: PlanarMatching, bottom: PlanarMatching) -> tuple[PlanarMatching, int]:
    """Stack ``top`` above ``bottom``.  Returns the matching and the number of loops closed off."""
    if top.n != bottom.n:
        raise DiagramError(f"strand counts differ: {top.n} vs {bottom.n}")
    n = top.n
    adj: dict = {}

    def link(u, v):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    for i, j in enumerate(top.partner):
        if i < j:
            link(("T", i), ("T", j))
    for i, j in enumerate(bottom.partner):
        if i < j:
            link(("B", i), ("B", j))
    for i in range(n):
        link(("T", i), ("B", n + i))  # top's bottom edge meets bottom's top edge
    outer = [("B", i) for i in range(n)] + [("T", n + i) for i in range(n)]
    pairing, loops = _trace(adj, outer)
    index = {v: k for k, v in enumerate(outer)}
    return PlanarMatching(n, tuple(index[pairing[v]] for v in outer)), loops


def close_strand(m: PlanarMatching, pos: int) -> tuple[PlanarMatching, int]:
    """Join top and bottom endpoints of strand ``pos`` (0-based) by a small arc to its right."""
    n = m.n
    adj: dict = {}

    def link(u, v):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    for i, j in enumerate(m.partner):
        if i < j:
            link(i, j)
    link(pos, n + pos)
    outer = [i for i in range(n) if i != pos] + [n + i for i in range(n) if i != pos]
    pairing, loops = _trace(adj, outer)
    index = {v: k for k, v in enumerate(outer)}
    return PlanarMatching(n - 1, tuple(index[pairing[v]] for v in outer)), loops


@lru_cache(maxsize=None)
def basis_matchings(n: int) -> tuple[PlanarMatching, ...]:
    """All non-crossing matchings on n strands (Catalan many)."""

    def circle(points: tuple[int, ...]) -> Iterable[list[tuple[int, int]]]:
        if not points:
            yield []
            return
        first = points[0]
        for k in range(1, len(points), 2):
            inner, outer = points[1:k], points[k + 1:]
            for a in circle(inner):
                for b in circle(outer):
                    yield [(first, points[k])] + a + b

    order = list(range(n)) + list(range(2 * n - 1, n - 1, -1))
    out = []
    for chords in circle(tuple(order)):
        p = [0] * (2 * n)
        for a, b in chords:
            p[a], p[b] = b, a
        out.append(PlanarMatching(n, tuple(p)))
    return tuple(out)


class TLElement:
    """Formal sum of planar matchings with Laurent polynomial coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[PlanarMatching, LaurentPoly] | None = None):
        self.n = n
        clean = {}
        for m, c in (terms or {}).items():
            if m.n != n:
                raise DiagramError(f"matching on {m.n} strands in a {n}-strand element")
            if not c.is_zero():
                clean[m] = c
        self.terms = clean

    @classmethod
    def of(cls, m: PlanarMatching, coeff: LaurentPoly | int = 1) -> TLElement:
        if isinstance(coeff, int):
            coeff = LaurentPoly.constant(coeff)
        return cls(m.n, {m: coeff})

    @classmethod
    def identity(cls, n: int) -> TLElement:
        return cls.of(PlanarMatching.identity(n))

    @classmethod
    def e(cls, n: int, i: int) -> TLElement:
        return cls.of(PlanarMatching.cap_cup(n, i))

    def coefficient(self, m: PlanarMatching) -> LaurentPoly:
        return self.terms.get(m, LaurentPoly())

    def __add__(self, other: TLElement) -> TLElement:
        if self.n != other.n:
            raise DiagramError("strand counts differ")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return TLElement(self.n, out)

    def __neg__(self) -> TLElement:
        return TLElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: TLElement) -> TLElement:
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> TLElement:
        return TLElement(self.n, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TLElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{m}" for m, c in sorted(self.terms.items(), key=lambda kv: kv[0].partner))


def multiply(a: TLElement, b: TLElement) -> TLElement:
    """Stacking product, ``a`` above ``b``; every closed loop contributes -q^2 - q^-2."""
    if a.n != b.n:
        raise DiagramError(f"strand counts differ: {a.n} vs {b.n}")
    out: dict[PlanarMatching, LaurentPoly] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m, loops = compose(ma, mb)
            c = ca * cb * LOOP ** loops
            out[m] = out[m] + c if m in out else c
    return TLElement(a.n, out)


# ---------------------------------------------------------------------------
# diagram words


@dataclass(frozen=True)
class Crossing:
    i: int
    sign: int = 1


@dataclass(frozen=True)
class CapCup:
    i: int


@dataclass(frozen=True)
class Kink:
    strand: int
    sign: int = 1


_TOKEN = re.compile(r"^(?:s(?P<s>\d+)(?P<neg>')?|e(?P<e>\d+)|k(?P<k>\d+)?(?P<ks>[+-]))$")


@dataclass(frozen=True)
class DiagramWord:
    n: int
    gens: tuple

    def __post_init__(self):
        if self.n < 1:
            raise DiagramError("strand count must be positive")
        for g in self.gens:
            if isinstance(g, (Crossing, CapCup)):
                if not 1 <= g.i <= self.n - 1:
                    raise DiagramError(f"{g} index out of range 1..{self.n - 1}")
            elif isinstance(g, Kink):
                if not 1 <= g.strand <= self.n:
                    raise DiagramError(f"{g} strand out of range 1..{self.n}")
            else:
                raise DiagramError(f"unknown generator {g!r}")
            if isinstance(g, (Crossing, Kink)) and g.sign not in (1, -1):
                raise DiagramError(f"{g} sign must be +1 or -1")

    @classmethod
    def parse(cls, text: str, n: int) -> DiagramWord:
        """Tokens ``si`` / ``si'`` (crossings), ``ei`` (cap-cup), ``k+`` / ``k-`` / ``kj+`` (kinks)."""
        gens = []
        for tok in text.split():
            m = _TOKEN.match(tok)
            if m is None:
                raise DiagramError(f"bad token {tok!r}")
            if m.group("s"):
                gens.append(Crossing(int(m.group("s")), -1 if m.group("neg") else 1))
            elif m.group("e"):
                gens.append(CapCup(int(m.group("e"))))
            else:
                gens.append(Kink(int(m.group("k") or 1), 1 if m.group("ks") == "+" else -1))
        return cls(n, tuple(gens))

    @property
    def crossings(self) -> list[int]:
        return [k for k, g in enumerate(self.gens) if isinstance(g, (Crossing, Kink))]


def _resolved(n: int, g, state: int) -> tuple[PlanarMatching, int]:
    """Matching and loop count of generator ``g`` under smoothing ``state`` (+1 carries q)."""
    if isinstance(g, CapCup):
        return PlanarMatching.cap_cup(n, g.i), 0
    if isinstance(g, Crossing):
        smooth_a = (state == g.sign)  # the A-smoothing keeps the strands vertical
        return (PlanarMatching.identity(n) if smooth_a else PlanarMatching.cap_cup(n, g.i)), 0
    # Kink: a crossing between the strand and an auxiliary strand to its right,
    # closed off by a small arc.
    j = g.strand
    inner = PlanarMatching.identity(n + 1) if state == g.sign else PlanarMatching.cap_cup(n + 1, j)
    return close_strand(inner, j)


def resolve(word: DiagramWord) -> TLElement:
    """Full state sum over all 2^|C| smoothings: sum q^|s| (-q^2-q^-2)^l(s) D_s'."""
    n = word.n
    cross = word.crossings
    out: dict[PlanarMatching, LaurentPoly] = {}
    for states in itertools.product((1, -1), repeat=len(cross)):
        sigma = dict(zip(cross, states))
        m = PlanarMatching.identity(n)
        loops = 0
        for k, g in enumerate(word.gens):
            piece, l0 = _resolved(n, g, sigma.get(k, 0))
            m, l1 = compose(m, piece)
            loops += l0 + l1
        c = Q ** sum(states) * LOOP ** loops
        out[m] = out[m] + c if m in out else c
    return TLElement(n, out)


def resolve_generator(n: int, g) -> TLElement:
    return resolve(DiagramWord(n, (g,)))


def resolve_sequential(word: DiagramWord) -> TLElement:
    """Same value as ``resolve`` computed generator by generator (distributivity)."""
    acc = TLElement.identity(word.n)
    for g in word.gens:
        acc = acc * resolve_generator(word.n, g)
    return acc


def twist_word(n: int) -> DiagramWord:
    """One positive kink followed by the positive crossings s1 ... s_{n-1}."""
    return DiagramWord(n, (Kink(1, 1),) + tuple(Crossing(i, 1) for i in range(1, n)))


def twist_lemma_coefficient(n: int) -> LaurentPoly:
    """Coefficient of the all-through-strands matching in the resolved twist diagram."""
    if n < 1:
        raise DiagramError("n must be >= 1")
    return resolve(twist_word(n)).coefficient(PlanarMatching.identity(n))
