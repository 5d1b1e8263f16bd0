"""Combinatorial Dehn-Thurston data.

A closed genus-g surface is described by a compact surface F with boundary
(its double is the closed surface) together with a triangulation of F by
boundary-to-boundary arcs.  Only the combinatorics is stored: each face is
a triple of edge indices listed in counterclockwise order.  Adjacent faces
are glued orientation-reversingly, which determines the gluing.

The genus-1 case uses a degenerate convention: one edge, no faces.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np


class TriangulationError(ValueError):
    """A triangulation violates one of its invariants."""


class CoordinateError(ValueError):
    """A coordinate vector is outside the monoid an operation requires."""


@dataclass(frozen=True)
class Triangulation:
    genus: int
    edges: int
    faces: tuple[tuple[int, int, int], ...] = ()
    torus: bool = False

    def __post_init__(self):
        object.__setattr__(self, "faces", tuple(tuple(int(x) for x in f) for f in self.faces))
        self.validate()

    def validate(self) -> None:
        """Raise TriangulationError naming the first violated invariant."""
        g, k = self.genus, self.edges
        if g < 1:
            raise TriangulationError(f"genus must be >= 1, got {g}")
        if g == 1:
            if not self.torus:
                raise TriangulationError("genus 1 requires the torus flag")
            if k != 1:
                raise TriangulationError(f"torus convention has exactly 1 edge, got {k}")
            if self.faces:
                raise TriangulationError("torus convention has no faces")
            return
        if self.torus:
            raise TriangulationError(f"torus flag set for genus {g}")
        if k != 3 * (g - 1):
            raise TriangulationError(f"genus {g} needs {3 * (g - 1)} edges, got {k}")
        if len(self.faces) != 2 * (g - 1):
            raise TriangulationError(f"genus {g} needs {2 * (g - 1)} faces, got {len(self.faces)}")
        slots = [0] * k
        for i, face in enumerate(self.faces):
            if len(face) != 3:
                raise TriangulationError(f"face {i} does not have three sides")
            for e in face:
                if not 0 <= e < k:
                    raise TriangulationError(f"face {i} uses edge {e}, outside 0..{k - 1}")
            if len(set(face)) != 3:
                raise TriangulationError(f"face {i} repeats an edge (self-folded faces are not supported)")
            for e in face:
                slots[e] += 1
        for e, cnt in enumerate(slots):
            if cnt != 2:
                raise TriangulationError(f"edge {e} is a side of {cnt} face slots, expected 2")

    @classmethod
    def torus_datum(cls) -> Triangulation:
        return cls(genus=1, edges=1, faces=(), torus=True)

    @classmethod
    def genus2(cls, twisted: bool = True) -> Triangulation:
        """Genus-2 presets.

        ``twisted=True`` gives faces (a,b,c),(a,b,c): with orientation-reversing
        gluings F is a one-holed torus and Q is nonzero.  ``twisted=False``
        gives (a,b,c),(a,c,b): F is a pair of pants and Q vanishes.
        """
        faces = ((0, 1, 2), (0, 1, 2)) if twisted else ((0, 1, 2), (0, 2, 1))
        return cls(genus=2, edges=3, faces=faces)

    @property
    def is_torus(self) -> bool:
        return self.torus

    def to_json(self) -> dict:
        return {"genus": self.genus, "edges": self.edges,
                "faces": [list(f) for f in self.faces], "torus": self.torus}

    @classmethod
    def from_json(cls, data: dict) -> Triangulation:
        try:
            return cls(genus=int(data["genus"]), edges=int(data["edges"]),
                       faces=tuple(tuple(f) for f in data.get("faces", [])),
                       torus=bool(data.get("torus", False)))
        except KeyError as exc:
            raise TriangulationError(f"missing field {exc.args[0]!r}") from None


PRESETS = {
    "torus": Triangulation.torus_datum,
    "genus2": lambda: Triangulation.genus2(twisted=True),
    "genus2-pants": lambda: Triangulation.genus2(twisted=False),
}


def preset(name: str) -> Triangulation:
    try:
        return PRESETS[name]()
    except KeyError:
        raise TriangulationError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None


def random_triangulation(genus: int, rng: np.random.Generator) -> Triangulation:
    """A random combinatorially valid triangulation (each edge in two distinct-sided face slots)."""
    if genus == 1:
        return Triangulation.torus_datum()
    k = 3 * (genus - 1)
    while True:
        slots = rng.permutation(np.repeat(np.arange(k), 2))
        faces = tuple(tuple(int(x) for x in slots[i:i + 3]) for i in range(0, 2 * k, 3))
        if all(len(set(f)) == 3 for f in faces):
            return Triangulation(genus=genus, edges=k, faces=faces)


# ---------------------------------------------------------------------------
# Thurston form


def compute_thurston_form(tri: Triangulation) -> np.ndarray:
    """Q(a, b) = sum over faces of +1 if b follows a in the cyclic order, -1 if a follows b."""
    k = tri.edges
    q = np.zeros((k, k), dtype=np.int64)
    for a, b, c in tri.faces:
        for x, y in ((a, b), (b, c), (c, a)):
            q[x, y] += 1
            q[y, x] -= 1
    return q


def pairing_q(form: np.ndarray, n: Sequence[int], m: Sequence[int]) -> int:
    n = np.asarray(n, dtype=object)
    m = np.asarray(m, dtype=object)
    if form.shape != (len(n), len(m)):
        raise ValueError(f"dimension mismatch: form {form.shape}, vectors {len(n)} and {len(m)}")
    return int(n @ form.astype(object) @ m)


# ---------------------------------------------------------------------------
# coordinates


@dataclass(frozen=True, order=True)
class DTCoord:
    """Dehn-Thurston coordinates: intersection numbers ``n`` and twists ``t``."""

    n: tuple[int, ...]
    t: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(x) for x in self.n))
        object.__setattr__(self, "t", tuple(int(x) for x in self.t))
        if len(self.n) != len(self.t):
            raise CoordinateError(f"n has {len(self.n)} entries but t has {len(self.t)}")

    @classmethod
    def zero(cls, k: int) -> DTCoord:
        return cls((0,) * k, (0,) * k)

    def __add__(self, other: DTCoord) -> DTCoord:
        return DTCoord(tuple(a + b for a, b in zip(self.n, other.n)),
                       tuple(a + b for a, b in zip(self.t, other.t)))

    def scale(self, k: int) -> DTCoord:
        return DTCoord(tuple(k * a for a in self.n), tuple(k * a for a in self.t))

    @property
    def degree(self) -> int:
        return sum(self.n)

    def sort_key(self):
        """Graded lexicographic key: total intersection, then n, then t."""
        return (sum(self.n), self.n, self.t)

    def is_zero(self) -> bool:
        return not any(self.n) and not any(self.t)

    def __str__(self) -> str:
        return f"C({list(self.n)},{list(self.t)})".replace(" ", "")


def _as_tuple(m: Iterable[int]) -> tuple[int, ...]:
    return tuple(int(x) for x in m)


def _check_dim(tri: Triangulation, v: Sequence[int], what: str) -> None:
    if len(v) != tri.edges:
        raise CoordinateError(f"{what} has {len(v)} entries, triangulation has {tri.edges} edges")


def lambda_violation(tri: Triangulation, m: Sequence[int]) -> str | None:
    """Reason ``m`` is not in Lambda, or None if it is."""
    m = _as_tuple(m)
    _check_dim(tri, m, "edge coordinate")
    for e, x in enumerate(m):
        if x < 0:
            return f"negative entry m[{e}] = {x}"
    for i, (a, b, c) in enumerate(tri.faces):
        if (m[a] + m[b] + m[c]) % 2:
            return f"odd parity on face {i}: m[{a}]+m[{b}]+m[{c}] = {m[a] + m[b] + m[c]}"
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            if m[x] > m[y] + m[z]:
                return f"triangle inequality fails on face {i}: m[{x}] = {m[x]} > m[{y}] + m[{z}] = {m[y] + m[z]}"
    return None


def lambda_member(tri: Triangulation, m: Sequence[int]) -> bool:
    return lambda_violation(tri, m) is None


def gamma_violation(tri: Triangulation, c: DTCoord) -> str | None:
    _check_dim(tri, c.n, "DT coordinate")
    for e, x in enumerate(c.n):
        if x < 0:
            return f"negative intersection number n[{e}] = {x}"
    for i, (a, b, d) in enumerate(tri.faces):
        if (c.n[a] + c.n[b] + c.n[d]) % 2:
            return f"odd parity on face {i}"
    for e, (x, t) in enumerate(zip(c.n, c.t)):
        if x == 0 and t < 0:
            return f"n[{e}] = 0 but twist t[{e}] = {t} < 0"
    return None


def gamma_member(tri: Triangulation, c: DTCoord) -> bool:
    return gamma_violation(tri, c) is None


def triangular_violation(tri: Triangulation, c: DTCoord) -> str | None:
    """Reason a Gamma-member ``c`` is not triangular, or None.  Raises on non-Gamma input."""
    reason = gamma_violation(tri, c)
    if reason is not None:
        raise CoordinateError(f"not in Gamma: {reason}")
    for i, (a, b, d) in enumerate(tri.faces):
        for x, y, z in ((a, b, d), (b, d, a), (d, a, b)):
            if c.n[x] > c.n[y] + c.n[z]:
                return f"triangle inequality fails on face {i}: n[{x}] = {c.n[x]} > n[{y}] + n[{z}]"
    for e, (x, t) in enumerate(zip(c.n, c.t)):
        if x == 0 and t != 0:
            return f"n[{e}] = 0 but twist t[{e}] = {t} != 0"
    return None


def is_triangular(tri: Triangulation, c: DTCoord) -> bool:
    return triangular_violation(tri, c) is None


def twist(c: DTCoord, e: int, power: int = 1) -> DTCoord:
    """Apply the Dehn twist map along edge ``e`` ``power`` times (negative for the inverse)."""
    if c.n[e] <= 0:
        raise CoordinateError(f"twist along edge {e} needs n[{e}] > 0, got {c.n[e]}")
    t = list(c.t)
    t[e] += power
    return DTCoord(c.n, tuple(t))


def embed_edgecoord(tri: Triangulation, m: Sequence[int]) -> DTCoord:
    """A diagram in F has DT coordinates (m, 0)."""
    reason = lambda_violation(tri, m)
    if reason is not None:
        raise CoordinateError(f"not in Lambda: {reason}")
    m = _as_tuple(m)
    return DTCoord(m, (0,) * len(m))


def omega(tri: Triangulation) -> tuple[int, ...]:
    """Edge coordinates of the boundary of F: every arc meets it twice, once at each end."""
    return (2,) * tri.edges


def iter_lambda(tri: Triangulation, max_total: int) -> Iterator[tuple[int, ...]]:
    """All members of Lambda with coordinate sum <= ``max_total``, in graded-lex order."""
    k = tri.edges
    for total in range(max_total + 1):
        # compositions of ``total`` into k nonnegative parts
        for bars in itertools.combinations(range(total + k - 1), k - 1):
            prev, parts = -1, []
            for b in bars:
                parts.append(b - prev - 1)
                prev = b
            parts.append(total + k - 2 - prev)
            m = tuple(parts)
            if lambda_member(tri, m):
                yield m


def lambda_generators(tri: Triangulation) -> list[tuple[int, ...]]:
    """A generating set of Lambda.

    Torus: {1}.  Otherwise the irreducible members with entries <= 2, which
    for the genus-2 presets are exactly the three corner vectors.
    """
    if tri.is_torus:
        return [(1,)]
    k = tri.edges
    members = [m for m in itertools.product(range(3), repeat=k) if any(m) and lambda_member(tri, m)]
    mset = set(members)
    gens = []
    for m in sorted(members, key=lambda v: (sum(v), v)):
        reducible = any(
            tuple(x - y for x, y in zip(m, g)) in mset for g in gens
        )
        if not reducible:
            gens.append(m)
    return gens


# ---------------------------------------------------------------------------
# normal curves


@dataclass(frozen=True)
class NormalData:
    """Corner-arc counts per face.

    ``corners[i] = (x_bc, x_ca, x_ab)`` for face ``(a, b, c)``: the number of
    arcs cutting off the corner between the two named sides.
    """

    tri: Triangulation
    corners: tuple[tuple[int, int, int], ...] = field(default=())
    longitudes: int = 0  # torus convention only

    def edge_coords(self) -> tuple[int, ...]:
        if self.tri.is_torus:
            return (self.longitudes,)
        m: list[int | None] = [None] * self.tri.edges
        for (a, b, c), (x_bc, x_ca, x_ab) in zip(self.tri.faces, self.corners):
            for side, val in ((a, x_ab + x_ca), (b, x_ab + x_bc), (c, x_bc + x_ca)):
                if m[side] is None:
                    m[side] = val
                elif m[side] != val:
                    raise CoordinateError(f"faces disagree on edge {side}: {m[side]} vs {val}")
        return tuple(int(x or 0) for x in m)


def normal_reconstruct(tri: Triangulation, m: Sequence[int]) -> NormalData:
    reason = lambda_violation(tri, m)
    if reason is not None:
        raise CoordinateError(f"not in Lambda: {reason}")
    m = _as_tuple(m)
    if tri.is_torus:
        return NormalData(tri, (), m[0])
    corners = []
    for a, b, c in tri.faces:
        corners.append(((m[b] + m[c] - m[a]) // 2,
                        (m[c] + m[a] - m[b]) // 2,
                        (m[a] + m[b] - m[c]) // 2))
    return NormalData(tri, tuple(corners))


def count_components(tri: Triangulation, m: Sequence[int]) -> int:
    """Number of closed curves in the normal multicurve with edge coordinates ``m``.

    Points on a side are indexed 0..m-1 along the counterclockwise direction of
    the face.  Corner arcs nest around their vertex, and the two occurrences of
    an edge are glued with reversed direction.
    """
    data = normal_reconstruct(tri, m)
    if tri.is_torus:
        return data.longitudes
    m = _as_tuple(m)

    # global point id for (edge, position in the frame of the edge's first slot)
    offset = np.concatenate([[0], np.cumsum(m)]).astype(int)
    seen: dict[int, int] = {}
    parent = list(range(int(offset[-1])))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def point(edge: int, slot_is_first: bool, pos: int) -> int:
        p = pos if slot_is_first else m[edge] - 1 - pos
        return int(offset[edge]) + p

    for (a, b, c), (x_bc, x_ca, x_ab) in zip(tri.faces, data.corners):
        first = {}
        for s in (a, b, c):
            first[s] = s not in seen
            seen.setdefault(s, 1)
        # corner at the vertex where side x ends and side y starts (ccw)
        for x, y, cnt in ((a, b, x_ab), (b, c, x_bc), (c, a, x_ca)):
            for j in range(cnt):
                p1 = point(x, first[x], m[x] - 1 - j)
                p2 = point(y, first[y], j)
                r1, r2 = find(p1), find(p2)
                if r1 != r2:
                    parent[r1] = r2
    return len({find(p) for p in range(int(offset[-1]))})


def vertex_classes(tri: Triangulation) -> int:
    """Number of ideal vertices (boundary components of F), from the face gluing alone."""
    if tri.is_torus:
        return 2
    # corner (face, i) sits between side i-1 ending and side i starting; gluing
    # edge e identifies its end-vertex in one slot with its start-vertex in the other.
    slots: dict[int, list[tuple[int, int]]] = {}
    for f, face in enumerate(tri.faces):
        for i, e in enumerate(face):
            slots.setdefault(e, []).append((f, i))
    parent = {(f, i): (f, i) for f in range(len(tri.faces)) for i in range(3)}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for e, ((f1, i1), (f2, i2)) in slots.items():
        # corner at start of side i is (f, i); at its end is (f, (i+1) % 3)
        union((f1, i1), (f2, (i2 + 1) % 3))
        union((f1, (i1 + 1) % 3), (f2, i2))
    return len({find(x) for x in parent})
