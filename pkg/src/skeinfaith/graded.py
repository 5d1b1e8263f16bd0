"""Associated graded skein algebra Gr S(Sigma) and its action on Gr S(F).

Basis elements of Gr S(Sigma) are indexed by DT coordinates (n, t) and those
of Gr S(F) by edge coordinates m.  On triangular basis elements both the
product and the action are monomial: a single basis element times a signed
power of q, so everything here is exponent bookkeeping plus bilinear
extension.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .qring import Coeff, RingCtx
from .surface import (
    CoordinateError,
    DTCoord,
    Triangulation,
    compute_thurston_form,
    gamma_violation,
    lambda_violation,
    omega,
    pairing_q,
    triangular_violation,
)


class NotTriangularError(CoordinateError):
    """The graded product/action is only known on triangular basis elements."""


def _dot(t: Sequence[int], m: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(t, m))


def _require_triangular(tri: Triangulation, c: DTCoord) -> None:
    reason = triangular_violation(tri, c)
    if reason is not None:
        raise NotTriangularError(f"{c} is not triangular: {reason}")


def _require_lambda(tri: Triangulation, m: Sequence[int]) -> None:
    reason = lambda_violation(tri, m)
    if reason is not None:
        raise CoordinateError(f"{list(m)} is not in Lambda: {reason}")


def unit_exponent(c: DTCoord) -> tuple[int, int]:
    """(sign, exponent) of u(n, t) = (-q^2)^<t> q^(t.n)."""
    total_twist = sum(c.t)
    sign = -1 if total_twist % 2 else 1
    return sign, 2 * total_twist + _dot(c.t, c.n)


def unit_u(c: DTCoord, ctx: RingCtx | None = None) -> Coeff:
    sign, exp = unit_exponent(c)
    return (ctx or RingCtx.generic()).monomial(exp, sign)


def product_exponent(form: np.ndarray, x: DTCoord, y: DTCoord) -> int:
    return pairing_q(form, x.n, y.n) + _dot(x.t, y.n) - _dot(y.t, x.n)


def product_basis(tri: Triangulation, x: DTCoord, y: DTCoord,
                  ctx: RingCtx | None = None) -> tuple[Coeff, DTCoord]:
    """C(n,t) C(n',t') = q^(<n,n'>_Q + t.n' - t'.n) C(n+n', t+t') for triangular inputs."""
    _require_triangular(tri, x)
    _require_triangular(tri, y)
    exp = product_exponent(_form(tri), x, y)
    return (ctx or RingCtx.generic()).monomial(exp), x + y


def act_exponent(form: np.ndarray, x: DTCoord, m: Sequence[int]) -> tuple[int, int]:
    """(sign, exponent) of u(n,t) q^(2 t.m) q^<n,m>_Q."""
    sign, exp = unit_exponent(x)
    return sign, exp + 2 * _dot(x.t, m) + pairing_q(form, x.n, m)


def act_basis(tri: Triangulation, x: DTCoord, m: Sequence[int],
              ctx: RingCtx | None = None) -> tuple[Coeff, tuple[int, ...]]:
    _require_triangular(tri, x)
    _require_lambda(tri, m)
    sign, exp = act_exponent(_form(tri), x, m)
    return (ctx or RingCtx.generic()).monomial(exp, sign), tuple(a + b for a, b in zip(x.n, m))


def twist_reduce(tri: Triangulation, c: DTCoord,
                 ctx: RingCtx | None = None) -> tuple[Coeff, tuple[int, ...]]:
    """C(n,t) * 1 = u(n,t) S(n)."""
    _require_triangular(tri, c)
    return unit_u(c, ctx), c.n


def single_twist_reduce(tri: Triangulation, c: DTCoord, e: int,
                        ctx: RingCtx | None = None) -> tuple[Coeff, DTCoord]:
    """Clear the twist along one edge: C(n,t) * 1 = (-q^(n(e)+2))^t(e*) C(n,t') * 1."""
    _require_triangular(tri, c)
    k = c.t[e]
    sign = -1 if k % 2 else 1
    t = list(c.t)
    t[e] = 0
    return (ctx or RingCtx.generic()).monomial((c.n[e] + 2) * k, sign), DTCoord(c.n, tuple(t))


def coordinate_stabilize(tri: Triangulation, c: DTCoord) -> int | None:
    """Least k with n + k*omega satisfying every triangle inequality.

    Returns None when some n(e) = 0 carries a nonzero twist: adding boundary
    curves at the coordinate level cannot repair that.
    """
    reason = gamma_violation(tri, c)
    if reason is not None:
        raise CoordinateError(f"not in Gamma: {reason}")
    if any(x == 0 and t != 0 for x, t in zip(c.n, c.t)):
        return None
    # n(a) + 2k <= n(b) + n(c) + 4k  <=>  k >= (n(a) - n(b) - n(c)) / 2, an even numerator by parity
    need = 0
    for a, b, d in tri.faces:
        for x, y, z in ((a, b, d), (b, d, a), (d, a, b)):
            need = max(need, -(-(c.n[x] - c.n[y] - c.n[z]) // 2))
    shifted = DTCoord(tuple(x + need * w for x, w in zip(c.n, omega(tri))), c.t)
    assert triangular_violation(tri, shifted) is None
    return need


# ---------------------------------------------------------------------------
# elements


def _collect(pairs: Iterable[tuple[object, Coeff]], ctx: RingCtx) -> dict:
    out: dict = {}
    for key, c in pairs:
        c = ctx(c)
        if key in out:
            out[key] = out[key] + c
        else:
            out[key] = c
    return {k: v for k, v in out.items() if not v.is_zero()}


@dataclass(frozen=True, eq=False)
class GradedSurfaceElem:
    """A finite sum of basis elements of Gr S(Sigma)."""

    tri: Triangulation
    ctx: RingCtx
    terms: Mapping[DTCoord, Coeff] = field(default_factory=dict)

    def __post_init__(self):
        terms = _collect(self.terms.items(), self.ctx)
        for c in terms:
            if len(c.n) != self.tri.edges:
                raise CoordinateError(f"{c} has {len(c.n)} entries, triangulation has {self.tri.edges} edges")
            reason = gamma_violation(self.tri, c)
            if reason is not None:
                raise CoordinateError(f"{c} is not in Gamma: {reason}")
        object.__setattr__(self, "terms", dict(sorted(terms.items(), key=lambda kv: kv[0].sort_key(), reverse=True)))

    @classmethod
    def basis(cls, tri: Triangulation, c: DTCoord, ctx: RingCtx | None = None, coeff=1) -> GradedSurfaceElem:
        ctx = ctx or RingCtx.generic()
        return cls(tri, ctx, {c: ctx(coeff)})

    @classmethod
    def zero(cls, tri: Triangulation, ctx: RingCtx | None = None) -> GradedSurfaceElem:
        return cls(tri, ctx or RingCtx.generic(), {})

    def _check_parent(self, other) -> None:
        if self.tri != other.tri:
            raise ValueError("elements live over different triangulations")
        if self.ctx != other.ctx:
            raise ValueError(f"ring mismatch: {self.ctx} vs {other.ctx}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero element has no degree")
        return max(c.degree for c in self.terms)

    def leading_term(self) -> tuple[DTCoord, Coeff]:
        """Largest key in the graded-lex order (total n, n, t)."""
        if not self.terms:
            raise ValueError("the zero element has no leading term")
        return next(iter(self.terms.items()))

    def is_triangular(self) -> bool:
        return all(triangular_violation(self.tri, c) is None for c in self.terms)

    def __add__(self, other: GradedSurfaceElem) -> GradedSurfaceElem:
        self._check_parent(other)
        return GradedSurfaceElem(self.tri, self.ctx, _collect([*self.terms.items(), *other.terms.items()], self.ctx))

    def __neg__(self) -> GradedSurfaceElem:
        return GradedSurfaceElem(self.tri, self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: GradedSurfaceElem) -> GradedSurfaceElem:
        return self + (-other)

    def scale(self, c) -> GradedSurfaceElem:
        c = self.ctx(c)
        return GradedSurfaceElem(self.tri, self.ctx, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GradedSurfaceElem):
            return product(self, other)
        if isinstance(other, GradedHandlebodyElem):
            return act(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedSurfaceElem):
            return NotImplemented
        return self.tri == other.tri and self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.tri, self.ctx, frozenset(self.terms.items())))

    def __str__(self) -> str:
        from .formats import format_surface_elem
        return format_surface_elem(self)

    __repr__ = __str__


@dataclass(frozen=True, eq=False)
class GradedHandlebodyElem:
    """A finite sum of basis elements S(m) of Gr S(F)."""

    tri: Triangulation
    ctx: RingCtx
    terms: Mapping[tuple[int, ...], Coeff] = field(default_factory=dict)

    def __post_init__(self):
        terms = _collect(((tuple(int(x) for x in k), v) for k, v in self.terms.items()), self.ctx)
        for m in terms:
            _require_lambda(self.tri, m)
        object.__setattr__(self, "terms", dict(sorted(terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)))

    @classmethod
    def basis(cls, tri: Triangulation, m: Sequence[int], ctx: RingCtx | None = None, coeff=1) -> GradedHandlebodyElem:
        ctx = ctx or RingCtx.generic()
        return cls(tri, ctx, {tuple(m): ctx(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero element has no degree")
        return max(sum(m) for m in self.terms)

    def __add__(self, other: GradedHandlebodyElem) -> GradedHandlebodyElem:
        if self.tri != other.tri or self.ctx != other.ctx:
            raise ValueError("elements live in different modules")
        return GradedHandlebodyElem(self.tri, self.ctx, _collect([*self.terms.items(), *other.terms.items()], self.ctx))

    def __neg__(self) -> GradedHandlebodyElem:
        return GradedHandlebodyElem(self.tri, self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> GradedHandlebodyElem:
        c = self.ctx(c)
        return GradedHandlebodyElem(self.tri, self.ctx, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedHandlebodyElem):
            return NotImplemented
        return self.tri == other.tri and self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.tri, self.ctx, frozenset(self.terms.items())))

    def __str__(self) -> str:
        from .formats import format_handlebody_elem
        return format_handlebody_elem(self)

    __repr__ = __str__


@lru_cache(maxsize=64)
def _form(tri: Triangulation) -> np.ndarray:
    return compute_thurston_form(tri)


def product(x: GradedSurfaceElem, y: GradedSurfaceElem) -> GradedSurfaceElem:
    """Bilinear extension of the triangular product formula."""
    x._check_parent(y)
    tri, ctx = x.tri, x.ctx
    for c in (*x.terms, *y.terms):
        _require_triangular(tri, c)
    form = _form(tri)
    pairs = []
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            pairs.append((a + b, ca * cb * ctx.monomial(product_exponent(form, a, b))))
    return GradedSurfaceElem(tri, ctx, _collect(pairs, ctx))


def act(x: GradedSurfaceElem, v: GradedHandlebodyElem) -> GradedHandlebodyElem:
    """Bilinear extension of the action of triangular basis elements on S(m)."""
    if x.tri != v.tri or x.ctx != v.ctx:
        raise ValueError("surface element and handlebody element live over different data")
    tri, ctx = x.tri, x.ctx
    for c in x.terms:
        _require_triangular(tri, c)
    form = _form(tri)
    pairs = []
    for a, ca in x.terms.items():
        for m, cm in v.terms.items():
            sign, exp = act_exponent(form, a, m)
            pairs.append((tuple(p + r for p, r in zip(a.n, m)), ca * cm * ctx.monomial(exp, sign)))
    return GradedHandlebodyElem(tri, ctx, _collect(pairs, ctx))
