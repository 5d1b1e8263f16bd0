"""Faithfulness certificates and kernel witnesses for the graded action.

Generic q: a nonzero triangular element y is shown to act nontrivially by
finding a probe m in Lambda that separates the twist exponents of one
n-group, then evaluating y on S(j*m) for j = 0..k-1.  The Vandermonde
determinant on the separated exponents guarantees one of those values is
nonzero.

Root of unity: shifting a twist coordinate by N changes every action
coefficient by q^(2N m(e)) = 1, so the difference of the two basis elements
(suitably normalised) annihilates the whole module.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .graded import (
    GradedHandlebodyElem,
    GradedSurfaceElem,
    NotTriangularError,
    act,
    unit_exponent,
)
from .qring import IntPoly, LaurentPoly, RingCtx, chebyshev, eval_poly
from .surface import (
    CoordinateError,
    DTCoord,
    Triangulation,
    gamma_violation,
    iter_lambda,
    lambda_generators,
    omega,
    triangular_violation,
)


class ProbeError(ValueError):
    """find_probe preconditions fail."""


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    mat = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col] / mat[rank][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def vandermonde_determinant(s: Sequence[int]) -> int:
    """det [s_i^j] = prod_{i<j} (s_j - s_i)."""
    det = 1
    for i, j in itertools.combinations(range(len(s)), 2):
        det *= s[j] - s[i]
    return det


def q_vandermonde_determinant(s: Sequence[int]) -> LaurentPoly:
    """det [(q^s_i)^j] = prod_{i<j} (q^s_j - q^s_i), nonzero iff the s_i are distinct."""
    det = LaurentPoly.constant(1)
    for i, j in itertools.combinations(range(len(s)), 2):
        det = det * (LaurentPoly.monomial(s[j]) - LaurentPoly.monomial(s[i]))
    return det


def find_probe(exponents: Sequence[Sequence[int]],
               lambda_gens: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """A nonnegative combination m of the generators with pairwise distinct n_i . m.

    Combinations are tried by total size, then lexicographically over
    generator multisets.  The search terminates because finitely many
    hyperplanes cannot cover a full-rank cone.
    """
    vecs = [tuple(int(x) for x in v) for v in exponents]
    if not vecs:
        raise ProbeError("need at least one exponent vector")
    if len(set(vecs)) != len(vecs):
        raise ProbeError("exponent vectors are not pairwise distinct")
    r = len(vecs[0])
    gens = [tuple(int(x) for x in g) for g in lambda_gens]
    if any(len(v) != r for v in vecs) or any(len(g) != r for g in gens):
        raise ProbeError("dimension mismatch between exponents and generators")
    if not gens or integer_rank(gens) != r:
        raise ProbeError(f"generators span rank {integer_rank(gens) if gens else 0}, need {r}")
    for size in itertools.count():
        for combo in itertools.combinations_with_replacement(range(len(gens)), size):
            m = [0] * r
            for g in combo:
                m = [a + b for a, b in zip(m, gens[g])]
            dots = [sum(a * b for a, b in zip(v, m)) for v in vecs]
            if len(set(dots)) == len(dots):
                return tuple(m)
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class Certificate:
    """Evidence that a nonzero triangular element acts nontrivially at generic q."""

    group_n: tuple[int, ...]
    probe: tuple[int, ...]
    exponents: tuple[int, ...]
    determinant: int
    q_determinant: LaurentPoly
    witness_multiple: int
    action_value: GradedHandlebodyElem
    samples: tuple[tuple[int, bool], ...] = ()

    @property
    def verified(self) -> bool:
        return self.determinant != 0 and not self.q_determinant.is_zero() and not self.action_value.is_zero()


def injectivity_certificate(y: GradedSurfaceElem) -> Certificate | None:
    """None iff y = 0; otherwise a Certificate whose exhibited action value is nonzero."""
    if not y.ctx.is_generic:
        raise ValueError("injectivity certificates need generic q; use kernel_witness at roots of unity")
    tri = y.tri
    for c in y.terms:
        reason = triangular_violation(tri, c)
        if reason is not None:
            raise NotTriangularError(f"{c} is not triangular: {reason}")
    if y.is_zero():
        return None
    lead, _ = y.leading_term()
    group = [c for c in y.terms if c.n == lead.n]
    twist_exps = [tuple(2 * t for t in c.t) for c in group]
    m = find_probe(twist_exps, lambda_generators(tri))
    s = tuple(sum(a * b for a, b in zip(v, m)) for v in twist_exps)

    samples = []
    found = None
    for j in range(len(group)):
        probe = tuple(j * x for x in m)
        value = act(y, GradedHandlebodyElem.basis(tri, probe, y.ctx))
        target = tuple(a + b for a, b in zip(lead.n, probe))
        nonzero = target in value.terms
        samples.append((j, nonzero))
        if nonzero and found is None:
            found = (j, value)
    if found is None:
        raise AssertionError("Vandermonde argument failed: every sampled action coefficient vanished")
    return Certificate(
        group_n=lead.n,
        probe=m,
        exponents=s,
        determinant=vandermonde_determinant(s),
        q_determinant=q_vandermonde_determinant(s),
        witness_multiple=found[0],
        action_value=found[1],
        samples=tuple(samples),
    )


@dataclass(frozen=True)
class KernelWitness:
    order: int
    element: GradedSurfaceElem
    base: DTCoord
    edge: int
    residue_identity: str
    symbolic_ok: bool
    probes: tuple[tuple[int, ...], ...] = field(default=())
    failures: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def verified(self) -> bool:
        return self.symbolic_ok and not self.failures and not self.element.is_zero()


def kernel_witness(order: int, tri: Triangulation, base: DTCoord | None = None,
                   edge: int = 0, probe_bound: int = 10) -> KernelWitness:
    """y = C(n, t + N e*) - (u(n, t+N e*)/u(n, t)) C(n, t), which kills every S(m) when q^N = 1."""
    if order < 1:
        raise ValueError(f"root-of-unity order must be >= 1, got {order}")
    ctx = RingCtx.root(order)
    if base is None:
        w = omega(tri)
        base = DTCoord(w, (0,) * len(w))
    reason = triangular_violation(tri, base)
    if reason is not None:
        raise NotTriangularError(f"base {base} is not triangular: {reason}")
    if base.n[edge] <= 0:
        raise CoordinateError(f"need n[{edge}] > 0 to shift its twist")
    t = list(base.t)
    t[edge] += order
    shifted = DTCoord(base.n, tuple(t))

    s0, e0 = unit_exponent(base)
    s1, e1 = unit_exponent(shifted)
    ratio = ctx.monomial(e1 - e0, s0 * s1)
    y = GradedSurfaceElem(tri, ctx, {shifted: ctx.one(), base: -ratio})

    # On S(m) the two terms carry u(shifted) q^(2t.m + <n,m>_Q) times q^(2N m(e)) and 1
    # respectively, so they cancel for every m as soon as q^(2N) = 1.
    symbolic_ok = (ctx.monomial(2 * order) == ctx.one()
                   and ctx.monomial(e1, s1) - ratio * ctx.monomial(e0, s0) == ctx.zero())
    identity = f"q^{2 * order} = 1 mod Phi_{order}; u(shifted) = {ratio} * u(base)"

    probes, failures = [], []
    for m in iter_lambda(tri, probe_bound):
        probes.append(m)
        if not act(y, GradedHandlebodyElem.basis(tri, m, ctx)).is_zero():
            failures.append(m)
    return KernelWitness(order, y, base, edge, identity, symbolic_ok, tuple(probes), tuple(failures))


@dataclass(frozen=True)
class ChebyshevWitness:
    order: int
    alpha: DTCoord
    poly: IntPoly
    element: GradedSurfaceElem

    @property
    def nonzero(self) -> bool:
        top = self.alpha.scale(self.order)
        return self.element.terms.get(top) == self.element.ctx.one()


def chebyshev_witness(order: int, tri: Triangulation, alpha: DTCoord,
                      ctx: RingCtx | None = None) -> ChebyshevWitness:
    """T_N threaded along alpha, minus 2(-1)^N times the empty diagram.

    The k-th framed power of alpha has coordinates k*alpha.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    reason = gamma_violation(tri, alpha)
    if reason is not None:
        raise CoordinateError(f"alpha is not in Gamma: {reason}")
    if alpha.is_zero():
        raise CoordinateError("alpha must be a nonempty diagram")
    ctx = ctx or RingCtx.root(order)
    poly = chebyshev(order)
    terms: dict[DTCoord, object] = {}
    for k, c in enumerate(poly.coeffs):
        if c:
            terms[alpha.scale(k)] = ctx(c)
    empty = DTCoord.zero(tri.edges)
    terms[empty] = terms.get(empty, ctx.zero()) - 2 * (-1) ** order
    return ChebyshevWitness(order, alpha, poly, GradedSurfaceElem(tri, ctx, terms))


def verify_tn_loop_identity(order: int, ctx: RingCtx | None = None) -> bool:
    """T_N(-q^2 - q^-2) == 2(-1)^N, in Z[q]/Phi_N by default."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    ctx = ctx or RingCtx.root(order)
    loop = LaurentPoly({2: -1, -2: -1})
    return eval_poly(chebyshev(order), loop, ctx) == ctx(2 * (-1) ** order)
