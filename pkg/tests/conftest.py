from __future__ import annotations

import numpy as np
import pytest

from skeinfaith.graded import GradedHandlebodyElem, GradedSurfaceElem
from skeinfaith.qring import LaurentPoly, RingCtx
from skeinfaith.surface import DTCoord, Triangulation, lambda_member, preset, triangular_violation

PRESET_NAMES = ["torus", "genus2", "genus2-pants"]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(params=PRESET_NAMES)
def tri(request) -> Triangulation:
    return preset(request.param)


def random_lambda(tri: Triangulation, rng, bound: int = 8) -> tuple[int, ...]:
    while True:
        m = tuple(int(x) for x in rng.integers(0, bound + 1, size=tri.edges))
        if lambda_member(tri, m):
            return m


def random_triangular(tri: Triangulation, rng, bound: int = 8) -> DTCoord:
    while True:
        n = tuple(int(x) for x in rng.integers(0, bound + 1, size=tri.edges))
        t = tuple(int(x) if ni else 0 for x, ni in zip(rng.integers(-bound, bound + 1, size=tri.edges), n))
        c = DTCoord(n, t)
        try:
            if triangular_violation(tri, c) is None:
                return c
        except ValueError:
            continue


def random_coeff(rng, ctx: RingCtx):
    terms = {int(e): int(c) for e, c in zip(rng.integers(-4, 5, size=3), rng.integers(-3, 4, size=3))}
    p = LaurentPoly(terms)
    if p.is_zero():
        p = LaurentPoly.constant(1)
    c = ctx(p)
    return c if not c.is_zero() else ctx.one()


def random_surface_elem(tri, rng, ctx=None, max_terms=10, bound=8, nonzero=True) -> GradedSurfaceElem:
    ctx = ctx or RingCtx.generic()
    while True:
        k = int(rng.integers(1, max_terms + 1))
        terms = {random_triangular(tri, rng, bound): random_coeff(rng, ctx) for _ in range(k)}
        x = GradedSurfaceElem(tri, ctx, terms)
        if x or not nonzero:
            return x


def random_handlebody_elem(tri, rng, ctx=None, max_terms=4, bound=8) -> GradedHandlebodyElem:
    ctx = ctx or RingCtx.generic()
    k = int(rng.integers(1, max_terms + 1))
    return GradedHandlebodyElem(tri, ctx, {random_lambda(tri, rng, bound): random_coeff(rng, ctx) for _ in range(k)})


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
