"""
Products and the action on the handlebody module
================================================

On triangular basis elements the graded product and the action are
monomial.  This walks through the torus examples and then checks the
module axiom on a random genus-2 triple.
"""

import numpy as np

from skeinfaith.graded import GradedHandlebodyElem, GradedSurfaceElem, act, twist_reduce
from skeinfaith.qring import RingCtx
from skeinfaith.surface import DTCoord, preset

torus = preset("torus")


def C(n, t):
    return GradedSurfaceElem.basis(torus, DTCoord((n,), (t,)))


def S(m):
    return GradedHandlebodyElem.basis(torus, (m,))


print("C(1,0) C(1,1) =", C(1, 0) * C(1, 1))
print("(C(1,0) + C(1,1)) C(1,0) =", (C(1, 0) + C(1, 1)) * C(1, 0))
print("C(1,1) * S(2) =", act(C(1, 1), S(2)))
print("(C(1,0) - C(1,1)) * S(0) =", act(C(1, 0) - C(1, 1), S(0)))
coeff, n = twist_reduce(torus, DTCoord((2,), (3,)))
print(f"C(2,3) * 1 = ({coeff}) S({list(n)})")

# a random check of (xy) * v = x * (y * v) on the one-holed-torus preset
g2 = preset("genus2")
rng = np.random.default_rng(1)
x = GradedSurfaceElem(g2, RingCtx.generic(), {DTCoord((2, 1, 1), (int(rng.integers(-3, 4)), 0, 0)): 1})
y = GradedSurfaceElem(g2, RingCtx.generic(), {DTCoord((2, 2, 2), (1, -1, 2)): 1})
v = GradedHandlebodyElem.basis(g2, (1, 1, 0))
print("module axiom holds:", act(x * y, v) == act(x, act(y, v)))
