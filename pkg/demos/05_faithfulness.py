"""
Generic q versus roots of unity
===============================

For generic q a nonzero element is caught by some S(j m).  At a primitive
N-th root of unity, shifting one twist by N produces an element that kills
every S(m).
"""

from skeinfaith.faithful import chebyshev_witness, injectivity_certificate, kernel_witness
from skeinfaith.graded import GradedSurfaceElem
from skeinfaith.qring import LaurentPoly, RingCtx
from skeinfaith.surface import DTCoord, preset

torus = preset("torus")
q = LaurentPoly.monomial(1)

# C(1,0) + q^-3 C(1,1) vanishes on S(0), so the certificate has to move to S(m)
y = GradedSurfaceElem(torus, RingCtx.generic(), {DTCoord((1,), (0,)): 1, DTCoord((1,), (1,)): q**-3})
cert = injectivity_certificate(y)
print("y =", y)
print("probe", cert.probe, "samples", cert.samples, "determinant", cert.determinant)
print("exhibited value:", cert.action_value)

for name in ("torus", "genus2", "genus2-pants"):
    for order in (2, 3, 5):
        w = kernel_witness(order, preset(name))
        print(f"{name} N={order}: y = {w.element}; {len(w.probes)} probes, verified={w.verified}")

print("Chebyshev element, N=2:", chebyshev_witness(2, torus, DTCoord((0,), (1,))).element)
