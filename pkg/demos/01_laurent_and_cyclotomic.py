"""
Exact coefficients: Laurent polynomials and roots of unity
==========================================================

Everything is computed over Z[q, q^-1] or over Z[q]/Phi_N, where q is a
primitive N-th root of unity.  No floats appear anywhere.
"""

from skeinfaith.qring import LaurentPoly, RingCtx, chebyshev, eval_poly, parse_laurent, specialize

q = LaurentPoly.monomial(1)
loop = -(q**2) - q**-2
print("loop value:", loop)

# text round trip
p = parse_laurent("-1*q^3 + 2*q^-1")
print("parsed:", p, "| squared:", p * p)

# at a cube root of unity, 1 + q + q^2 vanishes
print("1 + q + q^2 at N=3 is zero:", specialize(1 + q + q**2, 3).is_zero())

# Chebyshev polynomials with T_0 = 2
for n in range(5):
    print(f"T_{n} coefficients:", chebyshev(n).coeffs)

# T_N(loop) collapses to 2(-1)^N only when q^N = 1
for order in (3, 4, 5):
    root = eval_poly(chebyshev(order), loop, RingCtx.root(order))
    generic = eval_poly(chebyshev(order), loop)
    print(f"N={order}: root of unity -> {root}, generic -> {generic}")
