"""Exact coefficient arithmetic in q.

Two coefficient rings are supported:

* ``LaurentPoly``: the generic ring Z[q, q^-1], stored sparsely as
  ``{exponent: coefficient}``.
* ``CyclotomicElem``: Z[q]/(Phi_N(q)), i.e. q specialised to a primitive
  N-th root of unity.  Quotienting by Phi_N rather than q^N - 1 keeps the
  ring a domain.

A ``RingCtx`` pins one of the two for a whole computation.  Values are
immutable; mixing rings in one operation raises ``RingMismatchError``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence, Union


class RingMismatchError(ValueError):
    """Operands live in different coefficient rings."""


def _clean(terms: Mapping[int, int]) -> dict[int, int]:
    return {k: v for k, v in terms.items() if v != 0}


class LaurentPoly:
    """An element of Z[q, q^-1] in canonical sparse form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = _clean(terms or {})
        self._hash = None

    # construction helpers
    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        return parse_laurent(text)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        """True exactly for +-q^k, the units of Z[q, q^-1]."""
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c in (1, -1)

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        if isinstance(other, CyclotomicElem):
            raise RingMismatchError("cannot mix a generic Laurent polynomial with a cyclotomic element")
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_unit():
                raise ValueError(f"{self} is not invertible")
            ((e, c),) = self._terms.items()
            return LaurentPoly({e * k: c ** -k})
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return format_terms(self.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def substitute(self, exponent_scale: int) -> LaurentPoly:
        """Return p(q^k) for k = ``exponent_scale``."""
        out: dict[int, int] = {}
        for e, c in self._terms.items():
            out[e * exponent_scale] = out.get(e * exponent_scale, 0) + c
        return LaurentPoly(out)


def format_terms(items: Sequence[tuple[int, int]]) -> str:
    """Render (exponent, coeff) pairs, highest exponent first, as ``c*q^k`` joined by +/-."""
    if not items:
        return "0"
    parts = []
    for i, (e, c) in enumerate(items):
        if i == 0:
            parts.append(f"{c}*q^{e}")
        elif c < 0:
            parts.append(f" - {-c}*q^{e}")
        else:
            parts.append(f" + {c}*q^{e}")
    return "".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<c1>\d+)\s*\*\s*q(?:\s*\^\s*(?P<e1>[+-]?\d+))?   # c*q^k
        | q(?:\s*\^\s*(?P<e2>[+-]?\d+))?                       # q^k
        | (?P<c3>\d+)                                          # c
        )\s*""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the ``-1*q^3 + 2*q^-1`` text format (``q``, ``q^k`` and bare integers also accepted)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial string")
    pos = 0
    out: dict[int, int] = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        if m.group("sign") is None and not first:
            raise ValueError(f"missing + or - between terms in {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("c1") is not None:
            c, e = int(m.group("c1")), int(m.group("e1") or 1)
        elif m.group("c3") is not None:
            c, e = int(m.group("c3")), 0
        else:
            c, e = 1, int(m.group("e2") or 1)
        out[e] = out.get(e, 0) + sign * c
        pos = m.end()
        first = False
    return LaurentPoly(out)


# ---------------------------------------------------------------------------
# cyclotomic specialisation


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials (ascending coefficient lists); ``den`` must be monic."""
    num = list(num)
    dlen = len(den)
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    if len(num) < dlen:
        return [0], num
    quot = [0] * (len(num) - dlen + 1)
    for i in range(len(num) - dlen, -1, -1):
        c = num[i + dlen - 1]
        if c:
            quot[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
    rem = num[: dlen - 1] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Phi_n as an ascending coefficient tuple."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]  # q^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


def _reduce(coeffs: Sequence[int], n: int) -> tuple[int, ...]:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    _, rem = _poly_divmod(list(coeffs), list(phi))
    rem = list(rem) + [0] * (deg - len(rem))
    return tuple(rem[:deg])


class CyclotomicElem:
    """An element of Z[q]/(Phi_N(q)), stored as its residue of degree < phi(N)."""

    __slots__ = ("order", "residue")

    def __init__(self, order: int, residue: Sequence[int]):
        self.order = order
        self.residue = _reduce(residue, order)

    @classmethod
    def from_laurent(cls, p: LaurentPoly, order: int) -> CyclotomicElem:
        if order < 1:
            raise ValueError("order must be >= 1")
        coeffs = [0] * order
        for e, c in p.terms.items():
            coeffs[e % order] += c
        return cls(order, coeffs)

    @classmethod
    def constant(cls, c: int, order: int) -> CyclotomicElem:
        return cls(order, [c])

    def _coerce(self, other):
        if isinstance(other, CyclotomicElem):
            if other.order != self.order:
                raise RingMismatchError(f"roots of unity of different orders {self.order} and {other.order}")
            return other
        if isinstance(other, int):
            return CyclotomicElem.constant(other, self.order)
        if isinstance(other, LaurentPoly):
            raise RingMismatchError("cannot mix a cyclotomic element with a generic Laurent polynomial")
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.residue)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicElem(self.order, [a + b for a, b in zip(self.residue, other.residue)])

    __radd__ = __add__

    def __neg__(self) -> CyclotomicElem:
        return CyclotomicElem(self.order, [-a for a in self.residue])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [0] * (len(self.residue) + len(other.residue))
        for i, a in enumerate(self.residue):
            if a:
                for j, b in enumerate(other.residue):
                    prod[i + j] += a * b
        return CyclotomicElem(self.order, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CyclotomicElem:
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use RingCtx.monomial")
        result = CyclotomicElem.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CyclotomicElem.constant(other, self.order)
        if not isinstance(other, CyclotomicElem):
            return NotImplemented
        return self.order == other.order and self.residue == other.residue

    def __hash__(self) -> int:
        return hash((self.order, self.residue))

    def is_unit(self) -> bool:
        # Units of Z[zeta_N] go beyond +-zeta^k; only the monomial case is detected.
        return any(self == CyclotomicElem.from_laurent(LaurentPoly.monomial(k, s), self.order)
                   for k in range(self.order) for s in (1, -1))

    def items(self):
        return [(e, c) for e, c in reversed(list(enumerate(self.residue))) if c]

    def __str__(self) -> str:
        return format_terms(self.items())

    def __repr__(self) -> str:
        return f"CyclotomicElem(N={self.order}, {str(self)!r})"


Coeff = Union[LaurentPoly, CyclotomicElem]


def specialize(p: LaurentPoly, n: int) -> CyclotomicElem:
    """Image of ``p`` under q -> primitive n-th root of unity."""
    return CyclotomicElem.from_laurent(p, n)


@dataclass(frozen=True)
class RingCtx:
    """Which coefficient ring a computation lives in.

    ``order`` is None for generic q, otherwise q is a primitive ``order``-th
    root of unity.
    """

    order: int | None = None

    def __post_init__(self):
        if self.order is not None and self.order < 1:
            raise ValueError(f"root-of-unity order must be positive, got {self.order}")

    @classmethod
    def generic(cls) -> RingCtx:
        return cls(None)

    @classmethod
    def root(cls, n: int) -> RingCtx:
        return cls(n)

    @classmethod
    def parse(cls, text: str) -> RingCtx:
        """Accepts ``generic`` or ``root:N``."""
        if text == "generic":
            return cls.generic()
        if text.startswith("root:"):
            return cls.root(int(text[5:]))
        raise ValueError(f"unknown ring {text!r}; expected 'generic' or 'root:N'")

    @property
    def is_generic(self) -> bool:
        return self.order is None

    def __str__(self) -> str:
        return "generic" if self.order is None else f"root:{self.order}"

    def __call__(self, x) -> Coeff:
        """Coerce an int, LaurentPoly or compatible CyclotomicElem into this ring."""
        if isinstance(x, int):
            x = LaurentPoly.constant(x)
        if isinstance(x, LaurentPoly):
            return x if self.order is None else specialize(x, self.order)
        if isinstance(x, CyclotomicElem):
            if self.order != x.order:
                raise RingMismatchError(f"element of root:{x.order} used in ring {self}")
            return x
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    def parse_coeff(self, text: str) -> Coeff:
        return self(parse_laurent(text))

    def zero(self) -> Coeff:
        return self(0)

    def one(self) -> Coeff:
        return self(1)

    def q(self) -> Coeff:
        return self(LaurentPoly.monomial(1))

    def monomial(self, exponent: int, sign: int = 1) -> Coeff:
        """sign * q^exponent, negative exponents allowed in both rings."""
        return self(LaurentPoly.monomial(exponent, sign))

    def owns(self, x) -> bool:
        if self.order is None:
            return isinstance(x, LaurentPoly)
        return isinstance(x, CyclotomicElem) and x.order == self.order


# ---------------------------------------------------------------------------
# integer polynomials in z and Chebyshev polynomials


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial in z; ``coeffs[i]`` multiplies z^i.  Trailing zeros are stripped."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = [f"{c}*z^{i}" for i, c in reversed(list(enumerate(self.coeffs))) if c]
        return " + ".join(parts).replace("+ -", "- ")


@lru_cache(maxsize=None)
def chebyshev(n: int) -> IntPoly:
    """T_0 = 2, T_1 = z, T_n = z T_{n-1} - T_{n-2}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return IntPoly((2,))
    if n == 1:
        return IntPoly((0, 1))
    a, b = chebyshev(n - 1).coeffs, chebyshev(n - 2).coeffs
    out = [0] * (n + 1)
    for i, c in enumerate(a):
        out[i + 1] += c
    for i, c in enumerate(b):
        out[i] -= c
    return IntPoly(tuple(out))


def eval_poly(p: IntPoly, x, ctx: RingCtx | None = None) -> Coeff:
    """Horner evaluation of ``p`` at ``x`` in the ring ``ctx`` (generic if omitted)."""
    ctx = ctx or RingCtx.generic()
    x = ctx(x)
    acc = ctx.zero()
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc
