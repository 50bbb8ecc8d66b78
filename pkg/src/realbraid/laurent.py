"""
Exact Laurent polynomials in one variable t over the rationals.

A polynomial is stored as a mapping exponent -> nonzero Fraction. Values are
immutable and hashable. Since the units of Q[t, 1/t] are the monomials c*t^k,
"equal up to units" is decided by comparing `normalize` outputs: minimum
exponent 0 and leading coefficient positive. Rational scalars are *not*
absorbed by `normalize`; use `monic` where that is wanted.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "T",
    "normalize",
    "monic",
    "primitive",
    "gcd",
    "divides_up_to_units",
    "multiplicity_of_factor",
    "product_of_binomials",
    "cyclotomic",
    "parse",
]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[int(e)] = c
        self._terms: dict[int, Fraction] = dict(sorted(clean.items()))
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: Scalar = 1) -> LaurentPoly:
        return cls({e: c})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar], low: int = 0) -> LaurentPoly:
        """Build c0*t^low + c1*t^(low+1) + ..."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        return len(self._terms) == 1

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(iter(self._terms))

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(reversed(self._terms))

    def span(self) -> int:
        """max_exp - min_exp; the Euclidean size function (-1 for zero)."""
        if not self._terms:
            return -1
        return self.max_exp() - self.min_exp()

    def leading(self) -> Fraction:
        return self._terms[self.max_exp()]

    def coeff(self, e: int) -> Fraction:
        return self._terms.get(e, Fraction(0))

    def coefficients(self) -> list[Fraction]:
        """Dense coefficient list from min_exp to max_exp."""
        if not self._terms:
            return []
        lo = self.min_exp()
        return [self.coeff(e) for e in range(lo, self.max_exp() + 1)]

    def __call__(self, x):
        return sum((c * x**e for e, c in self._terms.items()), Fraction(0))

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

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
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly({e * n: Fraction(1) / c ** (-n)})
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def scale(self, c: Scalar) -> LaurentPoly:
        return LaurentPoly({e: c * v for e, v in self._terms.items()})

    def substitute_inverse(self) -> LaurentPoly:
        """p(t) -> p(1/t)."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def divmod(self, other: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """
        Euclidean division: returns (q, r) with self = q*other + r and
        r.span() < other.span().
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ZERO, ZERO
        a_lo, b_lo = self.min_exp(), other.min_exp()
        rem = [c for c in self.shift(-a_lo).coefficients()]
        div = other.shift(-b_lo).coefficients()
        db, lead = len(div) - 1, div[-1]
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1 - db, -1, -1):
            c = rem[i + db] / lead
            if c:
                quot[i] = c
                for j, d in enumerate(div):
                    rem[i + j] -= c * d
        q = LaurentPoly.from_coeffs(quot, a_lo - b_lo)
        r = LaurentPoly.from_coeffs(rem[:db], a_lo)
        return q, r

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(_format_term(e, c) for e, c in self._terms.items())

    def __repr__(self):
        return f"LaurentPoly('{self}')"


def _format_term(e: int, c: Fraction) -> str:
    if e == 0:
        return str(c)
    mono = "t" if e == 1 else f"t^{e}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T = LaurentPoly.monomial(1)

_TERM = re.compile(
    r"""^(?P<sign>[+-]?)
        (?:(?P<coef>\d+(?:/\d+)?)(?P<star>\*)?)?
        (?P<t>t(?:\^(?P<exp>[+-]?\d+))?)?$""",
    re.VERBOSE,
)


def parse(text: str) -> LaurentPoly:
    """
    Parse the rendering produced by `str`, e.g. ``-1 + t`` or
    ``1/2*t^-2 + -3*t^4``. Whitespace is ignored, and ``a - b`` is accepted
    as shorthand for ``a + -b``.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial")
    # split on + or - that is not part of an exponent or a leading sign
    pieces = re.split(r"(?<=[^\^+\-])(?=[+-])", s)
    out = ZERO
    for piece in pieces:
        if piece.startswith("+") and len(piece) > 1 and piece[1] in "+-":
            piece = piece[1:]
        m = _TERM.match(piece)
        if not m or (m.group("coef") is None and m.group("t") is None):
            raise ValueError(f"cannot parse term {piece!r} in {text!r}")
        if m.group("star") and not m.group("t"):
            raise ValueError(f"dangling '*' in term {piece!r}")
        if m.group("coef") and m.group("t") and not m.group("star"):
            raise ValueError(f"missing '*' in term {piece!r}")
        c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        e = 0
        if m.group("t"):
            e = int(m.group("exp")) if m.group("exp") is not None else 1
        out = out + LaurentPoly.monomial(e, c)
    return out


def normalize(p: LaurentPoly) -> LaurentPoly:
    """Representative of p modulo +-t^k: lowest exponent 0, leading coefficient > 0."""
    if p.is_zero():
        return p
    q = p.shift(-p.min_exp())
    return -q if q.leading() < 0 else q


def monic(p: LaurentPoly) -> LaurentPoly:
    """Representative of p modulo all units c*t^k of Q[t, 1/t]."""
    if p.is_zero():
        return p
    q = p.shift(-p.min_exp())
    return q.scale(1 / q.leading())


def primitive(p: LaurentPoly) -> LaurentPoly:
    """
    Representative of p modulo all units c*t^k of Q[t, 1/t] with coprime
    integer coefficients, lowest exponent 0 and positive leading coefficient.
    """
    if p.is_zero():
        return p
    q = normalize(p)
    den = reduce(math.lcm, (c.denominator for c in q._terms.values()), 1)
    num = reduce(math.gcd, (c.numerator for c in q._terms.values()), 0)
    return q.scale(Fraction(den, num))


def gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """
    Generator of the ideal (p, q). Over Q the generator is determined only up
    to c*t^k, so the `primitive` representative is returned; it is also fixed
    by `normalize`. gcd(0, 0) = 0.
    """
    a, b = p, q
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    return primitive(a)


def divides_up_to_units(p: LaurentPoly, q: LaurentPoly) -> bool:
    if p.is_zero():
        raise ValueError("zero divisor query")
    if q.is_zero():
        return True
    _, r = q.divmod(p)
    return r.is_zero()


def multiplicity_of_factor(f: LaurentPoly, p: LaurentPoly) -> int:
    """Largest m with f^m | p."""
    if f.is_zero() or f.is_unit():
        raise ValueError("factor must be a nonzero non-unit")
    if p.is_zero():
        raise ValueError("multiplicity in the zero polynomial is unbounded")
    m = 0
    q, r = p.divmod(f)
    while r.is_zero():
        m += 1
        p = q
        q, r = p.divmod(f)
    return m


def product_of_binomials(spec: Iterable[tuple[int, int, int]]) -> LaurentPoly:
    """prod (t^a + sign)^e over the (a, e, sign) triples."""
    out = ONE
    for a, e, sign in spec:
        if a < 1 or e < 1 or sign not in (1, -1):
            raise ValueError(f"bad binomial spec {(a, e, sign)}")
        out = out * (LaurentPoly({a: 1, 0: sign}) ** e)
    return out


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial, by dividing t^n - 1 by Phi_d for d | n, d < n."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = LaurentPoly({n: 1, 0: -1})
    for d in range(1, n):
        if n % d == 0:
            p = p.exact_div(cyclotomic(d))
    return p


def product(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    return reduce(lambda a, b: a * b, polys, ONE)
