"""
Alexander polynomials of van Kampen / link-group presentations.

The Fox matrix of a presentation on d generators presents the Alexander
module of the group over Q[t, 1/t] (every generator maps to t). That module
is Ker(phi)^ab (x) Q plus a free summand of rank one, so the polynomial is
the product of the nontrivial invariant factors when the matrix has rank
d - 1, and 0 when the rank is lower.

The reduced Burau representation gives an independent route for closed
braids, and the closed-form builders reproduce the classical link
polynomials used as divisibility bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as igcd
from typing import Sequence

from .braid import BraidWord
from .freegroup import fox_derivative, phi
from .laurent import (
    ONE,
    T,
    ZERO,
    LaurentPoly,
    cyclotomic,
    divides_up_to_units,
    normalize,
    primitive,
    product,
    product_of_binomials,
)
from .presentation import Presentation

__all__ = [
    "LaurentMatrix",
    "AlexanderResult",
    "alexander_matrix",
    "smith_form",
    "alexander_poly",
    "burau_reduced",
    "alexander_from_burau",
    "hopf_link",
    "delta_closure_even",
    "delta_closure_odd",
    "milnor_orlik",
    "check_divisibility",
]


@dataclass(frozen=True)
class LaurentMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[LaurentPoly, ...], ...] = ()

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[LaurentPoly]], cols: int | None = None):
        rows = [tuple(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def identity(cls, n: int) -> LaurentMatrix:
        return cls.from_rows([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix.from_rows(out, other.cols)

    def __sub__(self, other: LaurentMatrix) -> LaurentMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return LaurentMatrix.from_rows(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.cols,
        )

    def det(self) -> LaurentPoly:
        """Fraction-free (Bareiss) elimination; divisions are exact in the ring."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = [list(r) for r in self.entries]
        sign, prev = 1, ONE
        for k in range(n - 1):
            if a[k][k].is_zero():
                for i in range(k + 1, n):
                    if not a[i][k].is_zero():
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return ZERO
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
            prev = a[k][k]
        if n == 0:
            return ONE
        return a[n - 1][n - 1] * sign

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.entries)


@dataclass(frozen=True)
class AlexanderResult:
    polynomial: LaurentPoly
    elementary_divisors: tuple[LaurentPoly, ...] = field(default=())
    free_rank_flag: bool = False

    def __str__(self):
        divs = ", ".join(str(d) for d in self.elementary_divisors)
        return (
            f"poly: {self.polynomial}\n"
            f"divisors: [{divs}]\n"
            f"free: {'true' if self.free_rank_flag else 'false'}"
        )

    def as_dict(self) -> dict:
        return {
            "poly": str(self.polynomial),
            "divisors": [str(d) for d in self.elementary_divisors],
            "free": self.free_rank_flag,
        }


def alexander_matrix(p: Presentation) -> LaurentMatrix:
    rows = [
        [phi(fox_derivative(r, j)) for j in range(1, p.generators + 1)]
        for r in p.relators
    ]
    return LaurentMatrix.from_rows(rows, p.generators)


def smith_form(m: LaurentMatrix) -> tuple[int, list[LaurentPoly]]:
    """
    Invariant factors d_1 | d_2 | ... over Q[t, 1/t], each returned in
    `primitive` form. Pivots are chosen by smallest span.
    """
    a = [list(r) for r in m.entries]
    nr, nc = m.rows, m.cols
    divisors: list[LaurentPoly] = []

    def swap_in(s, i, j):
        a[s], a[i] = a[i], a[s]
        for row in a:
            row[s], row[j] = row[j], row[s]

    for s in range(min(nr, nc)):
        best = None
        for i in range(s, nr):
            for j in range(s, nc):
                e = a[i][j]
                if e and (best is None or e.span() < best[0]):
                    best = (e.span(), i, j)
        if best is None:
            break
        swap_in(s, best[1], best[2])
        while True:
            piv = a[s][s]
            dirty = None
            for i in range(s + 1, nr):
                if a[i][s]:
                    q, r = a[i][s].divmod(piv)
                    a[i] = [x - q * y for x, y in zip(a[i], a[s])]
                    if r and (dirty is None or r.span() < dirty[0]):
                        dirty = (r.span(), i, s)
            for j in range(s + 1, nc):
                if a[s][j]:
                    q, r = a[s][j].divmod(piv)
                    for row in a:
                        row[j] = row[j] - q * row[s]
                    if r and (dirty is None or r.span() < dirty[0]):
                        dirty = (r.span(), s, j)
            if dirty is not None:
                swap_in(s, dirty[1], dirty[2])
                continue
            # row and column cleared; enforce divisibility of the rest
            bad = next(
                (i for i in range(s + 1, nr) for j in range(s + 1, nc)
                 if a[i][j] and not divides_up_to_units(piv, a[i][j])),
                None,
            )
            if bad is None:
                break
            a[s] = [x + y for x, y in zip(a[s], a[bad])]
        divisors.append(primitive(a[s][s]))
    return len(divisors), divisors


def alexander_poly(p: Presentation) -> AlexanderResult:
    if p.generators < 1:
        raise ValueError("presentation needs at least one generator")
    rank, divs = smith_form(alexander_matrix(p))
    nontrivial = tuple(d for d in divs if not d.is_unit())
    if rank < p.generators - 1:
        return AlexanderResult(ZERO, nontrivial, True)
    return AlexanderResult(primitive(product(nontrivial)), nontrivial, False)


# -- reduced Burau ----------------------------------------------------------


def _burau_generator(n: int, letter: int) -> LaurentMatrix:
    """
    Standard reduced Burau image of s_i^{+-1} in GL_{n-1}: the block
    [[1, t, 0], [0, -t, 0], [0, 1, 1]] (inverse [[1, 1, 0], [0, -1/t, 0],
    [0, 1/t, 1]]) placed at rows/cols i-2..i, truncated at the edges.
    """
    i = abs(letter)
    t_inv = LaurentPoly.monomial(-1)
    if letter > 0:
        block = [[ONE, T, ZERO], [ZERO, -T, ZERO], [ZERO, ONE, ONE]]
    else:
        block = [[ONE, ONE, ZERO], [ZERO, -t_inv, ZERO], [ZERO, t_inv, ONE]]
    m = [[ONE if r == c else ZERO for c in range(n - 1)] for r in range(n - 1)]
    for br in range(3):
        for bc in range(3):
            r, c = i - 2 + br, i - 2 + bc
            if 0 <= r < n - 1 and 0 <= c < n - 1:
                m[r][c] = block[br][bc]
    return LaurentMatrix.from_rows(m, n - 1)


def burau_reduced(b: BraidWord) -> LaurentMatrix:
    n = b.strands
    if n < 2:
        raise ValueError("reduced Burau needs at least two strands")
    m = LaurentMatrix.identity(n - 1)
    for a in b.letters:
        m = m @ _burau_generator(n, a)
    return m


def alexander_from_burau(b: BraidWord) -> LaurentPoly:
    """det(burau(b) - I) (1 - t) / (1 - t^N), normalized; 0 signals a free part."""
    n = b.strands
    if n == 1:
        return ONE
    det = (burau_reduced(b) - LaurentMatrix.identity(n - 1)).det()
    if det.is_zero():
        return ZERO
    num = det * (ONE - T)
    q, r = num.divmod(ONE - T ** n)
    if r:
        raise ValueError("convention violation: Burau determinant not divisible by (1-t^N)/(1-t)")
    return normalize(q)


# -- closed forms -----------------------------------------------------------


def hopf_link(d: int) -> LaurentPoly:
    """(t - 1)(t^d - 1)^(d-2): closure of the full twist on d strands."""
    if d < 2:
        raise ValueError("need d >= 2")
    spec = [(1, 1, -1)] + ([(d, d - 2, -1)] if d > 2 else [])
    return product_of_binomials(spec)


def delta_closure_even(d: int) -> LaurentPoly:
    """(t^d - 1)^(d/2 - 1) (t^(d/2) + 1) (t - 1)."""
    if d < 2 or d % 2:
        raise ValueError("delta_closure_even needs an even d >= 2")
    spec = ([(d, d // 2 - 1, -1)] if d > 2 else []) + [(d // 2, 1, 1), (1, 1, -1)]
    return product_of_binomials(spec)


def delta_closure_odd(d: int) -> LaurentPoly:
    """(t^d - 1)^((d-1)/2) (t - 1)."""
    if d < 3 or d % 2 == 0:
        raise ValueError("delta_closure_odd needs an odd d >= 3")
    return product_of_binomials([(d, (d - 1) // 2, -1), (1, 1, -1)])


def milnor_orlik(a: int, b: int) -> LaurentPoly:
    """
    prod over 0<i<a, 0<j<b of (t - exp(2 pi i (i/a + j/b))), assembled as a
    product of cyclotomic polynomials: a root whose angle reduces to the
    fraction p/n in lowest terms is a primitive n-th root of unity, and the
    roots of each order are spread evenly over the phi(n) primitive ones.
    """
    if a < 2 or b < 2:
        raise ValueError("need a, b >= 2")
    counts: dict[int, int] = {}
    for i in range(1, a):
        for j in range(1, b):
            n = (Fraction(i, a) + Fraction(j, b)).denominator
            counts[n] = counts.get(n, 0) + 1
    out = ONE
    for n, c in sorted(counts.items()):
        tot = _euler_phi(n)
        if c % tot:
            raise ArithmeticError(f"{c} roots of order {n} do not fill whole orbits")
        out = out * cyclotomic(n) ** (c // tot)
    return out


def _euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if igcd(k, n) == 1)


def check_divisibility(sub: Presentation, full: Presentation) -> bool:
    """alexander(sub) | alexander(full); everything divides 0, 0 divides only 0."""
    if sub.generators != full.generators:
        raise ValueError("presentations must have the same generator count")
    p = alexander_poly(sub).polynomial
    q = alexander_poly(full).polynomial
    if p.is_zero():
        return q.is_zero()
    return divides_up_to_units(p, q)
