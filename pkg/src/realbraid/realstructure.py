"""
Braid monodromy data of plane curves defined over R.

A factorization compatible with the real structure splits Delta^2 as
B_up * B_real * B_low, where B_up is the product of the braids of loops
around critical values in the upper half plane, B_real the product over
the real critical values, and B_low is determined by B_up through complex
conjugation. With at most one real point in the base fiber,
B_low = R(rev(B_up)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braid import (
    BraidWord,
    block_full_twist,
    block_half_twist,
    compose,
    conj_bar,
    delta,
    equals,
    inverse,
    parse_braid,
    product,
    rev,
    rmap,
)
from .freegroup import ConjParams
from .garside import conjugate_to_delta

__all__ = [
    "RealFactorization",
    "derive_lower",
    "full_product",
    "verify_decomposition",
    "check_central_equation",
    "build_acnode",
    "build_unreal_arrangement",
    "verify_garside_class",
]


@dataclass(frozen=True)
class RealFactorization:
    """
    `upper` lists the braids of the loops gamma_1..gamma_h in order; `real`
    lists the braids for the real critical values in the written order
    gamma^r_l, ..., gamma^r_1.
    """

    strands: int
    fiber_params: ConjParams
    upper: tuple[BraidWord, ...] = ()
    real: tuple[BraidWord, ...] = ()

    def __post_init__(self):
        if self.fiber_params.N != self.strands:
            raise ValueError("fiber parameters must describe the same number of points")
        for b in (*self.upper, *self.real):
            if b.strands != self.strands:
                raise ValueError(f"braid {b} is not on {self.strands} strands")
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "real", tuple(self.real))

    @classmethod
    def make(cls, strands: int, upper: Sequence[BraidWord] = (),
             real: Sequence[BraidWord] = (), fiber_real_points: int | None = None):
        """Default fiber: as few real points as the parity of `strands` allows."""
        m = strands % 2 if fiber_real_points is None else fiber_real_points
        if m < 0 or (strands - m) % 2:
            raise ValueError(f"{m} real points impossible in a fiber of {strands} points")
        return cls(strands, ConjParams(strands, (strands - m) // 2), tuple(upper), tuple(real))

    @property
    def upper_product(self) -> BraidWord:
        return product(self.upper, self.strands)

    @property
    def real_product(self) -> BraidWord:
        return product(self.real, self.strands)

    def in_main_regime(self) -> bool:
        """At most one real point in the base fiber."""
        return self.fiber_params.real_points <= 1

    def __str__(self):
        lines = [
            f"strands: {self.strands}",
            f"fiber_real_points: {self.fiber_params.real_points}",
            "upper:",
            *(str(b) for b in self.upper),
            "real:",
            *(str(b) for b in self.real),
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> RealFactorization:
        strands = real_points = None
        section = None
        upper: list[BraidWord] = []
        real: list[BraidWord] = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("strands:"):
                strands = int(line.split(":", 1)[1])
            elif line.startswith("fiber_real_points:"):
                real_points = int(line.split(":", 1)[1])
            elif line in ("upper:", "real:"):
                section = line[:-1]
            elif section == "upper":
                upper.append(parse_braid(line))
            elif section == "real":
                real.append(parse_braid(line))
            else:
                raise ValueError(f"unexpected line {raw!r} in factorization")
        if strands is None or real_points is None:
            raise ValueError("factorization needs 'strands:' and 'fiber_real_points:' lines")
        return cls.make(strands, upper, real, real_points)


def derive_lower(f: RealFactorization) -> list[BraidWord]:
    """
    Braids of the conjugate loops, in the order gamma_bar_h^-1 .. gamma_bar_1^-1:
    [conj(beta_h)^-1, ..., conj(beta_1)^-1]. With at most one real fiber
    point their product equals R(rev(B_up)).
    """
    return [inverse(conj_bar(b, f.fiber_params)) for b in reversed(f.upper)]


def full_product(f: RealFactorization) -> BraidWord:
    """B_up * B_real * (product of derive_lower)."""
    return compose(compose(f.upper_product, f.real_product),
                   product(derive_lower(f), f.strands))


def verify_decomposition(f: RealFactorization) -> bool:
    """Delta^2 == B_up * B_real * R(rev(B_up))."""
    if not f.in_main_regime():
        raise ValueError(
            "decomposition check needs at most one real point in the base fiber"
        )
    up = f.upper_product
    lhs = compose(compose(up, f.real_product), rmap(rev(up)))
    return equals(lhs, delta(f.strands) ** 2)


def check_central_equation(b: BraidWord) -> bool:
    """B * R(rev(B)) == Delta^2."""
    return equals(compose(b, rmap(rev(b))), delta(b.strands) ** 2)


def build_acnode(d2: int, k2: int) -> RealFactorization:
    """
    Model factorization for a curve of degree d2 whose only real point is an
    acnode of multiplicity k2: B_real is the full twist on the centered block
    of k2 strands and B_up = Delta * (block half twist)^-1.
    """
    if d2 % 2 or k2 % 2 or not 2 <= k2 <= d2:
        raise ValueError("need even 2 <= k2 <= d2")
    lo = (d2 - k2) // 2 + 1
    hi = lo + k2 - 1
    up = compose(delta(d2), inverse(block_half_twist(d2, lo, hi)))
    return RealFactorization.make(d2, [up], [block_full_twist(d2, lo, hi)], 0)


def build_unreal_arrangement(r: Sequence[int]) -> list[BraidWord]:
    """Full twists on consecutive disjoint blocks of 2*r_i strands."""
    if not r:
        raise ValueError("need at least one group of lines")
    if any(x < 1 for x in r):
        raise ValueError("group sizes must be positive")
    d = 2 * sum(r)
    out, lo = [], 1
    for x in r:
        out.append(block_full_twist(d, lo, lo + 2 * x - 1))
        lo += 2 * x
    return out


def verify_garside_class(f: RealFactorization) -> bool:
    if f.real:
        raise ValueError("not in the empty-real-critical-values regime")
    return conjugate_to_delta(f.upper_product)
