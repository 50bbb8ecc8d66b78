"""
Free groups F_d, the Artin action of braids on them, the complex-conjugation
involution of the punctured plane, Fox derivatives, and abelianization.

A letter is a nonzero int: ``i`` is x_i and ``-i`` is x_i^-1 (1-based).
A braid letter uses the same signed-int encoding for s_i^{+-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .laurent import LaurentPoly

__all__ = [
    "FreeWord",
    "FreeAuto",
    "GroupRingElem",
    "ConjParams",
    "reduce_letters",
    "artin_generator_auto",
    "artin_action",
    "braid_auto",
    "conj_involution",
    "fox_derivative",
    "phi",
]


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        if a == 0:
            raise ValueError("zero is not a letter")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word in x_1..x_rank."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0 or abs(a) > self.rank:
                raise ValueError(f"generator index {a} out of range for rank {self.rank}")
        object.__setattr__(self, "letters", reduce_letters(letters))

    @classmethod
    def identity(cls, rank: int) -> FreeWord:
        return cls(rank)

    @classmethod
    def gen(cls, rank: int, i: int) -> FreeWord:
        return cls(rank, (i,))

    def __mul__(self, other: FreeWord) -> FreeWord:
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(self.rank, tuple(-a for a in reversed(self.letters)))

    def __pow__(self, n: int) -> FreeWord:
        base = self if n >= 0 else self.inverse()
        return FreeWord(self.rank, base.letters * abs(n))

    def __len__(self):
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def exponent_sum(self) -> int:
        return sum(1 if a > 0 else -1 for a in self.letters)

    def __str__(self):
        return " ".join(str(a) for a in self.letters)

    @classmethod
    def parse(cls, text: str, rank: int) -> FreeWord:
        return cls(rank, tuple(int(tok) for tok in text.split()))


@dataclass(frozen=True)
class FreeAuto:
    """Endomorphism of F_rank given by the images of the generators."""

    rank: int
    images: tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.images) != self.rank or any(w.rank != self.rank for w in self.images):
            raise ValueError("need one image of the right rank per generator")

    @classmethod
    def identity(cls, rank: int) -> FreeAuto:
        return cls(rank, tuple(FreeWord.gen(rank, i) for i in range(1, rank + 1)))

    def __call__(self, w: FreeWord) -> FreeWord:
        if w.rank != self.rank:
            raise ValueError("rank mismatch")
        out: list[int] = []
        for a in w.letters:
            img = self.images[abs(a) - 1].letters
            out.extend(img if a > 0 else (-b for b in reversed(img)))
        return FreeWord(self.rank, reduce_letters(out))

    def then(self, other: FreeAuto) -> FreeAuto:
        """The map w -> other(self(w))."""
        return FreeAuto(self.rank, tuple(other(img) for img in self.images))

    def __eq__(self, other):
        return isinstance(other, FreeAuto) and self.images == other.images

    def __hash__(self):
        return hash(self.images)


@dataclass(frozen=True)
class ConjParams:
    """N punctures, k conjugate pairs; the middle N - 2k punctures are real."""

    N: int
    k: int

    def __post_init__(self):
        if self.N < 1 or self.k < 0 or 2 * self.k > self.N:
            raise ValueError(f"invalid conjugation parameters N={self.N}, k={self.k}")

    @property
    def real_points(self) -> int:
        return self.N - 2 * self.k

    @classmethod
    def all(cls, max_n: int) -> list[ConjParams]:
        return [cls(n, k) for n in range(1, max_n + 1) for k in range(n // 2 + 1)]


# -- Artin action ---------------------------------------------------------


def artin_generator_auto(N: int, letter: int) -> FreeAuto:
    """
    The substitution of s_i (letter i) or its inverse (letter -i):
    s_i: x_i -> x_i^-1 x_{i+1} x_i, x_{i+1} -> x_i, other x_j fixed.
    """
    i = abs(letter)
    if not 1 <= i <= N - 1:
        raise ValueError(f"braid generator {letter} out of range for {N} strands")
    imgs = [FreeWord.gen(N, j) for j in range(1, N + 1)]
    if letter > 0:
        imgs[i - 1] = FreeWord(N, (-i, i + 1, i))
        imgs[i] = FreeWord.gen(N, i)
    else:
        imgs[i - 1] = FreeWord.gen(N, i + 1)
        imgs[i] = FreeWord(N, (i + 1, i, -(i + 1)))
    return FreeAuto(N, tuple(imgs))


def braid_auto(N: int, letters: Sequence[int]) -> FreeAuto:
    """
    Automorphism of F_N induced by a braid word. Letters act left to right:
    for s_a s_b the substitution of s_a is applied first, then that of s_b.
    """
    auto = FreeAuto.identity(N)
    for a in letters:
        auto = auto.then(artin_generator_auto(N, a))
    return auto


def artin_action(braid, w: FreeWord) -> FreeWord:
    """Image of w under a braid (anything with ``strands`` and ``letters``)."""
    if braid.strands != w.rank:
        raise ValueError("braid strand count does not match free group rank")
    return braid_auto(braid.strands, braid.letters)(w)


# -- complex conjugation ----------------------------------------------------


def conj_involution(params: ConjParams) -> FreeAuto:
    """
    Involution of F_N induced by complex conjugation of the punctures:
    x_i -> x_{N+1-i}^-1 for the non-real punctures, and for the real ones
    x_i -> (x_{N-k}...x_{i+1}) x_i^-1 (x_{N-k}...x_{i+1})^-1.
    """
    N, k = params.N, params.k
    imgs = []
    for i in range(1, N + 1):
        if i <= k or i >= N - k + 1:
            imgs.append(FreeWord(N, (-(N + 1 - i),)))
        else:
            prefix = tuple(range(N - k, i, -1))
            imgs.append(FreeWord(N, prefix + (-i,) + tuple(-a for a in reversed(prefix))))
    return FreeAuto(N, tuple(imgs))


# -- group ring and Fox calculus -------------------------------------------


@dataclass(frozen=True)
class GroupRingElem:
    """Finite Z-linear combination of reduced words of F_rank."""

    rank: int
    terms: tuple[tuple[tuple[int, ...], int], ...] = ()

    @classmethod
    def from_dict(cls, rank: int, d: dict[tuple[int, ...], int]) -> GroupRingElem:
        return cls(rank, tuple(sorted((w, c) for w, c in d.items() if c)))

    @classmethod
    def from_word(cls, w: FreeWord, c: int = 1) -> GroupRingElem:
        return cls.from_dict(w.rank, {w.letters: c})

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.terms)

    def __add__(self, other: GroupRingElem) -> GroupRingElem:
        d = self.as_dict()
        for w, c in other.terms:
            d[w] = d.get(w, 0) + c
        return GroupRingElem.from_dict(self.rank, d)

    def __neg__(self):
        return GroupRingElem(self.rank, tuple((w, -c) for w, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: GroupRingElem) -> GroupRingElem:
        d: dict[tuple[int, ...], int] = {}
        for w1, c1 in self.terms:
            for w2, c2 in other.terms:
                w = reduce_letters(w1 + w2)
                d[w] = d.get(w, 0) + c1 * c2
        return GroupRingElem.from_dict(self.rank, d)

    def is_zero(self) -> bool:
        return not self.terms


def fox_derivative(w: FreeWord, j: int) -> GroupRingElem:
    """
    d w / d x_j in Z[F]. One pass over the word: an occurrence of x_j after
    prefix u contributes +u; an occurrence of x_j^-1 contributes -u x_j^-1.
    """
    if not 1 <= j <= w.rank:
        raise ValueError(f"generator index {j} out of range for rank {w.rank}")
    d: dict[tuple[int, ...], int] = {}
    prefix: list[int] = []
    for a in w.letters:
        if a == j:
            key = tuple(prefix)
            d[key] = d.get(key, 0) + 1
        elif a == -j:
            key = reduce_letters(prefix + [a])
            d[key] = d.get(key, 0) - 1
        prefix.append(a)
    return GroupRingElem.from_dict(w.rank, d)


def phi(e: GroupRingElem) -> LaurentPoly:
    """Abelianize onto <t>: every generator goes to t."""
    out: dict[int, int] = {}
    for w, c in e.terms:
        s = sum(1 if a > 0 else -1 for a in w)
        out[s] = out.get(s, 0) + c
    return LaurentPoly(out)
