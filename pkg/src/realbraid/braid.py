"""
Braid words on N strands and the word-level operators used with real
structures: the half twist, rev, the flip s_i -> s_{N-i}, and complex
conjugation.

Words are never rewritten on composition. Equality *as braids* is decided
by `equals`, which compares the (faithful) Artin actions on F_N.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .freegroup import ConjParams, FreeWord, braid_auto

__all__ = [
    "BraidWord",
    "compose",
    "inverse",
    "delta",
    "block_half_twist",
    "block_full_twist",
    "rev",
    "rmap",
    "conj_bar",
    "conj_bar_generator",
    "equals",
    "permutation",
    "random_braid",
    "parse_braid",
]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        letters = tuple(int(a) for a in self.letters)
        for a in letters:
            if a == 0:
                raise ValueError("generator index 0 is not allowed")
            if abs(a) >= self.strands:
                raise ValueError(
                    f"generator index out of range: {a} on {self.strands} strands"
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, n: int) -> BraidWord:
        base = self if n >= 0 else inverse(self)
        return BraidWord(self.strands, base.letters * abs(n))

    def __len__(self):
        return len(self.letters)

    def exponent_sum(self) -> int:
        return sum(1 if a > 0 else -1 for a in self.letters)

    def __str__(self):
        return " ".join([f"B{self.strands}", *(str(a) for a in self.letters)])


def parse_braid(text: str) -> BraidWord:
    """Read ``B<N> i j ...``; signed ints are s_i^{+-1}."""
    tokens = text.split()
    if not tokens or not tokens[0].startswith("B") or not tokens[0][1:].isdigit():
        raise ValueError(f"malformed braid header in {text!r}; expected B<N>")
    n = int(tokens[0][1:])
    if n < 1:
        raise ValueError(f"malformed braid header in {text!r}; need N >= 1")
    letters = []
    for tok in tokens[1:]:
        try:
            a = int(tok)
        except ValueError:
            raise ValueError(f"malformed generator token {tok!r}") from None
        if a == 0:
            raise ValueError("zero generator index")
        if abs(a) >= n:
            raise ValueError(f"generator index out of range: {a} on {n} strands")
        letters.append(a)
    return BraidWord(n, tuple(letters))


def _check_same(a: BraidWord, b: BraidWord):
    if a.strands != b.strands:
        raise ValueError(f"strand mismatch: {a.strands} vs {b.strands}")


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    _check_same(a, b)
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(-x for x in reversed(a.letters)))


def product(braids: Iterable[BraidWord], strands: int) -> BraidWord:
    out = BraidWord.identity(strands)
    for b in braids:
        out = compose(out, b)
    return out


def delta(N: int) -> BraidWord:
    """Half twist as the staircase (s1)(s2 s1)(s3 s2 s1)...(s_{N-1}...s1)."""
    return block_half_twist(N, 1, N)


def block_half_twist(N: int, lo: int, hi: int) -> BraidWord:
    """Half twist on the contiguous strands lo..hi, identity elsewhere."""
    if not 1 <= lo <= hi <= N:
        raise ValueError(f"bad strand block {lo}..{hi} on {N} strands")
    off = lo - 1
    letters = [off + i for top in range(1, hi - lo + 1) for i in range(top, 0, -1)]
    return BraidWord(N, tuple(letters))


def block_full_twist(N: int, lo: int, hi: int) -> BraidWord:
    return block_half_twist(N, lo, hi) ** 2


def rev(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple(reversed(b.letters)))


def rmap(b: BraidWord) -> BraidWord:
    n = b.strands
    return BraidWord(n, tuple((n - abs(a)) * (1 if a > 0 else -1) for a in b.letters))


def conj_bar_generator(i: int, params: ConjParams) -> tuple[int, ...]:
    """
    Word for the complex conjugate of s_i with punctures 1..k in the upper
    half plane, N-k+1..N their conjugates and the rest real.
    """
    N, k = params.N, params.k
    if not 1 <= i <= N - 1:
        raise ValueError(f"generator {i} out of range for {N} strands")
    if i < k or i > N - k:
        return (-(N - i),)
    if k < i < N - k:
        return (-i,)
    if i == k:
        # half twist on the arc from the first real puncture to P_{N-k+1}
        conj = tuple(range(k + 1, N - k))
        core = -(N - k)
    else:
        conj = tuple(range(N - k - 1, k, -1))
        core = -k
    return conj + (core,) + tuple(-a for a in reversed(conj))


def conj_bar(b: BraidWord, params: ConjParams) -> BraidWord:
    if params.N != b.strands:
        raise ValueError("conjugation parameters do not match the strand count")
    out: list[int] = []
    for a in b.letters:
        img = conj_bar_generator(abs(a), params)
        out.extend(img if a > 0 else (-x for x in reversed(img)))
    return BraidWord(b.strands, tuple(out))


def equals(a: BraidWord, b: BraidWord) -> bool:
    """Equality in B_N, via the action on the free group."""
    _check_same(a, b)
    n = a.strands
    return braid_auto(n, a.letters) == braid_auto(n, b.letters)


def is_trivial(a: BraidWord) -> bool:
    return equals(a, BraidWord.identity(a.strands))


def permutation(b: BraidWord) -> tuple[int, ...]:
    """
    Induced permutation in one-line form: start from (0..N-1) and swap
    positions i-1, i for every letter +-i, left to right.
    """
    arr = list(range(b.strands))
    for a in b.letters:
        i = abs(a)
        arr[i - 1], arr[i] = arr[i], arr[i - 1]
    return tuple(arr)


def free_image(b: BraidWord, w: FreeWord) -> FreeWord:
    return braid_auto(b.strands, b.letters)(w)


def random_braid(rng: random.Random, strands: int, length: int) -> BraidWord:
    """Uniform word of the given length in the generators and their inverses."""
    if strands < 2:
        return BraidWord.identity(strands)
    letters = [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]
    return BraidWord(strands, tuple(letters))
