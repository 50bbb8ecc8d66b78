"""
Left normal form in B_N (classical Garside structure) with cycling and
decycling.

A simple element (permutation braid) is stored as the one-line tuple
produced by `braid.permutation` on any positive reduced word for it:
appending s_i swaps positions i-1, i; prepending s_i swaps values i-1, i.
The product of simples A*B (when it is simple) is ``A[B[j]]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, permutation

Perm = tuple[int, ...]

__all__ = [
    "NormalForm",
    "left_normal_form",
    "from_normal_form",
    "cycling",
    "decycling",
    "super_summit_representative",
    "conjugate_to_delta",
]


def _identity(n: int) -> Perm:
    return tuple(range(n))


def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _mul(a: Perm, b: Perm) -> Perm:
    return tuple(a[j] for j in b)


def _inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def _tau(a: Perm) -> Perm:
    """Delta^-1 A Delta, i.e. s_i -> s_{N-i}."""
    n = len(a)
    return tuple(n - 1 - a[n - 1 - j] for j in range(n))


def _tau_pow(a: Perm, k: int) -> Perm:
    return _tau(a) if k % 2 else a


def finishing_set(a: Perm) -> set[int]:
    """Generators s_i with A = A' s_i (1-based)."""
    return {i for i in range(1, len(a)) if a[i - 1] > a[i]}


def starting_set(a: Perm) -> set[int]:
    """Generators s_i with A = s_i A'."""
    return finishing_set(_inv(a))


def _right_mult_gen(a: Perm, i: int) -> Perm:
    arr = list(a)
    arr[i - 1], arr[i] = arr[i], arr[i - 1]
    return tuple(arr)


def _left_div_gen(a: Perm, i: int) -> Perm:
    """s_i^-1 A for i in the starting set of A."""
    return tuple(i if v == i - 1 else i - 1 if v == i else v for v in a)


def perm_word(a: Perm) -> tuple[int, ...]:
    """A positive word for the simple element, by bubble sort."""
    arr = list(a)
    word: list[int] = []
    n = len(arr)
    # peel off right descents until the identity is reached
    while True:
        for i in range(1, n):
            if arr[i - 1] > arr[i]:
                arr[i - 1], arr[i] = arr[i], arr[i - 1]
                word.append(i)
                break
        else:
            break
    return tuple(reversed(word))


def _make_left_weighted(a: Perm, b: Perm) -> tuple[Perm, Perm, bool]:
    changed = False
    while True:
        movable = starting_set(b) - finishing_set(a)
        if not movable:
            return a, b, changed
        i = min(movable)
        a, b = _right_mult_gen(a, i), _left_div_gen(b, i)
        changed = True


@dataclass(frozen=True)
class NormalForm:
    """Delta^inf * A_1 ... A_l with every A_i a proper nontrivial simple."""

    strands: int
    inf: int
    factors: tuple[Perm, ...]

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)


def _normalize_factors(n: int, inf: int, factors: list[Perm]) -> NormalForm:
    ident, full = _identity(n), _delta(n)
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 1):
            a, b, c = _make_left_weighted(factors[j], factors[j + 1])
            if c:
                factors[j], factors[j + 1] = a, b
                changed = True
    # a left-weighted sequence has its Delta factors first, identities last
    lead = sum(1 for f in factors if f == full)
    out = [f for f in factors if f != full and f != ident]
    return NormalForm(n, inf + lead, tuple(out))


def left_normal_form(b: BraidWord) -> NormalForm:
    n = b.strands
    full = _delta(n)
    inf = 0
    factors: list[Perm] = []
    for a in b.letters:
        if a > 0:
            factors.append(_right_mult_gen(_identity(n), a))
        else:
            # X Delta^-1 = Delta^-1 tau(X); s_i^-1 = Delta^-1 (Delta s_i^-1)
            factors = [_tau(f) for f in factors]
            inf -= 1
            factors.append(_right_mult_gen(full, -a))
    return _normalize_factors(n, inf, factors)


def from_normal_form(nf: NormalForm) -> BraidWord:
    n = nf.strands
    dword = perm_word(_delta(n))
    letters: list[int] = []
    if nf.inf >= 0:
        letters.extend(dword * nf.inf)
    else:
        letters.extend(tuple(-a for a in reversed(dword)) * (-nf.inf))
    for f in nf.factors:
        letters.extend(perm_word(f))
    return BraidWord(n, tuple(letters))


def cycling(nf: NormalForm) -> NormalForm:
    """Conjugate Delta^p A_1...A_l to Delta^p A_2...A_l tau^p(A_1)."""
    if not nf.factors:
        return nf
    first = _tau_pow(nf.factors[0], nf.inf)
    return _normalize_factors(nf.strands, nf.inf, list(nf.factors[1:]) + [first])


def decycling(nf: NormalForm) -> NormalForm:
    """Conjugate Delta^p A_1...A_l to Delta^p tau^p(A_l) A_1...A_{l-1}."""
    if not nf.factors:
        return nf
    last = _tau_pow(nf.factors[-1], nf.inf)
    return _normalize_factors(nf.strands, nf.inf, [last] + list(nf.factors[:-1]))


def super_summit_representative(b: BraidWord) -> NormalForm:
    """
    Iterated cycling then decycling. If inf (resp. sup) is not extremal in
    the conjugacy class, it improves within N(N-1)/2 consecutive cyclings
    (resp. decyclings), so stopping after that many idle steps is safe.
    """
    nf = left_normal_form(b)
    bound = max(1, b.strands * (b.strands - 1) // 2)

    def improve(nf, step, better):
        idle = 0
        while idle < bound and nf.factors:
            nxt = step(nf)
            if better(nxt, nf):
                idle = 0
            else:
                idle += 1
            nf = nxt
        return nf

    nf = improve(nf, cycling, lambda x, y: x.inf > y.inf)
    nf = improve(nf, decycling, lambda x, y: x.sup < y.sup)
    return nf


def conjugate_to_delta(b: BraidWord) -> bool:
    n = b.strands
    if n == 1:
        return True  # B_1 is trivial and Delta_1 = 1
    if b.exponent_sum() != n * (n - 1) // 2:
        return False
    if _cycle_type(permutation(b)) != _cycle_type(_delta(n)):
        return False
    nf = super_summit_representative(b)
    return nf.inf == 1 and not nf.factors


def _cycle_type(p: Perm) -> tuple[int, ...]:
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if not seen[i]:
            j, m = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                m += 1
            lengths.append(m)
    return tuple(sorted(lengths))
