"""van Kampen presentations <x_1..x_d | beta_i(x_j) = x_j> built from braids."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braid import BraidWord
from .freegroup import FreeWord, braid_auto

__all__ = ["Presentation", "van_kampen", "link_group"]


@dataclass(frozen=True)
class Presentation:
    generators: int
    relators: tuple[FreeWord, ...] = ()
    # (braid index, generator index) of each relator, both 1-based
    provenance: tuple[tuple[int, int], ...] = ()

    def __str__(self):
        lines = [f"gens: {self.generators}"]
        lines.extend(str(r) for r in self.relators)
        return "\n".join(lines)

    @classmethod
    def parse(cls, text: str) -> Presentation:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("gens:"):
            raise ValueError("presentation must start with 'gens: <d>'")
        d = int(lines[0].split(":", 1)[1])
        rels = tuple(FreeWord.parse(ln, d) for ln in lines[1:])
        return cls(d, rels)


def van_kampen(braids: Sequence[BraidWord], strands: int | None = None) -> Presentation:
    """
    Relators beta_i(x_j) x_j^-1 for every braid and generator; relators that
    reduce to the identity are dropped. `strands` is needed only when the
    braid list is empty.
    """
    if braids:
        d = braids[0].strands
        if any(b.strands != d for b in braids):
            raise ValueError("braids must share a strand count")
        if strands is not None and strands != d:
            raise ValueError("strand count does not match the braids")
    elif strands is None:
        raise ValueError("strand count required for an empty braid list")
    else:
        d = strands
    rels, prov = [], []
    for i, b in enumerate(braids, start=1):
        auto = braid_auto(d, b.letters)
        for j in range(1, d + 1):
            r = auto.images[j - 1] * FreeWord(d, (-j,))
            if not r.is_identity():
                rels.append(r)
                prov.append((i, j))
    return Presentation(d, tuple(rels), tuple(prov))


def link_group(b: BraidWord) -> Presentation:
    """Group of the closed braid; the redundant d-th relator is kept."""
    return van_kampen([b])
