"""Braid groups, Garside structure and Alexander polynomials for plane curves over R."""

from .braid import BraidWord, conj_bar, delta, equals, parse_braid, rev, rmap
from .freegroup import ConjParams, FreeWord, artin_action, conj_involution
from .laurent import LaurentPoly, normalize
from .presentation import Presentation, link_group, van_kampen
from .alexander import alexander_poly
from .realstructure import RealFactorization

__all__ = [
    "BraidWord",
    "ConjParams",
    "FreeWord",
    "LaurentPoly",
    "Presentation",
    "RealFactorization",
    "alexander_poly",
    "artin_action",
    "conj_bar",
    "conj_involution",
    "delta",
    "equals",
    "link_group",
    "normalize",
    "parse_braid",
    "rev",
    "rmap",
    "van_kampen",
]
