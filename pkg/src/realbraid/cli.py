"""
Command-line front end.

Exit codes: 0 on success or a true verdict, 1 on a false verdict, 2 on bad
input. Braids are written ``B<N> i j ...``; polynomials use the Laurent text
format (``-1 + t``); free words are signed generator indices.
"""

from __future__ import annotations

import argparse
import io
import json
import random
import sys
from typing import Callable, TextIO

from . import alexander as alex
from . import laurent
from .braid import BraidWord, conj_bar, delta, equals, parse_braid, rev, rmap
from .freegroup import ConjParams, FreeWord, artin_action
from .garside import conjugate_to_delta, left_normal_form
from .presentation import link_group, van_kampen
from .realstructure import (
    RealFactorization,
    build_acnode,
    build_unreal_arrangement,
    check_central_equation,
    derive_lower,
    verify_decomposition,
    verify_garside_class,
)

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2

VERBS = (
    "normalize", "equal", "delta", "rev", "rmap", "conj", "action", "nf",
    "conj-delta", "vankampen", "alexander", "burau", "closed-form", "divides",
    "multiplicity", "verify-real", "derive-lower", "central-eq",
    "build-acnode", "build-arrangement",
)

CLOSED_FORMS: dict[str, Callable[..., laurent.LaurentPoly]] = {
    "hopf-link": alex.hopf_link,
    "delta-even": alex.delta_closure_even,
    "delta-odd": alex.delta_closure_odd,
    "milnor-orlik": alex.milnor_orlik,
}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


class Output:
    """Collects text lines and the mirrored JSON fields."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.fields: dict = {}
        self.lines: list[str] = []

    def put(self, key: str, text: str, value=None):
        self.fields[key] = text if value is None else value
        self.lines.append(text)

    def render(self) -> str:
        if self.fmt == "json":
            return json.dumps(self.fields, sort_keys=True)
        return "\n".join(self.lines)


# -- argument readers -------------------------------------------------------


def _read_text(arg: str, stdin: TextIO) -> str:
    if arg == "-":
        return stdin.read()
    return arg


def _braid(arg: str, stdin: TextIO) -> BraidWord:
    try:
        return parse_braid(_read_text(arg, stdin))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _poly(arg: str) -> laurent.LaurentPoly:
    try:
        return laurent.parse(arg)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _factorization(arg: str, stdin: TextIO) -> RealFactorization:
    try:
        if arg == "-":
            text = stdin.read()
        else:
            with open(arg) as fh:
                text = fh.read()
        return RealFactorization.parse(text)
    except (OSError, ValueError) as exc:
        raise InputError(str(exc)) from None


def _verdict(out: Output, value: bool) -> int:
    out.put("verdict", "true" if value else "false", value)
    return EXIT_OK if value else EXIT_FALSE


def _params(b: BraidWord, k: int | None) -> ConjParams:
    k = b.strands // 2 if k is None else k
    try:
        return ConjParams(b.strands, k)
    except ValueError as exc:
        raise InputError(str(exc)) from None


# -- verbs ------------------------------------------------------------------


def cmd_normalize(a, out, stdin):
    p = laurent.normalize(_poly(a.poly))
    out.put("poly", str(p))
    return EXIT_OK


def cmd_equal(a, out, stdin):
    x, y = _braid(a.a, stdin), _braid(a.b, stdin)
    if x.strands != y.strands:
        raise InputError("strand mismatch")
    return _verdict(out, equals(x, y))


def cmd_delta(a, out, stdin):
    if a.n < 1:
        raise InputError("need N >= 1")
    out.put("braid", str(delta(a.n)))
    return EXIT_OK


def cmd_rev(a, out, stdin):
    out.put("braid", str(rev(_braid(a.braid, stdin))))
    return EXIT_OK


def cmd_rmap(a, out, stdin):
    out.put("braid", str(rmap(_braid(a.braid, stdin))))
    return EXIT_OK


def cmd_conj(a, out, stdin):
    b = _braid(a.braid, stdin)
    out.put("braid", str(conj_bar(b, _params(b, a.k))))
    return EXIT_OK


def cmd_action(a, out, stdin):
    b = _braid(a.braid, stdin)
    try:
        w = FreeWord.parse(a.word, b.strands)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out.put("word", str(artin_action(b, w)))
    return EXIT_OK


def cmd_nf(a, out, stdin):
    nf = left_normal_form(_braid(a.braid, stdin))
    factors = [[v + 1 for v in f] for f in nf.factors]
    out.put("inf", f"inf: {nf.inf}", nf.inf)
    text = " | ".join(" ".join(map(str, f)) for f in factors)
    out.put("factors", f"factors: [{text}]", factors)
    return EXIT_OK


def cmd_conj_delta(a, out, stdin):
    return _verdict(out, conjugate_to_delta(_braid(a.braid, stdin)))


def _braids(args, stdin) -> list[BraidWord]:
    braids = [_braid(x, stdin) for x in args]
    if len({b.strands for b in braids}) > 1:
        raise InputError("braids must share a strand count")
    return braids


def _presentation(a, stdin):
    braids = _braids(a.braids, stdin)
    if getattr(a, "closure", False):
        if len(braids) != 1:
            raise InputError("--closure takes exactly one braid")
        return link_group(braids[0])
    if not braids and a.strands is None:
        raise InputError("--strands required without braids")
    return van_kampen(braids, None if braids else a.strands)


def cmd_vankampen(a, out, stdin):
    p = _presentation(a, stdin)
    out.put("gens", f"gens: {p.generators}", p.generators)
    out.fields["relators"] = [str(r) for r in p.relators]
    out.lines.extend(str(r) for r in p.relators)
    return EXIT_OK


def cmd_alexander(a, out, stdin):
    res = alex.alexander_poly(_presentation(a, stdin))
    out.put("poly", str(res.polynomial))
    if a.full or out.fmt == "json":
        out.put("divisors", "divisors: [" + ", ".join(map(str, res.elementary_divisors)) + "]",
                [str(d) for d in res.elementary_divisors])
        out.put("free", f"free: {'true' if res.free_rank_flag else 'false'}", res.free_rank_flag)
    return EXIT_OK


def cmd_burau(a, out, stdin):
    b = _braid(a.braid, stdin)
    if b.strands < 2:
        raise InputError("reduced Burau needs at least two strands")
    if a.alexander:
        try:
            p = alex.alexander_from_burau(b)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        out.put("poly", str(p))
    else:
        m = alex.burau_reduced(b)
        out.fields["matrix"] = [[str(e) for e in row] for row in m.entries]
        out.lines.append(str(m))
    return EXIT_OK


def cmd_closed_form(a, out, stdin):
    fn = CLOSED_FORMS[a.kind]
    want = 2 if a.kind == "milnor-orlik" else 1
    if len(a.args) != want:
        raise InputError(f"{a.kind} takes {want} integer argument(s)")
    try:
        p = fn(*a.args)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out.put("poly", str(p))
    return EXIT_OK


def cmd_divides(a, out, stdin):
    if a.split is not None:
        b = _braid(a.split, stdin)
        rng = random.Random(a.seed)
        cut = rng.randint(0, len(b))
        b1 = BraidWord(b.strands, b.letters[:cut])
        b2 = BraidWord(b.strands, b.letters[cut:])
        out.put("split", f"split: {b1} | {b2}")
        return _verdict(out, alex.check_divisibility(van_kampen([b1, b2]), link_group(b)))
    if a.p is None or a.q is None:
        raise InputError("divides needs two polynomials or --split <braid>")
    p, q = _poly(a.p), _poly(a.q)
    if p.is_zero():
        return _verdict(out, q.is_zero())
    return _verdict(out, laurent.divides_up_to_units(p, q))


def cmd_multiplicity(a, out, stdin):
    try:
        m = laurent.multiplicity_of_factor(_poly(a.f), _poly(a.p))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out.put("multiplicity", str(m), m)
    return EXIT_OK


def cmd_verify_real(a, out, stdin):
    f = _factorization(a.file, stdin)
    try:
        ok = verify_garside_class(f) if a.garside else verify_decomposition(f)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return _verdict(out, ok)


def cmd_derive_lower(a, out, stdin):
    lower = derive_lower(_factorization(a.file, stdin))
    out.fields["lower"] = [str(b) for b in lower]
    out.lines.extend(str(b) for b in lower)
    return EXIT_OK


def cmd_central_eq(a, out, stdin):
    return _verdict(out, check_central_equation(_braid(a.braid, stdin)))


def cmd_build_acnode(a, out, stdin):
    try:
        f = build_acnode(a.d2, a.k2)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out.fields["factorization"] = str(f)
    out.lines.append(str(f).rstrip("\n"))
    return EXIT_OK


def cmd_build_arrangement(a, out, stdin):
    try:
        braids = build_unreal_arrangement(a.r)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out.fields["real"] = [str(b) for b in braids]
    out.lines.extend(str(b) for b in braids)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--strands", type=int)

    parser = _Parser(prog="realbraid", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    verb("normalize", cmd_normalize, "normalize a Laurent polynomial").add_argument("poly")
    p = verb("equal", cmd_equal, "decide equality of two braids")
    p.add_argument("a")
    p.add_argument("b")
    verb("delta", cmd_delta, "print the half twist").add_argument("n", type=int)
    verb("rev", cmd_rev, "reverse a braid word").add_argument("braid")
    verb("rmap", cmd_rmap, "apply s_i -> s_{N-i}").add_argument("braid")
    p = verb("conj", cmd_conj, "complex conjugate of a braid")
    p.add_argument("braid")
    p.add_argument("-k", type=int, help="conjugate pairs in the fiber (default N//2)")
    p = verb("action", cmd_action, "Artin action on a free word")
    p.add_argument("braid")
    p.add_argument("word")
    verb("nf", cmd_nf, "left normal form").add_argument("braid")
    verb("conj-delta", cmd_conj_delta, "is the braid conjugate to Delta").add_argument("braid")
    verb("vankampen", cmd_vankampen, "van Kampen presentation").add_argument("braids", nargs="*")
    p = verb("alexander", cmd_alexander, "Alexander polynomial of a presentation")
    p.add_argument("braids", nargs="*")
    p.add_argument("--closure", action="store_true", help="use the closed-braid link group")
    p.add_argument("--full", action="store_true", help="also print divisors and free flag")
    p = verb("burau", cmd_burau, "reduced Burau matrix")
    p.add_argument("braid")
    p.add_argument("--alexander", action="store_true", help="closure polynomial via Burau")
    p = verb("closed-form", cmd_closed_form, "closed-form link polynomials")
    p.add_argument("kind", choices=sorted(CLOSED_FORMS))
    p.add_argument("args", type=int, nargs="+")
    p = verb("divides", cmd_divides, "divisibility up to units")
    p.add_argument("p", nargs="?")
    p.add_argument("q", nargs="?")
    p.add_argument("--split", metavar="BRAID",
                   help="split the braid at a seeded random point and check the Alexander divisibility")
    p = verb("multiplicity", cmd_multiplicity, "multiplicity of a factor")
    p.add_argument("f")
    p.add_argument("p")
    p = verb("verify-real", cmd_verify_real, "check a real-structure factorization file")
    p.add_argument("file")
    p.add_argument("--garside", action="store_true",
                   help="check that B_up is conjugate to Delta (empty real part)")
    verb("derive-lower", cmd_derive_lower, "lower half-plane braids").add_argument("file")
    verb("central-eq", cmd_central_eq, "check B R(rev B) = Delta^2").add_argument("braid")
    p = verb("build-acnode", cmd_build_acnode, "acnode model factorization")
    p.add_argument("d2", type=int)
    p.add_argument("k2", type=int)
    verb("build-arrangement", cmd_build_arrangement,
         "real-part braids of an unreal arrangement").add_argument("r", type=int, nargs="+")
    return parser


def run(argv: list[str], stdin: TextIO | None = None) -> tuple[int, str]:
    """Execute one command; returns (exit code, stdout text)."""
    stdin = stdin if stdin is not None else io.StringIO("")
    try:
        args = build_parser().parse_args(argv)
    except InputError as exc:
        return EXIT_INPUT, f"error: {exc}"
    except SystemExit as exc:  # --help
        return int(exc.code or 0), ""
    out = Output(args.format)
    try:
        code = args.fn(args, out, stdin)
    except InputError as exc:
        return EXIT_INPUT, f"error: {exc}"
    return code, out.render()


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    code, text = run(argv, sys.stdin)
    stream = sys.stderr if code == EXIT_INPUT else sys.stdout
    if text:
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
