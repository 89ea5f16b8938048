"""Command-line entry point: ``zrspace <subcommand> ...``.

Results are printed as JSON on stdout.  Failures print a JSON object with an
``error`` field on stderr and exit with 1 (domain error) or 2 (parse error,
bad arguments, unknown subcommand).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import finite_spectral as fs
from . import kronecker as kr
from . import semistar as st
from . import zr_space as zr
from .errors import DomainError, ParseError, ZrError
from .field_arith import GENERIC, BasePair, parse_poly_t, parse_ratfun_t
from .sampling import DEFAULT_SEED, random_poly_t, place_pool
from .suites import SUITES, run_suite
from .zr_space import FREE, Principal, ZarSubset

SHORTHANDS = {
    "all": ZarSubset.all_places,
    "all+K": ZarSubset.whole,
    "K": ZarSubset.generic_point,
    "empty": ZarSubset.empty,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(f"{message}\n{self.format_usage().strip()}")


def _load_json(text: str):
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc.msg}") from exc


def parse_subset(base: BasePair, text: str) -> ZarSubset:
    """A subset from a shorthand, a JSON object, or a path to a JSON file."""
    if text in SHORTHANDS:
        return SHORTHANDS[text]()
    return ZarSubset.from_json(base, _load_json(text))


def _point(pt) -> str:
    return "K" if pt is GENERIC else str(pt)


def _ultrafilter(base: BasePair, text: str):
    if text == "free":
        return FREE
    if text == "K":
        return Principal(GENERIC)
    return Principal(base.place(text))


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def cmd_closure(a):
    Y = parse_subset(a.base, a.set)
    ops = {"cons": zr.cl_cons, "zar": zr.cl_zar, "inv": zr.cl_inv, "gen": zr.gen_closure, "sp": zr.sp_closure}
    return ops[a.kind](Y).to_json()


def cmd_limit(a):
    Y = parse_subset(a.base, a.set)
    if a.ultrafilter:
        u = _ultrafilter(a.base, a.ultrafilter)
        pt = zr.limit_point(Y, u)
        return {"ultrafilter": "free" if u is FREE else _point(u.point), "limit": _point(pt), "center": zr.center(a.base, pt)}
    out = []
    for u in zr.ultrafilter_classes(Y, a.base).take(a.count):
        pt = zr.limit_point(Y, u)
        out.append({"ultrafilter": "free" if u is FREE else _point(u.point), "limit": _point(pt)})
    return {"classes": out}


def cmd_bx(a):
    xs = [a.base.element(t) for t in a.x]
    return {"elements": [str(x) for x in xs], "open": zr.b_F(a.base, xs).to_json()}


def cmd_intersect(a):
    Y = parse_subset(a.base, a.set)
    if Y.is_empty():
        raise DomainError("the intersection over the empty family is not a subring of K")
    R = zr.intersection_ring(Y)
    out = {"ring": str(R), "quasicompact": zr.is_quasicompact_zar(Y)}
    if a.x:
        out["members"] = {t: zr.ring_member(a.base, R, a.base.element(t)) for t in a.x}
    return out


def cmd_kr_member(a):
    spec = kr.KrSpec(a.base, parse_subset(a.base, a.Y))
    h = parse_ratfun_t(a.base, a.h)
    w = kr.kr_witness(spec, h)
    return {"member": w is None, "witness": None if w is None else str(w)}


def cmd_kr_axioms(a):
    import random

    spec = kr.KrSpec(a.base, parse_subset(a.base, a.Y))
    if a.f:
        samples = [parse_poly_t(a.base, t) for t in a.f]
    else:
        rng = random.Random(a.seed)
        pool = place_pool(a.base)
        samples = [random_poly_t(a.base, rng, 4, pool) for _ in range(a.samples)]
    axioms = kr.kfr_axiom_check(spec, samples)
    content = [kr.content_formula_check(spec, f) for f in samples]
    return {
        "axioms": axioms.to_dict(),
        "content": {
            "passed": all(c.passed for c in content),
            "checked": sum(c.checked for c in content),
            "violations": [v for c in content for v in c.violations],
        },
    }


def cmd_phi_pullback(a):
    h = parse_ratfun_t(a.base, a.h)
    Fs = kr.phi_pullback(h)
    union = ZarSubset.empty()
    for F in Fs:
        union = union | zr.b_F(a.base, F)
    return {"F": [sorted(str(x) for x in F) for F in Fs], "union": union.to_json()}


def cmd_star_apply(a):
    s = st.StarSpec(parse_subset(a.base, a.Y))
    I = st.FracIdeal.parse(a.base, a.ideal)
    return {"ideal": I.to_json(), "result": st.apply_wedge(s, I).to_json()}


def cmd_star_eq(a):
    Y1, Y2 = parse_subset(a.base, a.Y1), parse_subset(a.base, a.Y2)
    st.StarSpec(Y1), st.StarSpec(Y2)
    if st.wedge_ft_equal(Y1, Y2):
        return {"equal": True}
    return {"equal": False, "witness": st.distinguishing_ideal(a.base, Y1, Y2).to_json()}


def cmd_star_complete(a):
    Y = parse_subset(a.base, a.Y)
    st.StarSpec(Y)
    return {"complete": True, "witness": st.complete_witness(Y).to_json()}


def cmd_vacant(a):
    if a.Y:
        return st.vacancy_check(parse_subset(a.base, a.Y)).to_dict()
    return st.is_vacant_base(a.base, place_pool(a.base, 5)).to_dict()


def cmd_poset(a):
    P = fs.FinitePoset.from_json(_load_json(a.poset))
    if a.op == "dual":
        return fs.dual(P).to_json()
    if a.op == "check":
        return P.to_json()
    Y = _load_json(a.set) if a.set else []
    if not isinstance(Y, list):
        raise ParseError("--set must be a JSON list of element labels")
    ops = {"cons": fs.cl_cons, "zar": fs.cl_zar, "inv": fs.cl_inv, "sp": fs.sp_closure, "gen": fs.gen_closure}
    result = ops[a.op](P, Y)
    return {"op": a.op, "result": [e for e in P.elements if e in result]}


def cmd_suite(a):
    reports = run_suite(a.name, a.seed)
    return {
        "seed": a.seed,
        "passed": all(r.passed for r in reports),
        "checked": sum(r.checked for r in reports),
        "suites": [r.to_dict() for r in reports],
    }


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _base(text: str) -> BasePair:
    return BasePair.parse(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zrspace", description="Closures, Kronecker function rings and semistar operations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_, base=True):
        p = sub.add_parser(name, help=help_)
        if base:
            p.add_argument("--base", type=_base, default=BasePair("q-z"), help="q-z, qx-qx, fpx-fpx:p or fpx-fp:p")
        p.set_defaults(func=fn)
        return p

    subset_help = "JSON object, path to a JSON file, or one of: all, all+K, K, empty"

    p = add("closure", cmd_closure, "closure of a subset of Zar(K|A)")
    p.add_argument("--kind", required=True, choices=["cons", "zar", "inv", "gen", "sp"])
    p.add_argument("--set", required=True, help=subset_help)

    p = add("limit", cmd_limit, "ultrafilter limit points")
    p.add_argument("--set", required=True, help=subset_help)
    p.add_argument("--ultrafilter", help="'free', 'K' or a place such as p:2; omit to list classes")
    p.add_argument("--count", type=int, default=10, help="classes to list when --ultrafilter is omitted")

    p = add("bx", cmd_bx, "the basic open B_F")
    p.add_argument("--x", action="append", required=True, help="element of K (repeatable)")

    p = add("intersect", cmd_intersect, "the ring cap of V over V in Y")
    p.add_argument("--set", required=True, help=subset_help)
    p.add_argument("--x", action="append", help="test membership of an element (repeatable)")

    p = add("kr-member", cmd_kr_member, "membership in Kr(Y)")
    p.add_argument("--Y", required=True, help=subset_help)
    p.add_argument("--h", required=True, help='rational function in T, e.g. "(2+T)/(1+2*T)"')

    p = add("kr-axioms", cmd_kr_axioms, "K-function ring axioms and content formula")
    p.add_argument("--Y", required=True, help=subset_help)
    p.add_argument("--f", action="append", help="polynomial in T (repeatable); random samples if omitted")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = add("phi-pullback", cmd_phi_pullback, "the sets F_ij and the union of their opens")
    p.add_argument("--h", required=True)

    p = add("star-apply", cmd_star_apply, "apply wedge_Y to a fractional ideal")
    p.add_argument("--Y", required=True, help=subset_help)
    p.add_argument("--ideal", required=True, help='e.g. "ideal:[6, 4/3]"')

    p = add("star-eq", cmd_star_eq, "compare the finite-type parts of two wedge operations")
    p.add_argument("--Y1", required=True, help=subset_help)
    p.add_argument("--Y2", required=True, help=subset_help)

    p = add("star-complete", cmd_star_complete, "a completeness witness for wedge_Y")
    p.add_argument("--Y", required=True, help=subset_help)

    p = add("vacant", cmd_vacant, "vacancy of A, or the vacancy check for one subset")
    p.add_argument("--Y", help=subset_help)

    p = add("poset", cmd_poset, "finite spectral space operations", base=False)
    p.add_argument("--poset", required=True, help='{"elements": [...], "leq": [[a, b], ...]} or a file')
    p.add_argument("--op", required=True, choices=["cons", "zar", "inv", "sp", "gen", "dual", "check"])
    p.add_argument("--set", help="JSON list of element labels")

    p = add("suite", cmd_suite, "run an acceptance suite", base=False)
    p.add_argument("name", choices=sorted(SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


def _emit_error(kind: str, exc: Exception) -> None:
    print(json.dumps({"error": kind, "type": type(exc).__name__, "message": str(exc)}), file=sys.stderr)


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        out = args.func(args)
    except ParseError as exc:
        _emit_error("parse", exc)
        return 2
    except (ZrError, ZeroDivisionError) as exc:
        _emit_error("domain", exc)
        return 1
    print(json.dumps(out, indent=None if args.command != "suite" else 2))
    if args.command == "suite" and not out["passed"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
