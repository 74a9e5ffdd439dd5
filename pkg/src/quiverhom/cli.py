"""Command line front end.

Input is a presentation file, `-` for the same text on stdin, or a
construction shorthand such as `kupisch:2,2,3`.  Output goes to stdout in
a plain text rendering or, with `--format structured`, as versioned JSON
that is byte-identical across runs with the same inputs.

Exit codes: 0 success, 1 computational failure, 2 unparseable input,
3 verification mismatch.
"""
import argparse
import os
import sys

from . import catalog, dsl, verify
from .errors import (
    ExtProjective, NotInSubcategory, ParseError, ProjectiveInput,
    QuiverhomError, UnknownExampleId,
)
from .homology import projective_resolution
from .invariants import (
    canonical_test_set, invariant_report, projective_dimension,
)
from .modules import regular_rep, simple_rep
from .relar import relative_ar_sequence
from .reports import emit_report
from .stratify import (
    characteristic_cotilting, characteristic_tilting, classify_stratification,
    filtration_test, search_orders, tilting_conjecture_report, verify_tilting,
)

_RELAR_SKIP = {
    "NotInSubcategory": "outside subcategory",
    "ExtProjective": "relatively projective",
    "ProjectiveInput": "projective",
}


def _load(text):
    """(spec or None, algebra, echo string) from the input argument."""
    if text == "-":
        spec = dsl.parse_algebra_dsl(sys.stdin.read())
        return spec, spec.build(), "<stdin>"
    if os.path.exists(text):
        with open(text, "r", encoding="utf-8") as fh:
            body = fh.read()
        spec = dsl.parse_algebra_dsl(body)
        return spec, spec.build(), text
    if catalog.is_construction_text(text):
        return None, catalog.parse_construction(text), text
    raise ParseError(
        "input %r is neither an existing file, '-', nor a construction "
        "shorthand" % (text,))


def _base(args, command, echo):
    return {"command": command, "input": echo, "bound": args.bound,
            "seed": args.seed}


def _parse_order(text, a):
    try:
        order = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ParseError("order must be comma-separated integers, got %r"
                         % (text,))
    if sorted(order) != sorted(a.quiver.vertices):
        raise ParseError("order %r is not a permutation of the vertices %s"
                         % (text, sorted(a.quiver.vertices)))
    return order


def _pick_order(args, spec, a):
    """Explicit flag first, then a DSL order directive, else None."""
    if getattr(args, "order", None):
        return _parse_order(args.order, a)
    if spec is not None and spec.order is not None:
        return spec.order
    return None


def _duality(spec):
    return spec is not None and spec.duality_asserted


def _cmd_analyze(args):
    _, a, echo = _load(args.input)
    rep = _base(args, "analyze", echo)
    rep.update(invariant_report(a, args.bound))
    rep["gordim"] = rep["gordim_right"]
    return rep, 0


def _cmd_resolve(args):
    _, a, echo = _load(args.input)
    rows = []
    for v in sorted(a.quiver.vertices):
        s = simple_rep(a, v)
        pd = projective_dimension(s, args.bound)
        res = projective_resolution(s)
        depth = (pd.onset or 0) + (pd.period or 1) if pd.is_infinite else pd.n
        rows.append({
            "vertex": v,
            "projdim": pd,
            "cover_vertices": [sorted(res.term(i).proj_summand_vertices)
                               for i in range(depth + 1)],
        })
    rep = _base(args, "resolve", echo)
    rep["simples"] = rows
    return rep, 0


def _cmd_stratify(args):
    spec, a, echo = _load(args.input)
    rep = _base(args, "stratify", echo)
    order = _pick_order(args, spec, a)
    if order is not None and not args.all_orders:
        st = classify_stratification(a, order, args.bound,
                                     duality_asserted=_duality(spec))
        rep["order"] = list(order)
        rep.update(st.flags())
        rep["families"] = [{
            "vertex": v,
            "standard": st.delta[v].dim_vector(),
            "proper_standard": st.deltabar[v].dim_vector(),
            "costandard": st.nabla[v].dim_vector(),
            "proper_costandard": st.nablabar[v].dim_vector(),
        } for v in st.order]
        ok, mults = filtration_test(regular_rep(a), "delta", st)
        rep["regular_standard_filtration"] = {
            "filtered": ok,
            "multiplicities": {v: mults.get(v, 0) for v in sorted(mults)}
            if mults else {},
        }
        return rep, 0
    rows = search_orders(a, args.bound, seed=args.seed)
    rep["orders"] = [dict(r, order=list(r["order"])) for r in rows]
    return rep, 0


def _cmd_tilting(args):
    spec, a, echo = _load(args.input)
    order = _pick_order(args, spec, a) or tuple(sorted(a.quiver.vertices))
    st = classify_stratification(a, order, args.bound,
                                 duality_asserted=_duality(spec))
    t = characteristic_tilting(a, st, args.bound)
    st.tilting = t
    rep = _base(args, "tilting", echo)
    rep["order"] = list(order)
    rep["route"] = t.route
    rep["projdim"] = t.projdim
    rep["summands"] = [s.dim_vector() for s in t.summands]
    rep["verification"] = verify_tilting(a, t.module, args.bound)
    if _duality(spec):
        ct = characteristic_cotilting(a, st, args.bound)
        st.cotilting = ct
        rep["cotilting_summands"] = [s.dim_vector() for s in ct.summands]
        rep["conjecture"] = tilting_conjecture_report(a, st, args.bound)
    return rep, 0


def _cmd_relar(args):
    _, a, echo = _load(args.input)
    rep = _base(args, "relar", echo)
    rep["level"] = args.level
    rows = []
    for name, m in canonical_test_set(a):
        if m.is_zero():
            continue
        try:
            res = relative_ar_sequence(m, args.level)
        except (NotInSubcategory, ExtProjective, ProjectiveInput) as e:
            rows.append({"module": name,
                         "status": _RELAR_SKIP[type(e).__name__]})
            continue
        rows.append({
            "module": name,
            "status": "sequence",
            "translate": res.translate.dim_vector(),
            "middle": res.middle.dim_vector(),
            "ext1_dim": res.ext1_dim,
            "determinate": res.determinate,
        })
    rep["modules"] = rows
    return rep, 0


def _cmd_verify_paper(args):
    ids = verify.all_example_ids() if args.id == "all" else [args.id]
    results = [verify.verify_paper_example(i, args.bound, args.seed)
               for i in ids]
    ok = all(r["pass"] for r in results)
    rep = {"command": "verify-paper", "bound": args.bound, "seed": args.seed,
           "pass": ok, "results": results}
    return rep, 0 if ok else 3


_HANDLERS = {
    "analyze": _cmd_analyze,
    "resolve": _cmd_resolve,
    "stratify": _cmd_stratify,
    "tilting": _cmd_tilting,
    "relar": _cmd_relar,
    "verify-paper": _cmd_verify_paper,
}


def build_parser():
    p = argparse.ArgumentParser(
        prog="quiverhom",
        description="Exact homological invariants of bound quiver algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_input=True):
        if with_input:
            sp.add_argument("input", help="presentation file, '-' for "
                            "stdin, or a shorthand like kupisch:2,2,3")
        sp.add_argument("--bound", type=int, default=64,
                        help="search depth cap (default 64)")
        sp.add_argument("--seed", type=int, default=0,
                        help="seed for randomized batteries (default 0)")
        sp.add_argument("--format", choices=("text", "structured"),
                        default="text", help="output format")

    common(sub.add_parser("analyze", help="headline invariants"))
    common(sub.add_parser("resolve",
                          help="projective resolutions of the simples"))
    sp = sub.add_parser("stratify", help="stratification classification")
    common(sp)
    sp.add_argument("--order", help="comma-separated vertex order")
    sp.add_argument("--all-orders", action="store_true",
                    help="classify every vertex order")
    sp = sub.add_parser("tilting", help="characteristic tilting module")
    common(sp)
    sp.add_argument("--order", help="comma-separated vertex order")
    sp = sub.add_parser("relar",
                        help="relative almost-split sequences by level")
    common(sp)
    sp.add_argument("--level", type=int, default=1,
                    help="dominant-dimension level of the subcategory")
    sp = sub.add_parser("verify-paper",
                        help="recorded benchmark verification by id")
    sp.add_argument("id", help="benchmark id, or 'all'")
    common(sp, with_input=False)
    return p


def run(argv):
    """Parse argv, execute, print the report; returns the exit code.
    Raises on bad input or computational failure."""
    args = build_parser().parse_args(argv)
    rep, code = _HANDLERS[args.command](args)
    sys.stdout.buffer.write(emit_report(rep, args.format))
    sys.stdout.buffer.flush()
    return code


def main(argv=None):
    try:
        return run(sys.argv[1:] if argv is None else list(argv))
    except (ParseError, UnknownExampleId) as e:
        print("parse error: %s" % e, file=sys.stderr)
        return 2
    except QuiverhomError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
