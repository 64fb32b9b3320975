"""ctxlab command line.

Exit codes: 0 success, 1 when an analysis assertion fails (``--separating``,
``--at-most-one``, ``--require-admissible``, failed realization check) or an
analysis error occurs, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .catalog import catalog, catalog_names
from .coloring import (
    check_coloring,
    chromatic_number,
    enumerate_colorings,
    find_coloring,
)
from .dsl import parse_logic, parse_values, serialize_logic
from .errors import CtxlabError, NonUniform, ParseError, UnknownCatalogName, UnknownVertex
from .export import to_jsonable
from .hypergraph import LogicBundle, incidence_profile, uniformity
from .polytope import CoordinateSpec, evaluate_coordinates, facet_enumeration, verify_hrep
from .realization import complete_realization, verify_realization
from .states import (
    RationalState,
    aggregability_report,
    check_rational_state,
    enumerate_states,
    fractional_reachable,
    fractional_state,
    middle_state,
    separating_report,
    subset_value_profile,
)


class UsageError(Exception):
    pass


def _load(args, stdin) -> LogicBundle:
    if args.catalog and args.input:
        raise UsageError("give either an input file or --catalog, not both")
    if args.catalog:
        return catalog(args.catalog)
    if not args.input:
        raise UsageError("no input: give a file, '-' for standard input, or --catalog NAME")
    if args.input == "-":
        return parse_logic(stdin.read(), name="stdin", strict=args.strict)
    path = Path(args.input)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    return parse_logic(text, name=path.stem, strict=args.strict)


def _names(arg: str) -> list[str]:
    return [x for x in arg.split(",") if x]


_PAIR = re.compile(r"\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)")


def parse_coords(text: str) -> CoordinateSpec:
    kind, sep, body = text.partition(":")
    if not sep:
        raise UsageError(f"--coords must start with 'pairs:' or 'probs:', got {text!r}")
    if kind == "probs":
        return CoordinateSpec.probability(_names(body))
    if kind == "pairs":
        pairs = _PAIR.findall(body)
        if not pairs or _PAIR.sub("", body).replace(",", "").strip():
            raise UsageError(f"cannot read pair list {body!r}; expected (u,v),(u,v),...")
        return CoordinateSpec.pair_product(pairs)
    raise UsageError(f"unknown coordinate kind {kind!r}")


def _select_states(bundle, states, filt: str):
    H = bundle.hypergraph
    ids = list(range(len(states)))
    if filt == "all":
        return ids
    if filt == "aggregable":
        rep = aggregability_report(H)
        return [i for i in ids if rep.witnesses[i] is not None]
    if filt.startswith("exclude:"):
        drop = set()
        for tok in _names(filt[len("exclude:"):]):
            if tok == "middle":
                drop.add(middle_state(bundle, states))
            elif tok.isdigit() and int(tok) < len(states):
                drop.add(int(tok))
            else:
                raise UsageError(f"unknown state id {tok!r} (0..{len(states) - 1} or 'middle')")
        return [i for i in ids if i not in drop]
    raise UsageError(f"unknown filter {filt!r}")


def _fmt_ineq(ineq, labels) -> str:
    terms = []
    for a, lab in zip(ineq.normal, labels):
        if a == 0:
            continue
        sign = "-" if a < 0 else "+"
        mag = "" if abs(a) == 1 else f"{abs(a)} "
        terms.append(f"{sign} {mag}{lab}")
    lhs = " ".join(terms).lstrip("+ ") if terms else "0"
    if lhs.startswith("- "):
        lhs = "-" + lhs[2:]
    return f"{lhs} >= {ineq.bound}"


# subcommands; each returns (payload dict, text lines, exit code)


def cmd_validate(bundle, args):
    H = bundle.hypergraph
    prof = incidence_profile(H)
    try:
        n = uniformity(H)
        offending = []
    except NonUniform as exc:
        n, offending = None, exc.offending
    covered = len(bundle.realization.rays) if bundle.realization else 0
    payload = {
        "vertices": H.n_vertices,
        "contexts": H.n_contexts,
        "uniformity": n,
        "nonuniform_contexts": offending,
        "degrees": prof.degrees,
        "intertwiners": list(prof.intertwiners),
        "rays": covered,
    }
    lines = [
        f"vertices     {H.n_vertices}",
        f"contexts     {H.n_contexts}",
        f"uniformity   {n if n is not None else 'none (contexts ' + str(offending) + ')'}",
        f"intertwiners {len(prof.intertwiners)}: {' '.join(prof.intertwiners)}",
        f"rays         {covered} of {H.n_vertices}",
    ]
    return payload, lines, 0


def cmd_chroma(bundle, args):
    H = bundle.hypergraph
    rep = chromatic_number(H, k_max=args.max_k)
    payload = to_jsonable(rep, H)
    n = uniformity(H) if H.contexts else 0
    payload["uniformity"] = n
    payload["witness_exclusive"] = (
        check_coloring(H, rep.witness).exclusive if rep.witness is not None else None
    )
    lines = [f"chromatic number: {rep.chromatic_number}"]
    for k in rep.exhausted:
        lines.append(f"  k={k}: exhausted, no exclusive coloring ({rep.nodes[k]} nodes)")
    if rep.witness is not None and H.contexts:
        lines.append(f"  witness (k={rep.chromatic_number}):")
        for name, c in rep.witness.as_mapping(H).items():
            lines.append(f"    {name:>8} {c}")
    if args.enumerate and H.contexts:
        reps = list(enumerate_colorings(H, rep.chromatic_number, True,
                                        max_colors=max(6, rep.chromatic_number)))
        payload["colorings"] = [to_jsonable(c, H) for c in reps]
        lines.append(f"colorings up to relabeling: {len(reps)}")
        for c in reps:
            lines.append("  " + " ".join(str(x) for x in c.assignment))
    code = 0
    if args.require_admissible:
        admissible = rep.chromatic_number == n
        payload["admissible"] = admissible
        lines.append(f"admissible coloring exists: {admissible}")
        if not admissible:
            code = 1
    return payload, lines, code


def cmd_states(bundle, args):
    H = bundle.hypergraph
    states = enumerate_states(H)
    payload = {"count": len(states), "states": [s.ones() for s in states]}
    lines = [f"two-valued states: {len(states)}"]
    for i, s in enumerate(states):
        lines.append(f"  {i:>4}  {' '.join(s.ones())}")
    code = 0
    if args.separating:
        sep = separating_report(H, states)
        payload["separating"] = sep.separating
        payload["unseparated_pairs"] = [list(p) for p in sep.unseparated_pairs]
        lines.append(f"separating: {sep.separating}")
        for u, v in sep.unseparated_pairs:
            lines.append(f"  unseparated: {u} {v}")
        if not sep.separating:
            code = 1
    if args.at_most_one:
        subset = _names(args.at_most_one)
        H.indices(subset)
        best = subset_value_profile(states, subset)
        payload["at_most_one"] = {"subset": subset, "max_ones": best, "holds": best <= 1}
        lines.append(f"max simultaneous 1s on {','.join(subset)}: {best}")
        if best > 1:
            code = 1
    return payload, lines, code


def cmd_aggregate(bundle, args):
    H = bundle.hypergraph
    rep = aggregability_report(H)
    payload = to_jsonable(rep, H)
    agg = sum(w is not None for w in rep.witnesses)
    lines = [
        f"two-valued states: {len(rep.states)}",
        f"aggregable:        {agg}",
        f"non-aggregable:    {len(rep.states) - agg}",
    ]
    for i, (s, w) in enumerate(zip(rep.states, rep.witnesses)):
        if w is None:
            lines.append(f"  {i:>4}  {' '.join(s.ones())}  (no coloring)")
        elif args.report:
            c, color = w
            lines.append(f"  {i:>4}  {' '.join(s.ones())}  color {color} of "
                         + " ".join(str(x) for x in c.assignment))
    return payload, lines, 0


def _parse_value_map(text: str) -> dict[int, Fraction]:
    out = {}
    for item in _names(text):
        key, sep, val = item.partition("=")
        if not sep or not key.strip().isdigit():
            raise UsageError(f"expected color=value, got {item!r}")
        try:
            out[int(key)] = Fraction(val.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad value {val!r}") from None
    return out


def cmd_fractional(bundle, args):
    H = bundle.hypergraph
    if bool(args.values) == bool(args.target):
        raise UsageError("give exactly one of --values or --target")
    n = uniformity(H)
    if args.values:
        c = find_coloring(H, n, require_complete=True)
        if c is None:
            payload = {"admissible_coloring": None, "state": None}
            return payload, ["no admissible coloring: chromatic number exceeds uniformity"], 1
        st = fractional_state(H, c, _parse_value_map(args.values))
        payload = {"coloring": to_jsonable(c, H), "state": to_jsonable(st)}
        lines = ["coloring: " + " ".join(f"{k}={v}" for k, v in c.as_mapping(H).items())]
        lines += [f"  {n_:>8} {v}" for n_, v in zip(st.names, st.values)]
        return payload, lines, 0
    try:
        text = Path(args.target).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.target}: {exc.strerror}") from None
    target = RationalState.from_mapping(H, parse_values(text))
    check = check_rational_state(H, target)
    if not check.valid:
        payload = {"valid": False, "context_sums": [str(s) for s in check.context_sums],
                   "reachable": None}
        return payload, ["target is not a valid state (context sums "
                         + ", ".join(str(s) for s in check.context_sums) + ")"], 1
    w = fractional_reachable(H, target)
    payload = {"valid": True, "reachable": w is not None}
    lines = ["target is a valid state", f"reachable from a coloring: {w is not None}"]
    if w is not None:
        c, vals = w
        payload["witness"] = {"coloring": to_jsonable(c, H), "values": [str(v) for v in vals]}
        lines.append("  values: " + ", ".join(f"{i}={v}" for i, v in enumerate(vals)))
    return payload, lines, 0


def cmd_verify(bundle, args):
    H = bundle.hypergraph
    if bundle.realization is None:
        raise UsageError("the logic carries no rays")
    R = bundle.realization
    if not R.covers(H) and R.dimension == 3:
        R = complete_realization(H, R.rays)
    if not R.covers(H):
        missing = [v for v in H.names if v not in R.rays]
        raise UsageError(f"rays missing for {missing} and cannot be completed")
    rep = verify_realization(H, R, faithful=args.faithful)
    payload = to_jsonable(rep)
    payload["rays"] = {n: list(R.rays[n]) for n in H.names}
    lines = [f"contexts checked: {H.n_contexts}", f"orthogonal and full rank: {rep.contexts_ok}"]
    for c, u, v, ip in rep.context_violations:
        lines.append(f"  context {c}: {u}.{v} = {ip}")
    for c, r in rep.rank_violations:
        lines.append(f"  context {c}: rank {r}")
    for u, v in rep.duplicate_rays:
        lines.append(f"  same ray: {u} {v}")
    if args.faithful:
        lines.append(f"faithful: {rep.faithful}")
        for u, v in rep.faithfulness_exceptions:
            lines.append(f"  extra orthogonality: {u} {v}")
    return payload, lines, 0 if rep.ok else 1


def cmd_hull(bundle, args):
    H = bundle.hypergraph
    spec = parse_coords(args.coords)
    for v in spec.vertices + tuple(x for p in spec.pairs for x in p):
        H.index(v)
    states = enumerate_states(H)
    keep = _select_states(bundle, states, args.filter)
    chosen = [states[i] for i in keep]
    if not chosen:
        raise UsageError("the filter leaves no states")
    image = evaluate_coordinates(chosen, spec)
    hrep = facet_enumeration(image.points)
    check = verify_hrep(image.points, hrep)
    labels = spec.labels()
    payload = {
        "coordinates": labels,
        "states_used": keep,
        "points": len(image.points),
        "hrep": to_jsonable(hrep),
        "sound": check.sound,
    }
    lines = [
        f"states used: {len(keep)} of {len(states)}; distinct points: {len(image.points)}",
        f"affine dimension: {hrep.dimension}",
    ]
    for e in hrep.equality_rows():
        lines.append("  equality: " + _fmt_ineq(e, labels).replace(">=", "=="))
    lines.append(f"facets: {len(hrep.facets)}")
    for f in hrep.facets:
        lines.append("  " + _fmt_ineq(f, labels))
    return payload, lines, 0


def _cmd_catalog(args, out):
    if args.action == "list":
        if args.json:
            json.dump({"kind": "catalog", "names": catalog_names()}, out, indent=2)
            out.write("\n")
        else:
            for n in catalog_names():
                b = catalog(n)
                alias = f" (aliases: {', '.join(b.aliases)})" if b.aliases else ""
                out.write(f"{n}{alias}: {b.notes or 'demo'}\n")
        return 0
    if not args.name:
        raise UsageError("catalog show needs a NAME")
    b = catalog(args.name)
    if args.json:
        json.dump({"kind": "catalog", "name": b.name, "document": serialize_logic(b)}, out, indent=2)
        out.write("\n")
    else:
        out.write(serialize_logic(b))
    return 0


COMMANDS = {
    "validate": cmd_validate,
    "chroma": cmd_chroma,
    "states": cmd_states,
    "aggregate": cmd_aggregate,
    "fractional": cmd_fractional,
    "verify-realization": cmd_verify,
    "hull": cmd_hull,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="logic file, or '-' for standard input")
    common.add_argument("--catalog", metavar="NAME", help="use a built-in logic")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--strict", action="store_true", help="require vertex declarations")

    p = argparse.ArgumentParser(prog="ctxlab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"ctxlab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common], help="structure and uniformity report")

    s = sub.add_parser("chroma", parents=[common], help="chromatic number with certificates")
    s.add_argument("--max-k", type=int, default=None, metavar="K")
    s.add_argument("--enumerate", action="store_true", help="list colorings up to relabeling")
    s.add_argument("--require-admissible", action="store_true",
                   help="exit 1 unless the chromatic number equals the uniformity")

    s = sub.add_parser("states", parents=[common], help="two-valued states")
    s.add_argument("--separating", action="store_true", help="exit 1 unless separating")
    s.add_argument("--at-most-one", metavar="V1,V2,...",
                   help="exit 1 if some state gives 1 to two of these vertices")

    s = sub.add_parser("aggregate", parents=[common], help="which states come from colorings")
    s.add_argument("--report", action="store_true", help="show a witness for each state")

    s = sub.add_parser("fractional", parents=[common], help="states from weighted colors")
    s.add_argument("--values", metavar="C=V,...", help="weights per color, e.g. 0=1/2,1=1/2,2=0")
    s.add_argument("--target", metavar="FILE", help="'name value' lines of a rational state")

    s = sub.add_parser("verify-realization", parents=[common], help="exact orthogonality check")
    s.add_argument("--faithful", action="store_true", help="also report extra orthogonalities")

    s = sub.add_parser("hull", parents=[common], help="facets of the correlation polytope")
    s.add_argument("--coords", required=True,
                   help="pairs:(u,v),(u,v),... or probs:v1,v2,...")
    s.add_argument("--filter", default="all",
                   help="all | aggregable | exclude:ID,... (ID = state index or 'middle')")

    s = sub.add_parser("catalog", help="built-in logics")
    s.add_argument("action", choices=["list", "show"])
    s.add_argument("name", nargs="?")
    s.add_argument("--json", action="store_true")
    return p


def run(argv=None, stdout=None, stdin=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    inp = stdin or sys.stdin
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "catalog":
            return _cmd_catalog(args, out)
        bundle = _load(args, inp)
        payload, lines, code = COMMANDS[args.command](bundle, args)
    except (UsageError, ParseError, UnknownCatalogName, UnknownVertex) as exc:
        err.write(f"ctxlab: error: {exc}\n")
        return 2
    except CtxlabError as exc:
        err.write(f"ctxlab: {type(exc).__name__}: {exc}\n")
        return 1
    if args.json:
        doc = {"kind": args.command, "logic": bundle.name, **payload}
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        out.write("\n".join(lines) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
