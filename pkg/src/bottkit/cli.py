"""Command-line front end.

Indices on the command line are 1-based; everything inside the library is
0-based.  Results go to stdout, diagnostics to stderr.

Exit codes: 0 success, 2 unparsable input, 3 violated precondition,
4 oracle counterexample, 1 anything else.
"""

from __future__ import annotations

import argparse
import contextlib
import re
import sys
from typing import Sequence

from . import serialize
from .bott import bott_cohomology, check_sigma
from .errors import BottKitError, InputError, ParseError, PreconditionError
from .oracle import SweepSpec, index_bound_sweep
from .parabolic import analyze_parabolic, d_alpha, d_P, ell_alpha, ell_P, min_nontrivial_dim
from .rootsys import DynkinDiagram, Weight, build_diagram, inner
from .vanishing import (
    ABConfig,
    rigidity_check,
    semisimple_B,
    semisimple_vanishing,
    significant_roots,
    theorem_H1_range,
    theorem_main_range,
)

EXIT_OK, EXIT_ERROR, EXIT_PARSE, EXIT_PRECONDITION, EXIT_ORACLE = 0, 1, 2, 3, 4

_VALUE_OPTIONS = ("--weight", "--bounds", "--sigma", "--a", "--b")


def parse_indices(text: str, rank: int, what: str) -> frozenset[int]:
    """``"1,3,4"`` -> ``{0, 2, 3}``; the empty string is the empty set."""
    text = text.strip()
    if not text:
        return frozenset()
    out = set()
    pos = 0
    for tok in text.split(","):
        stripped = tok.strip()
        if not re.fullmatch(r"\d+", stripped):
            raise ParseError(f"{what}: expected a positive integer, got {stripped!r}", text, pos)
        k = int(stripped)
        if not 1 <= k <= rank:
            raise ParseError(f"{what}: index {k} outside 1..{rank}", text, pos)
        out.add(k - 1)
        pos += len(tok) + 1
    return frozenset(out)


def parse_weight(text: str, rank: int) -> Weight:
    """Comma-separated integers in fundamental coordinates."""
    if re.search(r"[aA]\d|alpha", text):
        raise ParseError("weights are read in fundamental coordinates only; "
                         "convert simple-root coordinates with the Cartan matrix first", text, 0)
    pos = 0
    coords = []
    for tok in text.split(",") if text.strip() else []:
        t = tok.strip()
        if not re.fullmatch(r"[+-]?\d+", t):
            raise ParseError(f"weight: expected an integer, got {t!r}", text, pos)
        coords.append(int(t))
        pos += len(tok) + 1
    if len(coords) != rank:
        raise ParseError(f"weight needs {rank} coordinates, got {len(coords)}", text, 0)
    return Weight(tuple(coords))


def parse_bounds(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*([+-]?\d+)\s*(?:,|\.\.)\s*([+-]?\d+)\s*", text)
    if not m:
        raise ParseError("bounds: expected LO,HI", text, 0)
    return int(m.group(1)), int(m.group(2))


def _one_based(idx) -> list[int]:
    return [i + 1 for i in sorted(idx)]


# -- subcommands ------------------------------------------------------------------

def cmd_roots(args, d: DynkinDiagram) -> dict:
    roots = d.positive_roots
    return {
        "command": "roots",
        "diagram": d.name,
        "count": len(roots),
        "roots": [{"coeffs": r, "norm": inner(d, r, r), "component": d.component_of(min(r.support)) + 1}
                  for r in roots],
    }


def cmd_bott(args, d: DynkinDiagram) -> dict:
    sigma = parse_indices(args.sigma, d.rank, "sigma")
    lam = parse_weight(args.weight, d.rank)
    res = bott_cohomology(d, sigma, lam)
    return {"command": "bott", "diagram": d.name, "sigma": _one_based(sigma),
            "input": lam, "result": res}


def cmd_vanish(args, d: DynkinDiagram) -> dict:
    sigma = parse_indices(args.sigma, d.rank, "sigma")
    out = {"command": "vanish", "criterion": args.criterion, "diagram": d.name,
           "sigma": _one_based(sigma)}
    if args.criterion == "main":
        lam = parse_weight(args.weight[0], d.rank)
        cfg = ABConfig(parse_indices(args.a, d.rank, "a"), parse_indices(args.b, d.rank, "b"))
        q_max = theorem_main_range(d, sigma, lam, cfg)
        out.update(weight=lam, a=_one_based(cfg.a), b=_one_based(cfg.b), q_max=q_max,
                   witnesses=significant_roots(d, sigma, cfg))
    elif args.criterion == "semisimple":
        weights = [parse_weight(w, d.rank) for w in args.weight]
        q_max = semisimple_vanishing(d, sigma, weights)
        b = semisimple_B(d, check_sigma(d, sigma), weights)
        parts = []
        for lam in weights:
            a = frozenset(i for i in range(d.rank) if i not in sigma and lam.fcoords[i] < 0)
            entry = {"weight": lam, "a": _one_based(a)}
            if a:
                wit = significant_roots(d, sigma, ABConfig(a, b))
                entry.update(ell=len(wit), witnesses=wit)
            parts.append(entry)
        out.update(b=_one_based(b), q_max=q_max, unbounded=q_max is None, parts=parts)
    else:
        pd = analyze_parabolic(d, sigma)
        rng = theorem_H1_range(pd, args.dim)
        out.update(dim=args.dim, d_P=d_P(pd), ell_P=ell_P(pd), range=rng,
                   guarantee=rng is not None, rigid=rigidity_check(pd, args.dim))
    return out


def cmd_invariants(args, d: DynkinDiagram) -> dict:
    sigma = parse_indices(args.sigma, d.rank, "sigma")
    pd = analyze_parabolic(d, sigma)
    dp = d_P(pd)
    rows = []
    for alpha in pd.outside:
        comps = [{"nodes": _one_based(c.nodes), "type": c.type.name,
                  "d": min_nontrivial_dim(c.type)} for c in pd.adjacent_components(alpha)]
        rows.append({"alpha": alpha + 1, "d": d_alpha(pd, alpha), "ell": ell_alpha(pd, alpha),
                     "components": comps})
    return {"command": "invariants", "diagram": d.name, "sigma": _one_based(sigma),
            "dim_G_P": pd.dimension, "alphas": rows, "d_P": dp, "ell_P": ell_P(pd),
            "rigid_below": dp if dp > 1 else None}


def cmd_sweep(args, d: DynkinDiagram) -> dict:
    sigma = parse_indices(args.sigma, d.rank, "sigma")
    cfg = ABConfig(parse_indices(args.a, d.rank, "a"), parse_indices(args.b, d.rank, "b"))
    spec = SweepSpec(d, sigma, cfg, parse_bounds(args.bounds), seed=args.seed)
    report = serialize.encode(index_bound_sweep(spec, strict=False))
    for key in ("sigma", "a", "b"):
        report[key] = [i + 1 for i in report[key]]
    return {"command": "sweep", "report": report}


# -- text rendering ---------------------------------------------------------------

def _fmt(x) -> str:
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(_fmt(v) for v in x) + ")"
    return str(x)


def render_text(doc: dict) -> str:
    """Human-readable rendering of a JSON-ready document."""
    cmd = doc["command"]
    lines = []
    if cmd == "roots":
        lines.append(f"{doc['diagram']}: {doc['count']} positive roots")
        for r in doc["roots"]:
            lines.append(f"  {_fmt(r['coeffs'])}  norm {r['norm']}  component {r['component']}")
    elif cmd == "bott":
        res = doc["result"]
        lines.append(f"{doc['diagram']} sigma={_fmt(doc['sigma'])} weight={_fmt(doc['input'])}")
        if res["kind"] == "AllZero":
            lines.append("AllZero")
        else:
            lines.append(f"Concentrated degree {res['degree']} weight {_fmt(res['weight'])} "
                         f"dim {res['dim']}")
    elif cmd == "vanish":
        crit = doc["criterion"]
        lines.append(f"{doc['diagram']} sigma={_fmt(doc['sigma'])} criterion={crit}")
        if crit == "main":
            lines.append(f"weight {_fmt(doc['weight'])} A {_fmt(doc['a'])} B {_fmt(doc['b'])}")
            lines.append(f"q_max {doc['q_max']}  (H^q = 0 for 0 <= q < {doc['q_max']})")
            for w in doc["witnesses"]:
                lines.append(f"  significant {_fmt(w['root'])} via {_fmt(w['sigma'])} "
                             f"[{w['fastpath'] or 'search'}]")
        elif crit == "semisimple":
            lines.append(f"B {_fmt(doc['b'])}")
            for p in doc["parts"]:
                ell = p.get("ell", "-")
                lines.append(f"  weight {_fmt(p['weight'])} A {_fmt(p['a'])} ell {ell}")
            if doc["unbounded"]:
                lines.append("q_max unbounded  (H^q = 0 for all q > 0)")
            else:
                lines.append(f"q_max {doc['q_max']}  (H^q = 0 for 0 < q < {doc['q_max']})")
        else:
            lines.append(f"d(P) {doc['d_P']} ell(P) {doc['ell_P']} dim {doc['dim']}")
            if doc["guarantee"]:
                r = doc["range"]
                lines.append(f"range ({r['lo']}, {r['hi']})  (H^q = 0 for {r['lo']} < q < {r['hi']})")
            else:
                lines.append("NoGuarantee")
            lines.append(f"rigid {'yes' if doc['rigid'] else 'no'}")
    elif cmd == "invariants":
        lines.append(f"{doc['diagram']} sigma={_fmt(doc['sigma'])} dim G/P {doc['dim_G_P']}")
        for row in doc["alphas"]:
            comps = ", ".join(f"{c['type']}{_fmt(c['nodes'])} d={c['d']}" for c in row["components"])
            lines.append(f"  alpha {row['alpha']}: d {row['d']} ell {row['ell']}  [{comps or 'isolated'}]")
        lines.append(f"d(P) {doc['d_P']} ell(P) {doc['ell_P']}")
        if doc["rigid_below"] is None:
            lines.append("rigidity: no guarantee")
        else:
            lines.append(f"rigidity: guaranteed for generating dimension < {doc['rigid_below']}")
    elif cmd == "sweep":
        r = doc["report"]
        lines.append(f"{r['diagram']} sigma={_fmt(r['sigma'])} A={_fmt(r['a'])} B={_fmt(r['b'])} "
                     f"bound {r['bound']} mode {r['mode']} seed {r['seed']}")
        lines.append(f"checked {r['checked']} regular {r['regular']} singular {r['singular']} "
                     f"min index {r['min_index']} violations {len(r['violations'])}")
        for v in r["violations"]:
            lines.append(f"  VIOLATION weight {_fmt(v['weight'])} index {v['index']}")
    return "\n".join(lines)


# -- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bottkit",
        description="Cohomology vanishing for homogeneous bundles on flag manifolds G/P.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, sigma=True):
        p.add_argument("--type", required=True, help='diagram, e.g. "A4" or "A2xB2"')
        if sigma:
            p.add_argument("--sigma", required=True,
                           help='1-based simple roots in the Levi diagram; "" for the Borel')
        p.add_argument("--format", choices=("text", "json"), default="text")

    common(sub.add_parser("roots", help="list positive roots"), sigma=False)

    p = sub.add_parser("bott", help="Bott's theorem for one highest weight")
    common(p)
    p.add_argument("--weight", required=True, help="fundamental coordinates, comma separated")

    p = sub.add_parser("vanish", help="vanishing ranges")
    p.add_argument("criterion", choices=("main", "h1", "semisimple"))
    common(p)
    p.add_argument("--weight", action="append", default=[],
                   help="highest weight (repeat for semisimple)")
    p.add_argument("--a", default="", help="A, 1-based, outside sigma")
    p.add_argument("--b", default="", help="B, 1-based, inside sigma")
    p.add_argument("--dim", type=int, help="dimension of the generating representation")

    common(sub.add_parser("invariants", help="d(alpha), ell(alpha), d(P), ell(P)"))

    p = sub.add_parser("sweep", help="brute-force check of the index bound on a weight box")
    common(p)
    p.add_argument("--a", required=True)
    p.add_argument("--b", default="")
    p.add_argument("--bounds", default="-4,4")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _glue_values(argv: Sequence[str]) -> list[str]:
    # "--weight -1,0" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


COMMANDS = {
    "roots": cmd_roots,
    "bott": cmd_bott,
    "vanish": cmd_vanish,
    "invariants": cmd_invariants,
    "sweep": cmd_sweep,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        if args.command == "vanish":
            if args.criterion in ("main", "semisimple") and not args.weight:
                raise ParseError(f"vanish {args.criterion} needs --weight")
            if args.criterion == "main" and len(args.weight) != 1:
                raise ParseError("vanish main takes exactly one --weight")
            if args.criterion == "h1" and args.dim is None:
                raise ParseError("vanish h1 needs --dim")
        d = build_diagram(args.type)
        doc = serialize.encode(COMMANDS[args.command](args, d))
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=stderr)
        return EXIT_PRECONDITION
    except BottKitError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_ERROR
    if args.format == "json":
        print(serialize.dumps(doc), file=stdout)
    else:
        print(render_text(doc), file=stdout)
    if args.command == "sweep" and doc["report"]["violations"]:
        print("oracle violation: see report", file=stderr)
        return EXIT_ORACLE
    return EXIT_OK


def main() -> None:
    sys.exit(run())
