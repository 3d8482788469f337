"""Command-line front end.

Exit status: 0 when every prediction agrees with the oracle, 2 when some
disagreement was found, 1 on bad input or another runtime error.  Each flag
can also be set through an environment variable ``SCARFKIT_<FLAG>`` (for
example ``SCARFKIT_MAX_VERTICES=5``); explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import _kernels
from .catalog import Graph6Error, canonical_graph6, parse_graph6
from .graphs import SimpleGraph, cover_ideal, parse_edge_list
from .homology import FieldSpec
from .monomials import format_monomial, parse_ideal, power
from .scarf import CapExceeded, bps_failures, is_generic, is_scarf, is_taylor, scarf_complex
from .theorems import FAMILIES, PreconditionError, verdict
from .verify import SWEEP_GENERATOR_CAP, RunConfig, emit_report, run_verification, summarize

EXIT_OK, EXIT_ERROR, EXIT_DISAGREE = 0, 1, 2
ENV_PREFIX = "SCARFKIT_"

log = logging.getLogger("scarfkit")


def _env(name: str, default=None):
    return os.environ.get(ENV_PREFIX + name, default)


def _env_int(name: str, default: int | None = None) -> int | None:
    raw = _env(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: {ENV_PREFIX}{name} must be an integer, got {raw!r}") from None


def _families(text: str) -> tuple[str, ...]:
    fams = tuple(f.strip() for f in text.split(",") if f.strip())
    bad = [f for f in fams if f not in FAMILIES]
    if bad or not fams:
        raise argparse.ArgumentTypeError(f"families must be a comma list from {','.join(FAMILIES)}")
    return fams


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_common(p: argparse.ArgumentParser, *, sweep: bool) -> None:
    p.add_argument("--field", type=_field, default=_env("FIELD", "q"),
                   help="coefficient field: q (rationals) or gf2")
    p.add_argument("--gen-cap", type=int, default=_env_int("GEN_CAP", SWEEP_GENERATOR_CAP),
                   help="refuse ideals with more minimal generators than this")
    p.add_argument("--n-min", type=int, default=_env_int("N_MIN"))
    p.add_argument("--n-max", type=int, default=_env_int("N_MAX"))
    p.add_argument("--families", type=_families, default=_env("FAMILIES", ",".join(FAMILIES)),
                   help="comma-separated subset of " + ",".join(FAMILIES))
    if sweep:
        p.add_argument("--max-vertices", type=int, default=_env_int("MAX_VERTICES"),
                       help="catalog size for every family (default: per-family limits)")
        p.add_argument("--out", default=_env("OUT"), help="NDJSON report path (default: stdout)")
        p.add_argument("--jobs", type=int, default=_env_int("JOBS", 1), help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scarfkit", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    ideal = sub.add_parser("ideal", help="monomial ideal tools")
    isub = ideal.add_subparsers(dest="ideal_command", required=True)
    sc = isub.add_parser("scarf", help="Scarf complex and Scarfness of one ideal")
    sc.add_argument("ideal", help="e.g. '(x^2*y, y*z, x*z)'")
    sc.add_argument("--vars", help="comma-separated variable order")
    sc.add_argument("--field", type=_field, default=_env("FIELD", "q"))
    sc.add_argument("--gen-cap", type=int, default=_env_int("GEN_CAP", SWEEP_GENERATOR_CAP))
    sc.add_argument("--json", action="store_true")

    graph = sub.add_parser("graph", help="graph tools")
    gsub = graph.add_subparsers(dest="graph_command", required=True)
    an = gsub.add_parser("analyze", help="predictions and oracle verdicts for one graph")
    an.add_argument("graph", help="edge-list file ('-' for stdin) or a graph6 string")
    _add_common(an, sweep=False)
    an.add_argument("--json", action="store_true")

    ver = sub.add_parser("verify", help="sweep the small-graph catalog")
    _add_common(ver, sweep=True)

    dec = sub.add_parser("decode-g6", help="print graph6 strings as edge lists")
    dec.add_argument("strings", nargs="*", help="graph6 strings (default: read lines from stdin)")
    dec.add_argument("--canonical", action="store_true", help="also print the canonical graph6")

    ex = sub.add_parser("explore", help="exploratory computations, no expectations asserted")
    exsub = ex.add_subparsers(dest="explore_command", required=True)
    cp = exsub.add_parser("cover-powers", help="Scarfness of ordinary powers of the cover ideal")
    cp.add_argument("graph", help="edge-list file ('-' for stdin) or a graph6 string")
    cp.add_argument("--n-max", type=int, default=_env_int("N_MAX", 3))
    cp.add_argument("--field", type=_field, default=_env("FIELD", "q"))
    cp.add_argument("--gen-cap", type=int, default=_env_int("GEN_CAP", SWEEP_GENERATOR_CAP))
    return parser


def read_graph(source: str) -> SimpleGraph:
    """Edge-list file, ``-`` for an edge list on stdin, otherwise graph6."""
    if source == "-":
        return parse_edge_list(sys.stdin.read())
    p = Path(source)
    if p.is_file():
        return parse_edge_list(p.read_text())
    return parse_graph6(source.strip())


def cmd_ideal_scarf(args) -> int:
    I = parse_ideal(args.ideal, args.vars.split(",") if args.vars else None)
    field = args.field
    D = scarf_complex(I, args.gen_cap)
    bad = bps_failures(I, field, args.gen_cap, D=D, first_only=True)
    out = {
        "variables": list(I.variables.names),
        "generators": [format_monomial(g, I.variables) for g in I.exponent_vectors],
        "scarf_faces": [list(f.members) for f in D.faces],
        "dimension": D.dimension,
        "scarf": not bad,
        "failing_label": str(bad[0]) if bad else None,
        "taylor": is_taylor(I, args.gen_cap) if len(I) <= 20 else None,
        "generic": is_generic(I),
        "field_characteristic": field.characteristic,
    }
    if args.json:
        print(json.dumps(out))
    else:
        print(f"ideal      {I}")
        for f in D.faces:
            print(f"  face {list(f.members)}  label {f.label}")
        print(f"scarf      {out['scarf']}" + (f"  (fails at {out['failing_label']})" if bad else ""))
        print(f"taylor     {out['taylor']}")
        print(f"generic    {out['generic']}")
    return EXIT_OK


def _graph_rows(G: SimpleGraph, args) -> list[dict]:
    cfg = RunConfig(n_min=args.n_min, n_max=args.n_max, families=args.families,
                    field=args.field, generator_cap=args.gen_cap)
    rows = []
    for family in cfg.families:
        for n in cfg.n_values(family, G):
            row = {"family": family, "n": n}
            try:
                v = verdict(family, G, n, cfg.field, cap=cfg.generator_cap)
            except (PreconditionError, CapExceeded) as exc:
                row["error"] = str(exc)
            else:
                row.update(oracle=v.oracle, predicted=v.predicted, agree=v.agree)
                if v.witness is not None:
                    row["witness"] = v.witness if isinstance(v.witness, (str, int)) else repr(v.witness)
            rows.append(row)
    return rows


def cmd_graph_analyze(args) -> int:
    G = read_graph(args.graph)
    rows = _graph_rows(G, args)
    if args.json:
        print(json.dumps({"graph6": canonical_graph6(G), "rows": rows}))
    else:
        print(f"graph  {G.n} vertices, {len(G.edges)} edges, canonical graph6 {canonical_graph6(G)}")
        for r in rows:
            n = "" if r["n"] is None else f" n={r['n']}"
            if "error" in r:
                print(f"  {r['family']}{n}: error: {r['error']}")
            else:
                mark = "ok" if r["agree"] else "DISAGREE"
                print(f"  {r['family']}{n}: oracle={r['oracle']} predicted={r['predicted']} {mark}")
    if any("error" in r for r in rows):
        return EXIT_ERROR
    return EXIT_OK if all(r["agree"] for r in rows) else EXIT_DISAGREE


def cmd_verify(args) -> int:
    cfg = RunConfig(
        max_vertices=args.max_vertices,
        n_min=args.n_min,
        n_max=args.n_max,
        field=args.field,
        families=args.families,
        generator_cap=args.gen_cap,
        output_path=args.out,
        parallelism=args.jobs,
    )
    records = run_verification(cfg)
    if args.out:
        summary = emit_report(records, args.out)
    else:
        for r in records:
            print(json.dumps(r.as_row()))
        summary = summarize(records)
        print(json.dumps(summary))
    log.info("rows=%d disagreements=%d errors=%d", summary["total"], summary["disagreements"],
             summary["errors"])
    if summary["disagreements"]:
        return EXIT_DISAGREE
    return EXIT_ERROR if summary["errors"] else EXIT_OK


def cmd_decode_g6(args) -> int:
    lines = args.strings or [ln.strip() for ln in sys.stdin if ln.strip()]
    for i, line in enumerate(lines):
        G = parse_graph6(line)
        if i:
            print()
        if args.canonical:
            print(f"# canonical {canonical_graph6(G)}")
        print(G.edge_list_text(), end="")
    return EXIT_OK


def cmd_explore_cover_powers(args) -> int:
    G = read_graph(args.graph)
    J = cover_ideal(G)
    field = args.field
    print(f"# cover ideal {J}; no expected values are asserted")
    for n in range(1, args.n_max + 1):
        Jn = power(J, n)
        try:
            res = is_scarf(Jn, field, cap=args.gen_cap)
        except CapExceeded as exc:
            print(json.dumps({"n": n, "generators": len(Jn), "error": str(exc)}))
            continue
        print(json.dumps({"n": n, "generators": len(Jn), "scarf": res}))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    log.debug("kernel backend %s", _kernels.BACKEND)
    handlers = {
        ("ideal", "scarf"): cmd_ideal_scarf,
        ("graph", "analyze"): cmd_graph_analyze,
        ("explore", "cover-powers"): cmd_explore_cover_powers,
    }
    if args.command == "verify":
        handler = cmd_verify
    elif args.command == "decode-g6":
        handler = cmd_decode_g6
    else:
        sub = getattr(args, f"{args.command}_command")
        handler = handlers[(args.command, sub)]
    try:
        return handler(args)
    except (ValueError, Graph6Error, CapExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
