"""Compare the compiled and pure-Python kernels.

Two parts:

* per-kernel timings, calling both kernel modules directly on the same inputs;
* end-to-end timings of catalog generation and the default four-family sweep,
  each in a fresh interpreter because the backend is fixed at import time.

Usage::

    python benchmarks/bench_kernels.py [--repeat 3] [--skip-end-to-end]
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from scarfkit._kernels import _pykernels, available_backends
from scarfkit.graphs import complete_graph, cover_ideal, squarefree_power
from scarfkit.homology import SimplicialComplex, boundary_matrix
from scarfkit.monomials import MonomialIdeal, VariableSet

END_TO_END = {
    "catalog <= 7 vertices": (
        "from scarfkit.catalog import _all_graphs\n"
        "for n in range(1, 8): _all_graphs(n)"
    ),
    "default sweep, all families": (
        "from scarfkit.verify import RunConfig, run_verification\n"
        "run_verification(RunConfig())"
    ),
}


def kernel_cases() -> dict[str, tuple[str, tuple]]:
    rnd = random.Random(1)
    V = VariableSet(tuple(f"x{i}" for i in range(6)))
    gens = MonomialIdeal(V, [tuple(rnd.randint(0, 3) for _ in range(6)) for _ in range(14)]).exponent_vectors
    sq = squarefree_power(complete_graph(6), 2).exponent_vectors
    J = cover_ideal(complete_graph(7)).exponent_vectors
    lattice = _pykernels.lcm_closure(list(sq), 1 << 16)
    labels = [tuple(max(a, b) for a, b in zip(sq[i], sq[j])) for i in range(len(sq)) for j in range(i)]
    K = SimplicialComplex([tuple(sorted(rnd.sample(range(12), 4))) for _ in range(40)])
    mat = boundary_matrix(K, 2)
    ncols = len(mat[0]) if mat else 0
    adj = [0] * 8
    for i in range(8):
        for j in range(i + 1, 8):
            if rnd.random() < 0.5:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return {
        "lcm_closure (random, 14 gens)": ("lcm_closure", (list(gens), 1 << 16)),
        "lcm_closure (K6 sqfree^2)": ("lcm_closure", (list(sq), 1 << 16)),
        "scarf_faces (K6 sqfree^2)": ("scarf_faces", (list(sq), 1 << 16)),
        "scarf_faces (J(K7))": ("scarf_faces", (list(J), 1 << 16)),
        "divisor_masks": ("divisor_masks", (labels, lattice)),
        "rank_fraction_free (boundary)": ("rank_fraction_free", (mat, ncols)),
        "rank_mod_p (boundary, p=2)": ("rank_mod_p", (mat, ncols, 2)),
        "canonical_permutation (8 vertices)": ("canonical_permutation", (8, adj)),
    }


def time_call(fn, args, repeat: int) -> float:
    timer = timeit.Timer(lambda: fn(*args))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def bench_kernels(repeat: int) -> list[dict]:
    backends = available_backends()
    rows = []
    for label, (name, args) in kernel_cases().items():
        row = {"kernel": label}
        for bname, mod in backends.items():
            row[bname] = time_call(getattr(mod, name), args, repeat)
        rows.append(row)
    return rows


def bench_end_to_end(repeat: int) -> list[dict]:
    rows = []
    for label, code in END_TO_END.items():
        row = {"task": label}
        for bname, flag in (("cython", "0"), ("python", "1")):
            env = dict(os.environ, SCARFKIT_PURE_PYTHON=flag)
            prog = (
                "import time, scarfkit\n"
                f"assert scarfkit.BACKEND == {bname!r}, scarfkit.BACKEND\n"
                "t = time.perf_counter()\n"
                f"{code}\n"
                "print(time.perf_counter() - t)"
            )
            best = None
            for _ in range(repeat):
                res = subprocess.run([sys.executable, "-c", prog], env=env, capture_output=True, text=True)
                if res.returncode:
                    row[bname] = None
                    break
                t = float(res.stdout.strip())
                best = t if best is None else min(best, t)
            else:
                row[bname] = best
        rows.append(row)
    return rows


def fmt(t: float | None) -> str:
    if t is None:
        return "n/a"
    return f"{t * 1e3:9.3f} ms" if t < 1 else f"{t:9.3f} s "


def print_table(rows: list[dict], key: str) -> None:
    width = max(len(r[key]) for r in rows)
    print(f"{key:<{width}}  {'cython':>12}  {'python':>12}  speedup")
    for r in rows:
        c, p = r.get("cython"), r.get("python")
        ratio = f"{p / c:6.1f}x" if c and p else "   n/a"
        print(f"{r[key]:<{width}}  {fmt(c):>12}  {fmt(p):>12}  {ratio}")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-end-to-end", action="store_true")
    ap.add_argument("--json", action="store_true", help="print raw timings as JSON")
    args = ap.parse_args(argv)
    if "cython" not in available_backends():
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    kernels = bench_kernels(args.repeat)
    e2e = [] if args.skip_end_to_end else bench_end_to_end(args.repeat)
    if args.json:
        print(json.dumps({"kernels": kernels, "end_to_end": e2e}, indent=2))
        return 0
    print_table(kernels, "kernel")
    if e2e:
        print()
        print_table(e2e, "task")
    return 0


if __name__ == "__main__":
    sys.exit(main())
