"""Catalog sweeps comparing graph predictions with the Scarfness oracle."""

from __future__ import annotations

import json
import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable

from .catalog import canonical_graph6, enumerate_graphs
from .graphs import SimpleGraph, matching_number
from .homology import QQ, FieldSpec
from .monomials import format_monomial
from .scarf import CapExceeded, scarf_complex
from .theorems import FAMILIES, family_ideal, verdict

log = logging.getLogger(__name__)

# per-family vertex limits used when RunConfig.max_vertices is None
DEFAULT_MAX_VERTICES = {"sqfree": 6, "symbolic": 5, "ordinary": 5, "cover": 7}
DEFAULT_N_RANGE = {"symbolic": (2, 3), "ordinary": (2, 3)}
# sweeps hit ideals with more generators than the interactive default allows
# (e.g. I(K6)^[2] has 45); the lattice stays small, so a wider cap is cheap
SWEEP_GENERATOR_CAP = 256


@dataclass(frozen=True)
class RunConfig:
    max_vertices: int | None = None
    n_min: int | None = None
    n_max: int | None = None
    field: FieldSpec = QQ
    families: tuple[str, ...] = FAMILIES
    generator_cap: int = SWEEP_GENERATOR_CAP
    output_path: str | None = None
    parallelism: int = 1

    def __post_init__(self):
        if self.max_vertices is not None and not 2 <= self.max_vertices <= 8:
            raise ValueError("max_vertices must lie in [2, 8]")
        for f in self.families:
            if f not in FAMILIES:
                raise ValueError(f"unknown family {f!r}; choose from {FAMILIES}")
        if self.generator_cap < 1 or self.parallelism < 1:
            raise ValueError("caps and parallelism must be positive")
        if self.n_min is not None and self.n_max is not None and self.n_min > self.n_max:
            raise ValueError("n_min exceeds n_max")

    def vertex_limit(self, family: str) -> int:
        return self.max_vertices if self.max_vertices is not None else DEFAULT_MAX_VERTICES[family]

    def n_values(self, family: str, G: SimpleGraph) -> list[int | None]:
        if family == "cover":
            return [None]
        if family == "sqfree":
            lo, hi = 2, matching_number(G)
        else:
            lo, hi = DEFAULT_N_RANGE[family]
        if self.n_min is not None:
            lo = max(lo, self.n_min) if family == "sqfree" else self.n_min
        if self.n_max is not None:
            hi = min(hi, self.n_max) if family == "sqfree" else self.n_max
        return list(range(max(lo, 2), hi + 1))


@dataclass
class VerificationRecord:
    graph_id: str
    family: str
    n: int | None
    oracle: bool | None
    predicted: bool | None
    agree: bool
    field_characteristic: int
    elapsed_ms: int
    error: str | None = None
    witness: object = field(default=None, repr=False)

    def as_row(self) -> dict:
        row = asdict(self)
        row.pop("witness")
        if row["error"] is None:
            row.pop("error")
        return row


def _work_items(cfg: RunConfig) -> list[tuple[str, str, int | None]]:
    items = []
    top = max(cfg.vertex_limit(f) for f in cfg.families)
    for G in enumerate_graphs(top):
        g6 = canonical_graph6(G)
        for family in cfg.families:
            if G.n > cfg.vertex_limit(family):
                continue
            for n in cfg.n_values(family, G):
                items.append((g6, family, n))
    return items


def check_one(g6: str, family: str, n: int | None, field: FieldSpec = QQ,
              cap: int = SWEEP_GENERATOR_CAP) -> VerificationRecord:
    from .catalog import parse_graph6

    G = parse_graph6(g6)
    t0 = time.perf_counter()
    try:
        v = verdict(family, G, n, field, cap=cap)
    except CapExceeded as exc:
        ms = int((time.perf_counter() - t0) * 1000)
        return VerificationRecord(g6, family, n, None, None, False, field.characteristic, ms, error=str(exc))
    ms = int((time.perf_counter() - t0) * 1000)
    return VerificationRecord(g6, family, n, v.oracle, v.predicted, v.agree, field.characteristic, ms,
                              witness=v.witness)


def _check_star(args):
    return check_one(*args)


def counterexample_detail(rec: VerificationRecord, cap: int = SWEEP_GENERATOR_CAP) -> dict:
    from .catalog import parse_graph6

    G = parse_graph6(rec.graph_id)
    I = family_ideal(rec.family, G, rec.n)
    out = rec.as_row()
    out["edges"] = [[G.names[i], G.names[j]] for i, j in G.edges]
    out["generators"] = [format_monomial(g, I.variables) for g in I.exponent_vectors]
    try:
        D = scarf_complex(I, cap)
        out["scarf_faces"] = [list(f.members) for f in D.faces]
    except CapExceeded as exc:
        out["scarf_faces"] = str(exc)
    out["witness"] = rec.witness
    return out


def run_verification(cfg: RunConfig) -> list[VerificationRecord]:
    """One record per (catalog graph, family, n), in catalog order.

    Disagreements are also written, with generators and Scarf faces, next to
    ``cfg.output_path`` as ``<stem>.counterexamples.jsonl``.
    """
    items = [(g6, fam, n, cfg.field, cfg.generator_cap) for g6, fam, n in _work_items(cfg)]
    log.info("verifying %d rows over %s", len(items), cfg.field)
    if cfg.parallelism > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            # map preserves submission order
            records = list(pool.map(_check_star, items, chunksize=16))
    else:
        records = [check_one(*it) for it in items]
    bad = [r for r in records if r.error is None and not r.agree]
    if bad and cfg.output_path:
        p = Path(cfg.output_path)
        cex = p.with_name(p.stem + ".counterexamples.jsonl")
        with open(cex, "w") as fh:
            for r in bad:
                fh.write(json.dumps(counterexample_detail(r, cfg.generator_cap)) + "\n")
    return records


def summarize(records: Iterable[VerificationRecord]) -> dict:
    records = list(records)
    per_family: dict[str, Counter] = {}
    for r in records:
        c = per_family.setdefault(r.family, Counter())
        c["rows"] += 1
        c["errors"] += r.error is not None
        c["disagreements"] += r.error is None and not r.agree
        c["oracle_scarf"] += bool(r.oracle)
    return {
        "summary": True,
        "total": len(records),
        "disagreements": sum(c["disagreements"] for c in per_family.values()),
        "errors": sum(c["errors"] for c in per_family.values()),
        "per_family": {k: dict(v) for k, v in sorted(per_family.items())},
    }


def emit_report(records: Iterable[VerificationRecord], path: str | Path) -> dict:
    """Write one JSON object per record, then a summary object as the last line."""
    records = list(records)
    summary = summarize(records)
    with open(path, "w") as fh:
        for r in records:
            fh.write(json.dumps(r.as_row()) + "\n")
        fh.write(json.dumps(summary) + "\n")
    return summary
