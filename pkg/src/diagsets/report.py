"""Analysis reports: stable-keyed dicts, serialized as diffable JSON.

Two runs over the same input produce byte-identical JSON except for the
``timings_ms`` values.
"""

from __future__ import annotations

import json
from time import perf_counter
from typing import Sequence

from . import __version__
from .diagonals import (
    DiagonalSpec,
    Evidence,
    Witness,
    distinct_out_count,
    inclusion_chain_check,
    verify_battery,
)
from .graph import Graph
from .upsets import UPSet
from .walks import power_trace, spectra_from_trace


def _evidence_dict(ev: Evidence | None) -> dict | None:
    if ev is None:
        return None
    key = "infinite_tail" if ev.infinite_tail else "walk"
    return {key: list(ev.vertices)}


def _witness_row(w: Witness) -> dict:
    return {
        "v": w.against,
        "u": w.vertex,
        "side": w.side.value,
        "evidence": _evidence_dict(w.evidence),
    }


def analyze_graph(
    g: Graph,
    n_values: Sequence[int] = (),
    s_sets: Sequence[UPSet] = (),
    include_spectra: bool = False,
    seed: int | None = None,
    chain_n_max: int = 8,
    parse_ms: float = 0.0,
) -> dict:
    """Full analysis of one graph: sets, witnesses, spectra, chain verdict."""
    t_start = perf_counter()
    specs = [DiagonalSpec.d()]
    specs += [DiagonalSpec.dn(n) for n in dict.fromkeys(n_values)]
    specs.append(DiagonalSpec.dinf())
    specs += [DiagonalSpec.ds(s) for s in s_sets]

    t0 = perf_counter()
    battery = verify_battery(g, specs)
    specs_ms = (perf_counter() - t0) * 1000.0

    spectra_section = None
    spectra_ms = 0.0
    if include_spectra:
        t0 = perf_counter()
        spectra = spectra_from_trace(power_trace(g))
        spectra_section = [
            {
                "vertex": v,
                "t": sp.threshold,
                "d": sp.period,
                "r": sorted(sp.residues),
                "f": sorted(sp.exceptional),
                "literal": sp.literal(),
            }
            for v, sp in enumerate(spectra)
        ]
        spectra_ms = (perf_counter() - t0) * 1000.0

    t0 = perf_counter()
    chain = inclusion_chain_check(g, chain_n_max, s_sets)
    chain_ms = (perf_counter() - t0) * 1000.0

    count, order = distinct_out_count(g)
    report = {
        "tool": {"name": "diagsets", "version": __version__},
        "seed": seed,
        "graph": {
            "order": order,
            "edges": g.edge_count(),
            "loops": len(g.loops()),
            "distinct_out_sets": count,
        },
        "specs": [
            {
                "spec": spec.label(),
                "set": dx.to_list(),
                "witnesses": [_witness_row(w) for w in witnesses],
            }
            for spec, dx, witnesses in battery
        ],
        "spectra": spectra_section,
        "chain": chain.to_dict(),
        "timings_ms": {
            "parse": round(parse_ms, 3),
            "specs": round(specs_ms, 3),
            "spectra": round(spectra_ms, 3),
            "chain": round(chain_ms, 3),
            "total": round((perf_counter() - t_start) * 1000.0 + parse_ms, 3),
        },
    }
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"
