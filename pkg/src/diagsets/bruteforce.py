"""Brute-force reference implementations and exhaustive small-graph sweeps.

The oracle functions evaluate the diagonal-set definitions literally, by
enumerating walks vertex by vertex through ``Graph.has_edge`` only: no
bitset algebra, no matrix products, no periodicity traces.  They are the
ground truth the engine is compared against, and they are deliberately
guarded so nobody mistakes them for a scalable path.

``exhaustive_sweep`` runs every engine-vs-oracle comparison and every
theorem over *all* digraphs up to a given order (2 + 16 + 512 = 530
graphs through order 3).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .diagonals import (
    DiagonalSpec,
    default_spec_battery,
    diagonal,
    diagonal_S,
    diagonal_inf,
    diagonal_n,
    distinct_out_count,
    inclusion_chain_check,
    verify_battery,
)
from .graph import Graph, VertexSet
from .upsets import UPSet
from .walks import power_trace, spectra_from_trace

MAX_ORACLE_ORDER = 8
MAX_ORACLE_WALK = 12
MAX_ORACLE_SPECTRUM = 128


class OracleGuardError(ValueError):
    """An oracle call exceeded its tractability guard."""


def _guard(g: Graph, walk_len: int | None = None) -> None:
    if g.n > MAX_ORACLE_ORDER:
        raise OracleGuardError(f"oracle limited to order <= {MAX_ORACLE_ORDER}, got {g.n}")
    if walk_len is not None and walk_len > MAX_ORACLE_WALK:
        raise OracleGuardError(
            f"oracle limited to walk length <= {MAX_ORACLE_WALK}, got {walk_len}"
        )


def walk_exists_bf(g: Graph, u: int, w: int, length: int) -> bool:
    """Enumerate every length-`length` walk from u, looking for endpoint w."""
    _guard(g, length)
    g._check_vertex(u)
    g._check_vertex(w)
    if length < 0:
        raise ValueError("walk length must be nonnegative")

    def rec(x: int, remaining: int) -> bool:
        if remaining == 0:
            return x == w
        return any(rec(y, remaining - 1) for y in range(g.n) if g.has_edge(x, y))

    return rec(u, length)


def walk_from_exists_bf(g: Graph, v: int, length: int) -> bool:
    """Enumerate walks from v; true iff one of exactly `length` edges exists."""
    _guard(g, length)
    g._check_vertex(v)
    if length < 0:
        raise ValueError("walk length must be nonnegative")

    def rec(x: int, remaining: int) -> bool:
        if remaining == 0:
            return True
        return any(rec(y, remaining - 1) for y in range(g.n) if g.has_edge(x, y))

    return rec(v, length)


def closed_walk_lengths_bf(g: Graph, v: int, max_len: int) -> set[int]:
    """Lengths L in [1, max_len] of closed walks through v, by endpoint images."""
    _guard(g)
    g._check_vertex(v)
    if max_len > MAX_ORACLE_SPECTRUM:
        raise OracleGuardError(f"oracle spectrum limited to length <= {MAX_ORACLE_SPECTRUM}")
    lengths: set[int] = set()
    frontier = {v}
    for length in range(1, max_len + 1):
        frontier = {y for x in frontier for y in range(g.n) if g.has_edge(x, y)}
        if not frontier:
            break
        if v in frontier:
            lengths.add(length)
    return lengths


def diagonal_n_bf(g: Graph, n: int) -> VertexSet:
    """Literal evaluation: vertices with no length-(n+1) closed walk."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _guard(g, n + 1)
    return VertexSet.from_indices(
        g.n, (v for v in range(g.n) if not walk_exists_bf(g, v, v, n + 1))
    )


def diagonal_inf_bf(g: Graph) -> VertexSet:
    """Literal evaluation of the no-infinite-walk set.

    A finite graph admits an infinite walk from v iff it admits one of
    length exactly |V|; that reduction is itself re-verified here by
    enumerating every length 1..|V|.
    """
    _guard(g, g.n)
    via_full = {v for v in range(g.n) if not walk_from_exists_bf(g, v, g.n)}
    via_all = {
        v
        for v in range(g.n)
        if not all(walk_from_exists_bf(g, v, k) for k in range(1, g.n + 1))
    }
    if via_full != via_all:
        raise RuntimeError("length-|V| reduction failed its enumeration re-check")
    return VertexSet.from_indices(g.n, via_full)


def diagonal_S_bf(g: Graph, s_values: Iterable[int]) -> VertexSet:
    """Literal two-clause evaluation of the selective diagonal, for finite S."""
    values = sorted(set(s_values))
    if not values:
        raise ValueError("S must be nonempty")
    if any(v < 0 for v in values):
        raise ValueError("S values must be nonnegative")
    _guard(g, max(values) + 1)

    def excluded(v: int) -> bool:
        if 0 in values and g.has_edge(v, v):
            return True
        return any(walk_exists_bf(g, v, v, n + 1) for n in values if n > 0)

    return VertexSet.from_indices(g.n, (v for v in range(g.n) if not excluded(v)))


def enumerate_graphs(order: int) -> Iterator[Graph]:
    """All 2^(order^2) digraphs of the given order, in mask order."""
    if order < 1:
        raise ValueError("order must be at least 1")
    cell_mask = (1 << order) - 1
    for mask in range(1 << (order * order)):
        rows = tuple((mask >> (u * order)) & cell_mask for u in range(order))
        yield Graph(order, rows)


@dataclass
class PropertyResult:
    name: str
    passes: int = 0
    failures: int = 0
    first_counterexample: str | None = None

    def record(self, g: Graph, error: Exception | None) -> None:
        if error is None:
            self.passes += 1
            return
        self.failures += 1
        if self.first_counterexample is None:
            self.first_counterexample = f"order={g.n} edges={list(g.edges())}: {error}"


@dataclass
class SweepReport:
    graphs_checked: int
    per_order: dict[int, int]
    properties: list[PropertyResult] = field(default_factory=list)

    def total_failures(self) -> int:
        return sum(p.failures for p in self.properties)

    def ok(self) -> bool:
        return self.total_failures() == 0


def _default_s_samples() -> list[UPSet]:
    return [spec.s for spec in default_spec_battery() if spec.kind == "DS"]


def exhaustive_sweep(
    order_max: int = 3,
    n_values: Sequence[int] = (1, 2, 3, 4, 5, 6),
    s_samples: Sequence[UPSet] | None = None,
    include_order_4: bool = False,
    spectrum_max_len: int = 40,
) -> SweepReport:
    """Check every theorem and every engine-vs-oracle pair over all small graphs.

    Failures are recorded, never raised; callers assert the report is clean.
    Order 4 multiplies the corpus by 65536 and must be opted into.
    """
    if not 1 <= order_max <= 4:
        raise ValueError("order_max must be between 1 and 4")
    if order_max == 4 and not include_order_4:
        raise ValueError("order 4 sweeps 65536 extra graphs; pass include_order_4=True")
    if s_samples is None:
        s_samples = _default_s_samples()
    specs = (
        [DiagonalSpec.d()]
        + [DiagonalSpec.dn(n) for n in n_values]
        + [DiagonalSpec.dinf()]
        + [DiagonalSpec.ds(s) for s in s_samples]
    )
    finite_samples = [s for s in s_samples if s.is_finite()]

    results: dict[str, PropertyResult] = {}

    def check(name: str, g: Graph, thunk) -> None:
        if name not in results:
            results[name] = PropertyResult(name)
        try:
            thunk()
            error = None
        except Exception as exc:  # any failure is a counterexample, keep sweeping
            error = exc
        results[name].record(g, error)

    def assert_eq(a, b, what: str) -> None:
        if a != b:
            raise AssertionError(f"{what}: engine={a} oracle={b}")

    per_order: dict[int, int] = {}
    checked = 0
    for order in range(1, order_max + 1):
        per_order[order] = 0
        for g in enumerate_graphs(order):
            checked += 1
            per_order[order] += 1
            for spec in specs:
                check(f"theorem[{spec.label()}]", g, lambda s=spec: verify_battery(g, [s]))
            check("chain", g, lambda: inclusion_chain_check(g, 8, s_samples))
            check(
                "oracle[D]",
                g,
                lambda: assert_eq(
                    diagonal(g),
                    VertexSet.from_indices(g.n, (v for v in range(g.n) if not g.has_edge(v, v))),
                    "D",
                ),
            )
            for n in n_values:
                if n + 1 > MAX_ORACLE_WALK:
                    continue
                check(
                    f"oracle[Dn({n})]",
                    g,
                    lambda n=n: assert_eq(diagonal_n(g, n), diagonal_n_bf(g, n), f"Dn({n})"),
                )
            check(
                "oracle[Dinf]",
                g,
                lambda: assert_eq(diagonal_inf(g), diagonal_inf_bf(g), "Dinf"),
            )
            for s in finite_samples:
                values = sorted(s.exceptional)
                if max(values) + 1 > MAX_ORACLE_WALK:
                    continue
                check(
                    f"oracle[DS({s.literal()})]",
                    g,
                    lambda s=s, vv=values: assert_eq(
                        diagonal_S(g, s), diagonal_S_bf(g, vv), f"DS({s.literal()})"
                    ),
                )
            check("spectrum", g, lambda: _check_spectra(g, spectrum_max_len))
            check("pigeonhole", g, lambda: _check_pigeonhole(g))
    return SweepReport(checked, per_order, list(results.values()))


def _check_spectra(g: Graph, max_len: int) -> None:
    spectra = spectra_from_trace(power_trace(g))
    for v in range(g.n):
        truth = closed_walk_lengths_bf(g, v, max_len)
        for length in range(1, max_len + 1):
            if spectra[v].member(length) != (length in truth):
                raise AssertionError(f"spectrum of {v} wrong at length {length}")
        if spectra[v].member(0):
            raise AssertionError(f"spectrum of {v} contains 0")


def _check_pigeonhole(g: Graph) -> None:
    count, order = distinct_out_count(g)
    if count > order:
        raise AssertionError(f"{count} distinct outgoing sets on {order} vertices")
    d = diagonal(g)
    for v in range(g.n):
        if g.out_set(v) == d:
            raise AssertionError(f"D equals Out({v})")
