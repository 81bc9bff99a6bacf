"""Diagonal sets on finite digraphs, with per-vertex inequality witnesses.

Four constructions, each provably unequal to every outgoing set Out(v):

* ``diagonal``       -- the unlooped vertices
* ``diagonal_n``     -- vertices with no closed walk of length n+1
* ``diagonal_inf``   -- vertices from which no infinite walk starts
* ``diagonal_S``     -- vertices with no closed walk of length n+1 for any
                        n in a fixed nonempty ultimately periodic set S

``verify_unequal`` turns the inequality into checked artifacts: for every
vertex it compares the diagonal set against Out(v) directly *and* emits a
witness in their symmetric difference, re-validated against the computed
sets.  A witness that fails validation, or an equality, raises
``TheoremViolationError``: both are impossible unless the implementation
is wrong.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .graph import Graph, VertexSet, bits_of
from .upsets import UPSet
from .walks import (
    BoolMatrix,
    PowerTrace,
    cyclic_vertices,
    mat_mul_bool,
    mat_pow_bool,
    power_trace,
    reach_backward,
    spectra_from_trace,
)

# Longest walk evidence materialized, in vertices.  Witnesses for larger
# walk lengths keep their membership claims but omit the explicit walk.
EVIDENCE_CAP = 10_000

# Exponents up to this bound use directly accumulated powers; beyond it,
# entry queries go through the eventual-periodicity trace.
_SMALL_POWER_CAP = 64


class TheoremViolationError(RuntimeError):
    """A diagonal set matched an outgoing set, or a witness failed validation.

    Either event is an implementation-bug signal, never a report entry.
    """


class InternalDisagreementError(RuntimeError):
    """Two redundant computation routes disagreed (implementation bug)."""


class Side(str, Enum):
    OUT_MINUS_DX = "OutMinusDx"
    DX_MINUS_OUT = "DxMinusOut"


@dataclass(frozen=True)
class Evidence:
    """Walk evidence: a closed walk, or a finite prefix entering a cycle."""

    vertices: tuple[int, ...]
    infinite_tail: bool = False


@dataclass(frozen=True)
class Witness:
    """A vertex in the symmetric difference of a diagonal set and Out(against)."""

    vertex: int
    side: Side
    against: int
    evidence: Evidence | None = None


@dataclass(frozen=True)
class DiagonalSpec:
    """Which diagonal set to build: D, Dn(n), Dinf, or DS(S)."""

    kind: str
    n: int | None = None
    s: UPSet | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("D", "Dn", "Dinf", "DS"):
            raise ValueError(f"unknown diagonal kind {self.kind!r}")
        if self.kind == "Dn":
            if self.n is None or self.n < 1:
                raise ValueError("Dn requires n >= 1 (D itself covers n = 0)")
        elif self.n is not None:
            raise ValueError(f"{self.kind} takes no n parameter")
        if self.kind == "DS":
            if self.s is None or self.s.is_empty():
                raise ValueError("DS requires a nonempty length set")
        elif self.s is not None:
            raise ValueError(f"{self.kind} takes no S parameter")

    @classmethod
    def d(cls) -> DiagonalSpec:
        return cls("D")

    @classmethod
    def dn(cls, n: int) -> DiagonalSpec:
        return cls("Dn", n=n)

    @classmethod
    def dinf(cls) -> DiagonalSpec:
        return cls("Dinf")

    @classmethod
    def ds(cls, s: UPSet) -> DiagonalSpec:
        return cls("DS", s=s)

    def label(self) -> str:
        if self.kind == "Dn":
            return f"Dn({self.n})"
        if self.kind == "DS":
            return f"DS({self.s.literal()})"
        return self.kind


def diagonal(g: Graph) -> VertexSet:
    """The unlooped vertices: complement of loops(g)."""
    return g.loops().complement()


def diagonal_n(g: Graph, n: int) -> VertexSet:
    """Vertices with no closed walk of length n+1, for n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1; use diagonal() for the n = 0 convention")
    power = mat_pow_bool(BoolMatrix.from_graph(g), n + 1)
    return VertexSet(g.n, power.diag_bits()).complement()


def diagonal_inf(g: Graph) -> VertexSet:
    """Vertices from which no infinite walk starts.

    Computed twice, by cycle reachability and by the length-|V| matrix
    power; the routes must agree or the call aborts.
    """
    scc_route = reach_backward(g, cyclic_vertices(g)).complement()
    power = mat_pow_bool(BoolMatrix.from_graph(g), g.n)
    dead = 0
    for v, row in enumerate(power.rows):
        if row == 0:
            dead |= 1 << v
    matrix_route = VertexSet(g.n, dead)
    if scc_route != matrix_route:
        raise InternalDisagreementError(
            f"infinite-walk routes disagree: scc={scc_route.to_list()} "
            f"matrix={matrix_route.to_list()}"
        )
    return scc_route


def _diagonal_s_mask(spectra: Sequence[UPSet], s: UPSet) -> int:
    shifted = s.shift(1)
    mask = 0
    for v, spectrum in enumerate(spectra):
        if spectrum.intersect(shifted).is_empty():
            mask |= 1 << v
    return mask


def diagonal_S(g: Graph, s: UPSet) -> VertexSet:
    """Vertices whose closed-walk spectrum avoids {n+1 | n in S}.

    A closed walk of length 1 is exactly a self-loop, so this uniform rule
    also covers the 0-in-S clause of the definition.
    """
    if s.is_empty():
        raise ValueError("S must be nonempty")
    spectra = spectra_from_trace(power_trace(g))
    return VertexSet(g.n, _diagonal_s_mask(spectra, s))


def compute_diagonal(g: Graph, spec: DiagonalSpec) -> VertexSet:
    if spec.kind == "D":
        return diagonal(g)
    if spec.kind == "Dn":
        return diagonal_n(g, spec.n)
    if spec.kind == "Dinf":
        return diagonal_inf(g)
    return diagonal_S(g, spec.s)


class _Ctx:
    """Per-graph lazy cache shared across witness constructions."""

    def __init__(self, g: Graph):
        self.g = g
        self._trace: PowerTrace | None = None
        self._spectra: list[UPSet] | None = None
        self._cyclic: VertexSet | None = None
        self._canreach: VertexSet | None = None
        self._powers: list[BoolMatrix] = []
        self._dsets: dict[str, VertexSet] = {}

    def trace(self) -> PowerTrace:
        if self._trace is None:
            self._trace = power_trace(self.g)
        return self._trace

    def spectra(self) -> list[UPSet]:
        if self._spectra is None:
            self._spectra = spectra_from_trace(self.trace())
        return self._spectra

    def cyclic(self) -> VertexSet:
        if self._cyclic is None:
            self._cyclic = cyclic_vertices(self.g)
        return self._cyclic

    def canreach_cycle(self) -> VertexSet:
        if self._canreach is None:
            self._canreach = reach_backward(self.g, self.cyclic())
        return self._canreach

    def entry(self, u: int, w: int, exponent: int) -> bool:
        """A^exponent[u, w], with the empty-walk convention for exponent 0."""
        if exponent == 0:
            return u == w
        if exponent <= _SMALL_POWER_CAP:
            powers = self._powers
            if not powers:
                powers.append(BoolMatrix.from_graph(self.g))
            while len(powers) < exponent:
                powers.append(mat_mul_bool(powers[-1], powers[0]))
            return powers[exponent - 1].entry(u, w)
        return self.trace().power(exponent).entry(u, w)

    def dset(self, spec: DiagonalSpec) -> VertexSet:
        key = spec.label()
        if key not in self._dsets:
            if spec.kind == "DS":
                value = VertexSet(self.g.n, _diagonal_s_mask(self.spectra(), spec.s))
            else:
                value = compute_diagonal(self.g, spec)
            self._dsets[key] = value
        return self._dsets[key]


def cantor_witness(g: Graph, v: int) -> Witness:
    """The fixed-point witness: v itself separates D from Out(v)."""
    g._check_vertex(v)
    if g.has_edge(v, v):
        return Witness(v, Side.OUT_MINUS_DX, v, Evidence((v, v)))
    return Witness(v, Side.DX_MINUS_OUT, v, None)


def _closed_walk(g: Graph, ctx: _Ctx, v: int, length: int) -> tuple[int, ...]:
    """A closed walk of the given length through v, smallest successor first."""
    walk = [v]
    cur = v
    for i in range(1, length + 1):
        remaining = length - i
        for w in bits_of(g.rows[cur]):
            if ctx.entry(w, v, remaining):
                walk.append(w)
                cur = w
                break
        else:
            raise InternalDisagreementError(
                f"no continuation at step {i} of a length-{length} closed walk via {v}"
            )
    return tuple(walk)


def _tail_prefix(g: Graph, ctx: _Ctx, start: int) -> tuple[int, ...]:
    """Shortest walk from start to a cyclic vertex (BFS, ascending tie-break)."""
    cyc = ctx.cyclic()
    if start in cyc:
        return (start,)
    parent: dict[int, int | None] = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for w in bits_of(g.rows[u]):
                if w in parent:
                    continue
                parent[w] = u
                if w in cyc:
                    path = [w]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return tuple(reversed(path))
                nxt.append(w)
        frontier = nxt
    raise InternalDisagreementError(f"vertex {start} cannot reach a cycle")


def _build_variant_witness(
    g: Graph, ctx: _Ctx, v: int, spec: DiagonalSpec, dx: VertexSet
) -> Witness:
    if g.has_edge(v, v):
        # Looped: v itself, pumped around its loop as long as required.
        if spec.kind == "Dinf":
            return Witness(v, Side.OUT_MINUS_DX, v, Evidence((v,), infinite_tail=True))
        length = (spec.n if spec.kind == "Dn" else spec.s.min_element()) + 1
        evidence = Evidence((v,) * (length + 1)) if length + 1 <= EVIDENCE_CAP else None
        return Witness(v, Side.OUT_MINUS_DX, v, evidence)
    if v in dx:
        return Witness(v, Side.DX_MINUS_OUT, v, None)
    # Unlooped but outside the diagonal: rotate a violating walk from v.
    if spec.kind == "Dinf":
        for w in bits_of(g.rows[v]):
            if w in ctx.canreach_cycle():
                return Witness(
                    w, Side.OUT_MINUS_DX, v, Evidence(_tail_prefix(g, ctx, w), infinite_tail=True)
                )
        raise InternalDisagreementError(f"vertex {v} left D_inf without a successor on a cycle")
    if spec.kind == "Dn":
        length = spec.n + 1
    else:
        shortest = ctx.spectra()[v].intersect(spec.s.shift(1)).min_element()
        if shortest is None:
            raise InternalDisagreementError(f"vertex {v} left D_S with an empty violation set")
        length = shortest
    first = None
    for w in bits_of(g.rows[v]):
        if ctx.entry(w, v, length - 1):
            first = w
            break
    if first is None:
        raise InternalDisagreementError(f"vertex {v} has no first step of a length-{length} return")
    evidence = None
    if length + 1 <= EVIDENCE_CAP:
        walk = _closed_walk(g, ctx, v, length)
        evidence = Evidence(walk[1:] + (walk[1],))
    return Witness(first, Side.OUT_MINUS_DX, v, evidence)


def variant_witness(g: Graph, v: int, spec: DiagonalSpec) -> Witness:
    """Witness for the Dn/Dinf/DS constructions, by the three-way case split."""
    g._check_vertex(v)
    if spec.kind == "D":
        raise ValueError("variant_witness handles Dn/Dinf/DS; use cantor_witness for D")
    ctx = _Ctx(g)
    return _build_variant_witness(g, ctx, v, spec, ctx.dset(spec))


def validate_witness(
    g: Graph,
    spec: DiagonalSpec,
    dx: VertexSet,
    witness: Witness,
    cyclic: VertexSet | None = None,
) -> None:
    """Re-check every claim a witness makes; raise on any failure."""
    u, v = witness.vertex, witness.against
    out_v = g.out_set(v)
    if witness.side is Side.OUT_MINUS_DX:
        if u not in out_v or u in dx:
            raise TheoremViolationError(
                f"{spec.label()}: witness {u} not in Out({v}) \\ diagonal"
            )
    else:
        if u not in dx or u in out_v:
            raise TheoremViolationError(
                f"{spec.label()}: witness {u} not in diagonal \\ Out({v})"
            )
    ev = witness.evidence
    if ev is None:
        return
    verts = ev.vertices
    if not verts or verts[0] != u:
        raise TheoremViolationError(f"{spec.label()}: evidence does not start at witness {u}")
    for a, b in zip(verts, verts[1:]):
        if not g.has_edge(a, b):
            raise TheoremViolationError(f"{spec.label()}: evidence step {a}->{b} is not an edge")
    if ev.infinite_tail:
        if spec.kind != "Dinf":
            raise TheoremViolationError(f"{spec.label()}: infinite-tail evidence is Dinf-only")
        cyc = cyclic if cyclic is not None else cyclic_vertices(g)
        if verts[-1] not in cyc:
            raise TheoremViolationError(
                f"{spec.label()}: tail prefix ends at non-cyclic vertex {verts[-1]}"
            )
        return
    if spec.kind == "Dinf":
        raise TheoremViolationError("Dinf: closed-walk evidence is not meaningful")
    if verts[-1] != u:
        raise TheoremViolationError(f"{spec.label()}: closed-walk evidence does not return to {u}")
    length = len(verts) - 1
    if spec.kind == "D" and length != 1:
        raise TheoremViolationError(f"D: loop evidence must have length 1, got {length}")
    if spec.kind == "Dn" and length != spec.n + 1:
        raise TheoremViolationError(f"{spec.label()}: evidence length {length} != n+1")
    if spec.kind == "DS" and not spec.s.member(length - 1):
        raise TheoremViolationError(f"{spec.label()}: evidence length {length} has no n in S")


def _verify_one(g: Graph, ctx: _Ctx, spec: DiagonalSpec) -> tuple[VertexSet, list[Witness]]:
    dx = ctx.dset(spec)
    cyc = ctx.cyclic() if spec.kind == "Dinf" else None
    witnesses = []
    for v in range(g.n):
        if dx == g.out_set(v):
            raise TheoremViolationError(f"{spec.label()} equals Out({v})")
        if spec.kind == "D":
            w = cantor_witness(g, v)
        else:
            w = _build_variant_witness(g, ctx, v, spec, dx)
        validate_witness(g, spec, dx, w, cyclic=cyc)
        witnesses.append(w)
    return dx, witnesses


def verify_unequal(g: Graph, spec: DiagonalSpec) -> list[Witness]:
    """Assert the diagonal differs from every Out(v) and return the witnesses."""
    return _verify_one(g, _Ctx(g), spec)[1]


def verify_battery(
    g: Graph, specs: Iterable[DiagonalSpec]
) -> list[tuple[DiagonalSpec, VertexSet, list[Witness]]]:
    """Run verify_unequal for many specs sharing one per-graph cache."""
    ctx = _Ctx(g)
    out = []
    for spec in specs:
        dx, witnesses = _verify_one(g, ctx, spec)
        out.append((spec, dx, witnesses))
    return out


def default_spec_battery() -> list[DiagonalSpec]:
    """The standard verification battery: D, Dn for n in 1..6, Dinf, five S."""
    evens = UPSet(0, 2, frozenset({0}))
    odds = UPSet(0, 2, frozenset({1}))
    specs = [DiagonalSpec.d()]
    specs += [DiagonalSpec.dn(n) for n in range(1, 7)]
    specs.append(DiagonalSpec.dinf())
    specs += [
        DiagonalSpec.ds(UPSet.from_finite([0])),
        DiagonalSpec.ds(UPSet.from_finite([1])),
        DiagonalSpec.ds(UPSet.from_finite([0, 2])),
        DiagonalSpec.ds(evens),
        DiagonalSpec.ds(odds),
    ]
    return specs


@dataclass(frozen=True)
class ChainReport:
    """Outcome of the inclusion and intersection identity checks."""

    n_max: int
    inclusions_checked: int
    finite_identities: tuple[str, ...]
    truncated_identities: tuple[tuple[str, int], ...]
    ok: bool = True

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "inclusions_checked": self.inclusions_checked,
            "finite_identities": list(self.finite_identities),
            "truncated_identities": [
                {"s": lit, "bound": bound} for lit, bound in self.truncated_identities
            ],
            "ok": self.ok,
        }


def inclusion_chain_check(
    g: Graph, n_max: int, s_samples: Iterable[UPSet] = ()
) -> ChainReport:
    """Check Dinf <= Dn <= D for n in 1..n_max and the intersection identities.

    Finite S: diagonal_S equals the exact intersection of the Dn over S
    (with D standing in for n = 0).  Ultimately periodic infinite S: the
    intersection is truncated at max(mu, t+1) + lcm(lambda, d), beyond
    which both sides are jointly periodic, so nothing new can appear.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    d = diagonal(g)
    dinf = diagonal_inf(g)
    dn_cache: dict[int, VertexSet] = {0: d}

    def dn(n: int) -> VertexSet:
        if n not in dn_cache:
            dn_cache[n] = diagonal_n(g, n)
        return dn_cache[n]

    for n in range(1, n_max + 1):
        if not dinf.issubset(dn(n)):
            raise TheoremViolationError(f"D_inf is not a subset of D_{n}")
        if not dn(n).issubset(d):
            raise TheoremViolationError(f"D_{n} is not a subset of D")

    finite_ids: list[str] = []
    truncated: list[tuple[str, int]] = []
    trace: PowerTrace | None = None
    for s in s_samples:
        if s.is_empty():
            raise ValueError("S samples must be nonempty")
        ds = diagonal_S(g, s)
        if s.is_finite():
            members = sorted(s.exceptional)
            bound = None
        else:
            if trace is None:
                trace = power_trace(g)
            bound = max(trace.mu, s.threshold + 1) + math.lcm(trace.lam, s.period)
            members = list(s.members_upto(bound))
        expected = VertexSet.full(g.n)
        for n in members:
            expected &= dn(n)
        if ds != expected:
            raise TheoremViolationError(
                f"D_S for S={s.literal()} differs from the intersection of its D_n"
            )
        if bound is None:
            finite_ids.append(s.literal())
        else:
            truncated.append((s.literal(), bound))
    return ChainReport(
        n_max=n_max,
        inclusions_checked=2 * n_max,
        finite_identities=tuple(finite_ids),
        truncated_identities=tuple(truncated),
    )


def distinct_out_count(g: Graph) -> tuple[int, int]:
    """(number of distinct outgoing sets, graph order); the count never exceeds the order."""
    return len(set(g.rows)), g.n
