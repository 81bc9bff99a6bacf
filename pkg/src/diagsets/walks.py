"""Walk existence via boolean matrix powers, plus cycle structure.

Entry (u, w) of A^L is 1 exactly when a walk of length L from u to w
exists; boolean products realize walk concatenation.  The power sequence
A^1, A^2, ... over a finite order is eventually periodic, and
:class:`PowerTrace` captures its minimal preperiod and period so that
arbitrarily large exponents reduce to stored matrices.

Two independent evaluation paths coexist on purpose: plain
square-and-multiply (``mat_pow_bool``) and trace reduction.  Agreement
between them is a standing internal oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet, bits_of
from .upsets import UPSet

# Row-OR accumulation switches to 8-bit block tables above this order;
# below it the table build costs more than it saves.
_BLOCK_TABLE_MIN_ORDER = 64


@dataclass(frozen=True)
class BoolMatrix:
    """Square boolean matrix stored as bitset rows (row u, bit w)."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("matrix order must be at least 1")
        if len(self.rows) != self.n:
            raise ValueError("row count must equal the order")
        for row in self.rows:
            if row < 0 or row >> self.n:
                raise ValueError("row has bits outside [0, n)")

    @classmethod
    def identity(cls, n: int) -> BoolMatrix:
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_graph(cls, g: Graph) -> BoolMatrix:
        return cls(g.n, g.rows)

    def entry(self, u: int, w: int) -> bool:
        return bool(self.rows[u] >> w & 1)

    def diag_bits(self) -> int:
        mask = 0
        for v, row in enumerate(self.rows):
            mask |= row & (1 << v)
        return mask


def _mul_rows_naive(a_rows: tuple[int, ...], b_rows: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for row in a_rows:
        acc = 0
        m = row
        while m:
            low = m & -m
            acc |= b_rows[low.bit_length() - 1]
            m ^= low
        out.append(acc)
    return tuple(out)


def _mul_rows_blocked(a_rows: tuple[int, ...], b_rows: tuple[int, ...], n: int) -> tuple[int, ...]:
    # Per 8-column block of A, precompute the OR of every B-row subset so
    # each result row needs only ceil(n/8) lookups.
    nblocks = (n + 7) // 8
    tables = []
    for j in range(nblocks):
        base = 8 * j
        tab = [0] * 256
        for byte in range(1, 256):
            low = byte & -byte
            idx = base + low.bit_length() - 1
            tab[byte] = tab[byte ^ low] | (b_rows[idx] if idx < n else 0)
        tables.append(tab)
    out = []
    for row in a_rows:
        acc = 0
        j = 0
        while row:
            acc |= tables[j][row & 255]
            row >>= 8
            j += 1
        out.append(acc)
    return tuple(out)


def mat_mul_bool(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """OR-of-ANDs product; (a*b)[u,w] = 1 iff some x has a[u,x] and b[x,w]."""
    if a.n != b.n:
        raise ValueError(f"order mismatch: {a.n} != {b.n}")
    if a.n > _BLOCK_TABLE_MIN_ORDER:
        return BoolMatrix(a.n, _mul_rows_blocked(a.rows, b.rows, a.n))
    return BoolMatrix(a.n, _mul_rows_naive(a.rows, b.rows))


def mat_pow_bool(a: BoolMatrix, exponent: int) -> BoolMatrix:
    """A^exponent by square-and-multiply; O(log exponent) products."""
    if exponent < 1:
        raise ValueError("exponent must be at least 1")
    result: BoolMatrix | None = None
    base = a
    e = exponent
    while e:
        if e & 1:
            result = base if result is None else mat_mul_bool(result, base)
        e >>= 1
        if e:
            base = mat_mul_bool(base, base)
    assert result is not None
    return result


def has_closed_walk(g: Graph, v: int, length: int) -> bool:
    """True iff a closed walk of exactly `length` edges passes through v."""
    g._check_vertex(v)
    if length < 1:
        raise ValueError("walk length must be at least 1")
    power = mat_pow_bool(BoolMatrix.from_graph(g), length)
    return power.entry(v, v)


def has_walk_from(g: Graph, v: int, length: int) -> bool:
    """True iff some walk of exactly `length` edges starts at v."""
    g._check_vertex(v)
    if length < 1:
        raise ValueError("walk length must be at least 1")
    power = mat_pow_bool(BoolMatrix.from_graph(g), length)
    return power.rows[v] != 0


class TraceCapError(RuntimeError):
    """The power sequence did not repeat within the configured cap."""


def default_trace_cap(n: int) -> int:
    return max(64, n * n + n + 2)


@dataclass(frozen=True)
class PowerTrace:
    """Eventual-periodicity certificate of A^1, A^2, ...

    ``powers[k-1]`` is A^k for k in [1, mu+lam); A^(mu+lam) = A^mu, and
    every exponent L >= mu reduces to mu + ((L - mu) mod lam).
    """

    mu: int
    lam: int
    powers: tuple[BoolMatrix, ...]

    def reduce_exponent(self, exponent: int) -> int:
        if exponent < 1:
            raise ValueError("exponent must be at least 1")
        if exponent < self.mu:
            return exponent
        return self.mu + (exponent - self.mu) % self.lam

    def power(self, exponent: int) -> BoolMatrix:
        return self.powers[self.reduce_exponent(exponent) - 1]


def power_trace(g: Graph, cap: int | None = None) -> PowerTrace:
    """Find minimal (mu, lam) with A^(mu+lam) = A^mu by hashing powers."""
    if cap is None:
        cap = default_trace_cap(g.n)
    if cap < 2:
        raise ValueError("cap must be at least 2")
    a = BoolMatrix.from_graph(g)
    seen: dict[BoolMatrix, int] = {}
    powers: list[BoolMatrix] = []
    cur = a
    k = 1
    while k <= cap:
        if cur in seen:
            mu = seen[cur]
            return PowerTrace(mu, k - mu, tuple(powers))
        seen[cur] = k
        powers.append(cur)
        cur = mat_mul_bool(cur, a)
        k += 1
    raise TraceCapError(f"no repeated power within cap {cap}; raise the cap")


def spectra_from_trace(trace: PowerTrace) -> list[UPSet]:
    """Closed-walk length spectrum of every vertex, from one trace."""
    n = trace.powers[0].n
    mu, lam = trace.mu, trace.lam
    diag = [m.diag_bits() for m in trace.powers]
    out = []
    for v in range(n):
        bit = 1 << v
        exceptional = frozenset(k for k in range(1, mu) if diag[k - 1] & bit)
        residues = frozenset(k % lam for k in range(mu, mu + lam) if diag[k - 1] & bit)
        out.append(UPSet(mu, lam, residues, exceptional))
    return out


def closed_walk_spectrum(g: Graph, v: int, cap: int | None = None) -> UPSet:
    """All L >= 1 admitting a closed walk of length L through v, as a UPSet."""
    g._check_vertex(v)
    return spectra_from_trace(power_trace(g, cap))[v]


def strongly_connected_components(g: Graph) -> list[list[int]]:
    """Tarjan's algorithm, iterative to spare the recursion limit."""
    n = g.n
    index = [0] * n
    low = [0] * n
    visited = [False] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0
    for root in range(n):
        if visited[root]:
            continue
        work = [(root, bits_of(g.rows[root]))]
        visited[root] = True
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if not visited[w]:
                    visited[w] = True
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, bits_of(g.rows[w])))
                    advanced = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(comp)
    return components


def cyclic_vertices(g: Graph) -> VertexSet:
    """Vertices lying on some closed walk: in a multi-vertex SCC, or looped."""
    mask = 0
    for comp in strongly_connected_components(g):
        if len(comp) >= 2:
            for v in comp:
                mask |= 1 << v
        else:
            v = comp[0]
            if g.rows[v] >> v & 1:
                mask |= 1 << v
    return VertexSet(g.n, mask)


def transpose_rows(g: Graph) -> tuple[int, ...]:
    rev = [0] * g.n
    for u, row in enumerate(g.rows):
        for w in bits_of(row):
            rev[w] |= 1 << u
    return tuple(rev)


def reach_backward(g: Graph, targets: VertexSet) -> VertexSet:
    """All v with a (possibly empty) directed walk from v to some target."""
    if targets.width != g.n:
        raise ValueError(f"width mismatch: {targets.width} != {g.n}")
    rev = transpose_rows(g)
    reached = targets.bits
    frontier = targets.bits
    while frontier:
        grown = 0
        for w in bits_of(frontier):
            grown |= rev[w]
        frontier = grown & ~reached
        reached |= frontier
    return VertexSet(g.n, reached)
