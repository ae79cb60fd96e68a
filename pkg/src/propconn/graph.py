"""Simple undirected graphs with bitmask adjacency, plus the exact rational
threshold machinery that decides when a graph counts as failed.

A graph of order n uses vertex labels 0..n-1 and stores one integer bitmask
per vertex (bit u of ``rows[v]`` set iff u and v are adjacent).  Graphs are
immutable; every operation returns a new graph, so values are safe to share
between threads.
"""

from dataclasses import dataclass
from fractions import Fraction

MAX_VERTICES = 64


def proportion(numerator: int, denominator: int) -> Fraction:
    """Exact ratio r with 0 < r < 1, stored in lowest terms."""
    if denominator == 0:
        raise ValueError("denominator must be nonzero")
    r = Fraction(numerator, denominator)
    if not 0 < r < 1:
        raise ValueError(f"proportion must satisfy 0 < r < 1, got {r}")
    return r


def parse_proportion(text: str) -> Fraction:
    """Parse an 'A/B' ratio string.

    Decimal notation is rejected on purpose: thresholds are floor(r*n) and a
    float that is off by one ulp at an integer boundary silently changes
    answers.
    """
    parts = text.strip().split("/")
    if len(parts) != 2:
        raise ValueError(f"expected a ratio like '1/2', got {text!r}")
    try:
        num, den = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"expected integers in ratio {text!r}") from None
    return proportion(num, den)


@dataclass(frozen=True)
class Threshold:
    """Largest admissible component order: tau = floor(r * n_original).

    The original order is kept alongside tau because removals never shrink
    the threshold; components of a pruned graph are still measured against
    the order the graph had before anything was removed.
    """

    tau: int
    n_original: int
    rn_is_integer: bool

    @classmethod
    def for_order(cls, r: Fraction, n: int) -> "Threshold":
        if n < 1:
            raise ValueError("threshold requires a positive original order")
        num = r.numerator * n
        return cls(tau=num // r.denominator, n_original=n,
                   rn_is_integer=num % r.denominator == 0)


@dataclass(frozen=True)
class ComponentSummary:
    """Connected component orders (sorted descending) of an analyzed graph."""

    orders: tuple[int, ...]
    largest: int

    @property
    def count(self) -> int:
        return len(self.orders)


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "rows", "m")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = [0] * n
        count = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if rows[v] >> u & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            count += 1
        self.n = n
        self.rows = tuple(rows)
        self.m = count

    @classmethod
    def _from_rows(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        g.n = n
        g.rows = rows
        g.m = sum(r.bit_count() for r in rows) // 2
        return g

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors_mask(self, v: int) -> int:
        return self.rows[v]

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1) << (u + 1)
            while row:
                low = row & -row
                out.append((u, low.bit_length() - 1))
                row ^= low
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if not self.has_edge(u, v)]

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or self.has_edge(u, v):
            raise ValueError(f"cannot add edge ({u}, {v})")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._from_rows(self.n, tuple(rows))

    def remove_vertices(self, vertices) -> "Graph":
        """Induced subgraph on the remaining vertices.

        Survivors are relabeled 0..n'-1 in increasing original-label order;
        callers that report sets to the outside keep the original labels.
        """
        drop = 0
        for v in set(vertices):
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range for n={self.n}")
            drop |= 1 << v
        keep = [v for v in range(self.n) if not drop >> v & 1]
        rows = []
        for v in keep:
            row = 0
            old = self.rows[v]
            for new_u, u in enumerate(keep):
                if old >> u & 1:
                    row |= 1 << new_u
            rows.append(row)
        return Graph._from_rows(len(keep), tuple(rows))

    def remove_edges(self, edges) -> "Graph":
        """Same vertex set, the given edges deleted."""
        rows = list(self.rows)
        seen = set()
        for u, v in edges:
            pair = (min(u, v), max(u, v))
            if pair in seen:
                continue
            if not (0 <= u < self.n and 0 <= v < self.n) or not rows[u] >> v & 1:
                raise ValueError(f"edge ({u}, {v}) not in graph")
            seen.add(pair)
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph._from_rows(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        rows = tuple((~self.rows[v]) & full & ~(1 << v) for v in range(self.n))
        return Graph._from_rows(self.n, rows)

    def component_masks(self) -> list[int]:
        masks = []
        remaining = (1 << self.n) - 1
        while remaining:
            comp = remaining & -remaining
            frontier = comp
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= self.rows[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & remaining & ~comp
                comp |= frontier
            masks.append(comp)
            remaining &= ~comp
        return masks

    def components(self) -> ComponentSummary:
        orders = sorted((m.bit_count() for m in self.component_masks()),
                        reverse=True)
        return ComponentSummary(tuple(orders), orders[0] if orders else 0)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    def is_failure_state(self, threshold: Threshold) -> bool:
        """True iff every component order is at most threshold.tau.

        The empty graph is vacuously failed.  The threshold may come from an
        original order larger than this graph's current order.
        """
        tau = threshold.tau
        for mask in self.component_masks():
            if mask.bit_count() > tau:
                return False
        return True


def edgeless(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides need at least one vertex")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    n = sum(g.n for g in graphs)
    rows = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.rows)
        offset += g.n
    return Graph._from_rows(n, tuple(rows))
