"""Largest bipartite subgraph (max-cut), integer-exact lower bounds on it,
and checkers for two open claims about the family maximum edge value.

The checkers never assert: they return verdicts with the computed
quantities on both sides, and a falsifying instance is a first-class
result carrying its witness graph.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, comb, isqrt

from .graph import Graph
from .enumeration import enumerate_gnm, family_profile

MAX_CUT_VERTICES = 24


@dataclass(frozen=True)
class BipartiteWitness:
    """A bipartition of all vertices and the number of edges crossing it."""

    partition: tuple[tuple[int, ...], tuple[int, ...]]
    crossing_edges: int


@dataclass(frozen=True)
class ConjectureVerdict:
    name: str
    n: int
    m: int
    r: Fraction
    holds: bool
    lhs: int
    rhs: Fraction | int | None
    witness: Graph | None = None


def _cut_value(g: Graph, side_a: int) -> int:
    count = 0
    mask = side_a
    while mask:
        low = mask & -mask
        count += (g.rows[low.bit_length() - 1] & ~side_a).bit_count()
        mask ^= low
    return count


def _best_cut_value(g: Graph) -> int:
    """Exact max-cut value by branch and bound; vertex 0 is pinned to one
    side, remaining vertices assigned in label order."""
    n = g.n
    rows = g.rows
    degs = [rows[v].bit_count() for v in range(n)]
    best = -1

    def assign(v: int, side_a: int, side_b: int, cross: int, slack: int):
        nonlocal best
        # slack = max additional cross edges from vertices >= v
        if cross + slack <= best:
            return
        if v == n:
            best = max(best, cross)
            return
        row = rows[v]
        to_a = (row & side_a).bit_count()
        to_b = (row & side_b).bit_count()
        rest = slack - degs[v]
        assign(v + 1, side_a | (1 << v), side_b, cross + to_b, rest + to_b)
        assign(v + 1, side_a, side_b | (1 << v), cross + to_a, rest + to_a)

    total = sum(degs)
    # Initial slack: every edge could cross (each counted once when its
    # second endpoint is assigned).
    assign(1, 1, 0, 0, total - degs[0])
    return best

def max_bipartite_subgraph(g: Graph) -> BipartiteWitness:
    """Bipartition of g maximizing crossing edges (exact max-cut).

    Tie-break: among maximizing bipartitions, the part containing vertex 0
    is the lexicographically smallest such vertex set; it is found by a
    second pass that emits candidate parts in exactly that order.
    """
    if g.n > MAX_CUT_VERTICES:
        raise ValueError(f"max-cut search supports n <= {MAX_CUT_VERTICES}")
    if g.n == 0:
        return BipartiteWitness(((), ()), 0)
    opt = _best_cut_value(g)
    degs = [g.rows[v].bit_count() for v in range(g.n)]
    suffix_deg = [0] * (g.n + 1)
    for v in range(g.n - 1, -1, -1):
        suffix_deg[v] = suffix_deg[v + 1] + degs[v]

    def lex_first(side_a: int, cross: int, start: int) -> int | None:
        # Emits candidate parts in lexicographic order of their sorted
        # vertex tuples: the current set first, then each extension.
        if cross == opt:
            return side_a
        for v in range(start, g.n):
            # Admissible bound: each future vertex adds at most deg(v).
            if cross + suffix_deg[v] < opt:
                break
            gain = (g.rows[v] & ~side_a).bit_count() - (g.rows[v] & side_a).bit_count()
            found = lex_first(side_a | (1 << v), cross + gain, v + 1)
            if found is not None:
                return found
        return None

    side_a = lex_first(1, degs[0], 1)
    part_a = tuple(v for v in range(g.n) if side_a >> v & 1)
    part_b = tuple(v for v in range(g.n) if not side_a >> v & 1)
    return BipartiteWitness((part_a, part_b), opt)


def edwards_bound(m: int) -> int:
    """ceil(m/2 + (sqrt(8m+1) - 1)/8), evaluated with integer arithmetic.

    k qualifies iff 8k - 4m + 1 >= sqrt(8m+1); the bound sits exactly on an
    integer when m is triangular, where float rounding could flip it.
    """
    if m < 0:
        raise ValueError("edge count must be non-negative")
    s = isqrt(8 * m + 1)
    ceil_sqrt = s if s * s == 8 * m + 1 else s + 1
    return max(0, -(-(4 * m - 1 + ceil_sqrt) // 8))


def egk_bounds(g: Graph) -> tuple[int | None, int | None]:
    """Lower bounds on the largest bipartite subgraph: (m + n/3)/2 when g
    has no isolated vertices, (m + (n-1)/2)/2 when g is connected; each
    rounded up and None when its hypothesis fails."""
    n, m = g.n, g.m
    no_isolated = all(g.degree(v) > 0 for v in range(n))
    isolated_free_bound = ceil(Fraction(3 * m + n, 6)) if no_isolated else None
    connected_bound = ceil(Fraction(2 * m + n - 1, 4)) if n >= 1 and g.is_connected() else None
    return isolated_free_bound, connected_bound


def _balanced_partitions(n: int, k: int):
    """Set partitions of range(n) into k blocks of size n // k, each block
    led by its smallest element (every partition generated once)."""
    size = n // k

    def rec(remaining: tuple[int, ...], acc: list[int]):
        if not remaining:
            yield tuple(acc)
            return
        head, rest = remaining[0], remaining[1:]
        for others in combinations(rest, size - 1):
            block = (1 << head)
            for v in others:
                block |= 1 << v
            taken = set(others)
            acc.append(block)
            yield from rec(tuple(v for v in rest if v not in taken), acc)
            acc.pop()

    yield from rec(tuple(range(n)), [])


def _connected_within(g: Graph, mask: int) -> bool:
    seed = mask & -mask
    comp = seed
    frontier = seed
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g.rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp == mask


def _cross_edges_of_partition(g: Graph, blocks: tuple[int, ...]) -> int:
    internal = 0
    for block in blocks:
        mask = block
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            mask ^= low
            internal += (g.rows[v] & mask).bit_count()
    return g.m - internal


def check_equal_partition_conjecture(n: int, m: int, k: int) -> ConjectureVerdict:
    """At r = 1/k with k dividing n: does some graph attaining the family
    maximum edge value admit a minimum edge disconnecting set whose failure
    state is exactly k connected components of order n/k?

    A qualifying graph needs a balanced k-partition with connected blocks
    whose crossing-edge count equals its own edge value (crossing counts of
    balanced partitions never fall below it).  lhs is the family maximum;
    rhs is the best balanced connected-block crossing count over the
    maximizers, or None when no maximizer admits connected blocks at all.
    holds iff lhs == rhs.
    """
    if n % k != 0:
        raise ValueError(f"k={k} must divide n={n}")
    r = Fraction(1, k)
    profile = family_profile(n, m, r)
    if profile.edge_values is None:
        raise ValueError("equal-partition check needs floor(r*n) >= 1")
    coemax = max(profile.edge_values)
    partitions = list(_balanced_partitions(n, k))
    best_cross = None
    best_graph = None
    fallback = None
    for g, value in zip(enumerate_gnm(n, m), profile.edge_values):
        if value != coemax:
            continue
        if fallback is None:
            fallback = g
        for blocks in partitions:
            if not all(_connected_within(g, b) for b in blocks):
                continue
            cross = _cross_edges_of_partition(g, blocks)
            if best_cross is None or cross < best_cross:
                best_cross, best_graph = cross, g
        if best_cross == coemax:
            break
    holds = best_cross == coemax
    return ConjectureVerdict("equal_partition", n, m, r, holds,
                             lhs=coemax, rhs=best_cross,
                             witness=best_graph if holds else fallback)


def check_coemax_upper_bound(n: int, m: int) -> ConjectureVerdict:
    """For even n at r = 1/2: is the family maximum edge value at most
    m/2 + 7n/12?  Compared as exact rationals."""
    if n % 2 != 0:
        raise ValueError("upper-bound check needs even n")
    r = Fraction(1, 2)
    profile = family_profile(n, m, r)
    coemax = max(profile.edge_values)
    witness = next(g for g, v in zip(enumerate_gnm(n, m), profile.edge_values)
                   if v == coemax)
    rhs = Fraction(m, 2) + Fraction(7 * n, 12)
    return ConjectureVerdict("coemax_upper_bound", n, m, r,
                             holds=coemax <= rhs, lhs=coemax, rhs=rhs,
                             witness=witness)


def bipartite_complement_duality_check(g: Graph) -> bool:
    """Counting identity behind the complement argument: over every
    balanced bipartition, crossing edges in g plus crossing edges in the
    complement equal n^2/4.  Must hold for every graph of even order."""
    if g.n % 2 != 0:
        raise ValueError("duality check needs even order")
    if g.n > 16:
        raise ValueError("duality check supports n <= 16")
    if g.n == 0:
        return True
    gc = g.complement()
    target = g.n * g.n // 4
    for others in combinations(range(1, g.n), g.n // 2 - 1):
        side = 1
        for v in others:
            side |= 1 << v
        if _cut_value(g, side) + _cut_value(gc, side) != target:
            return False
    return True
