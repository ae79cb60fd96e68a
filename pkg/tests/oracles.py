"""Dead-simple reference implementations used only by the test suite.

Everything here enumerates without pruning so that the production solvers
have an independent baseline to match.
"""

from itertools import combinations, permutations

from propconn.graph import Graph, Threshold


def brute_min_vertex_set(g: Graph, r) -> int:
    """Minimum vertex disconnecting cardinality by scanning all subsets."""
    t = Threshold.for_order(r, g.n)
    for k in range(g.n + 1):
        for subset in combinations(range(g.n), k):
            if g.remove_vertices(subset).is_failure_state(t):
                return k
    raise AssertionError("removing all vertices always fails the graph")


def brute_min_edge_set(g: Graph, r) -> int | None:
    """Minimum edge disconnecting cardinality, or None when infeasible."""
    t = Threshold.for_order(r, g.n)
    edges = g.edges()
    for k in range(len(edges) + 1):
        for subset in combinations(edges, k):
            if g.remove_edges(subset).is_failure_state(t):
                return k
    return None


def brute_max_cut(g: Graph) -> int:
    best = 0
    for size in range(g.n):
        for rest in combinations(range(1, g.n), size):
            side = 1
            for v in rest:
                side |= 1 << v
            value = sum((g.rows[v] & ~side).bit_count()
                        for v in range(g.n) if side >> v & 1)
            best = max(best, value)
    return best


def brute_canonical_key(g: Graph) -> int:
    """Minimum upper-triangle key over every vertex permutation (n <= 7)."""
    best = None
    for perm in permutations(range(g.n)):
        key = 0
        for j in range(1, g.n):
            for i in range(j):
                key = (key << 1) | (g.rows[perm[i]] >> perm[j] & 1)
        if best is None or key < best:
            best = key
    return best if best is not None else 0


def max_partition_edges(n: int, tau: int) -> int:
    """Max of sum C(a_i, 2) over partitions of n into parts of order <= tau
    (the most edges any failed graph can carry, found without building any
    graphs)."""
    best = {0: 0}
    for total in range(1, n + 1):
        best[total] = max(
            best[total - part] + part * (part - 1) // 2
            for part in range(1, min(tau, total) + 1)
        )
    return best[n]


def all_labeled_graphs(n: int):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for bits in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])
