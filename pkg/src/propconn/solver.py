"""Exact minimum vertex/edge disconnecting sets.

These solvers are the ground truth against which every closed-form value in
the package is checked, so they favor exhaustive-but-pruned strategies over
heuristics.

Vertex side: size-ascending subset search.  Candidate sets are filtered by
the necessary condition that every oversized component must lose at least
one vertex, and a greedy bound caps the search depth.

Edge side: a minimum edge disconnecting set is exactly the set of edges
crossing an optimal partition of the vertices into parts of order at most
tau (removing an edge internal to a surviving component would contradict
minimality).  Maximizing internal edges over such partitions is solved
exactly by dynamic programming over vertex subsets, which stays cheap for
the desk-scale orders this package targets.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graph import Graph, Threshold, MAX_VERTICES

# Subset DP allocates 2**n tables; beyond this the slow-but-exhaustive
# subset search takes over.
_PARTITION_DP_LIMIT = 20


@dataclass(frozen=True)
class DisconnectingWitness:
    """A minimum disconnecting set, or an infeasibility marker.

    ``elements`` holds vertex labels for kind 'vertex' and (u, v) pairs with
    u < v for kind 'edge'.  Infeasible only happens for edge removal with
    tau = 0: single vertices can never be shrunk by deleting edges.
    """

    kind: str
    elements: tuple
    cardinality: int | None
    feasible: bool = True


def _check_solver_input(g: Graph) -> None:
    if g.n < 1:
        raise ValueError("solver requires a nonempty graph")
    if g.n > MAX_VERTICES:
        raise ValueError(f"graph order {g.n} exceeds solver bound {MAX_VERTICES}")


def _oversized_masks(g: Graph, tau: int) -> list[int]:
    return [m for m in g.component_masks() if m.bit_count() > tau]


def _greedy_vertex_bound(g: Graph, t: Threshold) -> int:
    """Feasible (not necessarily minimum) count: repeatedly delete the
    busiest vertex of an oversized component."""
    current = g
    count = 0
    while not current.is_failure_state(t):
        oversized = 0
        for mask in current.component_masks():
            if mask.bit_count() > t.tau:
                oversized |= mask
        best_v = -1
        best_deg = -1
        for v in range(current.n):
            if oversized >> v & 1 and current.degree(v) > best_deg:
                best_v, best_deg = v, current.degree(v)
        current = current.remove_vertices([best_v])
        count += 1
    return count


def copvc_exact(g: Graph, r: Fraction) -> DisconnectingWitness:
    """Minimum vertex disconnecting set of g at proportion r.

    Always feasible: deleting all n vertices leaves the empty graph, which
    is vacuously failed.  Among minimum sets the lexicographically smallest
    (by sorted labels) is returned.
    """
    _check_solver_input(g)
    t = Threshold.for_order(r, g.n)
    if t.tau == 0:
        # Any surviving vertex is a component of order 1 > 0.
        return DisconnectingWitness("vertex", tuple(range(g.n)), g.n)
    if g.is_failure_state(t):
        return DisconnectingWitness("vertex", (), 0)
    oversized = _oversized_masks(g, t.tau)
    bound = _greedy_vertex_bound(g, t)
    for k in range(1, bound + 1):
        for subset in combinations(range(g.n), k):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if any(not mask & comp for comp in oversized):
                continue
            if g.remove_vertices(subset).is_failure_state(t):
                return DisconnectingWitness("vertex", subset, k)
    raise AssertionError("greedy bound was feasible; search must succeed")


def _max_internal_edges(rows: tuple[int, ...], n: int, tau: int) -> int:
    """Maximum edge count kept inside a partition of all n vertices into
    parts of order at most tau (tau >= 1)."""
    full = (1 << n) - 1
    edges_in = [0] * (full + 1)
    for s in range(1, full + 1):
        low = s & -s
        rest = s ^ low
        edges_in[s] = edges_in[rest] + (rows[low.bit_length() - 1] & rest).bit_count()
    if tau >= n:
        return edges_in[full]
    limit = tau - 1
    best = [0] * (full + 1)
    for s in range(1, full + 1):
        low = s & -s
        rest = s ^ low
        # The part holding the lowest vertex is {low} | sub for sub <= rest.
        b = -1
        sub = rest
        while True:
            if sub.bit_count() <= limit:
                part = low | sub
                cand = edges_in[part] + best[s ^ part]
                if cand > b:
                    b = cand
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[s] = b
    return best[full]


def _min_edge_cut_value(g: Graph, tau: int) -> int:
    if g.n <= _PARTITION_DP_LIMIT:
        return g.m - _max_internal_edges(g.rows, g.n, tau)
    return _min_edge_cut_by_search(g, tau)


def _min_edge_cut_by_search(g: Graph, tau: int) -> int:
    """Size-ascending subset search fallback for orders where the DP tables
    would not fit.  Exhaustive, with the inside-an-oversized-component
    pruning rule."""
    t = Threshold(tau, g.n, False)
    if g.is_failure_state(t):
        return 0
    oversized = _oversized_masks(g, tau)
    edges = g.edges()
    for k in range(1, g.m + 1):
        for subset in combinations(edges, k):
            masks = [0] * len(oversized)
            for u, v in subset:
                pair = (1 << u) | (1 << v)
                for i, comp in enumerate(oversized):
                    if pair & comp == pair:
                        masks[i] = 1
            if not all(masks):
                continue
            if g.remove_edges(subset).is_failure_state(t):
                return k
    raise AssertionError("removing every edge is always feasible when tau >= 1")


def copec_exact(g: Graph, r: Fraction) -> DisconnectingWitness:
    """Minimum edge disconnecting set of g at proportion r.

    Returns feasible=False when tau = 0 (no edge removal shrinks an order-1
    component).  Among minimum sets the lexicographically smallest by sorted
    (u, v) pairs is returned; it is built greedily, re-solving the remaining
    instance after each forced edge.
    """
    _check_solver_input(g)
    t = Threshold.for_order(r, g.n)
    if t.tau == 0:
        return DisconnectingWitness("edge", (), None, feasible=False)
    value = _min_edge_cut_value(g, t.tau)
    if value == 0:
        return DisconnectingWitness("edge", (), 0)
    chosen = []
    current = g
    need = value
    for edge in g.edges():
        if need == 0:
            break
        trial = current.remove_edges([edge])
        if _min_edge_cut_value(trial, t.tau) == need - 1:
            chosen.append(edge)
            current = trial
            need -= 1
    if need != 0:
        raise AssertionError("lexicographic completion must reach the optimum")
    return DisconnectingWitness("edge", tuple(chosen), value)


def copvc_value(g: Graph, tau: int) -> int:
    """Cardinality-only vertex solve against an explicit tau (which may come
    from an original order other than g.n)."""
    _check_solver_input(g)
    if tau <= 0:
        return g.n
    t = Threshold(tau, g.n, False)
    if g.is_failure_state(t):
        return 0
    oversized = _oversized_masks(g, tau)
    bound = _greedy_vertex_bound(g, t)
    for k in range(1, bound + 1):
        for subset in combinations(range(g.n), k):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if any(not mask & comp for comp in oversized):
                continue
            if g.remove_vertices(subset).is_failure_state(t):
                return k
    raise AssertionError("greedy bound was feasible; search must succeed")


def copec_value(g: Graph, tau: int) -> int | None:
    """Cardinality-only edge solve; None when tau = 0 makes it infeasible."""
    _check_solver_input(g)
    if tau <= 0:
        return None
    return _min_edge_cut_value(g, tau)


def verify_witness(g: Graph, r: Fraction, w: DisconnectingWitness) -> bool:
    """Check a witness from first principles, independent of the search:
    remove the elements and test every surviving component against
    floor(r * |g|)."""
    tau = (r.numerator * g.n) // r.denominator
    if w.kind == "vertex":
        h = g.remove_vertices(w.elements)
    elif w.kind == "edge":
        h = g.remove_edges(w.elements)
    else:
        raise ValueError(f"unknown witness kind {w.kind!r}")
    return all(order <= tau for order in h.components().orders)
