"""Extremal connectivity statistics over G(n, m), the family of all simple
graphs with n vertices and m edges.

The four statistics are the minimum and maximum of the vertex and edge
disconnection numbers over the family (covmin, covmax, coemin, coemax).
covmin and coemin have closed forms built on the densest failure state;
covmax and coemax only have known values in their tail regions, with the
middle left to exact enumeration.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .graph import Graph, Threshold, complete, disjoint_union
from .enumeration import (MAX_ENUM_VERTICES, canonical_graph, enumerate_gnm,
                          family_profile)

_STATS = ("covmin", "coemin", "covmax", "coemax")


@dataclass(frozen=True)
class PQDecomposition:
    """n = p*tau + q with 0 <= q < tau, the shape of the densest failure
    state (p full parts of order tau plus a remainder part)."""

    n: int
    tau: int
    p: int
    q: int

    @classmethod
    def of(cls, n: int, r: Fraction) -> "PQDecomposition":
        tau = Threshold.for_order(r, n).tau
        if tau < 1:
            raise ValueError("decomposition requires floor(r*n) >= 1")
        p, q = divmod(n, tau)
        return cls(n, tau, p, q)


@dataclass(frozen=True)
class ExtremalResult:
    stat: str
    n: int
    m: int
    r: Fraction
    value: int
    method: str                    # formula | tail | enumeration
    witness: Graph | None = None


def _check_m(n: int, m: int) -> None:
    if not 0 <= m <= comb(n, 2):
        raise ValueError(f"m={m} out of range for n={n}")


def max_failure_edges(n: int, r: Fraction) -> int:
    """Most edges a failed graph of order n can carry:
    p*C(tau,2) + C(q,2)."""
    d = PQDecomposition.of(n, r)
    return d.p * comb(d.tau, 2) + comb(d.q, 2)


def build_max_failure_state(n: int, r: Fraction) -> Graph:
    """The densest failed graph: p disjoint copies of K_tau plus K_q."""
    d = PQDecomposition.of(n, r)
    return disjoint_union(*([complete(d.tau)] * d.p + [complete(d.q)]))


def covmin_threshold_f(k: int, n: int, r: Fraction) -> int:
    """Edge budget f(k) below which the family minimum vertex value stays
    at most k: a k-clique joined to everything plus the densest failure
    state on the other n-k vertices."""
    d = PQDecomposition.of(n, r)
    if not 0 <= k <= n - d.tau:
        raise ValueError(f"k={k} out of range [0, {n - d.tau}]")
    p2, q2 = divmod(n - k, d.tau)
    return k * (n - k) + comb(k, 2) + p2 * comb(d.tau, 2) + comb(q2, 2)


def _strip_edges(g: Graph, surplus: int) -> Graph:
    """Delete ``surplus`` edges, largest pairs first, deterministically."""
    if surplus:
        g = g.remove_edges(g.edges()[-surplus:])
    return g


def _covmin_witness(n: int, m: int, r: Fraction, k: int) -> Graph:
    # Densest graph whose vertex value is exactly k: k dominating vertices
    # over the densest failure state of the remaining n-k; stripping surplus
    # edges keeps the value (deletion never raises it, and the family
    # minimum at m edges bounds it from below).
    d = PQDecomposition.of(n, r)
    if k == 0:
        base = build_max_failure_state(n, r)
    else:
        parts_p, parts_q = divmod(n - k, d.tau)
        rest = disjoint_union(*([complete(d.tau)] * parts_p + [complete(parts_q)]))
        rows = list(disjoint_union(complete(k), rest).rows)
        for u in range(k):
            for v in range(k, n):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        base = Graph._from_rows(n, tuple(rows))
    return canonical_graph(_strip_edges(base, base.m - m))


def covmin(n: int, m: int, r: Fraction) -> ExtremalResult:
    """Family minimum vertex value: the unique k with f(k-1) < m <= f(k),
    found by an ascending scan (0 when m <= f(0))."""
    _check_m(n, m)
    k = 0
    while m > covmin_threshold_f(k, n, r):
        k += 1
    return ExtremalResult("covmin", n, m, r, k, "formula",
                          _covmin_witness(n, m, r, k))


def covmin_piecewise_crosscheck(n: int, m: int, r: Fraction) -> int | None:
    """Alternative piecewise labeling of the family minimum vertex value,
    evaluated exactly as its cases are written.

    Kept only for the discrepancy harness: its case boundaries disagree
    with the f(k) scan on some inputs (and label nothing at all on others,
    in which case None is returned).  Mismatches are reported by callers,
    never patched here.
    """
    d = PQDecomposition.of(n, r)
    _check_m(n, m)
    tau, p, q = d.tau, d.p, d.q
    a = p * comb(tau, 2) + comb(q, 2)
    b = a + q * p * tau

    def c_window(i: int, j: int) -> int:
        return (sum(tau * tau * (p - t) for t in range(1, i))
                + (j - 1) * tau * (p - i) + b)

    if 0 <= m <= a:
        return 0
    for t in range(1, q + 1):
        if a + t * p * tau < m <= a + (t + 1) * p * tau:
            return t
    for i in range(1, p):
        for j in range(1, tau):
            if c_window(i, j) < m <= c_window(i, j + 1):
                return (i - 1) * tau + j + q
    for i in range(1, p):
        if c_window(i, tau) < m <= c_window(i + 1, 1):
            return (i - 1) * tau + tau + q
    if p >= 1 and c_window(p, 1) <= m:
        return (p - 1) * tau + q
    return None


def _coemin_witness(n: int, m: int, r: Fraction) -> Graph:
    base = build_max_failure_state(n, r)
    if m <= base.m:
        return canonical_graph(_strip_edges(base, base.m - m))
    g = base
    for u, v in base.non_edges():
        if g.m == m:
            break
        g = g.add_edge(u, v)
    return canonical_graph(g)


def coemin(n: int, m: int, r: Fraction) -> ExtremalResult:
    """Family minimum edge value: every edge beyond the densest failure
    state must be removed, and no fewer suffice."""
    _check_m(n, m)
    value = max(0, m - max_failure_edges(n, r))
    return ExtremalResult("coemin", n, m, r, value, "formula",
                          _coemin_witness(n, m, r))


def covmax_tail(n: int, m: int, r: Fraction) -> int | None:
    """Family maximum vertex value where it is known: 0 below tau edges,
    n - tau within tau edges of complete; None in the middle."""
    _check_m(n, m)
    tau = Threshold.for_order(r, n).tau
    if tau < 1:
        return None
    if m < tau:
        return 0
    if m > comb(n, 2) - tau:
        return n - tau
    return None


def coemax_tail(n: int, m: int, r: Fraction) -> int | None:
    """Family maximum edge value where it is known: 0 below tau edges, and
    the complete-graph value at m = C(n,2); None otherwise.

    The full upper tail does not extend below C(n,2): see
    complete_minus_two_disjoint_edges for the instance that breaks it at
    m = C(n,2) - 2 when tau = n - 1.
    """
    _check_m(n, m)
    tau = Threshold.for_order(r, n).tau
    if tau < 1:
        return None
    if m < tau:
        return 0
    if m == comb(n, 2):
        return comb(n, 2) - max_failure_edges(n, r)
    return None


def complete_minus_two_disjoint_edges(n: int) -> Graph:
    """K_n minus two vertex-disjoint edges; at tau = n-1 no order-(n-1)
    clique survives, so its edge value drops to n-2 instead of the n-1 the
    full upper tail would predict."""
    if n < 4:
        raise ValueError("needs n >= 4 for two disjoint edges")
    return complete(n).remove_edges([(0, 1), (2, 3)])


def extremal_by_enumeration(n: int, m: int, r: Fraction,
                            stat: str) -> ExtremalResult:
    """Ground truth for any of the four family statistics: solve every
    isomorphism-class representative exactly and reduce.  The witness is
    the extremal representative with the smallest canonical key."""
    if stat not in _STATS:
        raise ValueError(f"stat must be one of {_STATS}, got {stat!r}")
    if n > MAX_ENUM_VERTICES:
        raise ValueError(f"enumeration supports n <= {MAX_ENUM_VERTICES}")
    _check_m(n, m)
    profile = family_profile(n, m, r)
    if stat in ("coemin", "coemax") and profile.edge_values is None:
        raise ValueError("edge statistics need floor(r*n) >= 1")
    values = profile.vertex_values if stat.startswith("cov") else profile.edge_values
    value = min(values) if stat.endswith("min") else max(values)
    witness = next(g for g, v in zip(enumerate_gnm(n, m), values) if v == value)
    return ExtremalResult(stat, n, m, r, value, "enumeration", witness)
