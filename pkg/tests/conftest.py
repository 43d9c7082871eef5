"""Shared independent oracles for the test suite.

These deliberately avoid the package's bitset machinery: subset sums are
materialized into hash sets, and the brute-force AR-index search assigns
labels in plain canonical edge order.  They are slow and obviously correct,
which is the point.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from arlabel.graphs import (
    Graph,
    bistar,
    complete,
    complete_bipartite,
    cycle,
    path,
    star,
    wheel,
)


@lru_cache(maxsize=200_000)
def _sums_distinct_cached(values: tuple[int, ...]) -> bool:
    seen = set()
    for r in range(len(values) + 1):
        for comb in combinations(values, r):
            s = sum(comb)
            if s in seen:
                return False
            seen.add(s)
    return True


def naive_is_dss(values) -> bool:
    """Materialize all 2^n subset sums and compare counts."""
    return _sums_distinct_cached(tuple(sorted(values)))


def naive_subset_sums(values) -> list[int]:
    return sorted(sum(c) for r in range(len(values) + 1) for c in combinations(values, r))


def naive_ari(g: Graph, k_cap: int = 40) -> int | None:
    """Brute-force AR-index: for increasing k, try injective assignments from
    {1..k} in canonical edge order, screening each partial assignment with the
    hash-set subset-sum check at both endpoints."""
    m = g.edge_count()
    inc = [g.incident_edges(v) for v in range(g.vertex_count)]

    for k in range(m, k_cap + 1):
        labels = [0] * m

        def endpoint_ok(edge_idx: int) -> bool:
            u, v = g.edges[edge_idx]
            for vert in (u, v):
                vals = tuple(sorted(labels[e] for e in inc[vert] if labels[e]))
                if len(set(vals)) != len(vals):
                    return False
                if not _sums_distinct_cached(vals):
                    return False
            return True

        def dfs(i: int, used: frozenset[int]) -> bool:
            if i == m:
                return True
            for lab in range(1, k + 1):
                if lab in used:
                    continue
                labels[i] = lab
                if endpoint_ok(i) and dfs(i + 1, used | {lab}):
                    return True
                labels[i] = 0
            return False

        if dfs(0, frozenset()):
            return k
    return None


def small_family_graphs(max_edges: int = 6, include_slow: bool = True) -> list[Graph]:
    """Every generated family instance with at most ``max_edges`` edges."""
    graphs = [path(n) for n in range(2, max_edges + 2)]
    graphs += [cycle(n) for n in range(3, max_edges + 1)]
    graphs += [star(n) for n in range(1, max_edges + 1)]
    graphs += [
        bistar(a, b)
        for a in range(1, max_edges)
        for b in range(a, max_edges)
        if a + b + 1 <= max_edges
    ]
    graphs += [complete(n) for n in range(2, 5)]
    graphs += [
        complete_bipartite(a, b)
        for a in range(1, max_edges + 1)
        for b in range(a, max_edges + 1)
        if a * b <= max_edges
    ]
    graphs += [wheel(4)]
    out = []
    seen = set()
    for g in graphs:
        key = (g.vertex_count, g.edges)
        if key in seen or not (1 <= g.edge_count() <= max_edges):
            continue
        if not include_slow and g.name == "K_{1,6}":
            continue
        seen.add(key)
        out.append(g)
    return out
