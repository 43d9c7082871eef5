"""Exact AR-index search: branch-and-bound labeling, counting prunes, and the
special-purpose constructions (bipartite disjoint covers, wheel labelings,
embedding into an AR-supergraph).

The decision core is ``find_ar_labeling``: backtracking over edges ordered by
decreasing endpoint-degree sum, assigning labels in ascending order, and
maintaining one subset-sum occupancy bitmap per vertex so that every
assignment is screened by the incremental DSS test at both endpoints.  A
completed assignment is therefore an AR-labeling by construction; an
exhausted search is a refutation certificate for that label budget.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass

from .check import Labeling, is_ar_labeling
from .dss import DssSet, enumerate_dss_sets
from .errors import SearchTimeout, UnsupportedSizeError
from .es import KNOWN_ES, conway_guy_set, conway_guy_u, es, es_floor
from .graphs import Graph, wheel

logger = logging.getLogger(__name__)

EXACT = "exact"
BOUNDS_ONLY = "bounds-only"


@dataclass
class SearchConfig:
    """Solver knobs: wall-clock budget, worker width, optional symmetry cut.

    ``threads`` is accepted for interface compatibility; the current solver
    runs serially regardless, which trivially satisfies the contract that
    parallel and serial runs report identical values.
    """

    budget_s: float = 60.0
    threads: int = 1
    symmetry_breaking: bool = False
    edge_cap: int = 40

    def __post_init__(self) -> None:
        if self.budget_s <= 0:
            raise ValueError("budget must be positive")


@dataclass
class SearchStats:
    nodes: int = 0
    occupancy_prunes: int = 0
    counting_refuted: bool = False

    def as_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "occupancy_prunes": self.occupancy_prunes,
            "counting_refuted": self.counting_refuted,
        }


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one k-feasibility search.

    ``exhausted`` distinguishes a refutation (the whole space was searched)
    from a timeout; a missing labeling only certifies infeasibility when the
    search is exhausted.
    """

    labeling: Labeling | None
    exhausted: bool
    stats: SearchStats


@dataclass(frozen=True)
class AriResult:
    graph: Graph
    status: str  # EXACT | BOUNDS_ONLY
    lower: int
    upper: int
    witness: Labeling | None
    stats: SearchStats

    @property
    def value(self) -> int | None:
        return self.lower if self.status == EXACT else None


def counting_prune(g: Graph, k: int) -> bool:
    """True when label budget k survives the degree-counting argument.

    Every vertex of degree d carries an incident label >= ES(d), and a label
    value sits on one edge, serving at most its two endpoints.  k is refuted
    when some threshold t has more vertices demanding a label >= t than the
    2*(k - t + 1) endpoint slots the values t..k can offer.
    """
    if k < 1:
        raise ValueError("k must be positive")
    needs = [es_floor(g.degree(v)) for v in range(g.vertex_count) if g.degree(v) > 0]
    for t in sorted(set(needs)):
        demand = sum(1 for need in needs if need >= t)
        capacity = 2 * max(0, k - t + 1)
        if demand > capacity:
            return False
    return True


def ari_lower_bound(g: Graph) -> int:
    """Largest k0 such that every k < k0 is refuted by injectivity (k < m),
    the ES(max-degree) bound, or the counting prune.  Never exceeds the true
    AR-index."""
    if g.edge_count() < 1:
        raise ValueError("graph has no edges")
    k0 = max(g.edge_count(), es_floor(g.max_degree()))
    while not counting_prune(g, k0):
        k0 += 1
    return k0


def _search_order(g: Graph) -> list[int]:
    # Highest-degree endpoints first: their occupancy bitmaps fill fastest,
    # so the DSS pruning bites as early as possible.
    deg = [g.degree(v) for v in range(g.vertex_count)]
    return sorted(
        range(g.edge_count()), key=lambda e: (-(deg[g.edges[e][0]] + deg[g.edges[e][1]]), e)
    )


def find_ar_labeling(
    g: Graph,
    k: int,
    cfg: SearchConfig | None = None,
    *,
    _require_label_k: bool = False,
) -> SearchOutcome:
    """Search for an AR-labeling of g with distinct labels from {1..k}.

    Returns the first labeling under the deterministic order, or an
    exhausted refutation, or a timeout (``exhausted`` False).  k smaller than
    the edge count is immediately infeasible (injectivity), not an error.

    ``_require_label_k`` marks that any witness must use label k (true while
    iteratively deepening, where k-1 is already refuted); combined with an
    edge-transitive graph and ``cfg.symmetry_breaking`` it pins label k to
    the first search edge.
    """
    cfg = cfg or SearchConfig()
    if k < 1:
        raise ValueError("k must be positive")
    m = g.edge_count()
    stats = SearchStats()
    if m == 0:
        return SearchOutcome(Labeling(()), True, stats)
    if m > cfg.edge_cap:
        raise ValueError(f"graph has {m} edges, above the configured cap {cfg.edge_cap}")
    if k < m:
        return SearchOutcome(None, True, stats)
    if not counting_prune(g, k):
        stats.counting_refuted = True
        return SearchOutcome(None, True, stats)

    order = _search_order(g)
    ordered_edges = [g.edges[e] for e in order]
    occ = [1] * g.vertex_count
    assigned = [0] * m
    used = 0
    deadline = time.monotonic() + cfg.budget_s
    monotonic = time.monotonic

    # Pinning label k to the first search edge is sound on an edge-transitive
    # graph once some edge must carry k: either the deepening context says so
    # (k-1 already refuted) or k == m forces a bijection.
    fix_first = (
        cfg.symmetry_breaking
        and g.edge_transitive
        and (_require_label_k or k == m)
    )

    def dfs(i: int) -> bool:
        nonlocal used
        if i == m:
            return True
        stats.nodes += 1
        if stats.nodes & 1023 == 0 and monotonic() > deadline:
            raise SearchTimeout
        u, v = ordered_edges[i]
        ou = occ[u]
        ov = occ[v]
        candidates = (k,) if (i == 0 and fix_first) else range(1, k + 1)
        for lab in candidates:
            if (used >> lab) & 1:
                continue
            su = ou << lab
            if ou & su:
                stats.occupancy_prunes += 1
                continue
            sv = ov << lab
            if ov & sv:
                stats.occupancy_prunes += 1
                continue
            occ[u] = ou | su
            occ[v] = ov | sv
            used |= 1 << lab
            assigned[i] = lab
            if dfs(i + 1):
                return True
            occ[u] = ou
            occ[v] = ov
            used &= ~(1 << lab)
        return False

    try:
        found = dfs(0)
    except SearchTimeout:
        return SearchOutcome(None, False, stats)
    if not found:
        return SearchOutcome(None, True, stats)
    labels = [0] * m
    for pos, e in enumerate(order):
        labels[e] = assigned[pos]
    labeling = Labeling(tuple(labels))
    verdict = is_ar_labeling(g, labeling)
    if not verdict.ok:  # pragma: no cover - solver invariant
        raise RuntimeError(f"internal: solver emitted an invalid labeling: {verdict.describe()}")
    return SearchOutcome(labeling, True, stats)


def ari(g: Graph, cfg: SearchConfig | None = None) -> AriResult:
    """AR-index by iterative deepening from the certified lower bound.

    Exactness requires every smaller k refuted without timeout; on budget
    expiry the result degrades to the interval [first undecided k, ES upper
    bound from the edge count].
    """
    cfg = cfg or SearchConfig()
    if g.edge_count() < 1:
        raise ValueError("graph has no edges")
    lb = ari_lower_bound(g)
    m = g.edge_count()
    upper = KNOWN_ES[m] if m <= 9 else conway_guy_u(m)
    deadline = time.monotonic() + cfg.budget_s
    total = SearchStats()
    k = lb
    while True:
        remaining = deadline - time.monotonic()
        if remaining <= 0:
            return AriResult(g, BOUNDS_ONLY, k, upper, None, total)
        step_cfg = SearchConfig(
            budget_s=remaining,
            threads=cfg.threads,
            symmetry_breaking=cfg.symmetry_breaking,
            edge_cap=cfg.edge_cap,
        )
        outcome = find_ar_labeling(g, k, step_cfg, _require_label_k=True)
        total.nodes += outcome.stats.nodes
        total.occupancy_prunes += outcome.stats.occupancy_prunes
        if outcome.labeling is not None:
            return AriResult(g, EXACT, k, k, outcome.labeling, total)
        if not outcome.exhausted:
            return AriResult(g, BOUNDS_ONLY, k, upper, None, total)
        k += 1


def is_ar_graph(g: Graph, cfg: SearchConfig | None = None) -> bool | None:
    """Does g admit an AR-labeling within {1..m(g)}?  None on timeout."""
    outcome = find_ar_labeling(g, g.edge_count(), cfg)
    if outcome.labeling is not None:
        return True
    return False if outcome.exhausted else None


def is_almost_ar(g: Graph, cfg: SearchConfig | None = None) -> bool | None:
    """Is ARI(g) exactly m(g) + 1?  None on timeout in either search."""
    at_m = is_ar_graph(g, cfg)
    if at_m is None:
        return None
    if at_m:
        return False
    outcome = find_ar_labeling(g, g.edge_count() + 1, cfg, _require_label_k=True)
    if outcome.labeling is not None:
        return True
    return False if outcome.exhausted else None


def disjoint_dss_cover(m: int, n: int) -> list[DssSet] | None:
    """m pairwise-disjoint n-element DSS subsets of {1..m*n}, or None.

    This is the necessary condition for K_{m,n} (m <= n, small side of degree
    n) to be an AR-graph: the m stars on the small side partition the m*n
    labels into m DSS sets.  Since m disjoint n-sets exhaust {1..m*n}, the
    search is an exact-cover walk that always covers the smallest unused
    element next.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if m > n:
        raise ValueError(f"expected m <= n, got ({m}, {n})")
    ground = m * n
    candidates = enumerate_dss_sets(n, ground)
    masks = []
    for ds in candidates:
        mask = 0
        for a in ds:
            mask |= 1 << a
        masks.append(mask)
    by_min: dict[int, list[int]] = {}
    for i, ds in enumerate(candidates):
        by_min.setdefault(ds.elements[0], []).append(i)
    full = 0
    for a in range(1, ground + 1):
        full |= 1 << a

    chosen: list[int] = []

    def cover(used_mask: int) -> bool:
        if len(chosen) == m:
            return True
        free = full & ~used_mask
        lowest = (free & -free).bit_length() - 1
        for i in by_min.get(lowest, ()):
            cand_mask = masks[i]
            if cand_mask & used_mask:
                continue
            chosen.append(i)
            if cover(used_mask | cand_mask):
                return True
            chosen.pop()
        return False

    if cover(0):
        return [candidates[i] for i in chosen]
    return None


def _wheel_rim_edges(n: int) -> list[tuple[int, int]]:
    rim = [(i, i + 1) for i in range(1, n - 1)]
    rim.append((1, n - 1))
    return rim


def label_wheel(n: int, cfg: SearchConfig | None = None) -> Labeling:
    """A verified AR-labeling of W_n with maximum label exactly ES(n-1).

    Spokes take the Conway-Guy witness set for ES(n-1); rim edges are then
    filled in three passes: a maximum matching of the rim first, the leftover
    adjacent pair handled when the rim is odd, then the rest greedily with
    the smallest feasible unused labels (the degree-3 feasibility rule,
    applied via the occupancy test).  A greedy dead end falls back to
    backtracking over the rim with the spokes fixed.  For n = 6 and 7 the
    full backtracking search is used directly.
    """
    cfg = cfg or SearchConfig()
    if n < 6:
        raise ValueError("wheel labeling construction needs n >= 6")
    d = n - 1  # hub degree == rim length
    if d > 9:
        rec = es(d, budget_s=cfg.budget_s)
        if rec.value is None:
            raise UnsupportedSizeError(
                f"ES({d}) is unavailable: exact search returned bounds "
                f"[{rec.lower}, {rec.upper}] within the budget"
            )
        k = rec.value
        spoke_set = rec.witness
        assert spoke_set is not None
    else:
        k = KNOWN_ES[d]
        spoke_set = conway_guy_set(d)

    g = wheel(n)
    if n in (6, 7):
        outcome = find_ar_labeling(g, k, cfg)
        if outcome.labeling is None:
            if outcome.exhausted:  # pragma: no cover - contradicts the known index
                raise RuntimeError(f"internal: W_{n} refuted at its own index {k}")
            raise SearchTimeout(f"wheel W_{n} search did not finish in budget")
        labeling = outcome.labeling
    else:
        labeling = _label_wheel_constructive(g, n, k, spoke_set, cfg)

    verdict = is_ar_labeling(g, labeling)
    if not verdict.ok:  # pragma: no cover - construction invariant
        raise RuntimeError(f"internal: wheel labeling invalid: {verdict.describe()}")
    if max(labeling.labels) != k:  # pragma: no cover - construction invariant
        raise RuntimeError("internal: wheel labeling max is not ES(n-1)")
    return labeling


def _label_wheel_constructive(
    g: Graph, n: int, k: int, spoke_set: DssSet, cfg: SearchConfig
) -> Labeling:
    edge_index = {e: i for i, e in enumerate(g.edges)}
    labels: dict[int, int] = {}
    occ = [1] * g.vertex_count

    def place(u: int, v: int, lab: int) -> None:
        e = edge_index[(min(u, v), max(u, v))]
        labels[e] = lab
        occ[u] |= occ[u] << lab
        occ[v] |= occ[v] << lab

    def feasible(u: int, v: int, lab: int) -> bool:
        return (occ[u] & (occ[u] << lab)) == 0 and (occ[v] & (occ[v] << lab)) == 0

    spokes = sorted(spoke_set.elements)
    for i, lab in enumerate(spokes, start=1):
        place(0, i, lab)
    used = set(spokes)

    rim = _wheel_rim_edges(n)
    L = n - 1
    matching = [(i, i + 1) for i in range(1, L, 2)]
    rest = [e for e in rim if e not in set(matching)]

    def greedy_fill(edges_left: list[tuple[int, int]]) -> bool:
        for u, v in edges_left:
            lab = next(
                (
                    c
                    for c in range(1, k + 1)
                    if c not in used and feasible(u, v, c)
                ),
                None,
            )
            if lab is None:
                return False
            place(u, v, lab)
            used.add(lab)
        return True

    if L % 2 == 1:
        # Odd rim: vertex L is unmatched; settle one of its two edges first
        # so the remaining edges all see two labeled neighbors.
        odd_first = (1, L)
        rest = [odd_first] + [e for e in rest if e != odd_first]

    if not greedy_fill(list(matching) + rest):
        logger.warning(
            "greedy rim fill failed for W_%d; falling back to rim backtracking", n
        )
        return _label_wheel_rim_backtrack(g, n, k, spokes, cfg)
    ordered = tuple(labels[i] for i in range(g.edge_count()))
    return Labeling(ordered)


def _label_wheel_rim_backtrack(
    g: Graph, n: int, k: int, spokes: list[int], cfg: SearchConfig
) -> Labeling:
    """Complete search over rim labels with the spokes pinned to the witness."""
    edge_index = {e: i for i, e in enumerate(g.edges)}
    occ = [1] * g.vertex_count
    labels: dict[int, int] = {}
    for i, lab in enumerate(spokes, start=1):
        e = edge_index[(0, i)]
        labels[e] = lab
        occ[0] |= occ[0] << lab
        occ[i] |= occ[i] << lab
    used = 0
    for lab in spokes:
        used |= 1 << lab
    rim = _wheel_rim_edges(n)
    deadline = time.monotonic() + cfg.budget_s

    def dfs(i: int) -> bool:
        nonlocal used
        if i == len(rim):
            return True
        if time.monotonic() > deadline:
            raise SearchTimeout(f"wheel W_{n} rim search did not finish in budget")
        u, v = rim[i]
        ou, ov = occ[u], occ[v]
        for lab in range(1, k + 1):
            if (used >> lab) & 1:
                continue
            su = ou << lab
            if ou & su:
                continue
            sv = ov << lab
            if ov & sv:
                continue
            occ[u] = ou | su
            occ[v] = ov | sv
            used |= 1 << lab
            labels[edge_index[(min(u, v), max(u, v))]] = lab
            if dfs(i + 1):
                return True
            occ[u] = ou
            occ[v] = ov
            used &= ~(1 << lab)
        return False

    if not dfs(0):
        raise RuntimeError(
            f"internal: rim backtracking found no completion for W_{n} with the "
            f"Conway-Guy spokes; construction evidence should be revisited"
        )
    return Labeling(tuple(labels[i] for i in range(g.edge_count())))


def embed_in_ar_graph(
    g: Graph, cfg: SearchConfig | None = None
) -> tuple[Graph, Labeling]:
    """An AR-supergraph containing g as an induced subgraph, with witness.

    If g (or g plus one pendant) is already an AR-graph it is returned as
    is.  Otherwise a path of ARI(G') - m(G') vertices is attached to the
    pendant; the path edges absorb exactly the labels of {1..ARI(G')} unused
    by the witness, making the total label set {1..m(H)}.
    """
    cfg = cfg or SearchConfig()
    if g.edge_count() < 1:
        raise ValueError("graph has no edges")
    outcome = find_ar_labeling(g, g.edge_count(), cfg)
    if outcome.labeling is not None:
        return g, outcome.labeling
    if not outcome.exhausted:
        raise SearchTimeout("budget expired while deciding whether g is an AR-graph")

    pendant = g.vertex_count
    gp = Graph(
        g.vertex_count + 1,
        g.edges + ((0, pendant),),
        name=(g.name or "G") + "+pendant",
    )
    outcome = find_ar_labeling(gp, gp.edge_count(), cfg)
    if outcome.labeling is not None:
        return gp, outcome.labeling
    if not outcome.exhausted:
        raise SearchTimeout("budget expired while deciding whether G' is an AR-graph")

    result = ari(gp, cfg)
    if result.status != EXACT:
        raise SearchTimeout("budget expired while computing ARI(G')")
    assert result.witness is not None
    l = result.lower - gp.edge_count()
    label_of = {e: lab for e, lab in zip(gp.edges, result.witness.labels)}
    extra_edges = []
    prev = pendant
    for i in range(l):
        nxt = gp.vertex_count + i
        extra_edges.append((prev, nxt))
        prev = nxt
    h = Graph(
        gp.vertex_count + l,
        gp.edges + tuple(extra_edges),
        name=(g.name or "G") + "+tail",
    )
    unused = sorted(set(range(1, result.lower + 1)) - set(result.witness.labels))
    for e, lab in zip(extra_edges, unused):
        label_of[e] = lab
    labeling = Labeling(tuple(label_of[e] for e in h.edges))
    verdict = is_ar_labeling(h, labeling)
    if not verdict.ok:  # pragma: no cover - construction invariant
        raise RuntimeError(f"internal: embedding labeling invalid: {verdict.describe()}")
    return h, labeling
