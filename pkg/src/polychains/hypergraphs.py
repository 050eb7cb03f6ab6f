"""Berge-cycle girth, hypergraph proper coloring, and a desk-scale supplier of
high-girth, high-chromatic hypergraphs (catalog first, seeded search second).
"""

from __future__ import annotations

import math
import random
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .graphs import BudgetExceeded, Graph, _Budget, girth

INF = math.inf

DEFAULT_GIRTH_CAP = 12
DEFAULT_SUPPLY_BUDGET = 200_000


class SupplyExhausted(Exception):
    """The randomized supplier ran out of budget before finding a witness."""


class Hypergraph:
    def __init__(self, m: int, edges: Iterable[Iterable[int]]):
        self.m = m
        self.edges: Tuple[FrozenSet[int], ...] = tuple(frozenset(e) for e in edges)
        seen = set()
        for e in self.edges:
            if not e:
                raise ValueError("empty hyperedge")
            if not all(0 <= v < m for v in e):
                raise ValueError("hyperedge vertex out of range")
            if e in seen:
                raise ValueError("duplicate hyperedge")
            seen.add(e)

    def uniformity(self) -> Optional[int]:
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.m == other.m and sorted(map(sorted, self.edges)) == sorted(
            map(sorted, other.edges))

    def __repr__(self):
        return f"Hypergraph(m={self.m}, M={len(self.edges)})"


def graph_as_hypergraph(g: Graph) -> Hypergraph:
    return Hypergraph(g.n, [frozenset(e) for e in g.edges()])


def h_check_coloring(h: Hypergraph, coloring: Dict[int, int]) -> bool:
    """True iff every hyperedge sees at least two colors."""
    if any(v not in coloring for v in range(h.m)):
        raise ValueError("coloring must assign every vertex")
    return all(len({coloring[v] for v in e}) > 1 for e in h.edges)


def _h_k_colorable(h: Hypergraph, k: int, meter: _Budget) -> Optional[Dict[int, int]]:
    edge_lists = [sorted(e) for e in h.edges]
    touching = [[] for _ in range(h.m)]
    for idx, e in enumerate(edge_lists):
        touching[max(e)].append(idx)
    coloring: Dict[int, int] = {}

    def solve(v: int, max_used: int) -> bool:
        meter.spend()
        if v == h.m:
            return True
        for c in range(min(k, max_used + 2)):
            coloring[v] = c
            if all(any(coloring[u] != c for u in edge_lists[idx])
                   for idx in touching[v]):
                if solve(v + 1, max(max_used, c)):
                    return True
            del coloring[v]
        return False

    return dict(coloring) if solve(0, -1) else None


def h_chromatic_number(h: Hypergraph, budget: int = 10_000_000) -> int:
    """Exact hypergraph chromatic number (fewest colors, no monochromatic edge)."""
    if h.m == 0:
        return 0
    if not h.edges:
        return 1
    meter = _Budget(budget)
    k = 1
    while True:
        if _h_k_colorable(h, k, meter) is not None:
            return k
        k += 1


def incidence_graph(h: Hypergraph) -> Graph:
    """Bipartite vertex/edge incidence graph; its cycles are the Berge cycles."""
    g = Graph(h.m + len(h.edges))
    for idx, e in enumerate(h.edges):
        for v in e:
            g.add_edge(v, h.m + idx)
    return g


def berge_girth(h: Hypergraph, cap: int = DEFAULT_GIRTH_CAP):
    """Length of the shortest Berge cycle.

    Returns the exact length if it is at most ``cap``, math.inf if no Berge
    cycle exists at all, and None when every length up to ``cap`` has been
    ruled out but the hypergraph is not Berge-acyclic.
    """
    if cap < 2:
        raise ValueError("cap must be at least 2")
    if girth(incidence_graph(h)) == INF:
        return INF
    membership = [set() for _ in range(h.m)]
    for idx, e in enumerate(h.edges):
        for v in e:
            membership[v].add(idx)

    def extend(first: int, verts: List[int], used_edges: set, k: int) -> bool:
        # verts holds the distinct vertex sequence so far; edges alternate.
        v = verts[-1]
        if len(verts) == k:
            return any(idx not in used_edges and first in h.edges[idx]
                       for idx in membership[v])
        for idx in membership[v]:
            if idx in used_edges:
                continue
            used_edges.add(idx)
            for w in h.edges[idx]:
                if w > first and w not in verts:
                    verts.append(w)
                    if extend(first, verts, used_edges, k):
                        return True
                    verts.pop()
            used_edges.discard(idx)
        return False

    for k in range(2, cap + 1):
        for first in range(h.m):
            if extend(first, [first], set(), k):
                return k
    return None


def _catalog_entry(uniformity: int, g: int, k: int) -> Optional[Hypergraph]:
    if k <= 2:
        return Hypergraph(uniformity, [frozenset(range(uniformity))])
    if uniformity != 2 or k != 3:
        return None
    if g <= 3:
        length = 5
    elif g <= 5:
        return _petersen()
    else:
        length = g if g % 2 == 1 else g + 1
    return Hypergraph(length, [frozenset({i, (i + 1) % length})
                               for i in range(length)])


def _petersen() -> Hypergraph:
    outer = [frozenset({i, (i + 1) % 5}) for i in range(5)]
    inner = [frozenset({5 + i, 5 + (i + 2) % 5}) for i in range(5)]
    spokes = [frozenset({i, 5 + i}) for i in range(5)]
    return Hypergraph(10, outer + inner + spokes)


def _verify_supply(h: Hypergraph, g: int, k: int, budget: int) -> bool:
    cap = max(DEFAULT_GIRTH_CAP, g)
    bg = berge_girth(h, cap)
    if not (bg is INF or (bg is not None and bg >= g)):
        return False
    if k <= 1:
        return True
    meter = _Budget(budget)
    try:
        return _h_k_colorable(h, k - 1, meter) is None
    except BudgetExceeded:
        return False


def eh_supply(uniformity: int, g: int, k: int,
              budget: int = DEFAULT_SUPPLY_BUDGET, seed: int = 0) -> Hypergraph:
    """A hypergraph with Berge-girth >= g and chromatic number >= k.

    Consults a small catalog first, then falls back to seeded rejection
    sampling.  Every returned hypergraph has been re-verified by the exact
    berge_girth and coloring routines.
    """
    if uniformity < 2 or g < 3 or k < 2:
        raise ValueError("need uniformity >= 2, g >= 3, k >= 2")
    candidate = _catalog_entry(uniformity, g, k)
    if candidate is not None and _verify_supply(candidate, g, k, budget):
        return candidate
    rng = random.Random(seed)
    spent = 0
    m = max(uniformity + 1, 2 * k)
    while spent < budget:
        edge_count = max(1, (m * (k - 1)) // uniformity)
        pool = list(combinations(range(m), uniformity))
        if edge_count > len(pool):
            m += 1
            continue
        edges = rng.sample(pool, edge_count)
        spent += m + edge_count
        try:
            h = Hypergraph(m, [frozenset(e) for e in edges])
        except ValueError:
            continue
        if _verify_supply(h, g, k, budget):
            return h
        if spent % (budget // 8 + 1) == 0:
            m += 1
    raise SupplyExhausted(
        f"no {uniformity}-uniform hypergraph with girth>={g}, chi>={k} "
        f"found within budget {budget}")
