"""Exact graph invariants at desk scale: girth, odd-girth, clique and chromatic
numbers, plus the disjointness graph of a chain arrangement.

The solvers are deterministic branch-and-bound searches; work is metered by a
node budget so failures are reproducible.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .geometry import OVERLAP, chain_common_points

DEFAULT_BUDGET = 10_000_000
MAX_EXACT_VERTICES = 10_000

INF = math.inf


class BudgetExceeded(Exception):
    """The search spent its node budget before finishing."""


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self, amount: int = 1):
        self.left -= amount
        if self.left < 0:
            raise BudgetExceeded("search node budget exhausted")


class Graph:
    """Simple undirected graph on vertices 0..n-1 with optional labels."""

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = (), labels=None):
        self.n = n
        self.adj: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            self.add_edge(u, v)
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("label count must equal vertex count")

    def add_edge(self, u: int, v: int):
        if u == v:
            raise ValueError("loops are not allowed")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError("vertex out of range")
        self.adj[u].add(v)
        self.adj[v].add(u)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> List[Tuple[int, int]]:
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.adj == other.adj
                and self.labels == other.labels)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


Coloring = Dict[int, int]


def check_coloring(g: Graph, coloring: Coloring) -> bool:
    """True iff the coloring is total and no edge is monochromatic."""
    if any(v not in coloring for v in range(g.n)):
        raise ValueError("coloring must assign every vertex")
    return all(coloring[u] != coloring[v] for u, v in g.edges())


def disjointness_graph(arrangement) -> Graph:
    """Graph on the arrangement's chains; edges join disjoint pairs.

    Chains that overlap in a subsegment are not disjoint, so overlapping
    pairs simply get no edge.
    """
    chains = arrangement.chains
    g = Graph(len(chains), labels=arrangement.labels)
    for i in range(len(chains)):
        for j in range(i + 1, len(chains)):
            common = chain_common_points(chains[i], chains[j])
            if common is not OVERLAP and len(common) == 0:
                g.add_edge(i, j)
    return g


def _check_size(g: Graph):
    if g.n > MAX_EXACT_VERTICES:
        raise ValueError(f"exact invariants are capped at {MAX_EXACT_VERTICES} vertices")


def girth(g: Graph):
    """Length of the shortest cycle; math.inf for forests."""
    _check_size(g)
    best = INF
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                continue
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def odd_girth(g: Graph):
    """Length of the shortest odd cycle; math.inf iff the graph is bipartite.

    Runs a BFS in the bipartite double cover from each vertex.
    """
    _check_size(g)
    best = INF
    for root in range(g.n):
        dist = {(root, 0): 0}
        queue = deque([(root, 0)])
        while queue:
            u, par = queue.popleft()
            d = dist[(u, par)]
            if d >= best:
                continue
            for w in g.adj[u]:
                node = (w, par ^ 1)
                if node not in dist:
                    dist[node] = d + 1
                    queue.append(node)
        if (root, 1) in dist:
            best = min(best, dist[(root, 1)])
    return best


def _greedy_clique_order(g: Graph) -> List[int]:
    return sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))


def clique_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Exact maximum clique size, by branch and bound with a coloring bound."""
    _check_size(g)
    if g.n == 0:
        return 0
    meter = _Budget(budget)
    order = _greedy_clique_order(g)
    best = [0]

    def color_bound(cands: List[int]) -> List[Tuple[int, int]]:
        # Greedy coloring of the candidate set; vertices come back ordered by
        # color class so the deepest branches carry the tightest bounds.
        classes: List[List[int]] = []
        for v in cands:
            for cls in classes:
                if all(not g.has_edge(v, u) for u in cls):
                    cls.append(v)
                    break
            else:
                classes.append([v])
        ordered = []
        for color, cls in enumerate(classes, start=1):
            for v in cls:
                ordered.append((v, color))
        return ordered

    def expand(size: int, cands: List[int]):
        meter.spend()
        best[0] = max(best[0], size)
        if not cands:
            return
        for v, bound in reversed(color_bound(cands)):
            if size + bound <= best[0]:
                return
            rest = [u for u in cands if u in g.adj[v]]
            expand(size + 1, rest)
            cands = [u for u in cands if u != v]

    expand(0, order)
    return best[0]


def _dsatur_greedy(g: Graph) -> Coloring:
    coloring: Coloring = {}
    saturation = [set() for _ in range(g.n)]
    uncolored = set(range(g.n))
    while uncolored:
        v = max(uncolored,
                key=lambda u: (len(saturation[u]), len(g.adj[u]), -u))
        used = saturation[v]
        c = 0
        while c in used:
            c += 1
        coloring[v] = c
        uncolored.discard(v)
        for w in g.adj[v]:
            saturation[w].add(c)
    return coloring


def _k_colorable(g: Graph, k: int, meter: _Budget) -> Optional[Coloring]:
    """Backtracking k-colorability with DSATUR branching and symmetry breaking."""
    if g.n == 0:
        return {}
    coloring: Coloring = {}
    saturation = [set() for _ in range(g.n)]

    def pick() -> Optional[int]:
        chosen, key = None, None
        for v in range(g.n):
            if v in coloring:
                continue
            k_v = (len(saturation[v]), len(g.adj[v]), -v)
            if key is None or k_v > key:
                chosen, key = v, k_v
        return chosen

    def assign(v: int, c: int) -> List[int]:
        coloring[v] = c
        touched = []
        for w in g.adj[v]:
            if c not in saturation[w]:
                saturation[w].add(c)
                touched.append(w)
        return touched

    def unassign(v: int, c: int, touched: List[int]):
        del coloring[v]
        for w in touched:
            saturation[w].discard(c)

    def solve(max_used: int) -> bool:
        meter.spend()
        v = pick()
        if v is None:
            return True
        if len(saturation[v]) >= k:
            return False
        for c in range(min(k, max_used + 2)):
            if c in saturation[v]:
                continue
            touched = assign(v, c)
            if solve(max(max_used, c)):
                return True
            unassign(v, c, touched)
        return False

    return dict(coloring) if solve(-1) else None


def chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> Tuple[int, Coloring]:
    """Exact chromatic number with a witness proper coloring."""
    _check_size(g)
    if g.n == 0:
        return 0, {}
    meter = _Budget(budget)
    lower = clique_number(g, budget)
    greedy = _dsatur_greedy(g)
    upper = max(greedy.values()) + 1
    if lower == upper:
        return upper, greedy
    for k in range(lower, upper):
        witness = _k_colorable(g, k, meter)
        if witness is not None:
            return k, witness
    return upper, greedy
