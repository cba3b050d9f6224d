"""Simple undirected graphs and the preprocessing steps the solvers consume:
connectivity, DFS approximation forests, degree-bounded neighborhood
improvement, maximal matchings and matching contraction.

Vertices are 0-indexed; adjacency lists are sorted; Graph values are
immutable after construction.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from heapq import nlargest


class Graph:
    __slots__ = ("n", "adj", "m", "_adjsets")

    def __init__(self, n: int, adj: list[list[int]], m: int):
        self.n = n
        self.adj = adj
        self.m = m
        self._adjsets = None

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        adj = [[] for _ in range(n)]
        seen = set()
        m = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
            m += 1
        for lst in adj:
            lst.sort()
        return Graph(n, adj, m)

    def has_edge(self, u: int, v: int) -> bool:
        lst = self.adj[u]
        i = bisect_left(lst, v)
        return i < len(lst) and lst[i] == v

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def neighbor_sets(self) -> list[set]:
        if self._adjsets is None:
            self._adjsets = [set(lst) for lst in self.adj]
        return self._adjsets

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Matching:
    """Disjoint vertex pairs, each an edge of the host graph."""

    edges: tuple

    def __len__(self):
        return len(self.edges)

    def vertices(self) -> set:
        out = set()
        for u, v in self.edges:
            out.add(u)
            out.add(v)
        return out

    def validate(self, g: Graph) -> bool:
        seen = set()
        for u, v in self.edges:
            if u in seen or v in seen or not g.has_edge(u, v):
                return False
            seen.add(u)
            seen.add(v)
        return True


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, list[int]]:
    """Subgraph induced by `vertices`; returns it with the new->old index map.

    New indices follow the sorted order of the kept vertices.
    """
    old_of_new = sorted(vertices)
    new_of_old = {old: new for new, old in enumerate(old_of_new)}
    adj = [[] for _ in old_of_new]
    m = 0
    for new, old in enumerate(old_of_new):
        for w in g.adj[old]:
            wn = new_of_old.get(w)
            if wn is not None:
                adj[new].append(wn)
                if wn > new:
                    m += 1
    return Graph(len(old_of_new), adj, m), old_of_new


def minus_vertex(g: Graph, v: int) -> tuple[Graph, list[int]]:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def prefix_subgraph(g: Graph, k: int) -> Graph:
    """Subgraph induced by vertices 0..k-1 (indices preserved)."""
    adj = [[w for w in g.adj[u] if w < k] for u in range(k)]
    m = sum(len(a) for a in adj) // 2
    return Graph(k, adj, m)


def connected_components(g: Graph) -> list[tuple[list[int], Graph, list[int]]]:
    """Partition into components: (sorted vertex list, induced graph, new->old map)."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        sub, old_of_new = induced_subgraph(g, comp)
        out.append((comp, sub, old_of_new))
    return out


def dfs_elimination_forest(g: Graph):
    """Forest of DFS calls, started from each unvisited vertex in ascending
    order, neighbors scanned ascending.  Always a valid elimination forest;
    depth at most exponential in the true treedepth.
    """
    from .forest import RootedForest

    parent = [-1] * g.n
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [(s, iter(g.adj[s]))]
        while stack:
            u, it = stack[-1]
            advanced = False
            for w in it:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = u
                    stack.append((w, iter(g.adj[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
    return RootedForest(parent)


def treedepth_lower_bound(g: Graph) -> int:
    """Cheap sound lower bound: a DFS chain of D vertices is a path subgraph
    (so the treedepth is at least ceil(log2(D+1))), and a greedily grown
    clique of size c forces treedepth at least c."""
    if g.n == 0:
        return 0
    dfs_depth = dfs_elimination_forest(g).max_depth
    bound = (dfs_depth + 1).bit_length() - 1
    if (1 << bound) < dfs_depth + 1:
        bound += 1
    seeds = nlargest(8, range(g.n), key=g.degree)
    for s in seeds:
        size = 1
        common = set(g.adj[s])
        while common:
            v = min(common)
            size += 1
            common.intersection_update(g.adj[v])
        bound = max(bound, size)
    return max(bound, 1)


def improved_graph(g: Graph, d: int) -> Graph:
    """Supergraph with an edge added between every non-adjacent pair having
    at least d+1 common neighbors of degree at most d.

    Pair counts are bucketed through the low-degree witnesses, so the cost is
    O(d^2 n) plus the output size when m <= d*n.
    """
    counts: dict[tuple[int, int], int] = {}
    for w in range(g.n):
        nb = g.adj[w]
        if len(nb) > d:
            continue
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                key = (nb[i], nb[j])
                counts[key] = counts.get(key, 0) + 1
    extra = [p for p, c in counts.items() if c >= d + 1 and not g.has_edge(*p)]
    if not extra:
        return g
    adj = [list(lst) for lst in g.adj]
    for u, v in extra:
        adj[u].append(v)
        adj[v].append(u)
    for lst in adj:
        lst.sort()
    return Graph(g.n, adj, g.m + len(extra))


def _simplicial_in(g: Graph) -> list[int]:
    """Vertices whose closed neighborhood is a clique in g."""
    sets = g.neighbor_sets()
    out = []
    for v in range(g.n):
        nb = g.adj[v]
        deg = len(nb)
        # clique members all see each other, so no neighbor may have a
        # smaller degree than v itself
        if any(len(g.adj[w]) < deg for w in nb):
            continue
        ok = True
        for i in range(deg):
            si = sets[nb[i]]
            for j in range(i + 1, deg):
                if nb[j] not in si:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(v)
    return out


def improved_simplicial_vertices(g: Graph, d: int) -> list[int]:
    """All v whose closed neighborhood in improved_graph(g, d) is a clique there."""
    return _simplicial_in(improved_graph(g, d))


def has_large_clique(g_imp: Graph, d: int) -> bool:
    """Detects a clique of size d+2 in an (improved) graph via simplicial
    closed neighborhoods; a hit certifies that depth budget d is hopeless."""
    for v in _simplicial_in(g_imp):
        if g_imp.degree(v) + 1 >= d + 2:
            return True
    return False


def greedy_maximal_matching(g: Graph) -> Matching:
    """Maximal matching, scanning edges in ascending (min, max) order so the
    result is reproducible."""
    used = [False] * g.n
    out = []
    for u in range(g.n):
        if used[u]:
            continue
        for v in g.adj[u]:
            if v > u and not used[v]:
                used[u] = used[v] = True
                out.append((u, v))
                break
    return Matching(tuple(out))


@dataclass(frozen=True)
class BodlaenderOutcome:
    kind: str  # "matching" | "simplicial" | "too_deep"
    matching: Matching | None = None
    vertices: tuple = ()


def bodlaender_step(g: Graph, d: int, c_of_d) -> BodlaenderOutcome:
    """One reduction step: a large maximal matching, a large set of
    improved-simplicial vertices, or the verdict that the budget is hopeless.

    `c_of_d` maps d to the fraction constant: the step succeeds when the
    matching or the simplicial set has size at least n / c_of_d(d).  The
    large-clique shortcut in the improved graph is checked first, so complete
    graphs on d+2 vertices are rejected outright.
    """
    n = g.n
    g_imp = improved_graph(g, d)
    simp = _simplicial_in(g_imp)
    for v in simp:
        if g_imp.degree(v) + 1 >= d + 2:
            return BodlaenderOutcome("too_deep")
    threshold = n / c_of_d(d)
    matching = greedy_maximal_matching(g)
    if len(matching) >= threshold:
        return BodlaenderOutcome("matching", matching=matching)
    matched = matching.vertices()
    cand = tuple(v for v in simp if v not in matched and g.degree(v) <= d)
    if len(cand) >= threshold:
        return BodlaenderOutcome("simplicial", vertices=cand)
    return BodlaenderOutcome("too_deep")


def contract_matching(g: Graph, matching: Matching) -> tuple[Graph, list[tuple]]:
    """Merge every matched pair into one vertex; parallel edges are
    deduplicated and loops dropped.

    Returns the contracted graph and, per new vertex, its tuple of
    pre-images (one or two old vertices, ascending).  New indices follow the
    sorted order of minimum pre-images.
    """
    partner = {}
    for u, v in matching.edges:
        partner[u] = v
        partner[v] = u
    reps = sorted(v for v in range(g.n) if v not in partner or partner[v] > v)
    new_of_old = {}
    cmap = []
    for new, v in enumerate(reps):
        if v in partner:
            cmap.append((v, partner[v]))
            new_of_old[v] = new
            new_of_old[partner[v]] = new
        else:
            cmap.append((v,))
            new_of_old[v] = new
    edges = set()
    for u, v in g.edges():
        a, b = new_of_old[u], new_of_old[v]
        if a != b:
            edges.add((a, b) if a < b else (b, a))
    return Graph.from_edges(len(reps), sorted(edges)), cmap
