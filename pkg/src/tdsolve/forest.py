"""Rooted forests on dense 0-indexed vertex sets: ancestor machinery,
elimination-forest validation, the sensibility test, and the surgeries used
by both solver drivers (component restriction, vertex removal, root
attachment, contraction expansion, simplicial lifting).

Forests are immutable after construction.  Operations that shrink or grow
the vertex set reindex it the same way graph operations do: surviving
vertices keep their relative order.
"""

from __future__ import annotations

from .graph import Graph


class RootedForest:
    __slots__ = ("n", "_parent", "_children", "_depth", "roots")

    def __init__(self, parent: list[int]):
        """parent[v] is the parent index, or -1 for roots."""
        n = len(parent)
        self.n = n
        self._parent = list(parent)
        children = [[] for _ in range(n)]
        roots = []
        for v, p in enumerate(self._parent):
            if p < 0:
                roots.append(v)
            else:
                children[p].append(v)
        self._children = children
        self.roots = roots
        depth = [0] * n
        stack = list(roots)
        for r in roots:
            depth[r] = 1
        while stack:
            u = stack.pop()
            du = depth[u] + 1
            for w in children[u]:
                depth[w] = du
                stack.append(w)
        if n and not all(depth):
            raise ValueError("parent assignment contains a cycle")
        self._depth = depth

    def parent(self, v: int) -> int | None:
        p = self._parent[v]
        return None if p < 0 else p

    def parent_array(self) -> list[int]:
        return list(self._parent)

    def children(self, v: int) -> list[int]:
        return self._children[v]

    def depth_of(self, v: int) -> int:
        return self._depth[v]

    @property
    def max_depth(self) -> int:
        return max(self._depth) if self.n else 0

    def is_ancestor(self, u: int, v: int) -> bool:
        """True when u is an ancestor of v (every vertex is its own ancestor)."""
        du = self._depth[u]
        while self._depth[v] > du:
            v = self._parent[v]
        return u == v

    def ancestor_related(self, u: int, v: int) -> bool:
        """Symmetric comparability: one of u, v is an ancestor of the other."""
        if self._depth[u] > self._depth[v]:
            u, v = v, u
        return self.is_ancestor(u, v)

    def tail(self, v: int, strict: bool = False) -> set:
        """Ancestors of v, including v unless strict."""
        out = set()
        u = v if not strict else self._parent[v]
        while u is not None and u >= 0:
            out.add(u)
            u = self._parent[u]
        return out

    def tree(self, v: int, strict: bool = False) -> set:
        """Descendants of v, including v unless strict."""
        out = set()
        stack = [v]
        while stack:
            u = stack.pop()
            out.add(u)
            stack.extend(self._children[u])
        if strict:
            out.discard(v)
        return out

    def comp(self, v: int) -> set:
        """Vertices comparable with v: its ancestors and descendants."""
        return self.tail(v) | self.tree(v)

    def closure(self, vs) -> set:
        """Ancestor closure: union of tails."""
        out = set()
        for v in vs:
            u = v
            while u >= 0 and u not in out:
                out.add(u)
                u = self._parent[u]
        return out

    def subtree_sizes(self) -> list[int]:
        size = [1] * self.n
        order = sorted(range(self.n), key=lambda v: -self._depth[v])
        for v in order:
            p = self._parent[v]
            if p >= 0:
                size[p] += size[v]
        return size

    def __eq__(self, other):
        return isinstance(other, RootedForest) and other._parent == self._parent

    def __hash__(self):
        return hash(tuple(self._parent))

    def __repr__(self):
        return f"RootedForest({self._parent})"


class PrefixTree:
    """Small rooted skeleton tree with its own index space, grown and shrunk
    by appending and popping downward chains.  Ancestor sets are kept as
    bitmasks (each at most a few machine words for realistic depth budgets).
    """

    __slots__ = ("parent", "depth", "anc")

    def __init__(self):
        self.parent: list[int] = []
        self.depth: list[int] = []
        self.anc: list[int] = []  # bitmask of ancestors including self

    def __len__(self):
        return len(self.parent)

    def add_child(self, w: int | None) -> int:
        """Append a vertex below w (a new root when w is None); returns its index."""
        idx = len(self.parent)
        if w is None:
            self.parent.append(-1)
            self.depth.append(1)
            self.anc.append(1 << idx)
        else:
            self.parent.append(w)
            self.depth.append(self.depth[w] + 1)
            self.anc.append(self.anc[w] | (1 << idx))
        return idx

    def truncate(self, length: int) -> None:
        del self.parent[length:]
        del self.depth[length:]
        del self.anc[length:]

    def related(self, a: int, b: int) -> bool:
        return bool((self.anc[a] >> b) & 1 or (self.anc[b] >> a) & 1)


def validate_elimination_forest(g: Graph, f: RootedForest, d: int) -> bool:
    """True iff f spans V(g), every edge joins comparable vertices, and the
    depth stays within budget d."""
    if f.n != g.n:
        return False
    if g.n and f.max_depth > d:
        return False
    for u, v in g.edges():
        if not f.ancestor_related(u, v):
            return False
    return True


def restrict_to_components(g: Graph, f: RootedForest) -> RootedForest:
    """Per-component forest with the ancestor relation inherited from f: the
    parent of u becomes its deepest proper f-ancestor inside u's component.
    Depths never increase."""
    comp_id = [-1] * g.n
    cid = 0
    for s in range(g.n):
        if comp_id[s] >= 0:
            continue
        comp_id[s] = cid
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if comp_id[w] < 0:
                    comp_id[w] = cid
                    stack.append(w)
        cid += 1
    parent = [-1] * g.n
    for v in range(g.n):
        p = f.parent(v)
        while p is not None and comp_id[p] != comp_id[v]:
            p = f.parent(p)
        parent[v] = -1 if p is None else p
    return RootedForest(parent)


def induced_forest(f: RootedForest, vertices) -> RootedForest:
    """Forest on a vertex subset that is closed under parents (e.g. one
    component after restrict_to_components); reindexed to 0..len-1."""
    old_of_new = sorted(vertices)
    new_of_old = {old: new for new, old in enumerate(old_of_new)}
    parent = []
    for old in old_of_new:
        p = f.parent(old)
        if p is None:
            parent.append(-1)
        else:
            if p not in new_of_old:
                raise ValueError("subset is not parent-closed")
            parent.append(new_of_old[p])
    return RootedForest(parent)


def remove_vertex(f: RootedForest, v: int) -> RootedForest:
    """Delete v; its children adopt v's parent (or become roots).  Vertices
    above v keep their index, those after shift down by one."""
    pv = f.parent(v)
    parent = []
    for u in range(f.n):
        if u == v:
            continue
        p = f.parent(u)
        if p == v:
            p = pv
        if p is None:
            parent.append(-1)
        else:
            parent.append(p - 1 if p > v else p)
    return RootedForest(parent)


def attach_root(f: RootedForest, v: int) -> RootedForest:
    """Insert a new vertex at index v as the unique root; all former roots
    become its children and indices at or after v shift up by one."""
    if not (0 <= v <= f.n):
        raise ValueError("insertion index out of range")
    parent = [0] * (f.n + 1)
    for u in range(f.n):
        nu = u + 1 if u >= v else u
        p = f.parent(u)
        if p is None:
            parent[nu] = v
        else:
            parent[nu] = p + 1 if p >= v else p
    parent[v] = -1
    return RootedForest(parent)


def merge_forests(n: int, parts) -> RootedForest:
    """Union of per-component forests back in the global index space; parts
    are (sorted global vertex list, local forest) pairs."""
    parent = [-1] * n
    for verts, local in parts:
        for i, old in enumerate(verts):
            p = local.parent(i)
            parent[old] = -1 if p is None else verts[p]
    return RootedForest(parent)


def expand_contracted_forest(f: RootedForest, cmap: list[tuple], n: int) -> RootedForest:
    """Undo a matching contraction inside an elimination forest: every merged
    pair becomes a parent-child chain (smaller original index on top), so the
    depth at most doubles."""
    parent = [-1] * n

    def anchor(x: int) -> int:
        pre = cmap[x]
        return pre[-1]

    for x in range(f.n):
        pre = cmap[x]
        p = f.parent(x)
        top = pre[0]
        parent[top] = -1 if p is None else anchor(p)
        if len(pre) == 2:
            parent[pre[1]] = top
    return RootedForest(parent)


def lift_simplicial(
    f: RootedForest,
    kept: list[int],
    g_imp: Graph,
    ordered_a: list[int],
    d: int,
) -> RootedForest | None:
    """Reattach improved-simplicial vertices, each below its lowest-placed
    neighbor (as a new root when it has none).

    f is a forest on the improved graph minus the lifted set, in the
    reindexed space described by `kept` (new->old).  Returns a forest on all
    of g_imp, or None when a neighborhood clique reaches size d or the final
    depth exceeds 2d, both of which certify that budget d is hopeless.
    """
    n = g_imp.n
    parent = [-1] * n
    depth = [0] * n
    placed = [False] * n
    for i, old in enumerate(kept):
        p = f.parent(i)
        parent[old] = -1 if p is None else kept[p]
        placed[old] = True
    stack = [v for v in kept if parent[v] == -1]
    kids = [[] for _ in range(n)]
    for old in kept:
        p = parent[old]
        if p >= 0:
            kids[p].append(old)
    for r in stack:
        depth[r] = 1
    while stack:
        u = stack.pop()
        for w in kids[u]:
            depth[w] = depth[u] + 1
            stack.append(w)
    for v in ordered_a:
        nbrs = [w for w in g_imp.adj[v] if placed[w]]
        if len(nbrs) >= d:
            return None
        if not nbrs:
            parent[v] = -1
            depth[v] = 1
        else:
            low = max(nbrs, key=lambda w: depth[w])
            parent[v] = low
            depth[v] = depth[low] + 1
        placed[v] = True
    if n and max(depth) > 2 * d:
        return None
    return RootedForest(parent)


def check_sensible(g: Graph, t: RootedForest, r: RootedForest) -> bool:
    """True iff for every vertex u and every pair of distinct children v1, v2
    of u in t, the r-closures of the vertices comparable with v1 and with v2
    intersect exactly in the r-closure of u's ancestor path."""
    for u in range(g.n):
        kids = t.children(u)
        if len(kids) < 2:
            continue
        base = r.closure(t.tail(u))
        closures = [r.closure(t.comp(v)) for v in kids]
        for i in range(len(kids)):
            for j in range(i + 1, len(kids)):
                if closures[i] & closures[j] != base:
                    return False
    return True
