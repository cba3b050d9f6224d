"""Counting engine for sensible bounded-depth elimination trees.

The counter walks an auxiliary elimination tree T of the (connected) input
graph top-down and maintains a small skeleton tree K into which the already
processed vertices are mapped.  Two mutually recursive evaluations cooperate:

* placed(u): u's image is fixed; leaves contribute 1 (edge constraints are
  enforced incrementally at placement time), internal vertices contribute the
  product over their T-children of pending(child).
* pending(u): sums over all ways to place u — either reusing an allowed
  skeleton vertex (which costs one power of the formal variable, and picks up
  u's weight when the image is the skeleton root), or hanging a fresh
  downward chain below some skeleton vertex and placing u at its tip.  Fresh
  chains are summed with alternating signs over the subsets of their interior
  that are opened for reuse, so mappings that fail to hit every fresh vertex
  cancel; the chain length is repaid by shifting the polynomial down.

The free term of the top-level sum counts exactly the bijective mappings,
i.e. genuine elimination trees of depth at most d that are sensible with
respect to T; with per-vertex weights it returns the weighted sum over
feasible roots instead.

Two exact prunes keep the recursion from exploring provably-cancelling
branches: a placement that violates an edge toward an already-placed
neighbor dies immediately (equivalent to the leaf-time check because T binds
every edge), and a fresh chain longer than u's remaining subtree is skipped
because its interior could never be fully covered.  Degrees at or above the
cap d*depth(T) cannot feed back into the free term, so coefficient lists
stay short.

Everything runs in space polynomial in the input: the recursion depth is
bounded by the depth of T, frames share one skeleton and one mapping
(mutated and undone around each branch), and nothing is memoized.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forest import PrefixTree, RootedForest, induced_forest, restrict_to_components
from .graph import Graph, connected_components
from .polyring import CoefficientRing, ExactRing, TruncatedPolynomial, poly_trim


@dataclass(frozen=True)
class SearchFrame:
    """Snapshot of one recursion state, for diagnostics: current vertex, the
    skeleton's parent array, the mapping so far, and the reuse bitmask."""

    vertex: int
    skeleton_parents: tuple
    mapping: tuple
    allowed: int


class CoefficientBoundError(AssertionError):
    """A frame produced a coefficient outside the certified range."""

    def __init__(self, frame: SearchFrame, coeffs, limit):
        super().__init__(f"coefficient bound {limit} violated at {frame}: {coeffs}")
        self.frame = frame


def _validate_aux_tree(g: Graph, t: RootedForest) -> None:
    if t.n != g.n:
        raise ValueError("auxiliary tree must span the graph's vertex set")
    for u, v in g.edges():
        if not t.ancestor_related(u, v):
            raise ValueError(f"auxiliary tree does not bind edge ({u}, {v})")


def count_elim_trees(
    g: Graph,
    t: RootedForest,
    d: int,
    ring: CoefficientRing | None = None,
    weights: list[int] | None = None,
    cap: int | None = None,
    check_bounds: bool = False,
) -> int:
    """Weighted count of elimination trees of the connected graph g of depth
    at most d that are sensible with respect to t.

    With all weights 1 this is the plain number of such trees; in general it
    is the sum of vertex weights over feasible roots, each weighted by the
    number of sensible trees rooted there.  `ring` selects exact or modular
    arithmetic; `cap` overrides the degree cap (default d * depth(t), which
    is always sufficient).
    """
    ring = ring or ExactRing()
    if g.n == 0:
        return ring.one
    if d < 1:
        return ring.zero
    coeffs = _top_coefficients(g, t, d, ring, weights, cap, check_bounds)
    return ring.normalize(coeffs[0]) if coeffs else ring.zero


def eval_h(
    g: Graph,
    t: RootedForest,
    d: int,
    ring: CoefficientRing | None = None,
    weights: list[int] | None = None,
    cap: int | None = None,
) -> TruncatedPolynomial:
    """The full top-level polynomial: its free term is the sensible-tree
    count, and the coefficient of the i-th power counts mappings with exactly
    i placement collisions."""
    ring = ring or ExactRing()
    k = max(t.max_depth, 1)
    used_cap = max(cap if cap is not None else d * k, 1)
    if g.n == 0:
        return TruncatedPolynomial.one(used_cap, ring)
    if d < 1:
        return TruncatedPolynomial.zero(used_cap, ring)
    coeffs = _top_coefficients(g, t, d, ring, weights, cap, False)
    return TruncatedPolynomial.from_coeffs(coeffs, used_cap, ring)


def _top_coefficients(
    g: Graph,
    t: RootedForest,
    d: int,
    ring: CoefficientRing,
    weights: list[int] | None,
    cap: int | None,
    check_bounds: bool,
) -> list:
    n = g.n
    if len(t.roots) != 1:
        raise ValueError("auxiliary forest must be a single tree; split per component first")
    _validate_aux_tree(g, t)

    k = t.max_depth
    if cap is None:
        cap = d * k
    cap = max(cap, 1)
    mod = ring.modulus

    if weights is None:
        wts = [1] * n
    else:
        if len(weights) != n:
            raise ValueError("need one weight per vertex")
        wts = [ring.normalize(w) for w in weights]

    children: list[tuple] = [tuple(t.children(v)) for v in range(n)]
    tree_size = t.subtree_sizes()
    # The only constraints live when u is placed are the edges toward its
    # ancestors in t; descendant edges get checked at the other endpoint,
    # which covers every edge exactly once because t binds them all.
    anc_nbrs: list[tuple] = []
    for u in range(n):
        tail = t.tail(u, strict=True)
        anc_nbrs.append(tuple(w for w in g.adj[u] if w in tail))

    skeleton = PrefixTree()
    kparent = skeleton.parent
    kdepth = skeleton.depth
    kanc = skeleton.anc
    phi = [-1] * n

    popcnt = [0] * (1 << max(d - 1, 1))
    for i in range(1, len(popcnt)):
        popcnt[i] = popcnt[i >> 1] + (i & 1)

    bound_limits = None
    bound_base = d * k * (1 << d)
    if check_bounds:
        if mod is not None or any(w != 1 for w in wts):
            raise ValueError("coefficient bounds are certified for exact unweighted runs only")
        bound_limits = [bound_base ** tree_size[u] for u in range(n)]

    def check_coeffs(u: int, coeffs: list, limit: int, allowed: int) -> None:
        for c in coeffs:
            if c < 0 or c > limit:
                frame = SearchFrame(
                    u, tuple(kparent), tuple((v, phi[v]) for v in range(n) if phi[v] >= 0), allowed
                )
                raise CoefficientBoundError(frame, coeffs, limit)

    def placed(u: int, allowed: int) -> list:
        kids = children[u]
        if not kids:
            return [1]
        acc = None
        for v in kids:
            fv = pending(v, allowed)
            if not fv:
                return []
            if acc is None:
                acc = fv
            elif len(acc) == 1 and acc[0] == 1:
                acc = fv
            else:
                la, lb = len(acc), len(fv)
                size = min(la + lb - 1, cap)
                out = [0] * size
                for i in range(min(la, cap)):
                    ca = acc[i]
                    if ca:
                        top = min(lb, size - i)
                        for j in range(top):
                            out[i + j] += ca * fv[j]
                if mod is not None:
                    out = [c % mod for c in out]
                acc = poly_trim(out)
                if not acc:
                    return []
        if bound_limits is not None:
            check_coeffs(u, acc, bound_limits[u] // bound_base, allowed)
        return acc

    def pending(u: int, allowed: int) -> list:
        out: list = []
        cons = [phi[nb] for nb in anc_nbrs[u]]
        weight = wts[u]
        rem = tree_size[u]

        # reuse moves
        rembits = allowed
        while rembits:
            bit = rembits & -rembits
            rembits ^= bit
            kv = bit.bit_length() - 1
            akv = kanc[kv]
            ok = True
            for c in cons:
                if not ((akv >> c) & 1 or (kanc[c] >> kv) & 1):
                    ok = False
                    break
            if not ok:
                continue
            phi[u] = kv
            val = placed(u, allowed)
            phi[u] = -1
            if val:
                need = len(val) + 1
                if len(out) < need:
                    out.extend([0] * (need - len(out)))
                if kv == 0 and weight != 1:
                    for i, c in enumerate(val):
                        out[i + 1] += c * weight
                else:
                    for i, c in enumerate(val):
                        out[i + 1] += c
        del out[cap:]

        # fresh chains, no longer than the remaining subtree can cover
        base = len(kparent)
        for w in range(base):
            maxp = d - kdepth[w]
            if maxp > rem:
                maxp = rem
            if maxp < 1:
                continue
            aw = kanc[w]
            ok = True
            for c in cons:
                if not ((aw >> c) & 1):
                    ok = False
                    break
            if not ok:
                # a fresh tip is comparable only with ancestors of the
                # attachment point, so no chain below w can ever work
                continue
            kparent.append(w)
            kdepth.append(kdepth[w] + 1)
            kanc.append(aw | (1 << base))
            for p in range(1, maxp + 1):
                tip = base + p - 1
                tipbit = 1 << tip
                interior = p - 1
                inner: list = []
                for bm in range(1 << interior):
                    phi[u] = tip
                    val = placed(u, allowed | (bm << base) | tipbit)
                    phi[u] = -1
                    if not val:
                        continue
                    if len(inner) < len(val):
                        inner.extend([0] * (len(val) - len(inner)))
                    if (interior - popcnt[bm]) & 1:
                        for i, c in enumerate(val):
                            inner[i] -= c
                    else:
                        for i, c in enumerate(val):
                            inner[i] += c
                if len(inner) > interior:
                    extra = inner[interior:]
                    if len(out) < len(extra):
                        out.extend([0] * (len(extra) - len(out)))
                    for i, c in enumerate(extra):
                        out[i] += c
                if p < maxp:
                    tanc = kanc[tip] | (1 << (tip + 1))
                    kparent.append(tip)
                    kdepth.append(kdepth[tip] + 1)
                    kanc.append(tanc)
            del kparent[base:]
            del kdepth[base:]
            del kanc[base:]

        if mod is not None:
            out = [c % mod for c in out]
        out = poly_trim(out)
        if bound_limits is not None:
            check_coeffs(u, out, bound_limits[u], allowed)
        return out

    # top level: the root r of t goes to the tip of a standalone chain; the
    # p = 1 chain consists of the skeleton root alone, which is the only
    # placement that picks up r's weight here
    r = t.roots[0]
    maxp_top = min(d, tree_size[r])
    total: list = []
    for p in range(1, maxp_top + 1):
        if p == 1:
            kparent.append(-1)
            kdepth.append(1)
            kanc.append(1)
        else:
            tip_prev = p - 2
            kparent.append(tip_prev)
            kdepth.append(kdepth[tip_prev] + 1)
            kanc.append(kanc[tip_prev] | (1 << (p - 1)))
        tip = p - 1
        interior = p - 1
        inner = []
        for bm in range(1 << interior):
            phi[r] = tip
            val = placed(r, bm | (1 << tip))
            phi[r] = -1
            if not val:
                continue
            if len(inner) < len(val):
                inner.extend([0] * (len(val) - len(inner)))
            if (interior - popcnt[bm]) & 1:
                for i, c in enumerate(val):
                    inner[i] -= c
            else:
                for i, c in enumerate(val):
                    inner[i] += c
        if p == 1 and wts[r] != 1:
            inner = [c * wts[r] for c in inner]
        if len(inner) > interior:
            extra = inner[interior:]
            if len(total) < len(extra):
                total.extend([0] * (len(extra) - len(total)))
            for i, c in enumerate(extra):
                total[i] += c
    skeleton.truncate(0)
    return total


def count_elim_forests(
    g: Graph,
    t: RootedForest,
    d: int,
    ring: CoefficientRing | None = None,
    weights: list[int] | None = None,
    cap: int | None = None,
    check_bounds: bool = False,
) -> int:
    """Product over connected components of the per-component tree count;
    nonzero exactly when every component admits a sensible tree of depth at
    most d.  t may be any elimination forest of g."""
    ring = ring or ExactRing()
    if g.n == 0:
        return ring.one
    rt = restrict_to_components(g, t)
    total = ring.one
    for verts, sub, old_of_new in connected_components(g):
        subt = induced_forest(rt, verts)
        subw = [weights[old] for old in old_of_new] if weights is not None else None
        c = count_elim_trees(sub, subt, d, ring, subw, cap, check_bounds)
        total = ring.mul(total, c)
        if ring.is_zero(total):
            return total
    return total
