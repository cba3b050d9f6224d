"""Randomized driver: matching-contraction recursion, modular counting with
a single globally sampled prime, and color-coding root recovery.

Infeasible verdicts (None) are sound when they come from the edge-count
filter, a clique detection, or the small-modulus exact case; a verdict that
went through the large-prime ring can be a false negative with small
probability.  Returned forests are always validated, so false positives are
impossible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .counting import count_elim_forests, count_elim_trees
from .forest import (
    RootedForest,
    attach_root,
    expand_contracted_forest,
    induced_forest,
    lift_simplicial,
    merge_forests,
    remove_vertex,
    restrict_to_components,
    validate_elimination_forest,
)
from .graph import (
    Graph,
    bodlaender_step,
    connected_components,
    contract_matching,
    improved_graph,
    induced_subgraph,
    minus_vertex,
    treedepth_lower_bound,
)
from .polyring import ModularRing, PrimeSamplerConfig, mod_inverse, sample_prime


@dataclass
class LinearConfig:
    """Tunables whose exact values the analysis leaves open.

    error_exponent scales the sampled prime (error probability falls
    exponentially in it); bod_factor fixes the reduction-step fraction
    c(d) = bod_factor * (d+1)^6; color_override pins the number of colors
    (default: min(n, (d+1)^(2(d+1)))).  When a full round of colorings fails,
    the color count doubles (capped at n) and the search restarts, up to
    max_color_doublings times.
    """

    error_exponent: int = 1
    prime_lower_threshold: int = 21
    bod_factor: int = 72
    color_override: int | None = None
    max_coloring_retries: int = 24
    max_color_doublings: int = 8
    word_cap: int = 1 << 62

    def bod_fraction(self, d: int) -> int:
        return self.bod_factor * (d + 1) ** 6

    def color_count(self, n: int, d: int) -> int:
        if self.color_override is not None:
            return max(1, min(self.color_override, n))
        return max(1, min(n, (d + 1) ** (2 * (d + 1))))

    def sampler(self) -> PrimeSamplerConfig:
        return PrimeSamplerConfig(
            lower_threshold=self.prime_lower_threshold,
            error_exponent=self.error_exponent,
            word_cap=self.word_cap,
        )


@dataclass(frozen=True)
class RootCandidateSet:
    """Vertices whose removal drops the treedepth; nonempty for every
    connected graph of positive treedepth."""

    vertices: frozenset


@dataclass
class RunContext:
    """Per-run state: the original vertex count, the one sampled prime, the
    configured randomness, and a few counters for experiments."""

    n_top: int
    prime: int
    cfg: LinearConfig
    rng: random.Random
    counting_calls: int = 0
    colorings_tried: int = 0
    roots_found: int = 0


def new_run_context(n: int, d: int, cfg: LinearConfig, rng: random.Random) -> RunContext:
    bound = cfg.sampler().interval_bound(max(n, 1), d)
    prime = sample_prime(bound, rng)
    return RunContext(n_top=max(n, 1), prime=prime, cfg=cfg, rng=rng)


def choose_modulus(
    r: int,
    n: int,
    d: int,
    cfg: LinearConfig,
    sampled_prime: int,
    k: int | None = None,
) -> ModularRing:
    """Modulus policy: large subproblems (r >= log2 n) hash with the global
    prime; small ones use m = r*(d*k*2^d)^r + 1, which exceeds every possible
    true result, so the small case is exact and division is plain integer
    division."""
    if r < 1:
        raise ValueError("subproblem must be nonempty")
    if (1 << r) >= n:
        return ModularRing(sampled_prime, prime=True)
    if k is None:
        k = 2 * d
    m = r * (d * k * (1 << d)) ** r + 1
    return ModularRing(m, prime=False)


def determine_exact_depth(g: Graph, t: RootedForest, d: int, ring: ModularRing) -> int | None:
    """Smallest budget in 1..d with a nonzero (modular) tree count, or None;
    a modular zero can turn this into a false negative.

    The scan starts at a sound structural lower bound: counts below it are
    zero with certainty, so skipping them changes nothing but the cost."""
    start = min(max(treedepth_lower_bound(g), 1), d + 1)
    for dp in range(start, d + 1):
        if not ring.is_zero(count_elim_trees(g, t, dp, ring)):
            return dp
    return None


def _ring_for(g: Graph, t: RootedForest, d: int, ctx: RunContext) -> ModularRing:
    k = max(2 * d, t.max_depth, 1)
    return choose_modulus(g.n, ctx.n_top, d, ctx.cfg, ctx.prime, k=k)


def _recover_index(num: int, den: int, ring: ModularRing) -> int | None:
    """The weighted/unweighted count ratio as a 1-based index, or None when
    the division fails (zero or non-integral denominator)."""
    if den == 0:
        return None
    if ring.prime:
        return num * mod_inverse(den, ring) % ring.modulus
    if num % den != 0:
        return None
    return num // den


def find_root_colorcoding(
    g: Graph,
    t: RootedForest,
    d: int,
    cfg: LinearConfig | None = None,
    rng: random.Random | None = None,
    ctx: RunContext | None = None,
) -> int | None:
    """Find some feasible root of a depth-d elimination tree of the connected
    graph g by random color isolation.

    Each coloring round runs two weighted counts per non-empty color class
    (an indicator weighting and an index weighting); when their ratio names a
    vertex of that color, one more count of g minus that vertex certifies it.
    Exhausting all retries (after the color-count doubling fallback) signals
    a probable false negative to the caller.
    """
    if ctx is None:
        cfg = cfg or LinearConfig()
        rng = rng or random.Random(0)
        ctx = new_run_context(g.n, d, cfg, rng)
    n = g.n
    if n == 1:
        return 0
    cfg = ctx.cfg
    rng = ctx.rng
    ring = _ring_for(g, t, d, ctx)
    colors = cfg.color_count(n, d)
    doublings = 0
    while True:
        for _ in range(cfg.max_coloring_retries):
            ctx.colorings_tried += 1
            coloring = [rng.randrange(colors) for _ in range(n)]
            classes: dict[int, list[int]] = {}
            for v, c in enumerate(coloring):
                classes.setdefault(c, []).append(v)
            order = sorted(classes.items(), key=lambda kv: (len(kv[1]), kv[0]))
            for c, members in order:
                root = _try_color(g, t, d, coloring, c, members, ring, ctx)
                if root is not None:
                    ctx.roots_found += 1
                    return root
        if colors >= n or doublings >= cfg.max_color_doublings:
            return None
        colors = min(2 * colors, n)
        doublings += 1


def _try_color(
    g: Graph,
    t: RootedForest,
    d: int,
    coloring: list[int],
    c: int,
    members: list[int],
    ring: ModularRing,
    ctx: RunContext,
) -> int | None:
    n = g.n
    if len(members) == 1:
        # singleton class: the count ratio can only ever name this vertex,
        # so skip the weighted counts and certify it directly
        v = members[0]
    else:
        ind = [0] * n
        idx = [0] * n
        for v in members:
            ind[v] = 1
            idx[v] = v + 1
        ctx.counting_calls += 2
        den = count_elim_trees(g, t, d, ring, weights=ind)
        if ring.is_zero(den):
            return None
        num = count_elim_trees(g, t, d, ring, weights=idx)
        one_based = _recover_index(num, den, ring)
        if one_based is None or not (1 <= one_based <= n):
            return None
        v = one_based - 1
        if coloring[v] != c:
            return None
    gv, _ = minus_vertex(g, v)
    tv = remove_vertex(t, v)
    ctx.counting_calls += 1
    ver_ring = _ring_for(gv, tv, max(d - 1, 1), ctx)
    if ver_ring.is_zero(count_elim_forests(gv, tv, d - 1, ver_ring)):
        return None  # failed certification: wrong candidate or unlucky modulus
    return v


def construct_linear(
    g: Graph,
    t: RootedForest,
    d: int,
    cfg: LinearConfig | None = None,
    rng: random.Random | None = None,
    _ctx: RunContext | None = None,
) -> RootedForest | None:
    """Turn an auxiliary elimination forest of depth at most 2d into one of
    depth at most d, or report the budget infeasible (possibly a false
    negative under the large-prime ring)."""
    ctx = _ctx
    if ctx is None:
        cfg = cfg or LinearConfig()
        rng = rng or random.Random(0)
        ctx = new_run_context(g.n, d, cfg, rng)
    if g.n == 0:
        return RootedForest([])
    rt = restrict_to_components(g, t)
    parts = []
    for verts, sub, _ in connected_components(g):
        subt = induced_forest(rt, verts)
        tree = _construct_tree_linear(sub, subt, d, ctx)
        if tree is None:
            return None
        parts.append((verts, tree))
    return merge_forests(g.n, parts)


def _construct_tree_linear(g: Graph, t: RootedForest, d: int, ctx: RunContext) -> RootedForest | None:
    if d < 1:
        return None
    if g.n == 1:
        return RootedForest([-1])
    ring = _ring_for(g, t, d, ctx)
    dstar = determine_exact_depth(g, t, d, ring)
    if dstar is None:
        return None
    root = find_root_colorcoding(g, t, dstar, ctx=ctx)
    if root is None:
        return None
    gv, _ = minus_vertex(g, root)
    tv = remove_vertex(t, root)
    sub = construct_linear(gv, tv, dstar - 1, _ctx=ctx)
    if sub is None:
        return None
    return attach_root(sub, root)


def solve_randomized(
    g: Graph,
    d: int,
    cfg: LinearConfig | None = None,
    rng: random.Random | None = None,
) -> RootedForest | None:
    """Full randomized pipeline: edge-count filter, reduction by matching
    contraction or simplicial removal, then linear construction on the
    expanded auxiliary forest.  Never returns an invalid forest; None may be
    a false negative (probability bounded by the modulus analysis)."""
    cfg = cfg or LinearConfig()
    rng = rng or random.Random(0)
    if g.n == 0:
        return RootedForest([])
    if d < 1:
        return None
    # structural rejections need no randomness, so they come before the
    # one-time prime draw
    if g.m > d * g.n or treedepth_lower_bound(g) > d:
        return None
    ctx = new_run_context(g.n, d, cfg, rng)
    f = _solve(g, d, ctx)
    if f is not None and not validate_elimination_forest(g, f, d):
        raise AssertionError("solver produced an invalid forest; this is a bug")
    return f


def _solve(g: Graph, d: int, ctx: RunContext) -> RootedForest | None:
    n = g.n
    if n == 0:
        return RootedForest([])
    if n == 1:
        return RootedForest([-1])
    if g.m > d * n:
        return None
    if treedepth_lower_bound(g) > d:
        return None  # certified by a path subgraph or a clique
    step = bodlaender_step(g, d, ctx.cfg.bod_fraction)
    if step.kind == "too_deep":
        return None
    if step.kind == "matching":
        gm, cmap = contract_matching(g, step.matching)
        sub = _solve(gm, d, ctx)
        if sub is None:
            return None
        t = expand_contracted_forest(sub, cmap, n)
        return construct_linear(g, t, d, _ctx=ctx)
    g_imp = improved_graph(g, d)
    lifted = set(step.vertices)
    kept = [v for v in range(n) if v not in lifted]
    h, old_of_new = induced_subgraph(g_imp, kept)
    sub = _solve(h, d, ctx)
    if sub is None:
        return None
    t = lift_simplicial(sub, old_of_new, g_imp, list(step.vertices), d)
    if t is None:
        return None
    return construct_linear(g, t, d, _ctx=ctx)
