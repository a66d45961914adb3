"""Exact solvers for the annotated width parameters.

Each solver minimises the maximum bag cost lambda over a decomposition
family, for lambda either bag cardinality or the independence number of the
bag.  Values come with validated witnesses.

Algorithms (all exact for monotone bag costs):

* treewidth: dynamic programming over elimination prefixes.  Any tree
  decomposition refines to the clique tree of a chordal completion, and the
  completions reachable by vertex elimination include all minimal ones, so
  the DP minimum equals the decomposition minimum.
* pathwidth: dynamic programming over placed-prefix subsets where the bag
  of a step is boundary(prefix) + next vertex; a first-appearance ordering
  of any path decomposition produces bags inside the original ones.  The
  decision form is a pruned depth-first search over feasible prefixes.
* treedepth: recursion on (connected component, ancestor set), choosing the
  component's root; leaf cost is lambda over ancestors plus the leaf.
* degeneracy: greedy peeling of a vertex with the cheapest closed
  neighbourhood cost; exact because the cost is monotone under subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .config import Budgets, DEFAULT_BUDGETS
from .decomp import (
    CostKind,
    PathDecomposition,
    RootedForest,
    TreeDecomposition,
    cost,
)
from .graphs import BudgetExceededError, Graph, bits
from .invariants import SubsetAlpha


@dataclass(frozen=True)
class WidthResult:
    value: int
    witness: Any
    kind: CostKind


def _bag_cost_fn(g: Graph, kind: CostKind):
    if kind is CostKind.CARDINALITY:
        return int.bit_count
    return SubsetAlpha(g)


def _check_budget(op: str, n: int, limit: int):
    if n > limit:
        raise BudgetExceededError(f"{op}: n={n} exceeds budget {limit}")


# ---------------------------------------------------------------------------
# Treewidth


def lambda_treewidth(
    g: Graph, kind: CostKind, budgets: Budgets = DEFAULT_BUDGETS
) -> WidthResult:
    limit = budgets.tw_card if kind is CostKind.CARDINALITY else budgets.tw_alpha
    _check_budget("lambda_treewidth", g.n, limit)
    n = g.n
    if n == 0:
        return WidthResult(0, TreeDecomposition((), ()), kind)
    bag_cost = _bag_cost_fn(g, kind)
    adj = g.adj
    full = (1 << n) - 1

    def elimination_bag(v: int, placed: int) -> int:
        # {v} plus the not-yet-placed vertices reachable from v through placed.
        comp = 1 << v
        frontier = comp
        outside = 0
        while frontier:
            grow = 0
            for u in bits(frontier):
                grow |= adj[u]
            grow &= ~comp
            outside |= grow & ~placed
            frontier = grow & placed & ~comp
            comp |= frontier
        return outside | 1 << v

    INF = float("inf")
    f = [INF] * (full + 1)
    choice = [-1] * (full + 1)
    f[0] = 0
    for s in sorted(range(1, full + 1), key=int.bit_count):
        best, best_v = INF, -1
        for v in bits(s):
            prev = s & ~(1 << v)
            sub = f[prev]
            if sub >= best:
                continue
            value = max(sub, bag_cost(elimination_bag(v, prev)))
            if value < best:
                best, best_v = value, v
        f[s] = best
        choice[s] = best_v

    # Reconstruct the elimination order (choice[s] was eliminated last in s).
    order = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s &= ~(1 << v)
    order.reverse()

    bags = []
    placed = 0
    for v in order:
        bags.append(elimination_bag(v, placed))
        placed |= 1 << v
    position = {v: i for i, v in enumerate(order)}
    edges = []
    loose = []
    for i, v in enumerate(order):
        rest = bags[i] & ~(1 << v)
        if rest:
            j = min(position[u] for u in bits(rest))
            edges.append((i, j))
        else:
            loose.append(i)
    # Bags that finished a component become roots; chain them into one tree.
    for a, b in zip(loose, loose[1:]):
        edges.append((a, b))
    witness = TreeDecomposition(tuple(bags), tuple(edges))
    return WidthResult(int(f[full]), witness, kind)


# ---------------------------------------------------------------------------
# Pathwidth


def _boundary(adj, placed: int, full: int) -> int:
    outside = full & ~placed
    b = 0
    for v in bits(placed):
        if adj[v] & outside:
            b |= 1 << v
    return b


def lambda_pathwidth(
    g: Graph, kind: CostKind, budgets: Budgets = DEFAULT_BUDGETS
) -> WidthResult:
    _check_budget("lambda_pathwidth", g.n, budgets.pw_exact)
    n = g.n
    if n == 0:
        return WidthResult(0, PathDecomposition(()), kind)
    bag_cost = _bag_cost_fn(g, kind)
    adj = g.adj
    full = (1 << n) - 1

    INF = float("inf")
    f = [INF] * (full + 1)
    choice = [-1] * (full + 1)
    f[0] = 0
    boundary = [0] * (full + 1)
    for s in sorted(range(1, full + 1), key=int.bit_count):
        boundary[s] = _boundary(adj, s, full)
        best, best_v = INF, -1
        for v in bits(s):
            prev = s & ~(1 << v)
            sub = f[prev]
            if sub >= best:
                continue
            value = max(sub, bag_cost(boundary[prev] | 1 << v))
            if value < best:
                best, best_v = value, v
        f[s] = best
        choice[s] = best_v

    order = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s &= ~(1 << v)
    order.reverse()
    bags = []
    placed = 0
    for v in order:
        bags.append(_boundary(adj, placed, full) | 1 << v)
        placed |= 1 << v
    witness = PathDecomposition(tuple(bags))
    return WidthResult(int(f[full]), witness, kind)


def lambda_pw_at_most(
    g: Graph, kind: CostKind, k: int, budgets: Budgets = DEFAULT_BUDGETS
) -> bool:
    """Decide lambda-pw(g) <= k by pruned search over placed prefixes.

    A vertex whose whole neighbourhood is already placed is taken greedily
    whenever its bag fits the budget: moving it forward only shrinks later
    bags, so restricting the branching preserves completeness.
    """
    _check_budget("lambda_pw_at_most", g.n, budgets.pw_decision)
    n = g.n
    if n == 0:
        return k >= 0
    if k <= 0:
        return False
    bag_cost = _bag_cost_fn(g, kind)
    adj = g.adj
    full = (1 << n) - 1

    seen = {0}
    stack = [0]
    while stack:
        s = stack.pop()
        if s == full:
            return True
        boundary = _boundary(adj, s, full)
        rest = full & ~s
        # Greedy closure: a finished vertex with an affordable bag.
        safe = -1
        for v in bits(rest):
            if not adj[v] & rest and bag_cost(boundary | 1 << v) <= k:
                safe = v
                break
        if safe >= 0:
            t = s | 1 << safe
            if t not in seen:
                seen.add(t)
                stack.append(t)
            continue
        candidates = []
        for v in bits(rest):
            t = s | 1 << v
            if t in seen:
                continue
            if bag_cost(boundary | 1 << v) <= k:
                candidates.append(((boundary | 1 << v).bit_count(), v, t))
        # Expand cheap bags first.
        candidates.sort(reverse=True)
        for _, _, t in candidates:
            seen.add(t)
            stack.append(t)
    return False


# ---------------------------------------------------------------------------
# Treedepth


def lambda_treedepth(
    g: Graph, kind: CostKind, budgets: Budgets = DEFAULT_BUDGETS
) -> WidthResult:
    _check_budget("lambda_treedepth", g.n, budgets.td_exact)
    n = g.n
    if n == 0:
        return WidthResult(0, RootedForest(()), kind)
    bag_cost = _bag_cost_fn(g, kind)
    adj = g.adj
    memo: dict[tuple[int, int], tuple[int, int]] = {}

    def solve(comp: int, above: int) -> tuple[int, int]:
        """Best (cost, root) for a connected component under ancestor set."""
        key = (comp, above)
        cached = memo.get(key)
        if cached is not None:
            return cached
        best, best_root = None, -1
        for v in bits(comp):
            stacked = above | 1 << v
            here = bag_cost(stacked)
            if best is not None and here >= best:
                continue
            rest = comp & ~(1 << v)
            value = here
            if rest:
                for sub in _subcomponents(adj, rest):
                    value = max(value, solve(sub, stacked)[0])
                    if best is not None and value >= best:
                        break
            if best is None or value < best:
                best, best_root = value, v
        memo[key] = (best, best_root)
        return best, best_root

    parent: list[int | None] = [None] * n

    def build(comp: int, above: int, parent_vertex: int | None):
        root = solve(comp, above)[1]
        parent[root] = parent_vertex
        rest = comp & ~(1 << root)
        for sub in _subcomponents(adj, rest):
            build(sub, above | 1 << root, root)

    value = 0
    for comp in g.components():
        value = max(value, solve(comp, 0)[0])
        build(comp, 0, None)
    return WidthResult(value, RootedForest(tuple(parent)), kind)


def _subcomponents(adj, mask: int) -> list[int]:
    comps = []
    todo = mask
    while todo:
        comp = todo & -todo
        frontier = comp
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= adj[v]
            frontier = grow & todo & ~comp
            comp |= frontier
        comps.append(comp)
        todo &= ~comp
    return comps


def lambda_td_at_most(
    g: Graph, kind: CostKind, k: int, budgets: Budgets = DEFAULT_BUDGETS
) -> bool:
    """Decide lambda-td(g) <= k via the component recursion with pruning."""
    _check_budget("lambda_td_at_most", g.n, budgets.td_decision)
    if g.n == 0:
        return k >= 0
    if k <= 0:
        return False
    adj = g.adj
    bag_cost = _bag_cost_fn(g, kind)
    memo: dict[tuple[int, int], bool] = {}

    def feasible(comp: int, above: int) -> bool:
        key = (comp, above)
        cached = memo.get(key)
        if cached is not None:
            return cached
        ranked = []
        for v in bits(comp):
            if bag_cost(above | 1 << v) > k:
                continue
            rest = comp & ~(1 << v)
            subs = _subcomponents(adj, rest) if rest else []
            largest = max((c.bit_count() for c in subs), default=0)
            ranked.append((largest, v, subs))
        ranked.sort(key=lambda t: (t[0], t[1]))
        ok = False
        for _, v, subs in ranked:
            if all(feasible(sub, above | 1 << v) for sub in subs):
                ok = True
                break
        memo[key] = ok
        return ok

    if kind is CostKind.CARDINALITY:
        # The cost of a subtree only depends on the stack height, so the
        # ancestor set collapses to its size.
        card_memo: dict[tuple[int, int], bool] = {}

        def feasible_card(comp: int, depth_left: int) -> bool:
            if depth_left <= 0:
                return comp == 0
            if comp.bit_count() == 1:
                return True
            key = (comp, depth_left)
            cached = card_memo.get(key)
            if cached is not None:
                return cached
            ranked = []
            for v in bits(comp):
                rest = comp & ~(1 << v)
                subs = _subcomponents(adj, rest) if rest else []
                largest = max((c.bit_count() for c in subs), default=0)
                ranked.append((largest, v, subs))
            ranked.sort(key=lambda t: (t[0], t[1]))
            ok = False
            for _, v, subs in ranked:
                if all(feasible_card(sub, depth_left - 1) for sub in subs):
                    ok = True
                    break
            card_memo[key] = ok
            return ok

        return all(feasible_card(comp, k) for comp in g.components())
    return all(feasible(comp, 0) for comp in g.components())


# ---------------------------------------------------------------------------
# Degeneracy and its independence variant


def degeneracy(g: Graph, kind: CostKind) -> WidthResult:
    """Greedy peeling; the witness is the peeling order."""
    bag_cost = _bag_cost_fn(g, kind)
    adj = g.adj
    remaining = g.full_mask
    order = []
    value = 0
    while remaining:
        best_v, best_c = -1, None
        for v in bits(remaining):
            c = bag_cost(adj[v] & remaining & ~(1 << v))
            if best_c is None or c < best_c:
                best_v, best_c = v, c
        value = max(value, best_c)
        order.append(best_v)
        remaining &= ~(1 << best_v)
    return WidthResult(value, tuple(order), kind)


# ---------------------------------------------------------------------------
# alpha-chromatic number


def alpha_chromatic(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> WidthResult:
    """Minimum over proper colourings of the largest rainbow independent set.

    Colourings are enumerated as partitions into independent sets in
    first-occurrence order.  For any colouring, the maximum of alpha over
    rainbow sets equals the maximum size of an independent set with pairwise
    distinct colours, since independent subsets of rainbow sets are rainbow.
    """
    _check_budget("alpha_chromatic", g.n, budgets.alpha_chromatic)
    n = g.n
    if n == 0:
        return WidthResult(0, (), CostKind.INDEPENDENCE)
    adj = g.adj
    best = n + 1
    best_blocks: tuple[int, ...] = ()

    def rainbow_alpha(blocks: list[int], assigned: int) -> int:
        # Max independent set among `assigned` using each block at most once.
        live = [b & assigned for b in blocks]
        live = [b for b in live if b]
        live.sort(key=int.bit_count)
        top = 0

        def grow(i: int, chosen: int, size: int):
            nonlocal top
            if size + len(live) - i <= top:
                return
            if i == len(live):
                top = max(top, size)
                return
            grow(i + 1, chosen, size)
            for v in bits(live[i]):
                if not adj[v] & chosen:
                    grow(i + 1, chosen | 1 << v, size + 1)

        grow(0, 0, 0)
        return top

    blocks: list[int] = []

    def assign(v: int, assigned: int):
        nonlocal best, best_blocks
        if best == 1:
            return
        if rainbow_alpha(blocks, assigned) >= best:
            return
        if v == n:
            value = rainbow_alpha(blocks, assigned)
            if value < best:
                best = value
                best_blocks = tuple(blocks)
            return
        for b in range(len(blocks)):
            if not adj[v] & blocks[b]:
                blocks[b] |= 1 << v
                assign(v + 1, assigned | 1 << v)
                blocks[b] &= ~(1 << v)
        blocks.append(1 << v)
        assign(v + 1, assigned | 1 << v)
        blocks.pop()

    assign(0, 0)
    colouring = [0] * n
    for c, block in enumerate(best_blocks):
        for v in bits(block):
            colouring[v] = c
    return WidthResult(best, tuple(colouring), CostKind.INDEPENDENCE)


# ---------------------------------------------------------------------------
# Convenience: witness validity


def witness_is_valid(g: Graph, result: WidthResult) -> bool:
    witness = result.witness
    if isinstance(witness, (TreeDecomposition, PathDecomposition, RootedForest)):
        return cost(g, witness, result.kind) == result.value
    return True
