"""Maximum Weight Independent Set solvers.

Three routes: an exact branch-and-bound oracle, the bipartite min-cut
reduction served by a Dinic max-flow core, and the odd-cycle-transversal
algorithm that enumerates independent sets inside an OCT of bounded
independence number and finishes each on the remaining bipartite part.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import Budgets, DEFAULT_BUDGETS
from .graphs import BudgetExceededError, Graph, bits, mask_of
from .invariants import SubsetAlpha, is_bipartite, odd_cycle


@dataclass(frozen=True)
class WeightedGraph:
    graph: Graph
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) != self.graph.n:
            raise ValueError("weight vector length does not match vertex count")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be non-negative")

    @property
    def n(self) -> int:
        return self.graph.n

    def weight_of(self, vertices) -> int:
        return sum(self.weights[v] for v in vertices)

    def induced(self, mask: int) -> tuple["WeightedGraph", tuple[int, ...]]:
        sub, old = self.graph.induced(mask)
        return WeightedGraph(sub, tuple(self.weights[v] for v in old)), old


@dataclass(frozen=True)
class MwisResult:
    weight: int
    vertices: tuple[int, ...]


# ---------------------------------------------------------------------------
# Dinic max flow


class FlowNetwork:
    """Integer-capacity flow network; the source takes no in-arcs and the
    sink no out-arcs."""

    def __init__(self, num_nodes: int, source: int, sink: int):
        if not (0 <= source < num_nodes and 0 <= sink < num_nodes):
            raise ValueError("source/sink out of range")
        if source == sink:
            raise ValueError("source and sink must differ")
        self.num_nodes = num_nodes
        self.source = source
        self.sink = sink
        self.head: list[int] = []
        self.cap: list[int] = []
        self.nxt: list[list[int]] = [[] for _ in range(num_nodes)]

    def add_arc(self, u: int, v: int, capacity: int):
        if capacity < 0:
            raise ValueError("negative capacity")
        if not (0 <= u < self.num_nodes and 0 <= v < self.num_nodes):
            raise ValueError("arc endpoint out of range")
        if v == self.source:
            raise ValueError("arc into the source")
        if u == self.sink:
            raise ValueError("arc out of the sink")
        self.nxt[u].append(len(self.head))
        self.head.append(v)
        self.cap.append(capacity)
        self.nxt[v].append(len(self.head))
        self.head.append(u)
        self.cap.append(0)

    def max_flow(self) -> int:
        total = 0
        while True:
            level = self._levels()
            if level[self.sink] < 0:
                return total
            it = [0] * self.num_nodes
            while True:
                pushed = self._augment(self.source, None, level, it)
                if not pushed:
                    break
                total += pushed

    def _levels(self) -> list[int]:
        level = [-1] * self.num_nodes
        level[self.source] = 0
        queue = [self.source]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for e in self.nxt[v]:
                if self.cap[e] > 0 and level[self.head[e]] < 0:
                    level[self.head[e]] = level[v] + 1
                    queue.append(self.head[e])
        return level

    def _augment(self, v, limit, level, it) -> int:
        if v == self.sink:
            return limit
        while it[v] < len(self.nxt[v]):
            e = self.nxt[v][it[v]]
            u = self.head[e]
            if self.cap[e] > 0 and level[u] == level[v] + 1:
                step = self.cap[e] if limit is None else min(limit, self.cap[e])
                pushed = self._augment(u, step, level, it)
                if pushed:
                    self.cap[e] -= pushed
                    self.cap[e ^ 1] += pushed
                    return pushed
            it[v] += 1
        level[v] = -1
        return 0

    def min_cut_source_side(self) -> set[int]:
        """Nodes reachable from the source in the residual network
        (call after max_flow)."""
        seen = {self.source}
        stack = [self.source]
        while stack:
            v = stack.pop()
            for e in self.nxt[v]:
                u = self.head[e]
                if self.cap[e] > 0 and u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen


def max_flow(net: FlowNetwork) -> tuple[int, set[int]]:
    value = net.max_flow()
    return value, net.min_cut_source_side()


# ---------------------------------------------------------------------------
# Exact oracle


def mwis_exact(wg: WeightedGraph, budgets: Budgets = DEFAULT_BUDGETS) -> MwisResult:
    if wg.n > budgets.mwis_exact:
        raise BudgetExceededError(
            f"mwis_exact: n={wg.n} exceeds budget {budgets.mwis_exact}"
        )
    g, weights = wg.graph, wg.weights
    memo: dict[int, int] = {0: 0}

    def solve(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        best_v, best_deg = -1, -1
        for v in bits(mask):
            d = (g.adj[v] & mask).bit_count()
            if d > best_deg:
                best_v, best_deg = v, d
        if best_deg == 0:
            value = sum(weights[v] for v in bits(mask))
        else:
            v = best_v
            value = max(
                solve(mask & ~(1 << v)),
                weights[v] + solve(mask & ~(g.adj[v] | 1 << v)),
            )
        memo[mask] = value
        return value

    # Zero-weight vertices never help; dropping them up front makes the
    # witness canonical (no zero-weight members) and lexicographically
    # smallest among such optima.
    positive = mask_of(v for v in range(g.n) if weights[v] > 0)
    total = solve(positive)
    chosen: list[int] = []
    mask = positive
    remaining = total
    while mask and remaining:
        v = next(bits(mask))
        with_v = weights[v] + solve(mask & ~(g.adj[v] | 1 << v))
        if with_v == solve(mask):
            chosen.append(v)
            remaining -= weights[v]
            mask &= ~(g.adj[v] | 1 << v)
        else:
            mask &= ~(1 << v)
    return MwisResult(total, tuple(chosen))


# ---------------------------------------------------------------------------
# Bipartite solver via min cut


def _bipartite_value_and_witness(
    wg: WeightedGraph, colour: tuple[int, ...]
) -> tuple[int, tuple[int, ...]]:
    g, weights = wg.graph, wg.weights
    n = g.n
    source, sink = n, n + 1
    net = FlowNetwork(n + 2, source, sink)
    infinity = sum(weights) + 1
    for v in range(n):
        if colour[v] == 0:
            net.add_arc(source, v, weights[v])
        else:
            net.add_arc(v, sink, weights[v])
    for u, v in g.edges():
        left, right = (u, v) if colour[u] == 0 else (v, u)
        net.add_arc(left, right, infinity)
    cut_value = net.max_flow()
    reachable = net.min_cut_source_side()
    picked = tuple(
        v
        for v in range(n)
        if weights[v] > 0
        and ((colour[v] == 0 and v in reachable) or (colour[v] == 1 and v not in reachable))
    )
    return sum(weights) - cut_value, picked


def mwis_bipartite(wg: WeightedGraph, budgets: Budgets = DEFAULT_BUDGETS) -> MwisResult:
    """MWIS on a bipartite graph: total weight minus a minimum s-t cut."""
    ok, colour = is_bipartite(wg.graph)
    if not ok:
        raise ValueError("mwis_bipartite needs a bipartite input")
    if wg.n == 0:
        return MwisResult(0, ())
    value, _ = _bipartite_value_and_witness(wg, colour)
    # Lexicographically smallest optimal witness by forcing vertices in.
    chosen: list[int] = []
    current = wg
    ids = tuple(range(wg.n))
    remaining = value
    for v in range(wg.n):
        if remaining == 0:
            break
        local = ids.index(v) if v in ids else None
        if local is None:
            continue
        w = current.weights[local]
        if w == 0:
            continue
        g = current.graph
        keep = g.full_mask & ~(g.adj[local] | 1 << local)
        sub, old = current.induced(keep)
        sub_colour = tuple(colour[ids[x]] for x in old)
        sub_value, _ = _bipartite_value_and_witness(sub, sub_colour)
        if w + sub_value == remaining:
            chosen.append(v)
            remaining -= w
            current, old = current.induced(keep)
            ids = tuple(ids[x] for x in old)
    return MwisResult(value, tuple(chosen))


# ---------------------------------------------------------------------------
# The OCT route


def find_oct_with_bounded_alpha(
    g: Graph, k: int, budgets: Budgets = DEFAULT_BUDGETS
) -> tuple[int, ...] | None:
    """An odd cycle transversal S with alpha(G[S]) <= k, or None.

    Branches on the vertices of an odd cycle of the current graph; the
    alpha(G[S]) <= k constraint is monotone, so partial sets exceeding k
    are pruned.  Among admissible transversals the one minimising
    (alpha(G[S]), S lexicographically) is returned.
    """
    if g.n > budgets.oct_alpha:
        raise BudgetExceededError(
            f"find_oct_with_bounded_alpha: n={g.n} exceeds budget {budgets.oct_alpha}"
        )
    if k < 0:
        return None
    alpha = SubsetAlpha(g)
    best: tuple[int, tuple[int, ...]] | None = None

    def rec(s_mask: int, forbidden: int):
        nonlocal best
        a = alpha(s_mask)
        if a > k:
            return
        if best is not None and a > best[0]:
            return
        rest, old = g.induced(g.full_mask & ~s_mask)
        cycle = odd_cycle(rest)
        if cycle is None:
            witness = tuple(bits(s_mask))
            cand = (a, witness)
            if best is None or cand < best:
                best = cand
            return
        blocked = forbidden
        for x in cycle:
            v = old[x]
            if blocked >> v & 1:
                continue
            rec(s_mask | 1 << v, blocked)
            blocked |= 1 << v

    rec(0, 0)
    return best[1] if best is not None else None


def _independent_subsets(g: Graph, mask: int):
    """All independent subsets of mask (including the empty set), as masks,
    in deterministic order."""
    out = []

    def rec(rest: int, chosen: int):
        out.append(chosen)
        m = rest
        while m:
            v = next(bits(m))
            m &= ~(1 << v)
            rec(m & ~g.adj[v], chosen | 1 << v)

    rec(mask, 0)
    return out


def mwis_via_oct(
    wg: WeightedGraph, k: int, budgets: Budgets = DEFAULT_BUDGETS
) -> MwisResult:
    """MWIS through an odd cycle transversal of independence number <= k.

    For every independent set I inside the transversal, the rest of any
    optimal solution lies in the bipartite graph G[V - S] - N(I); the best
    I + I' over all I is optimal.
    """
    g = wg.graph
    s = find_oct_with_bounded_alpha(g, k, budgets)
    if s is None:
        raise ValueError(f"no odd cycle transversal with independence number <= {k}")
    s_mask = mask_of(s)
    outside = g.full_mask & ~s_mask
    best: tuple[int, tuple[int, ...]] | None = None
    for i_mask in _independent_subsets(g, s_mask):
        closed = 0
        for v in bits(i_mask):
            closed |= g.adj[v]
        rest_mask = outside & ~closed
        sub, old = wg.induced(rest_mask)
        inner = mwis_bipartite(sub, budgets)
        weight = wg.weight_of(bits(i_mask)) + inner.weight
        vertices = tuple(sorted(list(bits(i_mask)) + [old[x] for x in inner.vertices]))
        cand = (-weight, vertices)
        if best is None or cand < best:
            best = cand
    weight = -best[0]
    return MwisResult(weight, best[1])
