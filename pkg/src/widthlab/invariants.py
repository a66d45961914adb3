"""Exact solvers for the base graph parameters.

Everything here is exact and deterministic.  The independence-number engine
doubles as the bag-cost oracle of the width solvers, so it memoises per
vertex-subset and splits into connected components before branching: that is
what keeps sparse 80-vertex instances (iterated s-claw graphs) fast.
"""

from __future__ import annotations

from .graphs import Graph, bits, mask_of


class SubsetAlpha:
    """Memoised exact independence number of induced subgraphs.

    alpha(mask) branches on a maximum-degree vertex v of the component:
    either v is excluded, or v is taken and N[v] is removed.  Components
    with maximum degree <= 2 are paths and cycles and get closed forms.
    """

    def __init__(self, g: Graph):
        self.adj = g.adj
        self.memo: dict[int, int] = {0: 0}

    def __call__(self, mask: int) -> int:
        cached = self.memo.get(mask)
        if cached is not None:
            return cached
        total = 0
        for comp in _components(self.adj, mask):
            total += self._component(comp)
        self.memo[mask] = total
        return total

    def _component(self, comp: int) -> int:
        cached = self.memo.get(comp)
        if cached is not None:
            return cached
        size = comp.bit_count()
        if size <= 2:
            value = 1
        else:
            best_v, best_deg = -1, -1
            for v in bits(comp):
                d = (self.adj[v] & comp).bit_count()
                if d > best_deg:
                    best_v, best_deg = v, d
            if best_deg <= 2:
                # Connected with max degree <= 2: a path or a cycle.
                edges = sum((self.adj[v] & comp).bit_count() for v in bits(comp)) // 2
                value = size // 2 if edges == size else (size + 1) // 2
            else:
                without = self(comp & ~(1 << best_v))
                with_v = 1 + self(comp & ~(self.adj[best_v] | 1 << best_v))
                value = max(without, with_v)
        self.memo[comp] = value
        return value


def _components(adj, mask: int) -> list[int]:
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


def independence_number(g: Graph) -> int:
    """alpha(G), the maximum size of an independent set."""
    return SubsetAlpha(g)(g.full_mask)


def max_independent_set(g: Graph) -> tuple[int, ...]:
    """A maximum independent set; lexicographically smallest among optima."""
    alpha = SubsetAlpha(g)
    chosen = []
    mask = g.full_mask
    while mask:
        target = alpha(mask)
        v = next(bits(mask))
        rest = mask & ~(g.adj[v] | 1 << v)
        if 1 + alpha(rest) == target:
            chosen.append(v)
            mask = rest
        else:
            mask &= ~(1 << v)
    return tuple(chosen)


def clique_number(g: Graph) -> int:
    """omega(G) by branch and bound with a greedy colouring upper bound."""
    if g.n == 0:
        return 0
    adj = g.adj
    best = 1

    def colour_bound(mask: int) -> list[tuple[int, int]]:
        # Greedy colouring of G[mask]; returns (vertex, colour) sorted by
        # colour so the strongest candidates are branched last.
        colours = []
        classes: list[int] = []
        for v in bits(mask):
            for c, cls in enumerate(classes):
                if not adj[v] & cls:
                    classes[c] |= 1 << v
                    colours.append((v, c + 1))
                    break
            else:
                classes.append(1 << v)
                colours.append((v, len(classes)))
        colours.sort(key=lambda vc: vc[1])
        return colours

    def expand(size: int, mask: int):
        nonlocal best
        order = colour_bound(mask)
        while order:
            v, c = order.pop()
            if size + c <= best:
                return
            if size + 1 > best:
                best = size + 1
            expand(size + 1, mask & adj[v])
            mask &= ~(1 << v)

    expand(0, g.full_mask)
    return best


def max_degree(g: Graph) -> int:
    return max((nb.bit_count() for nb in g.adj), default=0)


def local_independence_number(g: Graph) -> int:
    """Maximum number of leaves of an induced star: max_v alpha(G[N(v)])."""
    if g.n == 0:
        raise ValueError("local independence number needs at least one vertex")
    alpha = SubsetAlpha(g)
    return max(alpha(nb) for nb in g.adj)


def is_k_colourable(g: Graph, k: int) -> bool:
    if g.n == 0:
        return True
    if k <= 0:
        return g.n == 0
    return all(_colour_component(g, comp, k) for comp in g.components())


def _colour_component(g: Graph, comp: int, k: int) -> bool:
    vertices = sorted(bits(comp), key=lambda v: -(g.adj[v] & comp).bit_count())
    colour = {}

    def assign(i: int, used: int) -> bool:
        if i == len(vertices):
            return True
        v = vertices[i]
        taken = {colour[u] for u in bits(g.adj[v] & comp) if u in colour}
        limit = min(k, used + 1)
        for c in range(limit):
            if c in taken:
                continue
            colour[v] = c
            if assign(i + 1, max(used, c + 1)):
                return True
            del colour[v]
        return False

    return assign(0, 0)


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    lb = clique_number(g)
    k = lb
    while not is_k_colourable(g, k):
        k += 1
    return k


def is_bipartite(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Bipartiteness with a witness 2-colouring (colour per vertex)."""
    colour = [-1] * g.n
    for comp in g.components():
        root = next(bits(comp))
        colour[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for u in bits(g.adj[v]):
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return False, None
    return True, tuple(colour)


def odd_cycle(g: Graph) -> tuple[int, ...] | None:
    """Vertices of some induced-by-BFS-tree odd cycle, or None if bipartite."""
    colour = [-1] * g.n
    parent = [-1] * g.n
    for comp in g.components():
        root = next(bits(comp))
        colour[root] = 0
        order = [root]
        head = 0
        while head < len(order):
            v = order[head]
            head += 1
            for u in bits(g.adj[v]):
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    parent[u] = v
                    order.append(u)
                elif colour[u] == colour[v]:
                    return _tree_cycle(parent, u, v)
    return None


def _tree_cycle(parent, u: int, v: int) -> tuple[int, ...]:
    seen = {}
    x = u
    while x != -1:
        seen[x] = True
        x = parent[x]
    x = v
    while x not in seen:
        x = parent[x]
    meet = x
    path_u = []
    x = u
    while x != meet:
        path_u.append(x)
        x = parent[x]
    path_v = []
    x = v
    while x != meet:
        path_v.append(x)
        x = parent[x]
    return tuple(path_u + [meet] + path_v[::-1])


def shortest_cycle(g: Graph) -> tuple[int, ...] | None:
    """A shortest cycle, found by BFS from every vertex; None if acyclic."""
    best: tuple[int, ...] | None = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for u in bits(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u and dist[u] >= dist[v]:
                    cycle = _join_paths(parent, u, v)
                    if cycle and (best is None or len(cycle) < len(best)):
                        best = cycle
        if best is not None and len(best) == 3:
            return best
    return best


def _join_paths(parent, u: int, v: int) -> tuple[int, ...] | None:
    pu, pv = [u], [v]
    while parent[pu[-1]] != -1:
        pu.append(parent[pu[-1]])
    while parent[pv[-1]] != -1:
        pv.append(parent[pv[-1]])
    su, sv = set(pu), set(pv)
    common = su & sv
    # Walks may share more than the meet point; only keep simple cycles.
    cu = [x for x in pu if x not in common]
    cv = [x for x in pv if x not in common]
    meets = [x for x in pu if x in common]
    if len(cu) + len(cv) + 1 < 3:
        return None
    if set(cu) & set(cv):
        return None
    return tuple(cu + [meets[0]] + cv[::-1])


def is_forest(g: Graph) -> bool:
    return g.num_edges() == g.n - len(g.components())


def is_chordal(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Chordality via maximum cardinality search.

    Returns (True, perfect elimination order) or (False, None).  The order
    lists vertices in elimination order: each vertex's later neighbours form
    a clique.
    """
    n = g.n
    if n == 0:
        return True, ()
    weight = [0] * n
    placed = 0
    order = []  # reverse elimination order
    for _ in range(n):
        v = max(
            (v for v in range(n) if not placed >> v & 1),
            key=lambda v: (weight[v], -v),
        )
        order.append(v)
        placed |= 1 << v
        for u in bits(g.adj[v] & ~placed):
            weight[u] += 1
    peo = order[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for i, v in enumerate(peo):
        later = [u for u in bits(g.adj[v]) if pos[u] > i]
        if not later:
            continue
        w = min(later, key=lambda u: pos[u])
        others = mask_of(u for u in later if u != w)
        if others & ~g.adj[w]:
            return False, None
    return True, tuple(peo)


def maximal_cliques_chordal(g: Graph, peo) -> list[int]:
    """Maximal cliques of a chordal graph from a perfect elimination order."""
    pos = {v: i for i, v in enumerate(peo)}
    candidates = []
    for i, v in enumerate(peo):
        later = mask_of(u for u in bits(g.adj[v]) if pos[u] > i)
        candidates.append(later | 1 << v)
    cliques = []
    for c in candidates:
        if not any(c != d and c & d == c for d in candidates):
            if c not in cliques:
                cliques.append(c)
    return cliques


def contains_induced(g: Graph, h: Graph) -> bool:
    """Does g contain an induced subgraph isomorphic to h?

    Backtracking over pattern vertices ordered to keep each new vertex
    anchored to the already-mapped ones, with degree pruning.
    """
    if h.n == 0:
        return True
    if h.n > g.n:
        return False
    order = _pattern_order(h)
    g_deg = [g.degree(v) for v in range(g.n)]
    h_deg = [h.degree(v) for v in range(h.n)]

    def extend(i: int, image: dict[int, int], used: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        wanted = [(q, image[q]) for q in bits(h.adj[p]) if q in image]
        unwanted = [image[q] for q in image if not h.adj[p] >> q & 1]
        for v in range(g.n):
            if used >> v & 1 or g_deg[v] < h_deg[p]:
                continue
            if any(not g.adj[v] >> w & 1 for _, w in wanted):
                continue
            if any(g.adj[v] >> w & 1 for w in unwanted):
                continue
            image[p] = v
            if extend(i + 1, image, used | 1 << v):
                return True
            del image[p]
        return False

    return extend(0, {}, 0)


def _pattern_order(h: Graph) -> list[int]:
    order = []
    placed = 0
    for _ in range(h.n):
        best = max(
            (v for v in range(h.n) if not placed >> v & 1),
            key=lambda v: ((h.adj[v] & placed).bit_count(), h.degree(v), -v),
        )
        order.append(best)
        placed |= 1 << best
    return order


def max_matching_size(g: Graph) -> int:
    """Maximum matching cardinality (memoised branching; desk scale)."""
    adj = g.adj
    memo: dict[int, int] = {0: 0}

    def solve(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        v = next(bits(mask))
        rest = mask & ~(1 << v)
        nbs = adj[v] & mask
        if not nbs:
            value = solve(rest)
        else:
            value = solve(rest)  # v stays unmatched
            for u in bits(nbs):
                value = max(value, 1 + solve(rest & ~(1 << u)))
        memo[mask] = value
        return value

    return solve(g.full_mask)
