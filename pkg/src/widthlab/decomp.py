"""Decomposition witnesses: data types, validation, costs, and transforms.

Bags and hyperedges are vertex bitmasks of the host graph.  Validators
return structured violation lists (empty means valid), so tests can assert
exactly which condition broke.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graphs import Graph, bits, mask_of
from .invariants import SubsetAlpha, is_chordal, maximal_cliques_chordal


class CostKind(enum.Enum):
    """The annotated bag cost: plain cardinality or independence number."""

    CARDINALITY = "card"
    INDEPENDENCE = "alpha"

    @staticmethod
    def parse(text: str) -> "CostKind":
        key = text.strip().lower()
        if key in ("card", "cardinality"):
            return CostKind.CARDINALITY
        if key in ("alpha", "independence"):
            return CostKind.INDEPENDENCE
        raise ValueError(f"unknown cost kind {text!r}")


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.detail}"


class InvalidDecompositionError(ValueError):
    def __init__(self, violations):
        super().__init__("; ".join(map(str, violations)))
        self.violations = list(violations)


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed by node id 0..len(bags)-1, plus tree edges."""

    bags: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def hyperedges(self) -> tuple[int, ...]:
        return self.bags

    def to_json(self) -> dict:
        return {
            "nodes": list(range(len(self.bags))),
            "edges": [list(e) for e in self.edges],
            "bags": [sorted(bits(b)) for b in self.bags],
        }

    @staticmethod
    def from_json(data: dict) -> "TreeDecomposition":
        bags = tuple(mask_of(b) for b in data["bags"])
        edges = tuple((int(a), int(b)) for a, b in data["edges"])
        return TreeDecomposition(bags, edges)


@dataclass(frozen=True)
class PathDecomposition:
    """An ordered bag sequence; the underlying tree is the implicit path."""

    bags: tuple[int, ...]

    def hyperedges(self) -> tuple[int, ...]:
        return self.bags

    def as_tree(self) -> TreeDecomposition:
        edges = tuple((i, i + 1) for i in range(len(self.bags) - 1))
        return TreeDecomposition(self.bags, edges)

    def to_json(self) -> dict:
        return {"bags": [sorted(bits(b)) for b in self.bags]}

    @staticmethod
    def from_json(data: dict) -> "PathDecomposition":
        return PathDecomposition(tuple(mask_of(b) for b in data["bags"]))


@dataclass(frozen=True)
class RootedForest:
    """parent[v] is the parent vertex, or None for roots; covers V(G)."""

    parent: tuple[int | None, ...]

    @property
    def n(self) -> int:
        return len(self.parent)

    def roots(self) -> tuple[int, ...]:
        return tuple(v for v, p in enumerate(self.parent) if p is None)

    def children(self) -> list[list[int]]:
        kids: list[list[int]] = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent):
            if p is not None:
                kids[p].append(v)
        return kids

    def ancestors_mask(self, v: int) -> int:
        m = 0
        p = self.parent[v]
        while p is not None:
            m |= 1 << p
            p = self.parent[p]
        return m

    def depth(self) -> int:
        """Maximum number of vertices on a root-to-leaf path."""
        best = 0
        for v in range(self.n):
            best = max(best, 1 + self.ancestors_mask(v).bit_count())
        return best

    def transitive_closure(self) -> Graph:
        edges = []
        for v in range(self.n):
            edges.extend((u, v) for u in bits(self.ancestors_mask(v)))
        return Graph.from_edges(self.n, edges)

    def root_to_leaf_sets(self) -> tuple[int, ...]:
        """Vertex sets of the root-to-leaf paths, in DFS leaf order.

        Children and roots are visited in ascending vertex order, which makes
        the derived path decomposition reproducible.
        """
        kids = self.children()
        sets = []

        def walk(v: int, above: int):
            here = above | 1 << v
            if not kids[v]:
                sets.append(here)
                return
            for c in kids[v]:
                walk(c, here)

        for r in self.roots():
            walk(r, 0)
        return tuple(sets)

    def hyperedges(self) -> tuple[int, ...]:
        return self.root_to_leaf_sets()

    def to_json(self) -> dict:
        return {"parent": [p if p is not None else None for p in self.parent]}

    @staticmethod
    def from_json(data: dict) -> "RootedForest":
        return RootedForest(
            tuple(None if p is None else int(p) for p in data["parent"])
        )


Decomposition = TreeDecomposition | PathDecomposition | RootedForest


# ---------------------------------------------------------------------------
# Validation


def validate_tree_decomposition(g: Graph, td: TreeDecomposition) -> list[Violation]:
    out = []
    k = len(td.bags)
    for i, bag in enumerate(td.bags):
        if bag & ~g.full_mask:
            out.append(Violation("bag-out-of-range", f"bag {i} has vertices >= {g.n}"))
    for a, b in td.edges:
        if not (0 <= a < k and 0 <= b < k) or a == b:
            out.append(Violation("tree-bad-edge", f"edge ({a},{b})"))
            return out
    # The tree must be acyclic and connected (vacuously fine when empty).
    if len(td.edges) != max(k - 1, 0):
        out.append(
            Violation("tree-not-tree", f"{k} nodes but {len(td.edges)} edges")
        )
    else:
        seen = set()
        stack = [0] if k else []
        nbrs: list[list[int]] = [[] for _ in range(k)]
        for a, b in td.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(nbrs[x])
        if len(seen) != k:
            out.append(Violation("tree-not-tree", "tree is disconnected"))
    covered = 0
    for bag in td.bags:
        covered |= bag
    for v in bits(g.full_mask & ~covered):
        out.append(Violation("vertex-uncovered", f"vertex {v} in no bag"))
    for u, v in g.edges():
        need = 1 << u | 1 << v
        if not any(bag & need == need for bag in td.bags):
            out.append(Violation("edge-uncovered", f"edge {u}-{v} in no bag"))
    # Connected occurrence of every vertex.
    if not any(v.kind == "tree-not-tree" for v in out):
        nbrs = [[] for _ in range(k)]
        for a, b in td.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        for v in bits(covered & g.full_mask):
            nodes = [i for i, bag in enumerate(td.bags) if bag >> v & 1]
            seen = {nodes[0]}
            stack = [nodes[0]]
            want = set(nodes)
            while stack:
                x = stack.pop()
                for y in nbrs[x]:
                    if y in want and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if seen != want:
                out.append(
                    Violation(
                        "occurrence-disconnected",
                        f"vertex {v} occurs in a disconnected node set",
                    )
                )
    return out


def validate_path_decomposition(g: Graph, pd: PathDecomposition) -> list[Violation]:
    return validate_tree_decomposition(g, pd.as_tree())


def validate_treedepth_decomposition(g: Graph, f: RootedForest) -> list[Violation]:
    out = []
    if f.n != g.n:
        return [Violation("forest-domain", f"forest on {f.n} vertices, graph has {g.n}")]
    for v, p in enumerate(f.parent):
        if p is not None and not 0 <= p < f.n:
            return [Violation("forest-domain", f"parent of {v} out of range")]
    # Acyclicity of the parent relation.
    state = [0] * f.n  # 0 unseen, 1 on path, 2 done
    for v in range(f.n):
        path = []
        x = v
        while x is not None and state[x] == 0:
            state[x] = 1
            path.append(x)
            x = f.parent[x]
        if x is not None and state[x] == 1:
            return [Violation("forest-cycle", f"parent cycle through {x}")]
        for y in path:
            state[y] = 2
    for u, v in g.edges():
        anc_u = f.ancestors_mask(u)
        anc_v = f.ancestors_mask(v)
        if not (anc_u >> v & 1 or anc_v >> u & 1):
            out.append(
                Violation(
                    "edge-endpoints-incomparable",
                    f"edge {u}-{v} joins incomparable vertices",
                )
            )
    return out


def validate(g: Graph, d: Decomposition) -> list[Violation]:
    if isinstance(d, TreeDecomposition):
        return validate_tree_decomposition(g, d)
    if isinstance(d, PathDecomposition):
        return validate_path_decomposition(g, d)
    if isinstance(d, RootedForest):
        return validate_treedepth_decomposition(g, d)
    raise TypeError(f"not a decomposition: {d!r}")


# ---------------------------------------------------------------------------
# Costs


def cost(g: Graph, d: Decomposition, kind: CostKind, *, check: bool = True) -> int:
    """max over hyperedges X of lambda(G, X); 0 for an empty decomposition."""
    if check:
        violations = validate(g, d)
        if violations:
            raise InvalidDecompositionError(violations)
    hyperedges = d.hyperedges()
    if not hyperedges:
        return 0
    if kind is CostKind.CARDINALITY:
        return max(h.bit_count() for h in hyperedges)
    alpha = SubsetAlpha(g)
    return max(alpha(h) for h in hyperedges)


# ---------------------------------------------------------------------------
# Constructive transforms


def path_decomp_from_treedepth(g: Graph, f: RootedForest) -> PathDecomposition:
    """Bags are the root-to-leaf vertex sets in DFS leaf order."""
    violations = validate_treedepth_decomposition(g, f)
    if violations:
        raise InvalidDecompositionError(violations)
    return PathDecomposition(f.root_to_leaf_sets())


def td_decomp_from_vertex_cover(g: Graph, cover: int) -> RootedForest:
    """A chain on the cover (ascending ids) with everything else as leaves."""
    outside = g.full_mask & ~cover
    if any(g.adj[v] & outside for v in bits(outside)):
        raise ValueError("the given set is not a vertex cover")
    chain = sorted(bits(cover))
    parent: list[int | None] = [None] * g.n
    for prev, nxt in zip(chain, chain[1:]):
        parent[nxt] = prev
    last = chain[-1] if chain else None
    for v in bits(g.full_mask & ~cover):
        parent[v] = last
    return RootedForest(tuple(parent))


def extend_tree_decomposition(
    g: Graph, s: int, inner: TreeDecomposition, inner_vertices: tuple[int, ...]
) -> TreeDecomposition:
    """Lift a decomposition of g - s to one of g by adding s to every bag.

    ``inner_vertices[i]`` is the g-vertex carried by vertex i of g - s.
    """
    rest, old = g.induced(g.full_mask & ~s)
    if old != tuple(inner_vertices):
        raise ValueError("inner decomposition vertex map does not match g - s")
    violations = validate_tree_decomposition(rest, inner)
    if violations:
        raise InvalidDecompositionError(violations)
    if not inner.bags:
        return TreeDecomposition((s,) if s else (), ())
    bags = tuple(
        mask_of(inner_vertices[v] for v in bits(bag)) | s for bag in inner.bags
    )
    return TreeDecomposition(bags, inner.edges)


def extend_path_decomposition(
    g: Graph, s: int, inner: PathDecomposition, inner_vertices: tuple[int, ...]
) -> PathDecomposition:
    rest, old = g.induced(g.full_mask & ~s)
    if old != tuple(inner_vertices):
        raise ValueError("inner decomposition vertex map does not match g - s")
    violations = validate_path_decomposition(rest, inner)
    if violations:
        raise InvalidDecompositionError(violations)
    if not inner.bags:
        return PathDecomposition((s,) if s else ())
    return PathDecomposition(
        tuple(mask_of(inner_vertices[v] for v in bits(bag)) | s for bag in inner.bags)
    )


def extend_treedepth_decomposition(
    g: Graph, s: int, inner: RootedForest, inner_vertices: tuple[int, ...]
) -> RootedForest:
    """Chain the vertices of s above the roots of a forest for g - s."""
    rest, old = g.induced(g.full_mask & ~s)
    if old != tuple(inner_vertices):
        raise ValueError("inner decomposition vertex map does not match g - s")
    violations = validate_treedepth_decomposition(rest, inner)
    if violations:
        raise InvalidDecompositionError(violations)
    chain = sorted(bits(s))
    parent: list[int | None] = [None] * g.n
    for prev, nxt in zip(chain, chain[1:]):
        parent[nxt] = prev
    sink = chain[-1] if chain else None
    for v, p in enumerate(inner.parent):
        gv = inner_vertices[v]
        parent[gv] = inner_vertices[p] if p is not None else sink
    return RootedForest(tuple(parent))


def tree_decomp_from_fvs(g: Graph, s: int) -> TreeDecomposition:
    """Clique bags of the forest g - s, with s added to every bag."""
    rest_mask = g.full_mask & ~s
    rest, old = g.induced(rest_mask)
    if rest.num_edges() != rest.n - len(rest.components()):
        raise ValueError("g - s is not acyclic")
    bags = []
    edges = []
    node_of_vertex: dict[int, int] = {}
    for comp in rest.components():
        comp_root = next(bits(comp))
        comp_edges = [
            (u, v) for u in bits(comp) for v in bits(rest.adj[u]) if u < v
        ]
        if not comp_edges:
            bags.append(1 << old[comp_root] | s)
            node_of_vertex[comp_root] = len(bags) - 1
            continue
        # One bag per forest edge, attached along a DFS of the component.
        first_node = None
        stack = [comp_root]
        seen = {comp_root}
        while stack:
            v = stack.pop()
            for u in sorted(bits(rest.adj[v] & comp)):
                if u in seen:
                    continue
                seen.add(u)
                bags.append(1 << old[v] | 1 << old[u] | s)
                node = len(bags) - 1
                if v in node_of_vertex:
                    edges.append((node_of_vertex[v], node))
                elif first_node is not None:
                    edges.append((first_node, node))
                if first_node is None:
                    first_node = node
                node_of_vertex.setdefault(v, node)
                node_of_vertex[u] = node
                stack.append(u)
    if not bags:
        return TreeDecomposition((s,) if s else (), ())
    # Join the per-component subtrees into one tree.
    component_entries = []
    seen_nodes = set()
    for i in range(len(bags)):
        if i not in seen_nodes:
            component_entries.append(i)
            stack = [i]
            nbrs: dict[int, list[int]] = {}
            for a, b in edges:
                nbrs.setdefault(a, []).append(b)
                nbrs.setdefault(b, []).append(a)
            while stack:
                x = stack.pop()
                if x in seen_nodes:
                    continue
                seen_nodes.add(x)
                stack.extend(nbrs.get(x, []))
    for a, b in zip(component_entries, component_entries[1:]):
        edges.append((a, b))
    return TreeDecomposition(tuple(bags), tuple(edges))


def chordal_clique_tree(g: Graph) -> TreeDecomposition:
    """A clique tree of a chordal graph (every bag is a maximal clique)."""
    ok, peo = is_chordal(g)
    if not ok:
        raise ValueError("graph is not chordal")
    if g.n == 0:
        return TreeDecomposition((), ())
    cliques = maximal_cliques_chordal(g, peo)
    k = len(cliques)
    if k == 1:
        return TreeDecomposition((cliques[0],), ())
    # Maximum-weight spanning tree on intersection sizes (Prim) yields a
    # junction tree; ties resolved toward smaller node ids.
    in_tree = [False] * k
    in_tree[0] = True
    edges = []
    for _ in range(k - 1):
        best = None
        for a in range(k):
            if not in_tree[a]:
                continue
            for b in range(k):
                if in_tree[b]:
                    continue
                w = (cliques[a] & cliques[b]).bit_count()
                cand = (w, -a, -b)
                if best is None or cand > best[0]:
                    best = (cand, a, b)
        _, a, b = best
        in_tree[b] = True
        edges.append((a, b))
    return TreeDecomposition(tuple(cliques), tuple(edges))
