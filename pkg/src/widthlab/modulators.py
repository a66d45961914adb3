"""Modulator numbers, cover-type solvers, and the Ramsey binding function.

A (rho, c)-modulator of G is a vertex set S with rho(G - S) <= c; its
cardinality and independence variants minimise |S| and alpha(G[S]).  With
the bag-cardinality width convention used throughout, (tw,1)- and
(td,1)-modulators are the vertex covers, (tw,2)-modulators the feedback
vertex sets, and (chi,2)-modulators the odd cycle transversals.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from itertools import combinations

from .config import Budgets, DEFAULT_BUDGETS
from .decomp import CostKind
from .graphs import BudgetExceededError, Graph, bits, mask_of
from .invariants import (
    SubsetAlpha,
    chromatic_number,
    clique_number,
    is_bipartite,
    is_k_colourable,
    local_independence_number,
    max_degree,
)
from . import widths

RHO_NAMES = ("tw", "pw", "td", "chi", "omega", "delta")


@dataclass(frozen=True)
class ModulatorSpec:
    rho: str
    c: int

    def __post_init__(self):
        if self.rho not in RHO_NAMES:
            raise ValueError(f"unknown target parameter {self.rho!r}")
        if self.c < 0:
            raise ValueError("modulator threshold must be non-negative")

    @staticmethod
    def parse(text: str) -> "ModulatorSpec":
        try:
            rho, c = text.split(":")
            return ModulatorSpec(rho.strip(), int(c))
        except ValueError:
            raise ValueError(f"bad modulator spec {text!r}, expected 'rho:c'") from None

    def __str__(self):
        return f"{self.rho}:{self.c}"


# ---------------------------------------------------------------------------
# Target parameter evaluation


def rho_value(g: Graph, rho: str, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    if rho == "tw":
        return widths.lambda_treewidth(g, CostKind.CARDINALITY, budgets).value
    if rho == "pw":
        return widths.lambda_pathwidth(g, CostKind.CARDINALITY, budgets).value
    if rho == "td":
        return widths.lambda_treedepth(g, CostKind.CARDINALITY, budgets).value
    if rho == "chi":
        return chromatic_number(g)
    if rho == "omega":
        return clique_number(g)
    if rho == "delta":
        return max_degree(g)
    raise ValueError(f"unknown target parameter {rho!r}")


def rho_at_most(g: Graph, rho: str, c: int, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """rho(g) <= c, with cheap structural shortcuts for the small thresholds
    that the modulator solver hammers on."""
    if g.n == 0:
        return c >= 0
    if c <= 0:
        return False if rho in ("tw", "pw", "td", "chi") else rho_value(g, rho, budgets) <= c
    edges = g.num_edges()
    if rho in ("tw", "pw", "td") and c == 1:
        return edges == 0
    acyclic = edges == g.n - len(g.components())
    if rho == "tw" and c == 2:
        return acyclic
    if rho == "td" and c == 2:
        # Star forest: every component is a K_{1,q}.
        for comp in g.components():
            sub, _ = g.induced(comp)
            if sub.num_edges() != sub.n - 1 or (
                sub.n > 1 and max_degree(sub) != sub.n - 1
            ):
                return False
        return True
    if rho == "chi":
        if c == 1:
            return edges == 0
        if c == 2:
            return is_bipartite(g)[0]
        return is_k_colourable(g, c)
    if rho == "delta":
        return max_degree(g) <= c
    if rho == "omega":
        return clique_number(g) <= c
    return rho_value(g, rho, budgets) <= c


def lambda_rho(
    g: Graph, rho: str, kind: CostKind, budgets: Budgets = DEFAULT_BUDGETS
) -> int:
    """The lambda-variant of a target parameter's canonical hyperparameter."""
    if rho == "tw":
        return widths.lambda_treewidth(g, kind, budgets).value
    if rho == "pw":
        return widths.lambda_pathwidth(g, kind, budgets).value
    if rho == "td":
        return widths.lambda_treedepth(g, kind, budgets).value
    if kind is CostKind.CARDINALITY:
        return rho_value(g, rho, budgets)
    if rho == "chi":
        return widths.alpha_chromatic(g, budgets).value
    if rho == "omega":
        # max over cliques X of alpha(G[X]): any single vertex gives 1.
        return 1 if g.n else 0
    if rho == "delta":
        return local_independence_number(g) if g.n else 0
    raise ValueError(f"unknown target parameter {rho!r}")


# ---------------------------------------------------------------------------
# Generic modulator solver


def _subsets_lex(n: int):
    """All subsets of range(n) as sorted tuples in lexicographic order."""

    def rec(prefix: tuple[int, ...], start: int):
        yield prefix
        for v in range(start, n):
            yield from rec(prefix + (v,), v + 1)

    yield from rec((), 0)


def modulator_number(
    g: Graph,
    spec: ModulatorSpec,
    kind: CostKind = CostKind.CARDINALITY,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> tuple[int, tuple[int, ...]]:
    """Exact lambda-mu_{rho,c}: minimum lambda(G, S) over modulators S.

    Returns (value, witness), the witness lexicographically smallest among
    the optima.  Every graph has at least the trivial modulator S = V.
    """
    if g.n > budgets.modulator:
        raise BudgetExceededError(
            f"modulator_number: n={g.n} exceeds budget {budgets.modulator}"
        )
    is_mod_cache: dict[int, bool] = {}

    def is_modulator(s_mask: int) -> bool:
        cached = is_mod_cache.get(s_mask)
        if cached is None:
            rest, _ = g.induced(g.full_mask & ~s_mask)
            cached = rho_at_most(rest, spec.rho, spec.c, budgets)
            is_mod_cache[s_mask] = cached
        return cached

    if kind is CostKind.CARDINALITY:
        for k in range(g.n + 1):
            for combo in combinations(range(g.n), k):
                if is_modulator(mask_of(combo)):
                    return k, combo
        raise AssertionError("S = V(G) is always a modulator")

    alpha = SubsetAlpha(g)
    best = None
    witness: tuple[int, ...] = ()
    for subset in _subsets_lex(g.n):
        a = alpha(mask_of(subset))
        if best is not None and a >= best:
            continue
        if is_modulator(mask_of(subset)):
            best = a
            witness = subset
            if best == 0:
                break
    return best, witness


# ---------------------------------------------------------------------------
# Dedicated cover-type solvers (vertex cover, FVS, OCT)


def _mask_is_acyclic(g: Graph, mask: int) -> bool:
    edges = sum((g.adj[v] & mask).bit_count() for v in bits(mask)) // 2
    return edges == mask.bit_count() - len(g.components(mask))


def _mask_is_bipartite(g: Graph, mask: int) -> bool:
    colour = {}
    for comp in g.components(mask):
        root = next(bits(comp))
        colour[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v] & mask):
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True


def _max_induced(g: Graph, good, within: int) -> int:
    """Largest subset F of ``within`` with good(F), by branch and bound."""
    order = sorted(bits(within))
    best = 0

    def rec(i: int, chosen: int, size: int):
        nonlocal best
        if size + len(order) - i <= best:
            return
        if i == len(order):
            best = max(best, size)
            return
        v = order[i]
        if good(chosen | 1 << v):
            rec(i + 1, chosen | 1 << v, size + 1)
        rec(i + 1, chosen, size)

    rec(0, 0, 0)
    return best


def vertex_cover_number(
    g: Graph, budgets: Budgets = DEFAULT_BUDGETS
) -> tuple[int, tuple[int, ...]]:
    """vc(G) = n - alpha(G), with the lexicographically smallest witness."""
    if g.n > budgets.cover_solvers:
        raise BudgetExceededError(
            f"vertex_cover_number: n={g.n} exceeds budget {budgets.cover_solvers}"
        )
    alpha = SubsetAlpha(g)
    target = g.n - alpha(g.full_mask)
    chosen: list[int] = []
    deleted = 0
    for v in range(g.n):
        if len(chosen) == target:
            break
        trial = deleted | 1 << v
        rest = g.full_mask & ~trial
        if (rest.bit_count() - alpha(rest)) <= target - len(chosen) - 1:
            chosen.append(v)
            deleted = trial
    return target, tuple(chosen)


def _cover_type_number(g, good, budget_n, budgets, name):
    if g.n > budget_n:
        raise BudgetExceededError(f"{name}: n={g.n} exceeds budget {budget_n}")
    keep = _max_induced(g, good, g.full_mask)
    target = g.n - keep
    chosen: list[int] = []
    deleted = 0
    for v in range(g.n):
        if len(chosen) == target:
            break
        trial = deleted | 1 << v
        if _max_induced(g, good, g.full_mask & ~trial) >= g.n - target:
            chosen.append(v)
            deleted = trial
    return target, tuple(chosen)


def feedback_vertex_number(
    g: Graph, budgets: Budgets = DEFAULT_BUDGETS
) -> tuple[int, tuple[int, ...]]:
    return _cover_type_number(
        g,
        lambda m: _mask_is_acyclic(g, m),
        budgets.cover_solvers,
        budgets,
        "feedback_vertex_number",
    )


def oct_number(
    g: Graph, budgets: Budgets = DEFAULT_BUDGETS
) -> tuple[int, tuple[int, ...]]:
    return _cover_type_number(
        g,
        lambda m: _mask_is_bipartite(g, m),
        budgets.cover_solvers,
        budgets,
        "oct_number",
    )


def alpha_vertex_cover(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """min alpha(G[X]) over vertex covers X (the alpha-variant of vc)."""
    return modulator_number(g, ModulatorSpec("tw", 1), CostKind.INDEPENDENCE, budgets)[0]


def alpha_feedback_vertex(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """min alpha(G[X]) over feedback vertex sets X."""
    return modulator_number(g, ModulatorSpec("tw", 2), CostKind.INDEPENDENCE, budgets)[0]


# ---------------------------------------------------------------------------
# Ramsey binding


def ramsey_upper(a: int, b: int) -> int:
    """The binomial upper bound C(a+b-2, a-1) on the Ramsey number R(a, b)."""
    if a < 1 or b < 1:
        raise ValueError("Ramsey arguments must be positive")
    return comb(a + b - 2, a - 1)


def binding_f(p: int, k: int) -> int:
    """The per-graph binding function R(p+1, k+1) - 1, with R replaced by
    its binomial upper bound."""
    return ramsey_upper(p + 1, k + 1) - 1


RAMSEY_CHECK_MAX_N = 6


def ramsey_property_check(n: int, a: int, b: int) -> bool:
    """Does every graph on n vertices have a clique of size a or an
    independent set of size b?  Exhaustive over all labelled graphs."""
    if n > RAMSEY_CHECK_MAX_N:
        raise BudgetExceededError(
            f"ramsey_property_check: n={n} exceeds budget {RAMSEY_CHECK_MAX_N}"
        )
    if a <= 1 or b <= 1:
        # A K_1 or a single-vertex independent set exists whenever n >= 1;
        # size-0 witnesses exist vacuously.
        return n >= 1 or a <= 0 or b <= 0
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    index = {pair: t for t, pair in enumerate(pairs)}

    def pair_mask(subset) -> int:
        m = 0
        for x, y in combinations(subset, 2):
            m |= 1 << index[(x, y)]
        return m

    clique_masks = [pair_mask(s) for s in combinations(range(n), a)]
    indep_masks = [pair_mask(s) for s in combinations(range(n), b)]
    for code in range(1 << len(pairs)):
        if any(code & m == m for m in clique_masks):
            continue
        if any(code & m == 0 for m in indep_masks):
            continue
        return False
    return True


# ---------------------------------------------------------------------------
# Per-graph lemma checks


def minimum_modulators(
    g: Graph,
    spec: ModulatorSpec,
    budgets: Budgets = DEFAULT_BUDGETS,
    cap: int = 100_000,
):
    """All minimum-cardinality (rho, c)-modulators, lexicographic order."""
    value, _ = modulator_number(g, spec, CostKind.CARDINALITY, budgets)
    out = []
    for combo in combinations(range(g.n), value):
        rest, _ = g.induced(g.full_mask & ~mask_of(combo))
        if rho_at_most(rest, spec.rho, spec.c, budgets):
            out.append(combo)
            if len(out) >= cap:
                break
    return value, out


def _maximum_independent_subsets(g: Graph, s_mask: int):
    """All maximum independent sets of G[s_mask], as masks."""
    alpha = SubsetAlpha(g)
    target = alpha(s_mask)
    found = []

    def rec(rest: int, chosen: int, size: int):
        if size == target:
            found.append(chosen)
            return
        if size + alpha(rest) < target:
            return
        v = next(bits(rest))
        rec(rest & ~(g.adj[v] | 1 << v), chosen | 1 << v, size + 1)
        rec(rest & ~(1 << v), chosen, size)

    rec(s_mask, 0, 0)
    return target, found


def check_modulator_minimality(
    g: Graph, spec: ModulatorSpec, budgets: Budgets = DEFAULT_BUDGETS
) -> str | None:
    """The exchange step behind heaviness: for every minimum (rho, c)-
    modulator S and every maximum independent set I of G[S], the graph
    G' = G[(V - S) + I] still needs a modulator of size at least |I|.

    Returns None when the invariant holds, else a counterexample detail.
    """
    _, mods = minimum_modulators(g, spec, budgets)
    for s in mods:
        s_mask = mask_of(s)
        size_i, max_inds = _maximum_independent_subsets(g, s_mask)
        for i_mask in max_inds:
            keep = (g.full_mask & ~s_mask) | i_mask
            sub, _ = g.induced(keep)
            inner, _ = modulator_number(sub, spec, CostKind.CARDINALITY, budgets)
            if inner < size_i:
                return (
                    f"S={sorted(s)} I={sorted(bits(i_mask))}: "
                    f"mu({spec}) of exchanged graph is {inner} < |I|={size_i}"
                )
    return None


def check_modulator_slack(
    g: Graph,
    spec: ModulatorSpec,
    kind: CostKind,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> str | None:
    """lambda-rho(G) <= lambda-mu_{rho,c}(G) + c; None when it holds."""
    lhs = lambda_rho(g, spec.rho, kind, budgets)
    mu, witness = modulator_number(g, spec, kind, budgets)
    if lhs <= mu + spec.c:
        return None
    return (
        f"{kind.value}-{spec.rho}={lhs} exceeds {kind.value}-mu[{spec}]={mu} "
        f"+ c={spec.c} (witness S={list(witness)})"
    )


_EMPIRICAL_H_CACHE: dict[tuple[str, int], int] = {}


def empirical_h(rho: str, c: int, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """max omega(G) over graphs with rho(G) <= c, n <= 6.

    With the bag-cardinality width convention, omega <= tw holds exactly,
    so h is the identity for treewidth; for other targets this empirical
    value is reporting-only.
    """
    if rho == "tw":
        return c
    key = (rho, c)
    if key not in _EMPIRICAL_H_CACHE:
        from .graphs import enumerate_graphs

        best = 0
        for n in range(0, 7):
            for g in enumerate_graphs(n):
                if rho_at_most(g, rho, c, budgets):
                    best = max(best, clique_number(g))
        _EMPIRICAL_H_CACHE[key] = best
    return _EMPIRICAL_H_CACHE[key]
