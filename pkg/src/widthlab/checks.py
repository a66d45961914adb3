"""Named verification suites over generated graph families.

Each registered check evaluates one per-graph fact on every member of its
family and reports structured failures.  Checks are deterministic under a
fixed seed; a failing instance always carries a graph6 string that
reproduces the problem through the ``param`` CLI.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .config import Budgets, SuiteParams, DEFAULT_BUDGETS, DEFAULT_SUITE
from .constructions import SubstitutionKind, gamma_family, substitute
from .decomp import CostKind, chordal_clique_tree, cost, tree_decomp_from_fvs
from .formats import to_graph6, from_graph6
from .graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    copies,
    enumerate_graphs,
    mask_of,
    path_graph,
    random_graph,
    random_permutation,
    star,
)
from .invariants import (
    SubsetAlpha,
    chromatic_number,
    clique_number,
    contains_induced,
    independence_number,
    is_chordal,
    local_independence_number,
    max_degree,
    max_matching_size,
)
from .modulators import (
    ModulatorSpec,
    alpha_feedback_vertex,
    alpha_vertex_cover,
    binding_f,
    check_modulator_minimality,
    check_modulator_slack,
    empirical_h,
    feedback_vertex_number,
    modulator_number,
    oct_number,
    ramsey_property_check,
    rho_at_most,
    vertex_cover_number,
)
from .mwis import WeightedGraph, find_oct_with_bounded_alpha, mwis_bipartite, mwis_exact, mwis_via_oct
from .widths import (
    alpha_chromatic,
    degeneracy,
    lambda_pathwidth,
    lambda_pw_at_most,
    lambda_td_at_most,
    lambda_treedepth,
    lambda_treewidth,
)

CARD = CostKind.CARDINALITY
ALPHA = CostKind.INDEPENDENCE


@dataclass(frozen=True)
class CheckSpec:
    name: str
    params: dict = field(default_factory=dict)


@dataclass
class CheckReport:
    name: str
    instances_tested: int
    failures: list[tuple[str, str]]
    elapsed_ms: int
    meta: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, include_timing: bool = True) -> dict:
        data = {
            "name": self.name,
            "instances_tested": self.instances_tested,
            "failures": [list(f) for f in self.failures],
            "pass": self.passed,
        }
        if self.meta:
            data["meta"] = self.meta
        if include_timing:
            data["elapsed_ms"] = self.elapsed_ms
        return data


# ---------------------------------------------------------------------------
# Families


def graphs_upto(max_n: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        yield from enumerate_graphs(n)


def _seeded_weights(n: int, seed: int, weight_max: int) -> tuple[int, ...]:
    rng = random.Random(seed)
    return tuple(rng.randint(0, weight_max) for _ in range(n))


def _random_bipartite(n_max: int, seed: int) -> Graph:
    rng = random.Random(seed)
    n = rng.randint(2, n_max)
    left = rng.randint(1, n - 1)
    p = rng.uniform(0.2, 0.8)
    edges = [
        (u, v)
        for u in range(left)
        for v in range(left, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Per-check default parameters, instances, and evaluators


def default_params(name: str, suite: SuiteParams = DEFAULT_SUITE) -> dict:
    s = suite
    table = {
        "chain-inequality": {"max_n": s.chain_max_n},
        "ramsey-binding": {"max_n": s.ramsey_max_n},
        "sclaw-increment": {
            "max_n": s.sclaw_max_n,
            "random_n": s.sclaw_random_n,
            "random_count": s.sclaw_random_count,
            "seed": s.default_seed,
        },
        "gamma-witness": {"max_n": s.gamma_max_index},
        "modulator-slack": {
            "max_n": s.modulator_max_n,
            "rhos": ["omega", "chi", "tw", "pw", "td"],
            "cs": [0, 1, 2],
            "kinds": ["card", "alpha"],
        },
        "modulator-minimality": {
            "max_n": s.modulator_max_n,
            "specs": ["tw:1", "tw:2", "chi:2"],
        },
        "modulator-identities": {"max_n": s.modulator_max_n},
        "mwis-equivalence": {
            "max_n": s.mwis_max_n,
            "weight_seeds": s.mwis_weight_seeds,
            "random_count": s.mwis_random_count,
            "random_max_n": s.mwis_random_max_n,
            "bipartite_count": s.mwis_bipartite_count,
            "bipartite_max_n": s.mwis_bipartite_max_n,
            "weight_max": s.mwis_weight_max,
            "seed": s.default_seed,
        },
        "fvs-alpha-tw-bound": {"max_n": s.modulator_max_n},
        "delta-not-inheritable": {
            "q_min": s.delta_star_min,
            "q_max": s.delta_star_max,
        },
        "td-path-formula": {"max_n": s.td_path_max_n},
        "nk2-knn-witness": {"max_n": s.nk2_knn_max_n},
        "alpha-chi-nkn": {"max_s": s.alpha_chi_max_s},
        "iso-invariance": {
            "max_n": s.iso_max_n,
            "relabelings": s.iso_relabelings,
            "seed": s.default_seed,
        },
    }
    if name not in table:
        raise KeyError(f"unknown check {name!r}")
    return table[name]


def instances_for(name: str, params: dict, budgets: Budgets = DEFAULT_BUDGETS) -> list[dict]:
    def family() -> list[str]:
        if "graphs" in params:
            return list(params["graphs"])
        return [to_graph6(g) for g in graphs_upto(params["max_n"])]

    if name in ("chain-inequality", "ramsey-binding", "fvs-alpha-tw-bound"):
        out = [{"g6": g6} for g6 in family()]
        if name == "ramsey-binding":
            out.append({"fact": [6, 3, 3], "expect": True})
            out.append({"fact": [5, 3, 3], "expect": False})
        return out
    if name == "sclaw-increment":
        if "graphs" in params:
            return [{"g6": g6} for g6 in params["graphs"]]
        out = [{"g6": to_graph6(g)} for g in graphs_upto(params["max_n"], min_n=1)]
        seed = params["seed"]
        for i in range(params["random_count"]):
            g = random_graph(params["random_n"], 0.5, seed + i)
            out.append({"g6": to_graph6(g)})
        return out
    if name == "gamma-witness":
        return [{"index": i} for i in range(1, params["max_n"] + 1)]
    if name == "modulator-slack":
        return [
            {"g6": g6, "rho": rho, "c": c, "kind": kind}
            for g6 in family()
            for rho in params["rhos"]
            for c in params["cs"]
            for kind in params["kinds"]
        ]
    if name == "modulator-minimality":
        return [
            {"g6": g6, "spec": spec}
            for g6 in family()
            for spec in params["specs"]
        ]
    if name == "modulator-identities":
        return [{"g6": g6} for g6 in family()]
    if name == "mwis-equivalence":
        if "graphs" in params:
            return [
                {"g6": g6, "wseed": params["seed"] + i, "mode": "oct"}
                for i, g6 in enumerate(params["graphs"])
            ]
        out = []
        seed = params["seed"]
        for idx, g in enumerate(graphs_upto(params["max_n"])):
            g6 = to_graph6(g)
            for s in range(params["weight_seeds"]):
                out.append({"g6": g6, "wseed": seed + 1000 * s + idx, "mode": "oct"})
        for i in range(params["random_count"]):
            rng = random.Random(seed + 500_000 + i)
            n = rng.randint(1, params["random_max_n"])
            g = random_graph(n, rng.uniform(0.1, 0.9), seed + 600_000 + i)
            out.append({"g6": to_graph6(g), "wseed": seed + 700_000 + i, "mode": "oct"})
        for i in range(params["bipartite_count"]):
            g = _random_bipartite(params["bipartite_max_n"], seed + 800_000 + i)
            out.append({"g6": to_graph6(g), "wseed": seed + 900_000 + i, "mode": "bipartite"})
        return out
    if name == "delta-not-inheritable":
        return [{"q": q} for q in range(params["q_min"], params["q_max"] + 1)]
    if name == "td-path-formula":
        return [{"n": n} for n in range(1, params["max_n"] + 1)]
    if name == "nk2-knn-witness":
        return [{"n": n} for n in range(1, params["max_n"] + 1)]
    if name == "alpha-chi-nkn":
        out = [{"graph": f"K{s}", "expect": 1} for s in range(1, params["max_s"] + 1)]
        out.append({"graph": "2K2", "expect": 2})
        out.append({"graph": "3K3", "expect_at_least": 3})
        return out
    if name == "iso-invariance":
        return [
            {"g6": g6, "relabelings": params["relabelings"], "seed": params["seed"]}
            for g6 in family()
        ]
    raise KeyError(f"unknown check {name!r}")


# -- evaluators --------------------------------------------------------------


def _eval_chain(inst, params, budgets) -> str | None:
    g = from_graph6(inst["g6"])
    for kind in (CARD, ALPHA):
        tw = lambda_treewidth(g, kind, budgets).value
        pw = lambda_pathwidth(g, kind, budgets).value
        td = lambda_treedepth(g, kind, budgets).value
        if kind is CARD:
            vc = vertex_cover_number(g, budgets)[0]
        else:
            vc = alpha_vertex_cover(g, budgets)
        if not (tw <= pw <= td <= vc + 1):
            return f"{kind.value}: tw={tw} pw={pw} td={td} vc={vc}"
    return None


def _eval_ramsey_binding(inst, params, budgets) -> str | None:
    if "fact" in inst:
        n, a, b = inst["fact"]
        got = ramsey_property_check(n, a, b)
        if got != inst["expect"]:
            return f"ramsey_property_check({n},{a},{b}) = {got}, expected {inst['expect']}"
        return None
    g = from_graph6(inst["g6"])
    omega = clique_number(g)
    values = {
        "vc": (vertex_cover_number(g, budgets)[0], alpha_vertex_cover(g, budgets)),
        "fvs": (feedback_vertex_number(g, budgets)[0], alpha_feedback_vertex(g, budgets)),
        "tw": (
            lambda_treewidth(g, CARD, budgets).value,
            lambda_treewidth(g, ALPHA, budgets).value,
        ),
        "pw": (
            lambda_pathwidth(g, CARD, budgets).value,
            lambda_pathwidth(g, ALPHA, budgets).value,
        ),
        "td": (
            lambda_treedepth(g, CARD, budgets).value,
            lambda_treedepth(g, ALPHA, budgets).value,
        ),
    }
    for rho, (plain, alpha_variant) in values.items():
        bound = binding_f(omega, alpha_variant) if g.n else 0
        if g.n and plain > bound:
            return (
                f"{rho}={plain} > f(omega={omega}) = {bound} with "
                f"alpha-{rho}={alpha_variant}"
            )
    return None


def _eval_sclaw(inst, params, budgets) -> str | None:
    g = from_graph6(inst["g6"])
    apw = lambda_pathwidth(g, ALPHA, budgets).value
    atd = lambda_treedepth(g, ALPHA, budgets).value
    sclaw = substitute(g, SubstitutionKind.S_CLAW)
    got = lambda_pathwidth(sclaw, ALPHA, budgets).value
    if got != apw + 1:
        return f"alpha-pw(s(G))={got}, expected {apw}+1"
    p5 = substitute(g, SubstitutionKind.P5)
    got = lambda_treedepth(p5, ALPHA, budgets).value
    if got != atd + 1:
        return f"alpha-td(p5(G))={got}, expected {atd}+1"
    net = substitute(g, SubstitutionKind.NET)
    got = lambda_pathwidth(net, ALPHA, budgets).value
    if got != apw + 1:
        return f"alpha-pw(net(G))={got}, expected {apw}+1"
    return None


def _eval_gamma(inst, params, budgets) -> str | None:
    index = inst["index"]
    g = gamma_family(index, budgets)
    expected_order = 1
    for _ in range(index - 1):
        expected_order = 3 * expected_order + 4
    if g.n != expected_order:
        return f"|V(S_{index})| = {g.n}, expected {expected_order}"
    omega = clique_number(g)
    if omega != index:
        return f"omega(S_{index}) = {omega}, expected {index}"
    ok, _ = is_chordal(g)
    if not ok:
        return f"S_{index} is not chordal"
    clique_tree = chordal_clique_tree(g)
    alpha_tw_cost = cost(g, clique_tree, ALPHA)
    if alpha_tw_cost != 1:
        return f"clique tree of S_{index} has independence cost {alpha_tw_cost}"
    for name in ("P6", "C4", "C5", "C6"):
        pattern = {
            "P6": path_graph(6),
            "C4": Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
            "C5": Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
            "C6": Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]),
        }[name]
        if contains_induced(g, pattern):
            return f"S_{index} contains an induced {name}"
    if g.n <= budgets.td_decision:
        if not lambda_td_at_most(g, CARD, 2 * omega, budgets):
            return f"td(S_{index}) > 2*omega = {2 * omega}"
    if g.n <= budgets.pw_exact:
        apw = lambda_pathwidth(g, ALPHA, budgets).value
        if apw != index:
            return f"alpha-pw(S_{index}) = {apw}, expected {index}"
    elif g.n <= budgets.pw_decision:
        if lambda_pw_at_most(g, ALPHA, index - 1, budgets):
            return f"alpha-pw(S_{index}) <= {index - 1}, expected {index}"
        if not lambda_pw_at_most(g, ALPHA, index, budgets):
            return f"alpha-pw(S_{index}) > {index}, expected {index}"
    return None


def _eval_modulator_slack(inst, params, budgets) -> str | None:
    g = from_graph6(inst["g6"])
    spec = ModulatorSpec(inst["rho"], inst["c"])
    kind = CostKind.parse(inst["kind"])
    return check_modulator_slack(g, spec, kind, budgets)


def _eval_modulator_minimality(inst, params, budgets) -> str | None:
    g = from_graph6(inst["g6"])
    spec = ModulatorSpec.parse(inst["spec"])
    return check_modulator_minimality(g, spec, budgets)


def _eval_modulator_identities(inst, params, budgets) -> str | None:
    g = from_graph6(inst["g6"])
    vc, vc_witness = vertex_cover_number(g, budgets)
    fvs = feedback_vertex_number(g, budgets)[0]
    oct_ = oct_number(g, budgets)[0]
    pairs = [
        ("tw:1", vc),
        ("tw:2", fvs),
        ("chi:2", oct_),
        ("td:1", vc),
    ]
    for spec_text, expected in pairs:
        spec = ModulatorSpec.parse(spec_text)
        got, witness = modulator_number(g, spec, CARD, budgets)
        if got != expected:
            return f"mu[{spec_text}] = {got}, dedicated solver says {expected}"
        rest, _ = g.induced(g.full_mask & ~mask_of(witness))
        if not rho_at_most(rest, spec.rho, spec.c, budgets):
            return f"mu[{spec_text}] witness {witness} is not a modulator"
    uncovered = [
        (u, v) for u, v in g.edges() if u not in vc_witness and v not in vc_witness
    ]
    if uncovered:
        return f"vertex cover witness misses edge {uncovered[0]}"
    return None


def _eval_mwis(inst, params, budgets) -> str | None:
    g = from_graph6(inst["g6"])
    weights = _seeded_weights(g.n, inst["wseed"], params["weight_max"])
    wg = WeightedGraph(g, weights)
    exact = mwis_exact(wg, budgets)
    picked = mask_of(exact.vertices)
    for v in exact.vertices:
        if g.adj[v] & picked:
            return f"exact witness {exact.vertices} not independent"
    if exact.weight != sum(weights[v] for v in exact.vertices):
        return "exact witness weight mismatch"
    if inst["mode"] == "bipartite":
        other = mwis_bipartite(wg, budgets)
    else:
        k = 0
        oct_set = None
        while oct_set is None:
            oct_set = find_oct_with_bounded_alpha(g, k, budgets)
            if oct_set is None:
                k += 1
        other = mwis_via_oct(wg, k, budgets)
    picked = mask_of(other.vertices)
    for v in other.vertices:
        if g.adj[v] & picked:
            return f"{inst['mode']} witness {other.vertices} not independent"
    if other.weight != exact.weight:
        return f"{inst['mode']} weight {other.weight} != exact {exact.weight}"
    return None


def _eval_fvs_alpha_tw(inst, params, budgets) -> str | None:
    g = from_graph6(inst["g6"])
    _, s = feedback_vertex_number(g, budgets)
    s_mask = mask_of(s)
    alpha_s = SubsetAlpha(g)(s_mask)
    decomposition = tree_decomp_from_fvs(g, s_mask)
    built_cost = cost(g, decomposition, ALPHA)
    if built_cost > alpha_s + 1:
        return f"fvs decomposition cost {built_cost} > alpha(G[S])+1 = {alpha_s + 1}"
    alpha_tw = lambda_treewidth(g, ALPHA, budgets).value
    if alpha_tw > alpha_s + 1:
        return f"alpha-tw = {alpha_tw} > alpha(G[S])+1 = {alpha_s + 1}"
    return None


def _eval_delta_not_inheritable(inst, params, budgets) -> str | None:
    q = inst["q"]
    g = star(q)
    spec = ModulatorSpec("delta", 0)
    violation = check_modulator_slack(g, spec, CARD, budgets)
    if violation is None:
        mu = modulator_number(g, spec, CARD, budgets)[0]
        return (
            f"K_1,{q}: slack Delta <= mu[delta:0] + 0 unexpectedly holds "
            f"(Delta={max_degree(g)}, mu={mu})"
        )
    return None


def _eval_td_path(inst, params, budgets) -> str | None:
    n = inst["n"]
    g = path_graph(n)
    expected = n.bit_length()  # ceil(log2(n+1)) for n >= 1
    if g.n <= budgets.td_exact:
        got = lambda_treedepth(g, CARD, budgets).value
    else:
        got = 1
        while not lambda_td_at_most(g, CARD, got, budgets):
            got += 1
    if got != expected:
        return f"td(P_{n}) = {got}, expected {expected}"
    return None


def _eval_nk2_knn(inst, params, budgets) -> str | None:
    n = inst["n"]
    for label, g in ((f"{n}K2", copies(n, complete_graph(2))), (f"K_{n},{n}", complete_bipartite(n, n))):
        vc = vertex_cover_number(g, budgets)[0]
        if vc != n:
            return f"vc({label}) = {vc}, expected {n}"
        omega = clique_number(g)
        if omega != 2:
            return f"omega({label}) = {omega}, expected 2"
    return None


def _eval_alpha_chi(inst, params, budgets) -> str | None:
    from .graphs import named_graph

    g = named_graph(inst["graph"])
    value = alpha_chromatic(g, budgets).value
    if "expect" in inst and value != inst["expect"]:
        return f"alpha-chi({inst['graph']}) = {value}, expected {inst['expect']}"
    if "expect_at_least" in inst and value < inst["expect_at_least"]:
        return (
            f"alpha-chi({inst['graph']}) = {value}, expected >= {inst['expect_at_least']}"
        )
    return None


def _iso_parameters(g: Graph, budgets: Budgets) -> dict[str, int]:
    out = {
        "order": g.n,
        "alpha": independence_number(g),
        "omega": clique_number(g),
        "chi": chromatic_number(g),
        "delta": max_degree(g),
        "matching": max_matching_size(g),
        "degeneracy": degeneracy(g, CARD).value,
        "alpha-degeneracy": degeneracy(g, ALPHA).value,
        "vc": vertex_cover_number(g, budgets)[0],
        "fvs": feedback_vertex_number(g, budgets)[0],
        "oct": oct_number(g, budgets)[0],
        "alpha-chi": alpha_chromatic(g, budgets).value,
    }
    if g.n >= 1:
        out["local-alpha"] = local_independence_number(g)
    for kind in (CARD, ALPHA):
        out[f"tw-{kind.value}"] = lambda_treewidth(g, kind, budgets).value
        out[f"pw-{kind.value}"] = lambda_pathwidth(g, kind, budgets).value
        out[f"td-{kind.value}"] = lambda_treedepth(g, kind, budgets).value
    return out


def _eval_iso_invariance(inst, params, budgets) -> str | None:
    g = from_graph6(inst["g6"])
    base = _iso_parameters(g, budgets)
    for i in range(inst["relabelings"]):
        perm = random_permutation(g.n, inst["seed"] + 31 * i)
        h = g.relabel(perm)
        other = _iso_parameters(h, budgets)
        if other != base:
            diffs = {k: (base[k], other[k]) for k in base if base[k] != other.get(k)}
            return f"parameters changed under relabeling {perm}: {diffs}"
    return None


_EVALUATORS = {
    "chain-inequality": _eval_chain,
    "ramsey-binding": _eval_ramsey_binding,
    "sclaw-increment": _eval_sclaw,
    "gamma-witness": _eval_gamma,
    "modulator-slack": _eval_modulator_slack,
    "modulator-minimality": _eval_modulator_minimality,
    "modulator-identities": _eval_modulator_identities,
    "mwis-equivalence": _eval_mwis,
    "fvs-alpha-tw-bound": _eval_fvs_alpha_tw,
    "delta-not-inheritable": _eval_delta_not_inheritable,
    "td-path-formula": _eval_td_path,
    "nk2-knn-witness": _eval_nk2_knn,
    "alpha-chi-nkn": _eval_alpha_chi,
    "iso-invariance": _eval_iso_invariance,
}

CHECK_NAMES = tuple(sorted(_EVALUATORS))


def _instance_id(inst: dict) -> str:
    if "g6" in inst:
        extras = {k: v for k, v in inst.items() if k != "g6"}
        return inst["g6"] + (f" {extras}" if extras else "")
    return json.dumps(inst, sort_keys=True)


def _eval_one(args):
    name, inst, params, budgets = args
    try:
        detail = _EVALUATORS[name](inst, params, budgets)
    except Exception as exc:  # surfaced as a failure, not a crash
        detail = f"evaluator error: {type(exc).__name__}: {exc}"
    return detail


def run_check(
    spec: CheckSpec,
    budgets: Budgets = DEFAULT_BUDGETS,
    suite: SuiteParams = DEFAULT_SUITE,
    jobs: int = 1,
    log_path: str | None = None,
) -> CheckReport:
    if spec.name not in _EVALUATORS:
        raise KeyError(f"unknown check {spec.name!r}")
    params = default_params(spec.name, suite)
    params.update(spec.params)
    start = time.perf_counter()
    instances = instances_for(spec.name, params, budgets)
    tasks = [(spec.name, inst, params, budgets) for inst in instances]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            details = list(pool.map(_eval_one, tasks, chunksize=8))
    else:
        details = [_eval_one(t) for t in tasks]
    failures = [
        (_instance_id(inst), detail)
        for inst, detail in zip(instances, details)
        if detail is not None
    ]
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    meta = {}
    if spec.name == "modulator-minimality":
        meta["h"] = {
            text: empirical_h(ModulatorSpec.parse(text).rho, ModulatorSpec.parse(text).c, budgets)
            for text in params["specs"]
        }
    report = CheckReport(spec.name, len(instances), failures, elapsed_ms, meta)
    if log_path:
        with open(log_path, "w") as fh:
            for idx, (inst, detail) in enumerate(zip(instances, details)):
                fh.write(
                    json.dumps(
                        {
                            "check": spec.name,
                            "index": idx,
                            "instance": _instance_id(inst),
                            "ok": detail is None,
                            "detail": detail,
                        },
                        sort_keys=True,
                    )
                    + "\n"
                )
    return report
