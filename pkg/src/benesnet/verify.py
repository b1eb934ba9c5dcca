"""Cross-checks run by ``benesnet verify``.

Each check returns a :class:`CheckResult`; a failing check carries the values
that disagreed.  Functions reach the closed forms through the module object so
tests can swap a formula out and watch the check fail.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import closedforms, descriptors, generators, netparams, thetacuts
from .broadcast import boundary_sources, broadcast_from, check_trace, lower_bound
from .swgraph import all_pairs_distances

__all__ = ["CheckResult", "run_checks"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f"  -- {self.detail}" if self.detail and not self.passed else "")


def _diff(a, b):
    da, db = a.as_dict(), b.as_dict()
    return {k: (da[k], db[k]) for k in da if da[k] != db[k]}


def check_descriptors(name, n, method="all"):
    g = generators.make_network(name, n).graph
    brute = descriptors.all_descriptors(g)
    results = []
    closed = closedforms.closed_forms(name, n)
    bad = _diff(brute, closed)
    results.append(
        CheckResult(
            f"{name}({n}) brute == closed",
            not bad,
            "; ".join(f"{k}: brute={v[0]} closed={v[1]}" for k, v in bad.items()),
        )
    )
    if method == "all":
        cuts = thetacuts.cut_method_descriptors(g)
        bad = _diff(brute, cuts)
        results.append(
            CheckResult(
                f"{name}({n}) brute == cuts",
                not bad,
                "; ".join(f"{k}: brute={v[0]} cuts={v[1]}" for k, v in bad.items()),
            )
        )
    return results


def check_structure(name, n):
    net = generators.make_network(name, n)
    g = net.graph
    counts = {
        "bf": generators.butterfly_counts,
        "bb": generators.benes_counts,
        "bba": generators.augmented_benes_counts,
    }[name](n)
    got = (g.vertex_count, g.edge_count)
    out = [CheckResult(f"{name}({n}) vertex/edge counts", got == counts, f"got {got}, expected {counts}")]
    if name in ("bb", "bba"):
        oracle = all_pairs_distances(g)
        out.append(
            CheckResult(f"{name}({n}) diameter == 2n", oracle.diameter == 2 * n, f"got {oracle.diameter}")
        )
        part = thetacuts.theta_star_classes(g, oracle)
        out.append(CheckResult(f"{name}({n}) has n cut classes", len(part) == n, f"got {len(part)}"))
    return out


def check_params(name, n):
    measured = netparams.measure_params(generators.make_network(name, n).graph)
    formula = netparams.formula_params(name, n)
    bad = {k: (v, formula.as_dict()[k]) for k, v in measured.as_dict().items() if v != formula.as_dict()[k]}
    ok = not bad and measured.graph_density == 2 * measured.total_connectivity
    return [CheckResult(f"{name}({n}) measured params == formulas", ok, str(bad))]


def check_dominance(n):
    bb = netparams.formula_params("bb", n)
    bba = netparams.formula_params("bba", n)
    ok = (
        bba.wiener < bb.wiener
        and bba.mtd < bb.mtd
        and bba.throughput > bb.throughput
        and bba.graph_density > bb.graph_density
        and bba.total_connectivity > bb.total_connectivity
    )
    return [CheckResult(f"BB*({n}) dominates BB({n})", ok)]


def check_cluster_wiener():
    bad = []
    for m, a, b, al, be in itertools.product((2, 3, 4), (1, 2, 3), (1, 2, 3), (1, 2), (1, 2)):
        p = generators.ClusterFamilyParams(m, a, b, al, be)
        brute = descriptors.wiener(generators.make_cluster_family(p).graph)
        closed = closedforms.cluster_wiener(p)
        if brute != closed:
            bad.append(f"{p}: brute={brute} closed={closed}")
    return [CheckResult("clustered clique Wiener formula (108-case grid)", not bad, "; ".join(bad[:3]))]


def check_broadcast(n):
    net = generators.make_augmented_benes(n)
    oracle = all_pairs_distances(net.graph)
    problems = []
    for s in boundary_sources(net):
        trace = broadcast_from(net, s, oracle)
        ecc = oracle.eccentricity(s)
        bound = ecc + (2 if n % 2 == 0 else 3)
        rounds = trace.total_rounds
        if n == 2 and rounds != bound:
            problems.append(f"{net.labels.render(s)}: {rounds} rounds, expected {bound}")
        elif rounds > bound:
            problems.append(f"{net.labels.render(s)}: {rounds} rounds > {bound}")
        if rounds < lower_bound(net.graph.vertex_count, ecc):
            problems.append(f"{net.labels.render(s)}: beats the lower bound")
        problems += check_trace(net.graph, trace)
    return [CheckResult(f"BB*({n}) broadcast rounds", not problems, "; ".join(problems[:3]))]


def run_checks(n_values=range(2, 6), method="all"):
    """Every check for the given dimensions.

    ``method="all"`` runs the three-way descriptor agreement;
    ``method="closed"`` compares brute force with the closed forms only and
    skips the cut method and the structural checks.
    """
    n_values = list(n_values)
    if not n_values:
        raise ValueError("empty sweep")
    results = []
    for n in n_values:
        for name in ("bb", "bba"):
            results += check_descriptors(name, n, method)
            if method == "all":
                results += check_structure(name, n)
                results += check_params(name, n)
        if method == "all":
            results += check_dominance(n)
    if method == "all":
        results += check_cluster_wiener()
        for n in (2, 3):
            results += check_broadcast(n)
    return results
