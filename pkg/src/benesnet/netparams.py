"""Network-efficiency parameters, measured on a graph or taken from closed forms."""
from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction

from .closedforms import bb_wiener, bba_wiener
from .generators import make_network
from .swgraph import distance_profile

__all__ = [
    "PARAMETER_NAMES",
    "NetworkParams",
    "measure_params",
    "formula_params",
    "comparison_sweep",
    "render_value",
]

PARAMETER_NAMES = (
    "diameter",
    "wiener",
    "avg_distance",
    "mtd",
    "throughput",
    "graph_density",
    "total_connectivity",
)


@dataclass(frozen=True)
class NetworkParams:
    """Diameter, Wiener index and the five derived efficiency ratios.

    ``wiener`` is the raw sum of distances (what the parameter tables call
    average distance); ``avg_distance`` is that sum over the number of
    vertex pairs.
    """

    diameter: int
    wiener: int
    avg_distance: Fraction
    mtd: Fraction
    throughput: Fraction
    graph_density: Fraction
    total_connectivity: Fraction

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _from_counts(vertices, edges, diameter, w):
    pairs = vertices * (vertices - 1)
    return NetworkParams(
        diameter=diameter,
        wiener=w,
        avg_distance=Fraction(2 * w, pairs),
        mtd=Fraction(w * vertices, edges),
        throughput=Fraction(edges, diameter),
        graph_density=Fraction(2 * edges, pairs),
        total_connectivity=Fraction(edges, pairs),
    )


def measure_params(g, orbits=None):
    """Parameters from BFS distances of a plain connected graph.

    ``orbits`` is passed to :func:`~benesnet.swgraph.distance_profile` to
    traverse only one vertex per automorphism orbit.
    """
    if g.vertex_count < 2:
        raise ValueError("network parameters need at least two vertices")
    w, diameter = distance_profile(g, orbits=orbits)
    return _from_counts(g.vertex_count, g.edge_count, diameter, w)


def formula_params(network, n):
    """Parameters of BB(n) (``"bb"``) or BB*(n) (``"bba"``) from the closed forms."""
    if n < 2:
        raise ValueError("closed forms need n >= 2")
    t = 2**n
    vertices = (2 * n + 1) * t
    pairs = vertices * (vertices - 1)
    if network == "bb":
        core = (10 * n**3 - 9 * n**2 + 50 * n - 69) * t + 69
        w = bb_wiener(n)
        mtd = Fraction(t * (2 * n + 1), 12 * n) * core
        nt = Fraction(2 ** (n + 1))
        gd = Fraction(8 * n, (2 * n + 1) * ((2 * n + 1) * t - 1))
        tc = Fraction(4 * n, (2 * n + 1) * ((2 * n + 1) * t - 1))
    elif network == "bba":
        core = (20 * n**3 - 36 * n**2 + 148 * n - 207) * t + 207
        w = bba_wiener(n)
        mtd = Fraction(2 ** (n + 1) * (2 * n + 1), 6 * (12 * n - 1)) * core
        nt = Fraction(2 ** (n - 2) * (12 * n - 1), n)
        gd = Fraction(12 * n - 1, (2 * n + 1) * ((2 * n + 1) * t - 1))
        tc = Fraction(12 * n - 1, 2 * (2 * n + 1) * ((2 * n + 1) * t - 1))
    else:
        raise ValueError(f"no parameter formulas for network {network!r}")
    return NetworkParams(
        diameter=2 * n,
        wiener=w,
        avg_distance=Fraction(2 * w, pairs),
        mtd=mtd,
        throughput=nt,
        graph_density=gd,
        total_connectivity=tc,
    )


def render_value(value, precision=None):
    """Exact text (``"p/q"`` or an integer), or a rounded decimal when ``precision`` is set."""
    value = Fraction(value)
    if precision is None:
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if precision == 0:
        return str(round(value))
    scaled = round(value * 10**precision)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(precision + 1, "0")
    return f"{sign}{digits[:-precision]}.{digits[-precision:]}"


def comparison_sweep(n_range, networks=("bb", "bba")):
    """Rows ``(network, n, parameter, measured, formula)`` plus BB*/BB ratio rows.

    Ratio rows use ``network = "bba/bb"`` and carry the same ratio in both
    value slots.
    """
    n_values = list(n_range)
    if not n_values:
        raise ValueError("empty sweep")
    if any(n < 2 or n > 10 for n in n_values):
        raise ValueError("sweep range must lie in [2, 10]")
    rows = []
    by_key = {}
    for name in networks:
        for n in n_values:
            net = make_network(name, n)
            measured = measure_params(net.graph, orbits=net.column_orbits())
            formula = formula_params(name, n)
            for p in PARAMETER_NAMES:
                m, f = getattr(measured, p), getattr(formula, p)
                rows.append((name, n, p, m, f))
                by_key[name, n, p] = m
    ratios = []
    if "bb" in networks and "bba" in networks:
        for n in n_values:
            for p in PARAMETER_NAMES:
                r = Fraction(by_key["bba", n, p]) / by_key["bb", n, p]
                ratios.append(("bba/bb", n, p, r, r))
    return rows, ratios
