"""Single-source broadcasting under a Furthest-Distance-First discipline.

Rounds are synchronous.  In each round every informed vertex with an
uninformed neighbour sends to exactly one of them, and a vertex receives from
at most one sender.  A sender picks the uninformed neighbour ``u`` that leads
to the longest shortest-path continuation away from the source:

    height(u) = max{ d(u, x) : d(s, x) = d(s, u) + d(u, x) }

Ties go to the larger eccentricity of ``u``, then the larger ``d(s, u)``,
then the smaller rank.  Senders act in increasing rank order, and a
neighbour claimed earlier in the round is skipped.

The rank defaults to the vertex index.  On a leveled network
:func:`relative_rank` ranks vertices by their label relative to the source
(column XOR source column, levels mirrored for a source on the top level),
so sources related by a column translation or the level mirror produce
traces that map onto each other.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .generators import NodeLabel, make_augmented_benes
from .swgraph import all_pairs_distances

__all__ = [
    "BroadcastTrace",
    "TreeReport",
    "eccentricity",
    "geodesic_heights",
    "simulate_fdf",
    "relative_rank",
    "broadcast_from",
    "check_trace",
    "check_tree_conditions",
    "tree_profile",
    "broadcast_sweep",
    "boundary_sources",
    "round_bound",
    "lower_bound",
    "source_index",
]


@dataclass(frozen=True)
class BroadcastTrace:
    source: int
    rounds: tuple  # rounds[r] = ((sender, receiver), ...)
    parent: dict  # receiver -> sender; the source maps to None

    @property
    def total_rounds(self):
        return len(self.rounds)

    @property
    def last_informed(self):
        return self.rounds[-1][-1][1] if self.rounds else self.source

    def children(self):
        out = {v: [] for v in self.parent}
        for child, par in self.parent.items():
            if par is not None:
                out[par].append(child)
        return out

    def depth(self):
        depth = {self.source: 0}
        for r in self.rounds:
            for sender, receiver in r:
                depth[receiver] = depth[sender] + 1
        return depth


def eccentricity(g, v, oracle=None):
    oracle = all_pairs_distances(g) if oracle is None else oracle
    return oracle.eccentricity(v)


def geodesic_heights(oracle, source):
    """Per-vertex length of the longest geodesic continuing away from ``source``."""
    d = oracle.dist.astype(np.int32)
    ds = d[source]
    on_geodesic = ds[None, :] == ds[:, None] + d
    return np.where(on_geodesic, d, -1).max(axis=1)


def relative_rank(network, source):
    """Per-vertex tie-break rank taken from labels relative to ``source``."""
    labels = network.labels
    top = labels.levels - 1
    src = labels.label(source)
    mirror = src.k == top and top > 0
    cols = labels.columns
    rank = []
    for v in range(network.graph.vertex_count):
        j, k = labels.label(v)
        rank.append((top - k if mirror else k) * cols + (j ^ src.j))
    return rank


def simulate_fdf(g, source, oracle=None, rank=None):
    """Broadcast from vertex ``source`` until every vertex is informed."""
    if not 0 <= source < g.vertex_count:
        raise ValueError(f"source {source} is not a vertex")
    oracle = all_pairs_distances(g) if oracle is None else oracle
    height = geodesic_heights(oracle, source).tolist()
    ecc = oracle.eccentricities().tolist()
    from_source = oracle.dist[source].tolist()
    rank = list(range(g.vertex_count)) if rank is None else list(rank)

    def key(u):
        return (-height[u], -ecc[u], -from_source[u], rank[u])

    adj = g.adjacency
    informed = [False] * g.vertex_count
    informed[source] = True
    order = [source]
    parent = {source: None}
    rounds = []
    remaining = g.vertex_count - 1
    while remaining:
        claimed = set()
        sends = []
        for v in sorted(order, key=rank.__getitem__):
            options = [u for u in adj[v] if not informed[u] and u not in claimed]
            if options:
                u = min(options, key=key)
                claimed.add(u)
                sends.append((v, u))
        if not sends:
            raise RuntimeError("broadcast stalled; graph not connected")
        for v, u in sends:
            informed[u] = True
            parent[u] = v
            order.append(u)
        remaining -= len(sends)
        rounds.append(tuple(sends))
    return BroadcastTrace(source, tuple(rounds), parent)


def broadcast_from(network, source, oracle=None):
    """FDF broadcast on a generated network from a label, ``"j,k"`` text or index."""
    s = source if isinstance(source, int) else source_index(network, source)
    return simulate_fdf(network.graph, s, oracle, relative_rank(network, s))


def check_trace(g, trace):
    """List of violated validity conditions; empty when the trace is valid."""
    problems = []
    informed = {trace.source}
    for r, sends in enumerate(trace.rounds, 1):
        senders = [v for v, _ in sends]
        if len(senders) != len(set(senders)):
            problems.append(f"round {r}: a vertex sent twice")
        receivers = [u for _, u in sends]
        if len(receivers) != len(set(receivers)):
            problems.append(f"round {r}: a vertex received twice")
        for v, u in sends:
            if v not in informed:
                problems.append(f"round {r}: sender {v} was not informed")
            if u in informed:
                problems.append(f"round {r}: receiver {u} was already informed")
            if not g.has_edge(v, u):
                problems.append(f"round {r}: {v}-{u} is not an edge")
        informed.update(receivers)
    if len(informed) != g.vertex_count:
        problems.append("not every vertex was informed")
    if len(trace.parent) != g.vertex_count or sum(p is None for p in trace.parent.values()) != 1:
        problems.append("parent map is not a spanning tree")
    return problems


@dataclass(frozen=True)
class TreeReport:
    source_on_boundary: bool
    source_children: int
    source_has_three_children: bool
    last_vertex: int
    last_parent_children: int
    last_parent_has_two_children: bool
    last_on_boundary: bool

    @property
    def all_hold(self):
        return (
            self.source_on_boundary
            and self.source_has_three_children
            and self.last_parent_has_two_children
            and self.last_on_boundary
        )


def check_tree_conditions(network, trace):
    """Evaluate the three broadcast-tree conditions on a finished trace.

    (i) the source sits on level 0 or 2n; (ii) the source has exactly three
    children; (iii) the last informed vertex sits on level 0 or 2n and its
    parent has exactly two children.
    """
    boundary = set(network.boundary_levels)
    level = network.labels.level
    kids = trace.children()
    last = trace.last_informed
    last_parent = trace.parent[last]
    n_last = len(kids[last_parent]) if last_parent is not None else 0
    return TreeReport(
        source_on_boundary=level(trace.source) in boundary,
        source_children=len(kids[trace.source]),
        source_has_three_children=len(kids[trace.source]) == 3,
        last_vertex=last,
        last_parent_children=n_last,
        last_parent_has_two_children=n_last == 2,
        last_on_boundary=level(last) in boundary,
    )


def tree_profile(trace):
    """Sorted multiset of ``(depth, child_count)`` over the tree's vertices."""
    depth = trace.depth()
    kids = trace.children()
    return sorted(Counter((depth[v], len(kids[v])) for v in trace.parent).items())


def boundary_sources(network):
    cols = network.labels.columns
    return [k * cols + j for k in network.boundary_levels for j in range(cols)]


def round_bound(n, ecc):
    return ecc + (2 if n % 2 == 0 else 3)


def broadcast_sweep(n_range, sources="boundary-levels"):
    """One row per (n, source) on BB*(n).

    Row: ``(n, source_j, source_k, ecc, rounds, bound, meets_bound)``.
    """
    n_values = list(n_range)
    if not n_values:
        raise ValueError("empty sweep")
    if any(n < 1 or n > 6 for n in n_values):
        raise ValueError("broadcast sweep range must lie in [1, 6]")
    if sources not in ("boundary-levels", "all"):
        raise ValueError("sources must be 'boundary-levels' or 'all'")
    rows = []
    for n in n_values:
        net = make_augmented_benes(n)
        oracle = all_pairs_distances(net.graph)
        chosen = boundary_sources(net) if sources == "boundary-levels" else range(net.graph.vertex_count)
        for s in chosen:
            trace = broadcast_from(net, s, oracle)
            ecc = oracle.eccentricity(s)
            bound = round_bound(n, ecc)
            label = net.labels.label(s)
            rows.append((n, label.j, label.k, ecc, trace.total_rounds, bound, trace.total_rounds <= bound))
    return rows


def lower_bound(vertex_count, ecc):
    """No schedule finishes before the farthest vertex is reached or before
    the informed set can double up to ``vertex_count``."""
    return max(ecc, math.ceil(math.log2(vertex_count))) if vertex_count > 1 else 0


def source_index(network, label):
    """Vertex index for a ``NodeLabel`` or ``(j, k)`` pair, validated."""
    if isinstance(label, str):
        label = NodeLabel.parse(label, network.n)
    return network.labels.index(tuple(label))
