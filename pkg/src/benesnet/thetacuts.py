"""Djokovic-Winkler relation, its transitive closure, and the quotient-graph cut method.

Edges ``e = uv`` and ``f = xy`` are related when
``d(u, x) + d(v, y) != d(u, y) + d(v, x)``.  The closure of this relation
partitions the edges.  Removing one class splits the graph into components;
contracting every component to a single weighted vertex gives the quotient
graph for that class.  Summing the descriptors of all the quotients recovers
the descriptors of the original graph.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .descriptors import DescriptorSet, all_descriptors
from .swgraph import StrengthWeightedGraph, all_pairs_distances

__all__ = [
    "DisjointSet",
    "ThetaPartition",
    "QuotientGraph",
    "theta_related",
    "theta_relation_blocks",
    "theta_star_classes",
    "theta_is_transitive",
    "quotient",
    "quotients",
    "cut_method_descriptors",
    "class_min_levels",
    "middle_out_order",
]


class DisjointSet:
    """Union-find over ``0 .. size - 1`` with path halving and union by size."""

    def __init__(self, size):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def groups(self):
        """Members grouped by root, groups ordered by their smallest member."""
        out = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return sorted(out.values(), key=lambda members: members[0])


@dataclass(frozen=True)
class ThetaPartition:
    class_of: tuple
    classes: tuple

    def __len__(self):
        return len(self.classes)


@dataclass(frozen=True)
class QuotientGraph:
    graph: StrengthWeightedGraph
    # members[q] = sorted original vertex indices contracted into q
    members: tuple
    class_id: int

    def weight_table(self):
        """``(component_id, w_v, s_v, member_count)`` rows."""
        g = self.graph
        return [(q, g.w_v[q], g.s_v[q], len(self.members[q])) for q in range(g.vertex_count)]


def theta_related(g, oracle, e, f):
    """Whether edges ``e = (u, v)`` and ``f = (x, y)`` are Djokovic-Winkler related."""
    for edge in (e, f):
        if not g.has_edge(*edge):
            raise KeyError(f"{edge} is not an edge")
    (u, v), (x, y) = e, f
    d = oracle.distance
    return d(u, x) + d(v, y) != d(u, y) + d(v, x)


def theta_relation_blocks(g, oracle, block=1024):
    """Yield ``(start, rows)`` where ``rows[i, j]`` says edge ``start + i`` is related to edge ``j``."""
    e = np.asarray(g.edges, dtype=np.int64).reshape(-1, 2)
    ea, eb = e[:, 0], e[:, 1]
    d = oracle.dist
    for start in range(0, len(e), block):
        a = ea[start:start + block]
        b = eb[start:start + block]
        da = d[a].astype(np.int16)
        db = d[b].astype(np.int16)
        straight = da[:, ea] + db[:, eb]
        crossed = da[:, eb] + db[:, ea]
        yield start, straight != crossed


def theta_star_classes(g, oracle=None):
    """Partition of the edges into classes of the transitive closure.

    Classes are numbered by their smallest edge index.
    """
    oracle = all_pairs_distances(g) if oracle is None else oracle
    m = g.edge_count
    dsu = DisjointSet(m)
    for start, rows in theta_relation_blocks(g, oracle):
        for i, row in enumerate(rows):
            ei = start + i
            # earlier rows already merged everything below the diagonal
            related = np.flatnonzero(row[ei + 1:])
            root = dsu.find(ei)
            for j in related.tolist():
                j += ei + 1
                if dsu.find(j) != root:
                    dsu.union(root, j)
                    root = dsu.find(ei)
    classes = tuple(tuple(c) for c in dsu.groups())
    class_of = [0] * m
    for cid, members in enumerate(classes):
        for e in members:
            class_of[e] = cid
    return ThetaPartition(tuple(class_of), classes)


def theta_is_transitive(g, oracle=None, partition=None):
    """True when the relation already equals its closure (partial-cube like)."""
    oracle = all_pairs_distances(g) if oracle is None else oracle
    partition = theta_star_classes(g, oracle) if partition is None else partition
    class_of = np.asarray(partition.class_of)
    for start, rows in theta_relation_blocks(g, oracle):
        same = class_of[start:start + rows.shape[0], None] == class_of[None, :]
        if not np.array_equal(rows, same):
            return False
    return True


def _components(vertex_count, edges):
    dsu = DisjointSet(vertex_count)
    for a, b in edges:
        dsu.union(a, b)
    comps = dsu.groups()
    comp_of = [0] * vertex_count
    for cid, members in enumerate(comps):
        for v in members:
            comp_of[v] = cid
    return comps, comp_of


def quotient(g, partition, class_id):
    """Contract the components of ``g`` minus one class into weighted vertices.

    A component's weight is the total weight of its members and its strength
    is the members' strengths plus the strengths of the edges inside it.  A
    quotient edge's strength is the total strength of the class edges it
    stands for.
    """
    if not 0 <= class_id < len(partition.classes):
        raise IndexError(f"class {class_id} out of range")
    cut = set(partition.classes[class_id])
    kept = [e for i, e in enumerate(g.edges) if i not in cut]
    comps, comp_of = _components(g.vertex_count, kept)
    w_v = [0] * len(comps)
    s_v = [0] * len(comps)
    for v in range(g.vertex_count):
        w_v[comp_of[v]] += g.w_v[v]
        s_v[comp_of[v]] += g.s_v[v]
    q_edges = {}
    for i, (a, b) in enumerate(g.edges):
        ca, cb = comp_of[a], comp_of[b]
        if i not in cut or ca == cb:
            s_v[ca] += g.s_e[i]
        else:
            key = (ca, cb) if ca < cb else (cb, ca)
            q_edges[key] = q_edges.get(key, 0) + g.s_e[i]
    keys = sorted(q_edges)
    qg = StrengthWeightedGraph(
        len(comps), keys, w_v=w_v, s_v=s_v, s_e=[q_edges[k] for k in keys]
    )
    return QuotientGraph(qg, tuple(tuple(c) for c in comps), class_id)


def quotients(g, partition=None, oracle=None):
    if partition is None:
        partition = theta_star_classes(g, oracle)
    return [quotient(g, partition, c) for c in range(len(partition.classes))]


def cut_method_descriptors(g, partition=None, oracle=None):
    """Descriptors of ``g`` as the sum of the descriptors of its quotients."""
    return sum((all_descriptors(q.graph) for q in quotients(g, partition, oracle)), DescriptorSet())


def class_min_levels(network, partition):
    """Lowest level touched by each class of a leveled network."""
    levels = network.labels.level
    edges = network.graph.edges
    return [min(levels(edges[e][0]) for e in members) for members in partition.classes]


def middle_out_order(network, partition):
    """Class ids in cut-index order: index 1 is the class nearest the middle level.

    For BB(n) and BB*(n) the class with index ``d`` touches levels no lower
    than ``n - d``, so sorting by lowest level, highest first, gives the order.
    """
    lows = class_min_levels(network, partition)
    return sorted(range(len(lows)), key=lambda c: (-lows[c], c))
