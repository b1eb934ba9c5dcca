"""Strength-weighted graphs and the distance quantities every descriptor needs.

A strength-weighted graph carries three integer labelings on top of a simple
connected graph: a vertex weight ``w_v``, a vertex strength ``s_v`` and an edge
strength ``s_e``.  A plain graph has ``w_v = 1``, ``s_v = 0`` and ``s_e = 1``.

Vertices are the dense indices ``0 .. vertex_count - 1``.  Edges are stored as
``(u, v)`` tuples with ``u < v``, in the order given to the constructor.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

__all__ = [
    "GraphNotConnectedError",
    "StrengthWeightedGraph",
    "DistanceOracle",
    "EdgeSideCounts",
    "all_pairs_distances",
    "distance_profile",
    "vertex_to_edge_distance",
    "edge_side_counts",
    "side_count_arrays",
]

# Side sums are accumulated in int64; anything at or above this is refused.
_INT64_SAFE = 1 << 62


class GraphNotConnectedError(ValueError):
    """Raised when an operation needs a connected graph and did not get one."""

    def __init__(self, message="graph not connected"):
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class StrengthWeightedGraph:
    vertex_count: int
    edges: tuple
    w_v: tuple = None
    s_v: tuple = None
    s_e: tuple = None
    _edge_index: dict = field(init=False, repr=False)

    def __post_init__(self):
        n = int(self.vertex_count)
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        edges = []
        seen = {}
        for i, (a, b) in enumerate(self.edges):
            a, b = int(a), int(b)
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) has an endpoint outside [0, {n})")
            e = (a, b) if a < b else (b, a)
            if e in seen:
                raise ValueError(f"repeated edge {e}")
            seen[e] = i
            edges.append(e)
        m = len(edges)

        def labels(values, default, count, name):
            if values is None:
                return (default,) * count
            values = tuple(int(x) for x in values)
            if len(values) != count:
                raise ValueError(f"{name} has {len(values)} entries, expected {count}")
            if any(x < 0 for x in values):
                raise ValueError(f"{name} must be non-negative")
            return values

        object.__setattr__(self, "vertex_count", n)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "w_v", labels(self.w_v, 1, n, "w_v"))
        object.__setattr__(self, "s_v", labels(self.s_v, 0, n, "s_v"))
        object.__setattr__(self, "s_e", labels(self.s_e, 1, m, "s_e"))
        object.__setattr__(self, "_edge_index", seen)
        if not self._connected():
            raise GraphNotConnectedError()

    @classmethod
    def plain(cls, vertex_count, edges):
        return cls(vertex_count, tuple(edges))

    @property
    def edge_count(self):
        return len(self.edges)

    @property
    def is_plain(self):
        return (
            all(x == 1 for x in self.w_v)
            and all(x == 0 for x in self.s_v)
            and all(x == 1 for x in self.s_e)
        )

    @cached_property
    def adjacency(self):
        adj = [[] for _ in range(self.vertex_count)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(nb)) for nb in adj)

    def edge_id(self, u, v):
        """Index of edge ``uv`` in :attr:`edges`; ``KeyError`` if absent."""
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_index[key]
        except KeyError:
            raise KeyError(f"({u}, {v}) is not an edge") from None

    def has_edge(self, u, v):
        key = (u, v) if u < v else (v, u)
        return key in self._edge_index

    def degrees(self):
        return [len(nb) for nb in self.adjacency]

    def with_weights(self, w_v=None, s_v=None, s_e=None):
        """Copy of this graph with some of the labelings replaced."""
        return StrengthWeightedGraph(
            self.vertex_count,
            self.edges,
            self.w_v if w_v is None else w_v,
            self.s_v if s_v is None else s_v,
            self.s_e if s_e is None else s_e,
        )

    def _connected(self):
        adj = [[] for _ in range(self.vertex_count)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = [False] * self.vertex_count
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    count += 1
                    queue.append(u)
        return count == self.vertex_count

    def __repr__(self):
        kind = "plain" if self.is_plain else "weighted"
        return (
            f"StrengthWeightedGraph({kind}, vertices={self.vertex_count}, "
            f"edges={self.edge_count})"
        )


class DistanceOracle:
    """All-pairs shortest-path table of a connected graph with unit edge lengths.

    ``dist[u, v]`` is a small unsigned integer matrix; ``distance(u, v)``
    returns a Python ``int``.
    """

    def __init__(self, dist):
        self.dist = dist

    def __getitem__(self, pair):
        return self.dist[pair]

    def distance(self, u, v):
        return int(self.dist[u, v])

    @property
    def vertex_count(self):
        return self.dist.shape[0]

    @property
    def diameter(self):
        return int(self.dist.max())

    def eccentricities(self):
        return self.dist.max(axis=1)

    def eccentricity(self, v):
        return int(self.dist[v].max())


def _bfs_blocks(g, block, sources=None):
    n = g.vertex_count
    if g.edge_count == 0:
        if n != 1:
            raise GraphNotConnectedError()
        yield np.arange(1), np.zeros((1, 1), dtype=np.uint16)
        return
    e = np.asarray(g.edges, dtype=np.int64)
    adj = csr_matrix(
        (np.ones(len(e), dtype=np.int8), (e[:, 0], e[:, 1])), shape=(n, n)
    )
    sources = np.arange(n) if sources is None else np.asarray(sources, dtype=np.int64)
    for start in range(0, len(sources), block):
        rows = sources[start:start + block]
        part = shortest_path(adj, directed=False, unweighted=True, indices=rows)
        if not np.isfinite(part).all():
            raise GraphNotConnectedError()
        yield rows, part.astype(np.uint16)


def all_pairs_distances(g, block=512):
    """BFS distance table of ``g``.

    One unweighted traversal per source vertex, run in blocks of ``block``
    sources to bound the float scratch space.
    """
    n = g.vertex_count
    dist = np.empty((n, n), dtype=np.uint16)
    for rows, part in _bfs_blocks(g, block):
        dist[rows] = part
    return DistanceOracle(dist)


def distance_profile(g, block=512, orbits=None):
    """``(wiener, diameter)`` without keeping the full distance table.

    ``orbits`` optionally lists ``(representative, size)`` pairs for vertex
    orbits of an automorphism group of a graph with uniform ``w_v``; only the
    representatives are traversed.
    """
    w = np.asarray(g.w_v, dtype=np.int64)
    if int(w.sum()) * g.vertex_count >= 1 << 62:
        raise OverflowError("vertex weights too large for the streaming Wiener sum")
    if orbits is None:
        reps, mult = None, None
    else:
        if len(set(g.w_v)) != 1:
            raise ValueError("orbit reduction needs uniform vertex weights")
        if sum(size for _, size in orbits) != g.vertex_count:
            raise ValueError("orbit sizes must add up to the vertex count")
        reps = [r for r, _ in orbits]
        mult = dict(orbits)
    total = 0
    diameter = 0
    for rows, part in _bfs_blocks(g, block, reps):
        diameter = max(diameter, int(part.max()))
        row = part.astype(np.int64) @ w
        for r, x in zip(rows.tolist(), row.tolist()):
            total += g.w_v[r] * int(x) * (1 if mult is None else mult[r])
    return total // 2, diameter


def vertex_to_edge_distance(oracle, mu, edge):
    """Distance from vertex ``mu`` to the nearer endpoint of ``edge``."""
    k, v = edge
    return min(oracle.distance(mu, k), oracle.distance(mu, v))


@dataclass(frozen=True)
class EdgeSideCounts:
    n_mu: int
    n_eta: int
    m_mu: int
    m_eta: int


def edge_side_counts(g, oracle, edge):
    """Weighted sizes of the two sides of ``edge = (mu, eta)``.

    ``n_mu`` sums ``w_v`` over vertices strictly closer to ``mu`` than to
    ``eta``; ``m_mu`` sums ``s_v`` over those vertices plus ``s_e`` over edges
    strictly closer to ``mu``.  Equidistant items count on neither side.
    """
    mu, eta = edge
    if not g.has_edge(mu, eta):
        raise KeyError(f"({mu}, {eta}) is not an edge")
    d = oracle.dist
    du = d[mu].astype(np.int64)
    de = d[eta].astype(np.int64)
    w = np.asarray(g.w_v, dtype=object)
    sv = np.asarray(g.s_v, dtype=object)
    closer_mu = du < de
    closer_eta = de < du
    n_mu = int(w[closer_mu].sum()) if closer_mu.any() else 0
    n_eta = int(w[closer_eta].sum()) if closer_eta.any() else 0
    m_mu = int(sv[closer_mu].sum()) if closer_mu.any() else 0
    m_eta = int(sv[closer_eta].sum()) if closer_eta.any() else 0
    for (k, v), strength in zip(g.edges, g.s_e):
        a = min(du[k], du[v])
        b = min(de[k], de[v])
        if a < b:
            m_mu += strength
        elif b < a:
            m_eta += strength
    return EdgeSideCounts(n_mu, n_eta, m_mu, m_eta)


def _check_range(g):
    total_w = sum(g.w_v)
    total_m = sum(g.s_v) + sum(g.s_e)
    if total_w >= _INT64_SAFE or total_m >= _INT64_SAFE:
        raise OverflowError(
            "vertex weights or strengths too large for the vectorized side counts"
        )


def side_count_arrays(g, oracle, block=256):
    """``(n_mu, n_eta, m_mu, m_eta)`` for every edge, as int64 arrays.

    Edge ``i`` is oriented as ``g.edges[i] = (mu, eta)``.  Processes
    ``block`` edges at a time against the whole distance table.
    """
    _check_range(g)
    m = g.edge_count
    e = np.asarray(g.edges, dtype=np.int64).reshape(m, 2)
    ea, eb = e[:, 0], e[:, 1]
    w = np.asarray(g.w_v, dtype=np.int64)
    sv = np.asarray(g.s_v, dtype=np.int64)
    se = np.asarray(g.s_e, dtype=np.int64)
    out = np.zeros((4, m), dtype=np.int64)
    d = oracle.dist
    for start in range(0, m, block):
        stop = min(start + block, m)
        du = d[ea[start:stop]]
        de = d[eb[start:stop]]
        cu = du < de
        ce = de < du
        out[0, start:stop] = cu @ w
        out[1, start:stop] = ce @ w
        out[2, start:stop] = cu @ sv
        out[3, start:stop] = ce @ sv
        # vertex-to-edge distance: nearer endpoint
        vu = np.minimum(du[:, ea], du[:, eb])
        ve = np.minimum(de[:, ea], de[:, eb])
        out[2, start:stop] += (vu < ve) @ se
        out[3, start:stop] += (ve < vu) @ se
    return out[0], out[1], out[2], out[3]
