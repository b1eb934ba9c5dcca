"""Butterfly, Benes and augmented Benes networks, and the clustered clique family.

Network vertices are labelled ``(j, k)``: ``j`` is an ``n``-bit column number
and ``k`` the level.  Index of ``(j, k)`` is ``k * 2**n + j``.  Bit ``b`` of
``j`` is ``(j >> b) & 1``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .swgraph import StrengthWeightedGraph

__all__ = [
    "NodeLabel",
    "LabelMap",
    "Network",
    "ClusterFamilyParams",
    "ClusterFamily",
    "make_butterfly",
    "make_benes",
    "make_augmented_benes",
    "make_network",
    "make_cluster_family",
    "butterfly_counts",
    "benes_counts",
    "augmented_benes_counts",
    "benes_swap_bit",
    "augmented_level_bits",
]


@dataclass(frozen=True, order=True)
class NodeLabel:
    j: int
    k: int

    def __iter__(self):
        yield self.j
        yield self.k

    def render(self, n):
        """``"<binary j>:<k>"``, with ``j`` zero-padded to ``n`` bits."""
        return f"{self.j:0{n}b}:{self.k}"

    @classmethod
    def parse(cls, text, n=None):
        """Inverse of :meth:`render`; also accepts ``"j,k"`` with decimal ``j``."""
        text = text.strip()
        if ":" in text:
            bits, k = text.split(":")
            if n is not None and len(bits) != n:
                raise ValueError(f"label {text!r} needs {n} bits")
            return cls(int(bits, 2), int(k))
        if "," in text:
            j, k = text.split(",")
            j = j.strip()
            if n is not None and len(j) == n and set(j) <= {"0", "1"}:
                return cls(int(j, 2), int(k))
            return cls(int(j), int(k))
        raise ValueError(f"cannot parse node label {text!r}")


@dataclass(frozen=True)
class LabelMap:
    """Bijection between ``(j, k)`` labels and dense vertex indices."""

    n: int
    levels: int

    @property
    def columns(self):
        return 1 << self.n

    def index(self, label):
        j, k = label
        if not (0 <= j < self.columns and 0 <= k < self.levels):
            raise ValueError(f"label {label} outside the network")
        return k * self.columns + j

    def label(self, index):
        if not (0 <= index < self.columns * self.levels):
            raise ValueError(f"index {index} outside the network")
        k, j = divmod(index, self.columns)
        return NodeLabel(j, k)

    def level(self, index):
        return index // self.columns

    def render(self, index):
        return self.label(index).render(self.n)


@dataclass(frozen=True)
class Network:
    """A generated network: its plain graph plus the label bijection."""

    name: str
    n: int
    graph: StrengthWeightedGraph
    labels: LabelMap

    @property
    def boundary_levels(self):
        return (0, self.labels.levels - 1)

    def column_orbits(self):
        """``(representative, size)`` per level.

        XOR-ing every column number with a constant preserves all three
        adjacency rules, so each level is one orbit under those translations.
        """
        cols = self.labels.columns
        return [(k * cols, cols) for k in range(self.labels.levels)]


def _check_n(n):
    if int(n) != n or n < 1:
        raise ValueError(f"network dimension must be a positive integer, got {n!r}")
    return int(n)


def butterfly_counts(n):
    return (n + 1) << n, n << (n + 1)


def benes_counts(n):
    return (2 * n + 1) << n, n << (n + 2)


def augmented_benes_counts(n):
    return (2 * n + 1) << n, ((12 * n - 1) << n) // 2


def benes_swap_bit(n, k):
    """Bit flipped by the cross edges between levels ``k`` and ``k + 1``."""
    return k if k < n else 2 * n - k - 1


def augmented_level_bits(n, k):
    """Bits whose flip joins two vertices on level ``k`` in BB*(n).

    Bit indices outside ``[0, n)`` are dropped, so levels ``0``, ``n`` and
    ``2n`` get one matching and every other level two.
    """
    bits = (k, k - 1) if k <= n else (2 * n - k, 2 * n - k - 1)
    return tuple(b for b in bits if 0 <= b < n)


def _leveled_edges(n, levels, swap_bit):
    cols = 1 << n
    edges = []
    for k in range(levels - 1):
        bit = 1 << swap_bit(k)
        for j in range(cols):
            edges.append((k * cols + j, (k + 1) * cols + j))
            edges.append((k * cols + j, (k + 1) * cols + (j ^ bit)))
    return edges


def make_butterfly(n):
    n = _check_n(n)
    edges = _leveled_edges(n, n + 1, lambda k: k)
    graph = StrengthWeightedGraph.plain((n + 1) << n, edges)
    return Network("bf", n, graph, LabelMap(n, n + 1))


def make_benes(n):
    n = _check_n(n)
    edges = _leveled_edges(n, 2 * n + 1, lambda k: benes_swap_bit(n, k))
    graph = StrengthWeightedGraph.plain((2 * n + 1) << n, edges)
    return Network("bb", n, graph, LabelMap(n, 2 * n + 1))


def make_augmented_benes(n):
    n = _check_n(n)
    cols = 1 << n
    edges = _leveled_edges(n, 2 * n + 1, lambda k: benes_swap_bit(n, k))
    for k in range(2 * n + 1):
        for b in augmented_level_bits(n, k):
            for j in range(cols):
                partner = j ^ (1 << b)
                if j < partner:
                    edges.append((k * cols + j, k * cols + partner))
    graph = StrengthWeightedGraph.plain((2 * n + 1) << n, edges)
    return Network("bba", n, graph, LabelMap(n, 2 * n + 1))


_MAKERS = {"bf": make_butterfly, "bb": make_benes, "bba": make_augmented_benes}


def make_network(name, n):
    """Build ``"bf"``, ``"bb"`` or ``"bba"`` of dimension ``n``."""
    try:
        maker = _MAKERS[name]
    except KeyError:
        raise ValueError(f"unknown network {name!r}; choose from {sorted(_MAKERS)}") from None
    return maker(n)


@dataclass(frozen=True)
class ClusterFamilyParams:
    m: int
    a: int
    b: int
    alpha: int = 1
    beta: int = 1

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("clique size m must be at least 2")
        if self.a < 1 or self.b < 1:
            raise ValueError("need at least one X-clique and one Y-clique")
        if self.alpha < 1 or self.beta < 1:
            raise ValueError("vertex weights must be positive")


@dataclass(frozen=True)
class ClusterFamily:
    params: ClusterFamilyParams
    graph: StrengthWeightedGraph
    # cluster[v] = ("X", i) or ("Y", j), zero-based
    cluster: tuple


def make_cluster_family(p):
    """``a`` X-cliques and ``b`` Y-cliques of size ``m``, every X joined to every Y.

    X-vertices come first (clique by clique), then Y-vertices.
    """
    m, a, b = p.m, p.a, p.b
    cluster = [("X", i) for i in range(a) for _ in range(m)]
    cluster += [("Y", j) for j in range(b) for _ in range(m)]
    nx_ = a * m
    total = nx_ + b * m
    edges = []
    for u in range(total):
        for v in range(u + 1, total):
            same_clique = cluster[u] == cluster[v]
            cross = cluster[u][0] != cluster[v][0]
            if same_clique or cross:
                edges.append((u, v))
    w_v = [p.alpha] * nx_ + [p.beta] * (b * m)
    graph = StrengthWeightedGraph(total, edges, w_v=w_v)
    return ClusterFamily(p, graph, tuple(cluster))
