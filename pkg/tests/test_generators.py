import pytest

from benesnet.generators import (
    ClusterFamilyParams,
    LabelMap,
    NodeLabel,
    augmented_benes_counts,
    augmented_level_bits,
    benes_counts,
    butterfly_counts,
    make_augmented_benes,
    make_benes,
    make_butterfly,
    make_cluster_family,
    make_network,
)


@pytest.mark.parametrize("n", range(1, 9))
def test_counts(n):
    t = 2**n
    assert butterfly_counts(n) == ((n + 1) * t, n * 2 * t)
    assert benes_counts(n) == ((2 * n + 1) * t, n * 4 * t)
    assert augmented_benes_counts(n) == ((2 * n + 1) * t, t * (12 * n - 1) // 2)
    for maker, counts in (
        (make_butterfly, butterfly_counts),
        (make_benes, benes_counts),
        (make_augmented_benes, augmented_benes_counts),
    ):
        g = maker(n).graph
        assert (g.vertex_count, g.edge_count) == counts(n)


def test_small_instances():
    assert benes_counts(1) == (6, 8)
    assert butterfly_counts(2) == (12, 16)
    assert augmented_benes_counts(2) == (20, 46)


def test_benes_degrees():
    net = make_benes(3)
    level = net.labels.level
    for v, deg in enumerate(net.graph.degrees()):
        assert deg == (2 if level(v) in net.boundary_levels else 4)


def test_augmented_degrees():
    n = 3
    net = make_augmented_benes(n)
    level = net.labels.level
    for v, deg in enumerate(net.graph.degrees()):
        k = level(v)
        base = 2 if k in net.boundary_levels else 4
        assert deg == base + len(augmented_level_bits(n, k))


def test_level_bits():
    n = 3
    assert augmented_level_bits(n, 0) == (0,)
    assert augmented_level_bits(n, 1) == (1, 0)
    assert augmented_level_bits(n, n) == (2,)
    assert augmented_level_bits(n, 2 * n) == (0,)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_benes_halves_are_butterflies(n):
    """Levels 0..n carry exactly the butterfly edges; the top half mirrors them."""
    bf = set(make_butterfly(n).graph.edges)
    cols = 2**n
    bb = make_benes(n).graph.edges
    lower = {e for e in bb if e[1] < (n + 1) * cols}
    assert lower == bf

    top = 2 * n

    def mirror(v):
        k, j = divmod(v, cols)
        return (top - k) * cols + j

    upper = {tuple(sorted((mirror(a), mirror(b)))) for a, b in bb if a >= n * cols}
    assert upper == bf


@pytest.mark.parametrize("maker", [make_benes, make_augmented_benes, make_butterfly])
def test_column_xor_is_automorphism(maker):
    net = maker(3)
    cols = net.labels.columns
    edges = set(net.graph.edges)
    for c in range(cols):
        moved = set()
        for a, b in edges:
            fa = (a // cols) * cols + ((a % cols) ^ c)
            fb = (b // cols) * cols + ((b % cols) ^ c)
            moved.add((min(fa, fb), max(fa, fb)))
        assert moved == edges


def test_column_orbits():
    net = make_benes(2)
    assert net.column_orbits() == [(k * 4, 4) for k in range(5)]


def test_labels_roundtrip():
    labels = LabelMap(3, 7)
    for v in range(8 * 7):
        assert labels.index(labels.label(v)) == v
        assert NodeLabel.parse(labels.render(v), 3) == labels.label(v)
    assert labels.render(8 * 2 + 5) == "101:2"


def test_label_parse_forms():
    assert NodeLabel.parse("5,2", 3) == NodeLabel(5, 2)
    assert NodeLabel.parse("101,2", 3) == NodeLabel(5, 2)
    assert NodeLabel.parse("01:0", 2) == NodeLabel(1, 0)
    with pytest.raises(ValueError):
        NodeLabel.parse("1:0", 2)
    with pytest.raises(ValueError):
        NodeLabel.parse("abc", 2)


def test_label_out_of_range():
    labels = LabelMap(2, 5)
    with pytest.raises(ValueError):
        labels.index((4, 0))
    with pytest.raises(ValueError):
        labels.index((0, 5))
    with pytest.raises(ValueError):
        labels.label(20)


@pytest.mark.parametrize("bad", [0, -1, 1.5])
def test_invalid_dimension(bad):
    with pytest.raises(ValueError):
        make_benes(bad)


def test_unknown_network():
    with pytest.raises(ValueError):
        make_network("hypercube", 2)


def test_cluster_family_structure():
    p = ClusterFamilyParams(3, 2, 2, alpha=2, beta=1)
    fam = make_cluster_family(p)
    g = fam.graph
    assert g.vertex_count == 12
    # own clique (m-1) plus every vertex of the other side (b*m or a*m)
    for v, deg in enumerate(g.degrees()):
        side = fam.cluster[v][0]
        other = p.b * p.m if side == "X" else p.a * p.m
        assert deg == p.m - 1 + other
    assert g.w_v == (2,) * 6 + (1,) * 6
    assert all(s == 0 for s in g.s_v) and all(s == 1 for s in g.s_e)
    # no edges between different cliques on the same side
    for a, b in g.edges:
        ca, cb = fam.cluster[a], fam.cluster[b]
        assert ca == cb or ca[0] != cb[0]


@pytest.mark.parametrize("args", [(1, 1, 1), (2, 0, 1), (2, 1, 0), (2, 1, 1, 0, 1)])
def test_cluster_params_validate(args):
    with pytest.raises(ValueError):
        ClusterFamilyParams(*args)
