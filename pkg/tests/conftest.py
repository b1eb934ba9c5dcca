"""Shared fixtures: an independent pure-Python oracle and random graph strategies."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from hypothesis import strategies as st

from benesnet.swgraph import StrengthWeightedGraph

INF = float("inf")


def floyd_warshall(vertex_count, edges):
    d = [[0 if i == j else INF for j in range(vertex_count)] for i in range(vertex_count)]
    for a, b in edges:
        d[a][b] = d[b][a] = 1
    for k in range(vertex_count):
        dk = d[k]
        for i in range(vertex_count):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(vertex_count):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def reference_descriptors(g):
    """The seven descriptors straight from their definitions, no numpy."""
    d = floyd_warshall(g.vertex_count, g.edges)
    V = range(g.vertex_count)
    W = sum(g.w_v[u] * g.w_v[v] * d[u][v] for u, v in combinations(V, 2))

    def ve(x, e):
        return min(d[x][e[0]], d[x][e[1]])

    sz_v = sz_e = pi = mo = mo_e = 0
    sz_ev = Fraction(0)
    for e, s in zip(g.edges, g.s_e):
        mu, eta = e
        n_mu = sum(g.w_v[x] for x in V if d[x][mu] < d[x][eta])
        n_eta = sum(g.w_v[x] for x in V if d[x][eta] < d[x][mu])
        m_mu = sum(g.s_v[x] for x in V if d[x][mu] < d[x][eta])
        m_eta = sum(g.s_v[x] for x in V if d[x][eta] < d[x][mu])
        m_mu += sum(t for f, t in zip(g.edges, g.s_e) if ve(mu, f) < ve(eta, f))
        m_eta += sum(t for f, t in zip(g.edges, g.s_e) if ve(eta, f) < ve(mu, f))
        sz_v += s * n_mu * n_eta
        sz_e += s * m_mu * m_eta
        sz_ev += Fraction(s, 2) * (n_mu * m_eta + n_eta * m_mu)
        pi += s * (m_mu + m_eta)
        mo += s * abs(n_mu - n_eta)
        mo_e += s * abs(m_mu - m_eta)
    if sz_ev.denominator == 1:
        sz_ev = int(sz_ev)
    return {"W": W, "Sz_v": sz_v, "Sz_e": sz_e, "Sz_ev": sz_ev, "PI": pi, "Mo": mo, "Mo_e": mo_e}


@st.composite
def connected_graphs(draw, max_vertices=12, weighted=False):
    """A random spanning tree plus random extra edges, so always connected."""
    n = draw(st.integers(1, max_vertices))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [p for p in combinations(range(n), 2) if p not in edges]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=min(len(pairs), 20), unique=True))
        edges.update(extra)
    edges = sorted(edges)
    if not weighted:
        return StrengthWeightedGraph(n, edges)
    w_v = draw(st.lists(st.integers(1, 4), min_size=n, max_size=n))
    s_v = draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    s_e = draw(st.lists(st.integers(1, 3), min_size=len(edges), max_size=len(edges)))
    return StrengthWeightedGraph(n, edges, w_v, s_v, s_e)


# Acceptance lines collected by tests/test_acceptance.py, printed in the summary.
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
