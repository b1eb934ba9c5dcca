"""Distance-based descriptors computed straight from their definitions.

This is the ground truth the cut method and the closed forms are checked
against.  Everything is exact: side counts come out of int64 numpy kernels
(range-checked), and products and sums are taken over Python ints.
"""
from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction

import numpy as np

from .swgraph import all_pairs_distances, side_count_arrays

__all__ = [
    "DESCRIPTOR_NAMES",
    "DescriptorSet",
    "wiener",
    "szeged_family",
    "pi_index",
    "mostar_family",
    "all_descriptors",
]

# Output order and the short names used in tables and CSV files.
DESCRIPTOR_NAMES = ("W", "Sz_v", "Sz_e", "Sz_ev", "PI", "Mo", "Mo_e")


@dataclass(frozen=True)
class DescriptorSet:
    """The seven descriptor values.

    The edge-vertex Szeged index carries a factor one half, so it is stored
    doubled in ``sz_ev_x2`` and halved on output by :attr:`sz_ev`.
    """

    wiener: int = 0
    sz_v: int = 0
    sz_e: int = 0
    sz_ev_x2: int = 0
    pi: int = 0
    mo: int = 0
    mo_e: int = 0

    @property
    def sz_ev(self):
        if self.sz_ev_x2 % 2 == 0:
            return self.sz_ev_x2 // 2
        return Fraction(self.sz_ev_x2, 2)

    def __add__(self, other):
        if not isinstance(other, DescriptorSet):
            return NotImplemented
        return DescriptorSet(
            *(getattr(self, f.name) + getattr(other, f.name) for f in fields(self))
        )

    def __radd__(self, other):
        # lets sum() start from 0
        if other == 0:
            return self
        return NotImplemented

    def as_dict(self):
        return dict(zip(DESCRIPTOR_NAMES, self.values()))

    def values(self):
        return (self.wiener, self.sz_v, self.sz_e, self.sz_ev, self.pi, self.mo, self.mo_e)

    def __getitem__(self, name):
        return self.as_dict()[name]

    @classmethod
    def from_values(cls, W, Sz_v, Sz_e, Sz_ev, PI, Mo, Mo_e):
        x2 = Fraction(Sz_ev) * 2
        if x2.denominator != 1:
            raise ValueError(f"Sz_ev = {Sz_ev} is not a multiple of 1/2")
        return cls(int(W), int(Sz_v), int(Sz_e), int(x2), int(PI), int(Mo), int(Mo_e))


def _oracle(g, oracle):
    return all_pairs_distances(g) if oracle is None else oracle


def wiener(g, oracle=None):
    """Sum over unordered vertex pairs of ``w(u) * w(v) * d(u, v)``."""
    oracle = _oracle(g, oracle)
    w = np.asarray(g.w_v, dtype=np.int64)
    if int(w.sum()) * max(oracle.diameter, 1) >= 1 << 62:
        raise OverflowError("vertex weights too large for the Wiener kernel")
    row = oracle.dist.astype(np.int64) @ w
    total = sum(int(a) * int(b) for a, b in zip(g.w_v, row.tolist()))
    return total // 2


def _sides(g, oracle):
    n_mu, n_eta, m_mu, m_eta = side_count_arrays(g, oracle)
    return n_mu.tolist(), n_eta.tolist(), m_mu.tolist(), m_eta.tolist()


def szeged_family(g, oracle=None, sides=None):
    """``(Sz_v, Sz_e, Sz_ev_x2)``; the last is twice the edge-vertex Szeged index."""
    oracle = _oracle(g, oracle)
    n_mu, n_eta, m_mu, m_eta = _sides(g, oracle) if sides is None else sides
    sz_v = sz_e = sz_ev_x2 = 0
    for s, a, b, c, d in zip(g.s_e, n_mu, n_eta, m_mu, m_eta):
        sz_v += s * a * b
        sz_e += s * c * d
        sz_ev_x2 += s * (a * d + c * b)
    return sz_v, sz_e, sz_ev_x2


def pi_index(g, oracle=None, sides=None):
    oracle = _oracle(g, oracle)
    _, _, m_mu, m_eta = _sides(g, oracle) if sides is None else sides
    return sum(s * (c + d) for s, c, d in zip(g.s_e, m_mu, m_eta))


def mostar_family(g, oracle=None, sides=None):
    """``(Mo, Mo_e)``: strength-weighted imbalance of vertex and edge sides."""
    oracle = _oracle(g, oracle)
    n_mu, n_eta, m_mu, m_eta = _sides(g, oracle) if sides is None else sides
    mo = sum(s * abs(a - b) for s, a, b in zip(g.s_e, n_mu, n_eta))
    mo_e = sum(s * abs(c - d) for s, c, d in zip(g.s_e, m_mu, m_eta))
    return mo, mo_e


def all_descriptors(g, oracle=None):
    """All seven descriptors from one distance table and one side-count pass."""
    oracle = _oracle(g, oracle)
    sides = _sides(g, oracle)
    sz_v, sz_e, sz_ev_x2 = szeged_family(g, oracle, sides)
    mo, mo_e = mostar_family(g, oracle, sides)
    return DescriptorSet(
        wiener=wiener(g, oracle),
        sz_v=sz_v,
        sz_e=sz_e,
        sz_ev_x2=sz_ev_x2,
        pi=pi_index(g, oracle, sides),
        mo=mo,
        mo_e=mo_e,
    )
