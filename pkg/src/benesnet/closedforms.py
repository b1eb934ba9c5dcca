"""Closed-form descriptor values for BB(n), BB*(n) and the clustered clique family.

Polynomials with fractional coefficients are evaluated over ``Fraction`` and
must come out integral; anything else means a transcription error and raises
:class:`IntegralityError`.

Per-class functions return the contribution of one cut class, indexed from 1
with class 1 nearest the middle level (the order produced by
:func:`benesnet.thetacuts.middle_out_order`).
"""
from __future__ import annotations

from fractions import Fraction as F
from math import comb

from .descriptors import DescriptorSet

__all__ = [
    "IntegralityError",
    "cluster_wiener",
    "bb_wiener",
    "bb_closed_forms",
    "bba_wiener",
    "bba_closed_forms",
    "bb_class_terms",
    "bba_class_terms",
    "per_class_closed_forms",
    "closed_forms",
]


class IntegralityError(ArithmeticError):
    def __init__(self, what, value):
        super().__init__(f"closed-form integrality violated: {what} = {value}")


def _int(value, what):
    value = F(value)
    if value.denominator != 1:
        raise IntegralityError(what, value)
    return value.numerator


def _check_n(n, low=2):
    if int(n) != n or n < low:
        raise ValueError(f"closed forms need n >= {low}, got {n!r}")
    return int(n)


def cluster_wiener(p):
    """Wiener index of ``a`` weighted X-cliques fully joined to ``b`` Y-cliques."""
    m, a, b, al, be = p.m, p.a, p.b, p.alpha, p.beta
    if m < 2:
        raise ValueError("clique size m must be at least 2")
    return m * m * (a * (a - 1) * al * al + b * (b - 1) * be * be + a * b * al * be) + comb(
        m, 2
    ) * (a * al * al + b * be * be)


# ---------------------------------------------------------------------------
# BB(n)


def bb_wiener(n):
    n = _check_n(n)
    t = 2**n
    return _int(F(t, 3) * (50 * n * t - 69 * t - 9 * n**2 * t + 10 * n**3 * t + 69), "W(BB)")


def bb_class_terms(n, delta):
    """Side counts shared by every edge of the complete bipartite quotient for class ``delta``.

    Returns ``(edges, n_mu, n_eta, m_mu, m_eta)``.
    """
    n = _check_n(n)
    if not 1 <= delta <= n:
        raise IndexError(f"BB({n}) has classes 1..{n}, got {delta}")
    d = delta
    wd = 2 ** (n - d) * (n - d + 1)
    wt = 2 ** (d - 1) * (2 * d - 1)
    sd = 2 ** (n - d + 1) * (n - d)
    st = 2 ** (d + 1) * (d - 1)
    big_t = 2 ** (n - d + 1)
    big_d = 2 ** (d + 1)
    n_mu = wd + (big_t - 1) * wt
    n_eta = (big_d - 1) * wd + wt
    m_mu = sd + (big_t - 1) * st + big_t - 1
    m_eta = (big_d - 1) * sd + st + big_d - 1
    return 2 ** (n + 2), n_mu, n_eta, m_mu, m_eta


def _bb_class(n, delta):
    edges, n_mu, n_eta, m_mu, m_eta = bb_class_terms(n, delta)
    d = delta
    wiener = (
        2 ** (n + 1) * (n - d + 1) * 2**n * (2 * d - 1)
        + 2 * comb(2 ** (d + 1), 2) * (2 ** (n - d) * (n - d + 1)) ** 2
        + 2 * comb(2 ** (n - d + 1), 2) * (2 ** (d - 1) * (2 * d - 1)) ** 2
    )
    return DescriptorSet(
        wiener=wiener,
        sz_v=edges * n_mu * n_eta,
        sz_e=edges * m_mu * m_eta,
        sz_ev_x2=edges * (n_mu * m_eta + m_mu * n_eta),
        pi=edges * (m_mu + m_eta),
        mo=edges * abs(n_mu - n_eta),
        mo_e=edges * abs(m_mu - m_eta),
    )


def bb_closed_forms(n):
    n = _check_n(n)
    t = 2**n
    sz_v = F(2 * t, 27) * (
        (2608 - 1308 * n + 288 * n**2 + 36 * n**3) * t * t
        - (2700 + 423 * n - 27 * n**2 - 18 * n**3) * t
        + 92
    )
    sz_e = t * (
        (F(20096, 27) - F(2864, 9) * n + F(112, 3) * n**2 + F(32, 3) * n**3) * t * t
        - (792 + F(496, 3) * n + 16 * n**2 - F(16, 3) * n**3) * t
        + 4 * n
        + F(1288, 27)
    )
    sz_ev = t * (
        (F(10636, 27) - F(1660, 9) * n + F(92, 3) * n**2 + F(16, 3) * n**3) * t * t
        - (408 + F(242, 3) * n + 2 * n**2 - F(8, 3) * n**3) * t
        + F(380, 27)
    )
    pi = t * ((16 * n**2 - 16 * n + 24) * t - 8 * n - 24)
    mo = mo_e = 0
    for d in range(1, n + 1):
        edges, n_mu, n_eta, m_mu, m_eta = bb_class_terms(n, d)
        mo += edges * abs(n_mu - n_eta)
        mo_e += edges * abs(m_mu - m_eta)
    return DescriptorSet.from_values(
        bb_wiener(n),
        _int(sz_v, "Sz_v(BB)"),
        _int(sz_e, "Sz_e(BB)"),
        F(_int(sz_ev * 2, "2 Sz_ev(BB)"), 2),
        pi,
        mo,
        mo_e,
    )


# ---------------------------------------------------------------------------
# BB*(n)


def bba_wiener(n):
    n = _check_n(n)
    t = 2**n
    return _int(F(t, 6) * ((20 * n**3 - 36 * n**2 + 148 * n - 207) * t + 207), "W(BB*)")


def _bba_first_class(n):
    w = n * 2 ** (n - 1)
    s = 3 * (n - 1) * 2 ** (n - 1)
    t = 2**n
    # side counts on the 2^(n+2) edges between the heavy and light vertices
    n_mu, n_eta = w + t - 2, 2 * w + 1
    m_mu, m_eta = s + 2 * t - 2, 2 * s + 4 + t // 2
    big = 2 ** (n + 2)
    wiener = 4 * (2 * w * w + (t // 2) * (t // 2 - 1) + 2 * (t // 2) * w) + (2 * w * w + t // 2)
    sz_v = big * n_mu * n_eta + t * w * w + t // 2
    sz_e = big * m_mu * m_eta + t * (s + t) ** 2 + (t // 2) * 16
    sz_ev_x2 = big * (n_mu * m_eta + m_mu * n_eta) + t * 2 * w * (s + t) + (t // 2) * 8
    pi = big * (m_mu + m_eta) + t * 2 * (s + t) + (t // 2) * 8
    return DescriptorSet(
        wiener=wiener,
        sz_v=sz_v,
        sz_e=sz_e,
        sz_ev_x2=sz_ev_x2,
        pi=pi,
        mo=big * abs(n_mu - n_eta),
        mo_e=big * abs(m_mu - m_eta),
    )


def bba_class_terms(n, sigma):
    """The four side-count factors of the class-``sigma`` quotient, ``2 <= sigma <= n``.

    Returns ``(a_n, b_n, a_m, b_m)``: vertex and edge side counts on the
    ``2^(n+2)`` heavy-to-light quotient edges.
    """
    n = _check_n(n)
    if not 2 <= sigma <= n:
        raise IndexError(f"second-type classes of BB*({n}) are 2..{n}, got {sigma}")
    s = sigma
    p = F(2) ** (n - s)
    a_n = p * (n - s + 1) - (2**s - 2**n) * (2 * s - 1)
    b_n = F(2) ** (s - 1) * (2 * s - 1) + p * (n - s + 1) * (2 ** (s + 1) - 2)
    a_m = (11 - 12 * s) * (F(2) ** (s - 1) - F(2) ** (n - 1)) + 3 * (n - s + 1) * p - 1
    b_m = (
        F(2) ** (s - 2) * (12 * s - 13)
        + 3 * (n - s) * p * (2 ** (s + 1) - 2)
        + p * (2**s - 1)
        + 2**s
        + 2 ** (s + 1)
        - 1
    )
    return tuple(_int(x, f"class term of BB*({n}), sigma={s}") for x in (a_n, b_n, a_m, b_m))


def _bba_sigma_wiener(n, s):
    # squared factor is (n - sigma + 1); the (n - sigma - 1) variant only
    # agrees at sigma = n and misses the class sum everywhere else
    val = (
        F(2) ** (2 * n - s) * (2 ** (s + 2) - 3) * (n - s + 1) ** 2
        + 2 ** (2 * n + 1) * (2 * s - 1) * (n - s + 1)
        - F(2) ** (n - 2) * (2 * s - 1) ** 2 * (3 * 2**s - 2 ** (n + 2))
    )
    return _int(val, f"W(BB*({n})/class {s})")


def _bba_sigma_class(n, s):
    a_n, b_n, a_m, b_m = bba_class_terms(n, s)
    big = 2 ** (n + 2)
    t = 2**n
    w_r = 2 ** (n - s) * (n - s + 1)
    w_s = 2 ** (s - 1) * (2 * s - 1)
    m_r = _int(3 * (n - s) * F(2) ** (n - s) + F(2) ** (n - s + 1), "m_r")
    m_s = _int(F(2) ** (s - 2) * (12 * s - 13) + 2 ** (s + 1), "m_s")
    return DescriptorSet(
        wiener=_bba_sigma_wiener(n, s),
        sz_v=big * a_n * b_n + t * w_r * w_r + t * w_s * w_s,
        sz_e=big * a_m * b_m + t * m_r * m_r + t * m_s * m_s,
        sz_ev_x2=big * (a_n * b_m + b_n * a_m) + t * 2 * w_r * m_r + t * 2 * w_s * m_s,
        pi=big * (a_m + b_m) + t * 2 * m_r + t * 2 * m_s,
        mo=big * abs(a_n - b_n),
        mo_e=big * abs(a_m - b_m),
    )


def bba_closed_forms(n):
    n = _check_n(n)
    t = 2**n
    sz_v = F(t, 54) * (
        (15988 - 7212 * n + 882 * n**2 + 144 * n**3) * t * t
        - (16632 + 3366 * n - 270 * n**2 - 180 * n**3) * t
        + 617
    )
    sz_e = t * (
        (F(30709, 12) - 922 * n + 57 * n**2 + 24 * n**3) * t * t
        - (2756 + F(1445, 2) * n + F(123, 2) * n**2 - 30 * n**3) * t
        + 4 * n
        + F(587, 3)
    )
    sz_ev = t * (
        (F(16145, 18) - F(1087, 3) * n + 34 * n**2 + 8 * n**3) * t * t
        - (943 + F(909, 4) * n + F(11, 4) * n**2 - 10 * n**3) * t
        + F(410, 9)
    )
    pi = t * ((73 - 36 * n + 24 * n**2) * t - 8 * n - 78)
    mo = 2 ** (n + 2) * abs(n * 2 ** (n - 1) - t + 3)
    mo_e = 2 ** (n + 2) * abs(2 ** (n - 1) - 3 * (n - 1) * 2 ** (n - 1) + t - 6)
    for s in range(2, n + 1):
        mo += 2 ** (n + 2) * abs(
            _int(
                F(2) ** (n - s) * (n - s + 1)
                + (2 * s - 1) * (t - 2**s)
                - F(2) ** (s - 1) * (2 * s - 1)
                - F(2) ** (n - s) * (2 ** (s + 1) - 2) * (n - s + 1),
                "Mo term",
            )
        )
        mo_e += 2 ** (n + 2) * abs(
            _int(
                (36 * n - 36 * s + 16) * F(2) ** (n - s - 2)
                - (24 * n - 48 * s + 26) * F(2) ** (n - 2)
                - (36 * s - 23) * F(2) ** (s - 2),
                "Mo_e term",
            )
        )
    return DescriptorSet.from_values(
        bba_wiener(n),
        _int(sz_v, "Sz_v(BB*)"),
        _int(sz_e, "Sz_e(BB*)"),
        F(_int(sz_ev * 2, "2 Sz_ev(BB*)"), 2),
        pi,
        mo,
        mo_e,
    )


# ---------------------------------------------------------------------------


def per_class_closed_forms(network, n, index):
    """Contribution of cut class ``index`` (1-based, 1 = middle) to every descriptor."""
    n = _check_n(n)
    if network == "bb":
        return _bb_class(n, index)
    if network == "bba":
        if index == 1:
            return _bba_first_class(n)
        return _bba_sigma_class(n, index)
    raise ValueError(f"no closed forms for network {network!r}")


def closed_forms(network, n):
    if network == "bb":
        return bb_closed_forms(n)
    if network == "bba":
        return bba_closed_forms(n)
    raise ValueError(f"no closed forms for network {network!r}")
