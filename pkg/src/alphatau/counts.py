"""Configuration sums over ordered vertex quadruples and the f-weights.

Every sum ranges over all of ``V^4`` including quadruples with repeated
vertices, with the convention that the non-edge indicator is 1 on the
diagonal.  The literal broadcast sums (``method="naive"``) are the reference;
``method="fast"`` rewrites them as matrix products and degree sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import Trigraph, _check_vertex


@dataclass(frozen=True)
class ConfigCounts:
    p4: int
    c4: int
    k13: int
    d: int
    r: int


@dataclass(frozen=True)
class CSSlack:
    cs_s_slack: int
    cs_n_slack: int

    @property
    def ok(self) -> bool:
        return self.cs_s_slack >= 0 and self.cs_n_slack >= 0


@dataclass(frozen=True)
class BigSum:
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class FTotal:
    f: Fraction
    bound: int

    @property
    def ok(self) -> bool:
        return self.f <= self.bound


@dataclass(frozen=True)
class FWeights:
    f_total: Fraction
    per_pair: dict


class NotAnSEdge(ValueError):
    pass


def _mats(t: Trigraph):
    return t.s_matrix, t.c_matrix, t.n_matrix


def _naive_counts(t: Trigraph) -> ConfigCounts:
    s, c, nn = _mats(t)
    nc = nn + c
    # axes: u, v, w, x
    s_uv = s[:, :, None, None]
    s_vw = s[None, :, :, None]
    s_wx = s[None, None, :, :]
    s_xu = s.T[:, None, None, :]
    nc_xu = nc.T[:, None, None, :]
    p4 = int(np.sum(s_uv * s_vw * s_wx * nc_xu))
    c4 = int(np.sum(s_uv * s_vw * s_wx * s_xu))
    s_uw = s[:, None, :, None]
    s_ux = s[:, None, None, :]
    k13 = int(np.sum(s_uv * s_uw * s_ux))
    n_vw = nn[None, :, :, None]
    n_vx = nn[None, :, None, :]
    d = int(np.sum(nc[:, :, None, None] * s_uw * s_ux * n_vw * n_vx))
    n_wx = nn[None, None, :, :]
    c_vx = c[None, :, None, :]
    r = int(np.sum(s_uv * s_uw * n_wx * c_vx))
    return ConfigCounts(p4, c4, k13, d, r)


def _fast_counts(t: Trigraph) -> ConfigCounts:
    s, c, nn = _mats(t)
    s2 = s @ s
    s3 = s2 @ s
    walks3 = int(s3.sum())
    c4 = int(np.trace(s2 @ s2))
    deg = s.sum(axis=1)
    k13 = int(np.sum(deg ** 3))
    sn = s @ nn
    d = int(np.sum((1 - s) * sn * sn))
    r = int(np.trace(s @ (nn @ c) @ s))
    return ConfigCounts(walks3 - c4, c4, k13, d, r)


def config_counts(t: Trigraph, method: str = "fast") -> ConfigCounts:
    if method == "naive":
        return _naive_counts(t)
    if method == "fast":
        return _fast_counts(t)
    raise ValueError(f"unknown method {method!r}")


def check_cauchy_schwarz(t: Trigraph, counts: ConfigCounts | None = None) -> CSSlack:
    k = counts or config_counts(t)
    return CSSlack(k.k13 - k.p4 - k.c4, k.d - k.p4)


def bigsum_lhs_twice(t: Trigraph) -> int:
    """Twice the left side of the big-sum identity, summed literally."""
    s, c, _ = _mats(t)
    s_uv = s[:, :, None, None]
    a_w = s[:, None, :, None] + s.T[None, :, :, None]  # s(uw) + s(vw)
    b_x = 1 - s[:, None, None, :] - s.T[None, :, None, :]  # 1 - s(ux) - s(vx)
    c_wx = c[None, None, :, :]
    first = int(np.sum(s_uv * c_wx * a_w * b_x))
    second = int(np.sum(s_uv * (1 - a_w) * b_x))
    return 2 * first + second


def check_bigsum_identity(t: Trigraph, counts: ConfigCounts | None = None) -> BigSum:
    k = counts or config_counts(t)
    rhs = t.n ** 2 * len(t.S) - 3 * k.p4 - k.c4 - k.k13 - 2 * k.d - 2 * k.r
    return BigSum(Fraction(bigsum_lhs_twice(t), 2), Fraction(rhs))


def check_triangle_free_simplification(t: Trigraph) -> bool:
    """``s(uv)s(vw) == s(uv)s(vw)n(uw)`` for every ordered triple."""
    s, _, nn = _mats(t)
    lhs = s[:, :, None] * s[None, :, :]
    return bool(np.array_equal(lhs, lhs * nn[:, None, :]))


def f_value(t: Trigraph, u: int, v: int, w: int, x: int) -> Fraction:
    for z in (u, v, w, x):
        _check_vertex(t.n, z)
    s, c, _ = _mats(t)
    if not s[u, v]:
        return Fraction(0)
    a_w = s[u, w] + s[v, w]
    b_x = 1 - s[u, x] - s[v, x]
    twice = (
        2 * (3 * s[w, x] + c[w, x]) * a_w * b_x
        + (1 - a_w) * b_x
        + 4 * s[w, x] * s[u, w] * s[v, x]
    )
    return Fraction(int(twice), 2)


def f_tensor_twice(t: Trigraph) -> np.ndarray:
    """``2 f(u,v,w,x)`` as an integer array indexed ``[u, v, w, x]``."""
    s, c, _ = _mats(t)
    s_uv = s[:, :, None, None]
    a_w = s[:, None, :, None] + s.T[None, :, :, None]
    b_x = 1 - s[:, None, None, :] - s.T[None, :, None, :]
    m_wx = (3 * s + c)[None, None, :, :]
    s_wx = s[None, None, :, :]
    s_uw = s[:, None, :, None]
    s_vx = s.T[None, :, None, :]
    return s_uv * (2 * m_wx * a_w * b_x + (1 - a_w) * b_x + 4 * s_wx * s_uw * s_vx)


def pair_sums_twice(t: Trigraph) -> np.ndarray:
    """``2 g(u,v)`` for every ordered pair, via the closed form.

    With ``a = S[u] + S[v]`` and ``b = 1 - a`` the pair sum is
    ``a.(3S + C).b + (n - |a|)^2 / 2 + 2 (S^3)[u, v]`` on S-pairs.
    """
    s, c, _ = _mats(t)
    n = t.n
    m = 3 * s + c
    a = s[:, None, :] + s[None, :, :]  # a[u, v, w]
    b = 1 - a
    term1 = np.einsum("uvw,wx,uvx->uv", a, m, b)
    size = n - a.sum(axis=2)
    s3 = s @ s @ s
    return s * (2 * term1 + size * size + 4 * s3)


def f_pair_sum(t: Trigraph, u: int, v: int, method: str = "fast") -> Fraction:
    _check_vertex(t.n, u)
    _check_vertex(t.n, v)
    if u == v or (min(u, v), max(u, v)) not in t.S:
        raise NotAnSEdge(f"({u}, {v}) is not an S-edge")
    if method == "naive":
        twice = int(f_tensor_twice(t)[u, v].sum())
    else:
        twice = int(pair_sums_twice(t)[u, v])
    return Fraction(twice, 2)


def f_weights(t: Trigraph) -> FWeights:
    g2 = pair_sums_twice(t)
    per_pair = {(u, v): Fraction(int(g2[u, v]), 2) for u, v in t.s_pairs}
    return FWeights(sum(per_pair.values(), Fraction(0)), per_pair)


def f_total(t: Trigraph, method: str = "fast") -> FTotal:
    if method == "naive":
        f = Fraction(int(f_tensor_twice(t).sum()), 2)
    else:
        f = f_weights(t).f_total
    return FTotal(f, t.n ** 2 * len(t.S))
