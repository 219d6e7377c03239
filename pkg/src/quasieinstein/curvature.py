"""Connections and Ricci-type tensors of left-invariant metrics.

All tensors live on the Lie algebra. ``metric`` arguments accept either a
``MetricSpec`` or a bare Gram matrix; any nondegenerate signature works.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .lie_core import (
    LieAlgebraData,
    LieAlgebraError,
    ReductiveDecomposition,
    check_nondegenerate,
    killing_form,
)


def _gram(metric) -> np.ndarray:
    g = np.asarray(getattr(metric, "gram", metric), dtype=float)
    check_nondegenerate(g)
    return g


def koszul_connection(alg: LieAlgebraData, metric) -> np.ndarray:
    """Levi-Civita coefficients ``G[i, j, k]`` with ``nabla_{e_i} e_j = sum_k G[i, j, k] e_k``.

    Uses 2<nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>.
    """
    g = _gram(metric)
    low = np.einsum("ijl,lk->ijk", alg.structure, g)
    conn_low = 0.5 * (
        low - np.transpose(low, (2, 0, 1)) + np.transpose(low, (1, 2, 0))
    )
    return np.einsum("ijl,lk->ijk", conn_low, np.linalg.inv(g))


def connection_defects(alg: LieAlgebraData, metric, conn: np.ndarray) -> tuple[float, float]:
    """(metric compatibility, torsion) residuals of a connection."""
    g = _gram(metric)
    low = np.einsum("ijl,lk->ijk", conn, g)
    compat = np.max(np.abs(low + np.transpose(low, (0, 2, 1))), initial=0.0)
    torsion = np.max(
        np.abs(conn - np.transpose(conn, (1, 0, 2)) - alg.structure), initial=0.0
    )
    return float(compat), float(torsion)


def block_scalars(dec: ReductiveDecomposition, a: float, a_k: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    """Per-index metric scale and per-index k-block id (-1 on p)."""
    a_k = list(a_k)
    if dec.center_dim == 0 and len(a_k) == dec.r:
        a_k = [1.0] + a_k
    n = dec.dim
    scale = np.full(n, float(a))
    which = np.full(n, -1)
    for i, blk in enumerate(dec.k_blocks):
        scale[list(blk)] = a_k[i]
        which[list(blk)] = i
    return scale, which


def nat_reductive_connection(
    alg: LieAlgebraData, dec: ReductiveDecomposition, a: float, a_k: Sequence[float]
) -> np.ndarray:
    """Closed-form Levi-Civita connection of a block metric.

    nabla_X Y is [X,Y] times 1/2 (X, Y both in k or both in p), a_i/(2a)
    (X in p, Y in k_i) or 1 - a_i/(2a) (X in k_i, Y in p).
    """
    scale, which = block_scalars(dec, a, a_k)
    in_p = which < 0
    coef = np.full((dec.dim, dec.dim), 0.5)
    for x in range(dec.dim):
        for y in range(dec.dim):
            if in_p[x] and not in_p[y]:
                coef[x, y] = scale[y] / (2.0 * a)
            elif in_p[y] and not in_p[x]:
                coef[x, y] = 1.0 - scale[x] / (2.0 * a)
    return coef[:, :, None] * alg.structure


def ricci_from_connection(alg: LieAlgebraData, conn: np.ndarray) -> np.ndarray:
    """Ric(Y, Z) = tr(X -> R(X, Y) Z) with R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]."""
    # nab[i] is the matrix of nabla_{e_i}: nab[i][l, k] = conn[i, k, l]
    nab = np.transpose(conn, (0, 2, 1))
    term1 = np.einsum("iim,jmk->jk", nab, nab)
    term2 = np.einsum("jim,imk->jk", nab, nab)
    term3 = np.einsum("ijl,lik->jk", alg.structure, nab)
    ric = term1 - term2 - term3
    return 0.5 * (ric + ric.T)


def ricci(alg: LieAlgebraData, metric) -> np.ndarray:
    """Ricci tensor in the algebra basis, by contracting the full curvature.

    The trace over X is frame independent, so for indefinite metrics this agrees
    with the signed orthonormal-frame sum.
    """
    return ricci_from_connection(alg, koszul_connection(alg, metric))


def scalar_curvature(alg: LieAlgebraData, metric) -> float:
    g = _gram(metric)
    return float(np.trace(np.linalg.solve(g, ricci(alg, g))))


def forms_A_T(alg: LieAlgebraData, dec: ReductiveDecomposition) -> tuple[list[np.ndarray], np.ndarray]:
    """The forms A_0..A_r and T on p, as |p| x |p| matrices in the basis of p.

    A_i(X, Y) = tr_p(ad X . pi_i . ad Y),  T(X, Y) = tr_p(pi ad X . pi ad Y).
    """
    p = list(dec.p)
    ad = alg.ad_matrices()
    adp = ad[p]

    def proj(idx):
        d = np.zeros(alg.dim)
        d[list(idx)] = 1.0
        return d

    pi_p = proj(p)
    forms = []
    for blk in dec.k_blocks:
        w = proj(blk)
        # A[x, y] = sum_{z in p} (ad_x diag(w) ad_y)[z, z]
        forms.append(np.einsum("xzl,l,ylz->xy", adp[:, p, :], w, adp[:, :, p]))
    t = np.einsum("xzl,l,ylz->xy", adp[:, p, :], pi_p, adp[:, :, p])
    forms = [0.5 * (f + f.T) for f in forms]
    return forms, 0.5 * (t + t.T)


def ricci_nat_reductive(
    alg: LieAlgebraData,
    dec: ReductiveDecomposition,
    a: float,
    a_k: Sequence[float],
    c: Sequence[float],
) -> np.ndarray:
    """Closed-form Ricci tensor of a block metric.

    ``c`` lists the Casimir ratios c_1..c_r; c_0 = 0 for the center.
    On k_j: -(a^2 c_j - a_j^2 c_j + a_j^2) / (4 a^2) B. On p: 1/2 sum (a_i/a - 1) A_i - B/4.
    """
    scale, _ = block_scalars(dec, a, a_k)
    b = killing_form(alg)
    cs = [0.0] + [float(x) for x in c]
    if len(cs) != len(dec.k_blocks):
        raise LieAlgebraError("need one Casimir ratio per simple ideal of k")
    ric = np.zeros_like(b)
    for j, blk in enumerate(dec.k_blocks):
        if not blk:
            continue
        aj = scale[blk[0]]
        coef = -(a * a * cs[j] - aj * aj * cs[j] + aj * aj) / (4.0 * a * a)
        ric[np.ix_(blk, blk)] = coef * b[np.ix_(blk, blk)]
    p = list(dec.p)
    forms, _ = forms_A_T(alg, dec)
    rp = -0.25 * b[np.ix_(p, p)]
    for i, blk in enumerate(dec.k_blocks):
        if blk:
            rp = rp + 0.5 * (scale[blk[0]] / a - 1.0) * forms[i]
    ric[np.ix_(p, p)] = rp
    return ric


def ricci_via_A(alg: LieAlgebraData, metric) -> np.ndarray:
    """Ric(Y, Z) = -tr(A_Z A_Y) with A_X Y = -nabla_Y X.

    Only meaningful for naturally reductive metrics.
    """
    conn = koszul_connection(alg, metric)
    # amat[x][l, j] = -conn[j, x, l]
    amat = -np.transpose(conn, (1, 2, 0))
    ric = -np.einsum("zab,yba->yz", amat, amat)
    return 0.5 * (ric + ric.T)


def lie_derivative_metric(alg: LieAlgebraData, metric, x) -> np.ndarray:
    """(L_X g)(Y, Z) = -<[X,Y],Z> - <Y,[X,Z]> for left-invariant X, Y, Z."""
    g = _gram(metric)
    adx = alg.ad(x)
    return -(adx.T @ g + g @ adx)


def ric_X_m(alg: LieAlgebraData, metric, x, m: float) -> np.ndarray:
    """Ric + 1/2 L_X g - (1/m) X* (x) X*."""
    if not m > 0:
        raise ValueError("m must be positive")
    g = _gram(metric)
    x = np.asarray(x, dtype=float)
    out = ricci(alg, g)
    if np.any(x):
        xs = g @ x
        out = out + 0.5 * lie_derivative_metric(alg, g, x) - np.outer(xs, xs) / m
    return out


def killing_defect(alg: LieAlgebraData, metric, x) -> float:
    """Spectral norm of ad X + (ad X)^t, the metric transpose."""
    g = _gram(metric)
    adx = alg.ad(x)
    adx_t = np.linalg.solve(g, adx.T @ g)
    return float(np.linalg.norm(adx + adx_t, 2))


def scalar_gradient_terms(alg: LieAlgebraData, metric, direction, h: float = 1e-4) -> tuple[float, float]:
    """Centered difference of sc along ``direction`` and the pairing (ric, direction)_Q.

    The pairing is the full trace tr(Q^-1 ric Q^-1 v), i.e. the double sum over a
    Q-orthonormal frame.
    """
    if not h > 0:
        raise ValueError("step must be positive")
    g = _gram(metric)
    v = np.asarray(direction, dtype=float)
    v = 0.5 * (v + v.T)
    fd = (scalar_curvature(alg, g + h * v) - scalar_curvature(alg, g - h * v)) / (2.0 * h)
    ginv = np.linalg.inv(g)
    pairing = float(np.trace(ginv @ ricci(alg, g) @ ginv @ v))
    return float(fd), pairing


def scalar_gradient_check(alg: LieAlgebraData, metric, direction, h: float = 1e-4) -> float:
    """|d/dt sc(Q + t v) + (ric, v)_Q|, which vanishes for unimodular algebras."""
    fd, pairing = scalar_gradient_terms(alg, metric, direction, h)
    return abs(fd + pairing)
