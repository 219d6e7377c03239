"""Metric Lie algebras given by structure constants.

A Lie algebra is stored as a dense array ``C`` with ``[e_i, e_j] = sum_k C[i, j, k] e_k``.
Metrics are Gram matrices in the same basis. Everything here is floating point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

STRUCT_TOL = 1e-10


class LieAlgebraError(ValueError):
    """Raised when structure data or a metric fails a structural check."""


@dataclass(frozen=True, eq=False)
class LieAlgebraData:
    structure: np.ndarray
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        c = np.array(self.structure, dtype=float)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
            raise LieAlgebraError(f"structure must be N x N x N, got shape {c.shape}")
        scale = 1.0 + float(np.max(np.abs(c), initial=0.0))
        if np.max(np.abs(c + np.transpose(c, (1, 0, 2))), initial=0.0) > STRUCT_TOL * scale:
            raise LieAlgebraError("structure constants are not antisymmetric in the first two indices")
        c.setflags(write=False)
        object.__setattr__(self, "structure", c)
        labels = tuple(self.labels) or tuple(f"e{i}" for i in range(c.shape[0]))
        if len(labels) != c.shape[0]:
            raise LieAlgebraError("number of labels does not match dimension")
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return self.structure.shape[0]

    def ad(self, x) -> np.ndarray:
        """Matrix of ``ad x`` acting on column coordinate vectors."""
        x = _vector(self, x)
        # (ad x)[k, j] = sum_i x_i C[i, j, k]
        return np.einsum("i,ijk->kj", x, self.structure)

    def ad_matrices(self) -> np.ndarray:
        """Stack of ``ad e_i`` for every basis vector, shape (N, N, N)."""
        return np.transpose(self.structure, (0, 2, 1))

    def antisymmetry_residual(self) -> float:
        c = self.structure
        return float(np.max(np.abs(c + np.transpose(c, (1, 0, 2))), initial=0.0))

    def to_dict(self, blocks=None) -> dict:
        doc = {
            "dim": self.dim,
            "labels": list(self.labels),
            "structure": self.structure.tolist(),
        }
        if blocks is not None:
            doc["blocks"] = blocks.to_dict()
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> "LieAlgebraData":
        alg = cls(np.asarray(doc["structure"], dtype=float), tuple(doc.get("labels", ())))
        if alg.dim != doc.get("dim", alg.dim):
            raise LieAlgebraError("declared dim does not match structure")
        return alg


@dataclass(frozen=True)
class ReductiveDecomposition:
    """Index blocks ``k_0, k_1, ..., k_r`` followed by ``p_1, ..., p_l``.

    ``k_blocks[0]`` is the center of ``k`` and may be empty.
    """

    k_blocks: tuple[tuple[int, ...], ...]
    p_blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "k_blocks", tuple(tuple(int(i) for i in b) for b in self.k_blocks))
        object.__setattr__(self, "p_blocks", tuple(tuple(int(i) for i in b) for b in self.p_blocks))
        if not self.k_blocks:
            raise LieAlgebraError("decomposition needs at least the (possibly empty) center block")

    @property
    def r(self) -> int:
        return len(self.k_blocks) - 1

    @property
    def center_dim(self) -> int:
        return len(self.k_blocks[0])

    @property
    def k(self) -> tuple[int, ...]:
        return tuple(i for b in self.k_blocks for i in b)

    @property
    def p(self) -> tuple[int, ...]:
        return tuple(i for b in self.p_blocks for i in b)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return self.k_blocks + self.p_blocks

    @property
    def dim(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def to_dict(self) -> dict:
        return {"k": [list(b) for b in self.k_blocks], "p": [list(b) for b in self.p_blocks]}

    @classmethod
    def from_dict(cls, doc: dict) -> "ReductiveDecomposition":
        return cls(tuple(tuple(b) for b in doc["k"]), tuple(tuple(b) for b in doc["p"]))

    def check(self, alg: LieAlgebraData, tol: float = STRUCT_TOL) -> dict[str, float]:
        """Residuals of the decomposition invariants; raises if they are not met."""
        res = decomposition_residuals(alg, self)
        if not res["partition"] == 0.0:
            raise LieAlgebraError("blocks do not partition the basis")
        bad = {k: v for k, v in res.items() if v > tol}
        if bad:
            raise LieAlgebraError(f"decomposition invariants violated: {bad}")
        return res


@dataclass(frozen=True, eq=False)
class MetricSpec:
    """Block metric ``a (-B)|_p + a_0 (-B)|_k0 + ... + a_r (-B)|_kr``."""

    a: float
    a_k: tuple[float, ...]
    gram: np.ndarray = field(repr=False)

    @property
    def signature(self) -> tuple[int, int]:
        return signature(self.gram)


def _vector(alg: LieAlgebraData, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (alg.dim,):
        raise LieAlgebraError(f"expected vector of length {alg.dim}, got shape {x.shape}")
    return x


def bracket(alg: LieAlgebraData, x, y) -> np.ndarray:
    x = _vector(alg, x)
    y = _vector(alg, y)
    return np.einsum("i,j,ijk->k", x, y, alg.structure)


def killing_form(alg: LieAlgebraData) -> np.ndarray:
    """B(e_i, e_j) = tr(ad e_i ad e_j)."""
    c = alg.structure
    b = np.einsum("ilk,jkl->ij", c, c)
    return 0.5 * (b + b.T)


def jacobi_residual(alg: LieAlgebraData) -> float:
    """Max-norm of [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] over all triples."""
    c = alg.structure
    # t[i, j, k, :] = [[e_i, e_j], e_k]
    t = np.einsum("ijl,lkm->ijkm", c, c)
    total = t + np.transpose(t, (1, 2, 0, 3)) + np.transpose(t, (2, 0, 1, 3))
    return float(np.max(np.abs(total), initial=0.0))


def jacobi_tolerance(alg: LieAlgebraData, tol: float = STRUCT_TOL) -> float:
    scale = 1.0 + float(np.max(np.abs(alg.structure), initial=0.0))
    return tol * scale**2


def decomposition_residuals(alg: LieAlgebraData, dec: ReductiveDecomposition) -> dict[str, float]:
    n = alg.dim
    flat = sorted(i for b in dec.blocks for i in b)
    partition = 0.0 if flat == list(range(n)) else 1.0
    if partition:
        return {"partition": 1.0}
    c = alg.structure
    k_all = list(dec.k)
    p_all = list(dec.p)
    not_k = np.setdiff1d(np.arange(n), k_all)
    ideals = 0.0
    closure = 0.0
    for i, bi in enumerate(dec.k_blocks):
        if not bi:
            continue
        outside = np.setdiff1d(np.arange(n), bi)
        sub = c[np.ix_(bi, bi, outside)]
        closure = max(closure, float(np.max(np.abs(sub), initial=0.0)))
        for j, bj in enumerate(dec.k_blocks):
            if j != i and bj:
                ideals = max(ideals, float(np.max(np.abs(c[np.ix_(bi, bj)]), initial=0.0)))
    k_on_p = 0.0
    if k_all and p_all and len(not_k) < n:
        k_on_p = float(np.max(np.abs(c[np.ix_(k_all, p_all, k_all)]), initial=0.0))
    b = killing_form(alg)
    ortho = 0.0
    blocks = [blk for blk in dec.blocks if blk]
    for i, bi in enumerate(blocks):
        for bj in blocks[i + 1:]:
            ortho = max(ortho, float(np.max(np.abs(b[np.ix_(bi, bj)]))))
    return {
        "partition": partition,
        "k_ideals_commute": ideals,
        "k_ideals_closed": closure,
        "k_preserves_p": k_on_p,
        "killing_orthogonal": ortho,
    }


def signature(gram: np.ndarray, rel_tol: float = 1e-8) -> tuple[int, int]:
    w = np.linalg.eigvalsh(np.asarray(gram, dtype=float))
    cut = rel_tol * max(float(np.max(np.abs(w), initial=0.0)), 1e-300)
    return int(np.sum(w > cut)), int(np.sum(w < -cut))


def check_nondegenerate(gram: np.ndarray, rel_tol: float = 1e-8) -> None:
    w = np.abs(np.linalg.eigvalsh(gram))
    if w.size and (w.max() == 0.0 or w.min() < rel_tol * w.max()):
        raise LieAlgebraError("metric is degenerate")


def build_metric(
    alg: LieAlgebraData, dec: ReductiveDecomposition, a: float, a_k: Sequence[float]
) -> MetricSpec:
    """Scale ``-B`` by ``a`` on p and by ``a_k[i]`` on ``k_i``.

    ``a_k`` has one entry per k-block; when the center is empty its entry may be
    omitted (``len(a_k) == r``).
    """
    a_k = [float(x) for x in a_k]
    if dec.center_dim == 0 and len(a_k) == dec.r:
        a_k = [1.0] + a_k
    if len(a_k) != len(dec.k_blocks):
        raise LieAlgebraError(f"expected {len(dec.k_blocks)} block scalars, got {len(a_k)}")
    if a == 0 or any(x == 0 for x in a_k):
        raise LieAlgebraError("metric scalars must be nonzero")
    g = -killing_form(alg)
    gram = np.zeros_like(g)
    for scale, blk in zip(a_k, dec.k_blocks):
        if blk:
            gram[np.ix_(blk, blk)] = scale * g[np.ix_(blk, blk)]
    for blk in dec.p_blocks:
        gram[np.ix_(blk, blk)] = float(a) * g[np.ix_(blk, blk)]
    check_nondegenerate(gram)
    gram.setflags(write=False)
    return MetricSpec(float(a), tuple(a_k), gram)


def direct_sum(
    alg1: LieAlgebraData, gram1: np.ndarray, alg2: LieAlgebraData, gram2: np.ndarray
) -> tuple[LieAlgebraData, np.ndarray]:
    n1, n2 = alg1.dim, alg2.dim
    c = np.zeros((n1 + n2,) * 3)
    c[:n1, :n1, :n1] = alg1.structure
    c[n1:, n1:, n1:] = alg2.structure
    gram = np.zeros((n1 + n2, n1 + n2))
    gram[:n1, :n1] = gram1
    gram[n1:, n1:] = gram2
    labels = tuple(f"1.{s}" for s in alg1.labels) + tuple(f"2.{s}" for s in alg2.labels)
    return LieAlgebraData(c, labels), gram


def dualize(
    alg: LieAlgebraData, dec: ReductiveDecomposition, gram
) -> tuple[LieAlgebraData, np.ndarray]:
    """Pass from ``k + p`` to ``k + ip``.

    Brackets of two p-vectors change sign, and so does the metric on p.
    Applying this twice returns the input bit for bit.
    """
    gram = np.asarray(getattr(gram, "gram", gram), dtype=float)
    p = list(dec.p)
    k = list(dec.k)
    c = alg.structure.copy()
    c[np.ix_(p, p)] *= -1.0
    new_gram = gram.copy()
    new_gram[np.ix_(p, p)] *= -1.0
    if k and p:
        new_gram[np.ix_(k, p)] = 0.0
        new_gram[np.ix_(p, k)] = 0.0
    dual = LieAlgebraData(c, alg.labels)
    res = jacobi_residual(dual)
    if res > max(10.0 * jacobi_residual(alg), jacobi_tolerance(dual)):
        raise LieAlgebraError(
            f"dual violates Jacobi (residual {res:.3g}); the split is not a symmetric pair"
        )
    return dual, new_gram


def abelian(n: int) -> LieAlgebraData:
    return LieAlgebraData(np.zeros((n, n, n)))


def hyperbolic_plane() -> LieAlgebraData:
    """Two-dimensional solvable algebra ``[e0, e1] = e1``."""
    c = np.zeros((2, 2, 2))
    c[0, 1, 1] = 1.0
    c[1, 0, 1] = -1.0
    return LieAlgebraData(c, ("h0", "h1"))
