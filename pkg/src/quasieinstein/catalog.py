"""Embedding cases ``k ⊂ g`` with their exact constants and matrix models.

Constants (``n = dim p``, ``s_i = dim k_i``, Casimir ratios ``c_i``) are exact
fractions. Classical cases come with a realization as a matrix Lie algebra,
rewritten on a ``-B``-orthonormal basis adapted to ``k_0, k_1[, k_2], p``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .lie_core import (
    LieAlgebraData,
    LieAlgebraError,
    ReductiveDecomposition,
    killing_form,
)

FAMILIES = (
    "SU2_R0",
    "SO2K_UK",
    "SPK_UK",
    "SUK1_S",
    "SOK2_SO2SOK",
    "E6_SO10SO2",
    "E7_E6SO2",
    "SU_L1L2",
    "F4_TABLE1",
    "E8_TABLE2",
    "F4_TABLE2",
    "G2_TABLE2",
)
FIXED = ("SU2_R0", "E6_SO10SO2", "E7_E6SO2", "F4_TABLE1", "E8_TABLE2", "F4_TABLE2", "G2_TABLE2")
TABLE2 = ("E8_TABLE2", "F4_TABLE2", "G2_TABLE2")

_DESCRIPTIONS = {
    "SU2_R0": "u(1) ⊂ su(2)",
    "SO2K_UK": "u({k}) ⊂ so({kk})",
    "SPK_UK": "u({k}) ⊂ sp({k})",
    "SUK1_S": "s(u(1)+u({k})) ⊂ su({k1})",
    "SOK2_SO2SOK": "so(2)+so({k}) ⊂ so({k2})",
    "E6_SO10SO2": "so(10)+so(2) ⊂ e6",
    "E7_E6SO2": "e6+so(2) ⊂ e7",
    "SU_L1L2": "s(u({l1})+u({l2})) ⊂ su({l})",
    "F4_TABLE1": "f4, dims (21, 16, 14)",
    "E8_TABLE2": "e8, dims (133, 112, 2)",
    "F4_TABLE2": "f4, dims (21, 28, 2)",
    "G2_TABLE2": "g2, dims (3, 8, 2)",
}


class UnknownCase(KeyError):
    pass


class NotRealizable(LieAlgebraError):
    pass


@dataclass(frozen=True)
class EmbeddingCase:
    family: str
    params: tuple[tuple[str, int], ...]
    r: int
    n: int
    s: tuple[int, ...]
    c: tuple[Fraction, ...]
    d: tuple[int, ...] = ()
    center_dim: int = 1
    realizable: bool = False
    rank: int = 0
    dim_g: int = 0

    @property
    def id(self) -> str:
        if not self.params:
            return self.family
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({inner})"

    @property
    def param_dict(self) -> dict[str, int]:
        return dict(self.params)

    @property
    def description(self) -> str:
        p = self.param_dict
        k = p.get("k", 0)
        l1, l2 = p.get("l1", 0), p.get("l2", 0)
        return _DESCRIPTIONS[self.family].format(
            k=k, k1=k + 1, k2=k + 2, l1=l1, l2=l2, l=l1 + l2, kk=2 * k
        )

    @property
    def isotropy_irreducible(self) -> bool:
        return not self.d

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "family": self.family,
            "params": self.param_dict,
            "r": self.r,
            "n": self.n,
            "s": list(self.s),
            "c": [fraction_str(x) for x in self.c],
            "d": list(self.d),
            "realizable": self.realizable,
        }


def fraction_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def make_case(family: str, k: int | None = None, l1: int | None = None, l2: int | None = None) -> EmbeddingCase:
    """Instantiate a catalog family; raises ``UnknownCase`` for bad input."""
    F = Fraction
    if family == "SU2_R0":
        return EmbeddingCase(family, (), 0, 2, (), (), center_dim=1, realizable=True, rank=1, dim_g=3)
    if family in ("SO2K_UK", "SPK_UK", "SUK1_S", "SOK2_SO2SOK"):
        if k is None:
            raise UnknownCase(f"{family} needs parameter k")
        lower = {"SO2K_UK": 3, "SPK_UK": 2, "SUK1_S": 2, "SOK2_SO2SOK": 3}[family]
        if k < lower:
            raise UnknownCase(f"{family} requires k >= {lower}")
        if family == "SO2K_UK":
            c, s, n, rank, dim = F(k, 2 * (k - 1)), k * k - 1, k * (k - 1), k, k * (2 * k - 1)
        elif family == "SPK_UK":
            c, s, n, rank, dim = F(k, 2 * (k + 1)), k * k - 1, k * (k + 1), k, k * (2 * k + 1)
        elif family == "SUK1_S":
            c, s, n, rank, dim = F(k, k + 1), k * k - 1, 2 * k, k, (k + 1) ** 2 - 1
        else:
            c, s, n = F(k - 2, k), k * (k - 1) // 2, 2 * k
            rank, dim = (k + 2) // 2, (k + 2) * (k + 1) // 2
        return EmbeddingCase(family, (("k", k),), 1, n, (s,), (c,), realizable=True, rank=rank, dim_g=dim)
    if family == "E6_SO10SO2":
        return EmbeddingCase(family, (), 1, 32, (45,), (F(2, 3),), rank=6, dim_g=78)
    if family == "E7_E6SO2":
        return EmbeddingCase(family, (), 1, 54, (78,), (F(2, 3),), rank=7, dim_g=133)
    if family == "SU_L1L2":
        if l1 is None or l2 is None:
            raise UnknownCase("SU_L1L2 needs parameters l1 and l2")
        if l1 < 2 or l2 < 2:
            raise UnknownCase("SU_L1L2 requires l1, l2 > 1")
        L = l1 + l2
        return EmbeddingCase(
            family, (("l1", l1), ("l2", l2)), 2, 2 * l1 * l2, (l1 * l1 - 1, l2 * l2 - 1),
            (F(l1, L), F(l2, L)), realizable=True, rank=L - 1, dim_g=L * L - 1,
        )
    table = {
        "F4_TABLE1": ((21, 16, 14), 4, 52),
        "E8_TABLE2": ((133, 112, 2), 8, 248),
        "F4_TABLE2": ((21, 28, 2), 4, 52),
        "G2_TABLE2": ((3, 8, 2), 2, 14),
    }
    if family in table:
        d, rank, dim = table[family]
        return EmbeddingCase(family, (), 1, d[1] + d[2], (d[0],), (), d=d, rank=rank, dim_g=dim)
    raise UnknownCase(f"unknown case family {family!r}")


def parse_case_id(text: str) -> EmbeddingCase:
    """Accept ``FAMILY`` or ``FAMILY(k=3)`` / ``FAMILY(l1=2,l2=3)``."""
    text = text.strip()
    if "(" not in text:
        return make_case(text)
    if not text.endswith(")"):
        raise UnknownCase(f"malformed case id {text!r}")
    family, inner = text[:-1].split("(", 1)
    kwargs = {}
    for part in filter(None, inner.split(",")):
        key, _, val = part.partition("=")
        key = key.strip()
        if key not in ("k", "l1", "l2"):
            raise UnknownCase(f"unknown case parameter {key!r}")
        try:
            kwargs[key] = int(val)
        except ValueError:
            raise UnknownCase(f"malformed case parameter {part!r}") from None
    return make_case(family.strip(), **kwargs)


def list_cases(max_rank: int = 4) -> list[EmbeddingCase]:
    """Every family instantiated with rank(g) <= max_rank, plus the fixed cases."""
    if max_rank < 2:
        raise ValueError("max_rank must be at least 2")
    out = [make_case("SU2_R0")]
    out += [make_case("SO2K_UK", k=k) for k in range(3, max_rank + 1)]
    out += [make_case("SPK_UK", k=k) for k in range(2, max_rank + 1)]
    out += [make_case("SUK1_S", k=k) for k in range(2, max_rank + 1)]
    out += [make_case("SOK2_SO2SOK", k=k) for k in range(3, 2 * max_rank)]
    out += [make_case("E6_SO10SO2"), make_case("E7_E6SO2")]
    out += [
        make_case("SU_L1L2", l1=l1, l2=l2)
        for l1 in range(2, max_rank + 1)
        for l2 in range(l1, max_rank + 1)
        if l1 + l2 - 1 <= max_rank
    ]
    out += [make_case(f) for f in ("F4_TABLE1", "E8_TABLE2", "F4_TABLE2", "G2_TABLE2")]
    return out


def constants(case: EmbeddingCase) -> tuple[int, tuple[int, ...], tuple[Fraction, ...], tuple[int, ...]]:
    return case.n, case.s, case.c, case.d


# -- matrix models ----------------------------------------------------------


def _unit(n: int, i: int, j: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=complex)
    m[i, j] = 1.0
    return m


def _su_basis(n: int) -> list[np.ndarray]:
    """Traceless anti-Hermitian n x n matrices."""
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            out.append(_unit(n, i, j) - _unit(n, j, i))
            out.append(1j * (_unit(n, i, j) + _unit(n, j, i)))
    for i in range(n - 1):
        out.append(1j * (_unit(n, i, i) - _unit(n, i + 1, i + 1)))
    return out


def _so_basis(n: int, offset: int = 0, size: int | None = None) -> list[np.ndarray]:
    size = n if size is None else size
    out = []
    for i in range(offset, offset + size):
        for j in range(i + 1, offset + size):
            out.append(_unit(n, i, j) - _unit(n, j, i))
    return out


def _embed(block: np.ndarray, n: int, offset: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=complex)
    s = block.shape[0]
    m[offset:offset + s, offset:offset + s] = block
    return m


def _realify(z: np.ndarray) -> np.ndarray:
    """Complex k x k matrix acting on C^k, as a real 2k x 2k matrix."""
    a, b = z.real, z.imag
    return np.block([[a, -b], [b, a]]).astype(complex)


def _model(case: EmbeddingCase):
    """Spanning matrices for g and for each k-block."""
    p = case.param_dict
    fam = case.family
    if fam == "SU2_R0":
        g = _su_basis(2)
        return g, [[1j * np.diag([1.0, -1.0])]]
    if fam == "SO2K_UK":
        k = p["k"]
        g = _so_basis(2 * k)
        k0 = [_realify(1j * np.eye(k))]
        k1 = [_realify(z) for z in _su_basis(k)]
        return g, [k0, k1]
    if fam == "SPK_UK":
        k = p["k"]
        zero = np.zeros((k, k), dtype=complex)

        def diag_part(a):
            return np.block([[a, zero], [zero, a.conj()]])

        def off_part(b):
            return np.block([[zero, b], [-b.conj(), zero]])

        u_k = _su_basis(k) + [1j * np.eye(k)]
        sym = []
        for i in range(k):
            for j in range(i, k):
                s = _unit(k, i, j) + _unit(k, j, i)
                sym += [s, 1j * s]
        g = [diag_part(a) for a in u_k] + [off_part(b) for b in sym]
        return g, [[diag_part(1j * np.eye(k))], [diag_part(a) for a in _su_basis(k)]]
    if fam == "SUK1_S":
        k = p["k"]
        n = k + 1
        k0 = [1j * np.diag([float(k)] + [-1.0] * k)]
        k1 = [_embed(z, n, 1) for z in _su_basis(k)]
        return _su_basis(n), [k0, k1]
    if fam == "SOK2_SO2SOK":
        k = p["k"]
        n = k + 2
        return _so_basis(n), [_so_basis(n, 0, 2), _so_basis(n, 2, k)]
    if fam == "SU_L1L2":
        l1, l2 = p["l1"], p["l2"]
        n = l1 + l2
        k0 = [1j * np.diag([float(l2)] * l1 + [-float(l1)] * l2)]
        k1 = [_embed(z, n, 0) for z in _su_basis(l1)]
        k2 = [_embed(z, n, l1) for z in _su_basis(l2)]
        return _su_basis(n), [k0, k1, k2]
    raise NotRealizable(f"{case.id} has no matrix realization")


def _vec(m: np.ndarray) -> np.ndarray:
    return np.concatenate([m.real.ravel(), m.imag.ravel()])


def structure_from_matrices(mats: list[np.ndarray]) -> np.ndarray:
    """Structure constants of the span of ``mats`` (must be a basis of a Lie algebra)."""
    basis = np.array([_vec(m) for m in mats]).T
    pinv = np.linalg.pinv(basis)
    n = len(mats)
    c = np.zeros((n, n, n))
    for i in range(n):
        for j in range(i + 1, n):
            comm = _vec(mats[i] @ mats[j] - mats[j] @ mats[i])
            coords = pinv @ comm
            if np.max(np.abs(basis @ coords - comm), initial=0.0) > 1e-10:
                raise LieAlgebraError("span of matrices is not closed under the commutator")
            c[i, j] = coords
            c[j, i] = -coords
    return c


def change_basis(structure: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Structure constants in the basis whose vectors are the columns of ``t``."""
    tinv = np.linalg.inv(t)
    return np.einsum("ia,jb,ijk,ck->abc", t, t, structure, tinv, optimize=True)


def _orthonormalize(vectors: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Gram-Schmidt (via Cholesky) of the columns of ``vectors`` w.r.t. the inner product ``g``."""
    gram = vectors.T @ g @ vectors
    chol = np.linalg.cholesky(0.5 * (gram + gram.T))
    return vectors @ np.linalg.inv(chol).T


@lru_cache(maxsize=None)
def realize(case: EmbeddingCase) -> tuple[LieAlgebraData, ReductiveDecomposition]:
    """Matrix model of a classical case on a ``-B``-orthonormal adapted basis."""
    if not case.realizable:
        raise NotRealizable(f"{case.id} is not realizable (exceptional algebra)")
    g_mats, k_mats = _model(case)
    c_g = structure_from_matrices(g_mats)
    neg_b = -killing_form(LieAlgebraData(c_g))
    basis = np.array([_vec(m) for m in g_mats]).T
    pinv = np.linalg.pinv(basis)
    k_coords = [np.array([pinv @ _vec(m) for m in blk]).T for blk in k_mats]
    k_all = np.hstack(k_coords)
    # p is the (-B)-orthogonal complement of k
    _, sv, vh = np.linalg.svd(k_all.T @ neg_b)
    rank = int(np.sum(sv > 1e-10 * sv[0]))
    p_coords = vh[rank:].T
    cols = []
    for coords in k_coords + [p_coords]:
        cols.append(_orthonormalize(coords, neg_b))
    e0 = cols[0][:, 0]
    lead = e0[np.argmax(np.abs(e0) > 1e-12)]
    if lead < 0:
        cols[0] = -cols[0]
    t = np.hstack(cols)
    c = change_basis(c_g, t)
    c = 0.5 * (c - np.transpose(c, (1, 0, 2)))
    sizes = [blk.shape[1] for blk in cols]
    labels, k_blocks, start = [], [], 0
    for i, size in enumerate(sizes[:-1]):
        k_blocks.append(tuple(range(start, start + size)))
        labels += [f"k{i}_{j}" for j in range(size)]
        start += size
    p_block = tuple(range(start, start + sizes[-1]))
    labels += [f"p_{j}" for j in range(sizes[-1])]
    expected = (case.center_dim,) + case.s + (case.n,)
    if tuple(sizes) != expected:
        raise LieAlgebraError(f"{case.id}: block sizes {tuple(sizes)} != {expected}")
    alg = LieAlgebraData(c, tuple(labels))
    dec = ReductiveDecomposition(tuple(k_blocks), (p_block,))
    return alg, dec


def subalgebra_killing(alg: LieAlgebraData, block) -> np.ndarray:
    """Killing form of the subalgebra spanned by ``block`` (which must be closed)."""
    idx = list(block)
    sub = alg.structure[np.ix_(idx, idx, idx)]
    return np.einsum("ilk,jkl->ij", sub, sub)


def casimir_ratios(alg: LieAlgebraData, dec: ReductiveDecomposition) -> list[tuple[float, float]]:
    """For each ``k_i`` (i >= 1): mean and spread of ``B_{k_i}(X,X) / B(X,X)`` over its basis."""
    b = killing_form(alg)
    out = []
    for blk in dec.k_blocks[1:]:
        bi = subalgebra_killing(alg, blk)
        ratios = np.diag(bi) / np.diag(b[np.ix_(blk, blk)])
        out.append((float(np.mean(ratios)), float(np.ptp(ratios))))
    return out
