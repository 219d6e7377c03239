from fractions import Fraction

import numpy as np
import pytest

from quasieinstein.catalog import (
    NotRealizable,
    UnknownCase,
    casimir_ratios,
    change_basis,
    list_cases,
    make_case,
    parse_case_id,
    realize,
    structure_from_matrices,
)
from quasieinstein.lie_core import decomposition_residuals, jacobi_residual, killing_form

from conftest import REALIZABLE


def test_case_ids_round_trip():
    for case in list_cases(4):
        assert parse_case_id(case.id) == case


def test_parse_rejects_bad_ids():
    for bad in ("NOPE", "SPK_UK(k=1)", "SPK_UK(q=2)", "SPK_UK(k=x)", "SPK_UK(k=2", "SPK_UK", "SU_L1L2(l1=1,l2=2)"):
        with pytest.raises(UnknownCase):
            parse_case_id(bad)


def test_known_constants():
    # constants frozen from the Casimir ratios of the standard embeddings
    assert make_case("SPK_UK", k=2).c == (Fraction(1, 3),)
    assert make_case("SO2K_UK", k=4).c == (Fraction(2, 3),)
    assert make_case("SO2K_UK", k=4).s == (15,)
    assert make_case("SO2K_UK", k=4).n == 12
    assert make_case("SUK1_S", k=3).c == (Fraction(3, 4),)
    assert make_case("SOK2_SO2SOK", k=5).c == (Fraction(3, 5),)
    e6 = make_case("E6_SO10SO2")
    assert (e6.n, e6.s, e6.c) == (32, (45,), (Fraction(2, 3),))
    e7 = make_case("E7_E6SO2")
    assert (e7.n, e7.s, e7.c) == (54, (78,), (Fraction(2, 3),))
    su = make_case("SU_L1L2", l1=2, l2=3)
    assert su.c == (Fraction(2, 5), Fraction(3, 5)) and su.s == (3, 8) and su.n == 12


def test_dimension_count():
    for case in list_cases(4):
        if case.isotropy_irreducible:
            assert case.center_dim + sum(case.s) + case.n == case.dim_g


def test_list_cases_rank_bound():
    cases = list_cases(4)
    ids = [c.id for c in cases]
    assert len(ids) == len(set(ids))
    assert all(c.rank <= 4 for c in cases if c.realizable)
    assert "SU_L1L2(l1=2,l2=2)" in ids and "SU_L1L2(l1=2,l2=3)" in ids
    assert "SU_L1L2(l1=3,l2=3)" not in ids
    assert len(list_cases(2)) < len(cases)
    with pytest.raises(ValueError):
        list_cases(1)


def test_exceptional_cases_not_realizable():
    for fam in ("E6_SO10SO2", "E7_E6SO2", "F4_TABLE1", "E8_TABLE2"):
        with pytest.raises(NotRealizable):
            realize(make_case(fam))


@pytest.mark.parametrize("case", REALIZABLE, ids=lambda c: c.id)
def test_realization_invariants(case):
    alg, dec = realize(case)
    assert alg.dim == case.dim_g
    assert dec.block_sizes() == (case.center_dim, *case.s, case.n)
    assert jacobi_residual(alg) < 1e-12
    assert np.max(np.abs(killing_form(alg) + np.eye(alg.dim))) < 1e-12
    assert max(decomposition_residuals(alg, dec).values()) < 1e-12
    for (mean, spread), c in zip(casimir_ratios(alg, dec), case.c):
        assert abs(mean - float(c)) < 1e-12 and spread < 1e-12


def test_structure_from_matrices_su2():
    # Pauli basis i sigma_k / 2 gives [e1, e2] = -e3 conventions; compare to direct commutators
    s = [np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]), np.array([[1, 0], [0, -1]])]
    mats = [0.5j * m for m in s]
    real = [np.block([[m.real, -m.imag], [m.imag, m.real]]) for m in mats]
    c = structure_from_matrices(real)
    for i in range(3):
        for j in range(3):
            comm = real[i] @ real[j] - real[j] @ real[i]
            assert np.allclose(comm, sum(c[i, j, k] * real[k] for k in range(3)))


def test_change_basis_preserves_brackets(rng):
    alg, _ = realize(make_case("SU2_R0"))
    t = rng.normal(size=(3, 3))
    c2 = change_basis(alg.structure, t)
    # new basis f_a = sum_i t[i, a] e_i
    x, y = rng.normal(size=3), rng.normal(size=3)
    lhs = t @ np.einsum("a,b,abc->c", x, y, c2)
    rhs = np.einsum("i,j,ijk->k", t @ x, t @ y, alg.structure)
    assert np.allclose(lhs, rhs)


def test_realization_is_cached_and_deterministic():
    a1, d1 = realize(make_case("SPK_UK", k=3))
    a2, d2 = realize(make_case("SPK_UK", k=3))
    assert a1 is a2 and d1 == d2


def test_description_and_dict():
    case = make_case("SO2K_UK", k=3)
    assert case.description == "u(3) ⊂ so(6)"
    doc = case.to_dict()
    assert doc["c"] == ["3/4"] and doc["params"] == {"k": 3} and doc["realizable"]
