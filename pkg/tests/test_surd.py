from fractions import Fraction

import pytest

from quasieinstein.surd import Surd, quadratic_roots, squarefree_split


def test_squarefree_split():
    assert squarefree_split(72) == (6, 2)
    assert squarefree_split(5) == (1, 5)
    assert squarefree_split(144) == (12, 1)
    with pytest.raises(ValueError):
        squarefree_split(0)


def test_normalization():
    s = Surd(1, 2, 8)
    assert (s.u, s.v, s.d) == (1, 4, 2)
    assert Surd(1, 3, 9) == 10
    assert Surd(1, 3, 9).is_rational


def test_arithmetic():
    r5 = Surd.sqrt(5)
    assert r5 * r5 == 5
    x = (3 - r5) / 4
    assert 4 * x * x * 2 - 12 * x + 2 == 0
    assert (1 + r5) / (1 - r5) == Surd(Fraction(-3, 2), Fraction(-1, 2), 5)


def test_sign_and_order():
    r5 = Surd.sqrt(5)
    assert (r5 - Fraction(9, 4)).sign() == -1
    assert (r5 - Fraction(22, 10)).sign() == 1
    assert (3 - r5) / 4 < Fraction(2, 7)
    assert sorted([r5, Surd(2), Surd(3)]) == [Surd(2), r5, Surd(3)]


def test_mixed_radicands_rejected():
    with pytest.raises(ValueError):
        Surd.sqrt(2) + Surd.sqrt(3)


def test_string_and_dict():
    x = (3 - Surd.sqrt(5)) / 4
    assert str(x) == "3/4 - 1/4*sqrt(5)"
    assert x.to_dict() == {"u": "3/4", "v": "-1/4", "d": 5}
    assert str(Surd(Fraction(5, 11))) == "5/11"


def test_quadratic_roots():
    assert quadratic_roots(22, -32, 10) == (Fraction(5, 11), 1)
    x1, x2 = quadratic_roots(8, -12, 2)
    assert x1 == (3 - Surd.sqrt(5)) / 4 and x2 == (3 + Surd.sqrt(5)) / 4
    assert quadratic_roots(1, 0, 1) == ()
    assert quadratic_roots(1, -2, 1) == (1,)
    assert quadratic_roots(0, 2, -1) == (Fraction(1, 2),)
    with pytest.raises(ValueError):
        quadratic_roots(0, 0, 1)


def test_sqrt_of_negative():
    with pytest.raises(ValueError):
        Surd.sqrt(-1)


def test_float_conversion():
    assert abs(float(Surd.sqrt(2)) - 2 ** 0.5) < 1e-15


def test_radicands_differing_by_square_are_reconciled():
    a = Surd(0, 1, 2)
    b = Surd.__new__(Surd)
    object.__setattr__(b, "u", Fraction(0))
    object.__setattr__(b, "v", Fraction(1))
    object.__setattr__(b, "d", 8)
    assert a + b == Surd(0, 3, 2)
    assert b * b == 8


def test_large_radicand_is_fast():
    big = (10**9 + 7) * (10**9 + 9)
    s, d = squarefree_split(big * 49)
    assert s == 7 and d == big
    x = Surd.sqrt(Fraction(big, 3))
    assert x * x == Fraction(big, 3)
