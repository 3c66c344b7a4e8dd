import random

import pytest

from superchar.laurent import LaurentPoly, format_poly, parse_poly


def naive_product(a: dict, b: dict) -> dict:
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def rand_poly(rng, span=4):
    return LaurentPoly({rng.randint(-span, span): rng.randint(-3, 3) for _ in range(rng.randint(0, 5))})


def test_normalization_drops_zeros():
    p = LaurentPoly({0: 1, 3: 0, -2: 0})
    assert p == LaurentPoly.one()
    assert LaurentPoly({5: 0}).is_zero()
    assert not LaurentPoly.zero()
    assert bool(LaurentPoly.q())


def test_basic_arithmetic():
    q = LaurentPoly.q()
    one = LaurentPoly.one()
    assert (one + q) * (one - q) == one - q * q
    assert q + (-q) == LaurentPoly.zero()
    assert (one + q) - one == q
    assert LaurentPoly.const(3) * q == LaurentPoly({1: 3})
    assert q * 0 == LaurentPoly.zero()


def test_mul_matches_naive_convolution():
    rng = random.Random(7)
    for _ in range(300):
        a, b = rand_poly(rng), rand_poly(rng)
        got = a * b
        want = naive_product(dict(a.items()), dict(b.items()))
        assert dict(got.items()) == want


def test_monomial_product_fast_path():
    rng = random.Random(8)
    for _ in range(100):
        b = rand_poly(rng)
        for e, c in ((2, 1), (-3, 2), (0, -1)):
            m = LaurentPoly({e: c})
            assert dict((m * b).items()) == naive_product({e: c}, dict(b.items()))
            assert dict((b * m).items()) == naive_product({e: c}, dict(b.items()))


def test_bar_involution_and_shift():
    rng = random.Random(9)
    q = LaurentPoly.q()
    assert q.bar() == LaurentPoly({-1: 1})
    for _ in range(100):
        p = rand_poly(rng)
        assert p.bar().bar() == p
        assert p.shift(3).shift(-3) == p
        assert (p * q).bar() == p.bar() * q.bar()


def test_coeff_accessors():
    p = LaurentPoly({-1: 2, 0: -1, 3: 5})
    assert p.coeff(-1) == 2 and p.coeff(1) == 0
    assert p.at_one() == 6
    assert p.min_exp == -1 and p.max_exp == 3
    assert list(p.items()) == [(-1, 2), (0, -1), (3, 5)]
    neg, const, pos = p.split_by_sign()
    assert neg + LaurentPoly.const(const) + pos == p
    assert all(e < 0 for e, _ in neg.items())
    assert all(e > 0 for e, _ in pos.items())


def test_min_max_on_zero():
    with pytest.raises(ValueError):
        LaurentPoly.zero().min_exp


def test_format_fixed_strings():
    assert format_poly(LaurentPoly.zero()) == "0"
    assert format_poly(LaurentPoly.one()) == "1"
    assert format_poly(LaurentPoly.one() + LaurentPoly.q()) == "1+q"
    assert format_poly(LaurentPoly({2: 2})) == "2q^2"
    assert format_poly(LaurentPoly({-1: 1, 1: -1})) == "q^-1-q"


def test_format_parse_round_trip():
    rng = random.Random(10)
    for _ in range(200):
        p = rand_poly(rng)
        assert parse_poly(format_poly(p)) == p
