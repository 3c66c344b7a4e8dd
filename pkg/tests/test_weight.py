import random

import pytest

from conftest import partitions_of
from superchar.weight import (
    DominantTuple,
    Flavor,
    Weight,
    bar,
    from_weight,
    line,
    parse_index,
    format_index,
    survives_truncation,
    to_weight,
)


def random_tuple(rng, kmax=4, size=12):
    k = rng.randint(0, kmax)
    lam0 = tuple(sorted((rng.randint(-3, 3) for _ in range(k)), reverse=True))
    pool = [mu for n in range(size + 1) for mu in partitions_of(n)]
    y0 = frozenset(j for j in range(1, k) if rng.random() < 0.3)
    return DominantTuple(rng.randint(-2, 2), lam0, rng.choice(pool), rng.choice(pool), y0)


def test_weight_normalizes_and_sorts():
    w = Weight.of({line(2): 0, bar(1): 3})
    assert w.coeffs == {bar(1): 3}
    assert w.coeff(line(2)) == 0
    assert Weight.zero(5).level == 5
    assert Weight.of({}, 0) == Weight.zero()


def test_weight_algebra():
    a = Weight.of({line(2): 1, bar(1): 2}, level=1)
    b = Weight.of({line(2): -1, line(0): 4}, level=2)
    s = a.add(b)
    assert s.level == 3
    assert s.coeffs == {bar(1): 2, line(0): 4}
    assert a.add_coeffs({line(2): 1}, mult=-1).coeffs == {bar(1): 2}


def test_weight_str_and_json():
    w = Weight.of({bar(1): 2, line(-1): -1, line(2): 2}, level=1)
    assert str(w) == "1*L0+2e(bar1)-1e(-1/2)+2e(1)"
    assert Weight.from_json_obj(w.to_json_obj()) == w
    assert str(Weight.zero()) == "0"


def test_index_format_round_trip():
    for ix in (line(-3), line(-1), line(0), line(1), line(4), bar(1), bar(7)):
        assert parse_index(format_index(ix)) == ix
    assert format_index(line(1)) == "1/2"
    assert format_index(bar(2)) == "bar2"


def test_tuple_validation():
    with pytest.raises(ValueError):
        DominantTuple(0, (1,), (1, 2), ())  # lam_minus not a partition
    with pytest.raises(ValueError):
        DominantTuple(0, (0, 1), (), (), frozenset({1}))  # marked pair increases
    with pytest.raises(ValueError):
        DominantTuple(0, (1, 0), (), (), frozenset({2}))  # mark out of range
    t = DominantTuple(0, (1, 1), (), (), frozenset({1}))
    assert t.k == 2


def test_tuple_format_parse_round_trip():
    rng = random.Random(3)
    for _ in range(200):
        t = random_tuple(rng)
        assert DominantTuple.parse(t.format()) == t
    t = DominantTuple.parse("a=-1;l0=2,2,0;lm=(1,1);lp=(3);y0=1")
    assert t == DominantTuple(-1, (2, 2, 0), (1, 1), (3,), frozenset({1}))


def test_to_weight_frozen_values():
    t = DominantTuple(2, (3, 1), (1,), (2, 1))
    cases = {
        Flavor.PLAIN: {bar(1): 3, bar(2): 1, line(2): 2, line(4): 1, line(0): -1},
        Flavor.BAR: {bar(1): 3, bar(2): 1, line(1): 2, line(3): 1, line(0): -1},
        Flavor.DIAMOND: {bar(1): 3, bar(2): 1, line(2): 2, line(4): 1, line(-1): -1},
        Flavor.BAR_DIAMOND: {bar(1): 3, bar(2): 1, line(1): 2, line(3): 1, line(-1): -1},
        # theta coordinates: theta(2,1) = {1: 2, 2: 1}, theta(conj(1,)) = {1: 1}
        Flavor.TILDE: {bar(1): 3, bar(2): 1, line(1): 2, line(2): 1, line(0): -1},
    }
    for flavor, coeffs in cases.items():
        w = to_weight(t, flavor)
        assert w.level == 2
        assert w.coeffs == coeffs


def test_zero_tuple_maps_to_zero_everywhere():
    t = DominantTuple(0, (), (), ())
    for flavor in Flavor:
        assert to_weight(t, flavor) == Weight.zero()


def test_flavor_bijection_random():
    rng = random.Random(4)
    for _ in range(300):
        t = random_tuple(rng)
        for flavor in Flavor:
            back = from_weight(to_weight(t, flavor), flavor, k=t.k, y0=t.y0)
            assert back == t


def test_from_weight_rejects_non_images():
    # positive-side rows must weakly decrease in the plain flavor
    w = Weight.of({line(2): 1, line(4): 2})
    with pytest.raises(ValueError):
        from_weight(w, Flavor.PLAIN)
    # tilde coordinates must be a theta image
    w = Weight.of({line(2): 1})
    with pytest.raises(ValueError):
        from_weight(w, Flavor.TILDE)


def test_survives_truncation():
    w = Weight.of({line(4): 1, line(0): -1})
    assert survives_truncation(w, 1, 2)
    assert not survives_truncation(w, 1, 1)  # epsilon_2 dies at n=1
    assert not survives_truncation(w, 0, 2)  # epsilon_0 dies at m=0
    assert survives_truncation(Weight.zero(), 0, 0)
