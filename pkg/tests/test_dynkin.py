import itertools

import pytest

from superchar.dynkin import (
    BorelOrdering,
    OddRoot,
    TARGET_FLAVOR,
    TARGETS,
    flavor_window,
    gl_k2_nonstandard,
    gl_k2_standard,
    height_of_drop,
    odd_reflect,
    positive_roots,
    root_parity,
    sequence_gl_k2,
    sequence_to_target,
    standard_window,
    transport_highest_weight,
)
from superchar.weight import DominantTuple, Flavor, Weight, bar, is_bar, line, to_weight


def test_standard_window_order():
    b = standard_window(2, -2, 2)
    assert b.order == (line(-2), line(-1), line(0), bar(1), bar(2), line(1), line(2))
    assert b.position(bar(2)) == 4
    with pytest.raises(ValueError):
        b.position(line(4))
    with pytest.raises(ValueError):
        BorelOrdering((line(0), line(0)))


def test_flavor_window_index_sets():
    for k, m, n in ((0, 2, 2), (2, 1, 3), (1, 0, 2)):
        lines = {
            f: [ix[1] for ix in flavor_window(f, k, m, n).order if not is_bar(ix)] for f in Flavor
        }
        assert lines[Flavor.PLAIN] == [tw for tw in range(-2 * m + 2, 2 * n + 1) if tw % 2 == 0]
        assert lines[Flavor.BAR_DIAMOND] == [tw for tw in range(-2 * m + 1, 2 * n) if tw % 2 == 1 or tw % 2 == -1]
        assert lines[Flavor.BAR] == [tw for tw in lines[Flavor.PLAIN] if tw <= 0] + [
            tw for tw in lines[Flavor.BAR_DIAMOND] if tw > 0
        ]
        assert lines[Flavor.DIAMOND] == [tw for tw in lines[Flavor.BAR_DIAMOND] if tw < 0] + [
            tw for tw in lines[Flavor.PLAIN] if tw > 0
        ]
        assert lines[Flavor.TILDE] == sorted(lines[Flavor.PLAIN] + lines[Flavor.BAR_DIAMOND])
        for f in Flavor:
            assert sum(1 for ix in flavor_window(f, k, m, n).order if is_bar(ix)) == k


def test_odd_reflect_typical_shifts_by_root():
    b = BorelOrdering((line(-1), bar(1), line(1)))
    alpha = OddRoot(line(-1), bar(1))
    mu = Weight.of({bar(1): 1})
    nb, nm = odd_reflect(b, mu, alpha)
    assert nb.order == (bar(1), line(-1), line(1))
    assert nm.coeffs == {line(-1): -1, bar(1): 2}
    # reflecting back restores both
    back_b, back_m = odd_reflect(nb, nm, OddRoot(bar(1), line(-1)))
    assert back_b.order == b.order and back_m == mu


def test_odd_reflect_atypical_keeps_weight():
    b = BorelOrdering((line(-1), bar(1), line(1)))
    mu = Weight.of({line(-1): 1, bar(1): -1})
    nb, nm = odd_reflect(b, mu, OddRoot(line(-1), bar(1)))
    assert nm == mu
    assert nb.order == (bar(1), line(-1), line(1))


def test_odd_reflect_rejects_bad_roots():
    b = standard_window(1, 0, 2)
    with pytest.raises(ValueError):
        odd_reflect(b, Weight.zero(), OddRoot(line(0), line(1)))  # not adjacent
    with pytest.raises(ValueError):
        odd_reflect(b, Weight.zero(), OddRoot(line(0), bar(1)))  # even root


def test_sequences_are_simple_at_each_step():
    # every root in the sequence is simple and odd when it is applied
    for target in TARGETS:
        b = standard_window(1, -8, 8)
        mu = Weight.zero()
        for alpha in sequence_to_target(target, 3):
            assert root_parity(alpha.r, alpha.s) == 1
            b, mu = odd_reflect(b, mu, alpha)  # raises if not simple


def test_transport_matches_flavor_labels():
    tuples = [
        DominantTuple(0, (), (), ()),
        DominantTuple(1, (2, 0), (1,), (2, 1)),
        DominantTuple(-1, (1,), (2, 2), (1, 1, 1)),
    ]
    for t, target in itertools.product(tuples, TARGETS):
        b, mu = transport_highest_weight(t, 3, target)
        assert mu == to_weight(t, TARGET_FLAVOR[target])


def test_transport_validates_rank():
    t = DominantTuple(0, (), (), (5,))
    with pytest.raises(ValueError):
        transport_highest_weight(t, 2, "s")  # first part 5 exceeds n
    b, mu = transport_highest_weight(t, 2, "c")  # only the column count matters
    assert mu == to_weight(t, Flavor.PLAIN)


def test_gl_k2_windows_and_sequence():
    assert gl_k2_nonstandard(2).order == (line(-1), bar(1), bar(2), line(1))
    assert gl_k2_standard(2).order == (bar(1), bar(2), line(-1), line(1))
    b = gl_k2_nonstandard(2)
    mu = Weight.zero()
    for alpha in sequence_gl_k2(2):
        b, mu = odd_reflect(b, mu, alpha)
    assert b.order == gl_k2_standard(2).order
    assert mu == Weight.zero()


def test_positive_roots_and_heights():
    b = BorelOrdering((line(0), bar(1), line(2)))
    assert positive_roots(b) == [
        (line(0), bar(1)),
        (line(0), line(2)),
        (bar(1), line(2)),
    ]
    # drop by the long root = sum of the two simples: height 2
    assert height_of_drop(b, {line(0): 1, line(2): -1}) == 2
    assert height_of_drop(b, {line(0): 1, bar(1): -1}) == 1
    assert height_of_drop(b, {line(0): -1, bar(1): 1}) is None
    assert height_of_drop(b, {}) == 0
