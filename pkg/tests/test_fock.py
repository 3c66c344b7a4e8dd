import itertools
import random

import pytest

from superchar.fock import (
    CBTable,
    FockMonomial,
    FockShape,
    WindowError,
    atypicality,
    bar_element,
    bar_label_direct,
    bar_label_reference,
    bar_monomial,
    block_to_coxeter,
    chevalley_action,
    check_window,
    content_vector,
    embed_label,
    extract_labels,
    format_monomial,
    is_normal_label,
    label_to_tuple,
    parse_monomial,
    straighten,
    transition_poly,
    tuple_to_label,
)
from superchar.laurent import LaurentPoly
from superchar.weight import DominantTuple
from conftest import partitions_of


def all_labels(shape, window):
    """Every normal label of the shape with letters inside the window."""
    lo, hi = window
    letters = range(lo, hi + 1)
    w_groups = {
        size: [tuple(sorted(c, reverse=True)) for c in itertools.combinations(letters, size)]
        for size in (shape.m, shape.n)
    }
    mids = []
    for mid in itertools.product(letters, repeat=shape.k):
        lab = FockMonomial((), mid, ())
        if is_normal_label(lab, FockShape(0, shape.k, 0, shape.marks)):
            mids.append(mid)
    out = []
    for left in w_groups[shape.m]:
        for mid in mids:
            for right in w_groups[shape.n]:
                out.append(FockMonomial(left, mid, right))
    return out


def elements_equal(a, b):
    keys = set(a) | set(b)
    return all(a.get(k, LaurentPoly.zero()) == b.get(k, LaurentPoly.zero()) for k in keys)


def test_shape_validation():
    with pytest.raises(ValueError):
        FockShape(-1, 0, 0)
    with pytest.raises(ValueError):
        FockShape(1, 2, 1, frozenset({2}))
    sh = FockShape(2, 3, 1, frozenset({1}))
    assert [sh.kind(p) for p in range(sh.size)] == ["w", "w", "v", "v", "v", "w"]
    assert sh.groups() == [("w", 0, 2), ("v", 2, 4), ("v", 4, 5), ("w", 5, 6)]


def test_monomial_format_round_trip():
    mono = FockMonomial((3, 1), (0, 0), (-2,))
    assert parse_monomial(format_monomial(mono)) == mono
    assert mono.letters == (3, 1, 0, 0, -2)


def test_is_normal_label():
    sh = FockShape(1, 2, 1, frozenset({1}))
    assert is_normal_label(FockMonomial((2,), (0, 1), (0,)), sh)
    assert not is_normal_label(FockMonomial((2,), (1, 0), (0,)), sh)  # marked run must rise
    assert not is_normal_label(FockMonomial((2,), (0, 1), ()), sh)  # wrong shape
    loose = FockShape(1, 2, 1)
    assert is_normal_label(FockMonomial((2,), (1, 0), (0,)), loose)
    assert not is_normal_label(FockMonomial((2,), (1, 0), (0, 0)), loose)


def test_embed_and_extract():
    sh = FockShape(2, 0, 0)
    lab = FockMonomial((2, 1), (), ())
    emb = embed_label(lab, sh)
    assert emb == {
        lab: LaurentPoly.one(),
        FockMonomial((1, 2), (), ()): LaurentPoly({-1: -1}),
    }
    assert extract_labels(emb, sh) == {lab: LaurentPoly.one()}
    with pytest.raises(ValueError):
        embed_label(FockMonomial((1, 2), (), ()), sh)


def test_straighten_collapses_alternating_expansion():
    sh = FockShape(2, 0, 0)
    lab = FockMonomial((2, 1), (), ())
    st = straighten(embed_label(lab, sh), sh)
    # each rearrangement straightens back onto the label
    assert st == {lab: LaurentPoly({-2: 1, 0: 1})}
    # a monomial with a repeated letter in a wedge group dies
    dup = straighten({FockMonomial((1, 1), (), ()): LaurentPoly.one()}, sh)
    assert dup == {}


def test_check_window():
    with pytest.raises(WindowError):
        check_window(FockMonomial((5,), (), ()), (-2, 2))
    check_window(FockMonomial((2,), (-2,), ()), (-2, 2))


def test_bar_is_an_involution():
    sh = FockShape(1, 1, 1)
    window = (-2, 2)
    tab = CBTable(sh, window)
    for lab in all_labels(sh, window):
        image = tab.bar_label(lab)
        assert image[lab] == LaurentPoly.one()
        back = {}
        for m, c in image.items():
            for m2, c2 in tab.bar_label(m).items():
                back[m2] = back.get(m2, LaurentPoly.zero()) + c.bar() * c2
        assert elements_equal(back, {lab: LaurentPoly.one()})


def test_bar_direct_matches_reference_expansion():
    cases = [
        (FockShape(1, 1, 1), (-1, 1)),
        (FockShape(1, 2, 1, frozenset({1})), (-1, 1)),
        (FockShape(0, 2, 1), (-1, 1)),
    ]
    for sh, window in cases:
        for lab in all_labels(sh, window):
            direct = bar_label_direct(lab, sh, window)
            reference = bar_label_reference(lab, sh, window)
            assert elements_equal(direct, reference), (sh, window, str(lab))


def test_bar_intertwines_twisted_f():
    sh = FockShape(1, 1, 1)
    window = (-3, 3)
    rng = random.Random(11)
    labs = all_labels(sh, (-2, 2))
    for _ in range(20):
        mono = rng.choice(labs)
        elem = {mono: LaurentPoly({rng.randint(-1, 1): 1})}
        a = rng.randint(-2, 1)
        lhs = bar_element(chevalley_action("F", a, elem, sh, twisted=True), sh, window)
        rhs = chevalley_action("F", a, bar_element(elem, sh, window), sh)
        assert elements_equal(lhs, rhs)


def test_k_action_is_diagonal():
    sh = FockShape(1, 1, 1)
    mono = FockMonomial((1,), (0,), (-1,))
    out = chevalley_action("K", 0, {mono: LaurentPoly.one()}, sh)
    # v letter 0 contributes +1, w letter 1 contributes +1: total q^2
    assert out == {mono: LaurentPoly({2: 1})}
    inv = chevalley_action("Kinv", 0, {mono: LaurentPoly.one()}, sh)
    assert inv == {mono: LaurentPoly({-2: 1})}


def test_canonical_defining_properties():
    sh = FockShape(1, 1, 1)
    window = (-2, 2)
    tab = CBTable(sh, window)
    for lab in all_labels(sh, window):
        canon = tab.canonical(lab)
        dual = tab.dual_canonical(lab)
        assert canon[lab] == LaurentPoly.one()
        assert dual[lab] == LaurentPoly.one()
        for m, c in canon.items():
            if m != lab:
                assert c.min_exp >= 1  # off-diagonal in qZ[q], so value 0 at q=0
        for m, c in dual.items():
            if m != lab:
                assert c.max_exp <= -1
        for elem in (canon, dual):
            image = {}
            for m, c in elem.items():
                for m2, c2 in tab.bar_label(m).items():
                    image[m2] = image.get(m2, LaurentPoly.zero()) + c.bar() * c2
            assert elements_equal(image, elem)


def test_transition_poly_accessors():
    sh = FockShape(1, 1, 1)
    tab = CBTable(sh, (-2, 2))
    lab = FockMonomial((1,), (1,), (0,))
    assert transition_poly(tab, lab, lab) == LaurentPoly.one()
    with pytest.raises(ValueError):
        transition_poly(tab, lab, lab, kind="mixed")


def test_content_is_block_invariant():
    sh = FockShape(1, 1, 1)
    tab = CBTable(sh, (-2, 2))
    for lab in all_labels(sh, (-2, 2)):
        cv = content_vector(lab)
        for other in tab.closure(lab):
            assert content_vector(other) == cv


def test_atypicality_counts_shared_letters():
    assert atypicality(FockMonomial((2,), (0,), (-1,))) == 0
    assert atypicality(FockMonomial((1,), (1,), (0,))) == 1
    assert atypicality(FockMonomial((1,), (1, 1), (1,))) == 2


def test_tuple_label_round_trip():
    rng = random.Random(12)
    pool = [mu for size in range(7) for mu in partitions_of(size) if not mu or mu[0] <= 4]
    for _ in range(100):
        k = rng.randint(0, 3)
        lam0 = tuple(sorted((rng.randint(-2, 2) for _ in range(k)), reverse=True))
        y0 = frozenset(j for j in range(1, k) if rng.random() < 0.4)
        t = DominantTuple(rng.randint(-1, 1), lam0, rng.choice(pool), rng.choice(pool), y0)
        m = n = 5
        lab = tuple_to_label(t, m, n)
        sh = FockShape(m, k, n, t.y0)
        assert is_normal_label(lab, sh)
        assert label_to_tuple(lab, sh, t.a) == t


def test_block_to_coxeter_regular_orbit():
    sh = FockShape(0, 3, 0)
    labels = [FockMonomial((), mid, ()) for mid in itertools.permutations((0, 1, 2))]
    rank, J, perms = block_to_coxeter(labels, sh)
    assert rank == 3 and J == frozenset()
    assert sorted(perms.values()) == sorted(itertools.permutations((1, 2, 3)))
    with pytest.raises(ValueError):
        block_to_coxeter([FockMonomial((), (0, 0, 1), ())], sh)


def test_block_to_coxeter_antispherical():
    from superchar import hecke

    sh = FockShape(2, 0, 2)
    labels = [
        FockMonomial((l1, l2), (), (r1, r2))
        for (l1, l2) in itertools.combinations(range(3, -1, -1), 2)
        for (r1, r2) in itertools.combinations(range(3, -1, -1), 2)
        if {l1, l2} | {r1, r2} == {0, 1, 2, 3} and not ({l1, l2} & {r1, r2})
    ]
    rank, J, perms = block_to_coxeter(labels, sh)
    assert rank == 4
    for w in perms.values():
        assert hecke.is_minimal(w, J)
    assert len(set(perms.values())) == len(labels)
