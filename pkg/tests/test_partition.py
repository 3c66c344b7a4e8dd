import itertools

import pytest

from conftest import partitions_of, partitions_up_to
from superchar.partition import (
    check_partition,
    conjugate,
    format_partition,
    from_theta,
    parse_partition,
    super_schur_monomials,
    theta,
)


def conjugate_oracle(mu):
    # transpose the 0/1 diagram directly
    if not mu:
        return ()
    return tuple(sum(1 for r in mu if r > j) for j in range(mu[0]))


def super_tableaux_oracle(shape, parities):
    """Count fillings cell by cell: rows and columns weakly increase, an
    even letter repeats only along rows, an odd letter only down columns."""
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    counts = {}

    def place(i, grid):
        if i == len(cells):
            key = tuple(sum(1 for v in grid.values() if v == a) for a in range(len(parities)))
            counts[key] = counts.get(key, 0) + 1
            return
        r, c = cells[i]
        for a in range(len(parities)):
            up = grid.get((r - 1, c))
            left = grid.get((r, c - 1))
            if up is not None and (a < up or (a == up and parities[a] == 0)):
                continue
            if left is not None and (a < left or (a == left and parities[a] == 1)):
                continue
            grid[(r, c)] = a
            place(i + 1, grid)
            del grid[(r, c)]

    place(0, {})
    return counts


def test_check_partition_rejects_bad_rows():
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((2, -1))
    assert check_partition((2, 0)) == (2,)
    assert check_partition(()) == ()


def test_conjugate_matches_diagram_transpose():
    for mu in partitions_up_to(12):
        assert conjugate(mu) == conjugate_oracle(mu)


def test_conjugate_is_an_involution():
    for mu in partitions_up_to(12):
        assert conjugate(conjugate(mu)) == mu


def test_theta_sums_to_size():
    for mu in partitions_up_to(12):
        assert sum(theta(mu).values()) == sum(mu)


def test_theta_hand_values():
    # staircase (2,1): diagonal length 1, arm 1, leg 1
    assert theta(()) == {}
    assert theta((2, 1)) == {1: 2, 2: 1}
    assert theta((1,)) == {1: 1}
    assert theta((3,)) == {1: 1, 2: 2}
    assert theta((1, 1, 1)) == {1: 3}


def test_from_theta_round_trip():
    for mu in partitions_up_to(12):
        assert from_theta(theta(mu)) == mu


def test_from_theta_rejects_non_images():
    with pytest.raises(ValueError):
        from_theta({1: -1})
    with pytest.raises(ValueError):
        from_theta({2: 1})  # integer slot with no half slot on the diagonal
    with pytest.raises(ValueError):
        from_theta({1: 1, 3: 1})  # half entries must strictly decrease


def test_super_schur_single_even_letter():
    assert super_schur_monomials((3,), (0,)) == (((3,), 1),)
    assert super_schur_monomials((1, 1), (0,)) == ()
    assert super_schur_monomials((), (0,)) == (((0,), 1),)


def test_super_schur_single_odd_letter():
    assert super_schur_monomials((1, 1), (1,)) == (((2,), 1),)
    assert super_schur_monomials((2,), (1,)) == ()


def test_super_schur_classical_values():
    # s_(2,1) in two even variables: x^2 y + x y^2
    assert super_schur_monomials((2, 1), (0, 0)) == (((2, 1), 1), ((1, 2), 1))
    # Kostka number K_{(2,1),(1,1,1)} = 2
    table = dict(super_schur_monomials((2, 1), (0, 0, 0)))
    assert table[(1, 1, 1)] == 2


def test_super_schur_matches_tableau_enumeration():
    alphabets = [(0,), (1,), (0, 1), (1, 0), (0, 0), (1, 1), (0, 1, 0), (1, 0, 1)]
    shapes = [mu for n in range(6) for mu in partitions_of(n)]
    for shape, parities in itertools.product(shapes, alphabets):
        assert dict(super_schur_monomials(shape, parities)) == super_tableaux_oracle(shape, parities)


def test_format_parse_round_trip():
    for mu in partitions_up_to(8):
        assert parse_partition(format_partition(mu)) == mu
