from fractions import Fraction

import pytest

from adjvar.linalg import dot, neg, vec
from adjvar.rootsys import (
    InvalidTypeError,
    NotClosedError,
    build_root_system,
    coroot_pairing,
    highest_root,
    identify_type,
    lie_dimension,
    long_roots,
    short_roots,
    weyl_vector,
)

ALL_TYPES = [
    ("A", 1), ("A", 3), ("B", 2), ("B", 3), ("B", 5), ("C", 3), ("D", 4),
    ("D", 6), ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2),
]


@pytest.mark.parametrize("letter,rank", ALL_TYPES)
def test_root_count_matches_dimension(letter, rank):
    datum = build_root_system(letter, rank)
    assert len(datum.roots) + rank == lie_dimension(letter, rank)


@pytest.mark.parametrize("letter,rank", ALL_TYPES)
def test_roots_closed_under_negation(letter, rank):
    datum = build_root_system(letter, rank)
    for r in datum.roots:
        assert neg(r) in datum.roots


@pytest.mark.parametrize("letter,rank", ALL_TYPES)
def test_integer_simple_root_coordinates(letter, rank):
    datum = build_root_system(letter, rank)
    for r in datum.positive_roots:
        assert all(c >= 0 and c == int(c) for c in datum.root_coeffs[r])


@pytest.mark.parametrize("letter,rank", ALL_TYPES)
def test_cartan_matrix_diagonal_and_integrality(letter, rank):
    datum = build_root_system(letter, rank)
    for i, row in enumerate(datum.cartan_matrix):
        assert row[i] == 2
        for j, a in enumerate(row):
            if i != j:
                assert a <= 0


@pytest.mark.parametrize("letter,rank", ALL_TYPES)
def test_identify_type_roundtrip(letter, rank):
    datum = build_root_system(letter, rank)
    assert identify_type(datum.roots) == ((letter, rank),)


def test_identify_type_product():
    b3 = build_root_system("B", 3)
    g2 = build_root_system("G", 2)
    mixed = [r + (Fraction(0),) * 3 for r in b3.roots]
    mixed += [(Fraction(0),) * 3 + r for r in g2.roots]
    assert identify_type(mixed) == (("B", 3), ("G", 2))


def test_identify_type_rejects_non_closed():
    with pytest.raises(NotClosedError):
        identify_type([vec(1, 0), vec(-1, 0), vec(0, 1)])


def test_invalid_descriptors_rejected():
    for letter, rank in [("E", 5), ("E", 9), ("F", 3), ("G", 3), ("H", 2)]:
        with pytest.raises(InvalidTypeError):
            build_root_system(letter, rank)


def test_highest_root_dominates():
    datum = build_root_system("F", 4)
    beta = highest_root(datum)
    cb = datum.root_coeffs[beta]
    for r in datum.positive_roots:
        assert all(x <= y for x, y in zip(datum.root_coeffs[r], cb))


@pytest.mark.parametrize("letter,rank,nlong", [
    ("B", 3, 12), ("C", 3, 6), ("F", 4, 24), ("G", 2, 6), ("D", 4, 24),
])
def test_long_short_split(letter, rank, nlong):
    datum = build_root_system(letter, rank)
    longs = long_roots(datum)
    shorts = short_roots(datum)
    assert len(longs) == nlong
    assert longs | shorts == frozenset(datum.roots)
    assert not longs & shorts


def test_simply_laced_all_long():
    datum = build_root_system("E", 6)
    assert long_roots(datum) == frozenset(datum.roots)


def test_coroot_pairing_integral():
    datum = build_root_system("G", 2)
    for r in datum.roots:
        for s in datum.roots:
            p = coroot_pairing(datum, r, s)
            assert p == int(p)


def test_weyl_vector_pairs_to_one_with_simples():
    datum = build_root_system("B", 3)
    rho = weyl_vector(datum)
    for a in datum.simple_roots:
        assert 2 * dot(rho, a) == dot(a, a)
