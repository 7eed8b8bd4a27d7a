import pytest

from adjvar.linalg import dot
from adjvar.rootsys import build_root_system, highest_root, long_roots, weyl_vector
from adjvar.weyl import (
    apply_word,
    orbit,
    orbit_with_witnesses,
    reflect,
    subgroup_orbit_partition,
    weyl_order,
)


def test_reflect_is_involution():
    datum = build_root_system("F", 4)
    for i in range(4):
        for r in datum.roots:
            assert reflect(datum, i, reflect(datum, i, r)) == r


def test_reflect_preserves_lengths():
    datum = build_root_system("B", 3)
    for i in range(3):
        for r in datum.roots:
            assert dot(reflect(datum, i, r), reflect(datum, i, r)) == dot(r, r)


def test_apply_word_composition():
    datum = build_root_system("G", 2)
    v = highest_root(datum)
    assert apply_word(datum, (), v) == v
    assert apply_word(datum, (0, 1), v) == reflect(datum, 1, reflect(datum, 0, v))


def test_orbit_of_highest_root_is_long_roots():
    for letter, rank in [("B", 3), ("C", 3), ("F", 4), ("G", 2), ("D", 4)]:
        datum = build_root_system(letter, rank)
        assert orbit(datum, highest_root(datum)) == long_roots(datum)


def test_witness_words_reach_their_targets():
    datum = build_root_system("B", 4)
    seed = highest_root(datum)
    for target, word in orbit_with_witnesses(datum, seed).items():
        assert apply_word(datum, word, seed) == target


def test_witnesses_are_shortest():
    # the six long roots form a path under the two simple reflections
    datum = build_root_system("G", 2)
    seed = highest_root(datum)
    lengths = sorted(len(w) for w in orbit_with_witnesses(datum, seed).values())
    assert lengths == [0, 1, 2, 3, 4, 5]


@pytest.mark.parametrize("letter,rank,order", [
    ("A", 2, 6), ("B", 2, 8), ("G", 2, 12), ("B", 3, 48), ("D", 4, 192),
    ("F", 4, 1152), ("A", 4, 120),
])
def test_weyl_group_order(letter, rank, order):
    assert weyl_order(build_root_system(letter, rank)) == order


def test_subgroup_orbit_partition():
    datum = build_root_system("B", 2)
    # reflections in the short simple root acting on all roots
    parts = subgroup_orbit_partition([datum.simple_roots[1]], datum.roots)
    sizes = sorted(len(p) for p in parts)
    assert sizes == [1, 1, 2, 2, 2]


def test_subgroup_orbit_partition_escape():
    datum = build_root_system("B", 2)
    with pytest.raises(ValueError):
        subgroup_orbit_partition([datum.simple_roots[0]], [datum.simple_roots[1]])


def test_weyl_vector_orbit_is_free():
    datum = build_root_system("A", 2)
    assert len(orbit(datum, weyl_vector(datum))) == 6
