from fractions import Fraction

import pytest

from adjvar.linalg import dot
from adjvar.rootsys import build_root_system, lie_dimension, long_roots
from adjvar.downgrade import (
    UnsupportedTypeError,
    components_by_weight,
    expected_zero_part,
    fixed_components,
    grade_algebra,
    hex_form,
    hexagon_pair,
    residual_weight,
    s1_projections,
    s2_projection,
    verify_freudenthal_table,
    verify_hexagon_compasses,
    zero_part_type,
)

Q = Fraction

GROUPS = [("B", 3), ("B", 5), ("D", 4), ("D", 5), ("E", 6), ("F", 4), ("G", 2)]


@pytest.mark.parametrize("letter,rank", GROUPS)
def test_hexagon_pair_geometry(letter, rank):
    datum = build_root_system(letter, rank)
    d1, d2 = hexagon_pair(datum)
    assert 2 * dot(d1, d2) == -dot(d1, d1)
    assert dot(d1, d1) == dot(d2, d2)


def test_unsupported_types():
    for letter, rank in [("A", 3), ("C", 4)]:
        with pytest.raises(UnsupportedTypeError):
            hexagon_pair(build_root_system(letter, rank))


@pytest.mark.parametrize("letter,rank", GROUPS)
def test_projected_root_images(letter, rank):
    """Roots land on the hexagon frame or at the origin, vertices singly."""
    datum = build_root_system(letter, rank)
    proj, frame = s2_projection(datum)
    allowed = set(frame.alphas) | set(frame.betas) | {proj.zero()}
    images = [proj(r) for r in datum.roots]
    assert set(images) <= allowed
    for i in range(6):
        assert images.count(frame.alpha(i)) == 1


def test_hex_form_normalization():
    frame_pts = [(Q(1), Q(0)), (Q(0), Q(1)), (Q(1), Q(1))]
    for p in frame_pts:
        assert hex_form(p, p) == 2


@pytest.mark.parametrize("letter,rank", GROUPS)
def test_grading_partitions_algebra(letter, rank):
    datum = build_root_system(letter, rank)
    proj, frame = s2_projection(datum)
    for p in (proj, s1_projections(proj, frame)[0]):
        grading = grade_algebra(datum, p)
        assert sum(d for d, _ in grading.values()) == lie_dimension(letter, rank)


def test_s1_projection_values_on_frame():
    datum = build_root_system("B", 3)
    proj, frame = s2_projection(datum)
    for i, pi in enumerate(s1_projections(proj, frame)):
        a, b = pi.covector
        bx, by = frame.beta(i)
        assert a * bx + b * by == 0
        ax, ay = frame.alpha(i - 1)
        assert a * ax + b * ay == 2
        values = {pi(r) for r in datum.roots}
        assert values == {Q(-2), Q(-1), Q(0), Q(1), Q(2)}


def test_residual_weight_on_frame():
    datum = build_root_system("F", 4)
    proj, frame = s2_projection(datum)
    for i in range(6):
        # beta_i spans the kernel of pi_i and carries residual weight 1
        assert residual_weight(frame, i, frame.beta(i)) == 1
        assert residual_weight(frame, i, frame.beta(i + 3)) == -1


@pytest.mark.parametrize("letter,rank", GROUPS)
def test_zero_part_types(letter, rank):
    datum = build_root_system(letter, rank)
    proj, frame = s2_projection(datum)
    assert zero_part_type(datum, proj) == expected_zero_part(datum, 2)
    pi = s1_projections(proj, frame)[0]
    assert zero_part_type(datum, pi) == expected_zero_part(datum, 1)


@pytest.mark.parametrize("letter,rank", GROUPS)
def test_components_partition_fixed_points(letter, rank):
    datum = build_root_system(letter, rank)
    proj, frame = s2_projection(datum)
    records = fixed_components(datum, proj)
    seen = [y for rec in records for y in rec.members]
    assert sorted(seen) == sorted(long_roots(datum))


def test_component_euler_numbers_sum():
    datum = build_root_system("E", 6)
    proj, frame = s2_projection(datum)
    records = fixed_components(datum, proj)
    assert sum(rec.euler for rec in records) == len(long_roots(datum))


@pytest.mark.parametrize("letter,rank", GROUPS)
def test_reference_table(letter, rank):
    datum = build_root_system(letter, rank)
    assert verify_freudenthal_table(datum) == []


@pytest.mark.parametrize("letter,rank", GROUPS)
def test_hexagon_compass_formulas(letter, rank):
    datum = build_root_system(letter, rank)
    assert verify_hexagon_compasses(datum) == []


def test_vertex_components_are_points():
    datum = build_root_system("B", 4)
    proj, frame = s2_projection(datum)
    by_weight = components_by_weight(fixed_components(datum, proj))
    for i in range(6):
        recs = by_weight[frame.alpha(i)]
        assert len(recs) == 1 and recs[0].dimension == 0
