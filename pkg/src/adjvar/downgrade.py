"""Rank-2 and rank-1 downgradings of the torus action on an adjoint variety.

The rank-2 downgrade projects weights orthogonally onto the plane spanned by
two long simple roots at 120 degrees; the image of the root polytope is a
hexagon whose vertices are single-root fibers.  Rank-1 downgrades compose
with one of six functionals killing an inner hexagon point.  Fixed loci of
the smaller tori group into components indexed by projected weight, which
this module enumerates and compares against tabulated reference data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .linalg import Vec, add, dot, is_zero, neg, reflect_in, solve, sub
from .rootsys import (
    RootDatum,
    build_root_system,
    highest_root,
    identify_type,
    long_roots,
)
from .torusfix import adjoint_parabolic, gp_dimension, tangent_compasses

Q = Fraction

SUPPORTED = ("B", "D", "E", "F", "G")

Pair = tuple[Fraction, Fraction]


def _load_table() -> dict:
    with resources.files("adjvar.data").joinpath("freudenthal_table.json").open() as fh:
        return json.load(fh)


_TABLE = _load_table()


class UnsupportedTypeError(ValueError):
    """Raised for types without an adjoint downgrading (A and C)."""


def hexagon_pair(datum: RootDatum) -> tuple[Vec, Vec]:
    """The two long roots spanning the downgrade plane.

    For most types these are simple roots from a fixed table; G2 has no pair
    of long simple roots, so the long-root subsystem provides them.
    """
    if datum.letter not in SUPPORTED:
        raise UnsupportedTypeError(f"no hexagon downgrade for type {datum.letter}")
    if datum.letter == "G":
        a1, a2 = datum.simple_roots
        d1, d2 = a2, add(add(a1, a1), add(a1, a2))  # 3*a1 + a2
    else:
        key = datum.letter if datum.letter in ("B", "D") else f"{datum.letter}{datum.rank}"
        i, j = _TABLE["pairs"][key]
        d1, d2 = datum.simple_roots[i - 1], datum.simple_roots[j - 1]
    lset = long_roots(datum)
    assert d1 in lset and d2 in lset
    assert 2 * dot(d1, d2) == -dot(d1, d1) == -dot(d2, d2)  # 120 degrees
    assert datum.is_root(add(d1, d2))
    return d1, d2


@dataclass(frozen=True)
class S2Projection:
    """Orthogonal projection onto span(d1, d2), in coordinates (d1, d2)."""

    d1: Vec
    d2: Vec

    def __call__(self, v: Vec) -> Pair:
        return _project2(self, v)

    def zero(self) -> Pair:
        return (Q(0), Q(0))

    def kernel_roots(self, datum: RootDatum) -> tuple[Vec, ...]:
        return tuple(r for r in datum.roots if self(r) == self.zero())


@lru_cache(maxsize=1 << 16)
def _project2(proj: "S2Projection", v: Vec) -> Pair:
    g11 = dot(proj.d1, proj.d1)
    g12 = dot(proj.d1, proj.d2)
    g22 = dot(proj.d2, proj.d2)
    x, y = solve([[g11, g12], [g12, g22]], [dot(v, proj.d1), dot(v, proj.d2)])
    return (x, y)


@dataclass(frozen=True)
class S1Projection:
    """Composite rank-1 functional: rank-2 projection followed by a covector."""

    base: S2Projection
    covector: Pair  # (a, b) acting on (x, y) as a*x + b*y

    def __call__(self, v: Vec) -> Fraction:
        x, y = self.base(v)
        a, b = self.covector
        return a * x + b * y

    def zero(self) -> Fraction:
        return Q(0)

    def kernel_roots(self, datum: RootDatum) -> tuple[Vec, ...]:
        return tuple(r for r in datum.roots if self(r) == 0)


@dataclass(frozen=True)
class HexagonFrame:
    """Six outer points alpha_i and six inner points beta_i, indices mod 6."""

    alphas: tuple[Pair, ...]
    betas: tuple[Pair, ...]

    @staticmethod
    def standard() -> "HexagonFrame":
        alphas = [(Q(1), Q(0)), (Q(1), Q(1)), (Q(0), Q(1))]
        alphas += [(-x, -y) for x, y in alphas]
        betas = [
            ((a1 + b1) / 3, (a2 + b2) / 3)
            for (a1, a2), (b1, b2) in zip(alphas, alphas[1:] + alphas[:1])
        ]
        return HexagonFrame(tuple(alphas), tuple(betas))

    def alpha(self, i: int) -> Pair:
        return self.alphas[i % 6]

    def beta(self, i: int) -> Pair:
        return self.betas[i % 6]


def s2_projection(datum: RootDatum) -> tuple[S2Projection, HexagonFrame]:
    d1, d2 = hexagon_pair(datum)
    return S2Projection(d1, d2), HexagonFrame.standard()


# invariant form on hexagon coordinates, normalized so roots have length^2 = 2
def hex_form(u: Pair, v: Pair) -> Fraction:
    return 2 * u[0] * v[0] + 2 * u[1] * v[1] - u[0] * v[1] - u[1] * v[0]


def s1_projections(proj: S2Projection, frame: HexagonFrame) -> tuple[S1Projection, ...]:
    """Six functionals pi_i sending beta_i to 0 and alpha_{i-1} to 2."""
    out = []
    for i in range(6):
        bx, by = frame.beta(i)
        ax, ay = frame.alpha(i - 1)
        a, b = solve([[bx, by], [ax, ay]], [Q(0), Q(2)])
        out.append(S1Projection(proj, (a, b)))
    return tuple(out)


def residual_weight(frame: HexagonFrame, i: int, v: Pair) -> Fraction:
    """Weight along the beta_i direction, complementary to pi_i."""
    return Fraction(3, 2) * hex_form(v, frame.beta(i))


def grade_algebra(datum: RootDatum, proj) -> dict:
    """Group the root spaces by projected weight; Cartan counts at zero."""
    grading: dict = {}
    for r in datum.roots:
        grading.setdefault(proj(r), []).append(r)
    zero = proj.zero()
    out = {m: (len(rs), tuple(sorted(rs))) for m, rs in grading.items()}
    n0, r0 = out.get(zero, (0, ()))
    out[zero] = (n0 + datum.rank, r0)
    return out


def zero_part_type(datum: RootDatum, proj) -> tuple[tuple[str, int], ...]:
    return identify_type(proj.kernel_roots(datum))


@dataclass(frozen=True)
class ComponentRecord:
    weight: object  # projected weight (Pair or Fraction)
    members: tuple[Vec, ...]  # fixed points, as long roots
    dimension: int
    compass: tuple  # nonzero projected tangent-compass entries

    @property
    def euler(self) -> int:
        return len(self.members)


@lru_cache(maxsize=None)
def fixed_components(datum: RootDatum, proj) -> tuple[ComponentRecord, ...]:
    """Fixed components of the downgraded action, one per kernel-group orbit."""
    kernel = proj.kernel_roots(datum)
    compasses = tangent_compasses(datum)
    zero = proj.zero()

    fibers: dict = {}
    for g in sorted(long_roots(datum)):
        fibers.setdefault(proj(g), []).append(g)

    records = []
    for weight, fiber in sorted(fibers.items()):
        todo = set(fiber)
        universe = frozenset(fiber)
        while todo:
            seed = min(todo)
            orbit = {seed}
            frontier = [seed]
            while frontier:
                v = frontier.pop()
                for a in kernel:
                    u = reflect_in(a, v)
                    if u not in universe:
                        raise AssertionError("orbit escapes its weight fiber")
                    if u not in orbit:
                        orbit.add(u)
                        frontier.append(u)
            todo -= orbit
            members = tuple(sorted(orbit))
            dims = set()
            for y in members:
                dims.add(sum(1 for m in compasses[y] if proj(m) == zero))
            if len(dims) != 1:
                raise AssertionError(f"members disagree on dimension: {dims}")
            dim = dims.pop()
            projected = tuple(
                sorted(proj(m) for m in compasses[members[0]] if proj(m) != zero)
            )
            records.append(ComponentRecord(weight, members, dim, projected))
    return tuple(records)


def components_by_weight(records) -> dict:
    out: dict = {}
    for rec in records:
        out.setdefault(rec.weight, []).append(rec)
    return out


# ---------------------------------------------------------------------------
# reference-table comparison


def _group_key(datum: RootDatum) -> str:
    return f"{datum.letter}{datum.rank}"


def _generic_bd_cells(letter: str, r: int) -> dict:
    return {
        "Zm": [[["A", 1, [1]], [letter, r - 2, [1]]]],
        "Z0": [[["A", 1, [1]]], [[letter, r - 2, [2]]]],
        "Ym": [[], [[letter, r - 3, [1]]]],
        "Y0": [[[letter, r - 3, [2]]]],
    }


def expected_cells(datum: RootDatum) -> dict:
    key = _group_key(datum)
    if key in _TABLE["cells"]:
        return _TABLE["cells"][key]
    if datum.letter in ("B", "D"):
        return _generic_bd_cells(datum.letter, datum.rank)
    raise UnsupportedTypeError(key)


def expected_zero_part(datum: RootDatum, rank: int) -> tuple[tuple[str, int], ...]:
    table = _TABLE["zero_part_rank1" if rank == 1 else "zero_part_rank2"]
    key = _group_key(datum)
    if key in table:
        factors = table[key]
    elif datum.letter in ("B", "D"):
        r = datum.rank
        factors = (
            [["A", 1], [datum.letter, r - 2]] if rank == 1 else [[datum.letter, r - 3]]
        )
    else:
        raise UnsupportedTypeError(key)
    return tuple(sorted((l, k) for l, k in factors))


def descriptor_dimension(component: list) -> int:
    """Dimension of a tabulated homogeneous variety, factors summed."""
    total = 0
    for letter, rank, nodes in component:
        total += gp_dimension(build_root_system(letter, rank), frozenset(nodes))
    return total


def verify_freudenthal_table(datum: RootDatum) -> list[dict]:
    """Compare computed fixed components against the reference table."""
    proj, frame = s2_projection(datum)
    pis = s1_projections(proj, frame)
    expected = expected_cells(datum)
    mismatches: list[dict] = []

    def check(cell: str, records: list[ComponentRecord]) -> None:
        want = sorted(descriptor_dimension(c) for c in expected[cell])
        got = sorted(rec.dimension for rec in records)
        if want != got:
            mismatches.append({"cell": cell, "expected": want, "actual": got})

    by_hex = components_by_weight(fixed_components(datum, proj))
    for i in range(6):
        check("Ym", by_hex.get(frame.beta(i), []))
    check("Y0", by_hex.get(proj.zero(), []))

    by_line = components_by_weight(fixed_components(datum, pis[0]))
    for m in (Q(1), Q(-1)):
        check("Zm", by_line.get(m, []))
    check("Z0", by_line.get(Q(0), []))
    return mismatches


# ---------------------------------------------------------------------------
# compass formula verification


def _counter(entries) -> dict:
    out: dict = {}
    for e in entries:
        out[e] = out.get(e, 0) + 1
    return out


def verify_hexagon_compasses(datum: RootDatum) -> list[dict]:
    """Match projected compasses against the closed-form multisets."""
    proj, frame = s2_projection(datum)
    nodes = adjoint_parabolic(datum)
    dim_x = gp_dimension(datum, nodes)
    n = (dim_x - 1) // 2
    mismatches: list[dict] = []

    def p2(u: Pair, v: Pair) -> Pair:
        return (u[0] - v[0], u[1] - v[1])

    by_weight = components_by_weight(fixed_components(datum, proj))
    for i in range(6):
        ai = frame.alpha(i)
        recs = by_weight.get(ai, [])
        if len(recs) != 1 or recs[0].dimension != 0:
            mismatches.append({"at": ("vertex", i), "expected": "isolated point"})
            continue
        want = _counter(
            [p2(frame.alpha(i + 1), ai), p2(frame.alpha(i - 1), ai), (-ai[0], -ai[1])]
            + [p2(frame.beta(i), ai)] * (n - 1)
            + [p2(frame.beta(i - 1), ai)] * (n - 1)
        )
        if _counter(recs[0].compass) != want:
            mismatches.append(
                {"at": ("vertex", i), "expected": want, "actual": _counter(recs[0].compass)}
            )

    for i in range(6):
        bi = frame.beta(i)
        for rec in by_weight.get(bi, []):
            d = rec.dimension
            want = _counter(
                [p2(frame.beta(i - 1), bi)] * (n - 2 - d)
                + [p2(frame.beta(i + 1), bi)] * (n - 2 - d)
                + [
                    p2(frame.beta(i - 2), bi),
                    p2(frame.alpha(i + 1), bi),
                    p2(frame.beta(i + 2), bi),
                    p2(frame.alpha(i), bi),
                ]
                + [(-bi[0], -bi[1])] * (d + 1)
            )
            if _counter(rec.compass) != want:
                mismatches.append(
                    {"at": ("beta", i, rec.dimension), "expected": want,
                     "actual": _counter(rec.compass)}
                )

    for rec in by_weight.get(proj.zero(), []):
        mult, rem = divmod(dim_x - rec.dimension, 6)
        if rem != 0:
            mismatches.append({"at": ("zero", rec.dimension), "expected": "codim % 6 == 0"})
            continue
        want = _counter([frame.beta(i) for i in range(6) for _ in range(mult)])
        if _counter(rec.compass) != want:
            mismatches.append(
                {"at": ("zero", rec.dimension), "expected": want,
                 "actual": _counter(rec.compass)}
            )
    return mismatches
