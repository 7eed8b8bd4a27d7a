"""Exact convex-position tests for weight polytopes.

Membership in a convex hull is decided by a phase-1 simplex method over the
rationals with Bland's pivoting rule, so there is no numerical tolerance and
no cycling.  Vertex tests first try a cheap separating-functional certificate
(sufficient, and in practice conclusive for every long root of the systems
handled here) before falling back to the LP.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Vec, dot, sub


def _simplex_feasible(a: list[list[Fraction]], b: list[Fraction]) -> bool:
    """Is {x >= 0 : a x = b} nonempty?  Phase-1 simplex, Bland's rule."""
    m = len(a)
    n = len(a[0]) if m else 0
    # make b nonnegative, append artificial identity
    tab = []
    for i in range(m):
        row = list(a[i])
        bi = b[i]
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        row += [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        row.append(bi)
        tab.append(row)
    ncols = n + m
    basis = [n + i for i in range(m)]
    # objective: minimize sum of artificials; basic artificial columns are
    # priced out already, so only structural columns and the rhs accumulate
    obj = [Fraction(0)] * (ncols + 1)
    for i in range(m):
        for j in range(n):
            obj[j] -= tab[i][j]
        obj[ncols] -= tab[i][ncols]
    while True:
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][ncols] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return False  # unbounded phase-1 cannot happen, but stay safe
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, tab[leave])]
        basis[leave] = enter
    return -obj[ncols] == 0


def in_convex_hull(point: Vec, generators: list[Vec]) -> bool:
    """Exact test: is point a convex combination of the generators?"""
    if not generators:
        return False
    dim = len(point)
    # rows: one per coordinate, plus the affine row sum(lambda) = 1
    a = [[g[k] for g in generators] for k in range(dim)]
    a.append([Fraction(1)] * len(generators))
    b = [point[k] for k in range(dim)] + [Fraction(1)]
    return _simplex_feasible(a, b)


def is_vertex(point: Vec, points: list[Vec]) -> bool:
    """Is point a vertex of conv(points)?  point must be among the points."""
    others = [p for p in points if p != point]
    if len(others) == len(points):
        raise ValueError("point is not among the given points")
    # certificate: <point, .> strictly maximized at point
    target = dot(point, point)
    if all(dot(point, p) < target for p in others):
        return True
    return not in_convex_hull(point, others)


@dataclass(frozen=True)
class WeightPolytope:
    """A finite weight multiset-free point set with exact hull queries."""

    points: tuple[Vec, ...]

    def vertices(self) -> tuple[Vec, ...]:
        return tuple(p for p in self.points if is_vertex(p, list(self.points)))

    def __contains__(self, point: Vec) -> bool:
        return in_convex_hull(point, list(self.points))


def root_polytope(roots) -> WeightPolytope:
    return WeightPolytope(tuple(sorted(set(roots))))
