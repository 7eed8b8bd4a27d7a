"""One-parameter invariants: Betti numbers, bandwidth, and localization.

Weights and compass entries are expressed through the integer simple-root
coordinates of the long roots, so every one-parameter downgrade produces
integer weights and the character evaluations stay in exact big-rational
arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .downgrade import (
    S1Projection,
    components_by_weight,
    fixed_components,
    residual_weight,
    s1_projections,
    s2_projection,
)
from .rootsys import RootDatum, long_roots
from .torusfix import adjoint_parabolic, all_compasses, gp_dimension

Q = Fraction


class NonGenericCovectorError(ValueError):
    """Covector orthogonal to some root; fixed points would not be isolated."""


class PoleError(ArithmeticError):
    """Evaluation point lies on a pole hyperplane of the localization."""


@dataclass(frozen=True)
class OneParamAction:
    weights: dict  # long root -> int
    compasses: dict  # long root -> tuple[int, ...]

    def nu_plus(self, y) -> int:
        return sum(1 for v in self.compasses[y] if v > 0)

    def nu_minus(self, y) -> int:
        return sum(1 for v in self.compasses[y] if v < 0)

    def bandwidth(self) -> int:
        vals = self.weights.values()
        return max(vals) - min(vals)


def downgrade_to_line(datum: RootDatum, covector: tuple[int, ...]) -> OneParamAction:
    """Pair every fixed-point weight and compass entry with an integer covector."""

    def pair(root) -> int:
        return sum(c * x for c, x in zip(datum.root_coeffs[root], covector))

    for r in datum.positive_roots:
        if pair(r) == 0:
            raise NonGenericCovectorError(f"covector annihilates root {r}")
    compasses = all_compasses(datum)
    return OneParamAction(
        weights={g: pair(g) for g in compasses},
        compasses={g: tuple(pair(m) for m in c) for g, c in compasses.items()},
    )


def betti_numbers(action: OneParamAction) -> tuple[int, ...]:
    """Even Betti numbers b_0, b_2, ... from the minus-cell dimensions."""
    dim = len(next(iter(action.compasses.values())))
    bins = [0] * (dim + 1)
    for y in action.compasses:
        bins[action.nu_plus(y)] += 1
    return tuple(bins)


def generic_covectors(datum: RootDatum, count: int, seed: int) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    found: list[tuple[int, ...]] = []
    while len(found) < count:
        c = tuple(rng.randint(-9, 9) for _ in range(datum.rank))
        try:
            downgrade_to_line(datum, c)
        except NonGenericCovectorError:
            continue
        if c not in found:
            found.append(c)
    return found


# ---------------------------------------------------------------------------
# localization


def _monomials(datum: RootDatum, point: tuple) -> dict:
    """t^root for every root, via the integer simple-root coordinates."""
    t = [Q(x) for x in point]
    out = {}
    for r in datum.roots:
        val = Q(1)
        for ti, ci in zip(t, datum.root_coeffs[r]):
            if ci:
                val *= ti**ci
        out[r] = val
    return out


def localized_character(datum: RootDatum, point: tuple) -> Fraction:
    """Sum over fixed points of t^mu divided by the compass Euler factor."""
    mono = _monomials(datum, point)
    total = Q(0)
    for gamma, comp in sorted(all_compasses(datum).items()):
        term = mono[gamma]
        for nu in comp:
            factor = 1 - 1 / mono[nu]
            if factor == 0:
                raise PoleError(f"t^{nu} = 1 at {point}")
            term /= factor
        total += term
    return total


def adjoint_character(datum: RootDatum, point: tuple) -> Fraction:
    mono = _monomials(datum, point)
    return sum(mono.values(), Q(0)) + datum.rank


def evaluation_points(datum: RootDatum, count: int, seed: int) -> list[tuple[int, ...]]:
    """Deterministic small integer torus points avoiding all pole hyperplanes."""
    rng = random.Random(seed)
    found: list[tuple[int, ...]] = []
    while len(found) < count:
        p = tuple(rng.randint(2, 10) for _ in range(datum.rank))
        if p in found:
            continue
        mono = _monomials(datum, p)
        if any(mono[r] == 1 for r in datum.roots):
            continue
        found.append(p)
    return found


# ---------------------------------------------------------------------------
# bandwidth and equalization of the residual circle actions


def bandwidth_and_equalization(datum: RootDatum) -> list[dict]:
    """Check the residual one-parameter profile of the six line downgrades.

    For each functional pi_i: the weight-1 fixed locus is a single component
    of dimension n-1 carrying a bandwidth-3 residual action with isolated
    extremes and compass {-2, (-1)^n, 1}; each weight-0 component carries a
    bandwidth-2 residual action whose extremal pieces have dimension
    (dim - 1)/2 and only +-1 residual normal weights.
    """
    proj, frame = s2_projection(datum)
    pis = s1_projections(proj, frame)
    n = (gp_dimension(datum, adjoint_parabolic(datum)) - 1) // 2
    hex_records = components_by_weight(fixed_components(datum, proj))
    violations: list[dict] = []

    for i, pi in enumerate(pis):
        records = components_by_weight(fixed_components(datum, pi))

        ones = records.get(Q(1), [])
        if len(ones) != 1 or ones[0].dimension != n - 1:
            violations.append({"i": i, "kind": "weight-1-component",
                               "actual": [(r.dimension,) for r in ones]})
            continue
        z1 = ones[0]
        res = {}
        for y in z1.members:
            res.setdefault(residual_weight(frame, i, proj(y)), []).append(y)
        lo, hi = min(res), max(res)
        if hi - lo != 3 or len(res[lo]) != 1 or len(res[hi]) != 1:
            violations.append({"i": i, "kind": "bandwidth-3", "levels": sorted(res)})
        want = {Q(-2): 1, Q(-1): n, Q(1): 1}
        got: dict = {}
        for v in z1.compass:
            got[v] = got.get(v, 0) + 1
        if got != want:
            violations.append({"i": i, "kind": "residual-compass", "actual": got})

        for z0 in records.get(Q(0), []):
            levels: dict = {}
            for y in z0.members:
                levels.setdefault(residual_weight(frame, i, proj(y)), []).append(y)
            if max(levels) - min(levels) != 2 or {min(levels), max(levels)} != {Q(-1), Q(1)}:
                violations.append({"i": i, "kind": "bandwidth-2", "levels": sorted(levels)})
                continue
            member_set = set(z0.members)
            for sgn in (Q(1), Q(-1)):
                beta = frame.beta(i) if sgn == 1 else frame.beta(i + 3)
                subs = [rec for rec in hex_records.get(beta, [])
                        if set(rec.members) <= member_set]
                if {rec.dimension for rec in subs} != {(z0.dimension - 1) // 2}:
                    violations.append({"i": i, "kind": "extremal-dimension",
                                       "actual": sorted(r.dimension for r in subs)})
                for rec in subs:
                    kernel_vals = [
                        residual_weight(frame, i, m)
                        for m in rec.compass
                        if pi.covector[0] * m[0] + pi.covector[1] * m[1] == 0
                    ]
                    if not set(kernel_vals) <= {Q(1), Q(-1)}:
                        violations.append({"i": i, "kind": "equalization",
                                           "actual": sorted(set(kernel_vals))})
    return violations
