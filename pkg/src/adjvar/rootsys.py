"""Root systems of the simple types A-G in exact rational coordinates.

Simple roots follow the standard orthonormal realizations with Humphreys'
node numbering.  Root sets are generated by reflection closure, so every
datum is internally consistent by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .linalg import Vec, dot, is_zero, neg, rank_of, reflect_in, smul, solve, sub, zero

Q = Fraction

LIE_DIMENSION = {
    "A": lambda r: r * (r + 2),
    "B": lambda r: 2 * r * r + r,
    "C": lambda r: 2 * r * r + r,
    "D": lambda r: 2 * r * r - r,
    "E": {6: 78, 7: 133, 8: 248},
    "F": {4: 52},
    "G": {2: 14},
}


class InvalidTypeError(ValueError):
    """Raised for a (letter, rank) pair that is not a valid simple type."""


class NotARootError(ValueError):
    """Raised when a vector expected to be a root of the datum is not."""


class NotClosedError(ValueError):
    """Raised when a root set is not a closed symmetric subsystem."""


@dataclass(eq=False)
class RootDatum:
    letter: str
    rank: int
    ambient_dim: int
    simple_roots: tuple[Vec, ...]
    roots: tuple[Vec, ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    # root -> integer coefficients in the simple-root basis
    root_coeffs: dict[Vec, tuple[int, ...]] = field(repr=False)

    @property
    def positive_roots(self) -> tuple[Vec, ...]:
        return tuple(r for r in self.roots if all(c >= 0 for c in self.root_coeffs[r]))

    def is_root(self, v: Vec) -> bool:
        return v in self.root_coeffs

    def coeffs(self, root: Vec) -> tuple[int, ...]:
        try:
            return self.root_coeffs[root]
        except KeyError:
            raise NotARootError(f"{root} is not a root of {self.letter}{self.rank}")


def _simple_roots(letter: str, rank: int) -> tuple[int, list[Vec]]:
    """Ambient dimension and simple roots for a valid simple type."""

    def e(i: int, dim: int) -> Vec:
        return tuple(Q(1) if j == i else Q(0) for j in range(dim))

    if letter == "A":
        dim = rank + 1
        return dim, [sub(e(i, dim), e(i + 1, dim)) for i in range(rank)]
    if letter == "B":
        dim = rank
        roots = [sub(e(i, dim), e(i + 1, dim)) for i in range(rank - 1)]
        roots.append(e(rank - 1, dim))
        return dim, roots
    if letter == "C":
        dim = rank
        roots = [sub(e(i, dim), e(i + 1, dim)) for i in range(rank - 1)]
        roots.append(smul(2, e(rank - 1, dim)))
        return dim, roots
    if letter == "D":
        dim = rank
        roots = [sub(e(i, dim), e(i + 1, dim)) for i in range(rank - 1)]
        roots.append(tuple(Q(0) for _ in range(rank - 2)) + (Q(1), Q(1)))
        return dim, roots
    if letter == "E":
        dim = 8
        a1 = (Q(1, 2), -Q(1, 2), -Q(1, 2), -Q(1, 2), -Q(1, 2), -Q(1, 2), -Q(1, 2), Q(1, 2))
        a2 = (Q(1), Q(1), Q(0), Q(0), Q(0), Q(0), Q(0), Q(0))
        chain = [sub(e(i + 1, dim), e(i, dim)) for i in range(6)]  # e_{i+1}-e_i
        roots = [a1, a2] + chain[: rank - 2]
        return dim, roots
    if letter == "F":
        dim = 4
        return dim, [
            sub(e(1, dim), e(2, dim)),
            sub(e(2, dim), e(3, dim)),
            e(3, dim),
            (Q(1, 2), -Q(1, 2), -Q(1, 2), -Q(1, 2)),
        ]
    if letter == "G":
        dim = 3
        return dim, [
            sub(e(0, dim), e(1, dim)),
            (Q(-2), Q(1), Q(1)),
        ]
    raise InvalidTypeError(f"unknown type letter {letter!r}")


def _valid_type(letter: str, rank: int) -> bool:
    # low ranks of B, C, D are admitted so that tabulated descriptors like
    # B1(1) or D3(2) resolve; they coincide with (products of) A types
    bounds = {"A": (1, None), "B": (1, None), "C": (2, None), "D": (2, None),
              "E": (6, 8), "F": (4, 4), "G": (2, 2)}
    if letter not in bounds:
        return False
    lo, hi = bounds[letter]
    return rank >= lo and (hi is None or rank <= hi)


@lru_cache(maxsize=None)
def build_root_system(letter: str, rank: int) -> RootDatum:
    """Construct the root system by reflection closure from the simple roots."""
    if not _valid_type(letter, rank):
        raise InvalidTypeError(f"invalid simple type {letter}{rank}")
    dim, simple = _simple_roots(letter, rank)
    roots: set[Vec] = set(simple)
    frontier = list(simple)
    while frontier:
        new: list[Vec] = []
        for v in frontier:
            for a in simple:
                w = reflect_in(a, v)
                if w not in roots:
                    roots.add(w)
                    new.append(w)
        frontier = new
    all_roots = tuple(sorted(roots))

    gram = [[dot(a, b) for b in simple] for a in simple]
    coeffs: dict[Vec, tuple[int, ...]] = {}
    for r in all_roots:
        c = solve(gram, [dot(r, a) for a in simple])
        if any(x.denominator != 1 for x in c):
            raise AssertionError("non-integral simple-root coefficients")
        coeffs[r] = tuple(int(x) for x in c)

    cartan = tuple(
        tuple(int(2 * dot(a, b) / dot(b, b)) for b in simple) for a in simple
    )
    return RootDatum(letter, rank, dim, tuple(simple), all_roots, cartan, coeffs)


def lie_dimension(letter: str, rank: int) -> int:
    entry = LIE_DIMENSION[letter]
    return entry[rank] if isinstance(entry, dict) else entry(rank)


def height(datum: RootDatum, root: Vec) -> int:
    return sum(datum.coeffs(root))


def highest_root(datum: RootDatum) -> Vec:
    return max(datum.roots, key=lambda r: (height(datum, r), r))


def long_roots(datum: RootDatum) -> frozenset[Vec]:
    """Roots of maximal squared length (all roots in simply-laced types)."""
    norms = {r: dot(r, r) for r in datum.roots}
    top = max(norms.values())
    return frozenset(r for r, n in norms.items() if n == top)


def short_roots(datum: RootDatum) -> frozenset[Vec]:
    return frozenset(datum.roots) - long_roots(datum)


def coroot_pairing(datum: RootDatum, lam: Vec, alpha: Vec):
    """Exact value of 2(lam, alpha)/(alpha, alpha); integer on the weight lattice."""
    if not datum.is_root(alpha):
        raise NotARootError(f"{alpha} is not a root of {datum.letter}{datum.rank}")
    val = 2 * dot(lam, alpha) / dot(alpha, alpha)
    if val.denominator == 1:
        return int(val)
    return val


def _check_reflection_closed(root_set: frozenset[Vec]) -> None:
    for a in root_set:
        if neg(a) not in root_set:
            raise NotClosedError("root set not closed under negation")
    for a in root_set:
        for b in root_set:
            if reflect_in(a, b) not in root_set:
                raise NotClosedError("root set not closed under its own reflections")


def _split_components(root_set: frozenset[Vec]) -> list[list[Vec]]:
    """Connected components under non-orthogonality."""
    todo = set(root_set)
    comps = []
    while todo:
        seed = todo.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            v = frontier.pop()
            linked = [w for w in todo if dot(v, w) != 0]
            for w in linked:
                todo.remove(w)
                comp.add(w)
                frontier.append(w)
        comps.append(sorted(comp))
    return comps


def _classify_component(comp: list[Vec]) -> tuple[str, int]:
    r = rank_of(comp)
    n = len(comp)
    norms = [dot(v, v) for v in comp]
    top = max(norms)
    nlong = sum(1 for x in norms if x == top)
    if nlong < n:  # two root lengths
        if r == 2 and n == 12:
            return ("G", 2)
        if r == 4 and n == 48:
            return ("F", 4)
        if n == 2 * r * r:
            if nlong == 2 * r * (r - 1):
                return ("B", r)
            if nlong == 2 * r:
                return ("C", r) if r >= 3 else ("B", r)
    else:
        if r == 1 and n == 2:
            return ("A", 1)
        if n == r * (r + 1):
            return ("A", r)
        if n == 2 * r * (r - 1) and r >= 4:
            return ("D", r)
        exceptional = {(6, 72): ("E", 6), (7, 126): ("E", 7), (8, 240): ("E", 8)}
        if (r, n) in exceptional:
            return exceptional[(r, n)]
    raise NotClosedError(f"unrecognized irreducible root system (rank {r}, {n} roots)")


def identify_type(root_set) -> tuple[tuple[str, int], ...]:
    """Dynkin type of a closed symmetric root subsystem, one factor per component.

    Rank-1 and rank-2 coincidences are canonicalized: B1/C1 -> A1, C2 -> B2,
    D3 -> A3 (an irreducible all-one-length system with 12 roots).
    """
    rs = frozenset(root_set)
    if not rs:
        return ()
    _check_reflection_closed(rs)
    factors = [_classify_component(c) for c in _split_components(rs)]
    return tuple(sorted(factors))


def weyl_vector(datum: RootDatum) -> Vec:
    """Half-sum of the positive roots (a strictly dominant regular vector)."""
    acc = zero(datum.ambient_dim)
    for r in datum.positive_roots:
        acc = tuple(a + b for a, b in zip(acc, r))
    return smul(Fraction(1, 2), acc)
