"""Torus fixed points and compasses on G/P and on the closed adjoint orbit.

A fixed point of the maximal torus on the adjoint orbit is labeled by a long
root gamma (the weight of the fixed line).  Its compass is stored as the
witness-word image of the base multiset Phi+ minus the part supported away
from the marked nodes; the base compass therefore contains the highest root
once, and the compass at gamma contains gamma once.  Negating a stored
compass yields the tangent-direction multiset used by the downgrading and
component bookkeeping.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache

from .linalg import Vec, neg, sub
from .rootsys import RootDatum, highest_root, long_roots
from .weyl import apply_word, reflect

# marked node per type, 1-based, checked against the pairing computation
ADJOINT_NODE = {
    "A": None,  # {1, r}, filled in below
    "B": frozenset({2}),
    "C": frozenset({1}),
    "D": frozenset({2}),
    ("E", 6): frozenset({2}),
    ("E", 7): frozenset({1}),
    ("E", 8): frozenset({8}),
    "F": frozenset({1}),
    "G": frozenset({2}),
}


def adjoint_parabolic(datum: RootDatum) -> frozenset[int]:
    """Nodes (1-based) pairing nontrivially with the highest root."""
    beta = highest_root(datum)
    nodes = frozenset(
        i + 1
        for i, a in enumerate(datum.simple_roots)
        if 2 * sum(x * y for x, y in zip(beta, a)) != 0
    )
    expected = ADJOINT_NODE.get((datum.letter, datum.rank), ADJOINT_NODE.get(datum.letter))
    if expected is None and datum.letter == "A":
        expected = frozenset({1, datum.rank}) if datum.rank > 1 else frozenset({1})
    assert nodes == expected, (datum.letter, datum.rank, nodes)
    return nodes


def gp_dimension(datum: RootDatum, nodes: frozenset[int]) -> int:
    """dim G/P for the parabolic marked at the given nodes."""
    count = 0
    for r in datum.positive_roots:
        c = datum.root_coeffs[r]
        if any(c[i - 1] != 0 for i in nodes):
            count += 1
    return count


def base_compass(datum: RootDatum, nodes: frozenset[int]) -> tuple[Vec, ...]:
    """Positive roots whose support meets the marked nodes, sorted."""
    out = []
    for r in datum.positive_roots:
        c = datum.root_coeffs[r]
        if any(c[i - 1] != 0 for i in nodes):
            out.append(r)
    return tuple(sorted(out))


def compass_at(datum: RootDatum, nodes: frozenset[int], word) -> tuple[Vec, ...]:
    """Compass at the fixed point reached from the base point by the word."""
    return tuple(sorted(apply_word(datum, word, v) for v in base_compass(datum, nodes)))


@dataclass(frozen=True)
class FixedPoint:
    gamma: Vec  # long root = weight of the fixed point
    witness: tuple[int, ...]  # word sending the highest root to gamma


def adjoint_fixed_points(datum: RootDatum) -> dict[Vec, FixedPoint]:
    """One fixed point per long root, with a shortest witness word."""
    beta = highest_root(datum)
    witness: dict[Vec, tuple[int, ...]] = {beta: ()}
    queue: deque[Vec] = deque([beta])
    while queue:
        v = queue.popleft()
        w = witness[v]
        for i in range(datum.rank):
            u = reflect(datum, i, v)
            if u not in witness:
                witness[u] = w + (i,)
                queue.append(u)
    assert frozenset(witness) == long_roots(datum)
    return {g: FixedPoint(g, w) for g, w in witness.items()}


@lru_cache(maxsize=None)
def all_compasses(datum: RootDatum) -> dict[Vec, tuple[Vec, ...]]:
    """Compass at every adjoint fixed point, propagated along the orbit tree.

    Equivariance gives compass(s_i(gamma)) = s_i(compass(gamma)), so a single
    breadth-first pass reflects each compass once instead of replaying whole
    witness words.
    """
    beta = highest_root(datum)
    nodes = adjoint_parabolic(datum)
    compasses: dict[Vec, tuple[Vec, ...]] = {beta: base_compass(datum, nodes)}
    queue: deque[Vec] = deque([beta])
    while queue:
        v = queue.popleft()
        cv = compasses[v]
        for i in range(datum.rank):
            u = reflect(datum, i, v)
            if u not in compasses:
                compasses[u] = tuple(sorted(reflect(datum, i, m) for m in cv))
                queue.append(u)
    return compasses


@lru_cache(maxsize=None)
def tangent_compasses(datum: RootDatum) -> dict[Vec, tuple[Vec, ...]]:
    """Negated compasses: entries point from a fixed weight toward its neighbors."""
    return {
        g: tuple(sorted(neg(m) for m in c)) for g, c in all_compasses(datum).items()
    }


def contact_compass_checks(datum: RootDatum) -> list[dict]:
    """Weight symmetry of the contact distribution at every fixed point.

    At the point of weight gamma the stored compass must contain gamma with
    multiplicity exactly one (the tangent-direction multiset then contains
    -gamma once), and the remaining entries must be invariant, multiplicity
    included, under m -> gamma - m.
    """
    violations: list[dict] = []
    for gamma, comp in all_compasses(datum).items():
        counts = Counter(comp)
        if counts[gamma] != 1:
            violations.append(
                {"point": gamma, "kind": "distinguished-entry", "mult": counts[gamma]}
            )
            continue
        rest = counts.copy()
        del rest[gamma]
        for m, k in rest.items():
            if rest[sub(gamma, m)] != k:
                violations.append({"point": gamma, "kind": "pair-symmetry", "entry": m})
                break
    return violations
