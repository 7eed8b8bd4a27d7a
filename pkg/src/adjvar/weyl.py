"""Weyl group actions: simple reflections, orbits and witness words.

A word is a sequence of simple-reflection indices applied left to right:
``apply_word(datum, [i, j], v)`` computes s_j(s_i(v)).  Orbit enumeration
is breadth-first with generators tried in ascending index order, so each
witness word is a shortest one and lexicographically smallest among those.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence

from .linalg import Vec, reflect_in
from .rootsys import RootDatum


def reflect(datum: RootDatum, i: int, v: Vec) -> Vec:
    """Simple reflection s_i applied to v (0-based generator index)."""
    return reflect_in(datum.simple_roots[i], v)


def apply_word(datum: RootDatum, word: Sequence[int], v: Vec) -> Vec:
    for i in word:
        v = reflect(datum, i, v)
    return v


def orbit_with_witnesses(datum: RootDatum, seed: Vec) -> dict[Vec, tuple[int, ...]]:
    """Weyl orbit of seed, mapping each point to a witness word from seed."""
    witness: dict[Vec, tuple[int, ...]] = {seed: ()}
    queue: deque[Vec] = deque([seed])
    while queue:
        v = queue.popleft()
        w = witness[v]
        for i in range(datum.rank):
            u = reflect(datum, i, v)
            if u not in witness:
                witness[u] = w + (i,)
                queue.append(u)
    return witness


def orbit(datum: RootDatum, seed: Vec) -> frozenset[Vec]:
    return frozenset(orbit_with_witnesses(datum, seed))


def subgroup_orbit_partition(
    reflections: Iterable[Vec], points: Iterable[Vec]
) -> list[frozenset[Vec]]:
    """Partition points into orbits of the group generated by the given reflections.

    The point set must be closed under each reflection; a point escaping the
    set raises ValueError.
    """
    refs = list(reflections)
    todo = set(points)
    universe = frozenset(todo)
    parts: list[frozenset[Vec]] = []
    while todo:
        seed = todo.pop()
        part = {seed}
        frontier = [seed]
        while frontier:
            v = frontier.pop()
            for a in refs:
                u = reflect_in(a, v)
                if u not in universe:
                    raise ValueError("point set not closed under reflection")
                if u not in part:
                    part.add(u)
                    todo.discard(u)
                    frontier.append(u)
        parts.append(frozenset(part))
    parts.sort(key=lambda p: min(p))
    return parts


def weyl_order(datum: RootDatum) -> int:
    """Order of the Weyl group, as the orbit size of a regular vector."""
    from .rootsys import weyl_vector

    return len(orbit_with_witnesses(datum, weyl_vector(datum)))
