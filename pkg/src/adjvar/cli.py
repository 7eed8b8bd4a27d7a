"""Verification driver: run per-group check suites and emit reports."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass

from . import bbinv, downgrade, polytope, torusfix
from .rootsys import build_root_system, identify_type, lie_dimension, long_roots

DEFAULT_GROUPS = (
    "B3", "B4", "B5", "B6", "B7", "B8",
    "D4", "D5", "D6", "D7", "D8",
    "E6", "E7", "E8", "F4", "G2",
)
SUITES = (
    "roots", "polytope", "fixedpoints", "compass", "hexagon",
    "grading", "freudenthal", "bb", "character",
)
DEFAULT_SEED = 20240801


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    group: str
    expected: str
    actual: str
    status: str
    paper_anchor: str


def _result(check_id, group, expected, actual, anchor) -> CheckResult:
    status = "pass" if expected == actual else "fail"
    return CheckResult(check_id, group, repr(expected), repr(actual), status, anchor)


def _parse_group(token: str) -> tuple[str, int]:
    letter, rank = token[0], token[1:]
    if letter not in "BDEFG" or not rank.isdigit():
        raise ValueError(f"unknown group {token!r}")
    return letter, int(rank)


def suite_roots(datum, group):
    yield _result("roots.count", group, lie_dimension(datum.letter, datum.rank),
                  len(datum.roots) + datum.rank, "root-count-vs-algebra-dimension")
    yield _result("roots.type", group, ((datum.letter, datum.rank),),
                  identify_type(datum.roots), "type-recognition-roundtrip")
    highest = max(datum.roots, key=lambda r: sum(datum.root_coeffs[r]))
    yield _result("roots.highest-long", group, True, highest in long_roots(datum),
                  "highest-root-is-long")


def suite_polytope(datum, group):
    verts = polytope.root_polytope(datum.roots).vertices()
    yield _result("polytope.vertices", group, sorted(long_roots(datum)),
                  sorted(verts), "root-polytope-vertices-are-long-roots")


def suite_fixedpoints(datum, group):
    fps = torusfix.adjoint_fixed_points(datum)
    yield _result("fixedpoints.count", group, len(long_roots(datum)), len(fps),
                  "fixed-points-biject-with-long-roots")
    expected = {"B": lambda r: 2 * r * (r - 1), "D": lambda r: 2 * r * (r - 1)}
    table = {"G2": 6, "F4": 24, "E6": 72, "E7": 126, "E8": 240}
    want = table.get(group, expected.get(datum.letter, lambda r: None)(datum.rank))
    yield _result("fixedpoints.table", group, want, len(fps),
                  "fixed-point-count-table")


def suite_compass(datum, group):
    nodes = torusfix.adjoint_parabolic(datum)
    dim = torusfix.gp_dimension(datum, nodes)
    compasses = torusfix.all_compasses(datum)
    yield _result("compass.cardinality", group, {dim},
                  {len(c) for c in compasses.values()},
                  "compass-size-equals-orbit-dimension")
    yield _result("compass.contact-symmetry", group, [],
                  torusfix.contact_compass_checks(datum),
                  "contact-weight-pairing-at-fixed-points")
    fps = torusfix.adjoint_fixed_points(datum)
    witness_ok = all(
        torusfix.compass_at(datum, nodes, fp.witness) == compasses[g]
        for g, fp in fps.items()
    )
    yield _result("compass.equivariance", group, True, witness_ok,
                  "compass-propagates-along-witness-words")


def suite_hexagon(datum, group):
    proj, frame = downgrade.s2_projection(datum)
    fibers: dict = {}
    for r in datum.roots:
        fibers.setdefault(proj(r), []).append(r)
    singleton = all(len(fibers.get(frame.alpha(i), [])) == 1 for i in range(6))
    yield _result("hexagon.vertex-fibers", group, True, singleton,
                  "single-root-fiber-over-each-vertex")
    verts = polytope.WeightPolytope(tuple(sorted(fibers))).vertices()
    yield _result("hexagon.six-vertices", group, sorted(frame.alphas),
                  sorted(verts), "projected-polytope-is-hexagon")
    inner = any(m not in frame.alphas and m != proj.zero() for m in fibers)
    yield _result("hexagon.interior-point", group, True, inner,
                  "some-root-projects-inside")
    yield _result("hexagon.compass-formulas", group, [],
                  downgrade.verify_hexagon_compasses(datum),
                  "closed-form-compasses-at-components")


def suite_grading(datum, group):
    proj, frame = downgrade.s2_projection(datum)
    pis = downgrade.s1_projections(proj, frame)
    for rank, p in (("1", pis[0]), ("2", proj)):
        grading = downgrade.grade_algebra(datum, p)
        total = sum(dim for dim, _ in grading.values())
        yield _result(f"grading.rank{rank}.total", group,
                      lie_dimension(datum.letter, datum.rank), total,
                      "graded-pieces-partition-the-algebra")
        sym = all(grading[m][0] == grading[_neg_key(m)][0] for m in grading)
        yield _result(f"grading.rank{rank}.symmetry", group, True, sym,
                      "opposite-weights-have-equal-dimension")
        yield _result(f"grading.rank{rank}.zero-type", group,
                      downgrade.expected_zero_part(datum, int(rank)),
                      downgrade.zero_part_type(datum, p),
                      "semisimple-type-of-the-zero-piece")
    if group in ("B6", "E6"):
        zero_dim = downgrade.grade_algebra(datum, proj)[proj.zero()][0]
        yield _result("grading.zero-dimension", group, {"B6": 24, "E6": 18}[group],
                      zero_dim, "zero-graded-dimension-comparison")


def _neg_key(m):
    if isinstance(m, tuple):
        return tuple(-x for x in m)
    return -m


def suite_freudenthal(datum, group):
    yield _result("freudenthal.table", group, [],
                  downgrade.verify_freudenthal_table(datum),
                  "inner-component-counts-and-dimensions")


def suite_bb(datum, group, seed):
    covs = bbinv.generic_covectors(datum, 3, seed)
    bettis = [bbinv.betti_numbers(bbinv.downgrade_to_line(datum, c)) for c in covs]
    yield _result("bb.covector-agreement", group, 1, len(set(bettis)),
                  "betti-numbers-independent-of-covector")
    b = bettis[0]
    yield _result("bb.normalization", group, (1, 1), (b[0], b[1]),
                  "sink-and-weight-one-cells-unique")
    yield _result("bb.duality", group, b, b[::-1], "poincare-symmetry")
    yield _result("bb.euler", group, len(long_roots(datum)), sum(b),
                  "euler-characteristic-equals-fixed-points")
    yield _result("bb.bandwidth-profile", group, [],
                  bbinv.bandwidth_and_equalization(datum),
                  "residual-circle-actions-bandwidth-and-equalization")


def suite_character(datum, group, seed):
    pts = bbinv.evaluation_points(datum, 3, seed)
    ok = all(
        bbinv.localized_character(datum, p) == bbinv.adjoint_character(datum, p)
        for p in pts
    )
    yield _result("character.localization", group, True, ok,
                  "fixed-point-sum-equals-adjoint-character")


def run_checks(groups, suites, seed):
    results = []
    for group in groups:
        letter, rank = _parse_group(group)
        datum = build_root_system(letter, rank)
        for suite in suites:
            if suite == "roots":
                results.extend(suite_roots(datum, group))
            elif suite == "polytope":
                results.extend(suite_polytope(datum, group))
            elif suite == "fixedpoints":
                results.extend(suite_fixedpoints(datum, group))
            elif suite == "compass":
                results.extend(suite_compass(datum, group))
            elif suite == "hexagon":
                results.extend(suite_hexagon(datum, group))
            elif suite == "grading":
                results.extend(suite_grading(datum, group))
            elif suite == "freudenthal":
                results.extend(suite_freudenthal(datum, group))
            elif suite == "bb":
                results.extend(suite_bb(datum, group, seed))
            elif suite == "character":
                results.extend(suite_character(datum, group, seed))
    return sorted(results, key=lambda r: (r.check_id, r.group))


def render(results, groups, suites, seed, fmt):
    if fmt == "json":
        payload = {
            "meta": {"groups": list(groups), "suites": list(suites), "seed": seed},
            "results": [asdict(r) for r in results],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    lines = [
        "| check_id | group | expected | actual | status | paper_anchor |",
        "| --- | --- | --- | --- | --- | --- |",
    ]
    for r in results:
        lines.append(
            f"| {r.check_id} | {r.group} | {r.expected} | {r.actual} "
            f"| {r.status} | {r.paper_anchor} |"
        )
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="verify", description="Run adjoint-variety verification suites."
    )
    parser.add_argument("--group", action="append", dest="groups", metavar="G")
    parser.add_argument("--suite", action="append", dest="suites", metavar="NAME")
    parser.add_argument("--format", choices=("json", "markdown"), default="json")
    parser.add_argument("--out", metavar="PATH")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--rank", type=int, default=8,
                        help="highest admitted rank for the B and D series")
    args = parser.parse_args(argv)

    groups = tuple(args.groups or DEFAULT_GROUPS)
    suites = tuple(args.suites or ["all"])
    if "all" in suites:
        suites = SUITES
    for s in suites:
        if s not in SUITES:
            parser.error(f"unknown suite {s!r}")
    for g in groups:
        try:
            letter, rank = _parse_group(g)
        except ValueError as exc:
            parser.error(str(exc))
        caps = {"B": (3, args.rank), "D": (4, args.rank), "E": (6, 8),
                "F": (4, 4), "G": (2, 2)}
        lo, hi = caps[letter]
        if not lo <= rank <= hi:
            parser.error(f"group {g} outside the supported range")

    seed = int(os.environ.get("ADJC_SEED", args.seed))
    results = run_checks(groups, suites, seed)
    text = render(results, groups, suites, seed, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r.status == "pass" for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
