"""Acceptance criteria 1-9, each timed against its budget.

Every test records its criterion number; the terminal summary (see
conftest.py) prints one PASS/FAIL line per criterion.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from symmetroids import linalg
from symmetroids.cli import analyze_pencil
from symmetroids.errors import PositiveDimensionalError
from symmetroids.gaussian import ONE, ZERO
from symmetroids.ideals import buchberger, normal_form
from symmetroids.pencil import ComponentClaim, cone_test, gram_at, minor_ideal, parse_pencil, rank_at
from symmetroids.poly import MultiPoly, parse_poly
from symmetroids.registry import example_ids, get_example, verify_example
from symmetroids.report import PARTIAL
from symmetroids.singular import rank2_locus_report, sample_points
from symmetroids.spectra import (
    POSITIVE_DEFINITE,
    definiteness,
    sylvester_positive_definite,
    verify_infeasibility_certificate,
)
from symmetroids.web import (
    ProjLine,
    ProjSubspace,
    QuadricForm,
    Y,
    classify_rank2_pencil,
    linear_form,
    web_base_locus,
    web_generators,
)

from test_pencil import PADDED
from test_report_cli import BASE_CURVE


@contextmanager
def criterion(record_property, number, title, limit):
    record_property("criterion", number)
    record_property("title", title)
    t0 = time.perf_counter()
    try:
        yield
    finally:
        elapsed = time.perf_counter() - t0
        record_property("elapsed", elapsed)
        print(f"criterion {number}: {elapsed:.2f}s (budget {limit}s) {title}")
    assert elapsed < limit, f"criterion {number} took {elapsed:.2f}s, budget {limit}s"


def by_claim(report, prefix):
    return next(c for c in report.checks if c.claim.startswith(prefix))


def assert_all_pass(report):
    failing = [(c.claim, c.status, c.witness) for c in report.checks if not c.passed]
    assert not failing, failing


def test_criterion_1_double_p3_jacobian(record_property):
    with criterion(record_property, 1, "double-P3: Jacobian ideal inside <x2^2, x5>", 2):
        P = get_example("double-P3").pencil
        f = P.quartic
        B = buchberger([parse_poly("x2^2"), parse_poly("x5")], variables=P.names)
        partials = [f.diff(v) for v in P.names]
        assert any(partials)
        assert all(not normal_form(g, B) for g in partials)


def test_criterion_2_double_p3_rank2_multiplicities(record_property):
    with criterion(record_property, 2, "double-P3: rank-2 components with multiplicities 1, 3, 6", 10):
        P = get_example("double-P3").pencil
        claims = [
            ComponentClaim(("x0", "x1", "x2"), None, "V(x0, x1, x2)", 1),
            ComponentClaim(("x2", "x4", "x5"), None, "V(x2, x4, x5)", 3),
            ComponentClaim(("x1", "x2", "x5"), None, "V(x1, x2, x5)", 6),
        ]
        r = rank2_locus_report(P, claims)
        comps = r.witness["components"]
        assert all(c["contained"] for c in comps)
        assert [c["multiplicity"] for c in comps] == [1, 3, 6]
        assert r.passed


def test_criterion_3_max_smooth_1(record_property):
    with criterion(record_property, 3, "max-smooth-1: quadric, base points, conics, witness e0, case 1", 10):
        report = verify_example("max-smooth-1")
        assert_all_pass(report)
        sing = by_claim(report, "singular along V(x0, x1*x4 - x2*x3)")
        assert sing.witness["jacobian_in_ideal"] and sing.witness["sample_rank"] == 2
        base = by_claim(report, "base locus")
        assert sorted(base.witness["points"]) == sorted(["[1:I:0:0]", "[1:-I:0:0]", "[0:0:1:I]", "[0:0:1:-I]"])
        assert base.witness["multiplicities"] == [1, 1, 1, 1]
        conics = by_claim(report, "two additional conics")
        assert conics.witness["singular_rank2"] == ["PASS", "PASS"]
        assert by_claim(report, "spectrahedral").witness["point"] == ["1", "0", "0", "0", "0"]
        assert by_claim(report, "configuration").witness["case"] == 1


def test_criterion_4_max_smooth_2(record_property):
    with criterion(record_property, 4, "max-smooth-2: singular quadric on the boundary, case 2", 10):
        report = verify_example("max-smooth-2")
        assert_all_pass(report)
        sing = by_claim(report, "singular along V(x1 + x3, x0*x4 - x2^2 - x3^2)")
        assert sing.witness["jacobian_in_ideal"] and sing.witness["sample_rank"] == 2
        config = by_claim(report, "configuration")
        assert config.witness["case"] == 2
        statuses = config.witness["statuses"]
        assert statuses["V(x1 + x3, x0*x4 - x2^2 - x3^2)"] == "boundary"
        assert sorted(statuses.values()) == ["boundary", "boundary", "disjoint"]


def test_criterion_5_lambda_family(record_property):
    with criterion(record_property, 5, "lambda family: lambda=1 spectrahedral, lambda=-1 certified infeasible", 10):
        pos = verify_example("lambda-family(1)")
        assert_all_pass(pos)
        assert by_claim(pos, "spectrahedral").witness["point"] is not None
        for entry in by_claim(pos, "conics have real points").witness.values():
            assert entry["points"]
        neg = verify_example("lambda-family(-1)")
        assert_all_pass(neg)
        cert = by_claim(neg, "no positive definite matrix")
        assert cert.witness["certificate"] is not None
        search = by_claim(neg, "no real point on the conics (height 20")
        assert all(not e["points"] for e in search.witness.values())


def test_criterion_6_two_p3s(record_property):
    with criterion(record_property, 6, "two-P3s: conjugate 3-spaces, quadric surface, two length-2 schemes, PSD points", 10):
        report = verify_example("two-P3s")
        assert_all_pass(report)
        assert by_claim(report, "singular along V(x2 - I*x3, x5)").witness["sample_rank"] == 3
        assert by_claim(report, "singular along V(x2 + I*x3, x5)").witness["sample_rank"] == 3
        assert by_claim(report, "singular along V(x0 - x4, x1, ").witness["sample_rank"] == 2
        base = by_claim(report, "base locus")
        assert base.witness["multiplicities"] == [2, 2]
        assert base.witness["conjugate_supports"]
        psd = by_claim(report, "5 real points")
        assert len(psd.witness["points"]) == 5
        assert all(m != "outside_spectrahedron" for m in psd.witness["membership"])


def test_criterion_7_double_plane(record_property):
    with criterion(record_property, 7, "double-plane: double plane of rank-2 points and a rank-1 conic", 5):
        report = verify_example("double-plane")
        assert_all_pass(report)
        assert by_claim(report, "V(x2 + x4, x4^2)").witness["sample_rank"] == 2
        assert by_claim(report, "V(x2, x4, x0*x3 - x1^2)").witness["sample_rank"] == 1


# -- criterion 8: property suites -------------------------------------------------

COMPONENTS = {
    "double-plane": [["x2 + x4", "x4^2"], ["x2", "x4", "x0*x3 - x1^2"]],
    "max-smooth-1": [["x0", "x1*x4 - x2*x3"], ["x1 + x4", "x2 - x3", "x0^2 - x1^2 - x3^2"]],
    "max-smooth-2": [["x1 + x3", "x0*x4 - x2^2 - x3^2"], ["x0", "x4", "x2^2 - x1*x3"]],
    "double-P3": [["x0", "x1", "x2"], ["x2", "x4", "x5"], ["x1", "x2", "x5"]],
    "two-P3s": [["x2 - I*x3", "x5"], ["x2 + I*x3", "x5"], ["x0 - x4", "x1", "x2^2 + x3^2 - x4*x5"]],
    "lambda-family(1)": [["x00", "x02*x13 - x03*x12"], ["x02 + x13", "x03 - x12", "x00^2 - x02^2 - x12^2"]],
    "lambda-family(-1)": [["x00", "x02*x13 - x03*x12"]],
}


def _random_form(rng):
    while True:
        v = [rng.randint(-3, 3) for _ in range(4)]
        if any(v):
            return v


def _trichotomy(rng):
    """Build rank-2 pencils of each of the three shapes and classify them."""
    checked = 0
    while checked < 30:
        h, a, b = (_random_form(rng) for _ in range(3))
        if ProjSubspace.from_equations([h, a, b]).dimension != 0:
            continue
        H, A, Bf = (linear_form(v) for v in (h, a, b))
        L = ProjLine.from_equations([a, b])
        case = checked % 3 + 1
        if case == 1:
            c = classify_rank2_pencil(QuadricForm.from_poly(H * A), QuadricForm.from_poly(H * Bf))
            assert c.rank1_members == 0 and c.H == ProjSubspace.from_equations([h]) and not c.L_in_H
        elif case == 2:
            c = classify_rank2_pencil(QuadricForm.from_poly(A * A), QuadricForm.from_poly(A * Bf))
            assert c.rank1_members == 1 and c.L_in_H
        else:
            c = classify_rank2_pencil(QuadricForm.from_poly(A * A), QuadricForm.from_poly(Bf * Bf))
            assert c.rank1_members == 2
        assert c.case == case and c.L == L
        checked += 1
    return checked


def _points_for(P, eid, rng):
    pts = []
    for gens in COMPONENTS[eid]:
        pts += sample_points([parse_poly(g) for g in gens], P.names, rng, want=6)
    while len(pts) < 50:
        p = tuple(rng.randint(-5, 5) for _ in P.names)
        if any(p):
            pts.append(p)
    return pts[:50]


def _kernel_point_in_base_locus(P, x):
    ker = linalg.nullspace(gram_at(P, x))
    assert len(ker) == 1
    web = web_generators(P)
    return all(not q.eval(dict(zip(Y, ker[0]))) for q in web)


def test_criterion_8_property_suites(record_property):
    with criterion(record_property, 8, "property suites: trichotomy, base points, rank/minors, Euler, Sylvester", 30):
        rng = random.Random(8)
        assert _trichotomy(rng) == 30

        corank1_singular = 0
        for eid in example_ids():
            P = get_example(eid).pencil
            f = P.quartic
            euler = sum((MultiPoly.var(v) * f.diff(v) for v in P.names), MultiPoly.zero(P.names))
            assert euler == f.scale(4)
            minors = {k: minor_ideal(P, k).generators for k in (1, 2, 3)}
            partials = [f.diff(v) for v in P.names]
            for x in _points_for(P, eid, rng):
                at = dict(zip(P.names, x))
                r = rank_at(P, x)
                for k in (1, 2, 3):
                    assert (r <= k) == all(not m.eval(at) for m in minors[k])
                if r == 3 and all(not g.eval(at) for g in partials):
                    assert _kernel_point_in_base_locus(P, x)
                    corank1_singular += 1
        assert corank1_singular > 0

        agree = 0
        for _ in range(200):
            R = [[Fraction(rng.randint(-3, 3)) for _ in range(4)] for _ in range(4)]
            s = rng.randint(0, 8)
            M = [[sum(R[k][i] * R[k][j] for k in range(4)) - (s if i == j else 0) for j in range(4)] for i in range(4)]
            assert (definiteness(M) == POSITIVE_DEFINITE) == sylvester_positive_definite(M)
            agree += 1
        assert agree == 200


def test_criterion_9_negative_controls(record_property):
    with criterion(record_property, 9, "negative controls: padded cone, base-curve alarm, bad certificates", 5):
        padded = parse_pencil(PADDED)
        assert cone_test(padded)
        assert not cone_test(get_example("max-smooth-1").pencil)

        curve = parse_pencil(BASE_CURVE)
        with pytest.raises(PositiveDimensionalError) as info:
            web_base_locus(curve)
        assert str(info.value) == PositiveDimensionalError.ALARM
        assert by_claim(analyze_pencil(curve), "base locus").status == PARTIAL

        P = get_example("lambda-family(-1)").pencil
        zero = [[ZERO] * 4 for _ in range(4)]
        indefinite = [[ONE if i == j else ZERO for j in range(4)] for i in range(4)]
        indefinite[3][3] = -ONE
        assert not verify_infeasibility_certificate(P, zero)
        assert not verify_infeasibility_certificate(P, indefinite)
