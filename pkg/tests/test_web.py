import random

import pytest

from symmetroids.errors import PreconditionError
from symmetroids.gaussian import I, ONE, ZERO
from symmetroids.pencil import ComponentClaim, parse_pencil
from symmetroids.poly import parse_poly
from symmetroids.web import (
    Y,
    ProjLine,
    ProjSubspace,
    QuadricForm,
    classify_rank2_pencil,
    linear_form,
    lines_meet,
    no_real_points_criterion,
    rank2_surface_lines,
    reality_predicates,
    strata_in_pencil,
    strata_intersections,
    web_base_locus,
)

from test_pencil import PADDED


def q(text):
    return QuadricForm.from_poly(parse_poly(text))


def rand_vec(rng):
    while True:
        v = [rng.randint(-3, 3) for _ in range(4)]
        if any(v):
            return v


# -- pencils of rank-2 quadrics ------------------------------------------------


def test_classify_plane_and_line():
    c = classify_rank2_pencil(q("y0*y2"), q("y0*y3"))
    assert c.case == 1 and c.rank1_members == 0
    assert c.H == ProjSubspace.from_equations([(1, 0, 0, 0)])
    assert c.L == ProjLine.from_equations([(0, 0, 1, 0), (0, 0, 0, 1)])
    assert c.L_in_H is False


def test_classify_one_rank_one_member():
    c = classify_rank2_pencil(q("y0^2"), q("y0*y1"))
    assert c.case == 2 and c.rank1_members == 1
    assert c.L == ProjLine.from_equations([(1, 0, 0, 0), (0, 1, 0, 0)])
    assert c.L_in_H


def test_classify_two_rank_one_members():
    c = classify_rank2_pencil(q("y0^2"), q("y1^2"))
    assert c.case == 3 and c.rank1_members == 2
    assert c.L == ProjLine.from_equations([(1, 0, 0, 0), (0, 1, 0, 0)])


def test_classify_preconditions():
    with pytest.raises(PreconditionError):
        classify_rank2_pencil(q("y0*y1"), q("y0*y1").__class__.from_poly(parse_poly("2*y0*y1")))
    with pytest.raises(PreconditionError):
        classify_rank2_pencil(q("y0*y1"), q("y2*y3"))


@pytest.mark.parametrize("seed", range(10))
def test_constructed_rank2_pencils(seed):
    rng = random.Random(seed)
    h, a, b = (linear_form(rand_vec(rng)) for _ in range(3))
    while ProjSubspace.from_equations([_c(h), _c(a), _c(b)]).dimension != 0:
        h, a, b = (linear_form(rand_vec(rng)) for _ in range(3))
    expected = ProjLine.from_equations([_c(a), _c(b)])
    # case 1: h*a, h*b
    c1 = classify_rank2_pencil(QuadricForm.from_poly(h * a), QuadricForm.from_poly(h * b))
    assert c1.case == 1 and c1.L == expected
    assert c1.H == ProjSubspace.from_equations([_c(h)])
    # case 2: a^2, a*b (members a*(s*a + t*b))
    c2 = classify_rank2_pencil(QuadricForm.from_poly(a * a), QuadricForm.from_poly(a * b))
    assert c2.case == 2 and c2.L == expected and c2.L_in_H
    # case 3: a^2, b^2
    c3 = classify_rank2_pencil(QuadricForm.from_poly(a * a), QuadricForm.from_poly(b * b))
    assert c3.case == 3 and c3.L == expected


def _c(lin):
    lin = lin.extend(Y)
    return tuple(lin.coefficient({v: 1}) for v in Y)


# -- subspaces and incidence ----------------------------------------------------------


def test_lines_meet_agrees_with_meet():
    rng = random.Random(11)
    met = 0
    for _ in range(100):
        L = ProjLine.through(rand_vec(rng), rand_vec(rng))
        if rng.random() < 0.3:
            # force an intersection through a shared point
            p = L.basis[0]
            M = ProjLine.through(p, rand_vec(rng))
        else:
            M = ProjLine.through(rand_vec(rng), rand_vec(rng))
        assert lines_meet(L, M) == (L.meet(M) is not None)
        met += lines_meet(L, M)
    assert met >= 20


def test_projline_requires_two_dimensional_span():
    with pytest.raises(ValueError):
        ProjLine(((1, 0, 0, 0),))


def test_subspace_conjugation():
    L = ProjLine.through((1, I, 0, 0), (0, 0, 1, I))
    assert not L.is_real()
    assert L.conj() == ProjLine.through((1, -I, 0, 0), (0, 0, 1, -I))
    assert L.conj().conj() == L


# -- base loci --------------------------------------------------------------------


def test_base_locus_four_simple_points(pencil):
    B = web_base_locus(pencil("max-smooth-1"))
    assert set(B.points) == {(ONE, I, ZERO, ZERO), (ONE, -I, ZERO, ZERO), (ZERO, ZERO, ONE, I), (ZERO, ZERO, ONE, -I)}
    assert B.multiplicities == [1, 1, 1, 1] and B.total_length == 4


def test_base_locus_two_fat_points(pencil):
    B = web_base_locus(pencil("two-P3s"))
    assert set(B.points) == {(ZERO, ZERO, ONE, I), (ZERO, ZERO, ONE, -I)}
    assert B.multiplicities == [2, 2]
    assert len(B.fat_points()) == 2
    for p, d in B.fat_points():
        for M in pencil("two-P3s").matrices:
            assert QuadricForm(M).contains_fat_point(p, d)


def test_base_locus_of_diagonal_web_is_empty():
    B = web_base_locus(parse_pencil(PADDED))
    assert B.points == [] and B.total_length == 0


def test_double_p3_base_locus_length(pencil):
    B = web_base_locus(pencil("double-P3"))
    assert B.total_length == 3


# -- surface lines and reality ---------------------------------------------------------


def test_surface_lines_max_smooth_1(pencil):
    P = pencil("max-smooth-1")
    S = rank2_surface_lines(P, ComponentClaim(("x0", "x1*x4 - x2*x3")))
    assert {S.L1, S.L2} == {
        ProjLine.from_equations([(1, 0, 0, 0), (0, 1, 0, 0)]),
        ProjLine.from_equations([(0, 0, 1, 0), (0, 0, 0, 1)]),
    }
    flags = reality_predicates(S.L1, S.L2)
    assert not no_real_points_criterion(flags)


def test_surface_lines_refuse_a_plane(pencil):
    with pytest.raises(PreconditionError):
        rank2_surface_lines(pencil("double-plane"), ComponentClaim(("x2 + x4", "x4^2")))


def test_reality_criterion_true_for_synthetic_pair():
    L1 = ProjLine.through((1, I, 0, 0), (0, 0, 1, I))
    L2 = ProjLine.through((1, 2 * I, 0, 0), (0, 0, 1, 2 * I))
    flags = reality_predicates(L1, L2)
    assert flags == {"L1_meets_conjL1": False, "L2_meets_conjL2": False, "L1_meets_conjL2": False}
    assert no_real_points_criterion(flags)


def test_reality_criterion_false_for_real_lines():
    L1 = ProjLine.through((1, 0, 0, 0), (0, 1, 0, 0))
    L2 = ProjLine.through((0, 0, 1, 0), (0, 0, 0, 1))
    assert not no_real_points_criterion(reality_predicates(L1, L2))


# -- strata -----------------------------------------------------------------------


def test_general_strata(pencil):
    B = web_base_locus(pencil("max-smooth-1"))
    st = strata_intersections(B.points)
    assert st.configuration == "general"
    assert st.dimension == 5
    assert [s.label for s in st.surfaces] == ["X_01", "X_02", "X_03"]
    assert [s.kind for s in st.linear] == ["plane"] * 4
    assert all(sec.is_line for sec in st.sections.values())
    rng = random.Random(0)
    for S in st.surfaces:
        for _ in range(3):
            M = S.member([rng.randint(-3, 3) for _ in range(4)])
            assert st.z_coordinates(M) is not None
            from symmetroids.linalg import rank
            assert rank(M) <= 2


def test_coplanar_strata():
    pts = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 1, 0)]
    st = strata_intersections(pts)
    assert st.configuration == "coplanar"
    assert [s.label for s in st.linear] == ["X"]
    assert st.linear[0].kind == "3-space"


def test_fat_strata(pencil):
    B = web_base_locus(pencil("two-P3s"))
    supports = [p for p, _ in B.fat_points()]
    dirs = [d for _, d in B.fat_points()]
    st = strata_intersections(supports, dirs)
    assert st.configuration == "fat"
    assert [s.label for s in st.surfaces] == ["X_fat"]
    assert [s.label for s in st.degenerate] == ["X_chord"]


def test_strata_pull_back_to_conics(pencil):
    P = pencil("max-smooth-1")
    st = strata_intersections(web_base_locus(P).points)
    pulled = {label: (gens, dim) for label, gens, dim in strata_in_pencil(P, st)}
    assert pulled["X_01"][1] == 2
    assert pulled["X_02"][1] == 1 and pulled["X_03"][1] == 1
    assert parse_poly("x0^2 - x3^2 - x4^2") in pulled["X_02"][0]


def test_strata_require_four_points_or_two_fat_points():
    with pytest.raises(PreconditionError):
        strata_intersections([(1, 0, 0, 0)])
