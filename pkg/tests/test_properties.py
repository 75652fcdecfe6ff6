"""Property-based checks of the exact arithmetic layer."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from symmetroids.gaussian import GaussianRational as G
from symmetroids.ideals import buchberger, normal_form
from symmetroids.poly import MultiPoly, parse_poly
from symmetroids.spectra import POSITIVE_DEFINITE, definiteness, is_positive_definite

fractions = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))
gaussians = st.builds(G, fractions, fractions)
VARS = ("x0", "x1", "x2")


@st.composite
def polys(draw, max_terms=4, max_degree=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exp = tuple(draw(st.integers(0, max_degree)) for _ in VARS)
        terms[exp] = draw(gaussians)
    return MultiPoly(VARS, terms)


@given(polys())
def test_self_difference_is_zero(p):
    assert not (p - p)


@given(gaussians, gaussians)
def test_conjugation_is_a_field_automorphism(a, b):
    assert (a + b).conj() == a.conj() + b.conj()
    assert (a * b).conj() == a.conj() * b.conj()
    if b:
        assert (a / b).conj() == a.conj() / b.conj()


@given(gaussians)
def test_inverse(a):
    if a:
        assert a * a.inverse() == G(1)


@given(polys(), polys())
def test_multiplication_commutes(p, q):
    assert p * q == q * p


_B = buchberger([parse_poly("x0^2 - x1*x2"), parse_poly("x1^2 - x0 + 1")])


@settings(max_examples=50, deadline=None)
@given(polys(), polys(), gaussians)
def test_normal_form_is_linear(p, q, c):
    assert normal_form(p + q.scale(c), _B) == normal_form(p, _B) + normal_form(q, _B).scale(c)


@st.composite
def symmetric_matrices(draw, n=4):
    # M^T M plus a small shift: mixes definite, semidefinite and indefinite cases
    small = st.builds(Fraction, st.integers(-3, 3), st.integers(1, 3))
    R = [[draw(small) for _ in range(n)] for _ in range(n)]
    shift = draw(st.integers(-2, 2))
    return [[sum(R[k][i] * R[k][j] for k in range(n)) + (shift if i == j else 0) for j in range(n)] for i in range(n)]


@settings(max_examples=80, deadline=None)
@given(symmetric_matrices())
def test_elimination_agrees_with_inertia(M):
    assert is_positive_definite(M) == (definiteness(M) == POSITIVE_DEFINITE)
