import pytest

from symmetroids.errors import MissingAssignmentError, UnknownVariableError
from symmetroids.gaussian import GaussianRational as G
from symmetroids.poly import MultiPoly, divide_exact, format_poly, parse_poly


def p(text):
    return parse_poly(text)


x0, x1, x2, x3, x4 = (MultiPoly.var(f"x{k}") for k in range(5))


def test_binomial_square():
    assert (x0 + x1) ** 2 == x0 ** 2 + x1 * x0.scale(2) + x1 ** 2


def test_zero_is_absorbing():
    assert not (x2 + x4) * 0
    assert ((x2 + x4) * MultiPoly.zero()).terms == {}


def test_double_plane_diagonal_product_vanishes(pencil):
    A = pencil("double-plane").matrix
    prod = A[0][0] * A[1][1] * A[2][2] * A[3][3]
    assert not prod


def test_eval_on_segre_quadric():
    f = p("x1*x4 - x2*x3")
    assert f.eval({"x1": 1, "x2": 1, "x3": 1, "x4": 1}) == 0


def test_eval_on_rank_one_conic():
    f = p("x0*x3 - x1^2")
    assert f.eval(dict(zip(["x0", "x1", "x2", "x3", "x4"], [1, 1, 0, 1, 0]))) == 0


def test_eval_lambda_conic_point():
    f = parse_poly("lam*x00^2 - x02^2 - x12^2")
    assert f.eval({"lam": 1, "x00": 1, "x02": 1, "x12": 0}) == 0


def test_eval_missing_assignment_names_variable():
    with pytest.raises(MissingAssignmentError) as info:
        p("x0*x3 - x1^2").eval({"x0": 1, "x3": 2})
    assert "x1" in str(info.value)


def test_eval_commutes_with_arithmetic():
    f, g = p("x0^2 - 3*x1 + I"), p("(1/2-I)*x0*x1 + 7")
    pt = {"x0": G(2, -1), "x1": G(0, 3)}
    assert (f * g).eval(pt) == f.eval(pt) * g.eval(pt)
    assert (f + g).eval(pt) == f.eval(pt) + g.eval(pt)


def test_diff():
    assert p("x0*x3 - x1^2").diff("x1") == p("-2*x1")
    assert p("x4^2").diff("x4") == p("2*x4")
    with pytest.raises(UnknownVariableError):
        p("x4^2").diff("z")


def test_euler_relation_on_quartic(pencil):
    f = pencil("max-smooth-1").quartic
    lhs = sum((MultiPoly.var(v) * f.diff(v) for v in f.variables), MultiPoly.zero())
    assert lhs == f.scale(4)


def test_substitute_onto_hyperplane():
    lam = MultiPoly.var("lam")
    assert not p("x00 - lam*x22").substitute({"x00": lam * MultiPoly.var("x22")})


def test_substitute_is_ring_homomorphism():
    f, g = p("x0^2 + x1"), p("x0 - 2*x1*x2")
    m = {"x0": p("x1 + I*x2"), "x2": p("x0^2")}
    assert (f * g).substitute(m) == f.substitute(m) * g.substitute(m)


def test_identity_substitution():
    f = p("x0^3 - 5/7*I*x1*x2 + 3")
    assert f.substitute({v: MultiPoly.var(v) for v in f.variables}) == f


def test_double_plane_restricted_to_plane_has_rank_at_most_two(pencil):
    from symmetroids import linalg

    P = pencil("double-plane")
    zero = MultiPoly.const(0)
    M = [[e.substitute({"x2": zero, "x4": zero}) for e in row] for row in P.matrix]
    assert all(not m for _, m in linalg.minors(M, 3))


def test_canonical_form_is_unique():
    a = p("x0*x1 + x1*x0 - 2*x1*x0")
    assert a.terms == {} and a == MultiPoly.zero()
    assert p("x1 + x0") == p("x0 + x1")
    assert hash(p("x1 + x0")) == hash(p("x0 + x1").extend(["x7"]))


def test_conjugation():
    f = p("(1+2*I)*x0 - I")
    assert f.conj() == p("(1-2*I)*x0 + I")
    assert not f.is_real() and (f * f.conj()).is_real()


def test_homogeneity_and_degree():
    assert p("x0*x1 - x2^2").is_homogeneous()
    assert not p("x0*x1 - x2").is_homogeneous()
    assert p("x0^3*x1 + x2").degree() == 4


def test_divide_exact():
    assert divide_exact(p("x0^2 - x1^2"), p("x0 + x1")) == p("x0 - x1")
    with pytest.raises(ArithmeticError):
        divide_exact(p("x0^2 + x1"), p("x0"))


@pytest.mark.parametrize(
    "text",
    [
        "(1/2+1/3*I)*x0^2 - 5/7*I*x1 + 3",
        "x0^2*y1 - 2*x0 + I",
        "1/9*x0*x1*x2*x3 - x3^4",
        "0",
    ],
)
def test_text_round_trip(text):
    f = parse_poly(text)
    assert format_poly(f) == text
    assert parse_poly(format_poly(f)) == f


def test_parser_handles_products_and_powers():
    assert p("(x0 + x1)^2 - x0*(x0 + 2*x1)") == p("x1^2")
    assert p("2/4*x0") == p("1/2*x0")
    assert p("I*I") == p("-1")
