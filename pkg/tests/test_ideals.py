import pytest

from symmetroids.errors import NotGroebnerError
from symmetroids.ideals import (
    GREVLEX,
    LEX,
    IdealBasis,
    affine_dimension,
    buchberger,
    eliminate,
    ideal_contains,
    is_groebner,
    is_zero_dimensional,
    normal_form,
    quotient_dimension,
)
from symmetroids.pencil import jacobian_generators
from symmetroids.poly import parse_poly


def p(text):
    return parse_poly(text)


def test_normal_form_by_power():
    B = buchberger([p("x2^2")])
    assert normal_form(p("x2^3 + x1"), B) == p("x1")


def test_normal_form_linear_substitution():
    B = buchberger([p("x2 + x4"), p("x4^2")])
    assert not normal_form(p("x2^2"), B)
    assert normal_form(p("x2"), B) == p("-x4")


def test_normal_form_requires_groebner_basis():
    B = IdealBasis((p("x0*x1 - 1"), p("x0^2")))
    with pytest.raises(NotGroebnerError):
        normal_form(p("x0"), B)


def test_unit_ideal():
    B = buchberger([p("x0*x1 - 1"), p("x0")])
    assert B.is_unit()
    assert affine_dimension(B) == -1


def test_buchberger_output_satisfies_criterion():
    gens = [p("x0^2 - x1*x2"), p("x1^2 - x0*x2"), p("x2^2 - x0*x1 + 1")]
    for order in (GREVLEX, LEX):
        B = buchberger(gens, order, check=True)
        assert is_groebner(B)
        for g in gens:
            assert not normal_form(g, B)


def test_buchberger_on_twisted_cubic():
    gens = [p("x0*x2 - x1^2"), p("x1*x3 - x2^2"), p("x0*x3 - x1*x2")]
    B = buchberger(gens)
    assert is_groebner(B)
    assert len(B) == 3


def test_non_groebner_generators_fail_the_criterion():
    B = IdealBasis((p("x0^2 - x1"), p("x0*x1 - 1")), GREVLEX, (), True)
    assert not is_groebner(B)


def test_double_p3_jacobian_contained_in_fat_ideal(pencil):
    J = jacobian_generators(pencil("double-P3"))
    gens = [p("x2^2"), p("x5")]
    assert all(ideal_contains(g, gens) for g in J)


def test_quartic_in_its_jacobian_ideal(pencil):
    P = pencil("max-smooth-1")
    assert ideal_contains(P.quartic, jacobian_generators(P))


def test_ideal_non_membership():
    assert not ideal_contains(p("x0"), [p("x2 + x4"), p("x4^2")])


def test_eliminate_first_variable():
    E = eliminate([p("y0 - y1"), p("y0*y2")], ["y0"])
    assert list(E.generators) == [p("y1*y2")]
    assert "y0" not in E.variables


def test_eliminate_nilpotent():
    E = eliminate([p("x2 + x4"), p("x4^2")], ["x4"])
    assert list(E.generators) == [p("x2^2")]


def test_dimension_and_quotient():
    B = buchberger([p("x0^2"), p("x1^3")])
    assert is_zero_dimensional(B)
    assert quotient_dimension([p("x0^2"), p("x1^3")]) == 6
    assert affine_dimension(buchberger([p("x0*x1")], GREVLEX, ("x0", "x1"))) == 1
