"""The worked examples: their pencils and the claims verified for each."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import checks
from .gaussian import I, GaussianRational
from .pencil import ComponentClaim, SymmetricPencil
from .report import VerificationReport
from .web import ProjLine


@dataclass
class ExampleEntry:
    id: str
    pencil: SymmetricPencil
    description: str
    checks: list = field(default_factory=list)


def _pencil(rows, names=None) -> SymmetricPencil:
    return SymmetricPencil.from_matrix(rows, names)


def _claim(*gens, label="", rank=None, mult=None) -> ComponentClaim:
    return ComponentClaim(tuple(gens), rank, label, mult)


def double_plane() -> ExampleEntry:
    P = _pencil(
        [
            ["x0", "x1", "x2", "0"],
            ["x1", "x3", "0", "x4"],
            ["x2", "0", "0", "x2 + x4"],
            ["0", "x4", "x2 + x4", "0"],
        ],
        ("x0", "x1", "x2", "x3", "x4"),
    )
    plane = _claim("x2 + x4", "x4^2", label="V(x2 + x4, x4^2)")
    conic = _claim("x2", "x4", "x0*x3 - x1^2", label="V(x2, x4, x0*x3 - x1^2)")
    return ExampleEntry(
        "double-plane",
        P,
        "quartic in P^4 with a double plane of rank-2 points and a conic of rank-1 points",
        [checks.quartic_check(), checks.rank_check(plane, 2), checks.rank_check(conic, 1)],
    )


def _max_smooth_1_parts():
    Q = _claim("x0", "x1*x4 - x2*x3", label="V(x0, x1*x4 - x2*x3)")
    conics = [
        _claim("x1 + x4", "x2 - x3", "x0^2 - x1^2 - x3^2", label="V(x1 + x4, x2 - x3, x0^2 - x1^2 - x3^2)"),
        _claim("x1 - x4", "x2 + x3", "x0^2 - x1^2 - x3^2", label="V(x1 - x4, x2 + x3, x0^2 - x1^2 - x3^2)"),
    ]
    return Q, conics


def max_smooth_1() -> ExampleEntry:
    P = _pencil(
        [
            ["x0", "0", "x1", "x2"],
            ["0", "x0", "x3", "x4"],
            ["x1", "x3", "x0", "0"],
            ["x2", "x4", "0", "x0"],
        ],
        ("x0", "x1", "x2", "x3", "x4"),
    )
    Q, conics = _max_smooth_1_parts()
    base = [(1, I, 0, 0), (1, -I, 0, 0), (0, 0, 1, I), (0, 0, 1, -I)]
    lines = [ProjLine.from_equations([(1, 0, 0, 0), (0, 1, 0, 0)]), ProjLine.from_equations([(0, 0, 1, 0), (0, 0, 0, 1)])]
    return ExampleEntry(
        "max-smooth-1",
        P,
        "spectrahedral quartic in P^4 singular along a smooth quadric surface disjoint from the spectrahedron",
        [
            checks.quartic_check(),
            checks.singular_check(_claim(*Q.generators, label=Q.label, rank=2)),
            checks.base_locus_check(expected_points=base, expected_lengths=[1, 1, 1, 1]),
            checks.extra_conics_check(Q, conics),
            checks.surface_lines_check(Q, lines),
            checks.cyclide_consistency_check(Q),
            checks.spectrahedral_check((1, 0, 0, 0, 0)),
            checks.configuration_check(Q, conics, 1),
            checks.dimension_bound_check(4, "a smooth quadric surface of rank-2 singular points"),
        ],
    )


def max_smooth_2() -> ExampleEntry:
    P = _pencil(
        [
            ["x0", "0", "x1", "x2"],
            ["0", "x0", "x2", "x3"],
            ["x1", "x2", "x4", "0"],
            ["x2", "x3", "0", "x4"],
        ],
        ("x0", "x1", "x2", "x3", "x4"),
    )
    Q = _claim("x1 + x3", "x0*x4 - x2^2 - x3^2", label="V(x1 + x3, x0*x4 - x2^2 - x3^2)")
    conics = [
        _claim("x0", "x4", "x2^2 - x1*x3", label="V(x0, x4, x2^2 - x1*x3)"),
        _claim("x2", "x1 - x3", "x3^2 - x0*x4", label="V(x2, x1 - x3, x3^2 - x0*x4)"),
    ]
    base = [(1, I, 0, 0), (1, -I, 0, 0), (0, 0, 1, I), (0, 0, 1, -I)]
    return ExampleEntry(
        "max-smooth-2",
        P,
        "spectrahedral quartic in P^4 singular along a smooth quadric surface on the boundary",
        [
            checks.quartic_check(),
            checks.singular_check(_claim(*Q.generators, label=Q.label, rank=2)),
            checks.base_locus_check(expected_points=base, expected_lengths=[1, 1, 1, 1]),
            checks.extra_conics_check(Q, conics),
            checks.surface_lines_check(Q),
            checks.cyclide_consistency_check(Q),
            checks.spectrahedral_check(),
            checks.configuration_check(Q, conics, 2),
            checks.dimension_bound_check(4, "a smooth quadric surface of rank-2 singular points"),
        ],
    )


def double_p3() -> ExampleEntry:
    P = _pencil(
        [
            ["x0 + x1", "x0 + x2", "x3", "x2"],
            ["x0 + x2", "x0 - x1", "x3", "x2"],
            ["x3", "x3", "x4", "x5"],
            ["x2", "x2", "x5", "0"],
        ],
        ("x0", "x1", "x2", "x3", "x4", "x5"),
    )
    H = [
        _claim("x0", "x1", "x2", label="V(x0, x1, x2)", mult=1),
        _claim("x2", "x4", "x5", label="V(x2, x4, x5)", mult=3),
        _claim("x1", "x2", "x5", label="V(x1, x2, x5)", mult=6),
    ]
    return ExampleEntry(
        "double-P3",
        P,
        "quartic in P^5 whose Jacobian ideal lies in <x2^2, x5> (a double 3-space)",
        [
            checks.quartic_check(),
            checks.singular_check(_claim("x2^2", "x5", label="<x2^2, x5> (Jacobian containment)")),
            checks.singular_check(H[0]),
            checks.rank2_multiplicity_check(H),
            checks.rank_check(_claim("x1", "x2", "x5", "x0*x4 - x3^2", label="V(x1, x2, x5, x0*x4 - x3^2)"), 1),
            checks.base_locus_check(total_length=3),
            checks.dimension_bound_check(5, "a singular locus containing a 3-space"),
        ],
    )


def two_p3s() -> ExampleEntry:
    P = _pencil(
        [
            ["x0", "x1", "x2", "x3"],
            ["x1", "x4", "-x3", "x2"],
            ["x2", "-x3", "x5", "0"],
            ["x3", "x2", "0", "x5"],
        ],
        ("x0", "x1", "x2", "x3", "x4", "x5"),
    )
    surface = _claim("x0 - x4", "x1", "x2^2 + x3^2 - x4*x5", label="V(x0 - x4, x1, x2^2 + x3^2 - x4*x5)")
    return ExampleEntry(
        "two-P3s",
        P,
        "spectrahedral quartic in P^5 singular along two conjugate 3-spaces and a quadric surface",
        [
            checks.quartic_check(),
            checks.singular_check(_claim("x2 - I*x3", "x5", label="V(x2 - I*x3, x5)", rank=3)),
            checks.singular_check(_claim("x2 + I*x3", "x5", label="V(x2 + I*x3, x5)", rank=3)),
            checks.singular_check(_claim(*surface.generators, label=surface.label, rank=2)),
            checks.base_locus_check(expected_lengths=[2, 2], total_length=4, fat=True),
            checks.fat_strata_check(surface),
            checks.spectrahedral_check(),
            checks.semidefinite_points_check(surface, 5),
            checks.dimension_bound_check(5, "a singular locus containing a 3-space"),
        ],
    )


LAMBDA_NAMES = ("x00", "x02", "x03", "x12", "x13")


def lambda_pencil(lam) -> SymmetricPencil:
    """The family with diagonal blocks x00*I and lam*x00*I."""
    lam = GaussianRational.coerce(lam)
    if not lam.is_real() or not lam:
        raise ValueError("lambda must be a nonzero rational")
    d = f"({lam})*x00"
    return _pencil(
        [
            ["x00", "0", "x02", "x03"],
            ["0", "x00", "x12", "x13"],
            ["x02", "x12", d, "0"],
            ["x03", "x13", "0", d],
        ],
        LAMBDA_NAMES,
    )


def lambda_family(lam) -> ExampleEntry:
    lam = Fraction(lam)
    P = lambda_pencil(lam)
    q = ("" if lam == 1 else f"{lam}*") + "x00^2 - x02^2 - x12^2"
    conics = [
        _claim("x02 + x13", "x03 - x12", q, label=f"V(x02 + x13, x03 - x12, {q})"),
        _claim("x02 - x13", "x03 + x12", q, label=f"V(x02 - x13, x03 + x12, {q})"),
    ]
    Q = _claim("x00", "x02*x13 - x03*x12", label="V(x00, x02*x13 - x03*x12)")
    entry_checks = [
        checks.quartic_check(),
        checks.singular_check(_claim(*Q.generators, label=Q.label, rank=2)),
    ]
    entry_checks += [checks.singular_check(_claim(*C.generators, label=C.label, rank=2)) for C in conics]
    if lam > 0:
        entry_checks += [checks.spectrahedral_check(), checks.real_points_check(conics, True)]
    else:
        entry_checks += [checks.infeasibility_check(), checks.real_points_check(conics, False)]
    return ExampleEntry(
        f"lambda-family({lam})",
        P,
        "pencil through the hyperplane x00 = lam*x22 of the quadrics through four conjugate points",
        entry_checks,
    )


_BUILDERS = {
    "double-plane": double_plane,
    "max-smooth-1": max_smooth_1,
    "max-smooth-2": max_smooth_2,
    "double-P3": double_p3,
    "two-P3s": two_p3s,
    "lambda-family(1)": lambda: lambda_family(1),
    "lambda-family(-1)": lambda: lambda_family(-1),
}

_LAMBDA = re.compile(r"^lambda-family\((-?\d+(?:/\d+)?)\)$")


def example_ids() -> list[str]:
    return list(_BUILDERS)


def get_example(example_id: str) -> ExampleEntry:
    if example_id in _BUILDERS:
        return _BUILDERS[example_id]()
    m = _LAMBDA.match(example_id)
    if m:
        return lambda_family(Fraction(m.group(1)))
    raise KeyError(example_id)


def verify_example(example_id: str, seed: int = 0) -> VerificationReport:
    entry = get_example(example_id)
    report = VerificationReport(entry.id, seed=seed)
    for check in entry.checks:
        report.add(check(entry.pencil, seed))
    return report
