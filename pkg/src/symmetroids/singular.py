"""Verification of claimed singular components and rank-2 locus multiplicities."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .errors import BudgetExceededError, PositiveDimensionalError
from .gaussian import GaussianRational, format_gaussian
from .ideals import GREVLEX, affine_dimension, buchberger, normal_form
from .pencil import ComponentClaim, SymmetricPencil, jacobian_generators, minor_ideal, rank_at
from .poly import MultiPoly
from .report import FAIL, PASS, CheckResult
from .solve import local_length, solve_zero_dim

SAMPLE_ATTEMPTS = 50
MULTIPLICITY_POINTS = 3
SLICE_BOUND = 3
MAX_MULTIPLICITY = 16
SLICE_ATTEMPTS = 20
SAMPLE_ROUNDS = 4
COEFF_BOUND = 5


def fmt_point(p) -> list[str]:
    return [format_gaussian(GaussianRational.coerce(c)) for c in p]


def projective_dimension(gens: Sequence[MultiPoly], variables: Sequence[str]) -> int:
    return affine_dimension(buchberger(gens, GREVLEX, variables)) - 1


def _random_hyperplane(vars, rng: random.Random, sparse: bool) -> MultiPoly:
    if sparse:
        i, j = rng.sample(range(len(vars)), 2)
        c = rng.choice([k for k in range(-COEFF_BOUND, COEFF_BOUND + 1) if k])
        return MultiPoly.var(vars[i]) - MultiPoly.var(vars[j]).scale(c)
    while True:
        coeffs = [rng.randint(-COEFF_BOUND, COEFF_BOUND) for _ in vars]
        if any(coeffs):
            break
    return sum((MultiPoly.var(v).scale(c) for v, c in zip(vars, coeffs) if c), MultiPoly.zero(vars))


def sample_points(
    gens: Sequence[MultiPoly],
    variables: Sequence[str],
    rng: random.Random,
    want: int = 1,
    attempts: int = SAMPLE_ATTEMPTS,
    dimension: int | None = None,
) -> list[tuple[GaussianRational, ...]]:
    """Q(i)-points of the projective variety V(gens), found by slicing it with
    random hyperplanes with small integer coefficients."""
    vars = tuple(variables)
    d = projective_dimension(gens, vars) if dimension is None else dimension
    if d < 0:
        return []
    found: list = []
    for k in range(attempts):
        cuts = [_random_hyperplane(vars, rng, sparse=(k + t) % 2 == 0) for t in range(d)]
        try:
            sols = solve_zero_dim(list(gens) + cuts, vars, projective=True)
        except PositiveDimensionalError:
            continue
        for p in sols.points:
            if p not in found:
                found.append(p)
        if len(found) >= want:
            break
    # fewest zero coordinates first: sparse cuts tend to hit special points
    found.sort(key=lambda p: sum(1 for c in p if not c))
    return found


def singular_along(P: SymmetricPencil, C: ComponentClaim, seed: int = 0) -> CheckResult:
    """PASS iff every partial derivative of det A(x) lies in the claimed ideal.

    With ``C.expected_rank`` set, every (rank+1)-minor must lie in the ideal
    as well, and the generic rank observed at sampled points of the
    component must equal the expected rank.
    """
    t0 = time.perf_counter()
    rng = random.Random(seed)
    B = C.ideal
    jac = jacobian_generators(P)
    bad = [P.names[i] for i, g in enumerate(jac) if normal_form(g, B)]
    witness: dict = {"jacobian_in_ideal": not bad}
    if bad:
        witness["failing_partials"] = bad
    warnings: list[str] = []
    ok = not bad
    if C.expected_rank is not None:
        r = C.expected_rank
        minors = minor_ideal(P, r).generators
        minors_ok = all(not normal_form(m, B) for m in minors)
        witness["minors_in_ideal"] = minors_ok
        ok = ok and minors_ok
        pts = sample_points(C.generators, P.names, rng, want=3)
        if not pts:
            warnings.append("no Q(i)-point found on a random slice; checked ideal containment only")
        else:
            ranks = [rank_at(P, p) for p in pts]
            best = max(range(len(pts)), key=lambda k: ranks[k])
            witness["sample_point"] = fmt_point(pts[best])
            witness["sample_rank"] = ranks[best]
            ok = ok and ranks[best] == r
    return CheckResult(
        claim=f"singular along {C.label}" + (f" (rank {C.expected_rank})" if C.expected_rank else ""),
        status=PASS if ok else FAIL,
        witness=witness,
        wall_time=round(time.perf_counter() - t0, 6),
        warnings=warnings,
    )


@dataclass
class LocusEntry:
    label: str
    contained: bool
    multiplicity: int | None
    expected_multiplicity: int | None
    point: tuple | None
    observed: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        if not self.contained:
            return False
        if self.expected_multiplicity is None:
            return True
        return self.multiplicity == self.expected_multiplicity


def transverse_multiplicity(
    gens: Sequence[MultiPoly],
    point: Sequence[GaussianRational],
    variables: Sequence[str],
    codim: int,
    rng: random.Random,
    max_length: int = MAX_MULTIPLICITY,
    tangent: Sequence[Sequence[GaussianRational]] = (),
) -> int:
    """Length at ``point`` of V(gens) cut by a random linear space of
    dimension ``codim`` through the point (a transverse slice).

    ``tangent`` spans the tangent space of the component at the point (in
    homogeneous coordinates); slice directions are redrawn until, together
    with it, they span everything, so the slice meets the component
    transversally.
    """
    vars = tuple(variables)
    params = tuple(f"t{k}" for k in range(codim))
    tangent = [list(v) for v in tangent] or [list(point)]
    for _ in range(SLICE_ATTEMPTS):
        dirs = [[rng.randint(-SLICE_BOUND, SLICE_BOUND) for _ in vars] for _ in range(codim)]
        if linalg.rank(tangent + dirs) == len(tangent) + codim:
            break
    else:
        raise PositiveDimensionalError("no transverse slice found")
    sub = {}
    for i, v in enumerate(vars):
        image = MultiPoly.const(point[i], params)
        for k, t in enumerate(params):
            if dirs[k][i]:
                image = image + MultiPoly.var(t).scale(dirs[k][i])
        sub[v] = image
    sliced = [g.substitute(sub) for g in gens]
    origin = tuple(GaussianRational(0) for _ in params)
    return local_length(sliced, origin, params, max_length=max_length)


def tangent_space(C: ComponentClaim, point, names: Sequence[str]) -> list[list[GaussianRational]]:
    """Kernel of the Jacobian of the component's ideal at a point (affine cone coordinates)."""
    at = dict(zip(names, point))
    rows = [[g.extend(names).diff(v).eval(at) for v in names] for g in C.ideal.generators]
    rows = [r for r in rows if any(r)]
    return linalg.nullspace(rows, len(names)) if rows else [list(r) for r in linalg.identity(len(names))]


def _height(point) -> int:
    return sum(abs(c.re.numerator) + c.re.denominator + abs(c.im.numerator) + c.im.denominator for c in point)


def _lies_on(C: ComponentClaim, point, names) -> bool:
    assignment = dict(zip(names, point))
    return all(not g.eval(assignment) for g in C.generators)


def rank_locus_report(
    P: SymmetricPencil,
    claims: Sequence[ComponentClaim],
    k: int = 2,
    seed: int = 0,
) -> list[LocusEntry]:
    """Verify claimed components of the rank <= k locus.

    For each claim: all (k+1)-minors must lie in its ideal, and the
    multiplicity of the minor ideal along it is measured as the length of
    a transverse linear slice through a sampled point.
    """
    rng = random.Random(seed)
    minors = list(minor_ideal(P, k).generators)
    out = []
    for C in claims:
        B = C.ideal
        contained = all(not normal_form(m, B) for m in minors)
        mult = None
        point = None
        observed = []
        if contained:
            dim = projective_dimension(C.generators, P.names)
            others = [D for D in claims if D is not C]
            pts = []
            for _ in range(SAMPLE_ROUNDS):
                fresh = sample_points(C.generators, P.names, rng, want=MULTIPLICITY_POINTS + 3, dimension=dim)
                pts += [p for p in fresh if p not in pts and not any(_lies_on(D, p, P.names) for D in others)]
                if len(pts) >= MULTIPLICITY_POINTS:
                    break
            # points of lower rank are special; simple points keep the computation small
            generic = [p for p in pts if rank_at(P, p) == k]
            pts = sorted(generic or pts, key=_height)
            for p in pts[:MULTIPLICITY_POINTS]:
                try:
                    T = tangent_space(C, p, P.names)
                    if len(T) != dim + 1:
                        continue  # singular point of the component
                    observed.append((transverse_multiplicity(minors, p, P.names, P.n - dim, rng, tangent=T), p))
                except (PositiveDimensionalError, BudgetExceededError):
                    continue  # the random slice was not transverse
                if len(observed) == 2 and observed[0][0] == observed[1][0]:
                    break
            if observed:
                # multiplicity is upper semicontinuous: the generic value is the least one seen
                mult, point = min(observed, key=lambda mp: mp[0])
        out.append(LocusEntry(C.label, contained, mult, C.expected_multiplicity, point, [m for m, _ in observed]))
    return out


def rank2_locus_report(P: SymmetricPencil, claims: Sequence[ComponentClaim], seed: int = 0) -> CheckResult:
    t0 = time.perf_counter()
    entries = rank_locus_report(P, claims, 2, seed)
    witness = {
        "components": [
            {
                "label": e.label,
                "contained": e.contained,
                "multiplicity": e.multiplicity,
                "expected_multiplicity": e.expected_multiplicity,
                "point": fmt_point(e.point) if e.point else None,
                "observed": e.observed,
            }
            for e in entries
        ]
    }
    warnings = [
        f"{e.label}: multiplicity {e.multiplicity} differs from claimed {e.expected_multiplicity}"
        for e in entries
        if e.contained and e.expected_multiplicity is not None and e.multiplicity != e.expected_multiplicity
    ]
    mults = ", ".join(str(e.expected_multiplicity) for e in entries)
    return CheckResult(
        claim=f"rank-2 locus components with multiplicities ({mults})",
        status=PASS if all(e.ok for e in entries) else FAIL,
        witness=witness,
        wall_time=round(time.perf_counter() - t0, 6),
        warnings=warnings,
    )


def rank_locus_contains(P: SymmetricPencil, C: ComponentClaim, k: int, seed: int = 0) -> CheckResult:
    """PASS iff every (k+1)-minor lies in the claimed ideal and a sampled
    point of the component has rank exactly k."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    B = C.ideal
    minors = minor_ideal(P, k).generators
    contained = all(not normal_form(m, B) for m in minors)
    witness: dict = {"minors_in_ideal": contained}
    warnings: list[str] = []
    ok = contained
    pts = sample_points(C.generators, P.names, rng, want=3)
    if pts:
        ranks = [rank_at(P, p) for p in pts]
        best = max(range(len(pts)), key=lambda i: ranks[i])
        witness["sample_point"] = fmt_point(pts[best])
        witness["sample_rank"] = ranks[best]
        ok = ok and ranks[best] == k
    else:
        warnings.append("no Q(i)-point found on a random slice; checked ideal containment only")
    return CheckResult(
        claim=f"{C.label} lies in the rank-{k} locus",
        status=PASS if ok else FAIL,
        witness=witness,
        wall_time=round(time.perf_counter() - t0, 6),
        warnings=warnings,
    )
