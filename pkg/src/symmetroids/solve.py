"""Zero-dimensional solving over Q(i) and local multiplicities.

Solutions are found by triangular back-substitution through a
lexicographic Groebner basis.  Univariate eliminants are split into
linear factors over Q(i); whatever does not split is reported through a
``residual`` flag, never approximated.
"""

from __future__ import annotations

import random
from fractions import Fraction
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Sequence

import sympy

from .errors import BudgetExceededError, PositiveDimensionalError
from .gaussian import ONE, ZERO, GaussianRational
from .ideals import (
    GREVLEX,
    LEX,
    affine_dimension,
    buchberger,
    is_zero_dimensional,
    ring_variables,
    standard_monomials,
)
from .poly import MultiPoly

Point = tuple[GaussianRational, ...]


@dataclass
class Solutions:
    points: list[Point]
    residual: bool = False
    variables: tuple[str, ...] = ()
    multiplicities: list[int] = field(default_factory=list)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


# -- univariate roots --------------------------------------------------------

_T = sympy.Symbol("t")


def _to_sympy(c: GaussianRational):
    return sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(
        c.im.numerator, c.im.denominator
    )


def _from_sympy(z) -> GaussianRational:
    re, im = sympy.re(z), sympy.im(z)
    return GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))


def univariate_roots(coeffs: Sequence[GaussianRational]) -> tuple[list[tuple[GaussianRational, int]], bool]:
    """Roots in Q(i) with multiplicities of ``sum coeffs[k] t^k``.

    Returns ``(roots, residual)`` where ``residual`` is true iff a factor of
    degree > 1 without roots in Q(i) remains.
    """
    cs = list(coeffs)
    while cs and not cs[-1]:
        cs.pop()
    if not cs:
        raise ValueError("roots of the zero polynomial")
    if len(cs) == 1:
        return [], False
    if len(cs) == 2:
        return [(-cs[0] / cs[1], 1)], False
    if len(cs) == 3:
        # quadratic formula; a root in Q(i) exists iff the discriminant is a square there
        c, b, a = cs
        disc = b * b - a * c * 4
        if not disc:
            return [(-b / (a * 2), 2)], False
        s = disc.sqrt()
        if s is None:
            return [], True
        roots = [((-b + s) / (a * 2), 1), ((-b - s) / (a * 2), 1)]
        roots.sort(key=lambda r: (r[0].re, r[0].im))
        return roots, False
    poly = sympy.Poly([_to_sympy(c) for c in reversed(cs)], _T, domain=sympy.QQ_I)
    _, factors = poly.factor_list()
    roots = []
    residual = False
    for f, mult in factors:
        if f.degree() == 1:
            a, b = f.all_coeffs()
            roots.append((_from_sympy(sympy.expand(-b / a)), mult))
        elif f.degree() > 1:
            residual = True
    roots.sort(key=lambda r: (r[0].re, r[0].im))
    return roots, residual


def _univariate_coeffs(p: MultiPoly, var: str) -> list[GaussianRational]:
    i = p.variables.index(var)
    deg = p.degree()
    cs = [ZERO] * (deg + 1)
    for exp, c in p.terms.items():
        cs[exp[i]] = cs[exp[i]] + c
    return cs


# -- affine and projective solving --------------------------------------------


def _solve_affine(gens: list[MultiPoly], vars: tuple[str, ...]) -> tuple[list[Point], bool]:
    gens = [g for g in gens if g]
    if not vars:
        if any(gens):
            return [], False
        return [()], False
    if not gens:
        raise PositiveDimensionalError(PositiveDimensionalError.ALARM)
    B = buchberger(gens, LEX, vars)
    if B.is_unit():
        return [], False
    if not is_zero_dimensional(B):
        raise PositiveDimensionalError(PositiveDimensionalError.ALARM)
    last = vars[-1]
    uni = next(g for g in B.generators if set(g.used_variables()) <= {last})
    roots, residual = univariate_roots(_univariate_coeffs(uni.extend([last]), last))
    out: list[Point] = []
    for r, _ in roots:
        sub = [g.substitute({last: MultiPoly.const(r)}) for g in B.generators]
        rest, res2 = _solve_affine(sub, vars[:-1])
        residual = residual or res2
        out.extend(s + (r,) for s in rest)
    return out, residual


def solve_zero_dim(
    gens: Sequence[MultiPoly],
    variables: Sequence[str] | None = None,
    projective: bool = False,
    multiplicities: bool = False,
) -> Solutions:
    """All Q(i)-solutions of a system with finitely many solutions.

    Projective points are normalised so the first nonzero coordinate is 1.
    Raises :class:`PositiveDimensionalError` if the zero set is infinite.
    """
    vars = tuple(variables) if variables else ring_variables(gens)
    gens = [g for g in gens if g]
    residual = False
    points: list[Point] = []
    if not projective:
        points, residual = _solve_affine(gens, vars)
    else:
        for j in range(len(vars)):
            sub = {v: MultiPoly.const(0) for v in vars[:j]}
            sub[vars[j]] = MultiPoly.const(1)
            chart = [g.substitute(sub) for g in gens]
            rest_vars = vars[j + 1 :]
            sols, res = _solve_affine(chart, rest_vars)
            residual = residual or res
            for s in sols:
                points.append((ZERO,) * j + (ONE,) + s)
    result = Solutions(points, residual, vars)
    if multiplicities:
        result.multiplicities = [
            local_length(gens, p, vars, projective=projective) for p in points
        ]
    return result


# -- multiplicities --------------------------------------------------------


def _dehomogenize(gens, point: Point, vars):
    j = next(k for k, c in enumerate(point) if c)
    scale = point[j].inverse()
    p = tuple(c * scale for c in point)
    sub = {vars[j]: MultiPoly.const(1)}
    chart = [g.substitute(sub) for g in gens]
    rest = vars[:j] + vars[j + 1 :]
    coords = p[:j] + p[j + 1 :]
    return chart, rest, coords


def local_length(
    gens: Sequence[MultiPoly],
    point: Point,
    variables: Sequence[str],
    projective: bool = False,
    max_order: int = 12,
    max_length: int | None = None,
) -> int:
    """Length of the local ring of ``V(gens)`` at an isolated ``point``.

    Computed as the stable value of dim k[x]/(I + m^N), where m is the
    maximal ideal of the point; the sequence strictly increases until
    m^N lies in the local ideal, so two equal consecutive values stop it.
    Each term is exact linear algebra: modulo m^N the ideal is spanned by
    the truncated products x^a * g.  With ``max_length`` set, a partial
    value above it raises :class:`BudgetExceededError` straight away.
    """
    vars = tuple(variables)
    gens = [g for g in gens if g]
    if projective:
        gens, vars, point = _dehomogenize(gens, point, vars)
    shift = {v: MultiPoly.var(v) + MultiPoly.const(c) for v, c in zip(vars, point)}
    moved = [g.substitute(shift).extend(vars) for g in gens]
    origin = (0,) * len(vars)
    if any(g.terms.get(origin) for g in moved):
        return 0  # some generator does not vanish at the point
    prev = None
    for N in range(1, max_order + 1):
        n = _truncated_quotient_dimension(moved, len(vars), N)
        if n == prev:
            return n
        if max_length is not None and n > max_length:
            raise BudgetExceededError(f"local length exceeds {max_length}")
        prev = n
    raise PositiveDimensionalError(f"point is not isolated (length exceeds {max_order})")


def _exponents_below(nvars: int, N: int) -> list[tuple[int, ...]]:
    out = []
    for d in range(N):
        for combo in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def _truncated_quotient_dimension(gens: list[MultiPoly], nvars: int, N: int) -> int:
    """dim k[x]/(I + m^N) at the origin, by row reduction of the truncated products."""
    monos = _exponents_below(nvars, N)
    order = {e: k for k, e in enumerate(monos)}
    echelon: dict[tuple, dict] = {}  # pivot exponent -> row whose lowest term is the pivot
    for g in gens:
        low = {e: c for e, c in g.terms.items() if sum(e) < N}
        if not low:
            continue
        ord_g = min(sum(e) for e in low)
        for a in monos:
            if sum(a) + ord_g >= N:
                continue
            row = {}
            for e, c in low.items():
                f = tuple(x + y for x, y in zip(a, e))
                if sum(f) < N:
                    row[f] = c
            _insert_row(echelon, row, order)
            if len(echelon) == len(monos):
                return 0
    return len(monos) - len(echelon)


def _insert_row(echelon: dict, row: dict, order: dict) -> None:
    row = {e: c for e, c in row.items() if c}
    while row:
        piv = min(row, key=order.__getitem__)
        base = echelon.get(piv)
        if base is None:
            inv = row[piv].inverse()
            echelon[piv] = {e: c * inv for e, c in row.items()}
            return
        f = row[piv]
        for e, c in base.items():
            v = row.get(e, ZERO) - f * c
            if v:
                row[e] = v
            else:
                row.pop(e, None)


def projective_length(
    gens: Sequence[MultiPoly],
    variables: Sequence[str],
    rng: random.Random | None = None,
    attempts: int = 20,
) -> int:
    """Total length of a zero-dimensional projective scheme.

    Uses an affine chart {l = 1} for a random linear form l that misses the
    scheme; the quotient dimension of that chart is the total length.
    """
    rng = rng or random.Random(0)
    vars = tuple(variables)
    gens = [g for g in gens if g]
    for _ in range(attempts):
        coeffs = [rng.randint(-5, 5) for _ in vars]
        if not coeffs[0]:
            continue
        ell = sum((MultiPoly.var(v) * c for v, c in zip(vars, coeffs)), MultiPoly.zero())
        if affine_dimension(buchberger(gens + [ell], GREVLEX, vars)) > 0:
            continue
        # solve l = 1 for the first variable
        rest = sum((MultiPoly.var(v) * c for v, c in zip(vars[1:], coeffs[1:])), MultiPoly.zero())
        image = (MultiPoly.const(1) - rest).scale(GaussianRational(1) / coeffs[0])
        chart = [g.substitute({vars[0]: image}) for g in gens]
        B = buchberger(chart, GREVLEX, vars[1:])
        if B.is_unit():
            return 0
        if not is_zero_dimensional(B):
            raise PositiveDimensionalError(PositiveDimensionalError.ALARM)
        return len(standard_monomials(B))
    raise RuntimeError("no linear form avoiding the scheme was found")


# -- dense univariate helpers (coefficient lists, lowest degree first) -------


def _trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def udivmod(a, b):
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    q = [ZERO] * max(len(a) - len(b) + 1, 0)
    inv = b[-1].inverse()
    while len(a) >= len(b) and a:
        f = a[-1] * inv
        shift = len(a) - len(b)
        q[shift] = f
        for k, c in enumerate(b):
            a[shift + k] = a[shift + k] - f * c
        a = _trim(a)
    return q, a


def ugcd(a, b):
    """Monic gcd of two univariate polynomials over Q(i)."""
    a, b = _trim(a), _trim(b)
    while b:
        _, r = udivmod(a, b)
        a, b = b, r
    if not a:
        return []
    inv = a[-1].inverse()
    return [c * inv for c in a]


def uderiv(a):
    return [c * k for k, c in enumerate(a)][1:]


def squarefree_degree(a) -> int:
    """Number of distinct complex roots of a nonzero polynomial."""
    a = _trim(a)
    if not a:
        raise ValueError("zero polynomial")
    g = ugcd(a, uderiv(a))
    return (len(a) - 1) - max(len(g) - 1, 0)
