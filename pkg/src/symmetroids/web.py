"""Quadrics in P^3 attached to a pencil, and the geometry of their web.

Every point x of the parameter space gives the quadric q(x) = y^T A(x) y
in the coordinates y0..y3.  This module classifies rank-2 pencils of such
quadrics, computes the base locus of the whole web, extracts the two base
lines attached to a smooth quadric surface of rank-2 points, evaluates the
reality predicates for those lines, and describes the strata of
pairs-of-planes inside the space of quadrics through the base locus.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from . import linalg
from .errors import PreconditionError
from .gaussian import ONE, ZERO, GaussianRational
from .ideals import GREVLEX, buchberger
from .pencil import ComponentClaim, SymmetricPencil, gram_at, rank_at
from .poly import MultiPoly, divide_exact
from .singular import projective_dimension, sample_points, singular_along
from .solve import (
    projective_length,
    solve_zero_dim,
    squarefree_degree,
    udivmod,
    ugcd,
    uderiv,
    univariate_roots,
)

Y = ("y0", "y1", "y2", "y3")
Vector = tuple[GaussianRational, ...]


def _vec(v) -> Vector:
    return tuple(GaussianRational.coerce(c) for c in v)


def linear_form(v, names: Sequence[str] = Y) -> MultiPoly:
    out = MultiPoly.zero(names)
    for c, name in zip(v, names):
        if c:
            out = out + MultiPoly.var(name).scale(c)
    return out


def quadratic_form(G, names: Sequence[str] = Y) -> MultiPoly:
    """y^T G y as a polynomial."""
    out = MultiPoly.zero(names)
    n = len(G)
    for i in range(n):
        for j in range(i, n):
            c = G[i][j] if i == j else G[i][j] * 2
            if c:
                out = out + (MultiPoly.var(names[i]) * MultiPoly.var(names[j])).scale(c)
    return out


def sym_product(a, b) -> list[list[GaussianRational]]:
    """Gram matrix of the product of linear forms (a.y)(b.y)."""
    half = GaussianRational(1, 0) / 2
    return [[(a[i] * b[j] + a[j] * b[i]) * half for j in range(4)] for i in range(4)]


# -- projective linear subspaces -------------------------------------------


@dataclass(frozen=True)
class ProjSubspace:
    """Projectivised span of vectors, stored as its reduced row echelon basis."""

    basis: tuple[Vector, ...]

    def __post_init__(self):
        rows = linalg.row_space([_vec(v) for v in self.basis])
        if not rows:
            raise ValueError("the empty subspace has no projectivisation")
        object.__setattr__(self, "basis", tuple(tuple(r) for r in rows))

    @classmethod
    def from_equations(cls, forms, ambient: int = 4) -> "ProjSubspace":
        """Common zeros of linear forms, given as coefficient vectors."""
        rows = [list(_vec(f)) for f in forms]
        return cls(tuple(tuple(v) for v in linalg.nullspace(rows, ambient)))

    @property
    def ambient(self) -> int:
        return len(self.basis[0])

    @property
    def dimension(self) -> int:
        return len(self.basis) - 1

    def equations(self) -> list[Vector]:
        """Coefficient vectors of independent linear forms cutting it out."""
        return [tuple(v) for v in linalg.nullspace([list(b) for b in self.basis], self.ambient)]

    def contains(self, point) -> bool:
        p = _vec(point)
        return all(not linalg.dot(e, p) for e in self.equations())

    def contains_subspace(self, other: "ProjSubspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def conj(self) -> "ProjSubspace":
        return ProjSubspace(tuple(tuple(c.conj() for c in v) for v in self.basis))

    def is_real(self) -> bool:
        return self == self.conj()

    def meet(self, other: "ProjSubspace") -> "ProjSubspace | None":
        eqs = self.equations() + other.equations()
        vs = linalg.nullspace([list(e) for e in eqs], self.ambient) if eqs else [
            list(v) for v in linalg.identity(self.ambient)
        ]
        return ProjSubspace(tuple(tuple(v) for v in vs)) if vs else None

    def join(self, other: "ProjSubspace") -> "ProjSubspace":
        return ProjSubspace(self.basis + other.basis)

    def __str__(self):
        from .singular import fmt_point

        return "span(" + ", ".join("[" + ":".join(fmt_point(v)) + "]" for v in self.basis) + ")"


class ProjLine(ProjSubspace):
    """A line of P^3; equality of lines is equality of canonical bases."""

    def __post_init__(self):
        super().__post_init__()
        if len(self.basis) != 2:
            raise ValueError(f"span has rank {len(self.basis)}, a line needs rank 2")

    @classmethod
    def through(cls, p, q) -> "ProjLine":
        return cls((_vec(p), _vec(q)))

    @classmethod
    def from_equations(cls, forms, ambient: int = 4) -> "ProjLine":
        rows = [list(_vec(f)) for f in forms]
        return cls(tuple(tuple(v) for v in linalg.nullspace(rows, ambient)))

    def conj(self) -> "ProjLine":
        return ProjLine(tuple(tuple(c.conj() for c in v) for v in self.basis))


def lines_meet(L: ProjSubspace, M: ProjSubspace) -> bool:
    """Two lines of P^3 meet iff the 4x4 matrix of their stacked spans is singular."""
    return not linalg.det([list(v) for v in L.basis + M.basis])


# -- single quadrics ---------------------------------------------------------


@dataclass(frozen=True)
class QuadricForm:
    """A quadric surface of P^3 by its symmetric Gram matrix."""

    gram: tuple

    def __post_init__(self):
        G = tuple(tuple(GaussianRational.coerce(v) for v in row) for row in self.gram)
        if not linalg.is_symmetric(G):
            raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", G)

    @classmethod
    def from_poly(cls, q: MultiPoly, names: Sequence[str] = Y) -> "QuadricForm":
        names = tuple(names)
        n = len(names)
        G = [[ZERO] * n for _ in range(n)]
        half = GaussianRational(1, 0) / 2
        q = q.extend(names)
        idx = [q.variables.index(v) for v in names]
        for exp, c in q.terms.items():
            degs = [exp[k] for k in idx]
            if sum(degs) != 2 or sum(exp) != 2:
                raise ValueError("not a quadratic form in the given variables")
            pos = [k for k, d in enumerate(degs) for _ in range(d)]
            i, j = pos
            if i == j:
                G[i][i] = G[i][i] + c
            else:
                G[i][j] = G[i][j] + c * half
                G[j][i] = G[j][i] + c * half
        return cls(tuple(tuple(r) for r in G))

    @cached_property
    def rank(self) -> int:
        return linalg.rank([list(r) for r in self.gram])

    def polynomial(self, names: Sequence[str] = Y) -> MultiPoly:
        return quadratic_form(self.gram, names)

    def value(self, point) -> GaussianRational:
        p = _vec(point)
        return linalg.bilinear(self.gram, p, p)

    def polar(self, u, v) -> GaussianRational:
        return linalg.bilinear(self.gram, _vec(u), _vec(v))

    def contains_fat_point(self, point, direction) -> bool:
        """Does the quadric contain the length-2 scheme at ``point`` along ``direction``?"""
        return not self.value(point) and not self.polar(point, direction)

    def vanishes_on(self, S: ProjSubspace) -> bool:
        return all(not self.polar(u, v) for u in S.basis for v in S.basis)


def quadric_at(P: SymmetricPencil, x) -> QuadricForm:
    return QuadricForm(tuple(tuple(r) for r in gram_at(P, x)))


def quadric_singular_locus(Q: QuadricForm) -> ProjSubspace | None:
    """Projectivised kernel of the Gram matrix (None for a smooth quadric)."""
    ker = linalg.nullspace([list(r) for r in Q.gram])
    return ProjSubspace(tuple(tuple(v) for v in ker)) if ker else None


# -- pencils of rank-2 quadrics ---------------------------------------------


@dataclass
class Rank2PencilCase:
    """Base-locus shape of a pencil whose general member has rank 2.

    case 1: base locus is a plane H and a line L not in H;
    case 2: one rank-1 member; the plane H contains a doubled line L;
    case 3: two rank-1 members; the base locus is a doubled line L.
    """

    case: int
    rank1_members: int
    L: ProjLine
    H: ProjSubspace | None = None

    @property
    def L_in_H(self) -> bool | None:
        return None if self.H is None else self.H.contains_subspace(self.L)


def _pencil_minors(G1, G2, k: int):
    s, t = MultiPoly.var("s"), MultiPoly.var("t")
    M = [[s.scale(G1[i][j]) + t.scale(G2[i][j]) for j in range(4)] for i in range(4)]
    return [m for _, m in linalg.minors(M, k) if m]


def _binary_to_univariate(m: MultiPoly) -> list[GaussianRational]:
    """Coefficients in u of m(1, u) for a binary form m(s, t)."""
    m = m.extend(("s", "t"))
    it = m.variables.index("t")
    cs = [ZERO] * (m.degree() + 1)
    for exp, c in m.terms.items():
        cs[exp[it]] = cs[exp[it]] + c
    return cs


def _kernel(G) -> list[list[GaussianRational]]:
    return linalg.nullspace([list(r) for r in G])


def classify_rank2_pencil(Q1: QuadricForm, Q2: QuadricForm) -> Rank2PencilCase:
    """Classify the pencil spanned by two quadrics whose general member has rank 2."""
    G1, G2 = Q1.gram, Q2.gram
    if linalg.rank([[v for r in G1 for v in r], [v for r in G2 for v in r]]) < 2:
        raise PreconditionError("the two quadrics do not span a pencil")
    if _pencil_minors(G1, G2, 3):
        raise PreconditionError("general member of the pencil has rank > 2")
    minors2 = _pencil_minors(G1, G2, 2)
    if not minors2:
        raise PreconditionError("every member of the pencil has rank <= 1")

    # rank-1 members: common roots of the 2x2 minors, seen as binary forms in (s, t)
    g = None
    for m in minors2:
        u = _binary_to_univariate(m)
        g = ugcd(u, []) if g is None else ugcd(g, u)
    finite = squarefree_degree(g) if len(g) > 1 else 0
    at_infinity = Q2.rank == 1
    count = finite + int(at_infinity)
    if count > 2:
        raise PreconditionError("a pencil of rank-2 quadrics has at most two rank-1 members")

    if count == 0:
        K = [tuple(v) for v in _kernel(G1) + _kernel(G2)]
        H = ProjSubspace(tuple(K))
        if H.dimension != 2:
            raise PreconditionError("kernels of the members do not span a plane")
        h = linear_form(H.equations()[0])
        a = divide_exact(Q1.polynomial(), h)
        b = divide_exact(Q2.polynomial(), h)
        L = ProjLine.from_equations([_coeffs(a), _coeffs(b)])
        return Rank2PencilCase(1, 0, L, H)

    if count == 1:
        if at_infinity:
            R, other = G2, Q1
        else:
            sq = udivmod(g, ugcd(g, uderiv(g)))[0]
            u = -sq[0] / sq[1]
            R = [[G1[i][j] + u * G2[i][j] for j in range(4)] for i in range(4)]
            other = Q1 if u else Q2
        hv = next(row for row in R if any(row))
        h = linear_form(hv)
        a = divide_exact(other.polynomial(), h)
        L = ProjLine.from_equations([hv, _coeffs(a)])
        H = ProjSubspace.from_equations([hv])
        return Rank2PencilCase(2, 1, L, H)

    K1 = ProjSubspace(tuple(tuple(v) for v in _kernel(G1)))
    K2 = ProjSubspace(tuple(tuple(v) for v in _kernel(G2)))
    meet = K1.meet(K2)
    if meet is None or meet.dimension != 1:
        raise PreconditionError("kernels of the rank-1 members do not meet in a line")
    return Rank2PencilCase(3, 2, ProjLine(meet.basis))


def _coeffs(lin: MultiPoly) -> Vector:
    lin = lin.extend(Y)
    if not lin.is_homogeneous() or lin.degree() != 1:
        raise ValueError(f"{lin} is not a linear form")
    return tuple(lin.coefficient({v: 1}) for v in Y)


# -- base locus of the web ---------------------------------------------------


def web_generators(P: SymmetricPencil) -> list[MultiPoly]:
    """The quadrics y^T A_i y, one per nonzero matrix of the pencil."""
    return [quadratic_form(M) for M in P.matrices if any(v for row in M for v in row)]


@dataclass
class BaseLocus:
    points: list[Vector]
    multiplicities: list[int]
    tangents: list[ProjLine | None]
    residual: bool
    total_length: int

    def fat_points(self) -> list[tuple[Vector, Vector]]:
        """(support, tangent direction) of every length-2 point."""
        out = []
        for p, m, T in zip(self.points, self.multiplicities, self.tangents):
            if m == 2 and T is not None:
                d = next(v for v in T.basis if linalg.rank([list(p), list(v)]) == 2)
                out.append((p, d))
        return out


def _tangent_line(P: SymmetricPencil, p: Vector) -> ProjLine | None:
    """Common tangent line at p of all web quadrics, if their differentials span only 2 conditions."""
    rows = [linalg.matvec(M, p) for M in P.matrices]
    ker = linalg.nullspace(rows, 4)
    return ProjLine(tuple(tuple(v) for v in ker)) if len(ker) == 2 else None


def web_base_locus(P: SymmetricPencil) -> BaseLocus:
    """Base locus of the web: Q(i)-points, local lengths and tangent lines.

    Raises :class:`PositiveDimensionalError` when the base locus contains a curve.
    """
    gens = web_generators(P)
    sols = solve_zero_dim(gens, Y, projective=True, multiplicities=True)
    tangents = [_tangent_line(P, p) if m == 2 else None for p, m in zip(sols.points, sols.multiplicities)]
    total = sum(sols.multiplicities)
    if sols.residual:
        total = projective_length(gens, Y)
    return BaseLocus(list(sols.points), list(sols.multiplicities), tangents, sols.residual, total)


# -- the two base lines of a smooth quadric surface of rank-2 points ---------


@dataclass
class SurfaceLines:
    L1: ProjLine
    L2: ProjLine
    cases: tuple[Rank2PencilCase, Rank2PencilCase]
    point: tuple
    rulings: tuple[tuple, tuple]


def _smooth_quadric_chart(C: ComponentClaim, names: Sequence[str]):
    """Basis of the 3-space spanned by the surface and the restricted quadric."""
    B = buchberger(C.generators, GREVLEX, names)
    linear = [g for g in B.generators if g.degree() == 1]
    other = [g for g in B.generators if g.degree() != 1]
    if len(other) != 1 or other[0].degree() != 2:
        raise PreconditionError(f"{C.label} is not a quadric surface in a 3-space")
    rows = [[g.coefficient({v: 1}) for v in names] for g in linear]
    span = linalg.nullspace(rows, len(names)) if rows else [list(r) for r in linalg.identity(len(names))]
    if len(span) != 4:
        raise PreconditionError(f"{C.label} does not span a 3-space")
    s = tuple(f"s{k}" for k in range(4))
    sub = {
        v: linear_form([span[k][i] for k in range(4)], s) for i, v in enumerate(names)
    }
    restricted = QuadricForm.from_poly(other[0].substitute(sub), s)
    if restricted.rank != 4:
        raise PreconditionError(f"{C.label} is not a smooth quadric surface")
    return span, restricted


def _independent_completion(start: list, candidates: list) -> list:
    out = list(start)
    for v in candidates:
        if linalg.rank(out + [v]) > len(out):
            out.append(v)
    return out


def rank2_surface_lines(P: SymmetricPencil, C: ComponentClaim, seed: int = 0) -> SurfaceLines:
    """The base lines L1, L2 attached to the two rulings of a smooth quadric surface.

    Each ruling of the surface is a pencil of rank-2 quadrics; its base locus
    contains a line, which is the same for every line of the ruling.
    """
    claim = ComponentClaim(C.generators, 2, C.label)
    check = singular_along(P, claim, seed)
    if not check.passed:
        raise PreconditionError(f"{C.label} is not a component of rank-2 singular points")
    names = P.names
    span, Gs = _smooth_quadric_chart(C, names)
    cols = linalg.transpose(span)
    rng = random.Random(seed)
    points = sample_points(C.generators, names, rng, want=4, dimension=2)
    points = [p for p in points if rank_at(P, p) == 2]
    if not points:
        raise PreconditionError(f"no Q(i)-point of rank 2 found on {C.label}")
    best = None
    for p in points:
        sp = linalg.solve(cols, list(p))
        T = linalg.nullspace([linalg.matvec(Gs.gram, sp)], 4)
        basis = _independent_completion([sp], T)
        a, b = basis[1], basis[2]
        roots, residual = univariate_roots([Gs.value(a), Gs.polar(a, b) * 2, Gs.value(b)])
        if residual:
            raise PreconditionError("the rulings are not defined over Q(i) (residual factor)")
        dirs = [[ai + u * bi for ai, bi in zip(a, b)] for u, _ in roots]
        if not Gs.value(b):
            dirs.append(b)
        if len(dirs) != 2:
            raise PreconditionError(f"{C.label} is not smooth at a sampled point")
        rulings = []
        cases = []
        for w in dirs:
            xw = linalg.matvec(cols, w)
            rulings.append((tuple(p), tuple(xw)))
            cases.append(classify_rank2_pencil(quadric_at(P, p), quadric_at(P, xw)))
        found = SurfaceLines(cases[0].L, cases[1].L, tuple(cases), tuple(p), tuple(rulings))
        if all(c.case == 1 for c in cases):
            return found
        best = best or found
    return best


# -- reality ----------------------------------------------------------------


def reality_predicates(L1: ProjLine, L2: ProjLine) -> dict[str, bool]:
    return {
        "L1_meets_conjL1": lines_meet(L1, L1.conj()),
        "L2_meets_conjL2": lines_meet(L2, L2.conj()),
        "L1_meets_conjL2": lines_meet(L1, L2.conj()),
    }


def no_real_points_criterion(flags: dict[str, bool]) -> bool:
    """The incidence pattern of the two base lines forcing a surface without real points."""
    return not flags["L1_meets_conjL2"] and (
        not flags["L1_meets_conjL1"] or not flags["L2_meets_conjL2"]
    )


CONSISTENT = "CONSISTENT_WITH_PAPER"
INCONSISTENT = "INCONSISTENT"
NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass
class CyclideVerdict:
    criterion: bool
    verdict: str
    flags: dict[str, bool]
    lines: SurfaceLines
    lines_real_or_conjugate: bool


def cyclide_check(P: SymmetricPencil, C: ComponentClaim, seed: int = 0) -> CyclideVerdict:
    """Evaluate the no-real-points criterion for the surface ``C``.

    For a real pencil and a real surface the two base lines are either both
    real or complex conjugate, so the criterion has to fail; the verdict
    records whether it did.
    """
    lines = rank2_surface_lines(P, C, seed)
    flags = reality_predicates(lines.L1, lines.L2)
    crit = no_real_points_criterion(flags)
    L1, L2 = lines.L1, lines.L2
    pairing = (L1.is_real() and L2.is_real()) or L1 == L2.conj()
    real_surface = P.real_flag and all(g.is_real() for g in C.ideal.generators)
    if not real_surface:
        verdict = NOT_APPLICABLE
    else:
        verdict = CONSISTENT if (not crit and pairing) else INCONSISTENT
    return CyclideVerdict(crit, verdict, flags, lines, pairing)


# -- strata of pairs of planes inside the quadrics through the base locus ----

_PAIRS = [(i, j) for i in range(4) for j in range(i, 4)]


def _sym_coords(S) -> list[GaussianRational]:
    return [S[i][j] for i, j in _PAIRS]


def _sym_matrix(z) -> list[list[GaussianRational]]:
    M = [[ZERO] * 4 for _ in range(4)]
    for (i, j), c in zip(_PAIRS, z):
        M[i][j] = M[j][i] = c
    return M


def _polar_row(p, v) -> list[GaussianRational]:
    """Coefficients of S -> p^T S v in the upper-triangle coordinates."""
    return [p[i] * v[j] + (p[j] * v[i] if i != j else ZERO) for i, j in _PAIRS]


@dataclass
class Stratum:
    label: str
    kind: str
    span: list[list[GaussianRational]]  # Gram matrices in upper-triangle coordinates
    ideal: list[MultiPoly] = field(default_factory=list)
    factors: tuple = ()  # ((a0, a1), (b0, b1)) for surfaces, (pi, forms) for linear strata

    def member(self, params) -> list[list[GaussianRational]]:
        """Gram matrix of the member with the given parameters."""
        if self.kind == "quadric surface":
            (a0, a1), (b0, b1) = self.factors
            s0, s1, t0, t1 = (GaussianRational.coerce(c) for c in params)
            a = [s0 * u + s1 * v for u, v in zip(a0, a1)]
            b = [t0 * u + t1 * v for u, v in zip(b0, b1)]
            return sym_product(a, b)
        pi, forms = self.factors
        h = [sum((GaussianRational.coerce(c) * f[k] for c, f in zip(params, forms)), ZERO) for k in range(4)]
        return sym_product(pi, h)

    @property
    def parameter_count(self) -> int:
        return 4 if self.kind == "quadric surface" else len(self.factors[1])


@dataclass
class Section:
    """Intersection of a surface stratum with a linear stratum."""

    dimension: int  # projective dimension of the common linear span
    form_rank: int  # rank of the surface's quadric restricted there (0: contained)

    @property
    def is_line(self) -> bool:
        return (self.dimension == 1 and self.form_rank == 0) or (self.dimension == 2 and self.form_rank == 1)


@dataclass
class Strata:
    configuration: str  # "general", "coplanar" or "fat"
    basis: list[list[list[GaussianRational]]]
    surfaces: list[Stratum]
    linear: list[Stratum]
    sections: dict[tuple[str, str], Section] = field(default_factory=dict)
    degenerate: list[Stratum] = field(default_factory=list)
    outside_singular: list[str] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis) - 1

    def z_coordinates(self, S) -> list[GaussianRational] | None:
        cols = linalg.transpose([_sym_coords(B) for B in self.basis])
        return linalg.solve(cols, _sym_coords(S))


def _annihilators(points) -> list[list[GaussianRational]]:
    return linalg.nullspace([list(p) for p in points], 4)


def _zvars(n: int) -> tuple[str, ...]:
    return tuple(f"z{k}" for k in range(n))


def _span_ideal(span_z, nz: int):
    """Linear forms in z vanishing on the span, and coordinate functionals on it."""
    ann = linalg.nullspace([list(v) for v in span_z], nz)
    zs = _zvars(nz)
    linear = [linear_form(a, zs) for a in ann]
    Wt = [list(v) for v in span_z]  # rows = spanning vectors
    _, piv = linalg.rref(Wt)
    sub = [[Wt[r][c] for c in piv] for r in range(len(Wt))]  # square, invertible
    coords = []
    for r in range(len(Wt)):
        e = [ONE if k == r else ZERO for k in range(len(Wt))]
        row = linalg.solve(sub, e)
        # functional l with l(w_k) = delta_{rk}: l = sum_c row[c] z_{piv[c]}
        coords.append(linear_form([row[piv.index(k)] if k in piv else ZERO for k in range(nz)], zs))
    return linear, coords


def _surface(label, alphas, betas, to_z, nz) -> Stratum:
    span = [to_z(sym_product(a, b)) for a in alphas for b in betas]
    linear, c = _span_ideal(span, nz)
    quad = c[0] * c[3] - c[1] * c[2]
    return Stratum(label, "quadric surface", span, linear + [quad], (tuple(alphas), tuple(betas)))


def _linear_stratum(label, pi, forms, to_z, nz) -> Stratum:
    span = [to_z(sym_product(pi, h)) for h in forms]
    linear, _ = _span_ideal(span, nz)
    kind = {3: "plane", 4: "3-space"}.get(len(linalg.row_space(span)), "linear")
    return Stratum(label, kind, span, linear, (tuple(pi), tuple(tuple(h) for h in forms)))


def _section(surface: Stratum, lin: Stratum, nz: int) -> Section:
    eqs = [list(_linear_coeffs(g, nz)) for g in surface.ideal[:-1] + lin.ideal]
    U = linalg.nullspace(eqs, nz)
    if not U:
        return Section(-1, 0)
    us = tuple(f"u{k}" for k in range(len(U)))
    zs = _zvars(nz)
    sub = {z: linear_form([U[k][i] for k in range(len(U))], us) for i, z in enumerate(zs)}
    restricted = surface.ideal[-1].substitute(sub)
    r = QuadricForm.from_poly(restricted, us).rank if restricted else 0
    return Section(len(U) - 1, r)


def _linear_coeffs(g: MultiPoly, nz: int):
    g = g.extend(_zvars(nz))
    return [g.coefficient({z: 1}) for z in _zvars(nz)]


def strata_intersections(points: Sequence, tangents: Sequence | None = None) -> Strata:
    """Pairs-of-planes strata inside X_Bl, the quadrics through the base locus.

    ``points`` are four simple base points, or two supports together with
    ``tangents`` (one direction per support) for two length-2 schemes.
    """
    pts = [list(_vec(p)) for p in points]
    if tangents is None and len(pts) == 4:
        conditions = [_polar_row(p, p) for p in pts]
    elif tangents is not None and len(pts) == 2 and len(tangents) == 2:
        dirs = [list(_vec(v)) for v in tangents]
        conditions = [_polar_row(p, p) for p in pts] + [_polar_row(p, v) for p, v in zip(pts, dirs)]
    else:
        raise PreconditionError("base locus must be four simple points or two length-2 schemes")
    basis_z = linalg.nullspace(conditions, 10)
    basis = [_sym_matrix(z) for z in basis_z]
    nz = len(basis)
    cols = linalg.transpose(basis_z)

    def to_z(S):
        z = linalg.solve(cols, _sym_coords(S))
        if z is None:
            raise AssertionError("quadric does not contain the base locus")
        return z

    if tangents is None:
        coplanar = linalg.rank(pts) < 4
        surfaces = []
        for j in (1, 2, 3):
            k, l = [m for m in (1, 2, 3) if m != j]
            surfaces.append(
                _surface(f"X_0{j}", _annihilators([pts[0], pts[j]]), _annihilators([pts[k], pts[l]]), to_z, nz)
            )
        linear = []
        if coplanar:
            pi = _annihilators(pts)[0]
            linear.append(_linear_stratum("X", pi, [list(r) for r in linalg.identity(4)], to_z, nz))
        else:
            for i in range(4):
                others = [pts[m] for m in range(4) if m != i]
                pi = _annihilators(others)[0]
                linear.append(_linear_stratum(f"X_{i}", pi, _annihilators([pts[i]]), to_z, nz))
        st = Strata("coplanar" if coplanar else "general", basis, surfaces, linear)
        if not coplanar:
            for S in surfaces:
                for Lst in linear:
                    st.sections[(S.label, Lst.label)] = _section(S, Lst, nz)
        return st

    # two length-2 schemes
    lines = [_annihilators([p, v]) for p, v in zip(pts, dirs)]
    S = _surface("X_fat", lines[0], lines[1], to_z, nz)
    chord = _annihilators(pts)
    D = Stratum(
        "X_chord",
        "plane",
        linalg.row_space([to_z(sym_product(a, b)) for a in chord for b in chord]),
    )
    st = Strata("fat", basis, [S], [], degenerate=[D])
    for cand in (S, D):
        members = [_sym_matrix(_from_z(basis_z, z)) for z in cand.span]
        # a linear span lies in {S : S p = 0} iff each spanning member does
        inside = [all(not any(linalg.matvec(M, p)) for M in members) for p in pts]
        if not any(inside):
            st.outside_singular.append(cand.label)
    return st


def _from_z(basis_z, z):
    return [sum((c * b[k] for c, b in zip(z, basis_z)), ZERO) for k in range(10)]


def strata_in_pencil(P: SymmetricPencil, st: Strata) -> list[tuple[str, list[MultiPoly], int]]:
    """Pull every stratum back to the pencil's parameter space.

    Requires the pencil's span to lie in X_Bl.  Returns ``(label, reduced
    Groebner basis, projective dimension)`` per stratum; these are loci of
    points x whose quadric is a pair of planes of the stratum's type.
    """
    zs = [st.z_coordinates(A) for A in P.matrices]
    if any(z is None for z in zs):
        raise PreconditionError("the pencil is not contained in the quadrics through the base locus")
    sub = {
        z: linear_form([zs[i][k] for i in range(len(zs))], P.names)
        for k, z in enumerate(_zvars(len(st.basis)))
    }
    out = []
    for s in st.surfaces + st.linear + st.degenerate:
        if not s.ideal:
            continue
        gens = [g for g in (g.substitute(sub) for g in s.ideal) if g]
        if not gens:
            out.append((s.label, [], P.n))
            continue
        B = buchberger(gens, GREVLEX, P.names)
        out.append((s.label, list(B.generators), projective_dimension(gens, P.names)))
    return out
