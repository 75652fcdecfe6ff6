"""Exact semidefiniteness for real pencils.

Definiteness is decided from the signs of the characteristic polynomial:
a real symmetric matrix has only real eigenvalues, so Descartes' rule of
signs counts them exactly.  Feasibility (a positive definite member) is
found by search; infeasibility is only ever claimed with a dual
certificate B != 0, B >= 0, trace(A_i B) = 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Sequence

from . import linalg
from .errors import PreconditionError
from .gaussian import ZERO, GaussianRational
from .ideals import GREVLEX, buchberger
from .pencil import ComponentClaim, SymmetricPencil, gram_at, require_real
from .singular import fmt_point

POSITIVE_DEFINITE = "positive_definite"
NEGATIVE_DEFINITE = "negative_definite"
INDEFINITE = "indefinite"
ZERO_MATRIX = "zero"

INTERIOR = "interior"
BOUNDARY = "boundary"
OUTSIDE = "outside_spectrahedron"


def _real_matrix(M) -> list[list[Fraction]]:
    out = []
    for row in M:
        r = []
        for v in row:
            z = GaussianRational.coerce(v)
            if not z.is_real():
                raise PreconditionError("matrix has non-real entries")
            r.append(z.re)
        out.append(r)
    return out


def _sign_changes(seq) -> int:
    signs = [1 if c > 0 else -1 for c in seq if c]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia(M) -> tuple[int, int, int]:
    """(#positive, #negative, #zero) eigenvalues of a real symmetric matrix."""
    A = _real_matrix(M)
    if not linalg.is_symmetric(A):
        raise ValueError("matrix is not symmetric")
    c = [z.re for z in linalg.charpoly(linalg.to_matrix(A))]  # det(tI - A), low degree first
    zeros = next(k for k, v in enumerate(c) if v)
    pos = _sign_changes(c)
    neg = _sign_changes([v if k % 2 == 0 else -v for k, v in enumerate(c)])
    return pos, neg, zeros


def definiteness(M) -> str:
    """One of positive_definite, positive_semidefinite_rank_r, indefinite,
    negative_definite, negative_semidefinite_rank_r, zero."""
    pos, neg, zero = inertia(M)
    n = pos + neg + zero
    if pos and neg:
        return INDEFINITE
    if not pos and not neg:
        return ZERO_MATRIX
    if pos:
        return POSITIVE_DEFINITE if pos == n else f"positive_semidefinite_rank_{pos}"
    return NEGATIVE_DEFINITE if neg == n else f"negative_semidefinite_rank_{neg}"


def is_positive_definite(M) -> bool:
    """Exact test by symmetric elimination: every pivot must be positive.

    Stops at the first non-positive pivot, so it is much cheaper than the
    full inertia for the typical indefinite candidate.
    """
    A = _real_matrix(M)
    n = len(A)
    for k in range(n):
        p = A[k][k]
        if p <= 0:
            return False
        for i in range(k + 1, n):
            f = A[i][k] / p
            if f:
                for j in range(k + 1, n):
                    A[i][j] -= f * A[k][j]
    return True


def is_psd(M) -> bool:
    v = definiteness(M)
    return v == POSITIVE_DEFINITE or v.startswith("positive_semidefinite") or v == ZERO_MATRIX


def sylvester_positive_definite(M) -> bool:
    """Sylvester's criterion: all leading principal minors are positive."""
    A = linalg.to_matrix(_real_matrix(M))
    return all(linalg.det([row[:k] for row in A[:k]]).re > 0 for k in range(1, len(A) + 1))


# -- feasibility ---------------------------------------------------------------


@dataclass
class PDSearchResult:
    point: tuple | None
    tries: int

    @property
    def found(self) -> bool:
        return self.point is not None

    @property
    def status(self) -> str:
        return "found" if self.found else "unknown"


def _candidates(n: int):
    for i in range(n):
        for s in (1, -1):
            yield tuple(s if k == i else 0 for k in range(n))
    yield tuple(1 for _ in range(n))


def pd_search(P: SymmetricPencil, budget: int = 500, seed: int = 0) -> PDSearchResult:
    """Look for a real point with A(x) positive definite.

    Deterministic given the seed.  Failure only means "unknown".
    """
    require_real(P)
    rng = random.Random(seed)
    n = P.n + 1
    tries = 0
    for x in _candidates(n):
        tries += 1
        if is_positive_definite(gram_at(P, x)):
            return PDSearchResult(tuple(GaussianRational.coerce(c) for c in x), tries)
    while tries < budget:
        tries += 1
        x = tuple(Fraction(rng.randint(-8, 8), rng.randint(1, 8)) for _ in range(n))
        if not any(x):
            continue
        if is_positive_definite(gram_at(P, x)):
            return PDSearchResult(tuple(GaussianRational.coerce(c) for c in x), tries)
    return PDSearchResult(None, tries)


_UPPER = [(i, j) for i in range(4) for j in range(i, 4)]


def _trace_row(A) -> list[GaussianRational]:
    """Coefficients of B -> trace(A B) on the upper triangle of a symmetric B."""
    return [A[i][j] if i == j else A[i][j] * 2 for i, j in _UPPER]


def _as_sym(v) -> list[list[GaussianRational]]:
    B = [[ZERO] * 4 for _ in range(4)]
    for (i, j), c in zip(_UPPER, v):
        B[i][j] = B[j][i] = c
    return B


def verify_infeasibility_certificate(P: SymmetricPencil, B) -> bool:
    """True iff B is nonzero, PSD and orthogonal to every A_i.

    Then trace(X B) = 0 for every X in the span, while trace(X B) > 0 for
    any positive definite X, so the span has no positive definite member.
    """
    require_real(P)
    Bm = linalg.to_matrix(B)
    if len(Bm) != 4 or not linalg.is_symmetric(Bm):
        return False
    try:
        if definiteness(Bm) == ZERO_MATRIX or not is_psd(Bm):
            return False
    except PreconditionError:
        return False
    return all(not linalg.trace(linalg.matmul(A, Bm)) for A in P.matrices)


def find_infeasibility_certificate(P: SymmetricPencil):
    """Search the solution space of trace(A_i B) = 0 for a PSD B != 0.

    Tries every basis vector, its negative, and pairwise sums and
    differences.  Returns the matrix or None ("no certificate found").
    """
    require_real(P)
    basis = linalg.nullspace([_trace_row(A) for A in P.matrices], 10)
    cands = []
    for v in basis:
        cands += [v, [-c for c in v]]
    for u, v in combinations(basis, 2):
        for s, t in product((1, -1), repeat=2):
            cands.append([a * s + b * t for a, b in zip(u, v)])
    for v in cands:
        B = _as_sym(v)
        if verify_infeasibility_certificate(P, B):
            return B
    return None


# -- spectrahedron membership ----------------------------------------------------


def boundary_membership(P: SymmetricPencil, x, reference=None) -> str:
    """interior / boundary / outside_spectrahedron for a real projective point.

    ``reference`` is a point where A is positive definite; it establishes
    that the spectrahedron is nonempty.  A projective point x equals -x, so
    x is in the spectrahedron when A(x) is semidefinite of either sign.
    """
    require_real(P)
    if reference is None or definiteness(gram_at(P, reference)) != POSITIVE_DEFINITE:
        raise PreconditionError("spectrahedron not established: no positive definite reference point")
    v = definiteness(gram_at(P, x))
    if v in (POSITIVE_DEFINITE, NEGATIVE_DEFINITE):
        return INTERIOR
    if v == INDEFINITE:
        return OUTSIDE
    return BOUNDARY


# -- real rational points on conics and quadric surfaces ------------------------


@dataclass
class RealPointSearch:
    points: list[tuple]
    height: int
    no_real_points: bool = False  # certified: the restricted quadric is definite
    warnings: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return bool(self.points)

    @property
    def has_real_points(self) -> bool:
        """Exact: a real quadratic form has a nonzero real zero iff it is not definite.

        This can hold while ``found`` is false, e.g. for 3*a^2 = 2*(b^2 + c^2),
        which has real points but no rational ones.
        """
        return not self.no_real_points


def _linear_chart(C: ComponentClaim, names):
    """Rational basis of the linear span and the one quadric cutting the component."""
    B = buchberger(C.generators, GREVLEX, names)
    if not all(g.is_real() for g in B.generators):
        raise PreconditionError(f"{C.label} is not defined over the reals")
    linear = [g for g in B.generators if g.degree() == 1]
    other = [g for g in B.generators if g.degree() != 1]
    if len(other) != 1 or other[0].degree() != 2:
        raise PreconditionError(f"{C.label} is not a quadric inside a linear space")
    rows = [[g.coefficient({v: 1}) for v in names] for g in linear]
    span = linalg.nullspace(rows, len(names)) if rows else [list(r) for r in linalg.identity(len(names))]
    # clear denominators so integer chart coordinates give integer points
    span = [_primitive(v) for v in span]
    m = len(span)
    cols = linalg.transpose(span)
    from .web import QuadricForm, linear_form

    s = tuple(f"s{k}" for k in range(m))
    sub = {v: linear_form([span[k][i] for k in range(m)], s) for i, v in enumerate(names)}
    G = QuadricForm.from_poly(other[0].substitute(sub), s).gram
    return cols, [[c.re for c in row] for row in G]


def _primitive(v):
    den = 1
    for c in v:
        den = den * c.re.denominator // gcd(den, c.re.denominator)
    ints = [int(c.re * den) for c in v]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    return [GaussianRational(a // g) for a in ints]


def _qf(G, s) -> Fraction:
    m = len(s)
    return sum(G[i][j] * s[i] * s[j] for i in range(m) for j in range(m) if G[i][j])


def _projective_integer_vectors(m: int, height: int):
    """Primitive integer vectors with first nonzero entry positive, by increasing height."""
    for h in range(1, height + 1):
        # the shell max|a| = h: entry i is the first one of size h
        shell = (
            v
            for i in range(m)
            for v in product(*([range(-h + 1, h)] * i + [(-h, h)] + [range(-h, h + 1)] * (m - i - 1)))
        )
        for v in shell:
            first = next(a for a in v if a)
            if first < 0:
                continue
            g = 0
            for a in v:
                g = gcd(g, abs(a))
            if g == 1:
                yield v


def real_points(
    C: ComponentClaim,
    names: Sequence[str],
    want: int = 5,
    height: int = 20,
    seed: int = 0,
) -> RealPointSearch:
    """Real rational points on a conic or quadric surface (a quadric in a linear span).

    Searches integer chart coordinates of height <= ``height`` for a first
    point, then produces further points by the rational parametrization of
    lines through it.  A definite restricted form certifies that there are
    no real points at all.
    """
    cols, G = _linear_chart(C, names)
    m = len(G)
    out = RealPointSearch([], height)
    try:
        verdict = definiteness(G)
    except PreconditionError:
        verdict = ""
    out.no_real_points = verdict in (POSITIVE_DEFINITE, NEGATIVE_DEFINITE)
    # integer Gram matrix with the same zeros, for a fast exhaustive scan
    den = 1
    for row in G:
        for c in row:
            den = den * c.denominator // gcd(den, c.denominator)
    IG = [[int(c * den) for c in row] for row in G]
    first = next((v for v in _projective_integer_vectors(m, height) if not _qf(IG, v)), None)
    if first is None:
        out.warnings.append(f"no rational point of height <= {height} on {C.label}")
        return out
    rng = random.Random(seed)
    pts = [list(first)]
    p = [Fraction(a) for a in first]
    seen = {_normalise(p)}
    for _ in range(50 * want):
        if len(pts) >= want:
            break
        d = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(m)]
        gd = _qf(G, d)
        if not gd:
            continue
        bpd = sum(G[i][j] * p[i] * d[j] for i in range(m) for j in range(m))
        q = [gd * a - 2 * bpd * b for a, b in zip(p, d)]
        if not any(q):
            continue
        key = _normalise(q)
        if key in seen:
            continue
        seen.add(key)
        pts.append(q)
    out.points = [
        tuple(GaussianRational.coerce(c) for c in linalg.matvec(cols, [GaussianRational.coerce(a) for a in s]))
        for s in pts
    ]
    if len(pts) < want:
        out.warnings.append(f"only {len(pts)} of {want} real points produced")
    return out


def _normalise(v):
    k = next(a for a in v if a)
    return tuple(a / k for a in v)


# -- configuration of the quadric and the two conics ---------------------------


@dataclass
class ConfigurationVerdict:
    case: int | None
    statuses: dict[str, str]
    samples: dict[str, list]
    reference: tuple
    warnings: list[str] = field(default_factory=list)
    evidence_grade: bool = True  # finitely many sampled points, not a proof


def component_status(P: SymmetricPencil, C: ComponentClaim, reference, samples: int = 5, seed: int = 0):
    """Classify a real component against the spectrahedron from sampled points."""
    search = real_points(C, P.names, want=samples, seed=seed)
    if search.no_real_points:
        return "no_real_points", [], search.warnings
    if not search.points:
        return "unknown", [], search.warnings
    labels = [boundary_membership(P, x, reference) for x in search.points]
    if all(v == BOUNDARY for v in labels):
        status = "boundary"
    elif all(v == OUTSIDE for v in labels):
        status = "disjoint"
    else:
        status = "mixed"
    return status, list(zip(search.points, labels)), search.warnings


def classify_configuration(
    P: SymmetricPencil,
    Q: ComponentClaim,
    conics: Sequence[ComponentClaim],
    seed: int = 0,
    samples: int = 5,
) -> ConfigurationVerdict:
    """Which of the two configurations of a quadric surface and two conics is realised.

    case 1: the quadric misses the spectrahedron and both conics lie on its boundary;
    case 2: the quadric and one conic lie on the boundary, the other conic misses it.
    """
    require_real(P)
    if len(conics) != 2:
        raise ValueError("exactly two conics are required")
    ref = pd_search(P, seed=seed)
    if not ref.found:
        raise PreconditionError("spectrahedron not established: no positive definite point found")
    statuses, samples_out, warnings = {}, {}, []
    for C in (Q, *conics):
        st, pts, w = component_status(P, C, ref.point, samples, seed)
        statuses[C.label] = st
        samples_out[C.label] = [(fmt_point(x), v) for x, v in pts]
        warnings += w
    q = statuses[Q.label]
    c = sorted(statuses[C.label] for C in conics)
    case = None
    if q == "disjoint" and c == ["boundary", "boundary"]:
        case = 1
    elif q == "boundary" and c == ["boundary", "disjoint"]:
        case = 2
    if "unknown" in statuses.values():
        warnings.append("some component had no sampled real point")
    return ConfigurationVerdict(case, statuses, samples_out, ref.point, warnings)
