"""Symmetric 4x4 linear matrix pencils A(x) = A_0 x_0 + ... + A_n x_n.

The determinant of A(x) is the quartic symmetroid.  This module holds the
pencil type, its text file format, and the pointwise/symbolic rank data.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from . import linalg
from .errors import DegeneratePencilError, ParseError, PreconditionError
from .gaussian import ZERO, GaussianRational, format_gaussian, parse_gaussian
from .ideals import GREVLEX, IdealBasis, buchberger
from .poly import MultiPoly, parse_poly

SIZE = 4


def _as_point(point, length: int) -> tuple[GaussianRational, ...]:
    pt = tuple(GaussianRational.coerce(c) for c in point)
    if len(pt) != length:
        raise ValueError(f"point has {len(pt)} coordinates, expected {length}")
    if not any(pt):
        raise ValueError("the zero vector is not a projective point")
    return pt


@dataclass(frozen=True, eq=False)
class SymmetricPencil:
    """Symmetric 4x4 matrices A_0..A_n with one variable name per matrix."""

    matrices: tuple
    names: tuple[str, ...] = ()
    allow_degenerate: bool = False

    def __post_init__(self):
        mats = tuple(
            tuple(tuple(GaussianRational.coerce(v) for v in row) for row in M) for M in self.matrices
        )
        object.__setattr__(self, "matrices", mats)
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(len(mats))))
        if len(self.names) != len(mats):
            raise ValueError("one variable name per matrix is required")
        for k, M in enumerate(mats):
            if len(M) != SIZE or any(len(r) != SIZE for r in M):
                raise ValueError(f"A{k} is not 4x4")
            if not linalg.is_symmetric(M):
                raise ValueError(f"A{k} is not symmetric")
        if not any(any(v for row in M for v in row) for M in mats):
            raise DegeneratePencilError("all matrices of the pencil are zero")
        if not self.allow_degenerate and self.is_degenerate:
            raise DegeneratePencilError("det A(x) vanishes identically")

    @classmethod
    def from_matrix(cls, rows, names: Sequence[str] | None = None, **kw) -> "SymmetricPencil":
        """Read the coefficient slices off a 4x4 matrix of linear forms."""
        entries = [[e if isinstance(e, MultiPoly) else parse_poly(str(e)) for e in row] for row in rows]
        if names is None:
            used = set()
            for row in entries:
                for e in row:
                    used.update(e.used_variables())
            names = tuple(MultiPoly.zero(used).variables)
        mats = []
        for v in names:
            M = []
            for row in entries:
                M.append([e.coefficient({v: 1}) for e in row])
            mats.append(M)
        for row in entries:
            for e in row:
                if any(sum(exp) != 1 for exp in e.terms):
                    raise ValueError(f"entry {e} is not a linear form")
        return cls(tuple(mats), tuple(names), **kw)

    # -- basic data ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.matrices) - 1

    @property
    def real_flag(self) -> bool:
        return all(v.is_real() for M in self.matrices for row in M for v in row)

    @cached_property
    def matrix(self) -> list[list[MultiPoly]]:
        """A(x) as a 4x4 matrix of linear forms."""
        out = []
        for i in range(SIZE):
            row = []
            for j in range(SIZE):
                terms = {}
                for k, M in enumerate(self.matrices):
                    if M[i][j]:
                        e = [0] * len(self.names)
                        e[k] = 1
                        terms[tuple(e)] = M[i][j]
                row.append(MultiPoly(self.names, terms))
            out.append(row)
        return out

    @cached_property
    def is_degenerate(self) -> bool:
        rng = random.Random(1234)
        for _ in range(8):
            pt = [rng.randint(-9, 9) for _ in self.names]
            if any(pt) and linalg.det(gram_at(self, pt)):
                return False
        return not linalg.det_symbolic(self.matrix)

    @cached_property
    def quartic(self) -> MultiPoly:
        return linalg.det_symbolic(self.matrix).extend(self.names)

    def variables(self) -> tuple[str, ...]:
        return self.names

    def __eq__(self, other):
        if not isinstance(other, SymmetricPencil):
            return NotImplemented
        return self.matrices == other.matrices and self.names == other.names

    def __hash__(self):
        return hash((self.matrices, self.names))

    def __repr__(self):
        return f"SymmetricPencil(n={self.n}, names={self.names})"


@dataclass
class ComponentClaim:
    """A claimed component of some locus of the symmetroid, by its ideal."""

    generators: tuple[MultiPoly, ...]
    expected_rank: int | None = None
    label: str = ""
    expected_multiplicity: int | None = None
    _groebner: IdealBasis | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.generators = tuple(
            g if isinstance(g, MultiPoly) else parse_poly(str(g)) for g in self.generators
        )
        if self.expected_rank is not None and not 1 <= self.expected_rank <= 3:
            raise ValueError("expected_rank must be in 1..3")
        if not all(g.is_homogeneous() for g in self.generators):
            raise ValueError(f"component ideal {self.label!r} is not homogeneous")
        if not self.label:
            self.label = "V(" + ", ".join(str(g) for g in self.generators) + ")"

    @property
    def ideal(self) -> IdealBasis:
        if self._groebner is None:
            self._groebner = buchberger(self.generators, GREVLEX)
        return self._groebner


# -- pointwise operations ----------------------------------------------------


def gram_at(P: SymmetricPencil, point) -> list[list[GaussianRational]]:
    """sum_i x_i A_i at a point given by its n+1 coordinates."""
    pt = _as_point(point, P.n + 1)
    out = [[ZERO] * SIZE for _ in range(SIZE)]
    for c, M in zip(pt, P.matrices):
        if not c:
            continue
        for i in range(SIZE):
            row = out[i]
            Mi = M[i]
            for j in range(SIZE):
                if Mi[j]:
                    row[j] = row[j] + c * Mi[j]
    return out


def rank_at(P: SymmetricPencil, point) -> int:
    return linalg.rank(gram_at(P, point))


def corank_at(P: SymmetricPencil, point) -> int:
    return SIZE - rank_at(P, point)


def symmetroid_quartic(P: SymmetricPencil) -> MultiPoly:
    """det A(x); raises DegeneratePencilError when it vanishes identically."""
    if P.is_degenerate:
        raise DegeneratePencilError("det A(x) vanishes identically")
    return P.quartic


def minor_ideal(P: SymmetricPencil, k: int) -> IdealBasis:
    """The (k+1) x (k+1) minors of A(x): they cut out the rank <= k locus.

    All minors are used, not only principal ones; duplicates up to a
    scalar factor are dropped.
    """
    if not 1 <= k <= 3:
        raise ValueError("k must be in 1..3")
    if k == 3:
        gens = [P.quartic] if P.quartic else []
    else:
        seen = {}
        for _, m in linalg.minors(P.matrix, k + 1):
            if not m:
                continue
            lead = max(m.terms, key=GREVLEX.key)
            monic = m.scale(m.terms[lead].inverse())
            seen.setdefault(monic, m)
        gens = list(seen.values())
    return IdealBasis(tuple(g.extend(P.names) for g in gens), GREVLEX, tuple(P.names), False)


def jacobian_ideal(P: SymmetricPencil) -> IdealBasis:
    f = symmetroid_quartic(P)
    gens = tuple(f.diff(v) for v in P.names)
    return IdealBasis(gens, GREVLEX, tuple(P.names), False)


def jacobian_generators(P: SymmetricPencil) -> list[MultiPoly]:
    f = symmetroid_quartic(P)
    return [f.diff(v) for v in P.names]


def cone_test(P: SymmetricPencil) -> list[list[GaussianRational]]:
    """Basis of vertex directions v with sum v_i df/dx_i = 0 identically.

    An empty list means the symmetroid is not a cone.
    """
    partials = jacobian_generators(P)
    monos = sorted({e for p in partials for e in p.terms})
    rows = [[p.terms.get(m, ZERO) for p in partials] for m in monos]
    if not rows:
        return linalg.nullspace([], len(partials))
    return [linalg.row_space([v])[0] for v in linalg.nullspace(rows)]


# -- pencil text format ------------------------------------------------------

_HEADER = re.compile(r"^n\s*=\s*(\d+)$")
_BLOCK = re.compile(r"^A(\d+)\s*:$")


def parse_pencil(text: str, **kw) -> SymmetricPencil:
    """Parse ``n=<int>`` followed by ``A<i>:`` blocks of 4 rows of 4 entries.

    Omitted blocks are zero matrices.
    """
    lines = [(k + 1, ln.split("#", 1)[0].strip()) for k, ln in enumerate(text.splitlines())]
    lines = [(k, ln) for k, ln in lines if ln]
    if not lines:
        raise ParseError("empty pencil file", 1)
    lineno, first = lines[0]
    m = _HEADER.match(first)
    if m is None:
        raise ParseError("expected header 'n=<int>'", lineno)
    n = int(m.group(1))
    if n < 1 or n > 5:
        raise ParseError("n must be between 1 and 5", lineno)
    mats: dict[int, list] = {}
    pos = 1
    while pos < len(lines):
        lineno, ln = lines[pos]
        b = _BLOCK.match(ln)
        if b is None:
            raise ParseError(f"expected block header 'A<i>:', got {ln!r}", lineno)
        idx = int(b.group(1))
        if idx > n:
            raise ParseError(f"block A{idx} exceeds n={n}", lineno)
        if idx in mats:
            raise ParseError(f"duplicate block A{idx}", lineno)
        rows = []
        for r in range(SIZE):
            pos += 1
            if pos >= len(lines):
                raise ParseError(f"block A{idx} has fewer than 4 rows", lineno)
            rlineno, rtext = lines[pos]
            parts = rtext.split()
            if len(parts) != SIZE:
                raise ParseError(f"expected 4 entries, got {len(parts)}", rlineno)
            try:
                rows.append([parse_gaussian(p) for p in parts])
            except ValueError as exc:
                raise ParseError(str(exc), rlineno) from None
        mats[idx] = rows
        pos += 1
    zero = [[ZERO] * SIZE for _ in range(SIZE)]
    matrices = tuple(mats.get(i, zero) for i in range(n + 1))
    try:
        return SymmetricPencil(matrices, **kw)
    except (ValueError, DegeneratePencilError) as exc:
        raise ParseError(str(exc)) from None


def format_pencil(P: SymmetricPencil) -> str:
    out = [f"n={P.n}"]
    for k, M in enumerate(P.matrices):
        out.append(f"A{k}:")
        for row in M:
            out.append(" ".join(format_gaussian(v) for v in row))
    return "\n".join(out) + "\n"


def require_real(P: SymmetricPencil):
    if not P.real_flag:
        raise PreconditionError("the pencil has non-real entries")
