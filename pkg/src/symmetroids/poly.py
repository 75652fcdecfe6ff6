"""Sparse multivariate polynomials over Q(i) in named variables.

Variables are kept in a canonical order (alphabetic prefix, then numeric
suffix), so two equal polynomials built in different ways have identical
term maps.  Declared but unused variables are allowed and ignored by
equality.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .errors import MissingAssignmentError, ParseError, UnknownVariableError
from .gaussian import ONE, ZERO, GaussianRational, format_gaussian

__all__ = ["MultiPoly", "var_key", "variables", "parse_poly", "format_poly", "divide_exact"]

_NAME_RE = re.compile(r"^([A-Za-z_]+)(\d*)(.*)$")


def var_key(name: str):
    m = _NAME_RE.match(name)
    if m is None:
        return (name, -1, name)
    prefix, digits, rest = m.groups()
    return (prefix, int(digits) if digits else -1, rest, name)


def _sorted_vars(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=var_key))


def grevlex_key(exp: tuple[int, ...]):
    return (sum(exp), tuple(-e for e in reversed(exp)))


class MultiPoly:
    """Immutable polynomial: ``variables`` plus a map exponent-tuple -> coefficient."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping | None = None):
        given = tuple(variables)
        canon = _sorted_vars(given)
        clean: dict[tuple[int, ...], GaussianRational] = {}
        if terms:
            if canon != given:
                perm = [given.index(v) for v in canon]
                if len(set(given)) != len(given):
                    raise ValueError(f"duplicate variable names in {given}")
            else:
                perm = None
            for exp, c in terms.items():
                if len(exp) != len(given):
                    raise ValueError("exponent length does not match variables")
                c = GaussianRational.coerce(c)
                if not c:
                    continue
                key = tuple(exp[i] for i in perm) if perm else tuple(exp)
                prev = clean.get(key)
                if prev is not None:
                    c = prev + c
                    if not c:
                        del clean[key]
                        continue
                clean[key] = c
        self.variables = canon
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict) -> "MultiPoly":
        obj = object.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls._raw((name,), {(1,): ONE})

    @classmethod
    def const(cls, c, variables: Iterable[str] = ()) -> "MultiPoly":
        vs = _sorted_vars(variables)
        c = GaussianRational.coerce(c)
        return cls._raw(vs, {(0,) * len(vs): c} if c else {})

    @classmethod
    def zero(cls, variables: Iterable[str] = ()) -> "MultiPoly":
        return cls._raw(_sorted_vars(variables), {})

    # -- alignment -------------------------------------------------------

    def extend(self, variables: Iterable[str]) -> "MultiPoly":
        """Same polynomial over the union of its variables and ``variables``."""
        new = _sorted_vars(self.variables + tuple(variables))
        if new == self.variables:
            return self
        idx = [new.index(v) for v in self.variables]
        n = len(new)
        terms = {}
        for exp, c in self.terms.items():
            e = [0] * n
            for i, k in zip(idx, exp):
                e[i] = k
            terms[tuple(e)] = c
        return MultiPoly._raw(new, terms)

    def _align(self, other: "MultiPoly"):
        if self.variables == other.variables:
            return self, other
        vs = self.variables + other.variables
        return self.extend(vs), other.extend(vs)

    @staticmethod
    def _lift(value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        return MultiPoly.const(value)

    # -- basic queries ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def used_variables(self) -> tuple[str, ...]:
        used = set()
        for exp in self.terms:
            for v, k in zip(self.variables, exp):
                if k:
                    used.add(v)
        return tuple(v for v in self.variables if v in used)

    def degree(self, vars: Iterable[str] | None = None) -> int:
        """Total degree (in ``vars`` if given); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if vars is None:
            return max(sum(e) for e in self.terms)
        sel = [i for i, v in enumerate(self.variables) if v in set(vars)]
        return max(sum(e[i] for i in sel) for e in self.terms)

    def is_homogeneous(self, vars: Iterable[str] | None = None) -> bool:
        if vars is None:
            degs = {sum(e) for e in self.terms}
        else:
            vs = set(vars)
            sel = [i for i, v in enumerate(self.variables) if v in vs]
            degs = {sum(e[i] for i in sel) for e in self.terms}
        return len(degs) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), ZERO)

    def coefficient(self, monomial: Mapping[str, int]) -> GaussianRational:
        for v in monomial:
            if v not in self.variables and monomial[v]:
                return ZERO
        exp = tuple(monomial.get(v, 0) for v in self.variables)
        return self.terms.get(exp, ZERO)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.terms.values())

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        a, b = self._align(other)
        terms = dict(a.terms)
        for exp, c in b.terms.items():
            prev = terms.get(exp)
            if prev is None:
                terms[exp] = c
            else:
                s = prev + c
                if s:
                    terms[exp] = s
                else:
                    del terms[exp]
        return MultiPoly._raw(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def scale(self, c) -> "MultiPoly":
        c = GaussianRational.coerce(c)
        if not c:
            return MultiPoly._raw(self.variables, {})
        return MultiPoly._raw(self.variables, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        a, b = self._align(other)
        terms: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                prev = terms.get(e)
                terms[e] = c1 * c2 if prev is None else prev + c1 * c2
        return MultiPoly._raw(a.variables, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MultiPoly.const(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "MultiPoly":
        return MultiPoly._raw(self.variables, {e: c.conj() for e, c in self.terms.items()})

    # -- calculus and evaluation -------------------------------------------

    def diff(self, var: str) -> "MultiPoly":
        if var not in self.variables:
            raise UnknownVariableError(f"unknown variable {var!r}")
        i = self.variables.index(var)
        terms = {}
        for exp, c in self.terms.items():
            k = exp[i]
            if k:
                e = exp[:i] + (k - 1,) + exp[i + 1 :]
                terms[e] = c * k
        return MultiPoly._raw(self.variables, terms)

    def eval(self, point: Mapping[str, object]) -> GaussianRational:
        values = []
        used = set(self.used_variables())
        for v in self.variables:
            if v in point:
                values.append(GaussianRational.coerce(point[v]))
            elif v in used:
                raise MissingAssignmentError(v)
            else:
                values.append(ZERO)
        total = ZERO
        powers: dict = {}
        for exp, c in self.terms.items():
            t = c
            for i, k in enumerate(exp):
                if k:
                    key = (i, k)
                    p = powers.get(key)
                    if p is None:
                        p = powers[key] = values[i] ** k
                    t = t * p
            total = total + t
        return total

    def __call__(self, **point) -> GaussianRational:
        return self.eval(point)

    def substitute(self, mapping: Mapping[str, object]) -> "MultiPoly":
        """Ring homomorphism sending each mapped variable to its image."""
        images = {v: self._lift(p) for v, p in mapping.items()}
        keep = [v for v in self.variables if v not in images]
        out_vars = list(keep)
        for p in images.values():
            out_vars.extend(p.variables)
        result = MultiPoly.zero(out_vars)
        powers: dict = {}
        var_polys = {v: MultiPoly.var(v) for v in keep}
        for exp, c in self.terms.items():
            term = MultiPoly.const(c, out_vars)
            for v, k in zip(self.variables, exp):
                if not k:
                    continue
                key = (v, k)
                p = powers.get(key)
                if p is None:
                    base = images[v] if v in images else var_polys[v]
                    p = powers[key] = base**k
                term = term * p
            result = result + term
        return result

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        names = tuple(mapping.get(v, v) for v in self.variables)
        return MultiPoly(names, self.terms)

    # -- comparison ------------------------------------------------------

    def _canonical(self):
        used = self.used_variables()
        if used == self.variables:
            return self.variables, self.terms
        idx = [self.variables.index(v) for v in used]
        return used, {tuple(e[i] for i in idx): c for e, c in self.terms.items()}

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.const(other)
            except TypeError:
                return NotImplemented
        if self.variables == other.variables:
            return self.terms == other.terms
        return self._canonical() == other._canonical()

    def __hash__(self):
        if self._hash is None:
            vs, terms = self._canonical()
            self._hash = hash((vs, frozenset(terms.items())))
        return self._hash

    # -- text ------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r})"


def divide_exact(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Quotient ``p / q``; raises ``ArithmeticError`` if ``q`` does not divide ``p``."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    p, q = p._align(q)
    vs = p.variables
    lead_q = max(q.terms, key=grevlex_key)
    inv = q.terms[lead_q].inverse()
    rem = dict(p.terms)
    quot: dict = {}
    while rem:
        m = max(rem, key=grevlex_key)
        if any(a < b for a, b in zip(m, lead_q)):
            raise ArithmeticError("polynomial division leaves a remainder")
        shift = tuple(a - b for a, b in zip(m, lead_q))
        f = rem[m] * inv
        quot[shift] = f
        for e, c in q.terms.items():
            t = tuple(a + b for a, b in zip(e, shift))
            v = rem.get(t, ZERO) - f * c
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return MultiPoly._raw(vs, quot)


def variables(*names: str):
    """Convenience: ``x0, x1 = variables("x0", "x1")``; also ``variables("x0:3")``."""
    out = []
    for name in names:
        m = re.fullmatch(r"([A-Za-z_]+)(\d+):(\d+)", name)
        if m:
            prefix, lo, hi = m.group(1), int(m.group(2)), int(m.group(3))
            out.extend(MultiPoly.var(f"{prefix}{i}") for i in range(lo, hi))
        else:
            out.append(MultiPoly.var(name))
    return out


# -- text format ------------------------------------------------------------


def _format_monomial(vs, exp) -> str:
    parts = []
    for v, k in zip(vs, exp):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def format_poly(p: MultiPoly) -> str:
    """Canonical text, terms in descending graded reverse lexicographic order."""
    if not p.terms:
        return "0"
    out = []
    for exp, c in p.sorted_terms():
        mono = _format_monomial(p.variables, exp)
        if c.is_real() or c.re == 0:
            coef = format_gaussian(c)
            neg = coef.startswith("-")
            if neg:
                coef = coef[1:]
        else:
            neg = False
            coef = f"({format_gaussian(c)})"
        if mono:
            if coef == "1":
                body = mono
            else:
                body = f"{coef}*{mono}"
        else:
            body = coef
        if out:
            out.append(f" - {body}" if neg else f" + {body}")
        else:
            out.append(f"-{body}" if neg else body)
    return "".join(out)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class _Parser:
    def __init__(self, text: str, declared: tuple[str, ...]):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None:
                break
            num, name, sym = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif name is not None:
                self.tokens.append(("name", name))
            else:
                self.tokens.append(("sym", sym))
            pos = m.end()
        self.i = 0
        self.declared = declared

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"unexpected token {tok[1]!r} in polynomial")
        self.i += 1
        return tok

    def parse(self) -> MultiPoly:
        p = self.expr()
        if self.i != len(self.tokens):
            raise ParseError(f"trailing input at token {self.peek()[1]!r}")
        return p.extend(self.declared)

    def expr(self):
        tok = self.peek()
        if tok == ("sym", "-"):
            self.take()
            result = -self.term()
        else:
            if tok == ("sym", "+"):
                self.take()
            result = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self):
        result = self.factor()
        while True:
            tok = self.peek()
            if tok == ("sym", "*"):
                self.take()
                result = result * self.factor()
            elif tok == ("sym", "/"):
                self.take()
                den = self.factor()
                if not den.is_constant() or not den:
                    raise ParseError("division only by nonzero constants")
                result = result.scale(den.constant_value().inverse())
            else:
                return result

    def factor(self):
        tok = self.peek()
        if tok == ("sym", "-"):
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            k = self.take("num")[1]
            base = base**k
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return MultiPoly.const(val)
        if kind == "name":
            self.take()
            if val == "I":
                return MultiPoly.const(GaussianRational(0, 1))
            return MultiPoly.var(val)
        if (kind, val) == ("sym", "("):
            self.take()
            inner = self.expr()
            self.take("sym", ")")
            return inner
        raise ParseError(f"unexpected token {val!r} in polynomial")


def parse_poly(text: str, variables: Iterable[str] = ()) -> MultiPoly:
    """Parse the text format produced by :func:`format_poly`.

    The grammar accepts general sums of products with ``^`` powers,
    parentheses, ``I`` for the imaginary unit, and ``a/b`` rationals.
    """
    return _Parser(text, tuple(variables)).parse()
