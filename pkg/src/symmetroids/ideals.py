"""Groebner bases over Q(i): division, Buchberger completion, elimination.

Internally a polynomial is a dict from exponent tuples (aligned with the
ring's variable order) to GaussianRational.  The public functions accept
and return :class:`MultiPoly`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import BudgetExceededError, NotGroebnerError
from .gaussian import ONE, ZERO
from .poly import MultiPoly, var_key

PAIR_BUDGET = 10**6


@dataclass(frozen=True)
class TermOrder:
    """Monomial order on exponent tuples in a fixed variable order.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"block"``.  A block order
    compares the first ``split`` variables by grevlex and breaks ties with
    grevlex on the rest, so anything involving the first block is larger.
    """

    kind: str = "grevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown term order {self.kind!r}")

    def key(self, exp):
        if self.kind == "lex":
            return exp
        if self.kind == "grevlex":
            return _grevlex(exp)
        s = self.split
        return (_grevlex(exp[:s]), _grevlex(exp[s:]))


GREVLEX = TermOrder("grevlex")
LEX = TermOrder("lex")


def _grevlex(exp):
    return (sum(exp), tuple(-e for e in reversed(exp)))


@dataclass
class IdealBasis:
    generators: tuple[MultiPoly, ...]
    order: TermOrder = GREVLEX
    variables: tuple[str, ...] = ()
    groebner_flag: bool = False
    _internal: list = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.generators = tuple(g for g in self.generators if g)
        if not self.variables:
            self.variables = ring_variables(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def is_unit(self) -> bool:
        return self.groebner_flag and any(g.is_constant() and g for g in self.generators)

    def leading_monomials(self):
        key = self.order.key
        return [max(_to_ring(g, self.variables), key=key) for g in self.generators]


def ring_variables(polys: Iterable[MultiPoly], extra: Iterable[str] = ()) -> tuple[str, ...]:
    names = set(extra)
    for p in polys:
        names.update(p.variables)
    return tuple(sorted(names, key=var_key))


def _to_ring(p: MultiPoly, ring: tuple[str, ...]) -> dict:
    if p.variables == ring:
        return dict(p.terms)
    idx = []
    for v in p.variables:
        if v in ring:
            idx.append(ring.index(v))
        else:
            idx.append(None)
    n = len(ring)
    out = {}
    for exp, c in p.terms.items():
        e = [0] * n
        for i, k in zip(idx, exp):
            if k:
                if i is None:
                    raise ValueError(f"variable outside ring {ring}")
                e[i] = k
        out[tuple(e)] = c
    return out


def _from_ring(d: dict, ring: tuple[str, ...]) -> MultiPoly:
    return MultiPoly(ring, d)


# -- core routines on dict polynomials ---------------------------------------


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(p: dict, key) -> dict:
    lm = max(p, key=key)
    inv = p[lm].inverse()
    if inv == ONE:
        return p
    return {e: c * inv for e, c in p.items()}


def _reduce(p: dict, basis: Sequence[tuple], key, full: bool = True) -> dict:
    """Remainder of ``p`` on division by monic ``basis`` entries ``(lm, poly)``."""
    p = dict(p)
    rem = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, g in basis:
            if _divides(lm, m):
                shift = tuple(x - y for x, y in zip(m, lm))
                for e, gc in g.items():
                    t = tuple(x + y for x, y in zip(e, shift))
                    v = p.get(t, ZERO) - c * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            if not full:
                rem.update(p)
                return rem
            rem[m] = c
            del p[m]
    return rem


def _spoly(f: dict, lf, g: dict, lg) -> dict:
    lcm = _lcm(lf, lg)
    sf = tuple(x - y for x, y in zip(lcm, lf))
    sg = tuple(x - y for x, y in zip(lcm, lg))
    out = {}
    for e, c in f.items():
        out[tuple(x + y for x, y in zip(e, sf))] = c
    for e, c in g.items():
        t = tuple(x + y for x, y in zip(e, sg))
        v = out.get(t, ZERO) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def _deg(p: dict) -> int:
    return max(sum(e) for e in p)


def _buchberger(F: list[dict], key, budget: int = PAIR_BUDGET) -> list[dict]:
    """Reduced Groebner basis (monic, sorted by leading monomial)."""
    polys: list[dict] = []
    lms: list = []
    sugar: list[int] = []
    active: list[int] = []
    pairs: list[tuple] = []

    def update(h: int):
        nonlocal active, pairs
        lh = lms[h]

        def coprime(a, b):
            return all(not (x and y) for x, y in zip(a, b))

        # Gebauer-Moeller update
        C = [(g, _lcm(lh, lms[g])) for g in active]
        D = []
        while C:
            g1, l1 = C.pop(0)
            if coprime(lh, lms[g1]) or not any(_divides(l2, l1) for _, l2 in C + D):
                D.append((g1, l1))
        E = [(g, l) for g, l in D if not coprime(lh, lms[g])]
        kept = []
        for entry in pairs:
            _, _, i, j, l = entry
            if _divides(lh, l) and _lcm(lms[i], lh) != l and _lcm(lms[j], lh) != l:
                continue
            kept.append(entry)
        for g, l in E:
            dl = sum(l)
            s = max(sugar[g] + dl - sum(lms[g]), sugar[h] + dl - sum(lh))
            kept.append((s, key(l), g, h, l))
        pairs = kept
        active = [g for g in active if not _divides(lh, lms[g])] + [h]

    def add(p: dict, s: int):
        p = _monic(p, key)
        polys.append(p)
        lms.append(max(p, key=key))
        sugar.append(s)
        update(len(polys) - 1)

    for f in sorted((f for f in F if f), key=lambda f: key(max(f, key=key))):
        basis = [(lms[g], polys[g]) for g in active]
        r = _reduce(f, basis, key)
        if r:
            add(r, _deg(f))

    count = 0
    while pairs:
        best = min(range(len(pairs)), key=lambda t: (pairs[t][0], pairs[t][1]))
        s, _, i, j, _ = pairs.pop(best)
        count += 1
        if count > budget:
            raise BudgetExceededError(f"Buchberger exceeded {budget} pair reductions")
        sp = _spoly(polys[i], lms[i], polys[j], lms[j])
        if not sp:
            continue
        basis = [(lms[g], polys[g]) for g in active]
        h = _reduce(sp, basis, key)
        if h:
            add(h, s)

    # minimal basis, then interreduce
    G = [(lms[g], polys[g]) for g in active]
    G = [
        (lm, p)
        for k, (lm, p) in enumerate(G)
        if not any(_divides(lm2, lm) and (lm2 != lm or k2 < k) for k2, (lm2, _) in enumerate(G) if k2 != k)
    ]
    out = []
    for k, (lm, p) in enumerate(G):
        others = [q for k2, q in enumerate(G) if k2 != k]
        r = _reduce(p, others, key)
        out.append(_monic(r, key))
    out.sort(key=lambda p: key(max(p, key=key)))
    return out


# -- public API --------------------------------------------------------------


def buchberger(
    gens: Sequence[MultiPoly],
    order: TermOrder = GREVLEX,
    variables: Sequence[str] | None = None,
    budget: int = PAIR_BUDGET,
    check: bool = False,
) -> IdealBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``variables`` fixes the ring's variable order (which matters for lex
    and block orders); by default all variables sorted naturally.
    """
    ring = tuple(variables) if variables else ring_variables(gens)
    F = [_to_ring(g, ring) for g in gens if g]
    G = _buchberger(F, order.key, budget)
    basis = IdealBasis(tuple(_from_ring(g, ring) for g in G), order, ring, True)
    basis._internal = G
    if check and not is_groebner(basis):
        raise AssertionError("Buchberger output failed the S-pair criterion")
    return basis


def _internal(B: IdealBasis):
    if B._internal is None:
        B._internal = [_monic(_to_ring(g, B.variables), B.order.key) for g in B.generators]
    key = B.order.key
    return [(max(g, key=key), g) for g in B._internal]


def normal_form(p: MultiPoly, B: IdealBasis) -> MultiPoly:
    """Fully reduced remainder of ``p`` modulo the Groebner basis ``B``."""
    if not B.groebner_flag:
        raise NotGroebnerError()
    ring = B.variables
    extra = [v for v in p.used_variables() if v not in ring]
    if extra:
        # variables outside the ring behave as free parameters: extend the ring
        ring2 = tuple(ring) + tuple(extra)
        B2 = IdealBasis(B.generators, _extend_order(B.order, len(ring)), ring2, True)
        return normal_form(p, B2)
    r = _reduce(_to_ring(p, ring), _internal(B), B.order.key)
    return _from_ring(r, ring)


def _extend_order(order: TermOrder, n: int) -> TermOrder:
    # new trailing variables are not involved in any generator, so any
    # order that restricts to the old one works; use a block order
    if order.kind == "block":
        return order
    return TermOrder("block", n) if order.kind == "grevlex" else order


def is_groebner(B: IdealBasis) -> bool:
    """Check Buchberger's criterion: every S-polynomial reduces to zero."""
    basis = _internal(B)
    key = B.order.key
    for (l1, f), (l2, g) in combinations(basis, 2):
        if all(not (a and b) for a, b in zip(l1, l2)):
            continue
        if _reduce(_spoly(f, l1, g, l2), basis, key):
            return False
    return True


def ideal_contains(p: MultiPoly, gens, order: TermOrder = GREVLEX) -> bool:
    B = gens if isinstance(gens, IdealBasis) and gens.groebner_flag else buchberger(list(gens), order)
    return not normal_form(p, B)


def eliminate(gens: Sequence[MultiPoly], drop: Iterable[str]) -> IdealBasis:
    """Generators of the elimination ideal ``<gens>`` intersected with the
    subring without the ``drop`` variables."""
    drop = tuple(sorted(set(drop), key=var_key))
    all_vars = ring_variables(gens, drop)
    keep = tuple(v for v in all_vars if v not in drop)
    ring = drop + keep
    B = buchberger(gens, TermOrder("block", len(drop)), ring)
    kept = tuple(g for g in B.generators if not set(g.used_variables()) & set(drop))
    sub_order = GREVLEX
    out = IdealBasis(tuple(g.extend(keep) for g in kept), sub_order, keep, False)
    # a block-order basis restricted to the second block is a grevlex Groebner basis
    out.groebner_flag = True
    return out


def affine_dimension(B: IdealBasis) -> int:
    """Krull dimension of k[vars]/I from the leading monomials (-1 for the unit ideal)."""
    if not B.groebner_flag:
        raise NotGroebnerError()
    if B.is_unit():
        return -1
    lms = B.leading_monomials()
    n = len(B.variables)
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            Sset = set(S)
            if not any(all(i in Sset for i, k in enumerate(m) if k) for m in lms):
                return size
    return 0


def is_zero_dimensional(B: IdealBasis) -> bool:
    if not B.groebner_flag:
        raise NotGroebnerError()
    if B.is_unit():
        return True
    lms = B.leading_monomials()
    n = len(B.variables)
    for i in range(n):
        if not any(m[i] > 0 and sum(m) == m[i] for m in lms):
            return False
    return True


def standard_monomials(B: IdealBasis) -> list[tuple[int, ...]]:
    """Monomials outside the leading-term ideal of a zero-dimensional basis."""
    if not is_zero_dimensional(B):
        raise ValueError("ideal is not zero-dimensional")
    if B.is_unit():
        return []
    lms = B.leading_monomials()
    n = len(B.variables)
    bounds = []
    for i in range(n):
        bounds.append(min(m[i] for m in lms if m[i] > 0 and sum(m) == m[i]))
    out = []
    for e in product(*(range(b) for b in bounds)):
        if not any(_divides(m, e) for m in lms):
            out.append(e)
    return out


def quotient_dimension(gens: Sequence[MultiPoly], variables: Sequence[str] | None = None) -> int:
    """dim_k k[vars]/<gens> for a zero-dimensional ideal."""
    return len(standard_monomials(buchberger(gens, GREVLEX, variables)))
