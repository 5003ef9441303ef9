"""Buchberger Groebner engine with normal forms and staircase queries.

The engine computes the reduced monic Groebner basis of an ideal with the
classical pair algorithm: normal pair selection (smallest lcm first), the
lcm-coprimality criterion, and a pair budget that raises BudgetExceeded
instead of hanging.  Cofactor tracking is optional; when enabled, every
basis element carries an exact representation as a combination of the
original generators, which is what the printable Bezout certificates of the
classification pipeline are made of.

On top of the basis sit the staircase queries: ideal triviality,
invertibility modulo the ideal, Noether dimension via independent variable
subsets of the leading-term ideal, standard monomials, and the structure
constants of a zero-dimensional quotient.
"""

from __future__ import annotations

from itertools import combinations, product

from .errors import BudgetExceeded, NotZeroDimensional, RingMismatch, TrivialIdeal
from .finalg import FiniteAlgebra
from .multipoly import (
    GREVLEX,
    MultiPoly,
    mono_degree,
    mono_div,
    mono_divides,
    mono_is_coprime,
    mono_lcm,
    mono_mul,
)

DEFAULT_PAIR_BUDGET = 50_000


class GroebnerBasis:
    """Reduced monic basis, its order, and the originating generators."""

    __slots__ = ("field", "variables", "order", "generators", "original", "cofactors")

    def __init__(self, field, variables, order, generators, original, cofactors=None):
        self.field = field
        self.variables = tuple(variables)
        self.order = order
        self.generators = tuple(generators)
        self.original = tuple(original)
        self.cofactors = cofactors

    def leading_monomials(self):
        return [g.leading(self.order)[0] for g in self.generators]

    def __repr__(self):
        gens = ", ".join(g.format(self.order) for g in self.generators)
        return f"GroebnerBasis[{self.order}]({gens})"


def _check_ring(polys):
    first = polys[0]
    for p in polys[1:]:
        if p.field != first.field or p.variables != first.variables:
            raise RingMismatch("generators live in different polynomial rings")


def _rep_zero(ring_zero, n):
    return [ring_zero] * n

def _rep_sub_scaled(rep, other, factor_poly):
    return [a - factor_poly * b for a, b in zip(rep, other)]


def _reduce(f, basis, order, rep=None, reps=None):
    """Full multivariate division of f by the monic basis.

    Returns the normal form; when ``rep``/``reps`` are given, ``rep`` is
    updated functionally so the invariant  reduced = sum(rep_j * orig_j)
    + (original f contribution)  is preserved by the caller.
    """
    K = f.field
    remainder = MultiPoly.zero(K, f.variables)
    p = f
    while not p.is_zero:
        lm, lc = p.leading(order)
        hit = None
        for idx, g in enumerate(basis):
            glm = g.leading(order)[0]
            if mono_divides(glm, lm):
                hit = idx
                break
        if hit is None:
            t = MultiPoly.from_monomial(K, f.variables, lm, lc)
            remainder = remainder + t
            p = p - t
        else:
            g = basis[hit]
            q_exps = mono_div(lm, g.leading(order)[0])
            p = p - g.mul_term(q_exps, lc)
            if rep is not None:
                factor = MultiPoly.from_monomial(K, f.variables, q_exps, lc)
                rep = _rep_sub_scaled(rep, reps[hit], factor)
    if rep is not None:
        return remainder, rep
    return remainder


def _s_poly(f, g, order, K, variables):
    fm, fc = f.leading(order)
    gm, gc = g.leading(order)
    l = mono_lcm(fm, gm)
    uf = MultiPoly.from_monomial(K, variables, mono_div(l, fm), K.invert(fc))
    ug = MultiPoly.from_monomial(K, variables, mono_div(l, gm), K.invert(gc))
    return f * uf - g * ug, uf, ug


def buchberger(gens, order=GREVLEX, pair_budget=DEFAULT_PAIR_BUDGET, track=False):
    """Reduced Groebner basis of <gens>; deterministic for fixed input and order.

    ``pair_budget`` bounds the number of critical pairs taken off the queue;
    exceeding it raises BudgetExceeded.  With ``track=True`` the result
    carries cofactors expressing each basis element in the original
    generators.
    """
    gens = list(gens)
    if not gens:
        raise RingMismatch("buchberger needs at least the ambient ring; pass one polynomial")
    _check_ring(gens)
    K = gens[0].field
    variables = gens[0].variables
    ring_zero = MultiPoly.zero(K, variables)
    n_orig = len(gens)

    basis = []
    reps = []

    def append(poly, rep):
        lc = poly.leading(order)[1]
        if lc != K.one():
            inv = K.invert(lc)
            poly = poly.scale(inv)
            rep = [c.scale(inv) for c in rep]
        basis.append(poly)
        reps.append(rep)

    for idx, g in enumerate(gens):
        if g.is_zero:
            continue
        rep = _rep_zero(ring_zero, n_orig)
        rep[idx] = MultiPoly.one(K, variables)
        reduced, rep = _reduce(g, basis, order, rep, reps)
        if not reduced.is_zero:
            append(reduced, rep)

    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    processed = 0

    def pair_key(p):
        i, j = p
        l = mono_lcm(basis[i].leading(order)[0], basis[j].leading(order)[0])
        return (mono_degree(l), order.key(l), i, j)

    while pairs:
        processed += 1
        if processed > pair_budget:
            raise BudgetExceeded(f"Groebner pair budget of {pair_budget} exceeded")
        best = min(range(len(pairs)), key=lambda k: pair_key(pairs[k]))
        i, j = pairs.pop(best)
        lm_i = basis[i].leading(order)[0]
        lm_j = basis[j].leading(order)[0]
        if mono_is_coprime(lm_i, lm_j):
            continue
        s, uf, ug = _s_poly(basis[i], basis[j], order, K, variables)
        if s.is_zero:
            continue
        rep = [uf * a - ug * b for a, b in zip(reps[i], reps[j])]
        reduced, rep = _reduce(s, basis, order, rep, reps)
        if reduced.is_zero:
            continue
        append(reduced, rep)
        new = len(basis) - 1
        pairs.extend((k, new) for k in range(new))

    # Minimalize: keep only elements whose leading monomial no other kept
    # element divides, then tail-reduce against the minimal set.  The result
    # is the unique reduced basis, independent of pair scheduling.
    idxs = sorted(range(len(basis)), key=lambda k: order.key(basis[k].leading(order)[0]))
    minimal = []
    for k in idxs:
        lm = basis[k].leading(order)[0]
        if any(mono_divides(basis[m].leading(order)[0], lm) for m in minimal):
            continue
        minimal.append(k)
    final = []
    final_reps = []
    for k in minimal:
        others = [basis[m] for m in minimal if m != k]
        other_reps = [reps[m] for m in minimal if m != k]
        reduced, rep = _reduce(basis[k], others, order, reps[k], other_reps)
        lc = reduced.leading(order)[1]
        if lc != K.one():
            inv = K.invert(lc)
            reduced = reduced.scale(inv)
            rep = [c.scale(inv) for c in rep]
        final.append(reduced)
        final_reps.append(rep)
    ordered = sorted(range(len(final)), key=lambda k: order.key(final[k].leading(order)[0]))
    generators = [final[k] for k in ordered]
    cofactors = tuple(tuple(final_reps[k]) for k in ordered) if track else None
    return GroebnerBasis(K, variables, order, generators, gens, cofactors)


# ------------------------------------------------------------------ queries

def normal_form(f, gb: GroebnerBasis):
    """Remainder of f on division by the basis; zero iff f is in the ideal."""
    if f.field != gb.field or f.variables != gb.variables:
        raise RingMismatch("polynomial lives in a different ring than the basis")
    return _reduce(f, list(gb.generators), gb.order)


def contains_one(gb: GroebnerBasis) -> bool:
    """True iff the reduced basis is {1}, i.e. the quotient is the zero ring."""
    return len(gb.generators) == 1 and gb.generators[0].is_constant and not gb.generators[0].is_zero


def one_certificate(gb: GroebnerBasis):
    """Cofactors c_j with 1 = sum c_j * original_j, or None.

    Needs a basis computed with ``track=True`` and contains_one(gb).
    The identity is re-verified exactly before returning.
    """
    if gb.cofactors is None or not contains_one(gb):
        return None
    g = gb.generators[0]
    c = g.constant_value()
    inv = gb.field.invert(c)
    cof = [p.scale(inv) for p in gb.cofactors[0]]
    total = MultiPoly.zero(gb.field, gb.variables)
    for factor, orig in zip(cof, gb.original):
        total = total + factor * orig
    if total != MultiPoly.one(gb.field, gb.variables):
        raise AssertionError("cofactor bookkeeping broke; certificate does not multiply out to 1")
    return cof


def is_invertible_mod(g, gb: GroebnerBasis, pair_budget=DEFAULT_PAIR_BUDGET) -> bool:
    """True iff g is invertible in the quotient ring, i.e. 1 in I + <g>."""
    if g.field != gb.field or g.variables != gb.variables:
        raise RingMismatch("polynomial lives in a different ring than the basis")
    augmented = buchberger(list(gb.original) + [g], gb.order, pair_budget)
    return contains_one(augmented)


def inverse_mod(g, gb: GroebnerBasis, pair_budget=DEFAULT_PAIR_BUDGET):
    """An inverse of g modulo the ideal, or None when g is not invertible."""
    augmented = buchberger(list(gb.original) + [g], gb.order, pair_budget, track=True)
    cert = one_certificate(augmented)
    if cert is None:
        return None
    return normal_form(cert[-1], gb)


def noether_dimension(gb: GroebnerBasis) -> int:
    """Combinatorial dimension of the staircase.

    The maximum cardinality of a set S of variables such that no leading
    monomial is supported entirely inside S; 0 means the quotient is a
    finite-dimensional vector space.
    """
    if contains_one(gb):
        raise TrivialIdeal("the ideal contains 1")
    n = len(gb.variables)
    supports = []
    for lm in gb.leading_monomials():
        supports.append(frozenset(i for i, e in enumerate(lm) if e > 0))
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def standard_monomials(gb: GroebnerBasis):
    """Monomials outside the leading-term ideal, ascending in the basis order."""
    if contains_one(gb):
        raise TrivialIdeal("the ideal contains 1")
    if noether_dimension(gb) != 0:
        raise NotZeroDimensional("the quotient is not finite-dimensional")
    n = len(gb.variables)
    lms = gb.leading_monomials()
    bounds = []
    for i in range(n):
        pure = [lm[i] for lm in lms if all(e == 0 for k, e in enumerate(lm) if k != i) and lm[i] > 0]
        bounds.append(min(pure))
    out = []
    for exps in product(*(range(b) for b in bounds)):
        if not any(mono_divides(lm, exps) for lm in lms):
            out.append(exps)
    out.sort(key=gb.order.key)
    return out


def quotient_algebra(gb: GroebnerBasis) -> FiniteAlgebra:
    """Structure constants of the quotient on its standard-monomial basis.

    The returned algebra remembers, as generator references, the coordinate
    vector of every ambient variable.
    """
    monomials = standard_monomials(gb)
    index = {m: k for k, m in enumerate(monomials)}
    m = len(monomials)
    K = gb.field
    sample = MultiPoly.zero(K, gb.variables)

    def coords(poly):
        vec = [K.zero()] * m
        for exps, c in poly.terms.items():
            vec[index[exps]] = c
        return tuple(vec)

    table = [[None] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            prod = MultiPoly.from_monomial(K, gb.variables, mono_mul(monomials[i], monomials[j]))
            vec = coords(normal_form(prod, gb))
            table[i][j] = vec
            table[j][i] = vec
    unit = coords(normal_form(MultiPoly.one(K, gb.variables), gb))
    refs = {}
    for i, name in enumerate(gb.variables):
        xi = MultiPoly.variable(K, gb.variables, i)
        refs[name] = coords(normal_form(xi, gb))
    labels = [sample.format_monomial(mono) for mono in monomials]
    return FiniteAlgebra(K, labels, table, unit, generator_refs=refs)
