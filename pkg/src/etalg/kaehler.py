"""Jacobians, differential-module presentations, and the four decision tests.

A finitely presented algebra A = K[X_1..X_n] / <f_1..f_s> determines the
transposed Jacobian Ja : A^s -> A^n, whose cokernel presents the module of
Kahler differentials together with the universal derivation
d(g) = sum_i (dg/dX_i) ebar_i.  Everything downstream is a determinantal
ideal test over the quotient:

  nette (unramified):   1 in <f> + <n x n minors of Ja>
  standard smooth:      s <= n and leading s x s minor invertible mod <f>
  elementary smooth:    1 in <f> + <s x s minors of Ja>
  standard etale:       s = n and det(Ja) invertible mod <f>

Minor enumeration is combinatorial; sizes stay small here.  A presentation
whose ideal contains 1 (the zero ring) satisfies every test vacuously and is
flagged as trivial so callers can surface that instead of hiding it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import NotZeroDimensional, RingMismatch
from .groebner import (
    DEFAULT_PAIR_BUDGET,
    GroebnerBasis,
    buchberger,
    contains_one,
    inverse_mod,
    is_invertible_mod,
    noether_dimension,
    normal_form,
    one_certificate,
    standard_monomials,
)
from .linalg import rank
from .multipoly import GREVLEX, MultiPoly


@dataclass(frozen=True)
class AlgebraPresentation:
    """K[X_1..X_n] / <f_1..f_s> given by variable names and relations."""

    field: object
    variables: tuple
    relations: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "relations", tuple(self.relations))
        for f in self.relations:
            if f.field != self.field or f.variables != self.variables:
                raise RingMismatch("relation lives outside the declared ring")

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def s(self) -> int:
        return len(self.relations)

    def ring_zero(self):
        return MultiPoly.zero(self.field, self.variables)


@dataclass(frozen=True)
class DifferentialPresentation:
    """Cokernel presentation of the differentials of an algebra presentation.

    ``generators`` are the symbols dX_i; ``relation_table`` is the n x s
    transposed Jacobian, entry (i, j) = df_j/dX_i, whose columns are the
    relations among the generators.
    """

    ambient: AlgebraPresentation
    generators: tuple
    relation_table: tuple


def jacobian(P: AlgebraPresentation):
    """The s x n Jacobian: entry (i, j) = df_i/dX_j."""
    return [[f.partial_derivative(j) for j in range(P.n)] for f in P.relations]


def transposed_jacobian(P: AlgebraPresentation):
    """Ja, the n x s transpose of the Jacobian."""
    jac = jacobian(P)
    return [[jac[j][i] for j in range(P.s)] for i in range(P.n)]


def omega_presentation(P: AlgebraPresentation) -> DifferentialPresentation:
    """The differential module as Coker(Ja) with generators dX_i."""
    table = tuple(tuple(row) for row in transposed_jacobian(P))
    gens = tuple(f"d{name}" for name in P.variables)
    return DifferentialPresentation(ambient=P, generators=gens, relation_table=table)


def universal_derivation(g: MultiPoly, D: DifferentialPresentation):
    """Coordinates of d(g) over the generators: (dg/dX_1, ..., dg/dX_n)."""
    P = D.ambient
    if g.field != P.field or g.variables != P.variables:
        raise RingMismatch("element lives outside the ambient ring")
    return tuple(g.partial_derivative(i) for i in range(P.n))


# ------------------------------------------------------------------ minors

def det_poly_matrix(rows, ring_zero):
    """Cofactor-expansion determinant of a square polynomial matrix."""
    n = len(rows)
    if n == 0:
        return MultiPoly.one(ring_zero.field, ring_zero.variables)
    if n == 1:
        return rows[0][0]
    total = ring_zero
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero:
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = entry * det_poly_matrix(minor, ring_zero)
        total = total + term if j % 2 == 0 else total - term
    return total


def minors(matrix, k, ring_zero):
    """All k x k minors with their row/column index sets, deterministically."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    out = []
    for rows_idx in combinations(range(nrows), k):
        for cols_idx in combinations(range(ncols), k):
            sub = [[matrix[i][j] for j in cols_idx] for i in rows_idx]
            out.append((rows_idx, cols_idx, det_poly_matrix(sub, ring_zero)))
    return out


# ------------------------------------------------------------------ decisions

@dataclass(frozen=True)
class Decision:
    """Outcome of one determinantal test, with optional printable evidence."""

    value: bool
    trivial: bool = False
    detail: str = ""
    labels: tuple = ()
    certificate: tuple = None
    basis: GroebnerBasis = None


def _base_basis(P, order, pair_budget, gb=None):
    if gb is not None:
        return gb
    gens = list(P.relations) if P.relations else [P.ring_zero()]
    return buchberger(gens, order, pair_budget)


def _trivial_decision(gb):
    return Decision(value=True, trivial=True, detail="the relation ideal contains 1", basis=gb)


def _minor_ideal_decision(P, size, order, pair_budget, certificates, gb):
    """1 in <relations> + <size x size minors of Ja>?"""
    ja = transposed_jacobian(P)
    zero = P.ring_zero()
    labels = [f"f{j + 1}" for j in range(P.s)]
    gens = list(P.relations)
    for rows_idx, cols_idx, m in minors(ja, size, zero):
        rows_txt = ",".join(P.variables[i] for i in rows_idx)
        cols_txt = ",".join(f"f{j + 1}" for j in cols_idx)
        labels.append(f"minor[{rows_txt}|{cols_txt}]")
        gens.append(m)
    aug = buchberger(gens, order, pair_budget, track=certificates)
    holds = contains_one(aug)
    cert = tuple(one_certificate(aug)) if certificates and holds else None
    return Decision(value=holds, labels=tuple(labels), certificate=cert, basis=aug)


def nette_decision(P, order=GREVLEX, pair_budget=DEFAULT_PAIR_BUDGET,
                   certificates=False, gb=None) -> Decision:
    """Is the presented algebra unramified (nette)?

    Tests 1 in <f> + <n x n minors of Ja>.  When s < n there are no such
    minors, so only the zero ring passes.
    """
    gb = _base_basis(P, order, pair_budget, gb)
    if contains_one(gb):
        return _trivial_decision(gb)
    if P.s < P.n:
        return Decision(
            value=False,
            detail=f"s = {P.s} < n = {P.n}: no n x n minors, determinantal ideal is 0",
            basis=gb,
        )
    return _minor_ideal_decision(P, P.n, order, pair_budget, certificates, gb)


def standard_smooth_decision(P, order=GREVLEX, pair_budget=DEFAULT_PAIR_BUDGET,
                             certificates=False, gb=None) -> Decision:
    """s <= n and the leading s x s minor of Ja invertible in the quotient.

    The leading minor uses rows X_1..X_s, so the declared variable order
    matters for this test (and only for this one).
    """
    gb = _base_basis(P, order, pair_budget, gb)
    if contains_one(gb):
        return _trivial_decision(gb)
    if P.s > P.n:
        return Decision(value=False, detail=f"s = {P.s} > n = {P.n}", basis=gb)
    ja = transposed_jacobian(P)
    zero = P.ring_zero()
    block = [row[: P.s] for row in ja[: P.s]]
    minor = det_poly_matrix(block, zero)
    holds = is_invertible_mod(minor, gb, pair_budget)
    cert = None
    if certificates and holds:
        inv = inverse_mod(minor, gb, pair_budget)
        cert = (minor, inv)
    return Decision(
        value=holds,
        detail=f"leading minor {minor.format(order)}",
        labels=("minor", "inverse"),
        certificate=cert,
        basis=gb,
    )


def elementary_smooth_decision(P, order=GREVLEX, pair_budget=DEFAULT_PAIR_BUDGET,
                               certificates=False, gb=None) -> Decision:
    """1 in <f> + <s x s minors of Ja>; false when s > n (no such minors)."""
    gb = _base_basis(P, order, pair_budget, gb)
    if contains_one(gb):
        return _trivial_decision(gb)
    if P.s > P.n:
        return Decision(
            value=False,
            detail=f"s = {P.s} > n = {P.n}: no s x s minors, determinantal ideal is 0",
            basis=gb,
        )
    return _minor_ideal_decision(P, P.s, order, pair_budget, certificates, gb)


def standard_etale_decision(P, order=GREVLEX, pair_budget=DEFAULT_PAIR_BUDGET,
                            certificates=False, gb=None) -> Decision:
    """s = n and det(Ja) invertible in the quotient."""
    gb = _base_basis(P, order, pair_budget, gb)
    if contains_one(gb):
        return _trivial_decision(gb)
    if P.s != P.n:
        return Decision(value=False, detail=f"s = {P.s} != n = {P.n}", basis=gb)
    ja = transposed_jacobian(P)
    det = det_poly_matrix(ja, P.ring_zero())
    holds = is_invertible_mod(det, gb, pair_budget)
    cert = None
    if certificates and holds:
        inv = inverse_mod(det, gb, pair_budget)
        cert = (det, inv)
    return Decision(
        value=holds,
        detail=f"det(Ja) = {det.format(order)}",
        labels=("det", "inverse"),
        certificate=cert,
        basis=gb,
    )


def is_nette(P, order=GREVLEX, pair_budget=DEFAULT_PAIR_BUDGET, gb=None) -> bool:
    return nette_decision(P, order, pair_budget, gb=gb).value


def is_standard_smooth(P, order=GREVLEX, pair_budget=DEFAULT_PAIR_BUDGET, gb=None) -> bool:
    return standard_smooth_decision(P, order, pair_budget, gb=gb).value


def is_elementary_smooth(P, order=GREVLEX, pair_budget=DEFAULT_PAIR_BUDGET, gb=None) -> bool:
    return elementary_smooth_decision(P, order, pair_budget, gb=gb).value


def is_standard_etale(P, order=GREVLEX, pair_budget=DEFAULT_PAIR_BUDGET, gb=None) -> bool:
    return standard_etale_decision(P, order, pair_budget, gb=gb).value


# ------------------------------------------------------------------ omega dimension

def omega_dimension(P, order=GREVLEX, pair_budget=DEFAULT_PAIR_BUDGET, gb=None) -> int:
    """K-vector-space dimension of the differential module.

    Only defined for zero-dimensional quotients: expand the columns of Ja
    over the standard-monomial basis of A (an (m*n) x (m*s) scalar matrix)
    and return m*n minus its rank.  The zero ring reports 0.
    """
    gb = _base_basis(P, order, pair_budget, gb)
    if contains_one(gb):
        return 0
    if noether_dimension(gb) != 0:
        raise NotZeroDimensional("omega_dimension needs a zero-dimensional quotient")
    basis = standard_monomials(gb)
    index = {m: k for k, m in enumerate(basis)}
    m = len(basis)
    K = P.field
    ja = transposed_jacobian(P)
    columns = []
    for j in range(P.s):
        for mono in basis:
            vec = [K.zero()] * (m * P.n)
            for i in range(P.n):
                shifted = ja[i][j].mul_term(mono, K.one())
                nf = normal_form(shifted, gb)
                for exps, c in nf.terms.items():
                    vec[i * m + index[exps]] = c
            columns.append(vec)
    if not columns:
        return m * P.n
    rows = [[col[r] for col in columns] for r in range(m * P.n)]
    return m * P.n - rank(rows, K)
