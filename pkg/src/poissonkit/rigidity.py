"""The two finite combinatorial arguments behind diagonality.

First: a quadratic bivector with all coordinate hyperplanes invariant
must be diagonal.  The unknowns a_ij^kl (i <= j, k < l) are the
coefficients of a general quadratic bivector; requiring that the
Hamiltonian field of each x_m leave every {x_m' = 0} invariant yields a
homogeneous linear system whose solution space is spanned by the
diagonal monomials x_m x_m' xi_m^xi_m'.

Second: a homogeneous polynomial of degree k+1 in k+1 variables whose
second partials all vanish identically is a multiple of the unique
square-free monomial x_0...x_k.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from . import linalg
from .multivectors import Multivector, contract, exterior_derivative
from .polynomials import Polynomial, VariableTable, reduce_mod
from .scalars import GaussRational


def _unknown_name(i, j, k, l):
    return f"a{i}{j}_{k}{l}"


class RigiditySystem:
    """Homogeneous exact linear constraints on the a_ij^kl unknowns."""

    def __init__(self, N: int, unknowns, rows, table: VariableTable,
                 bivector: Multivector):
        self.N = N
        self.unknowns = tuple(unknowns)  # (i, j, k, l) quadruples
        self.rows = rows                 # sparse column -> scalar maps
        self.table = table
        self.bivector = bivector         # the general symbolic bivector

    @property
    def n_unknowns(self) -> int:
        return len(self.unknowns)

    def satisfied_by(self, vector) -> bool:
        """Check an assignment (dense scalar list) against every row."""
        zero = GaussRational.zero()
        for row in self.rows:
            acc = zero
            for col, coeff in row.items():
                acc = acc + coeff * vector[col]
            if not acc.is_zero():
                return False
        return True

    def diagonal_vector(self, m: int, mp: int):
        """Indicator assignment of the diagonal unknown a_mm'^mm'."""
        if m > mp:
            m, mp = mp, m
        target = (m, mp, m, mp)
        one = GaussRational.one()
        zero = GaussRational.zero()
        return [one if u == target else zero for u in self.unknowns]

    def __repr__(self):
        return (f"<RigiditySystem N={self.N} unknowns={self.n_unknowns} "
                f"constraints={len(self.rows)}>")


def diagonality_constraints(N: int) -> RigiditySystem:
    """Invariance of all coordinate hyperplanes as a linear system."""
    if N < 2:
        raise ValueError("need at least two coordinates")
    unknowns = [
        (i, j, k, l)
        for i in range(1, N + 1) for j in range(i, N + 1)
        for k in range(1, N + 1) for l in range(k + 1, N + 1)
    ]
    column = {u: idx for idx, u in enumerate(unknowns)}
    coords = tuple(f"x{m}" for m in range(1, N + 1))
    params = tuple(_unknown_name(*u) for u in unknowns)
    table = VariableTable(coords, params)
    terms = {}
    for (i, j, k, l) in unknowns:
        coeff = Polynomial.monomial(
            table, {_unknown_name(i, j, k, l): 1, f"x{i}": 1}) * Polynomial.monomial(
            table, {f"x{j}": 1})
        key = (k - 1, l - 1)
        terms[key] = terms.get(key, Polynomial.zero(table)) + coeff
    bivector = Multivector(table, 2, terms)

    n_coords = len(coords)
    rows = []
    seen = set()
    for m in range(1, N + 1):
        field = contract(
            exterior_derivative(Polynomial.variable(table, f"x{m}")), bivector)
        for mp in range(1, N + 1):
            if mp == m:
                continue
            component = field.coefficient((mp - 1,))
            _, remainder = reduce_mod(
                component, Polynomial.variable(table, f"x{mp}"))
            grouped = {}
            for exps, value in remainder.terms.items():
                # each term is linear in exactly one unknown
                param_part = exps[n_coords:]
                hot = param_part.index(1)
                grouped.setdefault(exps[:n_coords], {})[hot] = value
            for key in sorted(grouped):
                row = grouped[key]
                fingerprint = tuple(sorted(
                    (c, v.re, v.im) for c, v in row.items()))
                if fingerprint not in seen:
                    seen.add(fingerprint)
                    rows.append(row)
    return RigiditySystem(N, unknowns, rows, table, bivector)


def solve_rigidity(system: RigiditySystem):
    """Exact nullspace basis, certified diagonal.

    Returns (dimension, basis) where basis is a list of monomial
    bivectors x_m x_m' xi_m ^ xi_m'.  A non-diagonal basis vector raises
    with a diagnostic; that would falsify the implementation.
    """
    vectors = linalg.nullspace(system.rows, system.n_unknowns)
    basis = []
    coords = tuple(f"x{m}" for m in range(1, system.N + 1))
    table = VariableTable(coords, ())
    for vec in vectors:
        support = [idx for idx, v in enumerate(vec) if not v.is_zero()]
        quads = [system.unknowns[idx] for idx in support]
        diagonal = (
            len(support) == 1
            and vec[support[0]].is_one()
            and {quads[0][0], quads[0][1]} == {quads[0][2], quads[0][3]}
        )
        if not diagonal:
            raise AssertionError(
                f"non-diagonal nullspace vector on unknowns {quads}")
        _, _, k, l = quads[0]
        basis.append(Multivector(
            table, 2,
            {(k - 1, l - 1): Polynomial.monomial(table, {f"x{k}": 1, f"x{l}": 1})}))
    return len(vectors), basis


class MonomialSurvivors:
    """Degree-(k+1) exponent tuples passing the multiplicity filter."""

    def __init__(self, k: int, survivors, total: int):
        self.k = k
        self.survivors = tuple(survivors)
        self.total = total
        if len(self.survivors) == 1 and any(
                e > 1 for e in self.survivors[0]):
            raise AssertionError("unique survivor must be square-free")

    def __repr__(self):
        return (f"<MonomialSurvivors k={self.k}: {len(self.survivors)} of "
                f"{self.total}>")


def simplex_multiplicity_filter(k: int) -> MonomialSurvivors:
    """Keep degree-(k+1) monomials in x_0..x_k with all second partials zero."""
    if k < 1:
        raise ValueError("k must be at least 1")
    nvars = k + 1
    survivors = []
    total = 0
    for combo in combinations_with_replacement(range(nvars), k + 1):
        total += 1
        exps = [0] * nvars
        for v in combo:
            exps[v] += 1
        if all(e <= 1 for e in exps):
            survivors.append(tuple(exps))
    return MonomialSurvivors(k, survivors, total)


def check_multiplicity(f: Polynomial, k: int) -> bool:
    """True iff every second partial of f vanishes identically.

    f must be homogeneous of degree k+1; a true result certifies f is a
    scalar multiple of the square-free product of its k+1 variables.
    """
    if f.is_zero() or f.homogeneous_degree() != k + 1:
        raise ValueError("input must be homogeneous of degree k+1")
    for name in f.table.coordinates:
        second = f.partial_derivative(name).partial_derivative(name)
        if not second.is_zero():
            return False
    square_free = all(
        all(e <= 1 for e in exps[:f.table.n_coordinates]) for exps in f.terms)
    if not square_free:
        raise AssertionError("vanishing second partials force a square-free form")
    return True
