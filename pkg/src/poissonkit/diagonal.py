"""Diagonal Poisson structures and their exact invariants.

A diagonal structure is Pi = sum_{i<j} lambda_ij x_i x_j xi_i^xi_j.  The
skew matrix Lambda = (lambda_ij) carries every invariant used here: the
Pfaffian controls the degeneracy divisor, the row sums mu_i are the curl
eigenvalues, and for odd n the kernel of Lambda gives the residues of
the annihilating logarithmic 1-form.

"Generic" sampling draws integers from [-10^6, 10^6] and resamples until
Pf(Lambda) != 0 (even n) and the mu_i are nonzero and pairwise distinct.
Z-linear independence of the mu_i is assumed, not certified.
"""

from __future__ import annotations

import random

from .multivectors import DifferentialForm, Multivector
from .polynomials import Polynomial, VariableTable
from .scalars import GaussRational
from .structures import PoissonStructure, jacobi_check


class DiagonalSpec:
    """Strictly upper-triangular data lambda_ij, 1 <= i < j <= n.

    Entries are GaussRational scalars or parameter-name strings; the two
    may be mixed.  Missing entries are zero.
    """

    def __init__(self, n: int, entries):
        if n < 1:
            raise ValueError("need at least one coordinate")
        cleaned = {}
        for (i, j), value in dict(entries).items():
            if not (1 <= i < j <= n):
                raise ValueError(f"entry ({i},{j}) out of range for n={n}")
            if isinstance(value, str):
                cleaned[(i, j)] = value
            else:
                if not isinstance(value, GaussRational):
                    value = GaussRational(value)
                if not value.is_zero():
                    cleaned[(i, j)] = value
        self.n = n
        self.entries = cleaned

    @classmethod
    def symbolic(cls, n: int, prefix: str = "l") -> "DiagonalSpec":
        return cls(n, {(i, j): f"{prefix}{i}{j}"
                       for i in range(1, n + 1) for j in range(i + 1, n + 1)})

    def is_numeric(self) -> bool:
        return all(not isinstance(v, str) for v in self.entries.values())

    def parameter_names(self) -> tuple:
        seen = []
        for key in sorted(self.entries):
            value = self.entries[key]
            if isinstance(value, str) and value not in seen:
                seen.append(value)
        return tuple(seen)

    def table(self) -> VariableTable:
        coords = tuple(f"x{k}" for k in range(1, self.n + 1))
        return VariableTable(coords, self.parameter_names())

    def entry_scalar(self, i: int, j: int):
        """lambda_ij for i != j as a scalar; None if symbolic."""
        sign = 1
        if i > j:
            i, j = j, i
            sign = -1
        value = self.entries.get((i, j), GaussRational.zero())
        if isinstance(value, str):
            return None
        return value if sign > 0 else -value

    def entry_polynomial(self, table: VariableTable, i: int, j: int) -> Polynomial:
        sign = 1
        if i > j:
            i, j = j, i
            sign = -1
        value = self.entries.get((i, j))
        if value is None:
            return Polynomial.zero(table)
        if isinstance(value, str):
            poly = Polynomial.variable(table, value)
        else:
            poly = Polynomial.constant(table, value)
        return poly if sign > 0 else -poly

    def lambda_matrix(self, table: VariableTable = None) -> list:
        if table is None:
            table = self.table()
        return [
            [self.entry_polynomial(table, i, j) for j in range(1, self.n + 1)]
            for i in range(1, self.n + 1)
        ]

    def restrict(self, drop: int) -> "DiagonalSpec":
        """Spec on the complementary coordinates of x_drop (renumbered)."""
        if not 1 <= drop <= self.n:
            raise ValueError("coordinate index out of range")
        keep = [k for k in range(1, self.n + 1) if k != drop]
        remap = {old: new + 1 for new, old in enumerate(keep)}
        entries = {
            (remap[i], remap[j]): v
            for (i, j), v in self.entries.items()
            if i != drop and j != drop
        }
        return DiagonalSpec(self.n - 1, entries)

    def __eq__(self, other):
        if not isinstance(other, DiagonalSpec):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __repr__(self):
        return f"<DiagonalSpec n={self.n} with {len(self.entries)} entries>"


def make_diagonal(spec: DiagonalSpec) -> PoissonStructure:
    """Build the structure and verify integrability for real."""
    table = spec.table()
    terms = {}
    for (i, j), value in sorted(spec.entries.items()):
        coeff = spec.entry_polynomial(table, i, j) * Polynomial.monomial(
            table, {f"x{i}": 1, f"x{j}": 1})
        if not coeff.is_zero():
            terms[(i - 1, j - 1)] = coeff
    ps = PoissonStructure(Multivector(table, 2, terms))
    jacobi_check(ps)
    return ps


def pfaffian(matrix: list):
    """Signed perfect-matching sum, expanding along the first row.

    Only entries above the diagonal are read, so skewness is implicit.
    Entries may be scalars or Polynomials (any ring with + - *).
    """
    size = len(matrix)
    for row in matrix:
        if len(row) != size:
            raise ValueError("matrix must be square")
    if size % 2 != 0:
        raise ValueError("pfaffian needs even size")

    def entry(i, j):
        return matrix[i][j] if i < j else -matrix[j][i]

    cache = {}

    def rec(indices: tuple):
        if not indices:
            return 1
        got = cache.get(indices)
        if got is not None:
            return got
        first = indices[0]
        rest = indices[1:]
        total = None
        for pos, j in enumerate(rest):
            remaining = rest[:pos] + rest[pos + 1:]
            piece = entry(first, j) * rec(remaining)
            if pos % 2:
                piece = -piece
            total = piece if total is None else total + piece
        cache[indices] = total
        return total

    return rec(tuple(range(size)))


class CurlEigenvalues:
    """The scalars mu_i with curl(Pi) = sum_i mu_i x_i xi_i; they sum to 0."""

    def __init__(self, mu):
        self.mu = tuple(mu)
        total = self.mu[0]
        for value in self.mu[1:]:
            total = total + value
        if not total.is_zero():
            raise ValueError("curl eigenvalues must sum to zero")

    def __iter__(self):
        return iter(self.mu)

    def __len__(self):
        return len(self.mu)

    def __getitem__(self, k):
        return self.mu[k]

    def __repr__(self):
        return f"<CurlEigenvalues {[str(m) for m in self.mu]}>"


def curl_eigenvalues(spec: DiagonalSpec) -> CurlEigenvalues:
    """mu_i = sum_{j>i} lambda_ij - sum_{j<i} lambda_ji."""
    table = spec.table()
    mu = []
    for i in range(1, spec.n + 1):
        acc = Polynomial.zero(table)
        for j in range(1, spec.n + 1):
            if j > i:
                acc = acc + spec.entry_polynomial(table, i, j)
            elif j < i:
                acc = acc - spec.entry_polynomial(table, j, i)
        mu.append(acc)
    return CurlEigenvalues(mu)


class LogForm:
    """The 1-form sum_i residues_i dx_i/x_i annihilating the image of Pi."""

    def __init__(self, table: VariableTable, residues,
                 holomorphic_part: DifferentialForm = None):
        self.table = table
        self.residues = tuple(residues)
        if holomorphic_part is None:
            holomorphic_part = DifferentialForm.zero(table, 1)
        self.holomorphic_part = holomorphic_part

    def cleared_form(self) -> DifferentialForm:
        """x1...xn times the form: a polynomial 1-form."""
        n = self.table.n_coordinates
        terms = {}
        for i, res in enumerate(self.residues):
            others = Polynomial.monomial(
                self.table,
                {name: 1 for k, name in enumerate(self.table.coordinates) if k != i})
            coeff = others * res
            if not coeff.is_zero():
                terms[(i,)] = coeff
        return DifferentialForm(self.table, 1, terms) + self.holomorphic_part * (
            Polynomial.monomial(self.table,
                                {name: 1 for name in self.table.coordinates}))

    def __repr__(self):
        return f"<LogForm residues {[str(r) for r in self.residues]}>"


def log_annihilator(spec: DiagonalSpec) -> LogForm:
    """Kernel log form for odd n via signed sub-Pfaffians.

    residues_i = (-1)^i Pf(Lambda with row/column i removed); for a
    numeric spec they are normalized so the first nonzero residue is 1.
    """
    if spec.n % 2 == 0:
        raise ValueError("log annihilator needs an odd number of coordinates")
    table = spec.table()
    matrix = spec.lambda_matrix(table)
    residues = []
    for i in range(spec.n):
        minor = [
            [matrix[r][c] for c in range(spec.n) if c != i]
            for r in range(spec.n) if r != i
        ]
        value = pfaffian(minor)
        if not isinstance(value, Polynomial):
            value = Polynomial.constant(table, value)
        residues.append(value if i % 2 == 0 else -value)
    if all(r.is_zero() for r in residues):
        raise ValueError("non-generic spec")
    if spec.is_numeric():
        lead = next(r for r in residues if not r.is_zero()).constant_value()
        inv = GaussRational.one() / lead
        residues = [r.scale(inv) for r in residues]
    return LogForm(table, residues)


def is_generic(spec: DiagonalSpec) -> bool:
    """Pf != 0 for even n (rank n-1 for odd n), mu_i nonzero and distinct."""
    if not spec.is_numeric():
        raise ValueError("genericity check needs numeric entries")
    table = spec.table()
    if spec.n % 2 == 0:
        if pfaffian(spec.lambda_matrix(table)).is_zero():
            return False
    else:
        try:
            log_annihilator(spec)
        except ValueError:
            return False
    mu = [m.constant_value() for m in curl_eigenvalues(spec)]
    if any(m.is_zero() for m in mu):
        return False
    return len({(m.re, m.im) for m in mu}) == len(mu)


def random_generic_spec(n: int, rng: random.Random, bound: int = 10 ** 6,
                        max_tries: int = 200) -> DiagonalSpec:
    for _ in range(max_tries):
        entries = {}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                value = 0
                while value == 0:
                    value = rng.randint(-bound, bound)
                entries[(i, j)] = GaussRational(value)
        spec = DiagonalSpec(n, entries)
        if is_generic(spec):
            return spec
    raise RuntimeError("could not sample a generic spec")
