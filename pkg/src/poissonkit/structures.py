"""Poisson structures: integrability, brackets, degeneracy, restriction,
hypersurface invariance, and projective chart transitions.

A PoissonStructure wraps a degree-2 multivector together with a
tri-state integrability flag (True / False / None for unchecked); the
flag is only ever set from an actual Schouten computation.
"""

from __future__ import annotations

from typing import Mapping

from .linalg import dense_rank
from .multivectors import Multivector, contract, exterior_derivative, schouten
from .polynomials import Polynomial, VariableTable, reduce_mod


class PoissonStructure:
    """Bivector with a verified-integrability flag."""

    def __init__(self, bivector: Multivector, integrable=None):
        if not isinstance(bivector, Multivector) or bivector.degree != 2:
            raise ValueError("a Poisson structure needs a degree-2 multivector")
        self.bivector = bivector
        self.integrable = integrable  # True / False / None

    @property
    def table(self) -> VariableTable:
        return self.bivector.table

    def matrix_entry(self, i: int, j: int) -> Polynomial:
        """Coefficient pi_ij with skew symmetry filled in."""
        if i == j:
            return Polynomial.zero(self.table)
        if i < j:
            return self.bivector.coefficient((i, j))
        return -self.bivector.coefficient((j, i))

    def __repr__(self):
        state = {True: "integrable", False: "non-integrable", None: "unchecked"}
        return f"<PoissonStructure {state[self.integrable]} {self.bivector!r}>"


def jacobi_check(ps: PoissonStructure) -> Multivector:
    """Return [Pi, Pi] and record integrability on the structure."""
    result = schouten(ps.bivector, ps.bivector)
    ps.integrable = result.is_zero()
    return result


def hamiltonian(ps: PoissonStructure, f: Polynomial) -> Multivector:
    """Vector field contract(df, Pi)."""
    return contract(exterior_derivative(f), ps.bivector)


def poisson_bracket(ps: PoissonStructure, f: Polynomial, g: Polynomial) -> Polynomial:
    """{f, g}: the Hamiltonian field of f applied to g."""
    return contract(exterior_derivative(g), hamiltonian(ps, f)).scalar()


def wedge_power(a: Multivector, k: int) -> Multivector:
    if k < 0:
        raise ValueError("negative wedge power")
    out = Multivector.from_polynomial(Polynomial.one(a.table))
    for _ in range(k):
        out = out.wedge(a)
    return out


class DegeneracyIdeal:
    """Coefficients of Pi^(k/2+1), the locus where rank <= k."""

    def __init__(self, k: int, generators):
        self.k = k
        self.generators = tuple(generators)

    def __repr__(self):
        return f"<DegeneracyIdeal k={self.k} with {len(self.generators)} generators>"


def degeneracy_ideal(ps: PoissonStructure, two_k: int) -> DegeneracyIdeal:
    n = ps.table.n_coordinates
    if two_k % 2 != 0 or two_k < 0 or two_k >= 2 * (n // 2):
        raise ValueError(f"degeneracy order must be even in [0, {2 * (n // 2) - 2}]")
    power = wedge_power(ps.bivector, two_k // 2 + 1)
    generators = [power.coefficient(ix) for ix in sorted(power.terms)]
    return DegeneracyIdeal(two_k, generators)


class DivisorData:
    """Divisorial summary of the top nonvanishing degeneracy ideal.

    `support_product` is the square-free product of every coordinate
    appearing in some generator; `monomial_gcd` is the largest monomial
    in the coordinates dividing all generators.  The gcd certifies the
    actual divisorial part; a gcd of 1 with nonempty support shows the
    degeneracy locus has no divisorial component through the origin
    beyond the listed support pattern.
    """

    def __init__(self, power: int, generators, support_product: Polynomial,
                 monomial_gcd: Polynomial):
        self.power = power
        self.generators = tuple(generators)
        self.support_product = support_product
        self.monomial_gcd = monomial_gcd

    def support_size(self) -> int:
        return len(self.support_product.variables_present())


def degeneracy_divisor(ps: PoissonStructure) -> DivisorData:
    table = ps.table
    n = table.n_coordinates
    top = None
    power = wedge_power(ps.bivector, 1)
    k = 1
    while k <= n // 2 and not power.is_zero():
        top = power
        power = power.wedge(ps.bivector)
        k += 1
    if top is None:
        raise ValueError("zero structure has no degeneracy divisor")
    generators = [top.coefficient(ix) for ix in sorted(top.terms)]
    support = set()
    gcd_exps = None
    n_coords = table.n_coordinates
    for g in generators:
        support |= {v for v in g.variables_present() if table.is_coordinate(v)}
        for exps in g.terms:
            coords = exps[:n_coords]
            gcd_exps = coords if gcd_exps is None else tuple(
                min(a, b) for a, b in zip(gcd_exps, coords))
    support_product = Polynomial.monomial(
        table, {name: 1 for name in sorted(support, key=table.slot)})
    monomial_gcd = Polynomial.monomial(
        table, {table.coordinates[i]: e for i, e in enumerate(gcd_exps) if e})
    return DivisorData(k - 1, generators, support_product, monomial_gcd)


def rank_at(ps: PoissonStructure, point: Mapping[str, object]) -> int:
    """Rank of the skew coefficient matrix at an exact point."""
    n = ps.table.n_coordinates
    matrix = [
        [ps.matrix_entry(i, j).evaluate(point) for j in range(n)]
        for i in range(n)
    ]
    return dense_rank(matrix)


def invariant_hypersurface(ps: PoissonStructure, f: Polynomial) -> bool:
    """True iff {x_m, f} lies in (f) for every coordinate x_m."""
    if f.is_zero():
        raise ValueError("zero polynomial does not define a hypersurface")
    for name in ps.table.coordinates:
        x = Polynomial.variable(ps.table, name)
        _, remainder = reduce_mod(poisson_bracket(ps, x, f), f)
        if not remainder.is_zero():
            return False
    return True


def restrict_hyperplane(ps: PoissonStructure, coordinate) -> PoissonStructure:
    """Induced structure on {x_i = 0} for an invariant coordinate hyperplane."""
    table = ps.table
    if isinstance(coordinate, int):
        coordinate = table.coordinates[coordinate]
    if not table.is_coordinate(coordinate):
        raise KeyError(f"not a coordinate: {coordinate!r}")
    if not invariant_hypersurface(ps, Polynomial.variable(table, coordinate)):
        raise ValueError("not a Poisson hypersurface")
    pos = table.coordinates.index(coordinate)
    new_table = table.drop_coordinate(coordinate)
    new_terms = {}
    for indices, coeff in ps.bivector.terms.items():
        if pos in indices:
            continue
        new_indices = tuple(i - 1 if i > pos else i for i in indices)
        kept = {}
        for exps, c in coeff.terms.items():
            if exps[pos]:
                continue
            kept[exps[:pos] + exps[pos + 1:]] = c
        poly = Polynomial(new_table, kept)
        if not poly.is_zero():
            new_terms[new_indices] = poly
    restricted = PoissonStructure(Multivector(new_table, 2, new_terms))
    jacobi_check(restricted)
    return restricted


def chart_transition(biv: Multivector, names: tuple, source: int,
                     target: int) -> Multivector:
    """Push a bivector between affine charts of projective space.

    `names` lists the n+1 homogeneous coordinate labels; the chart with
    index c has affine coordinates names-without-names[c] in order.  The
    input lives on chart `source`; the result lives on chart `target`.
    Raises ValueError("does not extend") if the pushforward has a pole.
    """
    n = len(names) - 1
    table = biv.table
    expected = tuple(nm for i, nm in enumerate(names) if i != source)
    if table.coordinates != expected:
        raise ValueError("bivector table does not match the source chart")
    if source == target:
        return biv
    target_coords = tuple(nm for i, nm in enumerate(names) if i != target)
    ttable = VariableTable(target_coords, table.parameters)
    hom = [i for i in range(n + 1) if i != source]  # source pos -> hom index
    tslot = {m: target_coords.index(names[m]) for m in range(n + 1) if m != target}
    anchor = tslot[source]  # slot of z_a = 1/y_b in the target chart

    def coefficient_parts(poly: Polynomial) -> dict:
        # split f(y(z)) into denominator-power -> polynomial numerator
        parts = {}
        n_params = table.n_parameters
        for exps, c in poly.terms.items():
            new = [0] * ttable.width
            degree = 0
            for k in range(n):
                e = exps[k]
                if not e:
                    continue
                degree += e
                if hom[k] != target:
                    new[tslot[hom[k]]] += e
            for j in range(n_params):
                new[ttable.n_coordinates + j] = exps[n + j]
            parts.setdefault(degree, {})[tuple(new)] = c
        return {d: Polynomial(ttable, terms) for d, terms in parts.items()}

    xi_images = {}
    z_a = Polynomial.variable(ttable, names[source])
    for k in range(n):
        m = hom[k]
        if m != target:
            xi_images[k] = Multivector(ttable, 1, {(tslot[m],): z_a})
        else:
            comps = {}
            for mm in range(n + 1):
                if mm == target:
                    continue
                comps[(tslot[mm],)] = -z_a * Polynomial.variable(ttable, names[mm])
            xi_images[k] = Multivector(ttable, 1, comps)

    by_power = {}
    for indices, coeff in biv.terms.items():
        wedge_part = Multivector.from_polynomial(Polynomial.one(ttable))
        for k in indices:
            wedge_part = wedge_part.wedge(xi_images[k])
        for d, numerator in coefficient_parts(coeff).items():
            piece = wedge_part * numerator
            by_power[d] = by_power.get(d, Multivector.zero(ttable, 2)) + piece
    if not by_power:
        return Multivector.zero(ttable, 2)
    top = max(by_power)
    total = Multivector.zero(ttable, 2)
    for d, part in by_power.items():
        total = total + part * (z_a ** (top - d))
    # divide through by z_a^top, monomial by monomial
    new_terms = {}
    for indices, coeff in total.terms.items():
        divided = {}
        for exps, c in coeff.terms.items():
            if exps[anchor] < top:
                raise ValueError("does not extend")
            divided[exps[:anchor] + (exps[anchor] - top,) + exps[anchor + 1:]] = c
        new_terms[indices] = Polynomial(ttable, divided)
    return Multivector(ttable, 2, new_terms)


def chart_extend(ps: PoissonStructure, target: int,
                 chart_zero_name: str = "x0") -> PoissonStructure:
    """Extend a chart-0 structure on projective space to chart `target`.

    The structure's coordinates are read as X_1/X_0 .. X_n/X_0; the new
    chart gets the same labels plus `chart_zero_name` for X_0/X_target.
    """
    table = ps.table
    n = table.n_coordinates
    if not 0 <= target <= n:
        raise ValueError(f"chart index must lie in 0..{n}")
    if target == 0:
        return ps
    name = chart_zero_name
    if name in table.names:
        name = "u0"
    if name in table.names:
        raise ValueError("no free name for the chart-zero coordinate")
    names = (name,) + table.coordinates
    moved = chart_transition(ps.bivector, names, 0, target)
    return PoissonStructure(moved, ps.integrable)
