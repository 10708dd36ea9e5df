"""Elementary polynomial automorphisms and pushforward of multivectors.

Three invertible kinds are provided: translation of one coordinate by a
constant, invertible diagonal scaling, and a triangular shear adding a
polynomial in strictly later coordinates.  Each stores an exact inverse,
so pushforwards stay inside polynomial arithmetic.  "Constant" data may
involve parameters (a deformation parameter t, say) but no coordinates.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .polynomials import Polynomial, VariableTable
from .scalars import GaussRational
from .multivectors import Multivector


class ElementaryAutomorphism:
    """Base class; subclasses fill in forward/inverse images."""

    kind = "identity"

    def __init__(self, table: VariableTable):
        self.table = table

    def forward_images(self) -> dict:
        """Coordinate name -> image Polynomial under the map."""
        return {}

    def inverse_images(self) -> dict:
        return {}

    def inverse(self) -> "ElementaryAutomorphism":
        raise NotImplementedError

    def apply_point(self, values: Mapping[str, object]) -> dict:
        """Push an exact point forward; parameters pass through."""
        out = dict(values)
        for name, image in self.forward_images().items():
            out[name] = image.evaluate(values)
        return out

    def __repr__(self):
        return f"<{type(self).__name__} on {self.table.coordinates}>"


def _constant_in_coordinates(data: Polynomial):
    if data.coordinate_degree() > 0:
        raise ValueError("translation amount must not involve coordinates")


class Translation(ElementaryAutomorphism):
    """x_c -> x_c + amount, amount free of coordinates."""

    kind = "translation"

    def __init__(self, table: VariableTable, coordinate: str, amount: Polynomial):
        super().__init__(table)
        if not table.is_coordinate(coordinate):
            raise KeyError(f"not a coordinate: {coordinate!r}")
        if amount.table != table:
            raise ValueError("amount on a different variable table")
        _constant_in_coordinates(amount)
        self.coordinate = coordinate
        self.amount = amount

    def forward_images(self):
        x = Polynomial.variable(self.table, self.coordinate)
        return {self.coordinate: x + self.amount}

    def inverse_images(self):
        x = Polynomial.variable(self.table, self.coordinate)
        return {self.coordinate: x - self.amount}

    def inverse(self):
        return Translation(self.table, self.coordinate, -self.amount)


class DiagonalScaling(ElementaryAutomorphism):
    """x_k -> s_k * x_k with nonzero exact scales (default 1)."""

    kind = "scaling"

    def __init__(self, table: VariableTable, scales: Mapping[str, object]):
        super().__init__(table)
        cleaned = {}
        for name, value in scales.items():
            if not table.is_coordinate(name):
                raise KeyError(f"not a coordinate: {name!r}")
            if not isinstance(value, GaussRational):
                value = GaussRational(value)
            if value.is_zero():
                raise ValueError(f"scale for {name} must be nonzero")
            cleaned[name] = value
        self.scales = cleaned

    def forward_images(self):
        return {
            name: Polynomial.variable(self.table, name).scale(s)
            for name, s in self.scales.items()
        }

    def inverse_images(self):
        one = GaussRational.one()
        return {
            name: Polynomial.variable(self.table, name).scale(one / s)
            for name, s in self.scales.items()
        }

    def inverse(self):
        one = GaussRational.one()
        return DiagonalScaling(self.table, {n: one / s for n, s in self.scales.items()})


class TriangularShear(ElementaryAutomorphism):
    """x_c -> x_c + g where g involves strictly later coordinates only."""

    kind = "shear"

    def __init__(self, table: VariableTable, coordinate: str, shear: Polynomial):
        super().__init__(table)
        if not table.is_coordinate(coordinate):
            raise KeyError(f"not a coordinate: {coordinate!r}")
        if shear.table != table:
            raise ValueError("shear on a different variable table")
        pos = table.coordinates.index(coordinate)
        allowed = set(table.coordinates[pos + 1:]) | set(table.parameters)
        used = shear.variables_present()
        if not used <= allowed:
            raise ValueError("shear must involve strictly later coordinates only")
        self.coordinate = coordinate
        self.shear = shear

    def forward_images(self):
        x = Polynomial.variable(self.table, self.coordinate)
        return {self.coordinate: x + self.shear}

    def inverse_images(self):
        x = Polynomial.variable(self.table, self.coordinate)
        return {self.coordinate: x - self.shear}

    def inverse(self):
        return TriangularShear(self.table, self.coordinate, -self.shear)


def _odd_images(phi: ElementaryAutomorphism) -> dict:
    # xi_k  ->  sum_j (d phi_j / d x_k at the inverse image) xi_j
    table = phi.table
    forward = phi.forward_images()
    backward = phi.inverse_images()
    images = {}
    for k, name in enumerate(table.coordinates):
        comps = {}
        for j, target in enumerate(table.coordinates):
            image = forward.get(target)
            if image is None:
                entry = Polynomial.one(table) if j == k else Polynomial.zero(table)
            else:
                entry = image.partial_derivative(name)
                if not entry.is_constant():
                    entry = entry.substitute(backward)
            if not entry.is_zero():
                comps[(j,)] = entry
        images[k] = Multivector(table, 1, comps)
    return images


def pushforward(phi, a: Multivector) -> Multivector:
    """Pushforward of a multivector.

    `phi` is an ElementaryAutomorphism or a sequence of them applied in
    order (first element acts first).
    """
    if isinstance(phi, Sequence):
        out = a
        for step in phi:
            out = pushforward(step, out)
        return out
    table = a.table
    if phi.table != table:
        raise ValueError("automorphism and multivector on different tables")
    backward = phi.inverse_images()
    odd = _odd_images(phi)
    total = Multivector.zero(table, a.degree)
    for indices, coeff in a.terms.items():
        piece = Multivector.from_polynomial(coeff.substitute(backward))
        for k in indices:
            piece = piece.wedge(odd[k])
        total = total + piece
    return total
