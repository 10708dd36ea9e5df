"""Where a Poisson structure degenerates, and what survives restriction.

The rank of a structure at a point is the rank of its skew coefficient
matrix there.  Wedge powers cut out the loci of low rank; restricting
to an invariant coordinate hyperplane shrinks the degeneracy pattern.

Run:  python3 demos/03_rank_and_degeneracy.py
"""

from poissonkit import (DiagonalSpec, GaussRational, chart_extend,
                        degeneracy_divisor, degeneracy_ideal,
                        invariant_hypersurface, jacobi_check, make_diagonal,
                        parse_polynomial, rank_at, restrict_hyperplane)

spec = DiagonalSpec(4, {
    (1, 2): GaussRational(2), (1, 3): GaussRational(3),
    (1, 4): GaussRational(5), (2, 3): GaussRational(7),
    (2, 4): GaussRational(11), (3, 4): GaussRational(13)})
ps = make_diagonal(spec)
T = ps.table

# Rank drops as the point meets more coordinate hyperplanes.
points = [
    ("generic", {"x1": 1, "x2": 1, "x3": 1, "x4": 1}),
    ("one hyperplane", {"x1": 0, "x2": 1, "x3": 1, "x4": 1}),
    ("three hyperplanes", {"x1": 0, "x2": 0, "x3": 0, "x4": 1}),
    ("origin", {"x1": 0, "x2": 0, "x3": 0, "x4": 0}),
]
for label, raw in points:
    point = {k: GaussRational(v) for k, v in raw.items()}
    print(f"rank at {label:<18}=", rank_at(ps, point))

# The degeneracy ideal I_2k is generated by the coefficients of the
# (k+1)-st wedge power; its zero set is where the rank is at most 2k.
ideal = degeneracy_ideal(ps, 2)
print("\nI_2 generators:")
for g in ideal.generators:
    print("   ", g)

# The divisorial summary of the top degeneracy locus: the ambient
# structure degenerates exactly along the union of all four coordinate
# hyperplanes.
divisor = degeneracy_divisor(ps)
print("degeneracy support:", divisor.support_product,
      f"({divisor.support_size()} factors)")

# Coordinate hyperplanes are invariant, so restriction makes sense; a
# generic linear function is not invariant.
print("\n{x4 = 0} invariant:",
      invariant_hypersurface(ps, parse_polynomial("x4", T)))
print("{x1 + x2 = 0} invariant:",
      invariant_hypersurface(ps, parse_polynomial("x1 + x2", T)))

restricted = restrict_hyperplane(ps, "x4")
print("restricted coordinates:", restricted.table.coordinates)
print("restricted degeneracy support:",
      degeneracy_divisor(restricted).support_product)

# Quadratic diagonal structures extend across the charts of projective
# space.  Chart 2 swaps in the hyperplane coordinate x0 and keeps the
# Jacobi identity on the nose.
other = chart_extend(ps, 2)
print("\nchart 2 coordinates:", other.table.coordinates)
print("chart 2 jacobi_check:", jacobi_check(other))
