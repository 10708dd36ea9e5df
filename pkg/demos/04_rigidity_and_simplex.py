"""Counting the quadratic structures that keep every hyperplane invariant.

The rigidity system collects the linear constraints forcing each
coordinate hyperplane of an N-coordinate space to stay invariant under
a quadratic bivector.  Its exact nullspace is spanned by the diagonal
monomial bivectors, so the solution space has dimension N choose 2 and
nothing else survives.

Run:  python3 demos/04_rigidity_and_simplex.py
"""

from math import comb

from poissonkit import (VariableTable, check_multiplicity,
                        diagonality_constraints, parse_polynomial,
                        simplex_multiplicity_filter, solve_rigidity)

for N in range(2, 7):
    system = diagonality_constraints(N)
    dimension, basis = solve_rigidity(system)
    print(f"N = {N}: {system.n_unknowns:4d} unknowns, solution dimension "
          f"{dimension} = C({N},2) = {comb(N, 2)}")

# The basis vectors are the individual diagonal terms x_k x_l d_k ^ d_l.
_, basis = solve_rigidity(diagonality_constraints(3))
print("\nN = 3 basis:")
for vector in basis:
    print("   ", vector)

# The companion counting fact: among all monomials of degree k+1 in
# k+1 variables, exactly one meets every hyperplane of the simplex with
# multiplicity at most k, namely the square-free product.
print()
for k in range(1, 7):
    result = simplex_multiplicity_filter(k)
    survivor = result.survivors[0]
    text = "*".join(f"x{i}" for i, e in enumerate(survivor) for _ in range(e))
    print(f"k = {k}: {len(result.survivors)} of {result.total} "
          f"monomials survive -> {text}")

# The multiplicity test behind the filter, on explicit polynomials.
T = VariableTable(tuple(f"x{i}" for i in range(4)))
print()
for text in ("x0*x1*x2*x3", "x0^2*x1*x2", "x0^4"):
    f = parse_polynomial(text, T)
    print(f"multiplicity <= 3 everywhere for {text}:",
          check_multiplicity(f, 3))
