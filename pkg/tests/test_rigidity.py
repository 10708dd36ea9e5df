"""Invariance constraints on quadratic bivectors and the simplex filter."""

from math import comb

import pytest

from poissonkit import (PoissonStructure, VariableTable, check_multiplicity,
                        diagonality_constraints, jacobi_check,
                        parse_polynomial, simplex_multiplicity_filter,
                        solve_rigidity)


def test_unknown_count():
    system = diagonality_constraints(5)
    # one unknown per (monomial with i <= j) x (wedge slot k < l)
    assert system.n_unknowns == 15 * 10
    assert len(system.unknowns) == 150


def test_solution_space_dimension():
    for N in (2, 3, 4, 5):
        system = diagonality_constraints(N)
        dimension, basis = solve_rigidity(system)
        assert dimension == comb(N, 2)
        assert len(basis) == dimension


def test_basis_vectors_are_diagonal_and_integrable():
    system = diagonality_constraints(4)
    _, basis = solve_rigidity(system)
    seen = set()
    for vector in basis:
        (indices, coeff), = vector.sorted_terms()
        k, l = indices
        seen.add((k, l))
        T = vector.table
        assert coeff == parse_polynomial(f"x{k + 1}*x{l + 1}", T)
        assert jacobi_check(PoissonStructure(vector, None)).is_zero()
    assert seen == {(k, l) for k in range(4) for l in range(k + 1, 4)}


def test_diagonal_vectors_satisfy_the_system():
    system = diagonality_constraints(3)
    for m in range(1, 4):
        for mp in range(m + 1, 4):
            assert system.satisfied_by(system.diagonal_vector(m, mp))


def test_simplex_filter_unique_survivor():
    for k in (1, 2, 3, 4):
        result = simplex_multiplicity_filter(k)
        assert result.total == comb(2 * k + 1, k)
        assert len(result.survivors) == 1
        assert result.survivors[0] == (1,) * (k + 1)


def test_simplex_filter_rejects_small_k():
    with pytest.raises(ValueError):
        simplex_multiplicity_filter(0)


def test_check_multiplicity():
    T = VariableTable(tuple(f"x{k}" for k in range(4)))

    def poly(text):
        return parse_polynomial(text, T)

    assert check_multiplicity(poly("x0*x1*x2*x3"), 3)
    assert not check_multiplicity(poly("x0^2*x1*x2"), 3)
    assert not check_multiplicity(poly("x0^4"), 3)
    with pytest.raises(ValueError):
        check_multiplicity(poly("x0*x1 + x2"), 3)  # not homogeneous of k+1
