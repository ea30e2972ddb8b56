# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Abelian decomposition and modular solver unit tests."""

import numpy as np
import pytest

import modular
from exceptions import InvalidGroupError
from groups import FiniteGroup, cyclic, direct_product


@pytest.mark.parametrize(
    "factors, invariants",
    [
        pytest.param((1,), [], id="trivial"),
        pytest.param((12,), [12], id="Z12"),
        pytest.param((2, 2), [2, 2], id="Z2xZ2"),
        pytest.param((2, 3), [6], id="Z2xZ3"),
        pytest.param((2, 4), [2, 4], id="Z2xZ4"),
        pytest.param((4, 6), [2, 12], id="Z4xZ6"),
    ],
)
def test_abelian_invariants(factors, invariants):
    """
    arrange: a product of cyclic groups.
    act: compute its invariant factors.
    assert: they match the known normal form.
    """
    group = direct_product(*(cyclic(n) for n in factors))

    assert modular.abelian_invariants(group) == invariants


def test_primary_decomposition_coordinates():
    """
    arrange: Z2 x Z4.
    act: decompose it.
    assert: the factors are Z/4 then Z/2 and coordinates decode back to every element.
    """
    group = direct_product(cyclic(2), cyclic(4))

    decomposition = modular.primary_decomposition(group)

    assert decomposition.cyclic_orders == [(2, 2), (2, 1)]
    assert decomposition.moduli.tolist() == [4, 2]
    for a in range(group.order):
        assert decomposition.element(decomposition.coords[a]) == a


def test_endomorphism_matrix():
    """
    arrange: Z4 x Z6 and its inversion automorphism.
    act: compute the coordinate matrix of the inversion.
    assert: it maps the coordinates of a to those of -a modulo the factor orders.
    """
    group = direct_product(cyclic(4), cyclic(6))
    decomposition = modular.primary_decomposition(group)

    matrix = decomposition.matrix(group.inverse)

    for a in range(group.order):
        image = (matrix @ decomposition.coords[a]) % decomposition.moduli
        assert image.tolist() == decomposition.coords[group.inverse[a]].tolist()


def test_primary_decomposition_rejects_non_abelian(s3: FiniteGroup):
    """
    arrange: S3.
    act: decompose it.
    assert: InvalidGroupError is raised.
    """
    with pytest.raises(InvalidGroupError):
        modular.primary_decomposition(s3)


@pytest.mark.parametrize(
    "matrix, rhs, solvable",
    [
        pytest.param([[2]], [2], True, id="2x=2"),
        pytest.param([[2]], [1], False, id="2x=1"),
        pytest.param([[2, 0], [0, 1]], [0, 3], True, id="diagonal"),
        pytest.param([[1, 1], [1, 1]], [1, 2], False, id="inconsistent"),
    ],
)
def test_solve_prime_power_small(matrix, rhs, solvable: bool):
    """
    arrange: a small system over Z/4.
    act: solve it.
    assert: a solution exists exactly when expected and satisfies the system.
    """
    solution = modular.solve_prime_power(np.array(matrix), np.array(rhs), 2, 2)

    assert (solution is not None) == solvable
    if solution is not None:
        assert ((np.array(matrix) @ solution - np.array(rhs)) % 4 == 0).all()


@pytest.mark.parametrize("prime, power", [(2, 3), (3, 2), (5, 1)])
def test_solve_prime_power_random(rng: np.random.Generator, prime: int, power: int):
    """
    arrange: random consistent systems over Z/p^E.
    act: solve them.
    assert: every returned vector solves its system.
    """
    modulus = prime**power
    for _ in range(50):
        matrix = rng.integers(0, modulus, size=(6, 4))
        rhs = matrix @ rng.integers(0, modulus, size=4) % modulus

        solution = modular.solve_prime_power(matrix, rhs, prime, power)

        assert solution is not None, "consistent systems must be solvable"
        assert ((matrix @ solution - rhs) % modulus == 0).all()


def test_solve_gf2_sparse_small():
    """
    arrange: x0 + x1 = 1, x1 = 1 and the inconsistent x0 = 1, x0 = 0.
    act: solve both.
    assert: the first gives (0, 1), the second has no solution.
    """
    solution = modular.solve_gf2_sparse(
        np.array([0, 0, 1]), np.array([0, 1, 1]), np.array([1, 1]), 2
    )
    inconsistent = modular.solve_gf2_sparse(
        np.array([0, 1]), np.array([0, 0]), np.array([1, 0]), 1
    )

    assert solution.tolist() == [0, 1]
    assert inconsistent is None


def test_solve_gf2_sparse_random(rng: np.random.Generator):
    """
    arrange: random consistent systems over F2 given by their nonzero positions.
    act: solve them.
    assert: every returned vector solves its system.
    """
    for _ in range(50):
        matrix = rng.integers(0, 2, size=(10, 7))
        rhs = matrix @ rng.integers(0, 2, size=7) % 2
        rows, cols = np.nonzero(matrix)

        solution = modular.solve_gf2_sparse(rows, cols, rhs, 7)

        assert solution is not None
        assert ((matrix @ solution - rhs) % 2 == 0).all()
