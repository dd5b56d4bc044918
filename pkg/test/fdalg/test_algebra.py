import numpy as np
import pytest

from exceptions import PreconditionError, StructuralError
from fdalg import (
    FdAlgebra, algebra_dimension, block_dimensions, center_basis, complement_check,
    lattice_law_check, rank, span_basis
)
from fdalg.matrices import algebra_basis, in_span, normalize_phase, random_unitary

from ..support import element


def matrix_unit(n, i, j):
    m = np.zeros((n, n), dtype=complex)
    m[i, j] = 1
    return m


class TestFdAlgebra():
    def test_dimension_is_the_sum_of_squares(self):
        assert(FdAlgebra((2, 1)).dimension == 5)

    @pytest.mark.parametrize('blocks', [(), (0,), (2, -1)])
    def test_blocks_must_be_positive(self, blocks):
        with pytest.raises(StructuralError):
            FdAlgebra(blocks)

    def test_basis_is_lexicographic(self):
        A = FdAlgebra((2, 1))

        assert(A.basis() == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0)])
        assert(A.basis([1]) == [(1, 0, 0)])

    def test_support_projections(self):
        A = FdAlgebra((2, 1))
        p = A.support_projection([0])

        assert(p.support() == frozenset([0]))
        assert((p @ p).allclose(p))
        assert((p + A.support_projection([1])).allclose(A.unit()))

    def test_unknown_blocks_are_structural(self):
        with pytest.raises(StructuralError):
            FdAlgebra((1,)).support_projection([3])

    def test_element_shapes_are_checked(self):
        A = FdAlgebra((2, 1))

        with pytest.raises(StructuralError):
            A.element([[[1]], [[1]]])
        with pytest.raises(StructuralError):
            A.element([np.eye(2)])
        with pytest.raises(StructuralError):
            A.element([[[np.nan, 0], [0, 1]], [[1]]])


class TestAlgElement():
    def test_arithmetic_is_blockwise(self):
        A = FdAlgebra((2, 1))
        a = element(A, [[1, 2], [3, 4]], [[5]])
        b = element(A, [[0, 1], [0, 0]], [[2]])

        assert((a @ b).allclose(element(A, [[0, 1], [0, 3]], [[10]])))
        assert((a - a).is_zero())
        assert((2 * b).allclose(b + b))

    def test_star_is_the_blockwise_adjoint(self):
        A = FdAlgebra((2,))
        a = element(A, [[1, 1j], [0, 0]])

        assert(a.star().allclose(element(A, [[1, 0], [-1j, 0]])))

    def test_norm_is_the_largest_block_norm(self):
        A = FdAlgebra((2, 1))

        assert(np.isclose(element(A, [[3, 0], [0, 1]], [[-4]]).norm(), 4))

    def test_compress_and_coordinates(self):
        A = FdAlgebra((2, 1))
        a = element(A, [[1, 2], [3, 4]], [[5]])

        assert(a.compress({1}).support() == frozenset([1]))
        assert(list(a.coordinates()) == [1, 2, 3, 4, 5])
        assert(list(a.coordinates([1])) == [5])

    def test_to_document_splits_real_and_imaginary_parts(self):
        A = FdAlgebra((1,))

        assert(element(A, [[1 + 2j]]).to_document() == [{'real': [[1.0]], 'imag': [[2.0]]}])


class TestIdealChecks():
    def test_an_ideal_is_complemented_in_a_larger_one(self):
        verdict = complement_check(FdAlgebra((1, 2, 1)), [0], [0, 2])

        assert(verdict.holds)
        assert(verdict.details == {'complement': [2]})

    def test_the_ideal_must_lie_inside(self):
        with pytest.raises(PreconditionError):
            complement_check(FdAlgebra((1, 1)), [0], [1])

    def test_lattice_laws(self):
        A = FdAlgebra((1, 2, 1))

        assert(lattice_law_check(A, [0, 1], [1, 2]).holds)
        assert(lattice_law_check(A, [], [2]).holds)


class TestMatrices():
    def test_rank_is_relative_to_the_largest_singular_value(self):
        assert(rank(np.diag([1.0, 1e-12])) == 1)
        assert(rank(np.eye(3)) == 3)

    def test_span_basis_is_orthonormal(self):
        basis = span_basis([[1, 0, 0], [1, 1, 0], [2, 1, 0]], 3)

        assert(basis.shape == (3, 2))
        assert(np.allclose(basis.conj().T @ basis, np.eye(2)))
        assert(in_span(basis, [0, 5, 0]))
        assert(not in_span(basis, [0, 0, 1]))

    def test_an_empty_span(self):
        assert(span_basis([], 4).shape == (4, 0))
        assert(span_basis([[0, 0]], 2).shape == (2, 0))

    def test_random_unitaries_are_unitary(self):
        u = random_unitary(3, np.random.default_rng(5))

        assert(np.allclose(u.conj().T @ u, np.eye(3)))

    def test_normalize_phase_makes_the_pivot_positive(self):
        u = normalize_phase(np.array([[0, -1j], [1j, 0]]))

        assert(np.isclose(u[0, 1], 1))

    def test_the_full_matrix_algebra_is_generated_by_off_diagonal_units(self):
        assert(algebra_dimension([matrix_unit(2, 0, 1), matrix_unit(2, 1, 0)]) == 4)

    def test_a_diagonal_projection_generates_a_line(self):
        assert(algebra_dimension([matrix_unit(3, 0, 0)]) == 1)

    def test_the_center_of_a_full_matrix_algebra_is_the_scalars(self):
        basis = [matrix_unit(2, i, j) for i in range(2) for j in range(2)]

        center = center_basis(basis)

        assert(len(center) == 1)
        z = center[0]
        assert(np.allclose(z, z[0, 0] * np.eye(2)))

    def test_blocks_of_c_plus_m2(self):
        generators = [matrix_unit(3, 0, 0), matrix_unit(3, 1, 2), matrix_unit(3, 2, 1)]
        basis = algebra_basis(generators)

        assert(len(basis) == 5)
        assert(block_dimensions(basis, np.random.default_rng(0)) == [1, 2])
