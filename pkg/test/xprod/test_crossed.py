import numpy as np
import pytest

from corpus.fixtures import load_fixture
from exceptions import PreconditionError
from xprod import (
    CrossedProduct, expectation, expectation_laws_check, expectation_range_check,
    lattice_of_ideals, positivity_check, relation_span_check
)

from ..support import element


@pytest.fixture
def sign_crossed():
    return CrossedProduct(load_fixture('fd-sign-discrete', 'fd-action'))


@pytest.fixture
def swap_crossed():
    return CrossedProduct(load_fixture('fd-character-swap', 'fd-action'))


class TestNormalForm():
    def test_dimensions(self, sign_crossed, swap_crossed):
        assert(sign_crossed.dimension == 3)
        assert(swap_crossed.dimension == 4)

    def test_the_lex_order_gives_the_same_dimension(self):
        crossed = CrossedProduct(load_fixture('fd-sign-discrete', 'fd-action'), order='lex')

        assert(crossed.dimension == 3)

    def test_slots_keep_the_first_element_of_each_class(self, sign_crossed):
        assert(sign_crossed.slots == ((0, 0), (0, 1), (1, 1)))
        assert(sign_crossed.classes == {0: [(0, 1, 2)], 1: [(0,), (1,)]})

    def test_blocks_in_the_common_ideal_move_to_the_representative(self, sign_crossed):
        A = sign_crossed.algebra
        x = sign_crossed.delta(1, element(A, [[2]], [[3]]))

        nf = x.normal_form()

        assert(sorted(nf.components) == [0, 1])
        assert(nf.components[0].allclose(element(A, [[2]], [[0]])))
        assert(nf.components[1].allclose(element(A, [[0]], [[3]])))

    def test_relations_vanish(self, sign_crossed):
        A = sign_crossed.algebra
        c = element(A, [[1]], [[0]])

        assert((sign_crossed.delta(2, c) - sign_crossed.delta(1, c)).is_zero())
        assert(not (sign_crossed.delta(1, A.unit()) - sign_crossed.delta(0, A.unit())).is_zero())

    def test_coordinates_round_trip(self, swap_crossed):
        x = swap_crossed.random_element(np.random.default_rng(2))

        y = swap_crossed.from_coordinates(x.coordinates())

        assert(y.allclose(x))

    def test_elements_must_lie_in_their_bimodules(self, sign_crossed):
        A = sign_crossed.algebra

        with pytest.raises(PreconditionError):
            sign_crossed.delta(2, element(A, [[0]], [[1]]))

    def test_elements_of_different_products_do_not_multiply(self, sign_crossed):
        other = CrossedProduct(sign_crossed.action)

        with pytest.raises(PreconditionError):
            sign_crossed.zero() @ other.zero()


class TestAlgebraLaws():
    @pytest.mark.parametrize('name', ['fd-sign-discrete', 'fd-character-swap', 'fd-natural-I2'])
    def test_multiplication_is_associative_and_star_reverses_it(self, name):
        crossed = CrossedProduct(load_fixture(name, 'fd-action'))
        rng = np.random.default_rng(7)
        x, y, z = (crossed.random_element(rng) for _ in range(3))
        tol = 1e-8 * (1 + x.norm() * y.norm() * z.norm())

        assert(((x @ y) @ z).allclose(x @ (y @ z), tol))
        assert((x @ y).star().allclose(y.star() @ x.star(), tol))
        assert(x.star().star().allclose(x, tol))

    def test_the_unit_of_a_acts_as_the_identity(self, swap_crossed):
        x = swap_crossed.random_element(np.random.default_rng(1))
        one = swap_crossed.from_algebra(swap_crossed.algebra.unit())

        assert((one @ x).allclose(x, 1e-8 * (1 + x.norm())))


class TestExpectation():
    def test_it_is_the_identity_on_a(self, sign_crossed):
        a = element(sign_crossed.algebra, [[2]], [[5]])

        assert(expectation(sign_crossed.from_algebra(a)).allclose(a))

    def test_it_keeps_the_part_in_i_1t(self, sign_crossed):
        A = sign_crossed.algebra
        x = sign_crossed.delta(1, element(A, [[2]], [[3]]))

        assert(expectation(x).allclose(element(A, [[2]], [[0]])))

    def test_it_kills_free_translations(self, swap_crossed):
        x = swap_crossed.delta(1, swap_crossed.algebra.unit())

        assert(expectation(x).is_zero())

    def test_positivity(self, sign_crossed):
        x = sign_crossed.random_element(np.random.default_rng(3))

        verdict = positivity_check(x)

        assert(verdict.holds)
        assert(verdict.details['min_eigenvalue'] >= -1e-9)

    def test_positivity_of_zero(self, sign_crossed):
        verdict = positivity_check(sign_crossed.zero())

        assert(verdict.holds)
        assert(verdict.details['element_zero'])

    @pytest.mark.parametrize('name', ['fd-sign-discrete', 'fd-character-swap', 'fd-natural-I2'])
    def test_expectation_laws(self, name):
        crossed = CrossedProduct(load_fixture(name, 'fd-action'))

        verdict = expectation_laws_check(crossed, seed=5, samples=3)

        assert(verdict.holds)
        assert(verdict.details['samples'] == 3)


class TestRelationSpan():
    @pytest.mark.parametrize('name', ['fd-sign-discrete', 'fd-character-swap', 'fd-natural-I2'])
    def test_the_kernel_is_the_relation_span(self, name):
        crossed = CrossedProduct(load_fixture(name, 'fd-action'))

        verdict = relation_span_check(crossed)

        assert(verdict.holds)
        assert(verdict.details['relation_rank']
               == verdict.details['ambient'] - verdict.details['dimension'])

    def test_the_sign_action(self, sign_crossed):
        details = relation_span_check(sign_crossed).details

        assert(details['ambient'] == 5)
        assert(details['relation_rank'] == 2)
        assert(details['j_span_equal'])


class TestLatticeOfIdeals():
    def test_the_sign_action(self, sign_crossed):
        ideals, irreducible = lattice_of_ideals(sign_crossed.action)

        assert(ideals == [frozenset(), frozenset([0]), frozenset([0, 1])])
        assert(irreducible == [frozenset([0]), frozenset([0, 1])])

    def test_a_free_action(self, swap_crossed):
        ideals, irreducible = lattice_of_ideals(swap_crossed.action)

        assert(ideals == [frozenset(), frozenset([0, 1])])
        assert(irreducible == [frozenset([0, 1])])


class TestExpectationRange():
    def test_every_element_lands_in_a(self, sign_crossed):
        verdict = expectation_range_check(sign_crossed)

        assert(verdict.holds)
        assert(verdict.details['prim_closed'])
        assert(verdict.details['per_element']['-1'] == {
            'I_1t': [0], 'complement': [1], 'complemented': True, 'lands_in_A': True})
