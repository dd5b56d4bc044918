import numpy as np
import pytest

from act import validate_action
from corpus.documents import (
    action_from_document, action_to_document, crossed_element_from_document,
    fd_action_from_document, fd_action_to_document, groupoid_from_document,
    groupoid_to_document, matrix_from_document, require, semigroup_from_document,
    semigroup_to_document, sign_data_from_document, sign_data_to_document,
    space_from_document
)
from corpus.fixtures import load_fixture, sierpinski_sign_action
from exceptions import StructuralError
from fdalg import validate_fd_action
from gpdalg import pair_groupoid, validate_groupoid
from isg import sign_monoid, validate_semigroup
from xprod import CrossedProduct, crossed_01m1

SIGN_TABLE = {
    'size': 3,
    'mul': [[0, 1, 2], [1, 0, 2], [2, 2, 2]],
    'inv': [0, 1, 2],
    'unit': 0,
    'zero': 2,
    'labels': ['1', '-1', '0'],
}


class TestSemigroupDocuments():
    def test_a_table(self):
        S = semigroup_from_document(SIGN_TABLE)

        assert(S.size == 3)
        assert(S.label(S.zero) == '0')
        assert(validate_semigroup(S).valid)

    def test_generators(self):
        S = semigroup_from_document(
            {'points': 2, 'generators': [{'map': {'1': 2}}, {'map': {'2': 1}}]})

        assert(S.size == 5)
        assert(S.maps is not None)

    def test_to_document_keeps_the_table(self):
        assert(semigroup_to_document(sign_monoid()) == SIGN_TABLE)

    @pytest.mark.parametrize('doc', [
        {'mul': [[0]]},
        {'mul': [[0, 1], [1, 0]], 'inv': [0]},
        {'mul': [[0, 5], [1, 0]], 'inv': [0, 1]},
        {'mul': [[0, 1], [1, 0]], 'inv': [0, 1], 'unit': 7},
        {'mul': [[0]], 'inv': [0], 'size': 0},
        {'points': 2, 'generators': [{'map': {'a': 1}}]},
        {'points': -1, 'generators': []},
        {'generators': []},
    ])
    def test_malformed_documents_are_structural(self, doc):
        with pytest.raises(StructuralError):
            semigroup_from_document(doc)

    def test_require_needs_an_object(self):
        with pytest.raises(StructuralError, match='expected an object'):
            require([1], 'a')


class TestSpaceDocuments():
    def test_opens(self):
        X = space_from_document({'points': ['a', 'b'], 'opens': [[], ['a'], ['a', 'b']]})

        assert(X.is_open({0}))
        assert(not X.is_discrete())

    def test_discrete(self):
        assert(space_from_document({'points': ['p', 'q'], 'discrete': True}).is_discrete())

    def test_opens_are_required(self):
        with pytest.raises(StructuralError):
            space_from_document({'points': ['p']})


class TestActionDocuments():
    def test_labels_name_elements_and_points(self):
        doc = {
            'semigroup': SIGN_TABLE,
            'space': {'points': ['a', 'b'], 'opens': [[], ['a'], ['a', 'b']]},
            'maps': {
                '1': {'map': {'a': 'a', 'b': 'b'}},
                '-1': {'map': {'a': 'a', 'b': 'b'}},
                '0': {'domain': ['a'], 'map': {'a': 'a'}},
            },
        }

        action = action_from_document(doc)

        assert(validate_action(action).valid)
        assert(action.domain(2) == frozenset([0]))

    def test_to_document_can_be_read_back(self):
        action = action_from_document(action_to_document(sierpinski_sign_action()))

        assert(action.maps == sierpinski_sign_action().maps)

    def test_missing_elements_act_on_nothing(self):
        doc = {'semigroup': SIGN_TABLE, 'space': {'points': ['a'], 'discrete': True},
               'maps': {'1': {'map': {'a': 'a'}}}}

        assert(action_from_document(doc).maps[1] == {})

    def test_the_domain_must_match_the_map(self):
        doc = {'semigroup': SIGN_TABLE, 'space': {'points': ['a', 'b'], 'discrete': True},
               'maps': {'0': {'domain': ['a', 'b'], 'map': {'a': 'a'}}}}

        with pytest.raises(StructuralError, match='domain of 0'):
            action_from_document(doc)

    def test_unknown_points_are_structural(self):
        doc = {'semigroup': SIGN_TABLE, 'space': {'points': ['a'], 'discrete': True},
               'maps': {'1': {'map': {'a': 'z'}}}}

        with pytest.raises(StructuralError):
            action_from_document(doc)


class TestMatrixDocuments():
    def test_nested_lists(self):
        assert(np.allclose(matrix_from_document([[1, 2], [3, 4]]), [[1, 2], [3, 4]]))

    def test_missing_imaginary_part_is_zero(self):
        assert(np.allclose(matrix_from_document({'real': [[1]]}), [[1]]))

    @pytest.mark.parametrize('doc', [
        [1, 2],
        [['a']],
        {'real': [[1]], 'imag': [[1, 2]]},
        {'imag': [[1]]},
    ])
    def test_malformed_matrices_are_structural(self, doc):
        with pytest.raises(StructuralError):
            matrix_from_document(doc)


class TestFdActionDocuments():
    def test_blocks_default_to_the_identity_on_the_source(self):
        doc = {
            'semigroup': SIGN_TABLE,
            'algebra': {'blocks': [1, 1]},
            'maps': {'1': {'source': [0, 1]}, '-1': {'source': [0, 1]}, '0': {'source': [0]}},
        }

        action = fd_action_from_document(doc)

        assert(action.block_maps[2] == {0: 0})
        assert(validate_fd_action(action).valid)

    def test_to_document_can_be_read_back(self):
        original = load_fixture('fd-natural-I2', 'fd-action')

        action = fd_action_from_document(fd_action_to_document(original))

        assert(action.block_maps == original.block_maps)
        assert(validate_fd_action(action).valid)
        assert(CrossedProduct(action).dimension == CrossedProduct(original).dimension)

    def test_the_target_must_be_the_image(self):
        doc = {
            'semigroup': SIGN_TABLE,
            'algebra': {'blocks': [1, 1]},
            'maps': {'0': {'source': [0], 'target': [1]}},
        }

        with pytest.raises(StructuralError, match='target'):
            fd_action_from_document(doc)

    def test_blocks_must_be_a_list(self):
        doc = {'semigroup': SIGN_TABLE, 'algebra': {'blocks': 3}, 'maps': {}}

        with pytest.raises(StructuralError):
            fd_action_from_document(doc)


class TestOtherDocuments():
    def test_crossed_elements_are_keyed_by_label(self):
        crossed = CrossedProduct(load_fixture('fd-sign-discrete', 'fd-action'))

        x = crossed_element_from_document(crossed, {'-1': [[[1]], [[0]]]})

        assert(list(x.components) == [1])

    def test_crossed_elements_must_be_objects(self):
        crossed = CrossedProduct(load_fixture('fd-sign-discrete', 'fd-action'))

        with pytest.raises(StructuralError):
            crossed_element_from_document(crossed, [[[1]], [[0]]])

    def test_groupoids(self):
        G = groupoid_from_document(groupoid_to_document(pair_groupoid(2)))

        assert(G.size == 4)
        assert(validate_groupoid(G).valid)

    def test_groupoid_composition_entries_are_triples(self):
        doc = groupoid_to_document(pair_groupoid(1))
        doc['composition'] = [[0, 0]]

        with pytest.raises(StructuralError):
            groupoid_from_document(doc)

    def test_sign_data_defaults(self):
        A, I, alpha, u = sign_data_from_document({'blocks': [1, 1], 'ideal': [0]})

        assert(alpha.is_identity())
        assert(u.allclose(A.support_projection(I)))
        assert(crossed_01m1(A, I, alpha, u).details['dim_crossed'] == 3)

    def test_sign_data_can_be_read_back(self):
        data = load_fixture('sign-twisted', 'sign-data')

        A, I, alpha, u = sign_data_from_document(sign_data_to_document(*data))

        assert(A == data[0])
        assert(I == data[1])
        assert(u.allclose(data[3]))
