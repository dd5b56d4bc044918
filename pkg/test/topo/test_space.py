import pytest

from corpus.fixtures import three_point_space
from exceptions import InternalError, PreconditionError, StructuralError
from topo import FiniteSpace, sierpinski, validate_space


class TestFromOpens():
    def test_neighbourhoods_are_the_smallest_opens(self):
        X = three_point_space()

        assert([X.names(n) for n in X.neighbourhoods] == [['a'], ['a', 'b'], ['a', 'c']])

    def test_a_family_that_is_not_a_topology_is_structural(self):
        with pytest.raises(StructuralError):
            FiniteSpace.from_opens(['a', 'b', 'c'], [[], ['a', 'b'], ['b', 'c'], ['a', 'b', 'c']])

    def test_unknown_points_are_structural(self):
        with pytest.raises(StructuralError):
            FiniteSpace.from_opens(['a'], [[], ['z'], ['a']])

    def test_labels_must_be_distinct(self):
        with pytest.raises(StructuralError):
            FiniteSpace.from_neighbourhoods(['a', 'a'], [{0}, {1}])

    def test_neighbourhoods_must_be_nested(self):
        with pytest.raises(StructuralError):
            FiniteSpace.from_neighbourhoods(['a', 'b', 'c'], [{0, 1}, {1, 2}, {2}])


class TestValidateSpace():
    def test_a_missing_intersection_is_reported(self):
        report = validate_space(['a', 'b', 'c'], [[], ['a', 'b'], ['b', 'c'], ['a', 'b', 'c']])

        assert(report.rules() == ['intersection'])
        assert(report.violations[0].witness == (1, 2))

    def test_missing_empty_set_and_space(self):
        report = validate_space(['a', 'b'], [['a']])

        assert(report.rules() == ['contains-empty', 'contains-space'])


class TestOpenAndClosed():
    def test_sierpinski(self):
        X = sierpinski()
        a, b = X.index_of('a'), X.index_of('b')

        assert(X.is_open({a}))
        assert(not X.is_open({b}))
        assert(X.is_closed({b}))
        assert(X.closure({a}) == X.points)
        assert(X.interior({b}) == frozenset())
        assert(len(X.opens()) == 3)

    def test_relative_closure(self):
        X = sierpinski()
        a, b = X.index_of('a'), X.index_of('b')

        assert(X.is_closed_in(set(), {a, b}))
        assert(not X.is_closed_in({a}, {a, b}))
        assert(X.is_closed_in({a}, {a}))

    def test_relative_closure_needs_an_open_set(self):
        X = sierpinski()

        with pytest.raises(PreconditionError):
            X.is_closed_in(set(), {X.index_of('b')})

    def test_every_subset_of_a_discrete_space_is_clopen(self):
        X = FiniteSpace.discrete(['a', 'b', 'c'])

        assert(len(X.opens()) == 8)
        assert(all(X.is_closed(U) for U in X.opens()))


class TestSeparation():
    def test_discrete_spaces_are_hausdorff(self):
        assert(FiniteSpace.discrete(['a', 'b']).is_hausdorff())

    def test_non_discrete_spaces_are_not(self):
        assert(not sierpinski().is_hausdorff())
        assert(not three_point_space().is_hausdorff())

    def test_a_disagreement_with_discreteness_is_internal(self, monkeypatch):
        X = sierpinski()
        monkeypatch.setattr(FiniteSpace, 'is_discrete', lambda self: True)

        with pytest.raises(InternalError):
            X.is_hausdorff()


class TestMaps():
    def test_subspace(self):
        X = three_point_space()
        Y = X.subspace({X.index_of('b'), X.index_of('c')})

        assert(Y.labels == ('b', 'c'))
        assert(Y.is_discrete())

    def test_the_swap_of_b_and_c_is_a_homeomorphism(self):
        X = three_point_space()
        swap = [0, 2, 1]

        assert(X.is_continuous(swap, X))
        assert(X.is_homeomorphism(dict(enumerate(swap)), X.points, X.points))

    def test_moving_the_open_point_is_not_continuous(self):
        X = sierpinski()

        assert(not X.is_continuous([1, 0], X))
        assert(not X.is_homeomorphism({0: 1, 1: 0}, X.points, X.points))

    def test_to_document_lists_every_open(self):
        doc = sierpinski().to_document()

        assert(doc == {'points': ['a', 'b'], 'opens': [[], ['a'], ['a', 'b']]})
