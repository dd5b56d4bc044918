import pytest

from act import (
    check_groupoid_laws, criterion_d1t_closed, germ_groupoid,
    germ_relation_is_equivalence, groupoid_is_hausdorff, natural_action, units_closed,
    universal_action
)
from act import germs
from corpus.fixtures import (
    discrete_sign_action, load_fixture, sierpinski_sign_action, swap_two_points
)
from exceptions import InternalError
from isg import from_partial_bijections, symmetric_inverse_monoid


class TestGermGroupoid():
    def test_the_sierpinski_sign_action_has_three_arrows(self):
        G = germ_groupoid(sierpinski_sign_action())

        assert(G.arrows == ((0, 0), (0, 1), (1, 1)))
        assert(G.to_document()['arrows'] == ['[1,a]', '[1,b]', '[-1,b]'])

    def test_germs_through_the_zero_are_identified(self):
        G = germ_groupoid(sierpinski_sign_action())

        assert(G.germ(1, 0) == G.germ(0, 0) == G.germ(2, 0))
        assert(G.germ(1, 1) != G.germ(0, 1))

    def test_the_neighbourhood_of_a_twisted_germ_reaches_a_unit(self):
        G = germ_groupoid(sierpinski_sign_action())

        assert(G.space.neighbourhoods[2] == frozenset([0, 2]))

    def test_a_free_swap_has_four_arrows(self):
        G = germ_groupoid(swap_two_points())

        assert(len(G.arrows) == 4)
        assert(G.space.is_discrete())

    def test_source_range_and_inverse(self):
        G = germ_groupoid(swap_two_points())
        g = G.germ(1, 0)

        assert(G.source(g) == 0)
        assert(G.range(g) == 1)
        assert(G.inverse(g) == G.germ(1, 1))
        assert(G.compose(G.inverse(g), g) == G.unit_at(0))
        assert(G.compose(g, g) is None)

    def test_bisections(self):
        G = germ_groupoid(sierpinski_sign_action())

        assert(G.bisection(2) == frozenset([0]))
        assert(G.bisection(1) == frozenset([0, 2]))

    def test_a_unit_is_adjoined_when_missing(self):
        S = from_partial_bijections(2, [{1: 2}])

        G = germ_groupoid(natural_action(S))

        assert(G.semigroup.unit == S.size)
        assert(len(G.units) == 2)

    @pytest.mark.parametrize('name', [
        'sign-sierpinski', 'sign-discrete', 'sign-three-point', 'z2-swap',
        'z2-three-point', 'natural-I2', 'universal-I2', 'universal-I3',
    ])
    def test_groupoid_laws(self, name):
        action = load_fixture(name, 'action')

        assert(germ_relation_is_equivalence(action).holds)
        assert(check_groupoid_laws(germ_groupoid(action)).holds)

    def test_a_broken_bisection_is_internal(self, monkeypatch):
        action = sierpinski_sign_action()
        monkeypatch.setattr(germs.FiniteSpace, 'from_neighbourhoods',
                            classmethod(lambda cls, labels, nbhds: cls.discrete(labels)))

        with pytest.raises(InternalError):
            germ_groupoid(action)


class TestUnitsClosed():
    def test_sierpinski_units_are_not_closed(self):
        G = germ_groupoid(sierpinski_sign_action())

        assert(not units_closed(G))
        assert(not groupoid_is_hausdorff(G))

    def test_discrete_units_are_closed(self):
        G = germ_groupoid(discrete_sign_action())

        assert(units_closed(G))
        assert(groupoid_is_hausdorff(G))

    def test_closed_units_over_a_non_hausdorff_space(self):
        G = germ_groupoid(load_fixture('z2-three-point', 'action'))

        assert(units_closed(G))
        assert(not groupoid_is_hausdorff(G))

    def test_the_universal_i3_units_are_not_closed(self):
        assert(not units_closed(germ_groupoid(universal_action(symmetric_inverse_monoid(3)))))

    def test_a_disagreeing_criterion_is_internal(self, monkeypatch):
        G = germ_groupoid(discrete_sign_action())
        monkeypatch.setattr(germs, 'criterion_d1t_closed',
                            lambda action: criterion_d1t_closed(sierpinski_sign_action()))

        with pytest.raises(InternalError):
            units_closed(G)


class TestCriterion():
    def test_the_first_failing_element_is_the_witness(self):
        verdict = criterion_d1t_closed(sierpinski_sign_action())

        assert(not verdict.holds)
        assert(verdict.witness == {'t': 1, 'label': '-1'})

    def test_the_table_lists_every_element(self):
        verdict = criterion_d1t_closed(sierpinski_sign_action())
        table = verdict.details['per_element']

        assert(set(table) == {'1', '-1', '0'})
        assert(table['-1'] == {'d1t': ['a'], 'domain': ['a', 'b'], 'closed': False})
        assert(table['0']['closed'])
