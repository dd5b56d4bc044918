import pytest

from exceptions import PreconditionError
from isg import (
    cyclic_group, cyclic_group_with_zero, is_e_star_unitary, is_e_unitary, order_condition,
    sign_monoid, symmetric_inverse_monoid
)


class TestEStarUnitary():
    @pytest.mark.parametrize('S', [
        sign_monoid(), cyclic_group_with_zero(2), cyclic_group_with_zero(3),
        symmetric_inverse_monoid(2)
    ])
    def test_e_star_unitary_semigroups(self, S):
        assert(is_e_star_unitary(S).holds)
        assert(order_condition(S).holds)

    def test_i3_is_not_e_star_unitary(self):
        S = symmetric_inverse_monoid(3)

        verdict = is_e_star_unitary(S)

        assert(not verdict.holds)
        e, t = verdict.witness['e'], verdict.witness['t']
        assert(S.is_idempotent(e) and e != S.zero)
        assert(S.leq(e, t))
        assert(not S.is_idempotent(t))

    def test_the_order_condition_agrees_on_i3(self):
        assert(not order_condition(symmetric_inverse_monoid(3)).holds)

    def test_it_needs_a_zero(self):
        with pytest.raises(PreconditionError):
            is_e_star_unitary(cyclic_group(2))

        with pytest.raises(PreconditionError):
            order_condition(cyclic_group(2))


class TestEUnitary():
    def test_groups_are_e_unitary(self):
        assert(is_e_unitary(cyclic_group(3)).holds)

    def test_a_zero_breaks_e_unitarity(self):
        S = sign_monoid()

        verdict = is_e_unitary(S)

        assert(not verdict.holds)
        assert(verdict.witness == {'e': S.zero, 't': S.index_of('-1')})
