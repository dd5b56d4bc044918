'''
Small inverse semigroups used throughout: the sign monoid {1, -1, 0},
cyclic groups and their zero extensions.
'''

from .semigroup import InverseSemigroup, adjoin_zero


def sign_monoid() -> InverseSemigroup:
    '''
    {1, -1, 0} under multiplication, indexed '1' -> 0, '-1' -> 1, '0' -> 2.

    >>> S = sign_monoid()
    >>> S.label(S.product(1, 1)), S.unit, S.zero
    ('1', 0, 2)
    '''
    mul = [[0, 1, 2],
           [1, 0, 2],
           [2, 2, 2]]
    return InverseSemigroup.from_table(mul, [0, 1, 2], unit=0, zero=2, labels=['1', '-1', '0'])


def cyclic_group(n) -> InverseSemigroup:
    '''
    >>> cyclic_group(3).product(2, 2)
    1
    '''
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    inv = [(-a) % n for a in range(n)]
    labels = ['1'] + [f'g{a}' for a in range(1, n)]
    return InverseSemigroup.from_table(mul, inv, unit=0, labels=labels)


def cyclic_group_with_zero(n) -> InverseSemigroup:
    return adjoin_zero(cyclic_group(n))
