'''
E-unitary and E*-unitary predicates.

Both are evaluated by exhaustive scans of (e, t) pairs in index order,
so the witness of a failure is the lexicographically first violating
pair.
'''

from exceptions import InternalError, PreconditionError
from report import Verdict

from .semigroup import InverseSemigroup, adjoin_zero, with_unit


def _first_star_violation(S: InverseSemigroup):
    # e idempotent, e <= t, e != 0 and t not idempotent
    for e in sorted(S.idempotents):
        if e == S.zero:
            continue
        for t in range(S.size):
            if S.leq(e, t) and not S.is_idempotent(t):
                return {'e': e, 't': t}
    return None


def _first_order_violation(S: InverseSemigroup):
    # e <= 1, e <= t, e != 0 and t not <= 1; S must have a unit
    one = S.unit
    for e in range(S.size):
        if e == S.zero or not S.leq(e, one):
            continue
        for t in range(S.size):
            if S.leq(e, t) and not S.leq(t, one):
                return {'e': e, 't': t}
    return None


def order_condition(S: InverseSemigroup) -> Verdict:
    '''
    If e <= 1,t then e = 0 or t <= 1. Evaluated in the unitization when
    S has no unit; the fresh unit is the last index, so witnesses keep
    their meaning.
    '''
    if S.zero is None:
        raise PreconditionError('the order condition needs a zero element')
    witness = _first_order_violation(with_unit(S))
    return Verdict(witness is None, witness)


def is_e_star_unitary(S: InverseSemigroup) -> Verdict:
    '''
    e^2 = e <= t implies e = 0 or t^2 = t.

    The order characterization is computed as well; a disagreement is an
    internal error.
    '''
    if S.zero is None:
        raise PreconditionError('E*-unitarity is only defined for semigroups with zero')

    witness = _first_star_violation(S)
    direct = Verdict(witness is None, witness)
    by_order = order_condition(S)
    if direct.holds != by_order.holds:
        raise InternalError(
            'E*-unitarity characterizations disagree',
            {'idempotent_scan': direct.to_dict(), 'order_scan': by_order.to_dict()})
    return direct


def is_e_unitary(S: InverseSemigroup) -> Verdict:
    '''
    e^2 = e <= t implies t^2 = t.

    Cross-checked against E*-unitarity of S with a zero adjoined.
    '''
    witness = next(({'e': e, 't': t}
                    for e in sorted(S.idempotents)
                    for t in range(S.size)
                    if S.leq(e, t) and not S.is_idempotent(t)), None)
    direct = Verdict(witness is None, witness)
    starred = is_e_star_unitary(adjoin_zero(S))
    if direct.holds != starred.holds:
        raise InternalError(
            'E-unitarity disagrees with E*-unitarity of S with a zero adjoined',
            {'direct': direct.to_dict(), 'with_zero': starred.to_dict()})
    return direct
