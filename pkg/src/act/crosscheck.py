'''
Cross-checks between actions: inheritance of closed units along
equivariant maps, and the equivalent forms of E*-unitarity.
'''

from exceptions import AssertionFailure, PreconditionError
from isg import InverseSemigroup, is_e_star_unitary, order_condition
from log_utils import get_logger
from report import Verdict
from topo import semilattice_spectrum

from .action import SpaceAction, universal_action, validate_action
from .germs import germ_groupoid, units_closed


def check_equivariant_inheritance(f, action_x: SpaceAction, action_y: SpaceAction) -> Verdict:
    '''
    `f` maps point indices of X to point indices of Y. It must be
    continuous with f(alpha_t x) = alpha_t f(x) and D^X_t = f^-1(D^Y_t).
    Closed units in Y x| S must force closed units in X x| S.
    '''
    X, Y = action_x.space, action_y.space
    S = action_x.semigroup
    if action_y.semigroup.size != S.size:
        raise PreconditionError('both actions must be by the same semigroup')
    if not X.is_continuous(f, Y):
        raise PreconditionError('the map is not continuous')
    for t in range(S.size):
        preimage = frozenset(x for x in X.points if f[x] in action_y.domain(t))
        if preimage != action_x.domain(t):
            raise PreconditionError(f'domain of {S.label(t)} is not a preimage')
        for x in action_x.domain(t):
            if f[action_x.apply(t, x)] != action_y.apply(t, f[x]):
                raise PreconditionError(f'the map does not intertwine {S.label(t)}')

    closed_x = units_closed(germ_groupoid(action_x))
    closed_y = units_closed(germ_groupoid(action_y))
    if closed_y and not closed_x:
        raise AssertionFailure('closed units are not inherited along the map',
                               {'x_closed': closed_x, 'y_closed': closed_y})
    return Verdict(True, details={'x_closed': closed_x, 'y_closed': closed_y})


def canonical_spectrum_map(action: SpaceAction):
    '''
    The equivariant map X -> spectrum of E(S), x -> phi_x with
    phi_x(e) = 1 iff x in D_e, for a zero-preserving action of a
    semigroup with unit. Returns the map and the universal action.
    '''
    S = action.semigroup
    if not action.zero_preserving or S.unit is None:
        raise PreconditionError('the canonical map needs a zero-preserving unital action')
    universal = universal_action(S)
    # points of the universal space are in character order
    spectrum = semilattice_spectrum(S)
    f = []
    for x in sorted(action.space.points):
        filt = [e for e in sorted(S.idempotents) if x in action.domain(e)]
        least = filt[0]
        for e in filt:
            least = S.product(least, e)
        f.append(spectrum.character_of(least))
    return f, universal


def e_unitary_cross_check(S: InverseSemigroup, corpus=()) -> Verdict:
    '''
    Evaluate E*-unitarity, the order condition, closed units for the
    universal action and closed units for every zero-preserving action in
    `corpus`. The first three must agree; the third must imply the fourth.
    '''
    logger = get_logger('cross-check-69')

    if S.zero is None or S.unit is None:
        raise PreconditionError('the cross-check needs a semigroup with zero and unit')

    star = is_e_star_unitary(S)
    order = order_condition(S)
    universal = universal_action(S)
    closed = units_closed(germ_groupoid(universal))

    details = {
        'e_star_unitary': star.holds,
        'order_condition': order.holds,
        'universal_units_closed': closed,
        'witness_pair': star.witness,
        'corpus': [],
    }

    if not (star.holds == order.holds == closed):
        raise AssertionFailure('E*-unitarity characterizations disagree', details)

    for name, action in corpus:
        if not action.zero_preserving:
            continue
        report = validate_action(action)
        if not report.valid:
            raise PreconditionError(f'corpus action {name} is invalid: {report.rules()}')
        action_closed = units_closed(germ_groupoid(action))
        details['corpus'].append({'name': name, 'units_closed': action_closed})
        if closed and not action_closed:
            raise AssertionFailure(
                'closed units for the universal action do not pass to a corpus action',
                {'action': name})

    logger.info(f'E*-unitary: {star.holds}; {len(details["corpus"])} corpus actions checked')
    return Verdict(True, details=details)
