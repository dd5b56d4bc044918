'''Commands on actions on finite spaces and their groupoids of germs'''

from itertools import combinations

from act import (
    check_groupoid_laws, criterion_d1t_closed, germ_groupoid, germ_relation_is_equivalence,
    groupoid_is_hausdorff, units_closed, validate_action
)
from corpus.documents import groupoid_to_document
from exceptions import AssertionFailure, PreconditionError
from gpdalg import (
    convolution_algebra, from_discrete_action, inner_exactness_check, validate_groupoid,
    verify_iterated_iso
)
from log_utils import get_logger

from .inputs import read_input

# invariant subsets of units are enumerated up to this many units
MAX_INVARIANT_UNITS = 10

# verify-iterated runs without --seed
ITERATED_SEED = 0


def validate_action_command(document, config):
    action = read_input('action', document, config)
    return validate_action(action).to_dict()


def valid_action(document, config):
    action = read_input('action', document, config)
    report = validate_action(action)
    if not report.valid:
        raise PreconditionError(f'invalid action: {report.rules()}')
    return action


def germ_groupoid_command(document, config):
    '''
    The groupoid of germs with its topology, checked against the groupoid
    laws. On a discrete space the finite groupoid, its convolution
    algebra and the exactness of restriction to every invariant set of
    units are reported too.
    '''
    logger = get_logger('germ-groupoid')

    action = valid_action(document, config)
    groupoid = germ_groupoid(action)
    laws = check_groupoid_laws(groupoid)
    if not laws:
        raise AssertionFailure('germ composition violates the groupoid laws', laws.witness)
    relation = germ_relation_is_equivalence(action)
    if not relation:
        raise AssertionFailure('germ relation is not an equivalence', relation.witness)

    result = groupoid.to_document()
    result.update({
        'arrow_count': len(groupoid.arrows),
        'laws': laws.to_dict(),
        'units_closed': units_closed(groupoid),
    })
    if action.space.is_discrete():
        result['discrete'] = _discrete_groupoid(action, config)
    logger.info(f'{len(groupoid.arrows)} arrows')
    return result


def _discrete_groupoid(action, config):
    G = from_discrete_action(action)
    report = validate_groupoid(G)
    if not report.valid:
        raise AssertionFailure('germ groupoid is not a groupoid', report.to_dict())
    result = {
        'groupoid': groupoid_to_document(G),
        'convolution_blocks': list(convolution_algebra(G).presentation.blocks),
    }
    if G.unit_count <= MAX_INVARIANT_UNITS:
        invariant = [U for k in range(G.unit_count + 1)
                     for U in combinations(range(G.unit_count), k) if G.is_invariant(U)]
        result['exact_sequences'] = [
            inner_exactness_check(G, U, config.seed or 0, config.tol).to_dict()
            for U in invariant]
    return result


def hausdorff(document, config):
    action = valid_action(document, config)
    groupoid = germ_groupoid(action)
    return {
        'groupoid_hausdorff': groupoid_is_hausdorff(groupoid),
        'space_hausdorff': action.space.is_hausdorff(),
        'units_closed': units_closed(groupoid),
    }


def units_closed_command(document, config):
    '''Closed units, directly and through D_{1,t} closed in D_{t*}'''
    action = valid_action(document, config)
    return {
        'units_closed': units_closed(germ_groupoid(action)),
        'criterion': criterion_d1t_closed(action).to_dict(),
    }


def verify_iterated(document, config):
    '''The iterated isomorphism; random samples only spot-check the representation laws'''
    action = valid_action(document, config)
    return verify_iterated_iso(action, config.seed_or(ITERATED_SEED), config.tol,
                               config.spectral_tol).to_dict()
