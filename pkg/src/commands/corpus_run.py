'''
Run the bundled acceptance suites of corpus/corpus.yml.

Each suite takes its members from the manifest and raises
AssertionFailure on the first member that fails. Suites run one after the
other; the report lists every suite that ran.
'''

from datetime import datetime

import numpy as np

from act import (
    criterion_d1t_closed, e_unitary_cross_check, germ_groupoid, groupoid_is_hausdorff,
    units_closed, validate_action
)
from corpus import expand_members, load_fixture, load_manifest
from exceptions import AssertionFailure, StructuralError
from fdalg import validate_fd_action
from gpdalg import verify_iterated_iso
from log_utils import elapsed_string, get_logger
from xprod import (
    CrossedProduct, check_representation, crossed_01m1, e_faithful_check,
    expectation_laws_check, grading_isometry_check, induce, lattice_criterion,
    regular_module_and_rep, relation_span_check
)

from .inputs import labelled_pair
from .semigroups import standard_corpus


def _fd_crossed(name, config):
    action = load_fixture(name, 'fd-action')
    report = validate_fd_action(action, config.tol)
    if not report.valid:
        raise AssertionFailure(f'fixture {name} is not a valid action', report.to_dict())
    return CrossedProduct(action, config.order)


def e_star_unitary_suite(suite, config, seed):
    expected = suite.get('expected', {})
    cases = []
    for name in expand_members(suite.get('members')):
        S = load_fixture(name, 'semigroup')
        details = e_unitary_cross_check(S, standard_corpus(S)).details
        holds = details['e_star_unitary']
        if name in expected and holds != expected[name]:
            raise AssertionFailure(f'{name}: E*-unitary is {holds}, expected {expected[name]}',
                                   {'fixture': name})
        witness = labelled_pair(S, details['witness_pair'])
        if not holds and witness is None:
            raise AssertionFailure(f'{name}: no witness for the failure of E*-unitarity',
                                   {'fixture': name})
        cases.append({'fixture': name, 'e_star_unitary': holds, 'witness': witness})
    return cases


def hausdorff_suite(suite, config, seed):
    cases = []
    for name in expand_members(suite.get('members')):
        action = load_fixture(name, 'action')
        report = validate_action(action)
        if not report.valid:
            raise AssertionFailure(f'fixture {name} is not a valid action', report.to_dict())
        groupoid = germ_groupoid(action)
        closed = units_closed(groupoid)
        criterion = criterion_d1t_closed(action).holds
        separated = groupoid_is_hausdorff(groupoid)
        if closed != criterion or separated != (action.space.is_hausdorff() and closed):
            raise AssertionFailure(f'{name}: closed units and separation disagree',
                                   {'fixture': name})
        cases.append({'fixture': name, 'units_closed': closed, 'hausdorff': separated})
    return cases


def expectation_suite(suite, config, seed):
    samples = int(suite.get('samples', 10))
    cases = []
    for k, name in enumerate(expand_members(suite.get('members'))):
        crossed = _fd_crossed(name, config)
        laws = expectation_laws_check(crossed, seed + k, samples, config.tol,
                                      config.spectral_tol)
        if not laws:
            raise AssertionFailure(f'{name}: conditional expectation law fails',
                                   {'fixture': name, **laws.witness})
        span = relation_span_check(crossed, config.spectral_tol)
        if not span:
            raise AssertionFailure(f'{name}: normal form disagrees with the relation span',
                                   {'fixture': name})
        cases.append({'fixture': name, 'samples': samples, 'dim_crossed': crossed.dimension})
    return cases


def injectivity_suite(suite, config, seed):
    cases = []
    for k, name in enumerate(expand_members(suite.get('members'))):
        crossed = _fd_crossed(name, config)
        rep = regular_module_and_rep(crossed)
        represented = check_representation(rep, seed + k, tol=config.spectral_tol)
        if not represented:
            raise AssertionFailure(f'{name}: regular maps are not a representation',
                                   {'fixture': name, **represented.witness})
        kernel = rep.kernel_rank()
        if kernel:
            raise AssertionFailure(f'{name}: the regular representation is not injective',
                                   {'fixture': name, 'kernel_rank': kernel})
        cases.append({'fixture': name, 'dim_crossed': crossed.dimension, 'kernel_rank': 0})
    return cases


def sign_monoid_suite(suite, config, seed):
    expected = suite.get('expected', {})
    cases = []
    for k, name in enumerate(expand_members(suite.get('members'))):
        A, I, alpha, u = load_fixture(name, 'sign-data')
        details = crossed_01m1(A, I, alpha, u, seed + k, tol=config.tol).details
        for key, value in expected.get(name, {}).items():
            if details.get(key) != value:
                raise AssertionFailure(f'{name}: {key} is {details.get(key)}, expected {value}',
                                       {'fixture': name})
        cases.append({'fixture': name,
                      **{key: details[key] for key in ('dim_crossed', 'dim_z2', 'dim_J')}})
    return cases


def iterated_suite(suite, config, seed):
    expected = suite.get('expected', {})
    cases = []
    for k, name in enumerate(expand_members(suite.get('members'))):
        details = verify_iterated_iso(load_fixture(name, 'action'), seed + k, config.tol,
                                      config.spectral_tol).details
        for key, value in expected.get(name, {}).items():
            if details.get(key) != value:
                raise AssertionFailure(f'{name}: {key} is {details.get(key)}, expected {value}',
                                       {'fixture': name})
        cases.append({'fixture': name, 'dim': details['dim'], 'blocks': details['blocks']})
    return cases


def irreducibles_suite(suite, config, seed):
    '''
    The irreducible representations of A, one block each, form an
    E-faithful family. A single character that misses a block is not
    E-faithful, yet may still induce a faithful representation.
    '''
    cases = []
    for name in expand_members(suite.get('members')):
        crossed = _fd_crossed(name, config)
        k = len(crossed.algebra.blocks)
        family = [[int(b == c) for c in range(k)] for b in range(k)]
        verdict = e_faithful_check(crossed, family)
        if not (verdict.holds and verdict.details['induced_faithful']):
            raise AssertionFailure(f'{name}: the irreducibles do not induce faithfully',
                                   {'fixture': name})
        cases.append({'fixture': name, 'blocks': k})

    remark = suite.get('remark')
    if remark:
        name, multiplicities = remark['fixture'], remark['multiplicities']
        crossed = _fd_crossed(name, config)
        verdict = e_faithful_check(crossed, [multiplicities])
        criterion = lattice_criterion(crossed, multiplicities)
        faithful = induce(crossed, multiplicities).is_faithful()
        if verdict.holds or criterion.holds or not faithful:
            raise AssertionFailure(f'{name}: a character missing a block should induce '
                                   'faithfully without being E-faithful', {'fixture': name})
        cases.append({'fixture': name, 'multiplicities': multiplicities, 'faithful': faithful})
    return cases


def isometry_suite(suite, config, seed):
    cases = []
    for k, name in enumerate(expand_members(suite.get('members'))):
        crossed = _fd_crossed(name, config)
        rep = regular_module_and_rep(crossed)
        rng = np.random.default_rng(seed + k)
        for t in range(crossed.semigroup.size):
            xi = crossed.action.random_bimodule_element(t, rng)
            verdict = grading_isometry_check(rep, t, xi)
            if not verdict:
                raise AssertionFailure(f'{name}: the regular representation is not isometric',
                                       {'fixture': name, **verdict.witness})
        cases.append({'fixture': name, 'elements': crossed.semigroup.size})
    return cases


SUITES = {
    'e-star-unitary': e_star_unitary_suite,
    'hausdorff': hausdorff_suite,
    'expectation': expectation_suite,
    'injectivity': injectivity_suite,
    'sign-monoid': sign_monoid_suite,
    'iterated': iterated_suite,
    'irreducibles': irreducibles_suite,
    'isometry': isometry_suite,
}


def selected_suites(document, manifest):
    '''
    All manifest suites, the named ones for a list, or the given
    definitions for a mapping of suite name to {members, ...}.
    '''
    defined = manifest.get('suites', {})
    chosen = document.get('suites')
    if chosen is None:
        chosen = defined
    elif isinstance(chosen, list):
        missing = [name for name in chosen if name not in defined]
        if missing:
            raise StructuralError(f'unknown suite: {missing[0]}')
        chosen = {name: defined[name] for name in chosen}
    elif not isinstance(chosen, dict):
        raise StructuralError('"suites" must be a list of names or a mapping')
    unknown = [name for name in chosen if name not in SUITES]
    if unknown:
        raise StructuralError(f'unknown suite: {unknown[0]}')
    return chosen


def corpus_run(document, config):
    '''
    Run the selected suites. A failing suite does not stop the others;
    any failure makes the whole run fail with every suite report as the
    witness.
    '''
    logger = get_logger('corpus-run')

    seed = config.require_seed('corpus-run')
    suites = selected_suites(document, load_manifest())
    reports = []
    for name, suite in suites.items():
        start_time = datetime.now()
        try:
            cases = SUITES[name](suite or {}, config, seed)
            reports.append({'suite': name, 'passed': True, 'cases': cases, 'witness': None})
        except AssertionFailure as err:
            logger.warning(f'suite {name} failed: {err}')
            reports.append({'suite': name, 'passed': False, 'error': str(err),
                            'witness': err.witness})
        logger.info(f'suite {name}: {elapsed_string(datetime.now() - start_time)}')

    failed = [report['suite'] for report in reports if not report['passed']]
    if failed:
        raise AssertionFailure(f'failed suites: {", ".join(failed)}', {'suites': reports})
    return {'suites': reports}
