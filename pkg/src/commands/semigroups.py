'''Commands on inverse semigroups, finite spaces and semilattice spectra'''

from act import e_unitary_cross_check, natural_action, universal_action
from corpus.documents import action_from_document, require, semigroup_table
from exceptions import PreconditionError
from isg import (
    InverseSemigroup, is_e_star_unitary, is_e_unitary, order_condition, order_is_partial_order,
    sorted_elements, validate, validate_semigroup
)
from log_utils import get_logger
from topo import (
    basis_law, ideal_open_bijection_check, semilattice_spectrum, tight_characters,
    ultracharacters, validate_space
)

from .inputs import fixture_name, labelled_pair, read_input


def validate_isg(document, config):
    '''
    The validation report of a semigroup. Table documents are checked
    before any semigroup is built from them.
    '''
    logger = get_logger('validate-isg')

    if fixture_name(document) is None and 'mul' in document:
        mul, inv, unit, zero, labels = semigroup_table(document)
        report = validate(mul, inv, unit, zero)
        if not report.valid:
            logger.info(f'invalid semigroup: {report.rules()}')
            return report.to_dict()
        S = InverseSemigroup.from_table(mul, inv, unit, zero, labels)
    else:
        S = read_input('semigroup', document, config)
        report = validate_semigroup(S)
        if not report.valid:
            return report.to_dict()

    result = report.to_dict()
    result.update({
        'size': S.size,
        'elements': [S.label(t) for t in sorted_elements(S, config.order)],
        'idempotents': [S.label(e) for e in sorted(S.idempotents)],
        'unit': None if S.unit is None else S.label(S.unit),
        'zero': None if S.zero is None else S.label(S.zero),
        'partial_order': order_is_partial_order(S).holds,
    })
    logger.info(f'{S.size} elements, {len(S.idempotents)} idempotents')
    return result


def validate_space_command(document, config):
    if fixture_name(document) is not None or document.get('discrete'):
        X = read_input('space', document, config)
        labels, opens = X.labels, X.to_document()['opens']
    else:
        require(document, 'points', 'opens')
        labels, opens = document['points'], document['opens']
    report = validate_space(labels, opens)
    result = report.to_dict()
    if report.valid:
        X = read_input('space', {'points': labels, 'opens': opens}, config)
        result.update({
            'points': len(X.labels),
            'opens': len(X.opens()),
            'discrete': X.is_discrete(),
            'hausdorff': X.is_hausdorff(),
        })
    return result


def e_unitary(document, config):
    '''
    E-unitarity, and E*-unitarity with the order condition when S has a
    zero. Witnesses are pairs (e, t) of element labels.
    '''
    S = _valid_semigroup(document, config)
    plain = is_e_unitary(S)
    result = {
        'e_unitary': plain.holds,
        'e_unitary_witness': labelled_pair(S, plain.witness),
        'e_star_unitary': None,
        'witness': None,
        'order_condition': None,
    }
    if S.zero is not None:
        star = is_e_star_unitary(S)
        result.update({
            'e_star_unitary': star.holds,
            'witness': labelled_pair(S, star.witness),
            'order_condition': order_condition(S).holds,
        })
    return result


def spectrum(document, config):
    '''The characters of E(S) with their topology, basis and tight part'''
    S = _valid_semigroup(document, config)
    patch = bool(document.get('patch', False))
    spectrum_E = semilattice_spectrum(S, patch)
    X = spectrum_E.space
    ultra, closure = ultracharacters(spectrum_E)
    return {
        'characters': list(X.labels),
        'patch': patch,
        'space': X.to_document(),
        'basis': {S.label(e): X.names(spectrum_E.basis(e)) for e in spectrum_E.semilattice},
        'basis_law': basis_law(spectrum_E).holds,
        'ideal_open_bijection': ideal_open_bijection_check(spectrum_E).to_dict(),
        'ultracharacters': X.names(ultra),
        'ultracharacter_closure': X.names(closure),
        'tight': X.names(tight_characters(spectrum_E)),
        'hausdorff': X.is_hausdorff(),
    }


def standard_corpus(S: InverseSemigroup, extra=()):
    '''
    Zero-preserving actions of S to test closed units against: the
    universal action, the defining action of a semigroup of partial
    bijections, and any given (name, action) pairs.
    '''
    corpus = [('universal', universal_action(S))]
    if S.maps is not None:
        natural = natural_action(S)
        if natural.zero_preserving:
            corpus.append(('natural', natural))
    return corpus + list(extra)


def cross_check(document, config):
    '''
    Whether E*-unitarity, the order condition and closed units of the
    universal action agree, and pass to every action of the corpus.
    '''
    source = document.get('semigroup', document) if fixture_name(document) is None else document
    S = _valid_semigroup(source, config)
    extra = []
    for k, doc in enumerate(document.get('actions', [])):
        action = action_from_document(doc, config.cap)
        if (action.semigroup.mul, action.semigroup.inv) != (S.mul, S.inv):
            raise PreconditionError(f'action {k} is not an action of the given semigroup')
        extra.append((doc.get('name', f'action-{k}'), action))
    verdict = e_unitary_cross_check(S, standard_corpus(S, extra))
    result = verdict.to_dict()
    result['witness_pair'] = labelled_pair(S, verdict.details['witness_pair'])
    return result


def _valid_semigroup(document, config) -> InverseSemigroup:
    S = read_input('semigroup', document, config)
    report = validate_semigroup(S)
    if not report.valid:
        raise PreconditionError(f'not an inverse semigroup: {report.rules()}')
    return S
