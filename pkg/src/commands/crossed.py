'''
Commands on crossed products by actions on finite-dimensional algebras.
'''

import numpy as np

from corpus.documents import crossed_element_from_document, matrix_from_document
from exceptions import AssertionFailure, PreconditionError, StructuralError
from log_utils import get_logger
from xprod import (
    CrossedProduct, check_representation, crossed_01m1, e_faithful_check,
    expectation_laws_check, expectation_range_check, grading_isometry_check, induce,
    induced_functional, lattice_criterion, lattice_of_ideals, positivity_check,
    regular_module_and_rep, relation_span_check
)

from .inputs import read_fd_action, read_input


def crossed_product(document, config):
    '''
    Dimension and blocks of the crossed product. The regular representation
    is faithful, so the full, reduced and algebraic crossed products
    coincide; the blocks are those of its image.
    '''
    logger = get_logger('crossed-product')

    crossed = CrossedProduct(read_fd_action(document, config), config.order)
    rep = regular_module_and_rep(crossed)
    kernel = rep.kernel_rank()
    if kernel:
        raise AssertionFailure('the regular representation is not injective',
                               {'kernel_rank': kernel})
    blocks = rep.image_blocks(np.random.default_rng(config.seed or 0))
    if sum(d * d for d in blocks) != crossed.dimension:
        raise AssertionFailure('image blocks do not add up to the dimension',
                               {'blocks': blocks, 'dim_crossed': crossed.dimension})

    span = relation_span_check(crossed, config.spectral_tol)
    if not span:
        raise AssertionFailure('normal forms disagree with the relation span', span.witness)
    ranges = expectation_range_check(crossed)
    if not ranges:
        raise AssertionFailure('E does not map onto A', ranges.witness)

    ideals, irreducible = lattice_of_ideals(crossed.action)
    result = {
        'dim_crossed': crossed.dimension,
        'blocks': blocks,
        'order': config.order,
        'regular': {'dimension': rep.dimension, 'kernel_rank': kernel, 'faithful': True},
        'relation_span': span.to_dict(),
        'expectation_range': ranges.to_dict(),
        'lattice': {'ideals': [sorted(I) for I in ideals],
                    'irreducible': [sorted(J) for J in irreducible]},
    }
    if 'element' in document:
        x = crossed_element_from_document(crossed, document['element'])
        result['normal_form'] = x.normal_form().to_document()
    logger.info(f'dim {crossed.dimension}, blocks {blocks}')
    return result


def expectation(document, config):
    '''
    E of the given element with its positivity, or, without one, the laws
    of E on seeded random elements.
    '''
    crossed = CrossedProduct(read_fd_action(document, config), config.order)
    if 'element' not in document:
        seed = config.require_seed('expectation')
        verdict = expectation_laws_check(crossed, seed, int(document.get('samples', 10)),
                                         config.tol, config.spectral_tol)
        if not verdict:
            raise AssertionFailure('conditional expectation law fails', verdict.witness)
        return verdict.to_dict()

    x = crossed_element_from_document(crossed, document['element'])
    result = {
        'expectation': crossed.expectation(x).to_document(),
        'normal_form': x.normal_form().to_document(),
        'positivity': positivity_check(x, config.tol, config.spectral_tol).to_dict(),
    }
    if 'functional' in document:
        phi = [matrix_from_document(m) for m in document['functional']]
        result['functional'] = induced_functional(crossed, phi, x)
    return result


def induce_command(document, config):
    '''
    The representation induced from pi, given by block multiplicities,
    with its faithfulness and the criteria that predict it.
    '''
    logger = get_logger('induce')

    seed = config.require_seed('induce')
    crossed = CrossedProduct(read_fd_action(document, config), config.order)
    k = len(crossed.algebra.blocks)
    multiplicities = document.get('multiplicities', [1] * k)
    if not isinstance(multiplicities, list) or len(multiplicities) != k:
        raise StructuralError(f'expected {k} multiplicities')
    if not any(multiplicities):
        raise PreconditionError('the representation of A must be nonzero')

    rep = induce(crossed, multiplicities)
    represented = check_representation(rep, seed, tol=config.spectral_tol)
    if not represented:
        raise AssertionFailure('induced maps are not a representation', represented.witness)

    faithful_on_A = all(int(m) > 0 for m in multiplicities)
    criterion = lattice_criterion(crossed, multiplicities)
    result = {
        'multiplicities': [int(m) for m in multiplicities],
        'dimension': rep.dimension,
        'kernel_rank': rep.kernel_rank(),
        'faithful': rep.is_faithful(),
        'E_faithful': e_faithful_check(crossed, [multiplicities]).to_dict(),
        'lattice_criterion': criterion.to_dict(),
        'representation': represented.to_dict(),
    }
    if faithful_on_A:
        result['isometry'] = _isometry(crossed, rep, seed)
    if 'element' in document and 'functional' in document:
        x = crossed_element_from_document(crossed, document['element'])
        phi = [matrix_from_document(m) for m in document['functional']]
        result['functional'] = induced_functional(crossed, phi, x)
    logger.info(f'dimension {rep.dimension}, faithful {result["faithful"]}')
    return result


def _isometry(crossed, rep, seed):
    '''||image of xi delta_t|| = ||xi|| on one random xi per t'''
    rng = np.random.default_rng(seed)
    worst = 0.0
    for t in range(crossed.semigroup.size):
        xi = crossed.action.random_bimodule_element(t, rng)
        verdict = grading_isometry_check(rep, t, xi)
        if not verdict:
            raise AssertionFailure('a faithful induced representation is not isometric '
                                   'on a grading space', verdict.witness)
        worst = max(worst, abs(verdict.details['operator_norm'] - verdict.details['norm']))
    return {'holds': True, 'max_deviation': worst}


def verify_01m1(document, config):
    seed = config.require_seed('verify-01m1')
    A, I, alpha, u = read_input('sign-data', document, config)
    return crossed_01m1(A, I, alpha, u, seed, int(document.get('samples', 3)),
                        config.tol).to_dict()
