'''
JSON documents for every kind of input and output.

Element and point references accept display labels or decimal indices.
Matrices are nested lists, or {"real": [...], "imag": [...]} pairs.
'''

import numpy as np

from act import SpaceAction
from common import DEFAULT_CAP
from exceptions import StructuralError
from fdalg import AlgElement, FdAlgebra, PartialIsoAction
from gpdalg import FiniteGroupoid
from isg import InverseSemigroup, from_partial_bijections
from topo import FiniteSpace
from xprod import BlockAutomorphism, CrossedElement, CrossedProduct


def require(doc, *keys):
    '''
    >>> require({'a': 1}, 'a', 'b')
    Traceback (most recent call last):
    ...
    exceptions.StructuralError: missing key: b
    '''
    if not isinstance(doc, dict):
        raise StructuralError(f'expected an object, got {type(doc).__name__}')
    for key in keys:
        if key not in doc:
            raise StructuralError(f'missing key: {key}')


def _optional_index(value, size, name):
    if value is None:
        return None
    if not isinstance(value, int) or not 0 <= value < size:
        raise StructuralError(f'{name} must be an element index, got {value!r}')
    return value


def is_generator_document(doc):
    return isinstance(doc, dict) and 'generators' in doc


def semigroup_table(doc):
    '''
    The raw (mul, inv, unit, zero, labels) of a table document, with
    every index checked to be in range.
    '''
    require(doc, 'mul', 'inv')
    mul, inv = doc['mul'], doc['inv']
    size = doc.get('size', len(inv))
    if not isinstance(size, int) or size < 1:
        raise StructuralError(f'size must be a positive integer, got {size!r}')
    if len(inv) != size or len(mul) != size or any(len(row) != size for row in mul):
        raise StructuralError(f'mul must be a {size}x{size} table and inv of length {size}')
    for value in [v for row in mul for v in row] + list(inv):
        if not isinstance(value, int) or not 0 <= value < size:
            raise StructuralError(f'table entry out of range: {value!r}')
    unit = _optional_index(doc.get('unit'), size, 'unit')
    zero = _optional_index(doc.get('zero'), size, 'zero')
    return mul, inv, unit, zero, doc.get('labels')


def semigroup_from_document(doc, cap=DEFAULT_CAP) -> InverseSemigroup:
    '''
    Either {"size", "mul", "inv", "unit", "zero", "labels"?} or
    {"points": n, "generators": [{"map": {src: dst}}, ...]}. Axioms are
    not checked, see `isg.validate`.

    >>> S = semigroup_from_document({'points': 2, 'generators': [{'map': {'1': 2}}]})
    >>> S.size, S.unit, S.zero
    (5, None, 0)
    '''
    if is_generator_document(doc):
        require(doc, 'points')
        n = doc['points']
        if not isinstance(n, int) or n < 0:
            raise StructuralError(f'points must be a non-negative integer, got {n!r}')
        generators = []
        for gen in doc['generators']:
            require(gen, 'map')
            try:
                generators.append({int(x): int(y) for x, y in gen['map'].items()})
            except (TypeError, ValueError):
                raise StructuralError(f'generator points must be integers: {gen["map"]}')
        return from_partial_bijections(n, generators, cap)
    mul, inv, unit, zero, labels = semigroup_table(doc)
    return InverseSemigroup.from_table(mul, inv, unit, zero, labels)


def semigroup_to_document(S: InverseSemigroup):
    doc = {
        'size': S.size,
        'mul': [list(row) for row in S.mul],
        'inv': list(S.inv),
        'unit': S.unit,
        'zero': S.zero,
    }
    if S.labels:
        doc['labels'] = list(S.labels)
    return doc


def space_from_document(doc) -> FiniteSpace:
    '''{"points": [...], "opens": [[...], ...]}, or "discrete": true instead of opens'''
    require(doc, 'points')
    if doc.get('discrete'):
        return FiniteSpace.discrete(doc['points'])
    require(doc, 'opens')
    return FiniteSpace.from_opens(doc['points'], doc['opens'])


def action_from_document(doc, cap=DEFAULT_CAP) -> SpaceAction:
    '''
    {"semigroup": ..., "space": ..., "maps": {t: {"domain": [x...], "map": {x: y}}},
    "zero_preserving": bool}. Elements missing from "maps" act on nothing.
    '''
    require(doc, 'semigroup', 'space', 'maps')
    S = semigroup_from_document(doc['semigroup'], cap)
    X = space_from_document(doc['space'])
    maps = [{} for _ in range(S.size)]
    for key, entry in doc['maps'].items():
        t = S.index_of(key)
        require(entry, 'map')
        mapping = {X.index_of(x): X.index_of(y) for x, y in entry['map'].items()}
        if 'domain' in entry and X.subset(entry['domain']) != frozenset(mapping):
            raise StructuralError(f'domain of {S.label(t)} differs from the keys of its map')
        maps[t] = mapping
    return SpaceAction.from_maps(S, X, maps, bool(doc.get('zero_preserving', False)))


def action_to_document(action: SpaceAction):
    S, X = action.semigroup, action.space
    return {
        'semigroup': semigroup_to_document(S),
        'space': X.to_document(),
        'maps': {S.label(t): {'domain': X.names(action.domain(t)), 'map': action.describe(t)}
                 for t in range(S.size)},
        'zero_preserving': action.zero_preserving,
    }


def matrix_from_document(doc) -> np.ndarray:
    '''
    >>> matrix_from_document({'real': [[1, 0]], 'imag': [[0, 2]]}).tolist()
    [[(1+0j), 2j]]
    '''
    try:
        if isinstance(doc, dict):
            require(doc, 'real')
            real = np.asarray(doc['real'], dtype=float)
            imag = np.asarray(doc.get('imag', np.zeros_like(real)), dtype=float)
            if real.shape != imag.shape:
                raise StructuralError('real and imaginary parts differ in shape')
            matrix = real + 1j * imag
        else:
            matrix = np.asarray(doc, dtype=complex)
    except (TypeError, ValueError) as err:
        raise StructuralError(f'not a numeric matrix: {err}')
    if matrix.ndim != 2:
        raise StructuralError(f'expected a matrix, got shape {matrix.shape}')
    return matrix


def matrix_to_document(matrix):
    matrix = np.asarray(matrix, dtype=complex)
    return {'real': matrix.real.tolist(), 'imag': matrix.imag.tolist()}


def algebra_from_document(doc) -> FdAlgebra:
    require(doc, 'blocks')
    if not isinstance(doc['blocks'], list):
        raise StructuralError('blocks must be a list of dimensions')
    return FdAlgebra(tuple(doc['blocks']))


def element_from_document(A: FdAlgebra, doc) -> AlgElement:
    '''One matrix per block'''
    if not isinstance(doc, list):
        raise StructuralError('an algebra element is a list of block matrices')
    return A.element([matrix_from_document(m) for m in doc])


def fd_action_from_document(doc, cap=DEFAULT_CAP) -> PartialIsoAction:
    '''
    {"semigroup": ..., "algebra": {"blocks": [...]},
     "maps": {t: {"source": [...], "target": [...], "block_map": {b: c},
                  "unitaries": {b: matrix}}}}

    "block_map" defaults to the identity on "source"; "target", when
    given, must be its image.
    '''
    require(doc, 'semigroup', 'algebra', 'maps')
    S = semigroup_from_document(doc['semigroup'], cap)
    A = algebra_from_document(doc['algebra'])
    block_maps = [{} for _ in range(S.size)]
    unitaries = [{} for _ in range(S.size)]
    for key, entry in doc['maps'].items():
        t = S.index_of(key)
        if not isinstance(entry, dict):
            raise StructuralError(f'action data of {S.label(t)} must be an object')
        try:
            if 'block_map' in entry:
                mapping = {int(b): int(c) for b, c in entry['block_map'].items()}
            else:
                mapping = {int(b): int(b) for b in entry.get('source', [])}
        except (TypeError, ValueError):
            raise StructuralError(f'block indices of {S.label(t)} must be integers')
        if 'source' in entry and set(int(b) for b in entry['source']) != set(mapping):
            raise StructuralError(f'source of {S.label(t)} differs from its block map')
        if 'target' in entry and set(int(c) for c in entry['target']) != set(mapping.values()):
            raise StructuralError(f'target of {S.label(t)} differs from its block map')
        block_maps[t] = mapping
        unitaries[t] = {int(b): matrix_from_document(u)
                        for b, u in entry.get('unitaries', {}).items()}
    return PartialIsoAction.from_data(S, A, block_maps, unitaries)


def fd_action_to_document(action: PartialIsoAction):
    S = action.semigroup
    return {
        'semigroup': semigroup_to_document(S),
        'algebra': {'blocks': list(action.algebra.blocks)},
        'maps': {
            S.label(t): {
                'source': sorted(action.sources[t]),
                'target': sorted(action.target(t)),
                'block_map': {str(b): c for b, c in sorted(action.block_maps[t].items())},
                'unitaries': {str(b): matrix_to_document(u)
                              for b, u in sorted(action.unitaries[t].items())},
            }
            for t in range(S.size)
        },
    }


def crossed_element_from_document(crossed: CrossedProduct, doc) -> CrossedElement:
    '''{t: element} with t a label or an index of S (with its unit adjoined)'''
    if not isinstance(doc, dict):
        raise StructuralError('a crossed-product element is an object keyed by element')
    S, A = crossed.semigroup, crossed.algebra
    return crossed.element({S.index_of(t): element_from_document(A, xi)
                            for t, xi in doc.items()})


def groupoid_from_document(doc) -> FiniteGroupoid:
    '''
    {"arrows": [...], "units": [...], "source": [unit], "range": [unit],
     "identities": [arrow], "inverse": [arrow], "composition": [[g, h, gh], ...]}
    with arrows and units given by label and composition by arrow index.
    '''
    require(doc, 'arrows', 'units', 'source', 'range', 'identities', 'inverse', 'composition')
    arrows = [str(a) for a in doc['arrows']]
    units = [str(x) for x in doc['units']]

    def lookup(labels, value, what):
        value = str(value)
        if value not in labels:
            raise StructuralError(f'unknown {what}: {value}')
        return labels.index(value)

    composition = {}
    for triple in doc['composition']:
        if len(triple) != 3:
            raise StructuralError(f'composition entries are [g, h, gh], got {triple}')
        g, h, k = triple
        composition[(g, h)] = k
    return FiniteGroupoid.from_data(
        arrows, units,
        [lookup(units, x, 'unit') for x in doc['source']],
        [lookup(units, x, 'unit') for x in doc['range']],
        [lookup(arrows, g, 'arrow') for g in doc['identities']],
        [lookup(arrows, g, 'arrow') for g in doc['inverse']],
        composition)


def groupoid_to_document(G: FiniteGroupoid):
    doc = {
        'arrows': list(G.arrow_labels),
        'units': list(G.unit_labels),
        'source': [G.unit_labels[x] for x in G.source],
        'range': [G.unit_labels[x] for x in G.range],
        'identities': [G.arrow_labels[g] for g in G.units],
        'inverse': [G.arrow_labels[g] for g in G.inverse],
        'composition': [[g, h, k] for (g, h), k in sorted(G.composition.items())],
    }
    if G.grading:
        doc['grading'] = {t: sorted(G.arrow_labels[g] for g in arrows)
                          for t, arrows in sorted(G.grading.items())}
    return doc


def sign_data_from_document(doc):
    '''
    (A, I, alpha, u) from {"blocks": [...], "ideal": [...], "sigma": [...],
    "w": [matrix, ...], "u": element}. sigma and w default to the
    identity, u to the unit of I.
    '''
    A = algebra_from_document(doc)
    I = A.check_ideal(doc.get('ideal', []))
    k = len(A.blocks)
    sigma = tuple(doc.get('sigma', range(k)))
    if 'w' in doc:
        w = tuple(matrix_from_document(m) for m in doc['w'])
    else:
        w = tuple(np.eye(d, dtype=complex) for d in A.blocks)
    alpha = BlockAutomorphism(A, sigma, w)
    u = element_from_document(A, doc['u']) if 'u' in doc else A.support_projection(I)
    return A, I, alpha, u


def sign_data_to_document(A, I, alpha, u):
    return {
        'blocks': list(A.blocks),
        'ideal': sorted(I),
        'sigma': list(alpha.sigma),
        'w': [matrix_to_document(m) for m in alpha.w],
        'u': u.to_document(),
    }
