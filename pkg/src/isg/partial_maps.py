'''
Inverse semigroups of partial bijections of {1..n}.
'''

from itertools import combinations, permutations

from common import DEFAULT_CAP
from exceptions import ResourceError, StructuralError
from log_utils import get_logger

from .semigroup import InverseSemigroup, find_unit, find_zero


def compose(s, t):
    '''
    The partial map s∘t, defined on {x in dom t : t(x) in dom s}.

    >>> compose(((2, 3),), ((1, 2), (3, 1)))
    ((1, 3),)
    '''
    s_map = dict(s)
    return tuple(sorted((x, s_map[y]) for x, y in t if y in s_map))


def invert(t):
    return tuple(sorted((y, x) for x, y in t))


def canonical_key(t):
    '''Partial maps sort by domain size, then by their sorted pairs'''
    return (len(t), t)


def map_label(t):
    '''
    >>> map_label(((1, 1), (2, 3)))
    '{1:1,2:3}'
    >>> map_label(())
    '{}'
    '''
    return '{' + ','.join(f'{x}:{y}' for x, y in t) + '}'


def check_generator(n, generator):
    pairs = []
    for x, y in generator.items():
        x, y = int(x), int(y)
        if not (1 <= x <= n and 1 <= y <= n):
            raise StructuralError(f'partial map {generator} leaves {{1..{n}}}')
        pairs.append((x, y))
    if len({y for _, y in pairs}) != len(pairs):
        raise StructuralError(f'partial map {generator} is not injective')
    return tuple(sorted(pairs))


def all_partial_bijections(n):
    '''
    Every injective partial map of {1..n} as a dict.

    >>> len(list(all_partial_bijections(2)))
    7
    '''
    points = range(1, n + 1)
    for k in range(n + 1):
        for domain in combinations(points, k):
            for image in permutations(points, k):
                yield dict(zip(domain, image))


def from_partial_bijections(n, generators, cap=DEFAULT_CAP) -> InverseSemigroup:
    '''
    Close `generators` under composition and inversion.

    Elements are indexed in canonical order (domain size, then sorted
    pairs) so the result does not depend on the generator order. An empty
    generator set gives the trivial semigroup made of the empty map.
    '''
    logger = get_logger('partial-bijections')

    gens = {check_generator(n, g) for g in generators}
    gens |= {invert(g) for g in gens}
    if not gens:
        gens = {()}

    known = set(gens)
    queue = list(gens)
    while queue:
        x = queue.pop()
        for y in list(known):
            for z in (compose(x, y), compose(y, x)):
                if z not in known:
                    known.add(z)
                    queue.append(z)
                    if len(known) > cap:
                        raise ResourceError(
                            f'closure of {len(gens)} partial maps on {n} points '
                            f'exceeds the size cap {cap}')

    elements = sorted(known, key=canonical_key)
    index = {t: i for i, t in enumerate(elements)}
    mul = [[index[compose(s, t)] for t in elements] for s in elements]
    inv = [index[invert(t)] for t in elements]

    logger.info(f'closed {len(gens)} partial maps on {n} points into {len(elements)} elements')

    return InverseSemigroup.from_table(
        mul, inv,
        unit=find_unit(mul),
        zero=find_zero(mul),
        labels=[map_label(t) for t in elements],
        maps=tuple(dict(t) for t in elements),
    )


def symmetric_inverse_monoid(n, cap=DEFAULT_CAP) -> InverseSemigroup:
    '''
    I_n, of size sum_k C(n,k)^2 k!.

    >>> symmetric_inverse_monoid(2).size
    7
    '''
    return from_partial_bijections(n, list(all_partial_bijections(n)), cap)
