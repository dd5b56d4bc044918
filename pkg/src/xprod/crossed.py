'''
The algebraic crossed product of an action by partial isomorphisms.

It is the direct sum of the H_t modulo the span of the relations
theta_{u,t}(xi) delta_u - xi delta_t. Since theta is the identity on
I_{t,u}, a matrix block b of a summand delta_t can be moved to delta_u
exactly when b lies in I_{t,u}. For each block b this groups the elements
whose source contains b into classes; the normal form keeps every block
in the first element of its class (in the chosen total order on S), so

    dim = sum over blocks b of d_b^2 * (number of classes of b)
'''

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Tuple

import numpy as np

from act import germ_groupoid, prim_action, units_closed
from common import EXACT_TOL, SPECTRAL_TOL
from exceptions import InternalError, PreconditionError
from fdalg import AlgElement, PartialIsoAction, complement_check, ideal_I_tu, rank, with_unit
from isg import sorted_elements
from log_utils import get_logger
from report import Verdict


@dataclass(frozen=True, eq=False)
class CrossedElement:
    crossed: CrossedProduct
    # t -> xi_t in H_t
    components: Dict[int, AlgElement]

    def _combine(self, other, sign):
        result = dict(self.components)
        for t, xi in other.components.items():
            result[t] = result[t] + sign * xi if t in result else sign * xi
        return CrossedElement(self.crossed, result)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return -1 * self

    def __mul__(self, scalar):
        return CrossedElement(self.crossed, {t: scalar * xi for t, xi in self.components.items()})

    __rmul__ = __mul__

    def __matmul__(self, other):
        return self.crossed.multiply(self, other)

    def star(self):
        return self.crossed.star(self)

    def normal_form(self):
        return self.crossed.normal_form(self)

    def coordinates(self):
        return self.crossed.coordinates(self)

    def is_zero(self, tol=EXACT_TOL):
        return all(xi.is_zero(tol) for xi in self.normal_form().components.values())

    def allclose(self, other, tol=EXACT_TOL):
        return (self - other).is_zero(tol)

    def norm(self):
        '''Euclidean norm of the normal-form coordinates'''
        return float(np.linalg.norm(self.coordinates()))

    def to_document(self):
        S = self.crossed.semigroup
        return {S.label(t): xi.to_document() for t, xi in sorted(self.components.items())}


class CrossedProduct:
    '''
    A crossed product with a fixed total order on S (`index` or `lex`).
    A unit acting by the identity is adjoined to S when it has none.
    '''

    def __init__(self, action: PartialIsoAction, order='index'):
        self.action = with_unit(action)
        self.semigroup = self.action.semigroup
        self.algebra = self.action.algebra
        self.order = sorted_elements(self.semigroup, order)
        self.position = {t: i for i, t in enumerate(self.order)}

    @cached_property
    def common(self) -> Dict[Tuple[int, int], FrozenSet[int]]:
        '''I_{t,u} for every pair'''
        n = self.semigroup.size
        return {(t, u): ideal_I_tu(self.action, t, u) for t in range(n) for u in range(n)}

    @cached_property
    def classes(self) -> Dict[int, List[Tuple[int, ...]]]:
        '''
        For each block b, the partition of {t : b in I_{t*t}} by
        t ~ u iff b in I_{t,u}, each class listed in the total order.
        '''
        sources = self.action.sources
        classes = {}
        for b in range(len(self.algebra.blocks)):
            members = [t for t in self.order if b in sources[t]]
            assigned = set()
            partition = []
            for t in members:
                if t in assigned:
                    continue
                cls = tuple(u for u in members if b in self.common[(t, u)])
                for u in cls:
                    for w in members:
                        if (b in self.common[(u, w)]) != (w in cls):
                            raise InternalError('block relation is not transitive',
                                                {'block': b, 't': t, 'u': u, 'w': w})
                assigned.update(cls)
                partition.append(cls)
            classes[b] = partition
        return classes

    @cached_property
    def representative(self) -> Dict[Tuple[int, int], int]:
        return {(t, b): cls[0]
                for b, partition in self.classes.items() for cls in partition for t in cls}

    @cached_property
    def slots(self) -> Tuple[Tuple[int, int], ...]:
        '''(t, b) pairs kept by the normal form'''
        pairs = [(cls[0], b) for b, partition in self.classes.items() for cls in partition]
        return tuple(sorted(pairs, key=lambda pair: (self.position[pair[0]], pair[1])))

    @cached_property
    def basis(self) -> Tuple[Tuple[int, int, int, int], ...]:
        blocks = self.algebra.blocks
        return tuple((t, b, i, j) for t, b in self.slots
                     for i in range(blocks[b]) for j in range(blocks[b]))

    @cached_property
    def index(self) -> Dict[Tuple[int, int, int, int], int]:
        return {key: p for p, key in enumerate(self.basis)}

    @property
    def dimension(self):
        return len(self.basis)

    def element(self, components) -> CrossedElement:
        components = {int(t): xi for t, xi in components.items()}
        for t, xi in components.items():
            self.action.check_bimodule(t, xi)
        return CrossedElement(self, components)

    def delta(self, t, xi: AlgElement) -> CrossedElement:
        '''xi delta_t'''
        return self.element({t: xi})

    def zero(self) -> CrossedElement:
        return CrossedElement(self, {})

    def from_algebra(self, a: AlgElement) -> CrossedElement:
        return self.delta(self.semigroup.unit, a)

    def basis_element(self, p) -> CrossedElement:
        t, b, i, j = self.basis[p]
        return CrossedElement(self, {t: self.algebra.matrix_unit(b, i, j)})

    def random_element(self, rng, density=0.6) -> CrossedElement:
        components = {}
        for t in range(self.semigroup.size):
            if self.action.sources[t] and rng.random() < density:
                components[t] = self.action.random_bimodule_element(t, rng)
        return CrossedElement(self, components)

    def normal_form(self, x: CrossedElement) -> CrossedElement:
        mats = {}
        for t, xi in x.components.items():
            for b in self.action.sources[t]:
                rep = self.representative[(t, b)]
                if rep not in mats:
                    mats[rep] = [np.zeros_like(m) for m in xi.mats]
                mats[rep][b] = mats[rep][b] + xi.mats[b]
        ordered = sorted(mats, key=self.position.__getitem__)
        return CrossedElement(self, {t: AlgElement(self.algebra, tuple(mats[t])) for t in ordered})

    def multiply(self, x: CrossedElement, y: CrossedElement) -> CrossedElement:
        '''(xi delta_t)(eta delta_u) = mu_{t,u}(xi (x) eta) delta_{tu}'''
        check_same_product(x, y)
        S = self.semigroup
        result = {}
        for t, xi in x.components.items():
            for u, eta in y.components.items():
                tu = S.product(t, u)
                term = self.action.mu(t, u, xi, eta)
                result[tu] = result[tu] + term if tu in result else term
        return self.normal_form(CrossedElement(self, result))

    def star(self, x: CrossedElement) -> CrossedElement:
        '''(xi delta_t)* = alpha_t(xi)* delta_{t*}'''
        S = self.semigroup
        result = {}
        for t, xi in x.components.items():
            term = self.action.apply(t, xi).star()
            s = S.star(t)
            result[s] = result[s] + term if s in result else term
        return self.normal_form(CrossedElement(self, result))

    def expectation(self, x: CrossedElement) -> AlgElement:
        '''E(sum xi_t delta_t) = sum xi_t [I_{1,t}]'''
        one = self.semigroup.unit
        result = self.algebra.zero()
        for t, xi in x.components.items():
            result = result + xi.compress(self.common[(one, t)])
        return result

    def inner_product(self, x: CrossedElement, y: CrossedElement) -> AlgElement:
        return self.expectation(self.star(x) @ y)

    def coordinates(self, x: CrossedElement) -> np.ndarray:
        vector = np.zeros(self.dimension, dtype=complex)
        for t, xi in self.normal_form(x).components.items():
            for b in self.action.sources[t]:
                block = xi.mats[b]
                for i in range(block.shape[0]):
                    for j in range(block.shape[1]):
                        vector[self.index[(t, b, i, j)]] = block[i, j]
        return vector

    def from_coordinates(self, vector) -> CrossedElement:
        mats = {}
        for p, (t, b, i, j) in enumerate(self.basis):
            if t not in mats:
                mats[t] = [np.zeros((d, d), dtype=complex) for d in self.algebra.blocks]
            mats[t][b][i, j] = vector[p]
        return CrossedElement(self, {t: AlgElement(self.algebra, tuple(m))
                                     for t, m in mats.items()})


def normal_form(x: CrossedElement) -> CrossedElement:
    return x.crossed.normal_form(x)


def multiply(x: CrossedElement, y: CrossedElement) -> CrossedElement:
    return x.crossed.multiply(x, y)


def star(x: CrossedElement) -> CrossedElement:
    return x.crossed.star(x)


def expectation(x: CrossedElement) -> AlgElement:
    return x.crossed.expectation(x)


def inner_product(x: CrossedElement, y: CrossedElement) -> AlgElement:
    return x.crossed.inner_product(x, y)


def positivity_check(x: CrossedElement, tol=EXACT_TOL, spectral_tol=SPECTRAL_TOL) -> Verdict:
    '''
    E(x*x) must have no eigenvalue below -spectral_tol, and must vanish
    exactly when the normal form of x does.
    '''
    value = x.crossed.inner_product(x, x)
    scale = max(1.0, x.norm() ** 2)
    minimum = min((float(np.linalg.eigvalsh((m + m.conj().T) / 2).min())
                   for m in value.mats), default=0.0)
    vanishes = value.norm() <= tol * scale
    is_zero = x.is_zero(tol)
    details = {'min_eigenvalue': minimum, 'expectation_zero': vanishes, 'element_zero': is_zero}
    if minimum < -spectral_tol * scale:
        return Verdict(False, {'rule': 'positive'}, details)
    if vanishes != is_zero:
        return Verdict(False, {'rule': 'faithful'}, details)
    return Verdict(True, details=details)


def expectation_laws_check(crossed: CrossedProduct, seed, samples=10,
                           tol=EXACT_TOL, spectral_tol=SPECTRAL_TOL) -> Verdict:
    '''
    On seeded random elements: E(x*) = E(x)*, E(a x b) = a E(x) b, E on
    A is the identity, and positivity and faithfulness of E(x*x).
    '''
    logger = get_logger('expectation')

    rng = np.random.default_rng(seed)
    A = crossed.algebra
    worst = 0.0
    for k in range(samples):
        x = crossed.random_element(rng)
        a, b = A.random_element(rng), A.random_element(rng)
        scale = max(1.0, x.norm()) * max(1.0, a.norm()) * max(1.0, b.norm())
        ex = crossed.expectation(x)

        if not crossed.expectation(crossed.star(x)).allclose(ex.star(), tol * scale):
            return Verdict(False, {'rule': 'self-adjoint', 'sample': k})
        sandwich = crossed.from_algebra(a) @ x @ crossed.from_algebra(b)
        if not crossed.expectation(sandwich).allclose(a @ ex @ b, tol * scale):
            return Verdict(False, {'rule': 'bimodular', 'sample': k})
        if not crossed.expectation(crossed.from_algebra(a)).allclose(a, tol * scale):
            return Verdict(False, {'rule': 'identity-on-A', 'sample': k})
        positive = positivity_check(x, tol, spectral_tol)
        if not positive:
            return Verdict(False, {'rule': positive.witness['rule'], 'sample': k},
                           positive.details)
        worst = min(worst, positive.details['min_eigenvalue'])

    logger.info(f'{samples} samples, min eigenvalue {worst:.3g}')
    return Verdict(True, details={'samples': samples, 'min_eigenvalue': worst})


def relation_span_check(crossed: CrossedProduct, tol=SPECTRAL_TOL) -> Verdict:
    '''
    Compare the normal form with a brute-force construction of the
    relation span inside the direct sum of all H_t: the normal form must be
    idempotent and its kernel must be the span of
    xi delta_u - xi delta_t for xi in I_{t,u}. The span of the relations
    with t <= u alone is reported as well.
    '''
    S, A, action = crossed.semigroup, crossed.algebra, crossed.action
    ambient = [(t, b, i, j) for t in range(S.size) for b in sorted(action.sources[t])
               for i in range(A.blocks[b]) for j in range(A.blocks[b])]
    position = {key: k for k, key in enumerate(ambient)}

    projection = np.zeros((crossed.dimension, len(ambient)), dtype=complex)
    for k, (t, b, i, j) in enumerate(ambient):
        rep = crossed.representative[(t, b)]
        projection[crossed.index[(rep, b, i, j)], k] = 1

    embedding = np.zeros((len(ambient), crossed.dimension), dtype=complex)
    for p, key in enumerate(crossed.basis):
        embedding[position[key], p] = 1

    def relations(pairs):
        rows = []
        for t, u in pairs:
            for b in sorted(crossed.common[(t, u)]):
                for i in range(A.blocks[b]):
                    for j in range(A.blocks[b]):
                        v = np.zeros(len(ambient), dtype=complex)
                        v[position[(u, b, i, j)]] += 1
                        v[position[(t, b, i, j)]] -= 1
                        rows.append(v)
        return np.array(rows).T if rows else np.zeros((len(ambient), 0))

    pairs = [(t, u) for t in range(S.size) for u in range(S.size) if t < u]
    full = relations(pairs)
    j_only = relations([(t, u) for t, u in pairs if S.leq(t, u) or S.leq(u, t)])

    idempotent = np.allclose(projection @ embedding, np.eye(crossed.dimension))
    kills = not full.size or np.allclose(projection @ full, 0)
    relation_rank = rank(full, tol)
    details = {
        'ambient': len(ambient),
        'dimension': crossed.dimension,
        'relation_rank': relation_rank,
        'j_span_rank': rank(j_only, tol),
    }
    details['j_span_equal'] = details['j_span_rank'] == relation_rank
    if not idempotent:
        return Verdict(False, {'rule': 'idempotent'}, details)
    if not kills:
        return Verdict(False, {'rule': 'kernel-contains-relations'}, details)
    if relation_rank != len(ambient) - crossed.dimension:
        return Verdict(False, {'rule': 'kernel-equals-relations'}, details)
    return Verdict(True, details=details)


def lattice_of_ideals(action: PartialIsoAction):
    '''
    The lattice of ideals generated by the I_{1,t} under intersection and
    sum, with the zero ideal. J is irreducible when it differs from the
    sum J° of the members strictly inside it.

    Returns (ideals, irreducible), both sorted.
    '''
    action = with_unit(action)
    S = action.semigroup
    ideals = {frozenset()} | {ideal_I_tu(action, S.unit, t) for t in range(S.size)}
    grown = True
    while grown:
        grown = False
        for I in list(ideals):
            for J in list(ideals):
                for K in (I & J, I | J):
                    if K not in ideals:
                        ideals.add(K)
                        grown = True

    irreducible = []
    for J in ideals:
        inner = frozenset().union(*[I for I in ideals if I < J])
        if inner != J:
            irreducible.append(J)
    return sorted(ideals, key=_ideal_key), sorted(irreducible, key=_ideal_key)


def _ideal_key(ideal):
    return len(ideal), sorted(ideal)


def expectation_range_check(crossed: CrossedProduct) -> Verdict:
    '''
    Per t: I_{1,t} is complemented in I_{t*t}, E maps H_t into A, and the
    units of the groupoid of germs of the action on Prim(A) are closed.
    At finite dimension all three hold.
    '''
    action, A = crossed.action, crossed.algebra
    S = crossed.semigroup
    prim_closed = units_closed(germ_groupoid(prim_action(action)))
    table = {}
    for t in range(S.size):
        inner = crossed.common[(S.unit, t)]
        if not inner <= action.sources[t]:
            raise InternalError('I_{1,t} is not inside the source of t', {'t': t})
        complemented = complement_check(A, inner, action.sources[t])
        expectation = crossed.expectation(crossed.delta(t, A.support_projection(action.sources[t])))
        lands_in_A = expectation.allclose(A.support_projection(inner))
        table[S.label(t)] = {
            'I_1t': sorted(inner),
            'complement': complemented.details['complement'],
            'complemented': complemented.holds,
            'lands_in_A': lands_in_A,
        }
        if not (complemented.holds and lands_in_A and prim_closed):
            return Verdict(False, {'t': t}, {'per_element': table, 'prim_closed': prim_closed})
    return Verdict(True, details={'per_element': table, 'prim_closed': prim_closed})


def check_same_product(x: CrossedElement, y: CrossedElement):
    if x.crossed is not y.crossed:
        raise PreconditionError('elements belong to different crossed products')
