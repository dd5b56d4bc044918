'''
Actions of the sign monoid {1, -1, 0} given by an involutive automorphism
alpha of A, an alpha-invariant ideal I and a self-adjoint unitary u of I
implementing alpha on I. H_1 = H_-1 = A with H_-1 twisted by alpha, and
H_0 = I, with

    mu(-1, 0)(b, c) = u b c        mu(0, -1)(c, b) = c u b

The crossed product is the quotient of A x|_alpha Z/2 by the ideal
J = {delta_1 c - delta_-1 u c : c in I}, so its dimension is
2 dim A - dim I.

Elements delta_1 a + delta_-1 b of A x|_alpha Z/2 are realized as the
matrices [[rho(a), rho(alpha b)], [rho(b), rho(alpha a)]] over the
identity representation rho of A.
'''

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np
import scipy.linalg

from common import EXACT_TOL
from exceptions import AssertionFailure, InternalError, PreconditionError, StructuralError
from fdalg import AlgElement, FdAlgebra, PartialIsoAction, rank, span_basis, validate_fd_action
from fdalg.matrices import (
    block_decomposition, in_span, is_scalar_unitary, random_unitary, stack
)
from isg import sign_monoid
from log_utils import get_logger
from report import Verdict

from .crossed import CrossedProduct

ONE, MINUS, ZERO = 1, -1, 0


@dataclass(frozen=True, eq=False)
class BlockAutomorphism:
    '''alpha(a) has block sigma(b) equal to w_b a_b w_b*'''
    algebra: FdAlgebra
    sigma: Tuple[int, ...]
    w: Tuple[np.ndarray, ...]

    def __post_init__(self):
        A = self.algebra
        sigma = tuple(int(c) for c in self.sigma)
        if sorted(sigma) != list(range(len(A.blocks))):
            raise StructuralError(f'block map {list(sigma)} is not a permutation')
        w = tuple(np.asarray(m, dtype=complex) for m in self.w)
        if len(w) != len(A.blocks):
            raise StructuralError(f'expected {len(A.blocks)} unitaries, got {len(w)}')
        for b, c in enumerate(sigma):
            if A.blocks[b] != A.blocks[c] or w[b].shape != (A.blocks[b], A.blocks[b]):
                raise StructuralError(f'block {b} cannot be mapped to block {c}')
        object.__setattr__(self, 'sigma', sigma)
        object.__setattr__(self, 'w', w)

    def apply(self, a: AlgElement) -> AlgElement:
        mats = [None] * len(self.sigma)
        for b, c in enumerate(self.sigma):
            mats[c] = self.w[b] @ a.mats[b] @ self.w[b].conj().T
        return AlgElement(self.algebra, tuple(mats))

    def is_identity(self, tol=EXACT_TOL):
        return all(b == c and is_scalar_unitary(self.w[b], tol) for b, c in enumerate(self.sigma))


def check_01m1_data(A: FdAlgebra, I, alpha: BlockAutomorphism, u: AlgElement, tol=EXACT_TOL):
    I = A.check_ideal(I)
    units = [A.matrix_unit(*key) for key in A.basis()]
    for e in units:
        if not alpha.apply(alpha.apply(e)).allclose(e, tol):
            raise PreconditionError('alpha is not an involution')
    if any(alpha.sigma[b] != b for b in I):
        raise PreconditionError('alpha must fix every block of I')
    if not u.support(tol) <= I:
        raise PreconditionError('u must lie in I')
    if not u.star().allclose(u, tol):
        raise PreconditionError('u must be self-adjoint')
    if not (u @ u).allclose(A.support_projection(I), tol):
        raise PreconditionError('u must square to the unit of I')
    for key in A.basis(I):
        e = A.matrix_unit(*key)
        if not alpha.apply(e).allclose(u @ e @ u, tol):
            raise PreconditionError('alpha is not implemented by u on I')
    return I


class _SignModel:
    '''A x|_alpha Z/2 as matrices, with the bundle of the sign monoid inside it'''

    def __init__(self, A, I, alpha, u):
        self.A, self.I, self.alpha, self.u = A, I, alpha, u

    def rho(self, a: AlgElement):
        return scipy.linalg.block_diag(*a.mats)

    def pair(self, a: AlgElement, b: AlgElement):
        '''delta_1 a + delta_-1 b'''
        alpha = self.alpha
        return np.block([[self.rho(a), self.rho(alpha.apply(b))],
                         [self.rho(b), self.rho(alpha.apply(a))]])

    def phi(self, slot, x: AlgElement):
        '''The canonical map, sending delta_0 c to delta_1 c'''
        zero = self.A.zero()
        return self.pair(zero, x) if slot == MINUS else self.pair(x, zero)

    def bundle_product(self, s, x, t, y):
        '''(slot, element) of x delta_s times y delta_t'''
        alpha, u = self.alpha, self.u
        table = {
            (ONE, ONE): lambda: (ONE, x @ y),
            (ONE, MINUS): lambda: (MINUS, alpha.apply(x) @ y),
            (MINUS, ONE): lambda: (MINUS, x @ y),
            (MINUS, MINUS): lambda: (ONE, alpha.apply(x) @ y),
            (ZERO, ZERO): lambda: (ZERO, x @ y),
            (ZERO, ONE): lambda: (ZERO, x @ y),
            (ONE, ZERO): lambda: (ZERO, x @ y),
            (ZERO, MINUS): lambda: (ZERO, x @ u @ y),
            (MINUS, ZERO): lambda: (ZERO, u @ x @ y),
        }
        return table[(s, t)]()

    def bundle_star(self, s, x):
        if s == MINUS:
            return MINUS, self.alpha.apply(x).star()
        return s, x.star()

    def expectation(self, a, b):
        '''E(delta_1 a + delta_-1 b) = a + u b'''
        return a + self.u @ b


def crossed_01m1(A: FdAlgebra, I, alpha: BlockAutomorphism, u: AlgElement,
                 seed=0, samples=3, tol=EXACT_TOL) -> Verdict:
    '''
    Build A x|_alpha Z/2 and its ideal J, and verify that the crossed
    product of the sign-monoid action is the quotient: the dimension law,
    the canonical map killing the relations and matching the bundle
    multiplication and involution modulo J, and E vanishing on J. The
    blocks of the quotient are those of A x|_alpha Z/2 not inside J. For
    alpha = id and u = [I] the quotient must be A + A/I.
    '''
    logger = get_logger('sign-monoid')

    I = check_01m1_data(A, I, alpha, u, tol)
    model = _SignModel(A, I, alpha, u)
    rng = np.random.default_rng(seed)
    size = 2 * sum(A.blocks)
    length = size * size
    zero = A.zero()

    units = [A.matrix_unit(*key) for key in A.basis()]
    ideal_units = [A.matrix_unit(*key) for key in A.basis(I)]

    z2_basis = [model.pair(e, zero) for e in units] + [model.pair(zero, e) for e in units]
    dim_z2 = rank(stack(z2_basis, length))
    if dim_z2 != 2 * A.dimension:
        raise InternalError('matrix model of A x Z/2 is not faithful',
                            {'rank': dim_z2, 'expected': 2 * A.dimension})

    j_vectors = [model.pair(c, -1 * (u @ c)) for c in ideal_units]
    dim_J = rank(stack(j_vectors, length))
    J = span_basis(j_vectors, length)

    def in_J(matrix):
        return in_span(J, matrix)

    generators = [model.pair(e, zero) for e in units] + [model.pair(zero, A.unit())]
    for k, j in enumerate(j_vectors):
        if not in_J(j.conj().T):
            raise AssertionFailure('J is not closed under the involution', {'element': k})
        for g in generators:
            if not (in_J(g @ j) and in_J(j @ g)):
                raise AssertionFailure('J is not a two-sided ideal', {'element': k})

    # relation span inside delta_1 A + delta_-1 A + delta_0 I
    n_A, n_I = A.dimension, len(ideal_units)
    relations = []
    for k, c in enumerate(ideal_units):
        first = np.zeros(2 * n_A + n_I, dtype=complex)
        first[2 * n_A + k] = 1
        first[:n_A] -= c.coordinates()
        second = np.zeros(2 * n_A + n_I, dtype=complex)
        second[2 * n_A + k] = 1
        second[n_A:2 * n_A] -= (u @ c).coordinates()
        relations.extend([first, second])
    dim_crossed = 2 * n_A + n_I - rank(stack(relations, 2 * n_A + n_I))
    if dim_crossed != dim_z2 - dim_J:
        raise AssertionFailure('dimension law fails',
                               {'dim_crossed': dim_crossed, 'dim_z2': dim_z2, 'dim_J': dim_J})

    for k, c in enumerate(ideal_units):
        if not in_J(model.phi(ZERO, c) - model.phi(MINUS, u @ c)):
            raise AssertionFailure('canonical map does not kill a relation', {'element': k})

    checked = 0
    slots = (ONE, MINUS, ZERO)
    for _ in range(samples):
        for s in slots:
            x = A.random_element(rng, I if s == ZERO else None)
            star_slot, star_value = model.bundle_star(s, x)
            if not in_J(model.phi(star_slot, star_value) - model.phi(s, x).conj().T):
                raise AssertionFailure('canonical map is not involutive', {'slot': s})
            for t in slots:
                y = A.random_element(rng, I if t == ZERO else None)
                slot, value = model.bundle_product(s, x, t, y)
                difference = model.phi(s, x) @ model.phi(t, y) - model.phi(slot, value)
                if not in_J(difference):
                    raise AssertionFailure('structure constants differ modulo J',
                                           {'s': s, 't': t})
                checked += 1

    kills_J = all(model.expectation(c, -1 * (u @ c)).is_zero(tol) for c in ideal_units)
    if not kills_J:
        raise AssertionFailure('E does not vanish on J', {})

    blocks = []
    for p, d in block_decomposition(z2_basis, rng):
        if not in_J(p):
            blocks.append(d)
    blocks.sort()
    if sum(d * d for d in blocks) != dim_crossed:
        raise InternalError('quotient blocks do not add up',
                            {'blocks': blocks, 'dim_crossed': dim_crossed})

    trivial = alpha.is_identity(tol) and u.allclose(A.support_projection(I), tol)
    details = {
        'dim_crossed': dim_crossed,
        'dim_z2': dim_z2,
        'dim_J': dim_J,
        'dim_I': A.ideal_dimension(I),
        'blocks': blocks,
        'expectation_kills_J': kills_J,
        'structure_constants_checked': checked,
        'trivial_case': trivial,
    }
    if trivial:
        expected = sorted(list(A.blocks) + [d for b, d in enumerate(A.blocks) if b not in I])
        details['sum_with_quotient'] = expected
        if blocks != expected:
            raise AssertionFailure('crossed product is not A + A/I', details)

    if u.allclose(A.support_projection(I), tol):
        details['partial_iso_dimension'] = _partial_iso_dimension(A, I, alpha)
        if details['partial_iso_dimension'] != dim_crossed:
            raise InternalError('normal forms disagree with the quotient', details)

    logger.info(f'dim A x Z/2 = {dim_z2}, dim J = {dim_J}, dim A x S = {dim_crossed}, '
                f'blocks {blocks}')
    return Verdict(True, details=details)


def _partial_iso_dimension(A, I, alpha):
    '''With u = [I] the action is by partial isomorphisms'''
    S = sign_monoid()
    everything = {b: b for b in A.all_blocks}
    action = PartialIsoAction.from_data(
        S, A, [everything, dict(enumerate(alpha.sigma)), {b: b for b in I}],
        [{}, dict(enumerate(alpha.w)), {}])
    report = validate_fd_action(action)
    if not report.valid:
        raise InternalError('sign-monoid data is not a partial action', report.to_dict())
    return CrossedProduct(action).dimension


def random_01m1_instance(seed, max_blocks=3, max_dim=3):
    '''
    Random data (A, I, alpha, u): blocks of size <= max_dim, alpha pairing
    some blocks of equal size and acting on the others by Ad of a
    self-adjoint unitary, I a set of fixed blocks.
    '''
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, max_blocks + 1))
    dims = [int(d) for d in rng.integers(1, max_dim + 1, size=k)]
    A = FdAlgebra(tuple(dims))

    sigma = list(range(k))
    for b in rng.permutation(k):
        b = int(b)
        if sigma[b] != b or rng.random() < 0.5:
            continue
        partners = [c for c in range(k) if c != b and sigma[c] == c and dims[c] == dims[b]]
        if partners:
            c = partners[int(rng.integers(len(partners)))]
            sigma[b], sigma[c] = c, b

    w = [None] * k
    for b in range(k):
        c = sigma[b]
        if c == b:
            V = random_unitary(dims[b], rng)
            signs = rng.choice([-1.0, 1.0], size=dims[b])
            w[b] = V @ np.diag(signs) @ V.conj().T
        elif b < c:
            W = random_unitary(dims[b], rng)
            w[b], w[c] = W, W.conj().T

    fixed = [b for b in range(k) if sigma[b] == b]
    I = frozenset(b for b in fixed if rng.random() < 0.5)
    u = AlgElement(A, tuple(w[b] if b in I else np.zeros((d, d), dtype=complex)
                            for b, d in enumerate(dims)))
    return A, I, BlockAutomorphism(A, tuple(sigma), tuple(w)), u
