'''
Representations of crossed products: the checks R1-R3 of a family of
maps pi_t on the H_t, and the representations induced from
representations of A through the conditional expectation.

A representation of A = sum of M_{d_b} is determined up to equivalence by
its block multiplicities. Inducing it builds the Hilbert space
(crossed product) (x)_pi H_pi from the Gram matrix

    G[(p, a), (q, b)] = pi(E(n_p* n_q))[a, b]

over the normal-form basis n_p, drops its null directions and lets the
crossed product act by left multiplication.
'''

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import numpy as np
import scipy.linalg

from common import GRAM_DROP, GRAM_REJECT, ISOMETRY_TOL, SPECTRAL_TOL
from exceptions import ConditioningError, InternalError, StructuralError
from fdalg import AlgElement, FdAlgebra, block_dimensions, involution_J, rank, span_basis, theta
from fdalg.matrices import stack
from log_utils import get_logger
from report import Verdict

from .crossed import CrossedElement, CrossedProduct, lattice_of_ideals


@dataclass(frozen=True)
class AlgebraRep:
    '''The representation of A with block b repeated multiplicities[b] times'''
    algebra: FdAlgebra
    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        multiplicities = tuple(int(m) for m in self.multiplicities)
        if len(multiplicities) != len(self.algebra.blocks) or min(multiplicities) < 0:
            raise StructuralError(
                f'expected {len(self.algebra.blocks)} non-negative multiplicities, '
                f'got {list(self.multiplicities)}')
        object.__setattr__(self, 'multiplicities', multiplicities)

    @property
    def dimension(self):
        return sum(m * d for m, d in zip(self.multiplicities, self.algebra.blocks))

    def matrix(self, a: AlgElement) -> np.ndarray:
        parts = [np.kron(np.eye(m), block) for m, block in zip(self.multiplicities, a.mats) if m]
        if not parts:
            return np.zeros((0, 0), dtype=complex)
        return scipy.linalg.block_diag(*parts)

    def is_faithful(self):
        return all(m > 0 for m in self.multiplicities)


class Representation:
    '''
    A family of maps pi_t : H_t -> matrices of size `dimension`, extended
    linearly to the crossed product.
    '''

    def __init__(self, crossed: CrossedProduct, dimension):
        self.crossed = crossed
        self.dimension = dimension

    def generator(self, t, xi: AlgElement) -> np.ndarray:
        raise NotImplementedError

    def matrix(self, x: CrossedElement) -> np.ndarray:
        result = np.zeros((self.dimension, self.dimension), dtype=complex)
        for t, xi in x.components.items():
            result = result + self.generator(t, xi)
        return result

    @cached_property
    def basis_images(self):
        return [self.matrix(self.crossed.basis_element(p)) for p in range(self.crossed.dimension)]

    def kernel_rank(self):
        '''Dimension of the kernel on the crossed product'''
        images = stack(self.basis_images, self.dimension ** 2)
        return self.crossed.dimension - rank(images)

    def is_faithful(self):
        return self.kernel_rank() == 0

    def image_dimension(self):
        return rank(stack(self.basis_images, self.dimension ** 2))

    def image_blocks(self, rng):
        '''Block sizes of the image algebra, ascending'''
        n = self.dimension
        basis = span_basis(self.basis_images, n * n)
        return block_dimensions([basis[:, k].reshape(n, n) for k in range(basis.shape[1])], rng)


class InducedRepresentation(Representation):
    def __init__(self, crossed: CrossedProduct, pi: AlgebraRep):
        self.pi = pi
        self.gram = _gram_matrix(crossed, pi)
        self.frame = _orthonormal_frame(self.gram)
        super().__init__(crossed, self.frame.shape[1])

    @cached_property
    def _weighted(self):
        return (self.gram @ self.frame).conj().T

    def left_multiplication(self, x: CrossedElement) -> np.ndarray:
        crossed = self.crossed
        columns = [crossed.coordinates(x @ crossed.basis_element(q))
                   for q in range(crossed.dimension)]
        return stack(columns, crossed.dimension)

    def matrix(self, x: CrossedElement) -> np.ndarray:
        if self.dimension == 0:
            return np.zeros((0, 0), dtype=complex)
        n, h = self.crossed.dimension, self.pi.dimension
        frame = self.frame.reshape(n, h, self.dimension)
        moved = np.einsum('pq,qak->pak', self.left_multiplication(x), frame)
        return self._weighted @ moved.reshape(n * h, self.dimension)

    def generator(self, t, xi: AlgElement) -> np.ndarray:
        return self.matrix(self.crossed.delta(t, xi))


def _gram_matrix(crossed: CrossedProduct, pi: AlgebraRep) -> np.ndarray:
    action = crossed.action
    S = crossed.semigroup
    n, h = crossed.dimension, pi.dimension
    units = [crossed.basis_element(p) for p in range(n)]
    # n_p* = alpha_t(e)* delta_{t*}
    starred = []
    for x in units:
        (t, e), = x.components.items()
        starred.append((S.star(t), action.apply(t, e).star()))
    blocks = np.zeros((n, h, n, h), dtype=complex)
    for p, (s, left) in enumerate(starred):
        for q, x in enumerate(units):
            (u, right), = x.components.items()
            su = S.product(s, u)
            value = action.mu(s, u, left, right).compress(crossed.common[(S.unit, su)])
            if not value.is_zero():
                blocks[p, :, q, :] = pi.matrix(value)
    return blocks.reshape(n * h, n * h)


def _orthonormal_frame(gram) -> np.ndarray:
    '''
    Columns f_k = U_k / sqrt(lambda_k) over the eigenvalues lambda_k of the
    Gram matrix that are kept; eigenvalues near the cut are rejected.
    '''
    if not gram.size:
        return np.zeros((0, 0), dtype=complex)
    values, vectors = np.linalg.eigh((gram + gram.conj().T) / 2)
    doubtful = values[(values > GRAM_DROP) & (values < GRAM_REJECT)]
    if len(doubtful):
        raise ConditioningError(f'Gram matrix eigenvalue {doubtful[0]:.3g} is too close to zero')
    keep = values >= GRAM_REJECT
    return vectors[:, keep] / np.sqrt(values[keep])


def induce(crossed: CrossedProduct, multiplicities) -> InducedRepresentation:
    '''Ind pi for the representation pi of A with the given block multiplicities'''
    logger = get_logger('induce')

    pi = AlgebraRep(crossed.algebra, tuple(multiplicities))
    rep = InducedRepresentation(crossed, pi)
    logger.info(f'induced from multiplicities {list(pi.multiplicities)}: '
                f'module {crossed.dimension * pi.dimension}, representation {rep.dimension}')
    return rep


def regular_module_and_rep(crossed: CrossedProduct) -> InducedRepresentation:
    '''The representation on l2(S, A) induced from the identity representation of A'''
    return induce(crossed, [1] * len(crossed.algebra.blocks))


def check_representation(rep: Representation, seed, samples=2, tol=SPECTRAL_TOL) -> Verdict:
    '''
    R1-R3 and the compatibility with theta and J, on seeded random
    elements of every H_t:

        pi_tu(mu(xi, eta)) = pi_t(xi) pi_u(eta)
        pi_t(xi1)* pi_t(xi2) = pi_1(<xi1, xi2>)
        pi_t(xi1) pi_t(xi2)* = pi_1(<<xi1, xi2>>)
        pi_u(theta_{u,t}(xi)) = pi_t(xi) for xi in I_{t,u}
        pi_{t*}(J_t(xi*)) = pi_t(xi)*
    '''
    crossed = rep.crossed
    action, S, A = crossed.action, crossed.semigroup, crossed.algebra
    one = S.unit
    rng = np.random.default_rng(seed)

    def close(a, b, *elements):
        scale = np.prod([max(1.0, e.norm()) for e in elements])
        return np.allclose(a, b, rtol=0, atol=tol * max(1.0, scale))

    for _ in range(samples):
        for t in range(S.size):
            xi1, xi2 = (action.random_bimodule_element(t, rng) for _ in range(2))
            p1, p2 = rep.generator(t, xi1), rep.generator(t, xi2)
            if not close(p1.conj().T @ p2, rep.generator(one, action.right_inner(t, xi1, xi2)),
                         xi1, xi2):
                return Verdict(False, {'rule': 'R2', 't': t})
            if not close(p1 @ p2.conj().T, rep.generator(one, action.left_inner(t, xi1, xi2)),
                         xi1, xi2):
                return Verdict(False, {'rule': 'R3', 't': t})
            J = involution_J(action, t, xi1)
            if not close(rep.generator(S.star(t), J), p1.conj().T, xi1):
                return Verdict(False, {'rule': 'J', 't': t})

            for u in range(S.size):
                eta = action.random_bimodule_element(u, rng)
                product = rep.generator(S.product(t, u), action.mu(t, u, xi1, eta))
                if not close(product, p1 @ rep.generator(u, eta), xi1, eta):
                    return Verdict(False, {'rule': 'R1', 't': t, 'u': u})
                common = crossed.common[(t, u)]
                if common:
                    xi = A.random_element(rng, common)
                    if not close(rep.generator(u, theta(action, u, t, xi)),
                                 rep.generator(t, xi), xi):
                        return Verdict(False, {'rule': 'theta', 't': t, 'u': u})
    return Verdict(True, details={'samples': samples, 'dimension': rep.dimension})


def grading_isometry_check(rep: Representation, t, xi: AlgElement, tol=ISOMETRY_TOL) -> Verdict:
    '''The image of xi delta_t has operator norm ||xi||'''
    image = rep.generator(t, xi)
    operator_norm = float(np.linalg.norm(image, 2)) if image.size else 0.0
    norm = float(xi.norm())
    holds = abs(operator_norm - norm) <= tol * max(1.0, norm)
    return Verdict(holds, None if holds else {'t': t},
                   {'operator_norm': operator_norm, 'norm': norm})


def induced_functional(crossed: CrossedProduct, phi, x: CrossedElement) -> complex:
    '''
    phi(E(x)) for the functional a -> sum_b trace(phi_b a_b). Evaluated on
    the normal form and, term by term, on the given components through
    xi delta_t -> phi(xi [I_{1,t}]); both must agree. When phi is a
    positive functional supported on some I_{1,e}, the vector state of
    the induced module must give the same value.
    '''
    phi = [np.asarray(m, dtype=complex) for m in phi]
    if [m.shape for m in phi] != [(d, d) for d in crossed.algebra.blocks]:
        raise StructuralError('functional must have one square matrix per block')

    def evaluate(a: AlgElement):
        return complex(sum(np.trace(m @ block) for m, block in zip(phi, a.mats)))

    value = evaluate(crossed.expectation(crossed.normal_form(x)))
    one = crossed.semigroup.unit
    termwise = sum((evaluate(xi.compress(crossed.common[(one, t)]))
                    for t, xi in x.components.items()), 0j)
    scale = max(1.0, sum(np.abs(m).sum() for m in phi)) * max(1.0, x.norm())
    if abs(value - termwise) > SPECTRAL_TOL * scale:
        raise InternalError('induced functional is not well defined',
                            {'normal_form': value, 'termwise': termwise})

    restricted = restriction_formula(crossed, phi, x)
    if restricted is not None and abs(value - restricted[1]) > SPECTRAL_TOL * scale:
        raise InternalError('induced vector state disagrees with phi after E',
                            {'e': restricted[0], 'expectation': value,
                             'vector_state': restricted[1]})
    return value


def restriction_formula(crossed: CrossedProduct, phi, x: CrossedElement):
    '''
    (e, <Ind(x) zeta, zeta>) for zeta = [I_{1,e}] delta_e (x) v, where v
    is a vector of pi whose vector state is phi and e is an idempotent
    with the smallest I_{1,e} carrying phi. None when phi is not positive
    or no I_{1,e} carries it.
    '''
    A, S = crossed.algebra, crossed.semigroup
    phi = [np.asarray(m, dtype=complex) for m in phi]
    roots = [_positive_root(m) for m in phi]
    if any(root is None for root in roots):
        return None

    one = S.unit
    support = {b for b, m in enumerate(phi) if np.abs(m).max(initial=0.0) > SPECTRAL_TOL}
    carriers = [e for e in sorted(S.idempotents) if support <= crossed.common[(one, e)]]
    if not carriers:
        return None
    e = min(carriers, key=lambda f: A.ideal_dimension(crossed.common[(one, f)]))

    # chunk i of block b is column i of the root, matching kron(eye(d_b), a_b)
    v = np.concatenate([root.T.reshape(-1) for root in roots])
    zeta = crossed.delta(e, A.support_projection(crossed.common[(one, e)]))
    gram = _gram_matrix(crossed, AlgebraRep(A, A.blocks))
    start = np.kron(crossed.coordinates(zeta), v)
    moved = np.kron(crossed.coordinates(x @ zeta), v)
    return e, complex(start.conj() @ gram @ moved)


def _positive_root(m):
    '''The positive square root of m, or None when m is not positive'''
    if not np.allclose(m, m.conj().T, rtol=0, atol=SPECTRAL_TOL):
        return None
    values, vectors = np.linalg.eigh((m + m.conj().T) / 2)
    if len(values) and values.min() < -SPECTRAL_TOL:
        return None
    return (vectors * np.sqrt(np.clip(values, 0, None))) @ vectors.conj().T


def e_faithful_check(crossed: CrossedProduct, family) -> Verdict:
    '''
    Whether the direct sum of the family (block multiplicity vectors) is
    faithful on A, which at finite dimension is E-faithfulness. The
    faithfulness of the direct sum of the induced representations is
    reported alongside.
    '''
    k = len(crossed.algebra.blocks)
    total = [0] * k
    for multiplicities in family:
        if len(multiplicities) != k:
            raise StructuralError(f'expected {k} multiplicities, got {len(multiplicities)}')
        total = [a + int(b) for a, b in zip(total, multiplicities)]
    faithful = all(m > 0 for m in total)
    induced = induce(crossed, total).is_faithful() if any(total) else crossed.dimension == 0
    witness = None if faithful else {'blocks': [b for b, m in enumerate(total) if not m]}
    return Verdict(faithful, witness, {'induced_faithful': induced, 'multiplicities': total})


def lattice_criterion(crossed: CrossedProduct, multiplicities) -> Verdict:
    '''
    For I inside J in the lattice of ideals, pi(a) pi(J) H inside pi(I) H
    must force a in I. With pi given by block multiplicities this fails
    exactly at a block of J outside I on which pi vanishes. When the
    criterion holds the induced representation must be faithful.
    '''
    ideals, _ = lattice_of_ideals(crossed.action)
    multiplicities = [int(m) for m in multiplicities]
    witness = None
    for J in ideals:
        for I in ideals:
            missing = sorted(b for b in J - I if multiplicities[b] == 0) if I <= J else []
            if missing and witness is None:
                witness = {'I': sorted(I), 'J': sorted(J), 'block': missing[0]}

    faithful = induce(crossed, multiplicities).is_faithful() if any(multiplicities) else False
    if witness is None and not faithful:
        raise InternalError('lattice criterion holds but the induced representation '
                            'is not faithful', {'multiplicities': multiplicities})
    return Verdict(witness is None, witness, {'induced_faithful': faithful})
