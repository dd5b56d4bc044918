'''
Numerical linear algebra on complex matrices: ranks, spans, algebras
generated by matrices, centers and block decompositions.
'''

from typing import List, Sequence, Tuple

import numpy as np
import scipy.linalg

from common import SPECTRAL_TOL
from exceptions import InternalError


def rank(matrix, tol=SPECTRAL_TOL) -> int:
    '''
    Numerical rank with a tolerance relative to the largest singular value.

    >>> rank(np.array([[1.0, 2.0], [2.0, 4.0]]))
    1
    >>> rank(np.zeros((3, 3)))
    0
    '''
    matrix = np.atleast_2d(np.asarray(matrix))
    if matrix.size == 0:
        return 0
    singular = scipy.linalg.svdvals(matrix)
    if not len(singular) or singular[0] <= tol:
        return 0
    return int(np.sum(singular > tol * max(1.0, singular[0])))


def stack(vectors, length) -> np.ndarray:
    '''Columns of a length x len(vectors) matrix'''
    if not len(vectors):
        return np.zeros((length, 0), dtype=complex)
    return np.column_stack([np.asarray(v, dtype=complex).ravel() for v in vectors])


def span_basis(vectors, length, tol=SPECTRAL_TOL) -> np.ndarray:
    '''Orthonormal basis (as columns) of the span of `vectors`'''
    matrix = stack(vectors, length)
    if matrix.shape[1] == 0 or rank(matrix, tol) == 0:
        return np.zeros((length, 0), dtype=complex)
    return scipy.linalg.orth(matrix, rcond=tol)


def in_span(basis, vector, tol=SPECTRAL_TOL) -> bool:
    '''Whether `vector` lies in the span of the orthonormal columns of `basis`'''
    vector = np.asarray(vector, dtype=complex).ravel()
    residual = vector - basis @ (basis.conj().T @ vector)
    return np.linalg.norm(residual) <= tol * max(1.0, np.linalg.norm(vector))


def random_unitary(d, rng) -> np.ndarray:
    '''Haar-distributed unitary from the QR decomposition of a Ginibre matrix'''
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def random_matrix(d, rng) -> np.ndarray:
    return rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))


def is_scalar_unitary(matrix, tol) -> bool:
    '''Whether `matrix` is a scalar multiple of the identity by a phase'''
    d = matrix.shape[0]
    phase = matrix[0, 0]
    return (abs(abs(phase) - 1) <= tol
            and np.allclose(matrix, phase * np.eye(d), rtol=0, atol=tol))


def normalize_phase(unitary, tol=1e-12) -> np.ndarray:
    '''
    Scale a unitary by a phase so that its first entry of nonzero modulus
    is real and positive.

    >>> normalize_phase(np.array([[1j]]))
    array([[1.+0.j]])
    '''
    unitary = np.asarray(unitary, dtype=complex)
    flat = unitary.ravel()
    pivot = next(v for v in flat if abs(v) > tol)
    return unitary * (abs(pivot) / pivot)


def algebra_basis(generators: Sequence[np.ndarray], tol=SPECTRAL_TOL) -> List[np.ndarray]:
    '''
    Basis of the algebra generated by `generators`: the span of all words,
    grown by one letter at a time until the dimension stabilizes
    (at most n^2 rounds for n x n matrices).
    '''
    if not len(generators):
        return []
    n = generators[0].shape[0]
    length = n * n
    current = span_basis([g for g in generators], length, tol)
    for _ in range(length):
        words = [current[:, k].reshape(n, n) @ g
                 for k in range(current.shape[1]) for g in generators]
        grown = span_basis([current[:, k] for k in range(current.shape[1])] + words,
                           length, tol)
        if grown.shape[1] == current.shape[1]:
            break
        current = grown
    return [current[:, k].reshape(n, n) for k in range(current.shape[1])]


def algebra_dimension(generators, tol=SPECTRAL_TOL) -> int:
    '''
    >>> e11 = np.array([[1, 0], [0, 0]]); e12 = np.array([[0, 1], [0, 0]])
    >>> algebra_dimension([e11, e12, e12.T])
    4
    '''
    return len(algebra_basis([np.asarray(g, dtype=complex) for g in generators], tol))


def center_basis(basis: Sequence[np.ndarray], tol=SPECTRAL_TOL) -> List[np.ndarray]:
    '''Basis of the center of the algebra spanned by `basis`'''
    if not len(basis):
        return []
    m = len(basis)
    blocks = []
    for b in basis:
        # column i holds the commutator [basis_i, b]
        blocks.append(np.column_stack([(a @ b - b @ a).ravel() for a in basis]))
    constraints = np.vstack(blocks)
    scale = max(1.0, np.abs(constraints).max())
    coefficients = scipy.linalg.null_space(constraints / scale, rcond=tol)
    return [sum(c[i] * basis[i] for i in range(m)) for c in coefficients.T]


def central_projections(basis: Sequence[np.ndarray], rng, tol=1e-6) -> List[np.ndarray]:
    '''
    Minimal central projections of a finite-dimensional *-algebra of
    matrices (closed under adjoints), from the spectral projections of a
    random self-adjoint central element.
    '''
    center = center_basis(basis)
    if not center:
        return []
    hermitian = []
    for z in center:
        hermitian.append((z + z.conj().T) / 2)
        hermitian.append((z - z.conj().T) / 2j)
    weights = rng.uniform(0.5, 1.5, size=len(hermitian))
    h = sum(w * a for w, a in zip(weights, hermitian))
    values, vectors = np.linalg.eigh(h)
    spread = max(1.0, np.abs(values).max())

    projections = []
    used = np.zeros(len(values), dtype=bool)
    for k in range(len(values)):
        if used[k] or abs(values[k]) <= tol * spread:
            continue
        group = np.abs(values - values[k]) <= tol * spread
        used |= group
        v = vectors[:, group]
        projections.append(v @ v.conj().T)
    if len(projections) != len(center):
        raise InternalError('central spectral projections do not match the center',
                            {'projections': len(projections), 'center': len(center)})
    return projections


def block_decomposition(basis: Sequence[np.ndarray], rng) -> List[Tuple[np.ndarray, int]]:
    '''
    Minimal central projections p_i of the algebra spanned by `basis`,
    each with the size d_i of its matrix block, from the dimension d_i^2
    of the cut-down p_i A.
    '''
    if not len(basis):
        return []
    n = basis[0].shape[0]
    blocks = []
    total = 0
    for p in central_projections(basis, rng):
        dim = rank(stack([p @ b for b in basis], n * n))
        d = int(round(np.sqrt(dim)))
        if d * d != dim:
            raise InternalError('block of non-square dimension', {'dimension': dim})
        blocks.append((p, d))
        total += dim
    if total != len(basis):
        raise InternalError('blocks do not exhaust the algebra',
                            {'blocks': [d for _, d in blocks], 'dimension': len(basis)})
    return blocks


def block_dimensions(basis: Sequence[np.ndarray], rng) -> List[int]:
    '''Sizes of the matrix blocks of the algebra spanned by `basis`, ascending'''
    return sorted(d for _, d in block_decomposition(basis, rng))
