'''
Finite-dimensional C*-algebras as direct sums of full matrix blocks.

Ideals are subsets of block indices; Prim(A) is the discrete space of
blocks.
'''

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Optional, Tuple

import numpy as np

from common import EXACT_TOL
from exceptions import PreconditionError, StructuralError
from report import Verdict

from .matrices import random_matrix

Ideal = FrozenSet[int]


@dataclass(frozen=True)
class FdAlgebra:
    blocks: Tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(int(d) for d in self.blocks)
        if not blocks or any(d < 1 for d in blocks):
            raise StructuralError(f'block dimensions must be positive: {list(self.blocks)}')
        object.__setattr__(self, 'blocks', blocks)

    @property
    def dimension(self):
        return sum(d * d for d in self.blocks)

    @cached_property
    def all_blocks(self) -> Ideal:
        return frozenset(range(len(self.blocks)))

    def ideal_dimension(self, ideal: Iterable[int]):
        return sum(self.blocks[b] ** 2 for b in ideal)

    def check_ideal(self, ideal) -> Ideal:
        ideal = frozenset(int(b) for b in ideal)
        if not ideal <= self.all_blocks:
            raise StructuralError(f'ideal {sorted(ideal)} uses unknown blocks')
        return ideal

    def zero(self) -> AlgElement:
        return AlgElement(self, tuple(np.zeros((d, d), dtype=complex) for d in self.blocks))

    def unit(self) -> AlgElement:
        return self.support_projection(self.all_blocks)

    def support_projection(self, ideal) -> AlgElement:
        '''[I]: the identity on the blocks of I, zero elsewhere'''
        ideal = self.check_ideal(ideal)
        return AlgElement(self, tuple(
            np.eye(d, dtype=complex) if b in ideal else np.zeros((d, d), dtype=complex)
            for b, d in enumerate(self.blocks)))

    def matrix_unit(self, b, i, j) -> AlgElement:
        mats = [np.zeros((d, d), dtype=complex) for d in self.blocks]
        mats[b][i, j] = 1
        return AlgElement(self, tuple(mats))

    def basis(self, ideal: Optional[Iterable[int]] = None):
        '''Matrix units (b, i, j) of the blocks of `ideal`, in lexicographic order'''
        blocks = sorted(self.all_blocks if ideal is None else ideal)
        return [(b, i, j) for b in blocks
                for i in range(self.blocks[b]) for j in range(self.blocks[b])]

    def element(self, mats) -> AlgElement:
        if len(mats) != len(self.blocks):
            raise StructuralError(f'expected {len(self.blocks)} blocks, got {len(mats)}')
        checked = []
        for b, (d, m) in enumerate(zip(self.blocks, mats)):
            m = np.asarray(m, dtype=complex)
            if m.shape != (d, d):
                raise StructuralError(f'block {b} must be {d}x{d}, got {m.shape}')
            if not np.all(np.isfinite(m)):
                raise StructuralError(f'block {b} has non-finite entries')
            checked.append(m)
        return AlgElement(self, tuple(checked))

    def random_element(self, rng, ideal=None) -> AlgElement:
        ideal = self.all_blocks if ideal is None else self.check_ideal(ideal)
        return AlgElement(self, tuple(
            random_matrix(d, rng) if b in ideal else np.zeros((d, d), dtype=complex)
            for b, d in enumerate(self.blocks)))


@dataclass(frozen=True, eq=False)
class AlgElement:
    algebra: FdAlgebra
    mats: Tuple[np.ndarray, ...]

    def __add__(self, other):
        return AlgElement(self.algebra, tuple(a + b for a, b in zip(self.mats, other.mats)))

    def __sub__(self, other):
        return AlgElement(self.algebra, tuple(a - b for a, b in zip(self.mats, other.mats)))

    def __neg__(self):
        return AlgElement(self.algebra, tuple(-a for a in self.mats))

    def __mul__(self, scalar):
        return AlgElement(self.algebra, tuple(scalar * a for a in self.mats))

    __rmul__ = __mul__

    def __matmul__(self, other):
        return AlgElement(self.algebra, tuple(a @ b for a, b in zip(self.mats, other.mats)))

    def star(self):
        return AlgElement(self.algebra, tuple(a.conj().T for a in self.mats))

    def norm(self) -> float:
        '''Max of blockwise operator norms'''
        return max(np.linalg.norm(a, 2) if a.size else 0.0 for a in self.mats)

    def support(self, tol=EXACT_TOL) -> Ideal:
        return frozenset(b for b, a in enumerate(self.mats) if np.abs(a).max() > tol)

    def compress(self, ideal) -> AlgElement:
        '''Multiply by the support projection of `ideal`'''
        return AlgElement(self.algebra, tuple(
            a if b in ideal else np.zeros_like(a) for b, a in enumerate(self.mats)))

    def allclose(self, other, tol=EXACT_TOL) -> bool:
        return all(np.allclose(a, b, rtol=0, atol=tol) for a, b in zip(self.mats, other.mats))

    def is_zero(self, tol=EXACT_TOL) -> bool:
        return not self.support(tol)

    def coordinates(self, ideal=None) -> np.ndarray:
        '''Entries on the matrix units of `ideal`, see `FdAlgebra.basis`'''
        return np.array([self.mats[b][i, j] for b, i, j in self.algebra.basis(ideal)],
                        dtype=complex)

    def to_document(self):
        return [{'real': a.real.tolist(), 'imag': a.imag.tolist()} for a in self.mats]


def complement_check(algebra: FdAlgebra, ideal, larger) -> Verdict:
    '''
    An ideal I inside J is complemented in J; at finite dimension the
    complement is always the block set J \\ I.
    '''
    ideal, larger = algebra.check_ideal(ideal), algebra.check_ideal(larger)
    if not ideal <= larger:
        raise PreconditionError(f'{sorted(ideal)} is not inside {sorted(larger)}')
    complement = larger - ideal
    sum_ok = (algebra.support_projection(ideal) + algebra.support_projection(complement)
              ).allclose(algebra.support_projection(larger))
    orthogonal = (algebra.support_projection(ideal) @ algebra.support_projection(complement)
                  ).is_zero()
    return Verdict(sum_ok and orthogonal, details={'complement': sorted(complement)})


def lattice_law_check(algebra: FdAlgebra, ideal, other) -> Verdict:
    '''[I][J] = [I & J] and [I] + [J] = [I + J] + [I & J]'''
    I, J = algebra.check_ideal(ideal), algebra.check_ideal(other)
    p, q = algebra.support_projection(I), algebra.support_projection(J)
    meet = algebra.support_projection(I & J)
    join = algebra.support_projection(I | J)
    if not (p @ q).allclose(meet):
        return Verdict(False, {'rule': 'product', 'I': sorted(I), 'J': sorted(J)})
    if not (p + q).allclose(join + meet):
        return Verdict(False, {'rule': 'sum', 'I': sorted(I), 'J': sorted(J)})
    return Verdict(True)
