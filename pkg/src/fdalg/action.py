'''
Actions of inverse semigroups on finite-dimensional C*-algebras by
partial *-isomorphisms.

alpha_t maps the ideal I_{t*t} (the blocks in `sources[t]`) onto
I_{tt*}, sending block b to block beta_t(b) by m -> u m u* for the
unitary u = `unitaries[t][b]`. H_t is I_{t*t} with right inner product
xi1* xi2, left inner product alpha_t(xi1 xi2*) and left action
a . xi = alpha_t^-1(a) xi.
'''

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

import numpy as np

from common import EXACT_TOL
from exceptions import InternalError, PreconditionError, StructuralError
from isg import InverseSemigroup, adjoin_unit
from log_utils import get_logger
from report import ValidationReport, Verdict

from .algebra import AlgElement, FdAlgebra
from .matrices import is_scalar_unitary, normalize_phase, random_unitary


@dataclass(frozen=True, eq=False)
class PartialIsoAction:
    semigroup: InverseSemigroup
    algebra: FdAlgebra
    sources: Tuple[FrozenSet[int], ...]
    block_maps: Tuple[Dict[int, int], ...]
    unitaries: Tuple[Dict[int, np.ndarray], ...]

    @classmethod
    def from_data(cls, S: InverseSemigroup, A: FdAlgebra, block_maps, unitaries=None):
        '''
        `block_maps[t]` sends the source blocks of t to their targets.
        Missing unitaries default to the identity. Unitaries are scaled to
        the canonical phase of `normalize_phase`.
        '''
        if len(block_maps) != S.size:
            raise StructuralError(f'expected {S.size} block maps, got {len(block_maps)}')
        unitaries = unitaries if unitaries is not None else [{}] * S.size
        if len(unitaries) != S.size:
            raise StructuralError(f'expected {S.size} unitary maps, got {len(unitaries)}')

        k = len(A.blocks)
        sources, maps, implementers = [], [], []
        for t in range(S.size):
            mapping = {int(b): int(c) for b, c in block_maps[t].items()}
            given = {int(b): u for b, u in unitaries[t].items()}
            if not set(given) <= set(mapping):
                raise StructuralError(f'unitaries of {S.label(t)} outside its source blocks')
            implemented = {}
            for b, c in mapping.items():
                if not (0 <= b < k and 0 <= c < k):
                    raise StructuralError(f'block map of {S.label(t)} uses unknown blocks')
                if A.blocks[b] != A.blocks[c]:
                    raise StructuralError(
                        f'{S.label(t)} maps block {b} of dimension {A.blocks[b]} '
                        f'to block {c} of dimension {A.blocks[c]}')
                u = np.asarray(given.get(b, np.eye(A.blocks[b])), dtype=complex)
                if u.shape != (A.blocks[b], A.blocks[b]):
                    raise StructuralError(f'unitary of {S.label(t)} on block {b} has shape '
                                          f'{u.shape}')
                if not np.all(np.isfinite(u)):
                    raise StructuralError(f'unitary of {S.label(t)} on block {b} is not finite')
                implemented[b] = normalize_phase(u) if np.abs(u).max() > EXACT_TOL else u
            sources.append(frozenset(mapping))
            maps.append(mapping)
            implementers.append(implemented)
        return cls(S, A, tuple(sources), tuple(maps), tuple(implementers))

    def target(self, t) -> FrozenSet[int]:
        '''I_{tt*} as a set of blocks'''
        return frozenset(self.block_maps[t].values())

    def in_bimodule(self, t, xi: AlgElement, tol=EXACT_TOL) -> bool:
        return xi.support(tol) <= self.sources[t]

    def check_bimodule(self, t, xi: AlgElement):
        if not self.in_bimodule(t, xi):
            raise PreconditionError(
                f'element is not in H_{self.semigroup.label(t)}: support '
                f'{sorted(xi.support())} outside {sorted(self.sources[t])}')

    def apply(self, t, a: AlgElement) -> AlgElement:
        '''alpha_t on I_{t*t}; components outside the source are ignored'''
        mats = [np.zeros_like(m) for m in a.mats]
        for b, c in self.block_maps[t].items():
            u = self.unitaries[t][b]
            mats[c] = u @ a.mats[b] @ u.conj().T
        return AlgElement(self.algebra, tuple(mats))

    def apply_inverse(self, t, a: AlgElement) -> AlgElement:
        mats = [np.zeros_like(m) for m in a.mats]
        for b, c in self.block_maps[t].items():
            u = self.unitaries[t][b]
            mats[b] = u.conj().T @ a.mats[c] @ u
        return AlgElement(self.algebra, tuple(mats))

    def left(self, t, a: AlgElement, xi: AlgElement) -> AlgElement:
        '''a . xi in H_t'''
        return self.apply_inverse(t, a) @ xi

    def right_inner(self, t, xi1: AlgElement, xi2: AlgElement) -> AlgElement:
        return xi1.star() @ xi2

    def left_inner(self, t, xi1: AlgElement, xi2: AlgElement) -> AlgElement:
        return self.apply(t, xi1 @ xi2.star())

    def mu(self, t, u, xi: AlgElement, eta: AlgElement) -> AlgElement:
        '''mu_{t,u}(xi (x) eta) = alpha_u^-1(xi alpha_u(eta)) in H_{tu}'''
        return self.apply_inverse(u, xi @ self.apply(u, eta))

    def random_bimodule_element(self, t, rng) -> AlgElement:
        return self.algebra.random_element(rng, self.sources[t])


def validate_fd_action(action: PartialIsoAction, tol=EXACT_TOL) -> ValidationReport:
    '''
    Check unitarity, alpha_1 = id, alpha_t* = alpha_t^-1, the composite
    law with its exact domain condition and restriction along the order.
    Implementing unitaries are compared up to a phase per block.
    '''
    S, A = action.semigroup, action.algebra
    report = ValidationReport('fd-action')
    n = S.size

    for t in range(n):
        bad = next((b for b, u in sorted(action.unitaries[t].items())
                    if not np.allclose(u.conj().T @ u, np.eye(len(u)), rtol=0, atol=tol)),
                   None)
        if bad is not None:
            report.add('unitary', {'t': t, 'block': bad})
            break

    for t in range(n):
        if len(action.target(t)) != len(action.sources[t]):
            report.add('injective', {'t': t})
            break

    for t in range(n):
        if action.target(t) != action.sources[S.star(t)]:
            report.add('target', {'t': t})
            break

    if S.unit is not None:
        unit = S.unit
        if (action.sources[unit] != A.all_blocks
                or any(b != c for b, c in action.block_maps[unit].items())
                or not all(is_scalar_unitary(u, tol) for u in action.unitaries[unit].values())):
            report.add('unit-identity', {'t': unit})

    composite = _first_composite_violation(action, tol)
    if composite:
        report.add(*composite)

    for v in range(n):
        for t in range(n):
            if t != v and S.leq(v, t) and not _restricts(action, v, t, tol):
                report.add('restriction', {'v': v, 't': t})
                return report
    return report


def _same_up_to_phase(u1, u2, tol):
    return is_scalar_unitary(u1.conj().T @ u2, tol)


def _first_composite_violation(action, tol):
    S = action.semigroup
    for t in range(S.size):
        for u in range(S.size):
            tu = S.product(t, u)
            expected = {b: action.block_maps[t][c] for b, c in action.block_maps[u].items()
                        if c in action.block_maps[t]}
            if set(expected) != action.sources[tu]:
                b = min(set(expected) ^ action.sources[tu])
                return 'composite-domain', {'t': t, 'u': u, 'block': b}
            for b, c in sorted(expected.items()):
                composite = action.unitaries[t][action.block_maps[u][b]] @ action.unitaries[u][b]
                if (action.block_maps[tu][b] != c
                        or not _same_up_to_phase(action.unitaries[tu][b], composite, tol)):
                    return 'composite-map', {'t': t, 'u': u, 'block': b}
    return None


def _restricts(action, v, t, tol):
    if not action.sources[v] <= action.sources[t]:
        return False
    for b in action.sources[v]:
        if action.block_maps[v][b] != action.block_maps[t][b]:
            return False
        if not _same_up_to_phase(action.unitaries[v][b], action.unitaries[t][b], tol):
            return False
    return True


def ideal_I_tu(action: PartialIsoAction, t, u) -> FrozenSet[int]:
    '''
    The ideal generated by the sources I_{v*v} for v <= t, u.

    I_{t,t} = I_{t*t}; for a group action I_{1,g} is empty when g != 1.
    '''
    blocks = frozenset()
    for v in action.semigroup.lower_bounds(t, u):
        blocks = blocks | action.sources[v]
    return blocks


def theta(action: PartialIsoAction, u, t, xi: AlgElement, tol=EXACT_TOL) -> AlgElement:
    '''
    theta_{u,t}: H_t . I_{t,u} -> H_u . I_{t,u}. The inclusions between
    the bimodules are inclusions of ideals, so theta is the identity;
    alpha_t and alpha_u must agree on xi.
    '''
    common = ideal_I_tu(action, t, u)
    if not xi.support(tol) <= common:
        raise PreconditionError(
            f'element is not supported in I_{{{action.semigroup.label(t)},'
            f'{action.semigroup.label(u)}}} = {sorted(common)}')
    if not action.apply(t, xi).allclose(action.apply(u, xi), tol * max(1.0, xi.norm())):
        raise InternalError('alpha_t and alpha_u differ on I_{t,u}', {'t': t, 'u': u})
    return xi


def involution_J(action: PartialIsoAction, t, xi: AlgElement, tol=EXACT_TOL) -> AlgElement:
    '''
    J_t(xi*) = alpha_t(xi)* in H_{t*}, checked against
    mu_{t*,t}(J_t(xi*) (x) eta) = <xi, eta> on the matrix units eta of H_t.
    '''
    action.check_bimodule(t, xi)
    result = action.apply(t, xi).star()
    S, A = action.semigroup, action.algebra
    scale = max(1.0, xi.norm())
    for b, i, j in A.basis(action.sources[t]):
        eta = A.matrix_unit(b, i, j)
        lhs = action.mu(S.star(t), t, result, eta)
        if not lhs.allclose(action.right_inner(t, xi, eta), tol * scale):
            raise InternalError('J_t does not represent the right inner product',
                                {'t': t, 'block': b, 'i': i, 'j': j})
    return result


def bimodule_identities_check(action: PartialIsoAction, seed, samples=3,
                              tol=EXACT_TOL) -> Verdict:
    '''
    The inner products of mu_{t,u} on random elements:

        <mu(x1, y1), mu(x2, y2)> = <y1, <x1, x2> . y2>
        <<mu(x1, y1), mu(x2, y2)>> = <<x1 . <<y1, y2>>, x2>>

    and zeta . <xi, eta> = <<zeta, xi>> . eta in every H_t.
    '''
    S = action.semigroup
    rng = np.random.default_rng(seed)
    checked = 0
    for t in range(S.size):
        for _ in range(samples):
            zeta, xi, eta = (action.random_bimodule_element(t, rng) for _ in range(3))
            lhs = zeta @ action.right_inner(t, xi, eta)
            rhs = action.left(t, action.left_inner(t, zeta, xi), eta)
            if not lhs.allclose(rhs, tol * _scale(zeta, xi, eta)):
                return Verdict(False, {'rule': 'compatibility', 't': t})
        for u in range(S.size):
            tu = S.product(t, u)
            for _ in range(samples):
                x1, x2 = (action.random_bimodule_element(t, rng) for _ in range(2))
                y1, y2 = (action.random_bimodule_element(u, rng) for _ in range(2))
                m1, m2 = action.mu(t, u, x1, y1), action.mu(t, u, x2, y2)
                scale = _scale(x1, x2, y1, y2)
                right = action.right_inner(u, y1, action.left(u, action.right_inner(t, x1, x2), y2))
                if not action.right_inner(tu, m1, m2).allclose(right, tol * scale):
                    return Verdict(False, {'rule': 'right-inner', 't': t, 'u': u})
                left = action.left_inner(t, x1 @ action.left_inner(u, y1, y2), x2)
                if not action.left_inner(tu, m1, m2).allclose(left, tol * scale):
                    return Verdict(False, {'rule': 'left-inner', 't': t, 'u': u})
                checked += 1
    return Verdict(True, details={'pairs_checked': checked})


def _scale(*elements):
    return max(1.0, np.prod([max(1.0, e.norm()) for e in elements]))


def identity_partial_action(S: InverseSemigroup, A: FdAlgebra, sources) -> PartialIsoAction:
    '''Each t acts by the identity on the blocks in `sources[t]`'''
    return PartialIsoAction.from_data(S, A, [{b: b for b in blocks} for blocks in sources])


def with_unit(action: PartialIsoAction) -> PartialIsoAction:
    '''Adjoin a unit acting by the identity of A when S has none'''
    S = action.semigroup
    if S.unit is not None:
        return action
    A = action.algebra
    return PartialIsoAction(
        adjoin_unit(S), A, action.sources + (A.all_blocks,),
        action.block_maps + ({b: b for b in A.all_blocks},),
        action.unitaries + ({b: np.eye(d, dtype=complex) for b, d in enumerate(A.blocks)},))


def fd_action_from_space_action(space_action, dims, seed=None) -> PartialIsoAction:
    '''
    The action on the direct sum of M_{d_x} over the points x of a discrete
    space, with alpha_t moving block x to block alpha_t(x) by
    Ad(V_{alpha_t x} V_x*). `dims` must be constant on orbits. With a seed
    the V_x are random unitaries, otherwise identities.
    '''
    logger = get_logger('fd-action')

    X, S = space_action.space, space_action.semigroup
    if not X.is_discrete():
        raise PreconditionError('the space must be discrete')
    dims = [int(d) for d in dims]
    if len(dims) != X.size:
        raise StructuralError(f'expected {X.size} block dimensions, got {len(dims)}')
    for t in range(S.size):
        for x, y in space_action.maps[t].items():
            if dims[x] != dims[y]:
                raise StructuralError(
                    f'dimensions are not constant on orbits: {X.labels[x]} -> {X.labels[y]}')

    if seed is None:
        V = [np.eye(d, dtype=complex) for d in dims]
    else:
        rng = np.random.default_rng(seed)
        V = [random_unitary(d, rng) for d in dims]

    A = FdAlgebra(tuple(dims))
    unitaries = [{x: V[y] @ V[x].conj().T for x, y in space_action.maps[t].items()}
                 for t in range(S.size)]
    logger.debug(f'fd action on blocks {dims} with seed {seed}')
    return PartialIsoAction.from_data(S, A, [dict(m) for m in space_action.maps], unitaries)
