'''
Inverse-semigroup actions on finite spaces by partial homeomorphisms.

For each t the action stores the domain D_{t*} (an open set) and the
bijection alpha_t from D_{t*} onto D_t.
'''

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

from exceptions import InternalError, PreconditionError, StructuralError
from isg import InverseSemigroup, adjoin_unit
from report import ValidationReport
from topo import FiniteSpace, semilattice_spectrum


@dataclass(frozen=True, eq=False)
class SpaceAction:
    semigroup: InverseSemigroup
    space: FiniteSpace
    domains: Tuple[FrozenSet[int], ...]
    maps: Tuple[Dict[int, int], ...]
    zero_preserving: bool = False

    @classmethod
    def from_maps(cls, S, X, maps, zero_preserving=False):
        '''
        `maps` sends each element index to a dict of point indices. Its
        domain is the key set.
        '''
        if len(maps) != S.size:
            raise StructuralError(f'expected {S.size} partial maps, got {len(maps)}')
        domains, checked = [], []
        for t, mapping in enumerate(maps):
            mapping = {int(x): int(y) for x, y in mapping.items()}
            for x, y in mapping.items():
                if not (0 <= x < X.size and 0 <= y < X.size):
                    raise StructuralError(f'map of {S.label(t)} leaves the space')
            domains.append(frozenset(mapping))
            checked.append(mapping)
        return cls(S, X, tuple(domains), tuple(checked), zero_preserving)

    def domain(self, t) -> FrozenSet[int]:
        return self.domains[t]

    def codomain(self, t) -> FrozenSet[int]:
        return frozenset(self.maps[t].values())

    def apply(self, t, x) -> int:
        return self.maps[t][x]

    def describe(self, t):
        X = self.space
        return {X.labels[x]: X.labels[y] for x, y in sorted(self.maps[t].items())}


def validate_action(action: SpaceAction) -> ValidationReport:
    '''
    Exhaustively check the action axioms, reporting the first witness of
    each violated rule.
    '''
    S, X = action.semigroup, action.space
    report = ValidationReport('space-action')
    n = S.size

    for t in range(n):
        if not X.is_open(action.domain(t)):
            report.add('domain-open', {'t': t})
            break

    for t in range(n):
        if len(action.codomain(t)) != len(action.domain(t)):
            report.add('injective', {'t': t})
            break

    for t in range(n):
        if action.codomain(t) != action.domain(S.star(t)):
            report.add('codomain', {'t': t})
            break

    for t in range(n):
        if not X.is_open(action.codomain(t)):
            continue
        if not X.is_homeomorphism(action.maps[t], action.domain(t), action.codomain(t)):
            report.add('homeomorphism', {'t': t})
            break

    if S.unit is not None:
        identity = {x: x for x in X.points}
        if action.maps[S.unit] != identity:
            report.add('unit-identity', {'t': S.unit})

    if action.zero_preserving:
        if S.zero is None or action.domain(S.zero):
            report.add('zero-preserving', {'t': S.zero})

    composite = _first_composite_violation(action)
    if composite:
        report.add(*composite)

    return report


def _first_composite_violation(action):
    S = action.semigroup
    for t in range(S.size):
        for u in range(S.size):
            tu = S.product(t, u)
            expected = {x: action.maps[t][y] for x, y in action.maps[u].items()
                        if y in action.maps[t]}
            if set(expected) != action.domain(tu):
                x = min(set(expected) ^ action.domain(tu))
                return 'composite-domain', {'t': t, 'u': u, 'x': x}
            for x, y in sorted(expected.items()):
                if action.maps[tu][x] != y:
                    return 'composite-map', {'t': t, 'u': u, 'x': x}
    return None


def with_unit(action: SpaceAction) -> SpaceAction:
    '''Adjoin a unit acting by the identity when S has none'''
    S = action.semigroup
    if S.unit is not None:
        return action
    identity = {x: x for x in action.space.points}
    return SpaceAction(adjoin_unit(S), action.space,
                       action.domains + (action.space.points,),
                       action.maps + (identity,), action.zero_preserving)


def trivial_action(S: InverseSemigroup, X: FiniteSpace) -> SpaceAction:
    '''Every element acts by the identity of X'''
    identity = {x: x for x in X.points}
    return SpaceAction.from_maps(S, X, [identity] * S.size)


def natural_action(S: InverseSemigroup, X: FiniteSpace = None) -> SpaceAction:
    '''
    The defining action of a semigroup of partial bijections of {1..n},
    on the discrete space with points '1'..'n' unless X is given.
    '''
    if S.maps is None:
        raise PreconditionError('the natural action needs a semigroup of partial bijections')
    n = max([max(list(m) + list(m.values()), default=0) for m in S.maps], default=0)
    if X is None:
        X = FiniteSpace.discrete([str(p) for p in range(1, n + 1)])
    maps = [{X.index_of(x): X.index_of(y) for x, y in m.items()} for m in S.maps]
    zero_preserving = S.zero is not None and not S.maps[S.zero]
    return SpaceAction.from_maps(S, X, maps, zero_preserving)


def universal_action(S: InverseSemigroup) -> SpaceAction:
    '''
    The action of S on the spectrum of E(S):
    c_t(phi_f) = phi_{t f t*} on U_{t*t}.
    Checked against the defining formula c_t(phi)(e) = phi(t* e t).
    '''
    if S.zero is None or S.unit is None:
        raise PreconditionError('the universal action needs a semigroup with zero and unit')
    spectrum = semilattice_spectrum(S)
    chars = spectrum.characters
    maps = []
    for t in range(S.size):
        ts = S.star(t)
        source = S.product(ts, t)
        mapping = {}
        for i, f in enumerate(chars):
            if not S.leq(f, source):
                continue
            image = S.product(S.product(t, f), ts)
            j = spectrum.character_of(image)
            for e in spectrum.semilattice:
                expected = spectrum.value(i, S.product(S.product(ts, e), t))
                if spectrum.value(j, e) != expected:
                    raise InternalError(
                        'universal action disagrees with phi(t* e t)', {'t': t, 'e': e})
            mapping[i] = j
        maps.append(mapping)
    return SpaceAction.from_maps(S, spectrum.space, maps, zero_preserving=True)


def prim_action(fd_action) -> SpaceAction:
    '''
    The action induced on the primitive ideal space of a finite-dimensional
    algebra: the discrete space of blocks, with t acting by its block map.
    '''
    S = fd_action.semigroup
    X = FiniteSpace.discrete([f'b{b}' for b in range(len(fd_action.algebra.blocks))])
    maps = [dict(fd_action.block_maps[t]) for t in range(S.size)]
    zero_preserving = S.zero is not None and not fd_action.sources[S.zero]
    return SpaceAction.from_maps(S, X, maps, zero_preserving)
