'''
The character spectrum of the idempotent semilattice of an inverse
semigroup.

A character of a finite semilattice E is determined by its filter
phi^-1(1), which is closed under meets and so is the principal filter of
its least element f, with f nonzero when phi(0) = 0. Characters are
therefore indexed by the nonzero idempotents; phi_f(e) = 1 iff f <= e.
The minimal open neighbourhood of phi_f is the basic open
U_f = {phi_g : g <= f}.
'''

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Tuple

from exceptions import InternalError, ResourceError
from isg import InverseSemigroup
from log_utils import get_logger
from report import Verdict

from .space import FiniteSpace

MAX_IDEAL_ENUMERATION = 20


@dataclass(frozen=True, eq=False)
class SemilatticeSpectrum:
    semigroup: InverseSemigroup
    # idempotent f generating each character, in index order
    characters: Tuple[int, ...]
    space: FiniteSpace
    patch: bool = False

    @cached_property
    def semilattice(self) -> Tuple[int, ...]:
        return tuple(sorted(self.semigroup.idempotents))

    def value(self, character, e) -> int:
        '''phi(e) for the character at position `character`'''
        f = self.characters[character]
        return int(self.semigroup.leq(f, e))

    def character_of(self, f) -> int:
        return self.characters.index(f)

    def basis(self, e) -> FrozenSet[int]:
        '''U_e = {phi : phi(e) = 1}'''
        return frozenset(i for i in range(len(self.characters)) if self.value(i, e))

    def filter(self, character) -> FrozenSet[int]:
        return frozenset(e for e in self.semilattice if self.value(character, e))


def semilattice_spectrum(S: InverseSemigroup, patch=False) -> SemilatticeSpectrum:
    '''
    Enumerate the characters of E(S) and put the topology generated by
    the sets U_e on them, or the discrete (patch) topology with
    `patch=True`.
    '''
    logger = get_logger('spectrum')

    characters = tuple(f for f in sorted(S.idempotents) if f != S.zero)
    labels = [f'phi[{S.label(f)}]' for f in characters]
    if patch:
        space = FiniteSpace.discrete(labels)
    else:
        space = FiniteSpace.from_neighbourhoods(
            labels,
            [[i for i, g in enumerate(characters) if S.leq(g, f)] for f in characters])
    spectrum = SemilatticeSpectrum(S, characters, space, patch)

    for i in range(len(characters)):
        _check_character(spectrum, i)

    law = basis_law(spectrum)
    if not law.holds:
        raise InternalError('basis sets do not satisfy U_e & U_f = U_ef', law.witness)

    logger.info(f'{len(S.idempotents)} idempotents, {len(characters)} characters')
    return spectrum


def _check_character(spectrum, i):
    S = spectrum.semigroup
    E = spectrum.semilattice
    for e in E:
        for f in E:
            if spectrum.value(i, S.product(e, f)) != spectrum.value(i, e) * spectrum.value(i, f):
                raise InternalError('character is not multiplicative',
                                    {'character': i, 'e': e, 'f': f})
    if S.unit is not None and not spectrum.value(i, S.unit):
        raise InternalError('character does not send 1 to 1', {'character': i})
    if S.zero is not None and spectrum.value(i, S.zero):
        raise InternalError('character does not send 0 to 0', {'character': i})


def basis_law(spectrum: SemilatticeSpectrum) -> Verdict:
    '''U_e & U_f = U_ef for all pairs of idempotents'''
    S = spectrum.semigroup
    for e in spectrum.semilattice:
        for f in spectrum.semilattice:
            if spectrum.basis(e) & spectrum.basis(f) != spectrum.basis(S.product(e, f)):
                return Verdict(False, {'e': e, 'f': f})
    return Verdict(True)


def semilattice_ideals(spectrum: SemilatticeSpectrum):
    '''Down-closed subsets of E containing 0 (all down-closed subsets without a zero)'''
    S = spectrum.semigroup
    E = spectrum.semilattice
    if len(E) > MAX_IDEAL_ENUMERATION:
        raise ResourceError(f'ideal enumeration is limited to {MAX_IDEAL_ENUMERATION} idempotents')
    ideals = []
    for k in range(len(E) + 1):
        for subset in combinations(E, k):
            members = frozenset(subset)
            if S.zero is not None and S.zero not in members:
                continue
            if all(g in members for f in members for g in E if S.leq(g, f)):
                ideals.append(members)
    return ideals


def ideal_open_bijection_check(spectrum: SemilatticeSpectrum) -> Verdict:
    '''
    V -> {e : U_e within V} is a lattice isomorphism from the opens of
    the spectrum onto the ideals of E.
    '''
    E = spectrum.semilattice
    opens = spectrum.space.opens()

    def ideal_of(V):
        return frozenset(e for e in E if spectrum.basis(e) <= V)

    image = {}
    for V in opens:
        ideal = ideal_of(V)
        if ideal in image:
            return Verdict(False, {'rule': 'injective',
                                   'opens': [sorted(image[ideal]), sorted(V)]})
        image[ideal] = V

    ideals = set(semilattice_ideals(spectrum))
    if set(image) != ideals:
        missing = sorted((sorted(I) for I in ideals ^ set(image)), key=lambda I: (len(I), I))
        return Verdict(False, {'rule': 'onto', 'ideal': missing[0]})

    for V, W in combinations(opens, 2):
        if ideal_of(V & W) != ideal_of(V) & ideal_of(W):
            return Verdict(False, {'rule': 'meet', 'opens': [sorted(V), sorted(W)]})
        if ideal_of(V | W) != ideal_of(V) | ideal_of(W):
            return Verdict(False, {'rule': 'join', 'opens': [sorted(V), sorted(W)]})

    return Verdict(True, details={'opens': len(opens), 'ideals': len(ideals)})


def ultracharacters(spectrum: SemilatticeSpectrum):
    '''
    Characters whose filter is maximal among character filters, that is
    phi_f for the atoms f of E. Returned with their closure.
    '''
    S = spectrum.semigroup
    chars = spectrum.characters
    ultra = frozenset(
        i for i, f in enumerate(chars)
        if not any(g != f and S.leq(g, f) for g in chars))
    return ultra, spectrum.space.closure(ultra)


def tight_characters(spectrum: SemilatticeSpectrum) -> FrozenSet[int]:
    '''
    Tight characters by the cover definition: phi is tight iff for every e
    with phi(e) = 1 the set of nonzero z <= e with phi(z) = 0 does not
    cover e. Covers are closed under enlargement, so testing this single
    largest candidate suffices.

    For finite E these are the ultracharacters; the equality is checked.
    '''
    S = spectrum.semigroup
    E = [e for e in spectrum.semilattice if e != S.zero]
    tight = set()
    for i in range(len(spectrum.characters)):
        failed = False
        for e in E:
            if not spectrum.value(i, e):
                continue
            candidates = [z for z in E if S.leq(z, e) and not spectrum.value(i, z)]
            below = [x for x in E if S.leq(x, e)]
            covers = all(any(S.product(x, z) != S.zero for z in candidates) for x in below)
            if covers:
                failed = True
                break
        if not failed:
            tight.add(i)

    tight = frozenset(tight)
    ultra, _ = ultracharacters(spectrum)
    if tight != ultra:
        raise InternalError('tight characters differ from ultracharacters',
                            {'tight': sorted(tight), 'ultra': sorted(ultra)})
    return tight
