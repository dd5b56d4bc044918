'''
Finite topological spaces.

A finite topology is determined by the minimal open neighbourhood N(x)
of each point: a set is open iff it contains N(x) for each of its
points. Spaces store the neighbourhoods; the open family is enumerated
on demand by `opens()`.
'''

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

from exceptions import InternalError, PreconditionError, StructuralError
from report import ValidationReport

PointSet = FrozenSet[int]


@dataclass(frozen=True, eq=False)
class FiniteSpace:
    labels: Tuple[str, ...]
    neighbourhoods: Tuple[PointSet, ...]

    @classmethod
    def from_neighbourhoods(cls, labels, neighbourhoods):
        '''
        Build from minimal neighbourhoods; they must come from a preorder:
        x in N(x), and y in N(x) implies N(y) within N(x).

        >>> FiniteSpace.from_neighbourhoods(['a', 'b'], [{1}, {1}])
        Traceback (most recent call last):
        ...
        exceptions.StructuralError: point a is not in its own neighbourhood
        '''
        labels = tuple(str(label) for label in labels)
        neighbourhoods = tuple(frozenset(n) for n in neighbourhoods)
        if len(labels) != len(neighbourhoods):
            raise StructuralError('one neighbourhood per point is required')
        if len(set(labels)) != len(labels):
            raise StructuralError('point labels must be distinct')
        n = len(labels)
        for x, nbhd in enumerate(neighbourhoods):
            if not nbhd <= frozenset(range(n)):
                raise StructuralError(f'neighbourhood of {labels[x]} leaves the space')
            if x not in nbhd:
                raise StructuralError(f'point {labels[x]} is not in its own neighbourhood')
            for y in nbhd:
                if not neighbourhoods[y] <= nbhd:
                    raise StructuralError(
                        f'neighbourhoods of {labels[x]} and {labels[y]} are not nested')
        return cls(labels, neighbourhoods)

    @classmethod
    def from_opens(cls, labels, opens):
        '''
        Build from an explicit open family, which must be a lattice.

        >>> S = FiniteSpace.from_opens(['a', 'b'], [[], ['a'], ['a', 'b']])
        >>> [sorted(n) for n in S.neighbourhoods]
        [[0], [0, 1]]
        '''
        labels = tuple(str(label) for label in labels)
        report = validate_space(labels, opens)
        if not report.valid:
            violation = report.violations[0]
            raise StructuralError(
                f'open family is not a topology: {violation.rule} {violation.witness}')
        family = [_points_of(labels, U) for U in opens]
        everything = frozenset(range(len(labels)))
        neighbourhoods = []
        for x in range(len(labels)):
            nbhd = everything
            for U in family:
                if x in U:
                    nbhd = nbhd & U
            neighbourhoods.append(nbhd)
        return cls.from_neighbourhoods(labels, neighbourhoods)

    @classmethod
    def discrete(cls, labels):
        labels = tuple(str(label) for label in labels)
        return cls(labels, tuple(frozenset([x]) for x in range(len(labels))))

    @property
    def size(self):
        return len(self.labels)

    @cached_property
    def points(self) -> PointSet:
        return frozenset(range(self.size))

    def index_of(self, label):
        label = str(label)
        if label not in self.labels:
            raise StructuralError(f'unknown point: {label}')
        return self.labels.index(label)

    def subset(self, labels: Iterable) -> PointSet:
        return frozenset(self.index_of(label) for label in labels)

    def names(self, A: Iterable[int]):
        return sorted(self.labels[x] for x in A)

    def is_open(self, A) -> bool:
        A = frozenset(A)
        return all(self.neighbourhoods[x] <= A for x in A)

    def interior(self, A) -> PointSet:
        A = frozenset(A)
        return frozenset(x for x in A if self.neighbourhoods[x] <= A)

    def closure(self, A) -> PointSet:
        '''
        Points all of whose neighbourhoods meet A; equivalently the
        complement of the union of the opens disjoint from A.
        '''
        A = frozenset(A)
        return frozenset(y for y in self.points if self.neighbourhoods[y] & A)

    def is_closed(self, A) -> bool:
        return self.closure(A) == frozenset(A)

    def is_closed_in(self, A, B) -> bool:
        '''A is relatively closed in the open set B iff B \\ A is open'''
        B = frozenset(B)
        if not self.is_open(B):
            raise PreconditionError(f'{self.names(B)} is not open')
        return self.is_open(B - frozenset(A))

    def is_discrete(self) -> bool:
        return all(len(n) == 1 for n in self.neighbourhoods)

    def is_hausdorff(self) -> bool:
        '''
        Direct separation test; minimal neighbourhoods are the smallest
        opens around each point, so x and y are separated iff N(x), N(y)
        are disjoint. Must agree with discreteness.
        '''
        separated = all(not (self.neighbourhoods[x] & self.neighbourhoods[y])
                        for x, y in combinations(range(self.size), 2))
        if separated != self.is_discrete():
            raise InternalError(
                'Hausdorff test disagrees with discreteness',
                {'separated': separated, 'discrete': self.is_discrete()})
        return separated

    def opens(self) -> Tuple[PointSet, ...]:
        '''Every open set, as unions of minimal neighbourhoods'''
        family = {frozenset()}
        for nbhd in set(self.neighbourhoods):
            family |= {U | nbhd for U in family}
        return tuple(sorted(family, key=lambda U: (len(U), sorted(U))))

    def subspace(self, B) -> FiniteSpace:
        B = sorted(frozenset(B))
        position = {x: i for i, x in enumerate(B)}
        return FiniteSpace(
            tuple(self.labels[x] for x in B),
            tuple(frozenset(position[y] for y in self.neighbourhoods[x] if y in position)
                  for x in B))

    def is_continuous(self, f: Sequence[int], other: FiniteSpace) -> bool:
        '''f maps point indices of self to point indices of other'''
        return all(f[y] in other.neighbourhoods[f[x]]
                   for x in self.points for y in self.neighbourhoods[x])

    def is_homeomorphism(self, mapping, A, B) -> bool:
        '''
        Whether `mapping` (a dict) is a homeomorphism from the subspace A
        onto the subspace B.
        '''
        A, B = frozenset(A), frozenset(B)
        if set(mapping) != A or set(mapping.values()) != B or len(A) != len(B):
            return False
        return all(frozenset(mapping[y] for y in self.neighbourhoods[x] & A)
                   == self.neighbourhoods[mapping[x]] & B for x in A)

    def to_document(self):
        return {
            'points': list(self.labels),
            'opens': [self.names(U) for U in self.opens()],
        }


def _points_of(labels, U) -> PointSet:
    members = frozenset()
    for label in U:
        label = str(label)
        if label not in labels:
            raise StructuralError(f'unknown point: {label}')
        members = members | {labels.index(label)}
    return members


def validate_space(labels, opens, name: Optional[str] = None) -> ValidationReport:
    '''
    Check that an explicit open family contains the empty set and the
    whole space and is closed under pairwise unions and intersections.

    >>> validate_space(['a', 'b'], [[], ['a'], ['b'], ['a', 'b']]).valid
    True
    >>> report = validate_space(['a', 'b', 'c'], [[], ['a'], ['b'], ['a', 'b', 'c']])
    >>> report.rules(), report.violations[0].witness
    (['union'], (1, 2))
    '''
    labels = tuple(str(label) for label in labels)
    report = ValidationReport(name or 'space')
    family = [_points_of(labels, U) for U in opens]
    members = set(family)
    if frozenset() not in members:
        report.add('contains-empty', ())
    if frozenset(range(len(labels))) not in members:
        report.add('contains-space', ())
    union = next(((i, j) for i, j in combinations(range(len(family)), 2)
                  if family[i] | family[j] not in members), None)
    if union:
        report.add('union', union)
    meet = next(((i, j) for i, j in combinations(range(len(family)), 2)
                 if family[i] & family[j] not in members), None)
    if meet:
        report.add('intersection', meet)
    return report


def sierpinski() -> FiniteSpace:
    return FiniteSpace.from_opens(['a', 'b'], [[], ['a'], ['a', 'b']])
