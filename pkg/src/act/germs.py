'''
Transformation groupoids of germs.

Arrows are classes [t, x] of pairs with x in D_{t*}, where
(t, x) ~ (t', x) iff some v <= t, t' has x in D_{v*}. Each class is
represented by its pair with the least t.

The arrow space carries the topology generated by the lifts
{[t, y] : y in V} of opens V inside D_{t*}. Its minimal neighbourhoods are

    N([t, x]) = intersection over all u with [t, x] in U_u
                of {[u, y] : y in N(x)}
'''

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Tuple

from exceptions import InternalError
from log_utils import get_logger
from report import Verdict
from topo import FiniteSpace

from .action import SpaceAction, with_unit
from .criteria import criterion_d1t_closed


@dataclass(frozen=True, eq=False)
class GermGroupoid:
    action: SpaceAction
    # representative (t, x) of each arrow
    arrows: Tuple[Tuple[int, int], ...]
    lookup: Dict[Tuple[int, int], int]
    space: FiniteSpace

    @property
    def semigroup(self):
        return self.action.semigroup

    def germ(self, t, x) -> int:
        return self.lookup[(t, x)]

    def source(self, g) -> int:
        return self.arrows[g][1]

    def range(self, g) -> int:
        t, x = self.arrows[g]
        return self.action.apply(t, x)

    def inverse(self, g) -> int:
        t, x = self.arrows[g]
        return self.germ(self.semigroup.star(t), self.action.apply(t, x))

    def compose(self, g, h):
        '''[t, alpha_u(y)] . [u, y] = [tu, y]; None when s(g) != r(h)'''
        if self.source(g) != self.range(h):
            return None
        t, _ = self.arrows[g]
        u, y = self.arrows[h]
        return self.germ(self.semigroup.product(t, u), y)

    @cached_property
    def units(self) -> FrozenSet[int]:
        one = self.semigroup.unit
        return frozenset(self.germ(one, x) for x in self.action.space.points)

    def unit_at(self, x) -> int:
        return self.germ(self.semigroup.unit, x)

    def bisection(self, t) -> FrozenSet[int]:
        return frozenset(self.germ(t, x) for x in self.action.domain(t))

    @cached_property
    def composition(self) -> Dict[Tuple[int, int], int]:
        table = {}
        for g in range(len(self.arrows)):
            for h in range(len(self.arrows)):
                k = self.compose(g, h)
                if k is not None:
                    table[(g, h)] = k
        return table

    def label(self, g):
        t, x = self.arrows[g]
        return f'[{self.semigroup.label(t)},{self.action.space.labels[x]}]'

    def to_document(self):
        X = self.action.space
        return {
            'arrows': [self.label(g) for g in range(len(self.arrows))],
            'units': sorted(self.label(g) for g in self.units),
            'source': [X.labels[self.source(g)] for g in range(len(self.arrows))],
            'range': [X.labels[self.range(g)] for g in range(len(self.arrows))],
            'composition': [[g, h, k] for (g, h), k in sorted(self.composition.items())],
            'topology': self.space.to_document(),
        }


def related(action: SpaceAction, t, u, x) -> bool:
    S = action.semigroup
    return any(x in action.domain(v) for v in S.lower_bounds(t, u))


def germ_classes(action: SpaceAction):
    '''
    Group the pairs (t, x) into germ classes, checking exhaustively that
    the germ relation is transitive at every point.
    '''
    S = action.semigroup
    lookup = {}
    for x in sorted(action.space.points):
        elements = [t for t in range(S.size) if x in action.domain(t)]
        for t in elements:
            if (t, x) in lookup:
                continue
            members = [u for u in elements if related(action, t, u, x)]
            for u in members:
                for w in elements:
                    if related(action, u, w, x) != (w in members):
                        raise InternalError('germ relation is not transitive',
                                            {'t': u, 'u': t, 'w': w, 'x': x})
                lookup[(u, x)] = (t, x)
    return lookup


def germ_relation_is_equivalence(action: SpaceAction) -> Verdict:
    try:
        germ_classes(with_unit(action))
    except InternalError as err:
        return Verdict(False, err.witness)
    return Verdict(True)


def germ_groupoid(action: SpaceAction) -> GermGroupoid:
    '''
    Build the germ groupoid, adjoining a unit to S when it has none, and
    check that every bisection is homeomorphic to its domain.
    '''
    logger = get_logger('germ-groupoid')

    action = with_unit(action)
    S, X = action.semigroup, action.space
    classes = germ_classes(action)
    representatives = sorted(set(classes.values()), key=lambda pair: (pair[1], pair[0]))
    index = {rep: i for i, rep in enumerate(representatives)}
    lookup = {pair: index[rep] for pair, rep in classes.items()}

    containing = {g: [] for g in range(len(representatives))}
    for (t, x), g in lookup.items():
        containing[g].append(t)

    neighbourhoods = []
    for g, (t, x) in enumerate(representatives):
        nbhd = None
        for u in containing[g]:
            lift = frozenset(lookup[(u, y)] for y in X.neighbourhoods[x])
            nbhd = lift if nbhd is None else nbhd & lift
        neighbourhoods.append(nbhd)

    labels = [f'[{S.label(t)},{X.labels[x]}]' for t, x in representatives]
    space = FiniteSpace.from_neighbourhoods(labels, neighbourhoods)
    groupoid = GermGroupoid(action, tuple(representatives), lookup, space)

    for t in range(S.size):
        section = {lookup[(t, x)]: x for x in action.domain(t)}
        for g, x in section.items():
            lifted = frozenset(lookup[(t, y)] for y in X.neighbourhoods[x])
            if space.neighbourhoods[g] & frozenset(section) != lifted:
                raise InternalError('bisection is not homeomorphic to its domain',
                                    {'t': t, 'x': x})

    logger.info(f'{len(representatives)} arrows over {X.size} points, {S.size} elements')
    return groupoid


def check_groupoid_laws(groupoid: GermGroupoid) -> Verdict:
    '''Associativity, unit and inverse laws of germ composition'''
    arrows = range(len(groupoid.arrows))
    table = groupoid.composition
    for g in arrows:
        r, s = groupoid.unit_at(groupoid.range(g)), groupoid.unit_at(groupoid.source(g))
        if table.get((r, g)) != g or table.get((g, s)) != g:
            return Verdict(False, {'rule': 'unit', 'g': g})
        inv = groupoid.inverse(g)
        if table.get((g, inv)) != r or table.get((inv, g)) != s:
            return Verdict(False, {'rule': 'inverse', 'g': g})
    for (g, h), gh in table.items():
        for k in arrows:
            hk = table.get((h, k))
            if hk is None:
                continue
            if table.get((gh, k)) != table.get((g, hk)):
                return Verdict(False, {'rule': 'associative', 'g': g, 'h': h, 'k': k})
    return Verdict(True)


def units_closed(groupoid: GermGroupoid) -> bool:
    '''
    Whether the units are closed in the arrow space. Computed directly and
    through the bisections, where D_{1,t} must be relatively closed in
    D_{t*}; disagreement is an internal error.
    '''
    direct = groupoid.space.is_closed(groupoid.units)
    by_bisections = criterion_d1t_closed(groupoid.action)
    if direct != by_bisections.holds:
        raise InternalError('closed units disagree with the bisection criterion',
                            {'direct': direct, 'criterion': by_bisections.to_dict()})
    return direct


def groupoid_is_hausdorff(groupoid: GermGroupoid) -> bool:
    '''
    Direct separation test of the arrow space, checked against
    "object space Hausdorff and units closed".
    '''
    direct = groupoid.space.is_hausdorff()
    expected = groupoid.action.space.is_hausdorff() and units_closed(groupoid)
    if direct != expected:
        raise InternalError('arrow space separation disagrees with closed units',
                            {'direct': direct, 'expected': expected})
    return direct
