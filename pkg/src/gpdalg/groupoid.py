'''
Finite discrete groupoids.

Arrows and units are dense indices. `units[x]` is the identity arrow at
unit x; composition g h is defined iff source(g) = range(h).
'''

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Tuple

from act import SpaceAction, germ_groupoid
from exceptions import PreconditionError, StructuralError
from log_utils import get_logger
from report import ValidationReport


@dataclass(frozen=True, eq=False)
class FiniteGroupoid:
    arrow_labels: Tuple[str, ...]
    unit_labels: Tuple[str, ...]
    source: Tuple[int, ...]
    range: Tuple[int, ...]
    units: Tuple[int, ...]
    inverse: Tuple[int, ...]
    composition: Dict[Tuple[int, int], int]
    # bisections G_t by element label, for transformation groupoids
    grading: Dict[str, FrozenSet[int]] = field(default_factory=dict)
    # (t, x) -> germ [t, x], for transformation groupoids
    germs: Dict[Tuple[int, int], int] = field(default_factory=dict)

    @classmethod
    def from_data(cls, arrow_labels, unit_labels, source, range, units, inverse,
                  composition, grading=None, germs=None):
        n, m = len(arrow_labels), len(unit_labels)
        for name, values, bound in (('source', source, m), ('range', range, m),
                                    ('units', units, n), ('inverse', inverse, n)):
            if len(values) != (m if name == 'units' else n):
                raise StructuralError(f'{name} has the wrong length')
            if any(not 0 <= int(v) < bound for v in values):
                raise StructuralError(f'{name} is out of range')
        table = {}
        for (g, h), k in composition.items():
            if not all(0 <= int(v) < n for v in (g, h, k)):
                raise StructuralError(f'composition ({g}, {h}) -> {k} is out of range')
            table[(int(g), int(h))] = int(k)
        return cls(tuple(str(a) for a in arrow_labels), tuple(str(x) for x in unit_labels),
                   tuple(int(v) for v in source), tuple(int(v) for v in range),
                   tuple(int(v) for v in units), tuple(int(v) for v in inverse), table,
                   dict(grading or {}), dict(germs or {}))

    @property
    def size(self):
        return len(self.arrow_labels)

    @property
    def unit_count(self):
        return len(self.unit_labels)

    def compose(self, g, h) -> Optional[int]:
        return self.composition.get((g, h))

    def fibre(self, x) -> Tuple[int, ...]:
        '''The source fibre s^-1(x)'''
        return tuple(g for g in range(self.size) if self.source[g] == x)

    def is_invariant(self, U) -> bool:
        return all((self.source[g] in U) == (self.range[g] in U) for g in range(self.size))

    def restriction(self, U) -> FiniteGroupoid:
        '''G_U: the arrows with source and range in U'''
        U = sorted(frozenset(U))
        if any(not 0 <= x < self.unit_count for x in U):
            raise StructuralError(f'units {U} out of range')
        arrows = [g for g in range(self.size) if self.source[g] in U and self.range[g] in U]
        arrow_index = {g: k for k, g in enumerate(arrows)}
        unit_index = {x: k for k, x in enumerate(U)}
        composition = {(arrow_index[g], arrow_index[h]): arrow_index[k]
                       for (g, h), k in self.composition.items()
                       if g in arrow_index and h in arrow_index}
        return FiniteGroupoid(
            tuple(self.arrow_labels[g] for g in arrows),
            tuple(self.unit_labels[x] for x in U),
            tuple(unit_index[self.source[g]] for g in arrows),
            tuple(unit_index[self.range[g]] for g in arrows),
            tuple(arrow_index[self.units[x]] for x in U),
            tuple(arrow_index[self.inverse[g]] for g in arrows),
            composition)


def validate_groupoid(G: FiniteGroupoid) -> ValidationReport:
    '''Exhaustive check of the groupoid axioms, first witness per rule'''
    report = ValidationReport('groupoid')
    arrows = range(G.size)

    for g in arrows:
        for h in arrows:
            if ((g, h) in G.composition) != (G.source[g] == G.range[h]):
                report.add('composable', {'g': g, 'h': h})
                break
        else:
            continue
        break

    for (g, h), k in sorted(G.composition.items()):
        if G.source[k] != G.source[h] or G.range[k] != G.range[g]:
            report.add('source-range', {'g': g, 'h': h})
            break

    for x, e in enumerate(G.units):
        if G.source[e] != x or G.range[e] != x:
            report.add('unit', {'x': x})
            break
    else:
        for g in arrows:
            if (G.compose(G.units[G.range[g]], g) != g
                    or G.compose(g, G.units[G.source[g]]) != g):
                report.add('unit', {'g': g})
                break

    for g in arrows:
        inv = G.inverse[g]
        if (G.compose(g, inv) != G.units[G.range[g]]
                or G.compose(inv, g) != G.units[G.source[g]]):
            report.add('inverse', {'g': g})
            break

    for (g, h), gh in sorted(G.composition.items()):
        bad = next((k for k in arrows if (h, k) in G.composition
                    and G.compose(gh, k) != G.compose(g, G.compose(h, k))), None)
        if bad is not None:
            report.add('associative', {'g': g, 'h': h, 'k': bad})
            break
    return report


def from_discrete_action(action: SpaceAction) -> FiniteGroupoid:
    '''
    The transformation groupoid of an action on a discrete space: the
    groupoid of germs without its topology, graded by the bisections G_t.
    '''
    if not action.space.is_discrete():
        raise PreconditionError('convolution algebras need a discrete space')
    gg = germ_groupoid(action)
    S, X = gg.semigroup, action.space
    n = len(gg.arrows)
    return FiniteGroupoid.from_data(
        [gg.label(g) for g in range(n)],
        X.labels,
        [gg.source(g) for g in range(n)],
        [gg.range(g) for g in range(n)],
        [gg.unit_at(x) for x in range(X.size)],
        [gg.inverse(g) for g in range(n)],
        gg.composition,
        {S.label(t): gg.bisection(t) for t in range(S.size)},
        dict(gg.lookup))


def classical_transformation_groupoid(action: SpaceAction) -> FiniteGroupoid:
    '''
    X x| Gamma for a group acting by homeomorphisms of X: arrows (g, x)
    for every g and x, with (g, h y)(h, y) = (gh, y).
    '''
    logger = get_logger('transformation-groupoid')

    S, X = action.semigroup, action.space
    if S.unit is None or any(S.product(S.star(t), t) != S.unit for t in range(S.size)):
        raise PreconditionError('the classical construction needs a group')
    if any(action.domain(t) != X.points for t in range(S.size)):
        raise PreconditionError('the group must act by global homeomorphisms')

    pairs = [(t, x) for x in range(X.size) for t in range(S.size)]
    index = {pair: k for k, pair in enumerate(pairs)}
    composition = {}
    for (t, x), g in index.items():
        for (u, y), h in index.items():
            if x == action.apply(u, y):
                composition[(g, h)] = index[(S.product(t, u), y)]
    logger.debug(f'{len(pairs)} arrows')
    return FiniteGroupoid.from_data(
        [f'({S.label(t)},{X.labels[x]})' for t, x in pairs],
        X.labels,
        [x for _, x in pairs],
        [action.apply(t, x) for t, x in pairs],
        [index[(S.unit, x)] for x in range(X.size)],
        [index[(S.star(t), action.apply(t, x))] for t, x in pairs],
        composition,
        {S.label(t): frozenset(index[(t, x)] for x in range(X.size)) for t in range(S.size)},
        index)


def pair_groupoid(n) -> FiniteGroupoid:
    '''All pairs (i, j) on n points; (i, j)(j, k) = (i, k)'''
    pairs = [(i, j) for i in range(n) for j in range(n)]
    index = {pair: k for k, pair in enumerate(pairs)}
    composition = {(index[(i, j)], index[(j2, k)]): index[(i, k)]
                   for i, j in pairs for j2, k in pairs if j == j2}
    return FiniteGroupoid.from_data(
        [f'({i},{j})' for i, j in pairs], [str(i) for i in range(n)],
        [j for _, j in pairs], [i for i, _ in pairs],
        [index[(i, i)] for i in range(n)], [index[(j, i)] for i, j in pairs],
        composition)


def group_groupoid(S) -> FiniteGroupoid:
    '''A finite group as a groupoid with one unit'''
    n = S.size
    return FiniteGroupoid.from_data(
        [S.label(t) for t in range(n)], ['*'], [0] * n, [0] * n, [S.unit],
        list(S.inv), {(t, u): S.product(t, u) for t in range(n) for u in range(n)})


def unit_groupoid(n) -> FiniteGroupoid:
    '''n units and no other arrows'''
    return FiniteGroupoid.from_data(
        [str(x) for x in range(n)], [str(x) for x in range(n)], range(n), range(n),
        range(n), range(n), {(x, x): x for x in range(n)})
