'''
Finite inverse semigroups given by their Cayley table.

Elements are the dense indices 0..size-1. The index order is the
default total order on S; `sorted_elements` also offers the order by
display label.
'''

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

import numpy as np

from exceptions import InternalError, ResourceError, StructuralError
from report import ValidationReport, Verdict

MAX_ISOMORPHISM_SIZE = 8


@dataclass(frozen=True, eq=False)
class InverseSemigroup:
    mul: Tuple[Tuple[int, ...], ...]
    inv: Tuple[int, ...]
    unit: Optional[int] = None
    zero: Optional[int] = None
    labels: Optional[Tuple[str, ...]] = None
    # element index -> partial bijection, for concrete models
    maps: Optional[Tuple[Dict[int, int], ...]] = None

    @classmethod
    def from_table(cls, mul, inv, unit=None, zero=None, labels=None, maps=None):
        '''
        Build a semigroup after checking that the table is well formed.
        Axioms are NOT checked here, see `validate`.

        >>> InverseSemigroup.from_table([[0, 2]], [0])
        Traceback (most recent call last):
        ...
        exceptions.StructuralError: mul must be a 1x1 table
        '''
        mul = tuple(tuple(int(v) for v in row) for row in mul)
        inv = tuple(int(v) for v in inv)
        check_structure(mul, inv, unit, zero)
        if labels is not None:
            labels = tuple(str(label) for label in labels)
            if len(labels) != len(inv):
                raise StructuralError(f'expected {len(inv)} labels, got {len(labels)}')
        return cls(mul, inv, unit, zero, labels, maps)

    @property
    def size(self):
        return len(self.inv)

    def __len__(self):
        return self.size

    def product(self, t, u):
        return self.mul[t][u]

    def star(self, t):
        return self.inv[t]

    def label(self, t):
        return self.labels[t] if self.labels else str(t)

    def index_of(self, key):
        '''
        Resolve a label, falling back to a decimal index.

        >>> S = InverseSemigroup.from_table([[0, 1], [1, 0]], [0, 1], labels=['1', 'g'])
        >>> S.index_of('g'), S.index_of('0')
        (1, 0)
        '''
        key = str(key)
        if self.labels and key in self.labels:
            return self.labels.index(key)
        try:
            index = int(key)
        except ValueError:
            raise StructuralError(f'unknown element: {key}')
        if not 0 <= index < self.size:
            raise StructuralError(f'element index out of range: {index}')
        return index

    @cached_property
    def table(self):
        return np.array(self.mul, dtype=np.int64)

    @cached_property
    def idempotents(self) -> FrozenSet[int]:
        return frozenset(e for e in range(self.size) if self.mul[e][e] == e)

    def is_idempotent(self, t):
        return t in self.idempotents

    @cached_property
    def order(self):
        '''
        Boolean matrix with order[t, u] iff t <= u.

        Both characterizations, t = u t* t and t = u e for an idempotent e,
        are computed; any disagreement is an internal error.
        '''
        M = self.table
        n = self.size
        inv = np.array(self.inv)
        # first[u, t] = u t* t
        first = M[M[:, inv], np.arange(n)[None, :]]
        by_source = (first == np.arange(n)[None, :]).T

        by_idempotent = np.zeros((n, n), dtype=bool)
        for u in range(n):
            for e in self.idempotents:
                by_idempotent[self.mul[u][e], u] = True

        mismatch = np.argwhere(by_source != by_idempotent)
        if len(mismatch):
            t, u = (int(v) for v in mismatch[0])
            raise InternalError(
                'natural order characterizations disagree', {'t': t, 'u': u})
        return by_source

    def leq(self, t, u):
        return bool(self.order[t, u])

    def principal_down_set(self, t) -> FrozenSet[int]:
        return frozenset(int(v) for v in np.flatnonzero(self.order[:, t]))

    def lower_bounds(self, t, u) -> FrozenSet[int]:
        return frozenset(int(v) for v in np.flatnonzero(self.order[:, t] & self.order[:, u]))


def check_structure(mul, inv, unit=None, zero=None):
    n = len(inv)
    if n == 0:
        raise StructuralError('a semigroup needs at least one element')
    if len(mul) != n or any(len(row) != n for row in mul):
        raise StructuralError(f'mul must be a {n}x{n} table')
    for t, row in enumerate(mul):
        for u, v in enumerate(row):
            if not 0 <= v < n:
                raise StructuralError(f'mul[{t}][{u}] = {v} is out of range')
    for t, v in enumerate(inv):
        if not 0 <= v < n:
            raise StructuralError(f'inv[{t}] = {v} is out of range')
    for name, value in (('unit', unit), ('zero', zero)):
        if value is not None and not 0 <= value < n:
            raise StructuralError(f'{name} = {value} is out of range')


def validate(mul, inv, unit=None, zero=None) -> ValidationReport:
    '''
    Scan every inverse-semigroup axiom and report each violated one with
    its lexicographically first witness.

    >>> validate([[0, 1], [1, 0]], [0, 1], unit=0).valid
    True
    >>> validate([[0, 0], [1, 1]], [0, 1]).rules()
    ['unique-inverse', 'inverse-anti-multiplicative', 'idempotents-commute']
    '''
    check_structure(mul, inv, unit, zero)
    M = np.array(mul, dtype=np.int64)
    n = len(inv)
    inv = list(inv)
    report = ValidationReport('semigroup')
    idx = np.arange(n)

    # left[a, b, c] = (ab)c, right[a, b, c] = a(bc)
    left = M[M, :]
    right = M[idx[:, None, None], M[None, :, :]]
    bad = np.argwhere(left != right)
    if len(bad):
        report.add('associative', tuple(int(v) for v in bad[0]))

    for t in range(n):
        s = inv[t]
        if M[M[t, s], t] != t or M[M[s, t], s] != s:
            report.add('regular', (t, s))
            break

    for t in range(n):
        others = [s for s in range(n)
                  if s != inv[t] and M[M[t, s], t] == t and M[M[s, t], s] == s]
        if others:
            report.add('unique-inverse', (t, inv[t], others[0]))
            break

    for t in range(n):
        if inv[inv[t]] != t:
            report.add('involutive', (t,))
            break

    anti = next(((t, u) for t in range(n) for u in range(n)
                 if inv[M[t, u]] != M[inv[u], inv[t]]), None)
    if anti:
        report.add('inverse-anti-multiplicative', anti)

    idempotents = [e for e in range(n) if M[e, e] == e]
    commute = next(((e, f) for e in idempotents for f in idempotents
                    if M[e, f] != M[f, e]), None)
    if commute:
        report.add('idempotents-commute', commute)

    if unit is not None:
        bad_unit = next((t for t in range(n) if M[unit, t] != t or M[t, unit] != t), None)
        if bad_unit is not None:
            report.add('unit', (unit, bad_unit))

    if zero is not None:
        bad_zero = next((t for t in range(n) if M[zero, t] != zero or M[t, zero] != zero), None)
        if bad_zero is not None:
            report.add('zero', (zero, bad_zero))

    return report


def validate_semigroup(S: InverseSemigroup) -> ValidationReport:
    return validate(S.mul, S.inv, S.unit, S.zero)


def find_unit(mul):
    n = len(mul)
    return next((e for e in range(n)
                 if all(mul[e][t] == t and mul[t][e] == t for t in range(n))), None)


def find_zero(mul):
    n = len(mul)
    return next((z for z in range(n)
                 if all(mul[z][t] == z and mul[t][z] == z for t in range(n))), None)


def idempotents(S: InverseSemigroup):
    return S.idempotents


def leq(S: InverseSemigroup, t, u):
    return S.leq(t, u)


def lower_bounds(S: InverseSemigroup, t, u):
    return S.lower_bounds(t, u)


def order_is_partial_order(S: InverseSemigroup) -> Verdict:
    '''Exhaustive reflexivity, antisymmetry and transitivity scan of <='''
    order = S.order
    n = S.size
    for t in range(n):
        if not order[t, t]:
            return Verdict(False, {'rule': 'reflexive', 't': t})
    for t in range(n):
        for u in range(n):
            if t != u and order[t, u] and order[u, t]:
                return Verdict(False, {'rule': 'antisymmetric', 't': t, 'u': u})
    # order composed with itself must stay inside order
    composed = (order.astype(np.int64) @ order.astype(np.int64)) > 0
    bad = np.argwhere(composed & ~order)
    if len(bad):
        t, w = (int(v) for v in bad[0])
        return Verdict(False, {'rule': 'transitive', 't': t, 'w': w})
    return Verdict(True)


def adjoin_unit(S: InverseSemigroup) -> InverseSemigroup:
    '''
    Add a fresh unit, even when S already has one.

    >>> S = adjoin_unit(InverseSemigroup.from_table([[0]], [0], unit=0))
    >>> S.size, S.unit, sorted(S.idempotents)
    (2, 1, [0, 1])
    '''
    n = S.size
    mul = [list(row) + [t] for t, row in enumerate(S.mul)]
    mul.append(list(range(n)) + [n])
    labels = None
    if S.labels:
        labels = S.labels + (_fresh_label(S.labels, '1+'),)
    maps = None
    if S.maps is not None:
        points = set()
        for partial in S.maps:
            points.update(partial)
            points.update(partial.values())
        maps = S.maps + ({p: p for p in sorted(points)},)
    return InverseSemigroup.from_table(mul, list(S.inv) + [n], n, S.zero, labels, maps)


def adjoin_zero(S: InverseSemigroup) -> InverseSemigroup:
    n = S.size
    mul = [list(row) + [n] for row in S.mul]
    mul.append([n] * (n + 1))
    labels = None
    if S.labels:
        labels = S.labels + (_fresh_label(S.labels, '0'),)
    return InverseSemigroup.from_table(mul, list(S.inv) + [n], S.unit, n, labels)


def with_unit(S: InverseSemigroup) -> InverseSemigroup:
    return S if S.unit is not None else adjoin_unit(S)


def _fresh_label(labels, preferred):
    label = preferred
    while label in labels:
        label = label + "'"
    return label


def sorted_elements(S: InverseSemigroup, order='index') -> Tuple[int, ...]:
    '''
    The total order on S used by normal forms.

    >>> S = InverseSemigroup.from_table([[0, 1], [1, 0]], [0, 1], labels=['b', 'a'])
    >>> sorted_elements(S), sorted_elements(S, 'lex')
    ((0, 1), (1, 0))
    '''
    if order == 'index':
        return tuple(range(S.size))
    if order == 'lex':
        return tuple(sorted(range(S.size), key=lambda t: (S.label(t), t)))
    raise StructuralError(f'unknown order: {order}')


def find_isomorphism(S: InverseSemigroup, T: InverseSemigroup) -> Optional[Sequence[int]]:
    '''
    Brute-force search for a bijection f with f(tu) = f(t)f(u).
    Only meant for the handful of tiny tables compared in tests.
    '''
    if S.size != T.size:
        return None
    if S.size > MAX_ISOMORPHISM_SIZE:
        raise ResourceError(f'isomorphism search is limited to {MAX_ISOMORPHISM_SIZE} elements')
    n = S.size
    for perm in permutations(range(n)):
        if all(perm[S.mul[t][u]] == T.mul[perm[t]][perm[u]]
               for t in range(n) for u in range(n)):
            return perm
    return None
