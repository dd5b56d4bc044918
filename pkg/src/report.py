'''
Report objects returned by validations and checks.

Reports are plain data: a failed validation is not an error.
'''

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass(frozen=True)
class Violation:
    rule: str
    witness: Any

    def to_dict(self):
        return {'rule': self.rule, 'witness': jsonable(self.witness)}


@dataclass
class ValidationReport:
    '''
    Every violated rule, each with its first witness.

    >>> report = ValidationReport('semigroup')
    >>> report.valid
    True
    >>> report.add('associative', (0, 1, 2))
    >>> report.valid, report.rules()
    (False, ['associative'])
    '''
    subject: str
    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self):
        return not self.violations

    def add(self, rule, witness):
        self.violations.append(Violation(rule, witness))

    def rules(self):
        return [v.rule for v in self.violations]

    def first(self, rule):
        return next((v for v in self.violations if v.rule == rule), None)

    def to_dict(self):
        return {
            'subject': self.subject,
            'valid': self.valid,
            'violations': [v.to_dict() for v in self.violations],
        }


@dataclass
class Verdict:
    '''
    The value of a predicate, with a witness when it is false
    and any supporting numbers in `details`.
    '''
    holds: bool
    witness: Optional[Any] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self):
        return bool(self.holds)

    def to_dict(self):
        result = {'holds': bool(self.holds), 'witness': jsonable(self.witness)}
        result.update(jsonable(self.details))
        return result


def jsonable(value):
    '''
    Convert tuples, sets and numpy scalars into JSON-friendly values.

    >>> jsonable({'a': (1, 2), 'b': frozenset([3, 1])})
    {'a': [1, 2], 'b': [1, 3]}
    '''
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    if hasattr(value, 'item') and callable(value.item):
        # numpy scalars
        return jsonable(value.item())
    if isinstance(value, complex):
        if abs(value.imag) < 1e-15:
            return value.real
        return {'real': value.real, 'imag': value.imag}
    return value
