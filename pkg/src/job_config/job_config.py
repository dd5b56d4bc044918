import os

from common import ORDERS
from exceptions import StructuralError

ENV_VARS = {
    'tol': 'VERIFY_TOL',
    'spectral_tol': 'VERIFY_SPECTRAL_TOL',
    'cap': 'VERIFY_CAP',
    'timeout': 'VERIFY_TIMEOUT',
}

CASTS = {
    'tol': float,
    'spectral_tol': float,
    'cap': int,
    'timeout': float,
    'seed': int,
    'order': str,
    'out': str,
}


class JobConfig:
    '''
    Encapsulate the options of a verification job.

    Options come, in order of precedence, from explicit command-line
    `flags`, the `"options"` object of the input document (`config`),
    the VERIFY_* environment variables, and `defaults`:

    {
        "options": {
            "tol": 1e-10,
            "order": "lex"
        },
        ...
    }
    '''

    def __init__(self, config={}, defaults={}, flags={}):
        self.config = config
        self.defaults = defaults
        self.flags = flags

    def get(self, name):
        '''
        >>> JobConfig({'tol': 1e-6}, {'tol': 1e-10, 'cap': 5}, {'cap': 7}).get('tol')
        1e-06
        >>> JobConfig({}, {'tol': 1e-10, 'cap': 5}, {'cap': 7}).get('cap')
        7
        '''
        value = self.flags.get(name)
        if value is None:
            value = self.config.get(name)
        if value is None and name in ENV_VARS:
            value = os.getenv(ENV_VARS[name])
        if value is None:
            value = self.defaults.get(name)
        if value is None:
            return None
        try:
            return CASTS.get(name, lambda v: v)(value)
        except (TypeError, ValueError):
            raise StructuralError(f'invalid value for option {name}: {value!r}')

    @property
    def tol(self):
        return self.get('tol')

    @property
    def spectral_tol(self):
        return self.get('spectral_tol')

    @property
    def cap(self):
        return self.get('cap')

    @property
    def order(self):
        return self.get('order')

    @property
    def seed(self):
        return self.get('seed')

    @property
    def timeout(self):
        return self.get('timeout')

    @property
    def out(self):
        return self.get('out')

    def validate(self):
        '''Reject unusable options before any work is done'''
        for name in ('tol', 'spectral_tol'):
            value = self.get(name)
            if value is not None and value < 0:
                raise StructuralError(f'{name} must not be negative, got {value}')
        if self.cap is not None and self.cap <= 0:
            raise StructuralError(f'cap must be positive, got {self.cap}')
        if self.timeout is not None and self.timeout <= 0:
            raise StructuralError(f'timeout must be positive, got {self.timeout}')
        if self.order is not None and self.order not in ORDERS:
            raise StructuralError(f'unknown order: {self.order}')
        return self

    def require_seed(self, command):
        if self.seed is None:
            raise StructuralError(f'{command} is randomized and needs --seed')
        return self.seed

    def seed_or(self, default):
        '''
        >>> JobConfig({}, {}).seed_or(0)
        0
        '''
        return default if self.seed is None else self.seed

    def to_dict(self):
        return {name: self.get(name) for name in CASTS}
