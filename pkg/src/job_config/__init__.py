import json

from common import DEFAULT_CAP, DEFAULT_TIMEOUT_SECONDS, EXACT_TOL, SPECTRAL_TOL
from exceptions import StructuralError

from .job_config import JobConfig

__all__ = [
    'DEFAULTS', 'JobConfig', 'from_json_file', 'from_object'
]

DEFAULTS = {
    'tol': EXACT_TOL,
    'spectral_tol': SPECTRAL_TOL,
    'cap': DEFAULT_CAP,
    'order': 'index',
    'timeout': DEFAULT_TIMEOUT_SECONDS,
}


def from_json_file(json_path, defaults=DEFAULTS, flags={}):
    with open(json_path, encoding='utf-8') as json_file:
        obj = json.load(json_file)

    return from_object(obj, defaults, flags)


def from_object(obj, defaults=DEFAULTS, flags={}):
    '''Read the `"options"` object of an input document, if any'''
    options = obj.get('options', {}) if isinstance(obj, dict) else {}
    if not isinstance(options, dict):
        raise StructuralError('"options" must be an object')
    return JobConfig(options, defaults, flags)
