'''The bundled fixture corpus and the JSON codecs'''

from os import path

import yaml

from exceptions import StructuralError

from .fixtures import (
    FAMILIES, FIXTURES, family_member, fixture_kind, fixture_names, load_fixture
)

__all__ = [
    'FAMILIES', 'FIXTURES', 'MANIFEST_PATH', 'expand_members', 'family_member',
    'fixture_kind', 'fixture_names', 'load_fixture', 'load_manifest'
]

MANIFEST_PATH = path.join(path.dirname(__file__), 'corpus.yml')


def load_manifest(manifest_path=MANIFEST_PATH):
    with open(manifest_path, encoding='utf-8') as manifest:
        manifest = yaml.safe_load(manifest) or {}
    if not isinstance(manifest.get('suites', {}), dict):
        raise StructuralError('corpus manifest: suites must be a mapping')
    return manifest


def expand_members(members):
    '''
    Fixture names, with seeded families expanded in seed order.

    >>> expand_members(['I3', {'family': 'random-fd-action', 'start': 2, 'count': 2}])
    ['I3', 'random-fd-action-2', 'random-fd-action-3']
    '''
    names = []
    for member in members or []:
        if isinstance(member, dict):
            start, count = int(member.get('start', 0)), int(member.get('count', 1))
            names.extend(family_member(member['family'], seed)
                         for seed in range(start, start + count))
        else:
            names.append(str(member))
    return names
