import pytest

from act import validate_action
from corpus import (
    FAMILIES, FIXTURES, expand_members, family_member, fixture_kind, fixture_names,
    load_fixture, load_manifest
)
from corpus.fixtures import KINDS
from exceptions import StructuralError
from fdalg import validate_fd_action
from isg import validate_semigroup

from ..support import create_file

VALIDATORS = {
    'semigroup': lambda S: validate_semigroup(S).valid,
    'action': lambda action: validate_action(action).valid,
    'fd-action': lambda action: validate_fd_action(action).valid,
}


class TestFixtures():
    def test_every_fixture_has_a_known_kind(self):
        assert({kind for kind, _ in FIXTURES.values()} <= set(KINDS))
        assert({kind for kind, _ in FAMILIES.values()} <= set(KINDS))

    @pytest.mark.parametrize('name', sorted(FIXTURES))
    def test_every_fixture_is_valid(self, name):
        kind = fixture_kind(name)
        fixture = load_fixture(name, kind)

        if kind in VALIDATORS:
            assert(VALIDATORS[kind](fixture))

    @pytest.mark.parametrize('family', sorted(FAMILIES))
    def test_family_members_are_reproducible_and_valid(self, family):
        kind = FAMILIES[family][0]
        name = family_member(family, 3)

        first = FAMILIES[family][1](3)
        second = load_fixture(name, kind)

        if kind in VALIDATORS:
            assert(VALIDATORS[kind](second))
        if kind in ('action', 'fd-action'):
            assert(first.maps == second.maps if kind == 'action'
                   else first.block_maps == second.block_maps)

    def test_names_can_be_filtered_by_kind(self):
        names = fixture_names('semigroup')

        assert(names == ['I2', 'I3', 'sign-monoid', 'z2', 'z2-zero'])

    def test_unknown_fixtures_are_structural(self):
        with pytest.raises(StructuralError):
            load_fixture('I4')
        with pytest.raises(StructuralError):
            fixture_kind('random-space-action-x')
        with pytest.raises(StructuralError):
            family_member('random-walk', 1)

    def test_the_kind_is_checked(self):
        with pytest.raises(StructuralError, match='is a semigroup'):
            load_fixture('I3', 'action')


class TestManifest():
    def test_the_bundled_manifest_resolves(self):
        manifest = load_manifest()

        for suite in manifest['suites'].values():
            for name in expand_members(suite['members']):
                fixture_kind(name)

    def test_expected_values_name_members(self):
        manifest = load_manifest()

        for suite in manifest['suites'].values():
            names = set(expand_members(suite['members']))
            assert(set(suite.get('expected', {})) <= names)

    def test_suites_must_be_a_mapping(self, tmp_path):
        path = tmp_path / 'corpus.yml'
        create_file(path, 'suites: [a, b]\n')

        with pytest.raises(StructuralError):
            load_manifest(str(path))

    def test_an_empty_manifest(self, tmp_path):
        path = tmp_path / 'corpus.yml'
        create_file(path, '')

        assert(load_manifest(str(path)) == {})

    def test_expand_members_defaults(self):
        assert(expand_members([{'family': 'random-swap-action'}]) == ['random-swap-action-0'])
        assert(expand_members(None) == [])
