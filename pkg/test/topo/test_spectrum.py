import pytest

from exceptions import InternalError
from isg import cyclic_group, sign_monoid, symmetric_inverse_monoid
from topo import (
    basis_law, ideal_open_bijection_check, semilattice_spectrum,
    tight_characters, ultracharacters
)
from topo import spectrum as spectrum_module


@pytest.fixture
def i2_spectrum():
    return semilattice_spectrum(symmetric_inverse_monoid(2))


class TestSemilatticeSpectrum():
    def test_characters_are_indexed_by_nonzero_idempotents(self, i2_spectrum):
        assert(i2_spectrum.space.labels == ('phi[{1:1}]', 'phi[{2:2}]', 'phi[{1:1,2:2}]'))

    def test_the_unit_character_sees_every_other_point(self, i2_spectrum):
        X = i2_spectrum.space

        assert([sorted(n) for n in X.neighbourhoods] == [[0], [1], [0, 1, 2]])
        assert(not X.is_hausdorff())

    def test_character_values(self, i2_spectrum):
        S = i2_spectrum.semigroup

        assert(i2_spectrum.value(0, S.unit) == 1)
        assert(i2_spectrum.value(0, S.zero) == 0)
        assert(i2_spectrum.value(2, S.labels.index('{1:1}')) == 0)
        assert(i2_spectrum.filter(2) == frozenset([S.unit]))

    def test_the_patch_topology_is_discrete(self):
        spectrum = semilattice_spectrum(symmetric_inverse_monoid(2), patch=True)

        assert(spectrum.space.is_discrete())
        assert(basis_law(spectrum).holds)

    def test_the_sign_monoid_has_one_character(self):
        spectrum = semilattice_spectrum(sign_monoid())

        assert(spectrum.characters == (sign_monoid().unit,))
        assert(spectrum.space.is_hausdorff())

    def test_a_non_multiplicative_character_is_internal(self, monkeypatch):
        monkeypatch.setattr(spectrum_module.SemilatticeSpectrum, 'value',
                            lambda self, character, e: 1)

        with pytest.raises(InternalError):
            semilattice_spectrum(sign_monoid())


class TestBasis():
    def test_basis_sets(self, i2_spectrum):
        S = i2_spectrum.semigroup

        assert(i2_spectrum.basis(S.zero) == frozenset())
        assert(i2_spectrum.basis(S.labels.index('{2:2}')) == frozenset([1]))
        assert(i2_spectrum.basis(S.unit) == frozenset([0, 1, 2]))

    def test_the_basis_law_holds(self, i2_spectrum):
        assert(basis_law(i2_spectrum).holds)


class TestIdealOpenBijection():
    @pytest.mark.parametrize('S', [sign_monoid(), cyclic_group(3), symmetric_inverse_monoid(2)])
    def test_it_holds_for_spectra(self, S):
        verdict = ideal_open_bijection_check(semilattice_spectrum(S))

        assert(verdict.holds)
        assert(verdict.details['opens'] == verdict.details['ideals'])

    def test_i2_has_five_opens(self, i2_spectrum):
        verdict = ideal_open_bijection_check(i2_spectrum)

        assert(verdict.details == {'opens': 5, 'ideals': 5})

    def test_it_fails_for_the_patch_topology(self):
        spectrum = semilattice_spectrum(symmetric_inverse_monoid(2), patch=True)

        verdict = ideal_open_bijection_check(spectrum)

        assert(not verdict.holds)
        assert(verdict.witness == {'rule': 'injective', 'opens': [[], [2]]})


class TestUltracharacters():
    def test_i2(self, i2_spectrum):
        ultra, closure = ultracharacters(i2_spectrum)

        assert(ultra == frozenset([0, 1]))
        assert(closure == frozenset([0, 1, 2]))

    def test_tight_characters_are_the_ultracharacters(self, i2_spectrum):
        assert(tight_characters(i2_spectrum) == frozenset([0, 1]))

    def test_tight_characters_of_i3(self):
        spectrum = semilattice_spectrum(symmetric_inverse_monoid(3))

        tight = tight_characters(spectrum)

        assert(len(tight) == 3)
        assert(all(len(spectrum.space.neighbourhoods[i]) == 1 for i in tight))
