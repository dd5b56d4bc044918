import pytest

import job_config
from common import EXACT_TOL, SPECTRAL_TOL
from exceptions import StructuralError
from job_config import DEFAULTS, JobConfig

from ..support import create_json_file


class TestJobConfig():
    def test_it_falls_back_to_the_defaults(self, monkeypatch):
        monkeypatch.delenv('VERIFY_TOL', raising=False)
        config = JobConfig({}, DEFAULTS)

        assert(config.tol == EXACT_TOL)
        assert(config.spectral_tol == SPECTRAL_TOL)
        assert(config.order == 'index')
        assert(config.seed is None)

    def test_flags_win_over_options_and_environment(self, monkeypatch):
        monkeypatch.setenv('VERIFY_CAP', '50')
        config = JobConfig({'cap': 20}, DEFAULTS, {'cap': 10})

        assert(config.cap == 10)

    def test_options_win_over_environment(self, monkeypatch):
        monkeypatch.setenv('VERIFY_CAP', '50')
        config = JobConfig({'cap': 20}, DEFAULTS)

        assert(config.cap == 20)

    def test_environment_values_are_cast(self, monkeypatch):
        monkeypatch.setenv('VERIFY_TOL', '1e-6')
        monkeypatch.setenv('VERIFY_CAP', '50')
        config = JobConfig({}, DEFAULTS)

        assert(config.tol == 1e-6)
        assert(config.cap == 50)

    def test_a_value_that_does_not_cast_is_structural(self):
        config = JobConfig({'cap': 'many'}, DEFAULTS)

        with pytest.raises(StructuralError):
            config.cap

    @pytest.mark.parametrize('options', [
        {'tol': -1.0},
        {'spectral_tol': -1e-9},
        {'cap': 0},
        {'timeout': 0},
        {'order': 'random'},
    ])
    def test_validate_rejects_unusable_options(self, options):
        with pytest.raises(StructuralError):
            JobConfig(options, DEFAULTS).validate()

    def test_validate_returns_the_config(self):
        config = JobConfig({'order': 'lex'}, DEFAULTS)

        assert(config.validate() is config)

    def test_require_seed(self):
        assert(JobConfig({}, DEFAULTS, {'seed': 4}).require_seed('induce') == 4)

        with pytest.raises(StructuralError, match='induce'):
            JobConfig({}, DEFAULTS).require_seed('induce')

    def test_seed_or_prefers_an_explicit_seed(self):
        assert(JobConfig({'seed': 5}, DEFAULTS).seed_or(0) == 5)
        assert(JobConfig({}, DEFAULTS).seed_or(0) == 0)

    def test_to_dict_lists_every_option(self):
        result = JobConfig({'seed': 3}, DEFAULTS).to_dict()

        assert(result['seed'] == 3)
        assert(set(result) == {'tol', 'spectral_tol', 'cap', 'timeout', 'seed', 'order', 'out'})


class TestFromObject():
    def test_it_reads_the_options_object(self):
        config = job_config.from_object({'fixture': 'I3', 'options': {'order': 'lex'}})

        assert(config.order == 'lex')

    def test_it_accepts_documents_without_options(self):
        config = job_config.from_object({'fixture': 'I3'})

        assert(config.order == 'index')

    def test_options_must_be_an_object(self):
        with pytest.raises(StructuralError):
            job_config.from_object({'options': [1, 2]})


def test_from_json_file(tmp_path):
    path = tmp_path / 'input.json'
    create_json_file(path, {'options': {'seed': 11}})

    config = job_config.from_json_file(str(path))

    assert(config.seed == 11)
