import json
import logging
from unittest.mock import patch

import pytest

from main import main, parse_args

from .support import create_json_file


def read_report(capsys):
    return json.loads(capsys.readouterr().out)


@patch('main.init_logging')
class TestMain():
    def test_a_fixture(self, mock_init_logging, capsys):
        status = main(['validate-isg', '--fixture', 'sign-monoid'])

        assert(status == 0)
        assert(read_report(capsys)['size'] == 3)

        mock_init_logging.assert_called_once_with(
            {'command': 'validate-isg', 'seed': None}, logging.INFO)

    def test_inline_params(self, mock_init_logging, capsys):
        params = json.dumps({'mul': [[1, 0], [0, 0]], 'inv': [0, 1]})

        status = main(['validate-isg', '-p', params])

        assert(status == 0)
        assert(read_report(capsys)['valid'] is False)

    def test_a_json_file(self, mock_init_logging, capsys, tmp_path):
        path = tmp_path / 'input.json'
        create_json_file(path, {'fixture': 'sign-discrete'})

        status = main(['hausdorff', '-f', str(path)])

        assert(status == 0)
        assert(read_report(capsys)['groupoid_hausdorff'])

    def test_malformed_json_reports_its_position(self, mock_init_logging, capsys):
        status = main(['validate-isg', '-p', '{"mul": '])

        report = read_report(capsys)

        assert(status == 2)
        assert(report['kind'] == 'StructuralError')
        assert(report['error'].startswith('malformed JSON'))
        assert(report['line'] == 1)
        assert(report['column'] == 9)

    def test_options_must_be_an_object(self, mock_init_logging, capsys):
        status = main(['spectrum', '-p', '{"fixture": "I2", "options": 3}'])

        assert(status == 2)
        assert(read_report(capsys)['kind'] == 'StructuralError')

    def test_the_seed_flag(self, mock_init_logging, capsys):
        status = main(['verify-01m1', '--fixture', 'sign-trivial', '--seed', '1'])

        assert(status == 0)
        assert(read_report(capsys)['dim_crossed'] == 3)

    def test_verify_iterated_without_a_seed(self, mock_init_logging, capsys):
        status = main(['verify-iterated', '--fixture', 'sign-discrete'])

        report = read_report(capsys)

        assert(status == 0)
        assert(report['iso'] is True)
        assert(report['dim'] == 3)

    def test_a_missing_seed(self, mock_init_logging, capsys):
        status = main(['induce', '--fixture', 'fd-sign-discrete'])

        assert(status == 2)

    def test_the_report_is_also_written_to_out(self, mock_init_logging, capsys, tmp_path):
        path = tmp_path / 'report.json'

        status = main(['units-closed', '--fixture', 'sign-sierpinski', '--out', str(path)])

        assert(status == 0)
        assert(json.loads(path.read_text()) == read_report(capsys))

    def test_out_can_come_from_the_options(self, mock_init_logging, capsys, tmp_path):
        path = tmp_path / 'report.json'
        params = json.dumps({'fixture': 'I2', 'options': {'out': str(path)}})

        main(['spectrum', '-p', params])

        assert(json.loads(path.read_text())['characters'] == read_report(capsys)['characters'])


class TestParseArgs():
    def test_flags(self):
        args = parse_args(['spectrum', '--fixture', 'I2', '--tol', '1e-9', '--order', 'lex'])

        assert(args.fixture == 'I2')
        assert(args.tol == 1e-9)
        assert(args.order == 'lex')
        assert(args.log_level == 'INFO')

    def test_unknown_commands_are_rejected(self):
        with pytest.raises(SystemExit):
            parse_args(['prove-everything'])

    def test_inputs_are_exclusive(self):
        with pytest.raises(SystemExit):
            parse_args(['spectrum', '--fixture', 'I2', '-p', '{}'])
