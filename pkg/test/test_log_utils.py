import logging
import sys
from datetime import timedelta
from unittest.mock import patch

from log_utils import elapsed_string
from log_utils.get_logger import (
    JobFormatter, LogFilter, get_logger, init_logging,
    set_log_attrs, DEFAULT_LOG_LEVEL)


class TestLogFilter():
    def test_it_keeps_short_messages(self):
        msg = 'dim 3, blocks [1, 1, 1]'

        filter = LogFilter()
        record = logging.makeLogRecord({'msg': msg})
        result = filter.filter(record)

        assert(result is True)
        assert(record.getMessage() == msg)

    def test_it_truncates_long_messages(self):
        msg = 'x' * 30

        filter = LogFilter(max_length=10)
        record = logging.makeLogRecord({'msg': msg})
        result = filter.filter(record)

        assert(result is True)
        assert(record.getMessage() == 'x' * 10 + LogFilter.TRUNCATED)

    def test_it_does_not_log_empty_messages(self):
        msg = ''

        filter = LogFilter()
        record = logging.makeLogRecord({'msg': msg})
        result = filter.filter(record)

        assert(result is False)


class TestJobFormatter():
    @patch('logging.Formatter.format')
    def test_it_populates_empty_strings_if_key_is_missing(self, mock_format):
        keys = ['seed']

        formatter = JobFormatter(keys)
        record = logging.makeLogRecord({})

        formatter.format(record)

        assert(record.seed == '')
        mock_format.assert_called_once_with(record)

    @patch('logging.Formatter.format')
    def test_it_ignores_key_if_present(self, mock_format):
        keys = ['seed']

        formatter = JobFormatter(keys)
        record = logging.makeLogRecord({'seed': 7})

        formatter.format(record)

        assert(record.seed == 7)
        mock_format.assert_called_once_with(record)


class TestGetLogger():
    def test_it_returns_a_logger_with_an_adapter_with_extras(self):
        name = 'germ-groupoid'
        attrs = {'command': 'hausdorff'}
        set_log_attrs(attrs)

        adapter = get_logger(name)

        assert(type(adapter) == logging.LoggerAdapter)
        assert(adapter.logger.name == name)
        assert(adapter.extra == attrs)


@patch('logging.basicConfig')
class TestInitLogging():
    def test_it_adds_a_single_stderr_handler(self, mock_basic_config):
        init_logging({'command': 'spectrum', 'seed': 1})

        _, kwargs = mock_basic_config.call_args

        assert(kwargs['level'] == DEFAULT_LOG_LEVEL)
        assert(len(kwargs['handlers']) == 1)
        handler = kwargs['handlers'][0]
        assert(type(handler) == logging.StreamHandler)
        assert(handler.stream is sys.stderr)

    def test_it_formats_the_job_attributes(self, mock_basic_config):
        init_logging({'command': 'spectrum'}, logging.DEBUG, max_length=50)

        _, kwargs = mock_basic_config.call_args
        handler = kwargs['handlers'][0]

        assert(kwargs['level'] == logging.DEBUG)
        assert('@command: {command}' in handler.formatter._fmt)
        assert(handler.filters[0].max_length == 50)


class TestElapsedString():
    def test_it_rounds_to_whole_minutes_and_seconds(self):
        assert(elapsed_string(timedelta(seconds=61.7)) == '1m 1s')

    def test_it_shows_milliseconds_below_a_second(self):
        assert(elapsed_string(timedelta(0)) == '0ms')
