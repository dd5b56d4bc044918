'''
Job logging on stderr.

Each line carries the job attributes (command, seed) set by
`init_logging`, so runs of a corpus can be told apart in CI output.
Modules log through `get_logger(name)`; stdout carries the JSON report
only.
'''

import sys
import logging

DEFAULT_LOG_LEVEL = logging.INFO

DEFAULT_MAX_LENGTH = 2000

LOG_ATTRS = {}


class LogFilter(logging.Filter):
    '''
    Truncates messages longer than `max_length` (matrix dumps) and
    prevents empty messages from being logged at all.
    '''
    TRUNCATED = ' [truncated]'

    def __init__(self, max_length=DEFAULT_MAX_LENGTH):
        self.max_length = max_length
        logging.Filter.__init__(self)

    def filter(self, record):
        msg = str(record.msg)
        if len(msg) > self.max_length:
            record.msg = msg[:self.max_length] + self.TRUNCATED
            record.args = None

        return len(msg) > 0


class JobFormatter(logging.Formatter):
    '''
    Writes the job attributes in front of every message. Records from
    loggers that bypass the adapter (numpy, scipy warnings) get blanks.
    '''
    def __init__(self, keys, *args, **kwargs):
        self.keys = list(keys)
        logging.Formatter.__init__(self, *args, **kwargs)

    def format(self, record):
        for key in self.keys:
            record.__dict__.setdefault(key, '')

        return super().format(record)


def get_logger(name):
    '''
    An adapter over the `name` logger that stamps each record with the
    current job attributes.
    '''
    return logging.LoggerAdapter(logging.getLogger(name), LOG_ATTRS)


def set_log_attrs(attrs):
    '''Job attributes for adapters created from now on'''
    global LOG_ATTRS
    LOG_ATTRS = dict(attrs)


def init_logging(attrs, log_level=DEFAULT_LOG_LEVEL, max_length=DEFAULT_MAX_LENGTH):
    set_log_attrs(attrs)

    date_fmt = '%Y-%m-%d %H:%M:%S'
    style_fmt = '{'
    job_fmt = ''.join(f'@{key}: {{{key}}} ' for key in attrs)
    line_fmt = '{asctime} {levelname} [{name}] ' + job_fmt + '@message: {message}'

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(JobFormatter(attrs.keys(), line_fmt, date_fmt, style_fmt))
    handler.setLevel(log_level)
    handler.addFilter(LogFilter(max_length))

    logging.basicConfig(level=log_level, handlers=[handler], force=True)
