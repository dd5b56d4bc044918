'''Run one verification job'''

import math
from datetime import datetime

from stopit import TimeoutException, SignalTimeout as Timeout

from commands import COMMANDS
from exceptions import (
    AssertionFailure, ConditioningError, ResourceError, StructuralError
)
from log_utils import elapsed_string, get_logger
from report import jsonable

# most specific classes first: InternalError is an AssertionFailure and
# PreconditionError a StructuralError
EXIT_CODES = (
    (AssertionFailure, 1),
    (StructuralError, 2),
    (ResourceError, 2),
    (ConditioningError, 2),
)

EXIT_OK = 0
EXIT_TIMEOUT = 2


def error_report(err, **extra):
    '''
    >>> error_report(StructuralError('missing key: mul'))
    {'error': 'missing key: mul', 'kind': 'StructuralError', 'witness': None}
    '''
    report = {
        'error': str(err),
        'kind': type(err).__name__,
        'witness': jsonable(getattr(err, 'witness', None)),
    }
    report.update(extra)
    return report


def exit_code(err):
    return next((code for cls, code in EXIT_CODES if isinstance(err, cls)), None)


def run(command, document, config):
    '''
    Run `command` on the input `document` and return (exit status, report).

    Options are validated before dispatch and the job runs inside the time
    budget `config.timeout`. Errors of the known kinds become a report with
    their exit status; anything else propagates.
    '''
    logger = get_logger('verify')

    # keep track of total time
    start_time = datetime.now()

    if command not in COMMANDS:
        return 2, error_report(StructuralError(f'unknown command: {command}'))

    try:
        if not isinstance(document, dict):
            raise StructuralError('the input document must be a JSON object')
        config.validate()
        # throw a timeout exception after config.timeout seconds, rounded up
        # to the whole seconds of SIGALRM
        with Timeout(max(1, math.ceil(config.timeout)), swallow_exc=False):
            report = COMMANDS[command](document, config)
        status, report = EXIT_OK, jsonable(report)

    except TimeoutException:
        logger.warning(f'{command} has timed out after {config.timeout}s')
        status = EXIT_TIMEOUT
        report = error_report(ResourceError(f'timed out after {config.timeout}s'))

    except (AssertionFailure, StructuralError, ResourceError, ConditioningError) as err:
        status = exit_code(err)
        logger.error(f'{type(err).__name__}: {err}')
        report = error_report(err)

    logger.info(f'Total time: {elapsed_string(datetime.now() - start_time)}')
    return status, report
