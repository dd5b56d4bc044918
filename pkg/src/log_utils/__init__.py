'''Logging stuff'''

from .get_logger import get_logger, init_logging
from .elapsed import elapsed_string

__all__ = [
    'elapsed_string', 'get_logger', 'init_logging']
