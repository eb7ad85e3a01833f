# Native libraries
import logging
import re
import sys
# Third party libraries
import colorlog
# Project libraries
import brieskorn.config as config


class StderrHandler(colorlog.StreamHandler):
    """
    Stream handler that writes to whatever ``sys.stderr`` is when a record is emitted,
    so records follow ``contextlib.redirect_stderr``
    """

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def setup_logger(name, debug_level):
    """
    Creates and configures a logger instance with color formatting.

    :param name: Logger identifier prefix for the formatter
    :type name: str
    :param debug_level: Logging verbosity level
    :type debug_level: int
    :return: Configured logger instance for the calling module
    :rtype: logger
    """
    # Initialize or retrieve logger by name
    new_logger = logging.getLogger(name)
    # Configure colored console output handler
    handler = StderrHandler()
    handler.setFormatter(colorlog.ColoredFormatter(
        '%(asctime)s %(log_color)s - %(levelname)s | :%(name)s:%(message)s', datefmt='%m/%d %H:%M:%S',
        log_colors={
            'DEBUG': 'cyan',
            'INFO': 'blue',
            'WARNING': 'yellow',
            'ERROR': 'red',
            'CRITICAL': 'black,bg_red',
        },
    ))

    # Attach formatters only to newly created loggers
    if not new_logger.handlers:
        new_logger.addHandler(handler)
    new_logger.setLevel(debug_level)
    return new_logger


def set_debug_level(debug_level):
    """
    Applies a new verbosity level to every project logger created so far.
    Loggers are created at import time, so a level chosen on the command line has to be pushed to them.

    :param debug_level: Logging verbosity level
    :type debug_level: int
    """
    config.DEBUG_LEVEL = debug_level
    for name, existing in logging.Logger.manager.loggerDict.items():
        if name.startswith('brieskorn') and isinstance(existing, logging.Logger):
            existing.setLevel(debug_level)


# Module-level logger instance
logger = setup_logger(__name__, config.DEBUG_LEVEL)


def setting(value, name):
    """
    Resolves an optional keyword argument against the configuration module.
    Library functions default their tuning parameters to ``None`` so that flags parsed after import still apply:

        .. code-block:: python

            budget = setting(budget, 'SEARCH_BUDGET')

    :param value: Explicit value supplied by the caller, or None
    :param name: Attribute name in :mod:`brieskorn.config`
    :type name: str
    :return: The explicit value when given, the configured value otherwise
    """
    if value is not None:
        return value
    return getattr(config, name)


def camel_to_snake(name):
    """
    Converts CamelCase class name to snake_case module name.

    Example: TestLattice -> test_lattice

    :param name: CamelCase string
    :return: snake_case string
    """
    s1 = re.sub('(.)([A-Z][a-z]+)', r'\1_\2', name)
    return re.sub('([a-z0-9])([A-Z])', r'\1_\2', s1).lower()


def ascii_label(multiplicities):
    """
    Renders a Brieskorn sphere label without non-ASCII characters, for CSV cells and log lines

    :param multiplicities: Multiplicities of the sphere
    :type multiplicities: Sequence[int]
    :return: Label such as ``Sigma(2,3,5)``
    :rtype: str
    """
    return 'Sigma({})'.format(','.join(str(value) for value in multiplicities))
