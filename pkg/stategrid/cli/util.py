"""Helpers shared by the stategrid commands."""
import sys
import logging
import click

from stategrid.errors import DocumentFormatError, VersionMismatchError
from stategrid.registry import DepthRegistry
from stategrid.vocabulary import Vocabulary

_logger = logging.getLogger(__name__)

DOMAIN_ERROR = 1
FORMAT_ERROR = 2


def exit_on_error(error, message):
    """Log a failed command and exit with the code for the kind of error.

    Usage errors and document errors exit with 2. Every other failure is a
    domain error and exits with 1.
    """
    if isinstance(error, click.UsageError):
        error.show()
        sys.exit(error.exit_code)
    _logger.exception('{}\n{}'.format(message, error))
    if isinstance(error, (DocumentFormatError, VersionMismatchError)):
        sys.exit(FORMAT_ERROR)
    sys.exit(DOMAIN_ERROR)


def split_list(text):
    """Get the items of a comma-separated option value."""
    if not text:
        return []
    return [item.strip() for item in text.split(',') if item.strip()]


def symbols_to_vocabulary(symbols, base=None):
    """Get a Vocabulary from NAME=KIND option values (eg. f=map:1)."""
    vocab = base if base is not None else Vocabulary()
    for symbol in symbols:
        name, sep, kind = symbol.partition('=')
        assert sep, 'Symbol "{}" must be written as NAME=KIND.'.format(symbol)
        vocab = vocab.declare(name, kind)
    return vocab


def depths_to_dict(depths):
    """Get a dictionary from NAME=DEPTH option values."""
    result = {}
    for depth in depths:
        name, sep, value = depth.partition('=')
        assert sep and value.isdigit(), \
            'Depth "{}" must be written as NAME=DEPTH.'.format(depth)
        result[name] = int(value)
    return result


def registry_from_file(file_path, base=None):
    """Read depth lines ("depth <name> <nat>") from a registry file.

    Blank lines and lines starting with # are skipped. Depths found in the file
    are added to those of the base registry.
    """
    data = base.to_dict() if base is not None else {}
    with open(file_path, 'r', encoding='utf-8') as f:
        for line_no, line in enumerate(f, 1):
            words = line.split()
            if not words or words[0].startswith('#'):
                continue
            if len(words) != 3 or words[0] != 'depth' or not words[2].isdigit():
                raise DocumentFormatError(line_no, 'expected "depth <name> <nat>"')
            data[words[1]] = int(words[2])
    return DepthRegistry.from_dict(data)


def exactly_one_option(options):
    """Raise a click.UsageError unless exactly one option has a value.

    Args:
        options: A list of (flag, value) tuples. Values of None are not given.
    """
    flags = [flag for flag, _ in options]
    given = [flag for flag, value in options if value is not None]
    if len(given) != 1:
        raise click.UsageError('Exactly one of {} or {} must be given. Got {}.'.format(
            ', '.join(flags[:-1]), flags[-1], ', '.join(given) or 'none'))
