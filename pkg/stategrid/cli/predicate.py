"""stategrid commands for predicate text and its placement on the grid."""
import sys
import logging
import click

from ladybug.commandutil import process_content_to_output

from stategrid.expression import to_text
from stategrid.parser import parse
from stategrid.placement import MODES, place, placement_to_grid, report
from stategrid.reader import load_universe
from stategrid.registry import DepthRegistry
from stategrid.cli.util import exit_on_error, symbols_to_vocabulary, \
    registry_from_file

_logger = logging.getLogger(__name__)

_universe_option = click.option(
    '--universe', '-u', help='Optional universe document whose vocabulary and '
    'depth registry are used.', default=None,
    type=click.Path(exists=True, file_okay=True, dir_okay=False, resolve_path=True))
_symbol_option = click.option(
    '--symbol', '-s', help='A symbol to declare as NAME=KIND where KIND is set, '
    'family, pred or map:ARITY. This option can be repeated.', multiple=True)


def _vocabulary(universe_file, symbols):
    base = load_universe(universe_file) if universe_file else None
    vocab = symbols_to_vocabulary(symbols, base.vocab if base else None)
    return base, vocab


@click.command('parse')
@click.argument('expression', type=str)
@_universe_option
@_symbol_option
@click.option(
    '--output-file', '-o', help='Optional file to output the canonical text of '
    'the expression. By default it will be printed to stdout.',
    type=click.File('w'), default='-', show_default=True)
def parse_cli(expression, universe, symbol, output_file):
    """Parse predicate text and print its canonical form.

    Names are checked against the vocabulary when a universe or symbols are
    given. Otherwise any name is accepted.

    \b
    Args:
        expression: Predicate text (eg. "card(I@(i+1)) > card(I@i)").
    """
    try:
        parse_expression(expression, universe, symbol, output_file)
    except Exception as e:
        exit_on_error(e, 'Parsing failed.')
    else:
        sys.exit(0)


def parse_expression(expression, universe=None, symbol=(), output_file=None):
    """Parse predicate text and get its canonical form.

    Args:
        expression: Predicate text.
        universe: Optional path to a universe document providing the vocabulary.
        symbol: A list of NAME=KIND texts declaring more symbols.
        output_file: Optional file to output the canonical text. If None,
            the text will be returned from this function.
    """
    base, vocab = _vocabulary(universe, symbol)
    strict = base is not None or len(symbol) > 0
    e = parse(expression, vocab if strict else None, strict=strict)
    return process_content_to_output(to_text(e) + '\n', output_file)


@click.command('place')
@click.argument('expression', type=str)
@click.option('--mode', '-m', help='Composition mode of the placement.',
              type=click.Choice(MODES), default=None)
@click.option(
    '--registry', '-r', help='Optional file of "depth <name> <nat>" lines giving '
    'the state depths of the names in the expression.', default=None,
    type=click.Path(exists=True, file_okay=True, dir_okay=False, resolve_path=True))
@click.option('--time', '-t', help='Time coordinate of the placement.',
              type=click.IntRange(min=0), default=0, show_default=True)
@click.option('--time-axis/--time-mapping', help='Flag to note whether '
              'time-indexed references are placed along the time axis instead of '
              'through the index mapping.', default=False, show_default=True)
@_universe_option
@_symbol_option
@click.option(
    '--output-file', '-o', help='Optional file to output the placement table. By '
    'default it will be printed to stdout.',
    type=click.File('w'), default='-', show_default=True)
def place_cli(expression, mode, registry, time, time_axis, universe, symbol,
              output_file):
    """Place every component of an expression on the grid and print the table.

    \b
    Args:
        expression: Predicate text.
    """
    try:
        place_expression(expression, mode, registry, time, time_axis, universe,
                         symbol, output_file)
    except Exception as e:
        exit_on_error(e, 'Placement failed.')
    else:
        sys.exit(0)


def place_expression(expression, mode=None, registry=None, time=0, time_axis=False,
                     universe=None, symbol=(), output_file=None):
    """Place an expression on the grid and get the table of its coordinates.

    Args:
        expression: Predicate text.
        mode: Text for the composition mode (transparent or elevating). If
            None, the default of the stategrid config is used.
        registry: Optional path to a file of depth lines.
        time: Time coordinate of the placement.
        time_axis: Boolean for placing time-indexed references on the time axis.
        universe: Optional path to a universe document providing the
            vocabulary and the depth registry.
        symbol: A list of NAME=KIND texts declaring more symbols.
        output_file: Optional file to output the table. If None, the table will
            be returned from this function.
    """
    base, vocab = _vocabulary(universe, symbol)
    depths = base.registry if base is not None else DepthRegistry()
    if registry is not None:
        depths = registry_from_file(registry, depths)
    e = parse(expression, vocab)
    placement = place(e, depths, mode, time, vocab, time_axis)
    _logger.debug('Placed %d components.', len(placement))
    return process_content_to_output(report(placement_to_grid(placement)), output_file)
