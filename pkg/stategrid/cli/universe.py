"""stategrid commands to build, inspect and evaluate universes."""
import sys
import logging
import click

from ladybug.commandutil import process_content_to_output

from stategrid.grid import Coordinate, StateCell, GroundSet, MappingDecl, \
    PredicateState, TruthResult
from stategrid.interuniversal import codomain_check
from stategrid.parser import parse
from stategrid.placement import report
from stategrid.reader import load_universe, value_from_text
from stategrid.registry import DepthRegistry
from stategrid.truth import TriValue, TRUE, UNDEFINABLE
from stategrid.universe import new_universe, add_cell, observe, evaluate_at
from stategrid.writer import universe_to_document
from stategrid.cli.util import exit_on_error, exactly_one_option, \
    symbols_to_vocabulary, depths_to_dict, DOMAIN_ERROR

_logger = logging.getLogger(__name__)

_universe_argument = click.argument('universe-file', type=click.Path(
    exists=True, file_okay=True, dir_okay=False, resolve_path=True))


def _output_option(what):
    return click.option(
        '--output-file', '-o', help='Optional file to output {}. By default it '
        'will be printed to stdout.'.format(what),
        type=click.File('w'), default='-', show_default=True)


@click.command('new')
@click.argument('identifier', type=str)
@click.option('--symbol', '-s', help='A symbol to declare as NAME=KIND where KIND '
              'is set, family, pred or map:ARITY. This option can be repeated.',
              multiple=True)
@click.option('--depth', '-d', help='The state depth of a name as NAME=DEPTH. This '
              'option can be repeated.', multiple=True)
@_output_option('the universe document')
def new_cli(identifier, symbol, depth, output_file):
    """Create an empty universe.

    \b
    Args:
        identifier: Text for the id of the universe.
    """
    try:
        create_universe(identifier, symbol, depth, output_file)
    except Exception as e:
        exit_on_error(e, 'Universe creation failed.')
    else:
        sys.exit(0)


def create_universe(identifier, symbol=(), depth=(), output_file=None):
    """Create an empty universe and get its document.

    Args:
        identifier: Text for the id of the universe.
        symbol: A list of NAME=KIND texts for the vocabulary.
        depth: A list of NAME=DEPTH texts for the depth registry.
        output_file: Optional file to output the document. If None, the
            document will be returned from this function.
    """
    vocab = symbols_to_vocabulary(symbol)
    registry = DepthRegistry.from_dict(depths_to_dict(depth))
    u = new_universe(identifier, vocab, registry)
    return process_content_to_output(universe_to_document(u), output_file)


@click.command('add-cell')
@_universe_argument
@click.argument('cell-id', type=str)
@click.argument('coordinate', type=str)
@click.option('--label', '-l', help='Label of the cell.', type=str, default='',
              show_default=True)
@click.option('--expr', '-e', help='Predicate text of a predicate cell.',
              type=str, default=None)
@click.option('--ground', '-g', help='Name of the set of a ground cell.',
              type=str, default=None)
@click.option('--mapping', '-m', help='Name of the mapping of a mapping cell.',
              type=str, default=None)
@click.option('--arity', '-a', help='Arity of the mapping of a mapping cell.',
              type=click.IntRange(min=1), default=1, show_default=True)
@click.option('--domain', help='Name of the domain of a mapping cell.',
              type=str, default=None)
@click.option('--truth', help='Truth value of a truth cell.',
              type=click.Choice(['true', 'false', 'undef']), default=None)
@click.option('--tag', help='A tag of the cell (eg. existence, structure). This '
              'option can be repeated.', multiple=True)
@click.option('--undefinable/--definable', help='Flag to note whether the '
              'cell is marked as undefinable.', default=False, show_default=True)
@_output_option('the universe document')
def add_cell_cli(universe_file, cell_id, coordinate, label, expr, ground, mapping,
                 arity, domain, truth, tag, undefinable, output_file):
    """Add a cell to a universe.

    Exactly one of --expr, --ground, --mapping or --truth sets the content.

    \b
    Args:
        universe_file: Path to a universe document.
        cell_id: Text for the id of the new cell.
        coordinate: Coordinate of the cell as (depth,hierarchy,time).
    """
    try:
        add_universe_cell(universe_file, cell_id, coordinate, label, expr, ground,
                          mapping, arity, domain, truth, tag, undefinable,
                          output_file)
    except Exception as e:
        exit_on_error(e, 'Adding the cell failed.')
    else:
        sys.exit(0)


def add_universe_cell(universe_file, cell_id, coordinate, label='', expr=None,
                      ground=None, mapping=None, arity=1, domain=None, truth=None,
                      tag=(), undefinable=False, output_file=None):
    """Add a cell to a universe and get the new universe document.

    Args:
        universe_file: Path to a universe document.
        cell_id: Text for the id of the new cell.
        coordinate: Text of the coordinate as (depth,hierarchy,time).
        label: Text for the label of the cell.
        expr: Predicate text of a predicate cell.
        ground: Name of the set of a ground cell.
        mapping: Name of the mapping of a mapping cell.
        arity: Arity of the mapping of a mapping cell.
        domain: Name of the domain of a mapping cell.
        truth: Text for the truth value of a truth cell.
        tag: A list of tags for the cell.
        undefinable: Boolean for whether the cell is marked undefinable.
        output_file: Optional file to output the document. If None, the
            document will be returned from this function.
    """
    exactly_one_option([('--expr', expr), ('--ground', ground), ('--mapping', mapping),
                        ('--truth', truth)])
    u = load_universe(universe_file)
    if expr is not None:
        content = PredicateState(parse(expr, u.vocab))
    elif ground is not None:
        content = GroundSet(ground)
    elif mapping is not None:
        content = MappingDecl(mapping, arity, domain)
    else:
        content = TruthResult(TriValue.from_text(truth))
    cell = StateCell(cell_id, Coordinate.from_text(coordinate), label, content,
                     UNDEFINABLE if undefinable else TRUE, tag)
    u = add_cell(u, cell)
    return process_content_to_output(universe_to_document(u), output_file)


@click.command('observe')
@_universe_argument
@click.argument('name', type=str)
@click.argument('value', type=str)
@_output_option('the universe document')
def observe_cli(universe_file, name, value, output_file):
    """Record the value of a name at the latest time of a universe.

    \b
    Args:
        universe_file: Path to a universe document.
        name: A name of the vocabulary of the universe.
        value: The observed set written as in documents (eg. {a,b} or
            {(0,0),(1,1)}).
    """
    try:
        observe_value(universe_file, name, value, output_file)
    except Exception as e:
        exit_on_error(e, 'Observation failed.')
    else:
        sys.exit(0)


def observe_value(universe_file, name, value, output_file=None):
    """Record the value of a name and get the new universe document."""
    u = observe(load_universe(universe_file), name, value_from_text(value))
    return process_content_to_output(universe_to_document(u), output_file)


@click.command('eval')
@_universe_argument
@click.argument('expression', type=str)
@click.option('--time', '-t', help='Time of the view to evaluate in. By default, '
              'the latest time of the universe.', type=click.IntRange(min=0),
              default=None)
@click.option('--index', '-i', help='Value of the index i. By default, the time.',
              type=click.IntRange(min=0), default=None)
@_output_option('the truth value')
def eval_cli(universe_file, expression, time, index, output_file):
    """Evaluate predicate text in a universe.

    Prints true, false or undef.

    \b
    Args:
        universe_file: Path to a universe document.
        expression: Predicate text over the vocabulary of the universe.
    """
    try:
        evaluate_expression(universe_file, expression, time, index, output_file)
    except Exception as e:
        exit_on_error(e, 'Evaluation failed.')
    else:
        sys.exit(0)


def evaluate_expression(universe_file, expression, time=None, index=None,
                        output_file=None):
    """Evaluate predicate text in a universe and get the truth value text."""
    u = load_universe(universe_file)
    time = u.t_max if time is None else time
    value = evaluate_at(u, parse(expression, u.vocab), time, index)
    return process_content_to_output('{}\n'.format(value), output_file)


@click.command('report')
@_universe_argument
@_output_option('the grid table')
def report_cli(universe_file, output_file):
    """Print the table of the cells of a universe by coordinate.

    \b
    Args:
        universe_file: Path to a universe document.
    """
    try:
        report_universe(universe_file, output_file)
    except Exception as e:
        exit_on_error(e, 'Report failed.')
    else:
        sys.exit(0)


def report_universe(universe_file, output_file=None):
    """Get the table of the grid of a universe."""
    u = load_universe(universe_file)
    return process_content_to_output(report(u.grid), output_file)


@click.command('check-codomain')
@_universe_argument
@_output_option('the report')
def check_codomain_cli(universe_file, output_file):
    """Check that every predicate cell can be settled at the latest time.

    Prints verifiable, or each offending cell with its missing names, and
    exits with 1 when the universe is not verifiable.

    \b
    Args:
        universe_file: Path to a universe document.
    """
    try:
        verifiable = check_universe_codomain(universe_file, output_file)
    except Exception as e:
        exit_on_error(e, 'Codomain check failed.')
    else:
        sys.exit(0 if verifiable else DOMAIN_ERROR)


def check_universe_codomain(universe_file, output_file=None):
    """Write the codomain report of a universe.

    Returns:
        A boolean for whether the universe is verifiable.
    """
    result = codomain_check(load_universe(universe_file))
    if result.verifiable:
        text = 'verifiable\n'
    else:
        text = ''.join('{}\t{}\n'.format(cell_id, ','.join(sorted(names)))
                       for cell_id, names in result.offending)
    process_content_to_output(text, output_file)
    return result.verifiable
