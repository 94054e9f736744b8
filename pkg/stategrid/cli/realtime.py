"""stategrid commands for real-time progression and predictions."""
import sys
import logging
import click

from ladybug.commandutil import process_content_to_output

from stategrid.reader import load_universe
from stategrid.realtime import advance_time, record_prediction, verify_predictions
from stategrid.truth import TriValue
from stategrid.writer import universe_to_document
from stategrid.cli.util import exit_on_error, split_list

_logger = logging.getLogger(__name__)

_universe_argument = click.argument('universe-file', type=click.Path(
    exists=True, file_okay=True, dir_okay=False, resolve_path=True))
_output_option = click.option(
    '--output-file', '-o', help='Optional file to output the universe document. '
    'By default it will be printed to stdout.',
    type=click.File('w'), default='-', show_default=True)


@click.command('tick')
@_universe_argument
@click.option('--mask', '-m', help='Comma-separated names and cell ids that stay '
              'observable at the new time. By default nothing does.', type=str,
              default='')
@_output_option
def tick_cli(universe_file, mask, output_file):
    """Advance a universe to its next time index.

    \b
    Args:
        universe_file: Path to a universe document.
    """
    try:
        tick_universe(universe_file, mask, output_file)
    except Exception as e:
        exit_on_error(e, 'Tick failed.')
    else:
        sys.exit(0)


def tick_universe(universe_file, mask='', output_file=None):
    """Advance a universe by one time index and get the new document.

    Args:
        universe_file: Path to a universe document.
        mask: Comma-separated text of the names and cell ids to carry over.
        output_file: Optional file to output the document. If None, the
            document will be returned from this function.
    """
    u = advance_time(load_universe(universe_file), split_list(mask))
    return process_content_to_output(universe_to_document(u), output_file)


@click.command('predict')
@_universe_argument
@click.option('--cell', '-c', help='Id of the predicate cell the prediction is '
              'about.', type=str, required=True)
@click.option('--claim', help='The predicted truth value.',
              type=click.Choice(['true', 'false']), required=True)
@click.option('--at', 'target', help='The future time at which the claim is '
              'checked.', type=click.IntRange(min=0), required=True)
@_output_option
def predict_cli(universe_file, cell, claim, target, output_file):
    """Record a prediction about the truth of a cell at a future time.

    \b
    Args:
        universe_file: Path to a universe document.
    """
    try:
        predict(universe_file, cell, claim, target, output_file)
    except Exception as e:
        exit_on_error(e, 'Recording the prediction failed.')
    else:
        sys.exit(0)


def predict(universe_file, cell, claim, target, output_file=None):
    """Record a prediction and get the new universe document."""
    u = record_prediction(
        load_universe(universe_file), cell, TriValue.from_text(claim), target)
    return process_content_to_output(universe_to_document(u), output_file)


@click.command('verify')
@_universe_argument
@_output_option
def verify_cli(universe_file, output_file):
    """Settle the predictions whose time has been reached.

    \b
    Args:
        universe_file: Path to a universe document.
    """
    try:
        verify(universe_file, output_file)
    except Exception as e:
        exit_on_error(e, 'Verification failed.')
    else:
        sys.exit(0)


def verify(universe_file, output_file=None):
    """Settle predictions and get the new universe document."""
    u = verify_predictions(load_universe(universe_file))
    for p in u.predictions:
        _logger.info('Prediction on %s at %d: %s', p.cell_id, p.target, p.status.value)
    return process_content_to_output(universe_to_document(u), output_file)
