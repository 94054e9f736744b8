"""stategrid commands for operations between universes."""
import sys
import logging
import click

from ladybug.commandutil import process_content_to_output

from stategrid.integration import integrate
from stategrid.interuniversal import classify_operation, describe_translation, \
    describe_tick, describe_names, describe_integration
from stategrid.reader import load_universe, load_translation_map
from stategrid.translation import translate
from stategrid.writer import universe_to_document
from stategrid.cli.util import exit_on_error, exactly_one_option, split_list, \
    DOMAIN_ERROR

_logger = logging.getLogger(__name__)

_file_type = click.Path(exists=True, file_okay=True, dir_okay=False, resolve_path=True)


@click.command('translate')
@click.argument('universe-file', type=_file_type)
@click.option('--map', 'map_file', help='Path to a translation map document.',
              type=_file_type, required=True)
@click.option(
    '--output-file', '-o', help='Optional file to output the translated universe '
    'document. By default it will be printed to stdout.',
    type=click.File('w'), default='-', show_default=True)
def translate_cli(universe_file, map_file, output_file):
    """Translate a universe to the vocabulary of a translation map.

    \b
    Args:
        universe_file: Path to a universe document.
    """
    try:
        translate_universe(universe_file, map_file, output_file)
    except Exception as e:
        exit_on_error(e, 'Universe translation failed.')
    else:
        sys.exit(0)


def translate_universe(universe_file, map_file, output_file=None):
    """Translate a universe and get the document of the result.

    Args:
        universe_file: Path to a universe document.
        map_file: Path to a translation map document.
        output_file: Optional file to output the document. If None, the
            document will be returned from this function.
    """
    tm, target_vocab = load_translation_map(map_file)
    u = translate(load_universe(universe_file), tm, target_vocab)
    return process_content_to_output(universe_to_document(u), output_file)


@click.command('merge')
@click.argument('base-file', type=_file_type)
@click.argument('a-file', type=_file_type)
@click.argument('b-file', type=_file_type)
@click.option(
    '--output-file', '-o', help='Optional file to output the merged universe '
    'document. By default it will be printed to stdout.',
    type=click.File('w'), default='-', show_default=True)
def merge_cli(base_file, a_file, b_file, output_file):
    """Merge two universes edited from a common base.

    The merged document is written even when there are conflicts. Each
    conflict is reported on stderr and the command exits with 1.

    \b
    Args:
        base_file: Path to the document of the common ancestor.
        a_file: Path to the document of one edited universe.
        b_file: Path to the document of the other edited universe.
    """
    try:
        clean = merge_universes(base_file, a_file, b_file, output_file)
    except Exception as e:
        exit_on_error(e, 'Universe merge failed.')
    else:
        sys.exit(0 if clean else DOMAIN_ERROR)


def merge_universes(base_file, a_file, b_file, output_file=None):
    """Merge two universes and write the merged document.

    Returns:
        A boolean for whether the merge had no conflicts.
    """
    outcome = integrate(load_universe(base_file), load_universe(a_file),
                        load_universe(b_file))
    for conflict in outcome.conflicts:
        _logger.error('Conflict on cell %s.', conflict.cell_id)
    for time, name in outcome.symbol_conflicts:
        _logger.error('Conflict on %s at time %d.', name, time)
    process_content_to_output(universe_to_document(outcome.merged), output_file)
    return not outcome.has_conflicts


@click.command('classify')
@click.argument('universe-file', type=_file_type)
@click.option('--map', 'map_file', help='Classify the translation by this map.',
              type=_file_type, default=None)
@click.option('--mask', help='Classify a tick that keeps these comma-separated '
              'names observable.', type=str, default=None)
@click.option('--names', help='Classify an operation touching these '
              'comma-separated names.', type=str, default=None)
@click.option('--merge', 'merge_files', help='Classify the merge of the universe '
              'with another one from a common base given as BASE OTHER.',
              type=_file_type, nargs=2, default=None)
@click.option(
    '--output-file', '-o', help='Optional file to output the scale and validation '
    'mode. By default it will be printed to stdout.',
    type=click.File('w'), default='-', show_default=True)
def classify_cli(universe_file, map_file, mask, names, merge_files, output_file):
    """Classify an operation on a universe as macrocosm or microcosm.

    Exactly one of --map, --mask, --names or --merge describes the operation.

    \b
    Args:
        universe_file: Path to a universe document.
    """
    try:
        classify(universe_file, map_file, mask, names, merge_files, output_file)
    except Exception as e:
        exit_on_error(e, 'Classification failed.')
    else:
        sys.exit(0)


def classify(universe_file, map_file=None, mask=None, names=None, merge_files=None,
             output_file=None):
    """Classify an operation and get text with its scale and validation mode."""
    merge_files = merge_files or None
    exactly_one_option([('--map', map_file), ('--mask', mask), ('--names', names),
                        ('--merge', merge_files)])
    u = load_universe(universe_file)
    if map_file:
        descriptor = describe_translation(load_translation_map(map_file)[0], u)
    elif mask is not None:
        descriptor = describe_tick(u, split_list(mask))
    elif names is not None:
        descriptor = describe_names('edit', split_list(names), u.vocab.names)
    else:
        base, other = (load_universe(f) for f in merge_files)
        descriptor = describe_integration(base, u, other)
    scale = classify_operation(descriptor)
    text = '{}\t{}\n'.format(scale, scale.validation_mode)
    return process_content_to_output(text, output_file)
