"""stategrid commands running the bundled reference definitions."""
import sys
import logging
import click

from ladybug.commandutil import process_content_to_output

from stategrid.judgment import int_literal, int_windowed
from stategrid.placement import place, placement_to_grid, report
from stategrid.reference import CONTINUITY_VOCABULARY, CONTINUITY_REGISTRY, \
    CONTINUITY_MODE, CONTINUITY_LABELS, continuity_judgment, identity_model, \
    step_model, uninterpreted_model, INTELLIGENCE_VOCABULARY, \
    INTELLIGENCE_REGISTRY, INTELLIGENCE_MODE, INTELLIGENCE_LABELS, \
    INTELLIGENCE_WINDOW, intelligence_definition, window_model, numeric_system_grid
from stategrid.cli.util import exit_on_error

_logger = logging.getLogger(__name__)

_output_option = click.option(
    '--output-file', '-o', help='Optional file to output the demo. By default it '
    'will be printed to stdout.', type=click.File('w'), default='-',
    show_default=True)


@click.group(help='Commands running the bundled reference definitions.')
def demo():
    pass


@demo.command('cont')
@_output_option
def cont_cli(output_file):
    """Place the continuity test and run it on the bundled fixtures."""
    try:
        continuity_demo(output_file)
    except Exception as e:
        exit_on_error(e, 'Continuity demo failed.')
    else:
        sys.exit(0)


def continuity_demo(output_file=None):
    """Get the placement table of the continuity test and its verdicts."""
    cont = continuity_judgment()
    placement = place(cont.expression, CONTINUITY_REGISTRY, CONTINUITY_MODE,
                      vocabulary=CONTINUITY_VOCABULARY)
    lines = [report(placement_to_grid(placement, CONTINUITY_LABELS))]
    for name, model in (('on the identity fixture', identity_model()),
                        ('on the step fixture', step_model()),
                        ('with f uninterpreted', uninterpreted_model())):
        lines.append('Cont(f) {}: {}\n'.format(name, cont.apply(model)))
    return process_content_to_output(''.join(lines), output_file)


@demo.command('intelligence')
@_output_option
def intelligence_cli(output_file):
    """Place the intelligence test and run it on the bundled window fixture."""
    try:
        intelligence_demo(output_file)
    except Exception as e:
        exit_on_error(e, 'Intelligence demo failed.')
    else:
        sys.exit(0)


def intelligence_demo(output_file=None):
    """Get the placement table of the intelligence test and its verdicts."""
    placement = place(intelligence_definition(), INTELLIGENCE_REGISTRY,
                      INTELLIGENCE_MODE, vocabulary=INTELLIGENCE_VOCABULARY)
    model = window_model()
    start = INTELLIGENCE_WINDOW[0]
    literal = int_literal('I', 'O', 'T', 'V', start, model)
    windowed = int_windowed('I', 'O', 'T', 'V', INTELLIGENCE_WINDOW, model)
    lines = [
        report(placement_to_grid(placement, INTELLIGENCE_LABELS)),
        'Int at i={}: {}\n'.format(start, literal),
        'Int at a single index is false on every fully interpreted model since '
        'the input and output structures need |I| to grow and shrink at once.\n',
        'Int over the window {}: {}\n'.format(
            ','.join(str(i) for i in INTELLIGENCE_WINDOW), windowed)
    ]
    return process_content_to_output(''.join(lines), output_file)


@demo.command('grid')
@_output_option
def grid_cli(output_file):
    """Print the reference grid of numerical-system states."""
    try:
        process_content_to_output(report(numeric_system_grid()), output_file)
    except Exception as e:
        exit_on_error(e, 'Grid demo failed.')
    else:
        sys.exit(0)
