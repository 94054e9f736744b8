"""stategrid command line interface."""
import click

from .predicate import parse_cli, place_cli
from .universe import new_cli, add_cell_cli, observe_cli, eval_cli, report_cli, \
    check_codomain_cli
from .realtime import tick_cli, predict_cli, verify_cli
from .translate import translate_cli, merge_cli, classify_cli
from .demo import demo


@click.group(help='stategrid: definitions placed on the hierarchical state grid.')
@click.version_option()
def main():
    pass


for _command in (parse_cli, place_cli, new_cli, add_cell_cli, observe_cli, eval_cli,
                 report_cli, check_codomain_cli, tick_cli, predict_cli, verify_cli,
                 translate_cli, merge_cli, classify_cli, demo):
    main.add_command(_command)
