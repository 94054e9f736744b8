# coding=utf-8
"""Methods to write universes and translation maps to text documents.

Documents are UTF-8 with LF line endings and one declaration per line. Every
section is written in a fixed order with its entries sorted, so equal
universes always produce byte-identical documents.
"""
from fractions import Fraction

from .config import defaults
from .expression import to_text
from .grid import GroundSet, MappingDecl, PredicateState, TruthResult, natural_key
from .model import value_key


def value_to_text(value):
    """Get the document text of a model value.

    Rationals are written as p/q in lowest terms or as bare integers, atoms
    as they are, tuples in parentheses and sets in braces with their elements
    sorted. No spaces are written.
    """
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return '{}/{}'.format(value.numerator, value.denominator)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    if isinstance(value, tuple):
        return '({})'.format(','.join(value_to_text(v) for v in value))
    items = sorted(value, key=value_key)
    return '{{{}}}'.format(','.join(value_to_text(v) for v in items))


def quote(text):
    """Get text in double quotes with quotes and backslashes escaped."""
    return '"{}"'.format(text.replace('\\', '\\\\').replace('"', '\\"'))


def cell_to_line(cell):
    """Get the canonical document line of a StateCell."""
    content = cell.content
    parts = [
        'cell', cell.identifier, 'coord={}'.format(cell.coordinate.to_text()),
        'label={}'.format(quote(cell.label)), 'kind={}'.format(content.kind)
    ]
    if isinstance(content, (GroundSet, MappingDecl)):
        parts.append('name={}'.format(content.name))
    if isinstance(content, MappingDecl):
        parts.append('arity={}'.format(content.arity))
        if content.domain is not None:
            parts.append('domain={}'.format(content.domain))
    elif isinstance(content, PredicateState):
        parts.append('expr={}'.format(quote(to_text(content.expr))))
    elif isinstance(content, TruthResult):
        parts.append('value={}'.format(content.value))
    parts.append('def={}'.format(cell.definability))
    parts.append('tags={}'.format(','.join(sorted(cell.tags))))
    return ' '.join(parts)


def snapshot_to_lines(time, model):
    """Get the document lines of the snapshot Model at a time index."""
    lines = ['snapshot t={}'.format(time)]
    for name in sorted(model.interpreted):
        kind = model.kind_of(name)
        if kind == 'set':
            lines.append('carrier t={} {} = {}'.format(
                time, name, value_to_text(model.carrier(name))))
        elif kind == 'map':
            lines.append('map t={} {} = {}'.format(
                time, name, value_to_text(model.graph(name))))
        elif kind == 'family':
            lines.append('family t={} {} = {}'.format(
                time, name, value_to_text(model.family_at(name, time))))
    return lines


def prediction_to_line(prediction):
    """Get the document line of a Prediction."""
    return 'prediction {} claim={} at={} status={}'.format(
        prediction.cell_id, prediction.claim, prediction.target,
        prediction.status.value)


def universe_to_lines(u):
    """Get a list of the lines of the document of a Universe."""
    lines = [
        '{} {}'.format(defaults.document_format, defaults.document_version),
        'universe {}'.format(u.identifier)
    ]
    for name in u.vocab.names:
        lines.append('symbol {} kind={}'.format(name, u.vocab.kind(name)))
    depths = u.registry.to_dict()
    for name in sorted(depths):
        lines.append('depth {} {}'.format(name, depths[name]))
    for time, model in enumerate(u.models):
        lines.extend(snapshot_to_lines(time, model))
    for cell in sorted(u.grid.cells, key=lambda c: natural_key(c.identifier)):
        lines.append(cell_to_line(cell))
    for prediction in u.predictions:
        lines.append(prediction_to_line(prediction))
    for entry in u.log:
        lines.append('log {}'.format(entry.to_text()))
    lines.append('end')
    return lines


def universe_to_document(u):
    """Get the text of the document of a Universe.

    Args:
        u: A Universe.

    Returns:
        Text with LF line endings, ending with a line break.
    """
    return '\n'.join(universe_to_lines(u)) + '\n'


def save_universe(u, file_path):
    """Write the document of a Universe to a file.

    Returns:
        The path to the written file.
    """
    with open(file_path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(universe_to_document(u))
    return file_path


def translation_map_to_document(tm, target_vocab):
    """Get the text of a translation map document.

    Args:
        tm: A TranslationMap.
        target_vocab: The Vocabulary of the target universe.
    """
    lines = [
        '{} {}'.format(defaults.map_format, defaults.document_version),
        'source {}'.format(tm.source),
        'target {}'.format(tm.target)
    ]
    for name in target_vocab.names:
        lines.append('symbol {} kind={}'.format(name, target_vocab.kind(name)))
    for name in sorted(tm.entries):
        lines.append('entry {} {}'.format(name, tm.entries[name]))
    lines.append('end')
    return '\n'.join(lines) + '\n'
