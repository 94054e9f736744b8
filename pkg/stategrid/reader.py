# coding=utf-8
"""Methods to read universes and translation maps from text documents."""
import re
import shlex
import logging
from fractions import Fraction

from .config import defaults
from .errors import DocumentFormatError, VersionMismatchError
from .grid import Coordinate, Grid, StateCell, GroundSet, MappingDecl, \
    PredicateState, TruthResult, UNTRANSLATED_TAG
from .model import Model
from .parser import parse
from .realtime import Prediction, PredictionStatus
from .registry import DepthRegistry
from .translation import TranslationMap
from .truth import TriValue
from .universe import Universe, LogEntry
from .vocabulary import Vocabulary, SymbolKind

_logger = logging.getLogger(__name__)

_VALUE_TOKEN = re.compile(r'-?\d+(?:/\d+)?|[A-Za-z_][A-Za-z0-9_]*|[{}(),]')
_NUMBER = re.compile(r'^-?\d+(?:/\d+)?$')

# sections must appear in this order
_SECTIONS = {
    'universe': 0, 'symbol': 1, 'depth': 2, 'snapshot': 3, 'carrier': 3,
    'map': 3, 'family': 3, 'cell': 4, 'prediction': 5, 'log': 6, 'end': 7
}


def value_from_text(text):
    """Parse the document text of a model value.

    Raises:
        ValueError: If the text is not a value.
    """
    tokens = _VALUE_TOKEN.findall(text)
    if ''.join(tokens) != text or not tokens:
        raise ValueError('"{}" is not a value.'.format(text))
    value, end = _value(tokens, 0)
    if end != len(tokens):
        raise ValueError('Unexpected "{}" after a value.'.format(tokens[end]))
    return value


def _value(tokens, pos):
    tok = tokens[pos]
    if tok in ('{', '('):
        close = '}' if tok == '{' else ')'
        items, pos = [], pos + 1
        if pos < len(tokens) and tokens[pos] == close:
            return (frozenset() if tok == '{' else ()), pos + 1
        while True:
            if pos >= len(tokens):
                raise ValueError('Unclosed "{}".'.format(tok))
            item, pos = _value(tokens, pos)
            items.append(item)
            if pos < len(tokens) and tokens[pos] == ',':
                pos += 1
                continue
            if pos < len(tokens) and tokens[pos] == close:
                break
            raise ValueError('Expected "," or "{}".'.format(close))
        return (frozenset(items) if tok == '{' else tuple(items)), pos + 1
    if _NUMBER.match(tok):
        return Fraction(tok), pos + 1
    if tok in ('}', ')', ','):
        raise ValueError('Unexpected "{}".'.format(tok))
    return tok, pos + 1


def _fields(tokens, start):
    """Get a dictionary from the key=value tokens of a line."""
    fields = {}
    for tok in tokens[start:]:
        if '=' not in tok:
            raise ValueError('Expected key=value. Got "{}".'.format(tok))
        key, value = tok.split('=', 1)
        if key in fields:
            raise ValueError('Repeated field "{}".'.format(key))
        fields[key] = value
    return fields


def _natural(text, what):
    if not text.isdigit():
        raise ValueError('{} must be a natural number. Got "{}".'.format(what, text))
    return int(text)


def _header(line, format_name):
    parts = line.split(' ')
    if len(parts) != 2 or parts[0] != format_name:
        raise DocumentFormatError(1, 'expected header "{} {}"'.format(
            format_name, defaults.document_version))
    if parts[1] != defaults.document_version:
        raise VersionMismatchError(parts[1], defaults.document_version)


def _lines(text):
    if '\r' in text:
        line_no = text[:text.index('\r')].count('\n') + 1
        raise DocumentFormatError(line_no, 'line endings must be LF')
    lines = text.split('\n')
    if lines and lines[-1] == '':
        lines.pop()
    if not lines:
        raise DocumentFormatError(1, 'empty document')
    return lines


class _UniverseBuilder(object):
    """Collects the declarations of a universe document line by line."""

    def __init__(self):
        self.identifier = None
        self.vocab = {}
        self.depths = {}
        self.snapshots = []
        self.cells = []
        self.predictions = []
        self.log = []
        self.vocabulary = None

    def read(self, keyword, tokens):
        getattr(self, '_' + keyword)(tokens)

    def _universe(self, tokens):
        if len(tokens) != 2 or self.identifier is not None:
            raise ValueError('expected one "universe <id>" line')
        self.identifier = tokens[1]

    def _symbol(self, tokens):
        fields = _fields(tokens, 2)
        if len(tokens) != 3 or 'kind' not in fields:
            raise ValueError('expected "symbol <name> kind=<kind>"')
        self.vocab[tokens[1]] = SymbolKind.from_text(fields['kind'])

    def _depth(self, tokens):
        if len(tokens) != 3:
            raise ValueError('expected "depth <name> <nat>"')
        self.depths[tokens[1]] = _natural(tokens[2], 'depth')

    def _snapshot(self, tokens):
        fields = _fields(tokens, 1)
        time = _natural(fields.get('t', ''), 'snapshot time')
        if time != len(self.snapshots):
            raise ValueError('expected snapshot t={}'.format(len(self.snapshots)))
        self.snapshots.append(({}, {}, {}))

    def _interpretation(self, tokens, store_index):
        if len(tokens) != 5 or tokens[3] != '=' or not tokens[1].startswith('t='):
            raise ValueError('expected "{} t=<nat> <name> = <value>"'.format(tokens[0]))
        time = _natural(tokens[1][2:], 'time')
        if time != len(self.snapshots) - 1:
            raise ValueError('time {} is not the open snapshot'.format(time))
        value = value_from_text(tokens[4])
        if not isinstance(value, frozenset):
            raise ValueError('"{}" is not a set'.format(tokens[4]))
        store = self.snapshots[-1][store_index]
        store[tokens[2]] = {time: value} if store_index == 2 else value

    def _carrier(self, tokens):
        self._interpretation(tokens, 0)

    def _map(self, tokens):
        self._interpretation(tokens, 1)

    def _family(self, tokens):
        self._interpretation(tokens, 2)

    def _cell(self, tokens):
        if self.vocabulary is None:
            self.vocabulary = Vocabulary(self.vocab)
        if len(tokens) < 3:
            raise ValueError('expected "cell <id> key=value ..."')
        fields = _fields(tokens, 2)
        for key in ('coord', 'label', 'kind', 'def', 'tags'):
            if key not in fields:
                raise ValueError('cell is missing "{}="'.format(key))
        tags = frozenset(t for t in fields['tags'].split(',') if t)
        kind = fields['kind']
        if kind == 'ground':
            content = GroundSet(fields['name'])
        elif kind == 'mapdecl':
            content = MappingDecl(fields['name'], _natural(fields['arity'], 'arity'),
                                  fields.get('domain'))
        elif kind == 'pred':
            strict = UNTRANSLATED_TAG not in tags
            content = PredicateState(parse(fields['expr'], self.vocabulary, strict))
        elif kind == 'truth':
            content = TruthResult(TriValue.from_text(fields['value']))
        else:
            raise ValueError('unknown cell kind "{}"'.format(kind))
        self.cells.append(StateCell(
            tokens[1], Coordinate.from_text(fields['coord']), fields['label'],
            content, TriValue.from_text(fields['def']), tags))

    def _prediction(self, tokens):
        fields = _fields(tokens, 2)
        self.predictions.append(Prediction(
            tokens[1], TriValue.from_text(fields['claim']),
            _natural(fields['at'], 'prediction time'),
            PredictionStatus(fields['status'])))

    def _log(self, tokens):
        if len(tokens) not in (4, 5) or \
                (len(tokens) == 5 and not tokens[4].startswith('by=')):
            raise ValueError('expected "log <seq> <operation> <digest> [by=<author>]"')
        seq = _natural(tokens[1], 'log sequence')
        if seq != len(self.log):
            raise ValueError('expected log entry {}'.format(len(self.log)))
        author = tokens[4][3:] if len(tokens) == 5 else None
        self.log.append(LogEntry(seq, tokens[2], tokens[3], author))

    def build(self):
        if self.identifier is None:
            raise ValueError('no "universe <id>" line')
        if not self.snapshots:
            raise ValueError('no snapshot at time 0')
        models = [Model(c, m, f) for c, m, f in self.snapshots]
        return Universe(
            self.identifier, Vocabulary(self.vocab), DepthRegistry.from_dict(self.depths),
            Grid(self.cells), models, self.predictions, self.log)


def document_to_universe(text):
    """Read a Universe from the text of a document.

    Raises:
        DocumentFormatError: With the number of the first line that cannot be
            read. A document without its end line is truncated.
        VersionMismatchError: If the document has another format version.
    """
    lines = _lines(text)
    _header(lines[0], defaults.document_format)
    builder = _UniverseBuilder()
    section = 0
    for line_no, line in enumerate(lines[1:], 2):
        try:
            tokens = shlex.split(line)
        except ValueError as e:
            raise DocumentFormatError(line_no, str(e))
        if not tokens or tokens[0] not in _SECTIONS:
            raise DocumentFormatError(line_no, 'unknown declaration')
        keyword = tokens[0]
        if _SECTIONS[keyword] < section:
            raise DocumentFormatError(line_no, '"{}" line out of order'.format(keyword))
        section = _SECTIONS[keyword]
        if keyword == 'end':
            if line_no != len(lines):
                raise DocumentFormatError(line_no + 1, 'content after the end line')
            try:
                universe = builder.build()
            except (ValueError, AssertionError, KeyError) as e:
                raise DocumentFormatError(line_no, str(e))
            _logger.debug('Read universe %s with %d cells.', universe.identifier,
                          len(universe.grid))
            return universe
        try:
            builder.read(keyword, tokens)
        except (ValueError, AssertionError, KeyError) as e:
            raise DocumentFormatError(line_no, str(e))
    raise DocumentFormatError(len(lines) + 1, 'document ends without an end line')


def load_universe(file_path):
    """Read a Universe from a document file."""
    with open(file_path, 'r', encoding='utf-8', newline='') as f:
        return document_to_universe(f.read())


def document_to_translation_map(text):
    """Read a translation map document.

    Returns:
        A tuple of (TranslationMap, target Vocabulary).
    """
    lines = _lines(text)
    _header(lines[0], defaults.map_format)
    source = target = None
    vocab, entries = {}, {}
    for line_no, line in enumerate(lines[1:], 2):
        tokens = line.split()
        try:
            if tokens == ['end']:
                if line_no != len(lines):
                    raise ValueError('content after the end line')
                return TranslationMap(source, target, entries), Vocabulary(vocab)
            if len(tokens) == 2 and tokens[0] in ('source', 'target'):
                if tokens[0] == 'source':
                    source = tokens[1]
                else:
                    target = tokens[1]
            elif len(tokens) == 3 and tokens[0] == 'symbol':
                fields = _fields(tokens, 2)
                vocab[tokens[1]] = SymbolKind.from_text(fields['kind'])
            elif len(tokens) == 3 and tokens[0] == 'entry':
                if tokens[1] in entries:
                    raise ValueError('repeated entry for "{}"'.format(tokens[1]))
                entries[tokens[1]] = tokens[2]
            else:
                raise ValueError('unknown declaration')
        except (ValueError, AssertionError, KeyError) as e:
            raise DocumentFormatError(line_no, str(e))
    raise DocumentFormatError(len(lines) + 1, 'document ends without an end line')


def load_translation_map(file_path):
    """Read a translation map file into a (TranslationMap, Vocabulary) tuple."""
    with open(file_path, 'r', encoding='utf-8', newline='') as f:
        return document_to_translation_map(f.read())
