# coding=utf-8
"""Translation of universes from one vocabulary to another.

Translation rewrites names symbol by symbol. A cell whose names are not all
mapped is carried over unchanged, flagged as untranslated and marked
undefinable. Coordinates never change since the grid does not depend on the
language a state is written in.
"""
import logging

from honeybee.typing import valid_string

from .errors import KindMismatchError, TranslationMapError, StateGridError
from .expression import rename, symbols
from .grid import Grid, GroundSet, MappingDecl, PredicateState, UNTRANSLATED_TAG
from .parser import check_well_formed
from .truth import UNDEFINABLE

_logger = logging.getLogger(__name__)


class TranslationMap(object):
    """A partial, kind-preserving map from the names of one universe to another.

    Args:
        source: Text for the id of the universe to translate from.
        target: Text for the id of the translated universe.
        entries: A dictionary from source names to target names.

    Properties:
        * source
        * target
        * entries
        * is_bijective
    """
    __slots__ = ('_source', '_target', '_entries')

    def __init__(self, source, target, entries=None):
        self._source = valid_string(source, 'translation source')
        self._target = valid_string(target, 'translation target')
        self._entries = dict(entries or {})

    @property
    def source(self):
        return self._source

    @property
    def target(self):
        return self._target

    @property
    def entries(self):
        """Get a dictionary from source names to target names."""
        return dict(self._entries)

    @property
    def is_bijective(self):
        """Get a boolean for whether no two names map to the same target name."""
        return len(set(self._entries.values())) == len(self._entries)

    def inverse(self):
        """Get the map translating back from the target to the source.

        Only bijective maps can be inverted.
        """
        if not self.is_bijective:
            raise TranslationMapError(
                'Map from "{}" to "{}" sends two names to one and has no '
                'inverse.'.format(self._source, self._target))
        return TranslationMap(
            self._target, self._source, {t: s for s, t in self._entries.items()})

    def check(self, source_vocab, target_vocab):
        """Check that every entry maps a name to a name of the same kind."""
        for name in sorted(self._entries):
            new_name = self._entries[name]
            if name not in source_vocab:
                raise TranslationMapError(
                    'Map entry "{}" is not declared in the source universe.'.format(name))
            if new_name not in target_vocab:
                raise TranslationMapError(
                    'Map entry "{}" points to "{}" which the target vocabulary '
                    'does not declare.'.format(name, new_name))
            if source_vocab.kind(name) != target_vocab.kind(new_name):
                raise KindMismatchError(name)

    def __eq__(self, other):
        return isinstance(other, TranslationMap) and \
            (self._source, self._target, self._entries) == \
            (other._source, other._target, other._entries)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._source, self._target, frozenset(self._entries.items())))

    def __repr__(self):
        return 'TranslationMap: {} -> {} ({} entries)'.format(
            self._source, self._target, len(self._entries))


def cell_names(cell, vocab):
    """Get the vocabulary names that a cell refers to.

    Ground and mapping cells refer to the names they declare when those are in
    the vocabulary. Names outside the vocabulary, such as builtin sets, do not
    depend on the language. Truth cells refer to no name.
    """
    content = cell.content
    if isinstance(content, PredicateState):
        return frozenset(symbols(content.expr))
    if isinstance(content, (GroundSet, MappingDecl)):
        names = {content.name}
        if isinstance(content, MappingDecl) and content.domain is not None:
            names.add(content.domain)
        return frozenset(n for n in names if n in vocab)
    return frozenset()


def _translated_content(content, entries):
    if isinstance(content, PredicateState):
        return PredicateState(rename(content.expr, entries))
    if isinstance(content, GroundSet):
        return GroundSet(entries.get(content.name, content.name))
    if isinstance(content, MappingDecl):
        domain = content.domain
        return MappingDecl(entries.get(content.name, content.name), content.arity,
                           entries.get(domain, domain) if domain is not None else None)
    return content


def translate(u, tm, target_vocab, author=None):
    """Translate a universe to another vocabulary.

    Args:
        u: The Universe to translate. Its id must be the source of the map.
        tm: A TranslationMap.
        target_vocab: The Vocabulary of the translated universe.
        author: Optional id of the agent applying the translation.

    Returns:
        A new Universe with the id of the map target. Registry depths and model
        interpretations follow their names through the map and are dropped for
        unmapped names.
    """
    if tm.source != u.identifier:
        raise TranslationMapError(
            'Map translates from "{}" but the universe is "{}".'.format(
                tm.source, u.identifier))
    tm.check(u.vocab, target_vocab)
    entries = tm.entries
    cells, flagged = [], 0
    for cell in u.grid:
        names = cell_names(cell, u.vocab)
        new_cell = None
        if UNTRANSLATED_TAG not in cell.tags and all(n in entries for n in names):
            new_cell = cell.with_content(_translated_content(cell.content, entries))
            if isinstance(new_cell.content, PredicateState):
                try:
                    check_well_formed(new_cell.content.expr, target_vocab)
                except (StateGridError, AssertionError):
                    new_cell = None  # a target name is captured by a bound variable
        if new_cell is None:
            flagged += 1
            new_cell = cell.with_definability(UNDEFINABLE).with_tags(
                cell.tags | {UNTRANSLATED_TAG})
        cells.append(new_cell)
    _logger.info('Translated %s to %s: %d cells, %d flagged untranslated.',
                 u.identifier, tm.target, len(cells), flagged)
    models = [m.renamed(entries) for m in u.models]
    argument = '{} {} {}'.format(tm.source, tm.target, ','.join(
        '{}>{}'.format(s, entries[s]) for s in sorted(entries)))
    return u.evolve(
        'translate', argument, identifier=tm.target, vocab=target_vocab,
        registry=u.registry.renamed(entries), grid=Grid(cells), models=models,
        author=author)
