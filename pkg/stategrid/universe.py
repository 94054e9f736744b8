# coding=utf-8
"""Definition universes: a vocabulary, a grid and a history of observations.

A Universe is an immutable value. Every operation returns a new universe and
appends an entry to its log, which is how later merges establish that two
universes share an ancestor.
"""
import hashlib
from dataclasses import dataclass
from typing import Optional

from honeybee.typing import valid_string

from .errors import TimeNotMaterializedError, UnknownSymbolError
from .evaluate import evaluate
from .grid import Grid, PredicateState, UNTRANSLATED_TAG, EXISTENCE_TAG, \
    STRUCTURE_TAG
from .model import Model, normalize_value
from .parser import check_well_formed
from .registry import DepthRegistry
from .vocabulary import Vocabulary, INDEX_NAME
from .writer import cell_to_line, value_to_text

DIGEST_LENGTH = 12


def digest(text):
    """Get the short sha1 digest of the canonical text of an operation argument."""
    return hashlib.sha1(text.encode('utf-8')).hexdigest()[:DIGEST_LENGTH]


def snapshot(model, time):
    """Get a snapshot Model keeping only what a model interprets at one time index.

    Carriers and mappings are kept whole. Families keep their value at the time
    index and are dropped when they have none.
    """
    carriers, mappings, families = {}, {}, {}
    for name in model.interpreted:
        kind = model.kind_of(name)
        if kind == 'set':
            carriers[name] = model.carrier(name)
        elif kind == 'map':
            mappings[name] = model.graph(name)
        elif kind == 'family':
            value = model.family_at(name, time)
            if value is not None:
                families[name] = {time: value}
    return Model(carriers, mappings, families)


@dataclass(frozen=True)
class LogEntry:
    """One applied operation in the append-only log of a universe.

    The author is the id of the defining agent that applied the operation. It
    is None when the operation was not attributed.
    """
    seq: int
    operation: str
    digest: str
    author: Optional[str] = None

    def __post_init__(self):
        if self.author is not None:
            valid_string(self.author, 'log entry author')

    def to_text(self):
        text = '{} {} {}'.format(self.seq, self.operation, self.digest)
        return text if self.author is None else '{} by={}'.format(text, self.author)


class Universe(object):
    """A definition universe.

    Args:
        identifier: Text for the unique id of the universe.
        vocab: The Vocabulary the universe is written in.
        registry: The DepthRegistry of the vocabulary.
        grid: The Grid of the states of the universe.
        models: A list of snapshot Models, one per time index from 0 to the
            latest time. A snapshot holds the carriers and mappings interpreted
            at that time and the family values observed at that index.
        predictions: A list of Predictions. (Default: None).
        log: A list of LogEntries. (Default: None).

    Properties:
        * identifier
        * vocab
        * registry
        * grid
        * models
        * predictions
        * log
        * authors
        * t_max
        * existence
        * structures
    """
    __slots__ = ('_identifier', '_vocab', '_registry', '_grid', '_models',
                 '_predictions', '_log')

    def __init__(self, identifier, vocab, registry, grid, models,
                 predictions=None, log=None):
        self._identifier = valid_string(identifier, 'universe identifier')
        assert isinstance(vocab, Vocabulary), \
            'Expected Vocabulary for universe. Got {}.'.format(type(vocab))
        assert isinstance(registry, DepthRegistry), \
            'Expected DepthRegistry for universe. Got {}.'.format(type(registry))
        assert isinstance(grid, Grid), \
            'Expected Grid for universe. Got {}.'.format(type(grid))
        self._vocab = vocab
        self._registry = registry
        self._grid = grid
        self._models = tuple(snapshot(m, t) for t, m in enumerate(models))
        assert len(self._models) > 0, 'A universe needs a snapshot at time 0.'
        self._predictions = tuple(predictions or ())
        self._log = tuple(log or ())
        for cell in grid:
            self._check_cell(cell)

    def _check_cell(self, cell):
        if isinstance(cell.content, PredicateState) and \
                UNTRANSLATED_TAG not in cell.tags:
            check_well_formed(cell.content.expr, self._vocab)

    @property
    def identifier(self):
        """Get the id of the universe."""
        return self._identifier

    @property
    def vocab(self):
        """Get the Vocabulary of the universe."""
        return self._vocab

    @property
    def registry(self):
        """Get the DepthRegistry of the universe."""
        return self._registry

    @property
    def grid(self):
        """Get the Grid of the universe."""
        return self._grid

    @property
    def models(self):
        """Get a tuple of the snapshot Models from time 0 to t_max."""
        return self._models

    @property
    def predictions(self):
        """Get a tuple of the recorded Predictions."""
        return self._predictions

    @property
    def log(self):
        """Get a tuple of the LogEntries of every applied operation."""
        return self._log

    @property
    def authors(self):
        """Get a sorted tuple of the agents named by the log."""
        return tuple(sorted(set(e.author for e in self._log if e.author is not None)))

    @property
    def t_max(self):
        """Get the latest materialized time index."""
        return len(self._models) - 1

    @property
    def existence(self):
        """Get a tuple of the cells tagged as part of the existence."""
        return tuple(c for c in self._grid if EXISTENCE_TAG in c.tags)

    @property
    def structures(self):
        """Get a tuple of the predicate cells tagged as structures."""
        return tuple(c for c in self._grid if STRUCTURE_TAG in c.tags)

    def view(self, time):
        """Get the Model used to evaluate expressions at a time.

        The view interprets what the snapshot at the time interprets. Families
        carry their values at every earlier index that was observed while the
        family was interpreted.

        Args:
            time: A time index from 0 to t_max.
        """
        if not 0 <= time <= self.t_max:
            raise TimeNotMaterializedError(time, self.t_max)
        snapshot = self._models[time]
        families = {}
        for past in self._models[:time + 1]:
            for name, values in past.families.items():
                if past.is_interpreted(name):
                    families.setdefault(name, {}).update(values)
        return Model(snapshot.carriers, snapshot.mappings, families,
                     snapshot.interpreted, self._vocab.names)

    def evolve(self, operation, argument_text, author=None, **kwargs):
        """Get a new universe with some fields replaced and one more log entry.

        Args:
            operation: Text for the name of the operation being logged.
            argument_text: Canonical text of the operation arguments. Only its
                digest is kept.
            author: Optional id of the agent applying the operation.
            kwargs: New values for any of identifier, vocab, registry, grid,
                models and predictions.
        """
        fields = {
            'identifier': self._identifier, 'vocab': self._vocab,
            'registry': self._registry, 'grid': self._grid,
            'models': self._models, 'predictions': self._predictions
        }
        fields.update(kwargs)
        entry = LogEntry(len(self._log), operation, digest(argument_text), author)
        fields['log'] = self._log + (entry,)
        return Universe(**fields)

    def __key(self):
        return (self._identifier, self._vocab, self._registry, self._grid,
                self._models, self._predictions, self._log)

    def __eq__(self, other):
        return isinstance(other, Universe) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.__key())

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'Universe: {} ({} cells, t_max={})'.format(
            self._identifier, len(self._grid), self.t_max)


def new_universe(identifier, vocab=None, registry=None, author=None):
    """Create an empty universe with one snapshot at time 0.

    Args:
        identifier: Text for the id of the universe.
        vocab: An optional Vocabulary. (Default: empty).
        registry: An optional DepthRegistry. (Default: builtin depths only).
        author: Optional id of the agent creating the universe.
    """
    vocab = vocab if vocab is not None else Vocabulary()
    registry = registry if registry is not None else DepthRegistry()
    entry = LogEntry(0, 'new', digest(identifier), author)
    return Universe(identifier, vocab, registry, Grid(), [Model()], log=[entry])


def declare_symbol(u, name, kind, author=None):
    """Get a universe whose vocabulary declares one more name."""
    vocab = u.vocab.declare(name, kind)
    return u.evolve('declare', '{} {}'.format(name, vocab.kind(name)), vocab=vocab, author=author)


def set_depth(u, name, depth, author=None):
    """Get a universe with the state depth of one name set in its registry."""
    if name not in u.vocab and name not in u.registry.builtins:
        raise UnknownSymbolError(name)
    return u.evolve('depth', '{} {}'.format(name, depth),
                    registry=u.registry.with_depth(name, depth), author=author)


def add_cell(u, cell, author=None):
    """Get a universe with one more cell on its grid."""
    return u.evolve('add-cell', cell_to_line(cell), grid=u.grid.put(cell),
                    author=author)


def edit_cell(u, cell, author=None):
    """Get a universe where the cell with the same id is replaced."""
    return u.evolve('edit-cell', cell_to_line(cell), grid=u.grid.replace(cell),
                    author=author)


def observe(u, name, value, author=None):
    """Record the interpretation of a name in the snapshot at the latest time.

    Observation is the only way new information enters a universe after a
    tick. The value of a family is its set at the latest time index.

    Args:
        u: A Universe.
        name: A name of the vocabulary.
        value: A set for carriers and families or a set of tuples for mappings.
        author: Optional id of the agent making the observation.
    """
    kind = u.vocab.kind(name)
    value = normalize_value(value)
    t_max = u.t_max
    snapshot = u.models[t_max]
    if kind.is_family:
        new_snapshot = snapshot.with_interpretation(name, 'family', {t_max: value})
    elif kind.is_mapping:
        new_snapshot = snapshot.with_interpretation(name, 'map', value)
    elif kind.is_carrier:
        new_snapshot = snapshot.with_interpretation(name, 'set', value)
    else:
        raise ValueError(
            'Predicate "{}" is decided by a judgment and cannot be observed.'.format(name))
    models = u.models[:t_max] + (new_snapshot,)
    return u.evolve('observe', '{} {} {}'.format(t_max, name, value_to_text(value)),
                    models=models, author=author)


def evaluate_at(u, e, time, index=None, judgments=None):
    """Evaluate a formula in a universe at a time.

    Args:
        u: A Universe.
        e: An Expr.
        time: The time index of the view to evaluate in. Times after t_max
            raise TimeNotMaterializedError.
        index: The value of the index i. (Default: time).
        judgments: An optional dictionary of JudgmentFns by predicate name.

    Returns:
        A TriValue.
    """
    model = u.view(time)
    env = {INDEX_NAME: time if index is None else index}
    return evaluate(e, model, env, judgments)
