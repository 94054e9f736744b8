# coding=utf-8
"""Scale of operations between universes and verifiability of their results.

An operation whose footprint covers the whole vocabulary of a universe acts on
the universe as a whole and is validated by proof, a static evaluation of
what it produces. An operation that touches only part of the vocabulary is a
local change and is validated by verification as time goes by.
"""
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Tuple

from .expression import symbols
from .grid import PredicateState
from .translation import cell_names
from .writer import cell_to_line


class OperationScale(Enum):
    MACROCOSM = 'macrocosm'
    MICROCOSM = 'microcosm'

    @property
    def validation_mode(self):
        """Get proof for whole-universe operations and verification otherwise."""
        return 'proof' if self is OperationScale.MACROCOSM else 'verification'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class OperationDescriptor:
    """The names an operation touches out of the vocabulary it acts on."""
    name: str
    footprint: FrozenSet[str]
    vocabulary: FrozenSet[str]


def describe_names(name, names, vocabulary):
    """Describe an operation from the names it touches.

    Args:
        name: Text for the name of the operation.
        names: An iterable of touched names.
        vocabulary: An iterable of every name of the universe acted on.
    """
    vocabulary = frozenset(vocabulary)
    return OperationDescriptor(name, frozenset(names) & vocabulary, vocabulary)


def describe_translation(tm, u):
    """Describe the translation of a universe by a TranslationMap."""
    return describe_names('translate', tm.entries, u.vocab.names)


def describe_tick(u, mask):
    """Describe a tick of a universe that keeps the names of a mask observable."""
    return describe_names('tick', mask, u.vocab.names)


def describe_integration(base, a, b):
    """Describe the merge of two universes derived from base.

    The footprint holds the names of every cell either side changed or added
    and every name whose kind, depth or interpretation either side changed.
    """
    vocabulary = set(a.vocab.names) | set(b.vocab.names)
    touched = set()
    for side in (a, b):
        for cell in side.grid:
            original = base.grid.get(cell.identifier)
            if original is None or cell_to_line(original) != cell_to_line(cell):
                touched |= cell_names(cell, side.vocab)
        touched |= set(n for n in side.vocab.names
                       if base.vocab.get(n) != side.vocab.get(n))
        d0, d1 = base.registry.to_dict(), side.registry.to_dict()
        touched |= set(n for n in d1 if d0.get(n) != d1[n])
        for time, model in enumerate(side.models):
            past = base.models[time] if time <= base.t_max else None
            for name in model.interpreted:
                if past is None or past.interpretation(name) != \
                        model.interpretation(name):
                    touched.add(name)
    return describe_names('integrate', touched, vocabulary)


def classify_operation(descriptor):
    """Classify an operation as acting on the whole universe or on a part.

    Returns:
        OperationScale.MACROCOSM if the footprint covers the whole, non-empty
        vocabulary and OperationScale.MICROCOSM otherwise.
    """
    if descriptor.vocabulary and descriptor.vocabulary <= descriptor.footprint:
        return OperationScale.MACROCOSM
    return OperationScale.MICROCOSM


@dataclass(frozen=True)
class CodomainReport:
    """Whether every predicate cell of a universe can be settled at its latest time."""
    verifiable: bool
    offending: Tuple[Tuple[str, FrozenSet[str]], ...]


def codomain_check(u, judgments=None):
    """Check that every predicate cell can be evaluated at the latest time.

    A cell offends when it names something the model at t_max does not
    interpret. Carriers of models are finite sets, so an interpreted carrier
    never offends.

    Args:
        u: A Universe.
        judgments: An optional dictionary of JudgmentFns whose predicate names
            count as interpreted.

    Returns:
        A CodomainReport listing offending cells in id order with their missing
        names.
    """
    model = u.view(u.t_max)
    judged = set(judgments or ())
    offending = []
    for cell in u.grid:
        if not isinstance(cell.content, PredicateState):
            continue
        missing = frozenset(n for n in symbols(cell.content.expr)
                            if n not in judged and not model.is_interpreted(n))
        if missing:
            offending.append((cell.identifier, missing))
    return CodomainReport(not offending, tuple(offending))
