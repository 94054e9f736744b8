# coding=utf-8
"""Vocabularies: the words a definition universe is written in."""
import re
from dataclasses import dataclass
from typing import Optional

from .errors import KindMismatchError, UnknownSymbolError

KEYWORDS = frozenset((
    'forall', 'exists', 'in', 'and', 'or', 'not', 'card', 'abs', 'subset', 'judge'))
INDEX_NAME = 'i'
SUCCESSOR_NAME = 'succ'
RELATIONS = ('<', '>', '=', '<=', '>=')
FIELD_OPERATIONS = ('+', '-')
BUILTINS = frozenset(
    RELATIONS + FIELD_OPERATIONS +
    ('abs', 'card', 'in', 'subset', INDEX_NAME, SUCCESSOR_NAME, 'Bool', 'rational', 'set'))
_IDENTIFIER = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')


def valid_identifier(name, input_name='symbol name'):
    """Check that text is a plain identifier that is not reserved."""
    assert isinstance(name, str) and _IDENTIFIER.match(name), \
        'Illegal {} "{}". Use letters, digits and underscores.'.format(input_name, name)
    assert name not in KEYWORDS and name != INDEX_NAME, \
        'The {} "{}" is a reserved word.'.format(input_name, name)
    return name


@dataclass(frozen=True)
class SymbolKind:
    """The kind of a vocabulary entry.

    The tag is one of set, map, family or pred. Only mappings carry an arity.
    """
    tag: str
    arity: Optional[int] = None

    TAGS = ('set', 'map', 'family', 'pred')

    def __post_init__(self):
        assert self.tag in self.TAGS, \
            'Symbol kind must be one of {}. Got "{}".'.format(self.TAGS, self.tag)
        if self.tag == 'map':
            assert isinstance(self.arity, int) and self.arity >= 1, \
                'Mapping arity must be a positive integer. Got {}.'.format(self.arity)
        else:
            assert self.arity is None, 'Only mappings carry an arity.'

    @classmethod
    def from_text(cls, text):
        """Create a SymbolKind from text like set, family, pred or map:2."""
        if text.startswith('map:'):
            arity = text[4:]
            assert arity.isdigit(), 'Mapping arity must be a natural number. ' \
                'Got "{}".'.format(arity)
            return cls('map', int(arity))
        return cls(text)

    @property
    def is_carrier(self):
        return self.tag == 'set'

    @property
    def is_mapping(self):
        return self.tag == 'map'

    @property
    def is_family(self):
        return self.tag == 'family'

    @property
    def is_predicate(self):
        return self.tag == 'pred'

    def to_text(self):
        return 'map:{}'.format(self.arity) if self.tag == 'map' else self.tag

    def __str__(self):
        return self.to_text()


CARRIER = SymbolKind('set')
FAMILY = SymbolKind('family')
PREDICATE = SymbolKind('pred')


def mapping(arity):
    """Get the SymbolKind of a mapping with a given arity."""
    return SymbolKind('map', arity)


class Vocabulary(object):
    """An immutable set of declared names, each with a fixed kind.

    Args:
        entries: A dictionary of names to SymbolKinds (or kind text such as
            'set' or 'map:1').

    Properties:
        * names
        * entries
    """
    __slots__ = ('_entries',)

    def __init__(self, entries=None):
        self._entries = {}
        for name, kind in (entries or {}).items():
            if not isinstance(kind, SymbolKind):
                kind = SymbolKind.from_text(kind)
            self._entries[valid_identifier(name)] = kind

    @property
    def names(self):
        """Get a sorted tuple of all declared names."""
        return tuple(sorted(self._entries))

    @property
    def entries(self):
        """Get a dictionary of all names and their kinds."""
        return dict(self._entries)

    def kind(self, name):
        """Get the kind of a name, raising UnknownSymbolError if undeclared."""
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownSymbolError(name)

    def get(self, name, default=None):
        return self._entries.get(name, default)

    def names_of(self, tag):
        """Get a sorted tuple of the names of one kind tag (eg. 'family')."""
        return tuple(n for n in self.names if self._entries[n].tag == tag)

    def declare(self, name, kind):
        """Get a new vocabulary with one more name.

        Re-declaring a name with the same kind is allowed. Declaring it with a
        different kind raises KindMismatchError.
        """
        if not isinstance(kind, SymbolKind):
            kind = SymbolKind.from_text(kind)
        current = self._entries.get(name)
        if current is not None and current != kind:
            raise KindMismatchError(name)
        entries = dict(self._entries)
        entries[name] = kind
        return Vocabulary(entries)

    def union(self, other):
        """Get the union of two vocabularies that agree on shared kinds."""
        entries = dict(self._entries)
        for name, kind in other._entries.items():
            if name in entries and entries[name] != kind:
                raise KindMismatchError(name)
            entries[name] = kind
        return Vocabulary(entries)

    def restricted(self, names):
        """Get a vocabulary with only the names in the input."""
        return Vocabulary({n: k for n, k in self._entries.items() if n in names})

    def __contains__(self, name):
        return name in self._entries

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other):
        return isinstance(other, Vocabulary) and self._entries == other._entries

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self):
        return 'Vocabulary: {}'.format(
            ', '.join('{}:{}'.format(n, self._entries[n]) for n in self.names))
