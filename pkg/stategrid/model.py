# coding=utf-8
"""Finite models that interpret the names of a vocabulary."""
from __future__ import division
import re
from fractions import Fraction

_ATOM = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')


def value_key(value):
    """Sort key placing rationals before atoms before tuples before sets."""
    if isinstance(value, Fraction):
        return (0, value, '')
    if isinstance(value, int):
        return (0, Fraction(value), '')
    if isinstance(value, str):
        return (1, 0, value)
    if isinstance(value, tuple):
        return (2, 0, tuple(value_key(v) for v in value))
    return (3, 0, tuple(sorted(value_key(v) for v in value)))


def normalize_value(value):
    """Convert ints to Fractions recursively so that equal values compare equal.

    Atoms must be identifiers.
    """
    if isinstance(value, bool):
        raise TypeError('Truth values are not model values.')
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        if not _ATOM.fullmatch(value):
            raise ValueError('Atom "{}" must be an identifier made of letters, digits '
                             'and underscores.'.format(value))
        return value
    if isinstance(value, tuple):
        return tuple(normalize_value(v) for v in value)
    if isinstance(value, (set, frozenset, list)):
        return frozenset(normalize_value(v) for v in value)
    raise TypeError('Unsupported model value: {} ({}).'.format(value, type(value)))


class Model(object):
    """A finite interpretation of carrier sets, mappings and timed families.

    Args:
        carriers: A dictionary from carrier names to finite sets of values
            (rationals, atoms or tuples).
        mappings: A dictionary from mapping names to finite sets of tuples.
            Each tuple lists the arguments followed by the image.
        families: A dictionary from family names to dictionaries of time
            indices and finite sets.
        interpreted: An optional iterable of the names this model defines.
            If None, every name with an interpretation above is interpreted.
        declared: An optional iterable of names that are known but may lack an
            interpretation. Names that are neither declared nor interpreted are
            unbound. If None, the declared names are the interpreted ones.

    Properties:
        * carriers
        * mappings
        * families
        * interpreted
        * declared
    """
    __slots__ = ('_carriers', '_mappings', '_families', '_interpreted', '_declared')

    def __init__(self, carriers=None, mappings=None, families=None,
                 interpreted=None, declared=None):
        self._carriers = {n: normalize_value(v) for n, v in (carriers or {}).items()}
        self._mappings = {n: normalize_value(v) for n, v in (mappings or {}).items()}
        for name, graph in self._mappings.items():
            for pair in graph:
                assert isinstance(pair, tuple) and len(pair) >= 2, 'Mapping "{}" ' \
                    'must be a set of (argument(s), image) tuples.'.format(name)
        self._families = {
            n: {int(i): normalize_value(v) for i, v in seq.items()}
            for n, seq in (families or {}).items()}
        if interpreted is None:
            interpreted = set(self._carriers) | set(self._mappings) | \
                set(self._families)
        self._interpreted = frozenset(interpreted)
        declared = frozenset(declared) if declared is not None else frozenset()
        self._declared = declared | self._interpreted

    @property
    def carriers(self):
        return dict(self._carriers)

    @property
    def mappings(self):
        return dict(self._mappings)

    @property
    def families(self):
        return {n: dict(seq) for n, seq in self._families.items()}

    @property
    def interpreted(self):
        """Get a frozenset of the names this model defines."""
        return self._interpreted

    @property
    def declared(self):
        """Get a frozenset of the names this model knows about."""
        return self._declared

    def is_interpreted(self, name):
        return name in self._interpreted

    def is_declared(self, name):
        return name in self._declared

    def carrier(self, name):
        """Get the set of a carrier or None when it is not interpreted."""
        return self._carriers.get(name) if name in self._interpreted else None

    def graph(self, name):
        """Get the set of tuples of a mapping or None when it is not interpreted."""
        return self._mappings.get(name) if name in self._interpreted else None

    def family_at(self, name, index):
        """Get the set of a family at an index or None when it is unknown."""
        if name not in self._interpreted:
            return None
        return self._families.get(name, {}).get(index)

    def kind_of(self, name):
        """Get 'set', 'map' or 'family' for an interpreted name (else None)."""
        if name in self._carriers:
            return 'set'
        if name in self._mappings:
            return 'map'
        if name in self._families:
            return 'family'
        return None

    def interpretation(self, name):
        """Get a hashable (kind, value) pair for a name, or None if uninterpreted."""
        if name not in self._interpreted:
            return None
        kind = self.kind_of(name)
        if kind == 'set':
            return (kind, self._carriers[name])
        if kind == 'map':
            return (kind, self._mappings[name])
        if kind == 'family':
            return (kind, frozenset(self._families[name].items()))
        return None

    def with_interpretation(self, name, kind, value):
        """Get a new model with one name interpreted.

        Args:
            name: The name to interpret.
            kind: One of 'set', 'map' or 'family'.
            value: The set for carriers and mappings or a dictionary of indices
                to sets for families.
        """
        carriers, mappings, families = self.carriers, self.mappings, self.families
        for store in (carriers, mappings, families):
            store.pop(name, None)
        if kind == 'set':
            carriers[name] = value
        elif kind == 'map':
            mappings[name] = value
        elif kind == 'family':
            families[name] = value
        else:
            raise ValueError('Unknown interpretation kind "{}".'.format(kind))
        return Model(carriers, mappings, families, self._interpreted | {name},
                     self._declared)

    def without(self, names):
        """Get a new model where the input names are no longer interpreted."""
        names = frozenset(names)
        return Model(
            {n: v for n, v in self._carriers.items() if n not in names},
            {n: v for n, v in self._mappings.items() if n not in names},
            {n: v for n, v in self._families.items() if n not in names},
            self._interpreted - names, self._declared)

    def renamed(self, mapping, declared=None):
        """Get a model with names renamed and every unmapped name dropped."""
        def _move(store):
            return {mapping[n]: v for n, v in store.items() if n in mapping}
        return Model(
            _move(self._carriers), _move(self._mappings), _move(self._families),
            [mapping[n] for n in self._interpreted if n in mapping],
            declared)

    def with_declared(self, declared):
        """Get a copy of this model with a different set of declared names."""
        return Model(self._carriers, self._mappings, self._families,
                     self._interpreted, declared)

    def __key(self):
        return (self.interpretations(), self._interpreted, self._declared)

    def interpretations(self):
        """Get a frozenset of (name, kind, value) for every interpreted name."""
        items = []
        for name in self._interpreted:
            interp = self.interpretation(name)
            if interp is not None:
                items.append((name,) + interp)
        return frozenset(items)

    def __eq__(self, other):
        return isinstance(other, Model) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.__key())

    def __repr__(self):
        return 'Model: {} interpreted of {} declared'.format(
            len(self._interpreted), len(self._declared))
