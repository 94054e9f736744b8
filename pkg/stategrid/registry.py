# coding=utf-8
"""State depth registry.

State depth is assigned, not computed: every vocabulary name gets a depth from
its author and builtin symbols start from the defaults in config.json.
"""
from honeybee.typing import int_in_range

from .config import defaults
from .errors import UnregisteredSymbolError
from .vocabulary import BUILTINS


class DepthRegistry(object):
    """Map from symbol names to state depths.

    Args:
        entries: A dictionary of vocabulary names to non-negative depths.
        builtins: An optional dictionary overriding the depths of builtin
            symbols (eg. {'<': 2}). Builtins that are not overridden take
            their depth from the stategrid defaults.

    Properties:
        * entries
        * builtins
        * names
    """
    __slots__ = ('_entries', '_builtins')

    def __init__(self, entries=None, builtins=None):
        self._entries = {}
        self._builtins = defaults.builtin_depths
        for name, depth in (entries or {}).items():
            self._set(name, depth)
        for name, depth in (builtins or {}).items():
            assert name in BUILTINS, '"{}" is not a builtin symbol.'.format(name)
            self._set(name, depth)

    def _set(self, name, depth):
        depth = int_in_range(depth, 0, input_name='depth of "{}"'.format(name))
        if name in BUILTINS:
            self._builtins[name] = depth
        else:
            self._entries[name] = depth

    @classmethod
    def from_dict(cls, data):
        """Create a registry from one dictionary mixing builtin and other names."""
        entries = {n: d for n, d in data.items() if n not in BUILTINS}
        builtins = {n: d for n, d in data.items() if n in BUILTINS}
        return cls(entries, builtins)

    @property
    def entries(self):
        """Get a dictionary of the depths of non-builtin names."""
        return dict(self._entries)

    @property
    def builtins(self):
        """Get a dictionary of the depths of all builtin symbols."""
        return dict(self._builtins)

    @property
    def names(self):
        """Get a sorted tuple of every registered name, builtins included."""
        return tuple(sorted(set(self._entries) | set(self._builtins)))

    def depth(self, name):
        """Get the depth of a name, raising UnregisteredSymbolError if absent."""
        if name in self._entries:
            return self._entries[name]
        try:
            return self._builtins[name]
        except KeyError:
            raise UnregisteredSymbolError(name)

    def to_dict(self):
        """Get one dictionary of every registered name and its depth."""
        data = dict(self._builtins)
        data.update(self._entries)
        return data

    def with_depth(self, name, depth):
        """Get a new registry with one name set to a depth."""
        data = self.to_dict()
        data[name] = depth
        return DepthRegistry.from_dict(data)

    def renamed(self, mapping):
        """Get a registry with names renamed and unmapped vocabulary names dropped.

        Builtin depths are kept as they are.
        """
        entries = {mapping[n]: d for n, d in self._entries.items() if n in mapping}
        return DepthRegistry(entries, self._builtins)

    def __contains__(self, name):
        return name in self._entries or name in self._builtins

    def __eq__(self, other):
        return isinstance(other, DepthRegistry) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(frozenset(self.to_dict().items()))

    def __repr__(self):
        return 'DepthRegistry: {}'.format(
            ', '.join('{}={}'.format(n, self._entries[n]) for n in sorted(self._entries)))
