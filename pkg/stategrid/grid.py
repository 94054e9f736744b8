# coding=utf-8
"""The hierarchical state grid: coordinates, cells and the cell store."""
from __future__ import division
import re
from dataclasses import dataclass
from typing import Any, ClassVar, Optional

from honeybee.typing import int_in_range, valid_string

from .truth import TriValue, TRUE, UNDEFINABLE
from .errors import DuplicateCellError, GridStructureError

STRUCTURE_TAG = 'structure'
EXISTENCE_TAG = 'existence'
UNTRANSLATED_TAG = 'untranslated'
_TAG_PATTERN = re.compile(r'^[A-Za-z0-9_-]+$')
_DIGITS = re.compile(r'(\d+)')


def natural_key(identifier):
    """Sort key that orders ids by their embedded numbers (c2 before c10)."""
    return tuple(
        (0, int(part), '') if part.isdigit() else (1, 0, part)
        for part in _DIGITS.split(identifier) if part != '')


class Coordinate(object):
    """A (state depth, mapping hierarchy, time) address on the grid.

    Args:
        depth: Non-negative integer for the state depth.
        hierarchy: Non-negative integer for the mapping hierarchy.
        time: Non-negative integer for the real-time index. (Default: 0).

    Properties:
        * depth
        * hierarchy
        * time
    """
    __slots__ = ('_depth', '_hierarchy', '_time')

    def __init__(self, depth, hierarchy, time=0):
        self._depth = int_in_range(depth, 0, input_name='coordinate depth')
        self._hierarchy = int_in_range(hierarchy, 0, input_name='coordinate hierarchy')
        self._time = int_in_range(time, 0, input_name='coordinate time')

    @classmethod
    def from_text(cls, text):
        """Create a Coordinate from text like "(5,3,0)"."""
        clean = text.strip()
        assert clean.startswith('(') and clean.endswith(')'), \
            'Coordinate text must be enclosed in parentheses. Got "{}".'.format(text)
        parts = [p.strip() for p in clean[1:-1].split(',')]
        assert len(parts) in (2, 3), \
            'Coordinate text must have 2 or 3 components. Got "{}".'.format(text)
        assert all(p.isdigit() for p in parts), \
            'Coordinate components must be natural numbers. Got "{}".'.format(text)
        return cls(*(int(p) for p in parts))

    @property
    def depth(self):
        """Get the state depth."""
        return self._depth

    @property
    def hierarchy(self):
        """Get the mapping hierarchy."""
        return self._hierarchy

    @property
    def time(self):
        """Get the real-time index."""
        return self._time

    def at_time(self, time):
        """Get a copy of this coordinate moved to another time."""
        return Coordinate(self._depth, self._hierarchy, time)

    def to_tuple(self):
        """Get the coordinate as a (depth, hierarchy, time) tuple."""
        return (self._depth, self._hierarchy, self._time)

    def to_text(self):
        """Get the coordinate as text like "(5,3,0)"."""
        return '({},{},{})'.format(self._depth, self._hierarchy, self._time)

    def __key(self):
        return (self._depth, self._hierarchy, self._time)

    def __hash__(self):
        return hash(self.__key())

    def __eq__(self, other):
        return isinstance(other, Coordinate) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        return self.__key() < other.__key()

    def __repr__(self):
        return 'Coordinate({}, {}, {})'.format(*self.__key())


@dataclass(frozen=True)
class GroundSet:
    """Cell content for a label-like state such as a base set."""
    name: str
    kind: ClassVar[str] = 'ground'


@dataclass(frozen=True)
class MappingDecl:
    """Cell content declaring a mapping over a domain cell."""
    name: str
    arity: int
    domain: Optional[str] = None
    kind: ClassVar[str] = 'mapdecl'


@dataclass(frozen=True)
class PredicateState:
    """Cell content holding a predicate expression."""
    expr: Any
    kind: ClassVar[str] = 'pred'


@dataclass(frozen=True)
class TruthResult:
    """Cell content holding a truth value."""
    value: TriValue
    kind: ClassVar[str] = 'truth'


CONTENT_TYPES = (GroundSet, MappingDecl, PredicateState, TruthResult)


def content_name(content):
    """Get the declared name of a ground or mapping cell content (or None)."""
    if isinstance(content, (GroundSet, MappingDecl)):
        return content.name
    return None


class StateCell(object):
    """A state placed on the grid.

    Args:
        identifier: Text for the unique id of the cell.
        coordinate: The Coordinate of the cell.
        label: Human-readable text for the cell. It cannot contain line breaks.
        content: One of GroundSet, MappingDecl, PredicateState or TruthResult.
        definability: TRUE or UNDEFINABLE. (Default: TRUE).
        tags: An iterable of text tags (eg. existence, structure). (Default: None).

    Properties:
        * identifier
        * coordinate
        * label
        * content
        * definability
        * tags
    """
    __slots__ = ('_identifier', '_coordinate', '_label', '_content',
                 '_definability', '_tags')

    def __init__(self, identifier, coordinate, label, content,
                 definability=TRUE, tags=None):
        self._identifier = valid_string(identifier, 'cell identifier')
        assert isinstance(coordinate, Coordinate), 'Expected Coordinate for cell ' \
            'coordinate. Got {}.'.format(type(coordinate))
        self._coordinate = coordinate
        if '\n' in label or '\r' in label:
            raise GridStructureError(
                'Label of cell "{}" contains a line break.'.format(identifier))
        self._label = label
        if not isinstance(content, CONTENT_TYPES):
            raise GridStructureError(
                'Content of cell "{}" is not a grid content type. Got {}.'.format(
                    identifier, type(content)))
        self._content = content
        if definability not in (TRUE, UNDEFINABLE):
            raise GridStructureError(
                'Definability of cell "{}" must be true or undef. Got {}.'.format(
                    identifier, definability))
        self._definability = definability
        tags = frozenset(tags or ())
        for tag in tags:
            if not _TAG_PATTERN.match(tag):
                raise GridStructureError(
                    'Tag "{}" of cell "{}" is not a plain word.'.format(tag, identifier))
        self._tags = tags
        self._check_content()

    def _check_content(self):
        """Check the rules that tie content to coordinates and tags."""
        if isinstance(self._content, TruthResult):
            if self._coordinate.depth != 1:
                raise GridStructureError(
                    'Truth cell "{}" must sit at state depth 1. Got {}.'.format(
                        self._identifier, self._coordinate.depth))
        if isinstance(self._content, MappingDecl):
            int_in_range(self._content.arity, 1, input_name='mapping arity')
            if self._coordinate.hierarchy > 0 and self._content.domain is None:
                raise GridStructureError(
                    'Mapping cell "{}" at hierarchy {} must name its domain.'.format(
                        self._identifier, self._coordinate.hierarchy))
        if STRUCTURE_TAG in self._tags and \
                not isinstance(self._content, PredicateState):
            raise GridStructureError(
                'Structure cell "{}" must hold a predicate state.'.format(
                    self._identifier))

    @property
    def identifier(self):
        """Get the unique id of the cell."""
        return self._identifier

    @property
    def coordinate(self):
        """Get the Coordinate of the cell."""
        return self._coordinate

    @property
    def label(self):
        """Get the label of the cell."""
        return self._label

    @property
    def content(self):
        """Get the content of the cell."""
        return self._content

    @property
    def definability(self):
        """Get the definability of the cell (TRUE or UNDEFINABLE)."""
        return self._definability

    @property
    def tags(self):
        """Get a frozenset of the tags of the cell."""
        return self._tags

    def _new(self, **kwargs):
        args = {
            'identifier': self._identifier, 'coordinate': self._coordinate,
            'label': self._label, 'content': self._content,
            'definability': self._definability, 'tags': self._tags
        }
        args.update(kwargs)
        return StateCell(**args)

    def with_content(self, content):
        """Get a copy of this cell with different content."""
        return self._new(content=content)

    def with_definability(self, definability):
        """Get a copy of this cell with a different definability."""
        return self._new(definability=definability)

    def with_tags(self, tags):
        """Get a copy of this cell with a different set of tags."""
        return self._new(tags=tags)

    def with_label(self, label):
        """Get a copy of this cell with a different label."""
        return self._new(label=label)

    def moved(self, identifier, coordinate):
        """Get a copy of this cell under a new id and coordinate."""
        return self._new(identifier=identifier, coordinate=coordinate)

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def __copy__(self):
        return self._new()

    def __key(self):
        return (self._identifier, self._coordinate, self._label, self._content,
                self._definability, self._tags)

    def __hash__(self):
        return hash(self.__key())

    def __eq__(self, other):
        return isinstance(other, StateCell) and self.__key() == other.__key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'StateCell: {} {} [{}]'.format(
            self._identifier, self._coordinate.to_text(), self._content.kind)


class Grid(object):
    """An immutable store of StateCells indexed by id and by coordinate.

    Args:
        cells: An iterable of StateCells. Ids must be unique. Every mapping
            cell above hierarchy 0 must name a domain cell one hierarchy below.

    Properties:
        * cells
        * coordinates
    """
    __slots__ = ('_cells', '_index')

    def __init__(self, cells=()):
        self._cells = {}
        self._index = {}
        for cell in cells:
            self._insert(cell)
        for cell in self._cells.values():
            self._check_domain(cell)

    def _insert(self, cell):
        assert isinstance(cell, StateCell), \
            'Expected StateCell for grid. Got {}.'.format(type(cell))
        if cell.identifier in self._cells:
            raise DuplicateCellError(cell.identifier)
        self._cells[cell.identifier] = cell
        self._index.setdefault(cell.coordinate, set()).add(cell.identifier)

    def _check_domain(self, cell):
        """Check that a mapping cell's domain sits one hierarchy below it.

        Untranslated cells still name their domain in the source language and
        are not checked.
        """
        content = cell.content
        if not isinstance(content, MappingDecl) or cell.coordinate.hierarchy == 0 \
                or UNTRANSLATED_TAG in cell.tags:
            return
        below = cell.coordinate.hierarchy - 1
        for other in self._cells.values():
            if content_name(other.content) == content.domain and \
                    other.coordinate.hierarchy == below:
                return
        raise GridStructureError(
            'Mapping cell "{}" names domain "{}" but no cell of that name sits at '
            'hierarchy {}.'.format(cell.identifier, content.domain, below))

    @property
    def cells(self):
        """Get a tuple of all cells sorted by id."""
        return tuple(self._cells[i] for i in sorted(self._cells, key=natural_key))

    @property
    def coordinates(self):
        """Get a sorted tuple of all occupied coordinates."""
        return tuple(sorted(self._index))

    def put(self, cell):
        """Get a new grid with a cell added.

        Args:
            cell: A StateCell whose id is not yet in the grid.

        Returns:
            A new Grid. This grid is left unchanged.
        """
        if cell.identifier in self._cells:
            raise DuplicateCellError(cell.identifier)
        new_grid = self._copy()
        new_grid._insert(cell)
        new_grid._check_domain(cell)
        return new_grid

    def replace(self, cell):
        """Get a new grid where the cell with the same id is swapped for this one."""
        assert cell.identifier in self._cells, \
            'No cell "{}" to replace in the grid.'.format(cell.identifier)
        return Grid(cell if c.identifier == cell.identifier else c
                    for c in self._cells.values())

    def at(self, coordinate):
        """Get a frozenset of the cells whose coordinate equals the input."""
        ids = self._index.get(coordinate, ())
        return frozenset(self._cells[i] for i in ids)

    def cell(self, identifier):
        """Get a cell by id, raising a KeyError if it is not in the grid."""
        try:
            return self._cells[identifier]
        except KeyError:
            raise KeyError('No cell "{}" in the grid.'.format(identifier))

    def get(self, identifier, default=None):
        """Get a cell by id or a default when it is absent."""
        return self._cells.get(identifier, default)

    def _copy(self):
        new_grid = Grid.__new__(Grid)
        new_grid._cells = dict(self._cells)
        new_grid._index = {k: set(v) for k, v in self._index.items()}
        return new_grid

    def __contains__(self, identifier):
        return identifier in self._cells

    def __len__(self):
        return len(self._cells)

    def __iter__(self):
        return iter(self.cells)

    def __eq__(self, other):
        return isinstance(other, Grid) and self._cells == other._cells

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(frozenset(self._cells.values()))

    def ToString(self):
        return self.__repr__()

    def __repr__(self):
        return 'Grid: {} cells at {} coordinates'.format(
            len(self._cells), len(self._index))
