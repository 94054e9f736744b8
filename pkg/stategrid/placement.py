# coding=utf-8
"""Place every component of a definition on the hierarchical state grid.

Mapping hierarchy is computed from the shape of the expression while state
depth is the maximum registry depth found in each sub-tree. Two composition
modes exist. In transparent mode connectives and quantifiers sit at the
hierarchy of their highest part. In elevating mode every composition layer
adds one, with a chain of the same associative connective counting as one
layer. A judgment wrapper always adds one.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from .config import defaults
from .expression import Expr, Atom, RationalLit, SetLit, TupleLit, App, Card, \
    AbsDiff, Cmp, Member, SubsetOf, Not, And, Or, Implies, Forall, Exists, AtTime, \
    Judge, children, index_offset, to_text
from .grid import Coordinate, Grid, StateCell, GroundSet, PredicateState, \
    TruthResult, natural_key
from .truth import UNDEFINABLE
from .vocabulary import FIELD_OPERATIONS, INDEX_NAME, SUCCESSOR_NAME

TRANSPARENT = 'transparent'
ELEVATING = 'elevating'
MODES = (TRANSPARENT, ELEVATING)

ROLE_NODE = 'node'
ROLE_SYMBOL = 'symbol'
ROLE_INDEX = 'index'
ROLE_CODOMAIN = 'codomain'
_ROLE_ORDER = {ROLE_NODE: 0, ROLE_SYMBOL: 1, ROLE_INDEX: 2, ROLE_CODOMAIN: 3}
REPORT_HEADER = 'depth\thierarchy\ttime\tlabels'


@dataclass(frozen=True)
class PlacedComponent:
    """One component of a definition together with its grid coordinate.

    The path is the position of the owning syntax node. Nodes carry the role
    node. Operator symbols, time indices and judgment codomains that the node
    uses carry the roles symbol, index and codomain.
    """
    path: Tuple[int, ...]
    role: str
    label: str
    symbol: Optional[str]
    expr: Expr
    coordinate: Coordinate


class Placement(object):
    """The result of placing an expression on the grid.

    Args:
        components: An iterable of PlacedComponents.
        mode: The composition mode used (transparent or elevating).
        time: The time index at which the expression was placed.

    Properties:
        * components
        * assignments
        * coordinates
        * mode
        * time
        * root
    """
    __slots__ = ('_components', '_mode', '_time')

    def __init__(self, components, mode, time):
        self._components = tuple(components)
        self._mode = mode
        self._time = time

    @property
    def components(self):
        """Get a tuple of all placed components in pre-order."""
        return self._components

    @property
    def assignments(self):
        """Get a dictionary from syntax node paths to their Coordinates."""
        return {c.path: c.coordinate for c in self._components if c.role == ROLE_NODE}

    @property
    def coordinates(self):
        """Get a frozenset of every Coordinate used by a component."""
        return frozenset(c.coordinate for c in self._components)

    @property
    def mode(self):
        return self._mode

    @property
    def time(self):
        return self._time

    @property
    def root(self):
        """Get the Coordinate of the whole expression."""
        return self.assignments[()]

    def at(self, coordinate):
        """Get a tuple of the components placed at a Coordinate."""
        return tuple(c for c in self._components if c.coordinate == coordinate)

    def __eq__(self, other):
        return isinstance(other, Placement) and \
            (self._components, self._mode, self._time) == \
            (other._components, other._mode, other._time)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._components, self._mode, self._time))

    def __len__(self):
        return len(self._components)

    def __repr__(self):
        return 'Placement: {} components at {} coordinates ({})'.format(
            len(self._components), len(self.coordinates), self._mode)


def hierarchy_of(e, mode=None, vocabulary=None):
    """Get the mapping hierarchy of an expression.

    Args:
        e: An Expr.
        mode: Text for the composition mode, either transparent or elevating.
            If None, the default mode of the stategrid config is used.
        vocabulary: An optional Vocabulary used to recognize atoms that name
            mappings and applications of predicates.

    Returns:
        A non-negative integer.
    """
    return _Placer(None, _check_mode(mode), 0, vocabulary, False).visit(e, (), {})[1]


def place(e, registry, mode=None, time=0, vocabulary=None, time_axis=False):
    """Place every component of an expression on the grid.

    Args:
        e: An Expr.
        registry: A DepthRegistry with a depth for every name used by e.
        mode: Text for the composition mode, either transparent or elevating.
            If None, the default mode of the stategrid config is used.
        time: Non-negative integer for the time coordinate. (Default: 0).
        vocabulary: An optional Vocabulary used to recognize atoms that name
            mappings and applications of predicates.
        time_axis: Boolean to note whether time-indexed references should be
            placed along the time axis instead of through the index mapping.
            When True, I@(i+1) is placed at time + 1 and the index symbols are
            left out. (Default: False).

    Returns:
        A Placement.
    """
    assert isinstance(time, int) and time >= 0, \
        'Placement time must be a non-negative integer. Got {}.'.format(time)
    mode = _check_mode(mode)
    placer = _Placer(registry, mode, time, vocabulary, time_axis)
    placer.visit(e, (), {})
    return Placement(placer.components, mode, time)


def _check_mode(mode):
    mode = defaults.placement_mode if mode is None else mode
    assert mode in MODES, 'Placement mode must be one of {}. Got "{}".'.format(
        MODES, mode)
    return mode


class _Placer(object):
    """Single bottom-up pass computing depth and hierarchy of every node."""

    def __init__(self, registry, mode, time, vocabulary, time_axis):
        self.registry = registry
        self.mode = mode
        self.time = time
        self.vocabulary = vocabulary
        self.time_axis = time_axis
        self.components = []

    def depth(self, name):
        return 0 if self.registry is None else self.registry.depth(name)

    def kind(self, name):
        if self.vocabulary is None:
            return None
        return self.vocabulary.get(name)

    def visit(self, e, path, scope):
        """Place a node and its sub-tree.

        Returns:
            A tuple of (depth, hierarchy, chain) where chain is the largest
            hierarchy among the operands of a flattened and/or chain.
        """
        node_index = len(self.components)
        self.components.append(None)
        inner_scope = scope
        if isinstance(e, (Forall, Exists)):
            inner_scope = dict(scope)
            inner_scope[e.var] = e.carrier
        results = [self.visit(child, path + (i,), inner_scope)
                   for i, child in enumerate(children(e))]
        child_depth = max([r[0] for r in results] or [0])
        child_h = max([r[1] for r in results] or [0])
        extra = []
        time = self.time
        own = []

        if isinstance(e, Atom):
            if e.name in scope:
                own.append(self.depth(scope[e.name]))
            else:
                own.append(self.depth(e.name))
            kind = self.kind(e.name) if e.name not in scope else None
            hierarchy = 1 if kind is not None and kind.is_mapping else 0
        elif isinstance(e, RationalLit):
            own.append(self.depth('rational'))
            hierarchy = 0
        elif isinstance(e, SetLit):
            if not e.elements:
                own.append(self.depth('set'))
            hierarchy = 0
        elif isinstance(e, TupleLit):
            hierarchy = 0
        elif isinstance(e, AtTime):
            offset = index_offset(e.index)
            family_depth = self.depth(e.family)
            own.append(family_depth)
            if self.time_axis:
                time = e.index if offset is None else self.time + offset
            extra.append((ROLE_SYMBOL, e.family, family_depth, 0, time))
            if not self.time_axis:
                index_depth = self.depth(INDEX_NAME)
                own.append(index_depth)
                label = INDEX_NAME if offset is not None else str(e.index)
                extra.append((ROLE_INDEX, label, index_depth, 0, time))
                if offset == 1:
                    succ_depth = self.depth(SUCCESSOR_NAME)
                    own.append(succ_depth)
                    extra.append((ROLE_INDEX, SUCCESSOR_NAME, succ_depth, 1, time))
            hierarchy = 0
        elif isinstance(e, App):
            fn_depth = self.depth(e.fn)
            own.append(fn_depth)
            kind = self.kind(e.fn)
            if e.fn not in FIELD_OPERATIONS and kind is not None and kind.is_predicate:
                hierarchy = 1 + child_h
                extra.append((ROLE_SYMBOL, e.fn, fn_depth, 2, time))
            else:
                hierarchy = max(1, child_h)
                extra.append((ROLE_SYMBOL, e.fn, fn_depth, 1, time))
        elif isinstance(e, AbsDiff):
            for name in ('abs', '-'):
                own.append(self.depth(name))
                extra.append((ROLE_SYMBOL, name, self.depth(name), 1, time))
            hierarchy = max(1, child_h)
        elif isinstance(e, Card):
            own.append(self.depth('card'))
            extra.append((ROLE_SYMBOL, 'card', self.depth('card'), 1, time))
            hierarchy = 1 + child_h
        elif isinstance(e, Cmp):
            own.append(self.depth(e.op))
            extra.append((ROLE_SYMBOL, e.op, self.depth(e.op), 2, time))
            hierarchy = 1 + child_h
        elif isinstance(e, Member):
            own.append(self.depth('in'))
            hierarchy = 1 + child_h
        elif isinstance(e, SubsetOf):
            own.append(self.depth('subset'))
            hierarchy = 1 + child_h
        elif isinstance(e, Judge):
            own.append(self.depth('Bool'))
            extra.append((ROLE_CODOMAIN, 'Bool', self.depth('Bool'), 0, time))
            hierarchy = 1 + child_h
        else:
            if isinstance(e, (Forall, Exists)):
                own.append(self.depth(e.carrier))
            hierarchy = child_h if self.mode == TRANSPARENT else 1 + child_h

        # a chain of the same associative connective is one composition layer
        chain = hierarchy
        if isinstance(e, (And, Or)):
            chain = max(r[2] if isinstance(c, type(e)) else r[1]
                        for c, r in zip(children(e), results))
            if self.mode == ELEVATING:
                hierarchy = 1 + chain

        depth = max(own + [child_depth])
        coordinate = Coordinate(depth, hierarchy, time)
        self.components[node_index] = PlacedComponent(
            path, ROLE_NODE, to_text(e), e.name if isinstance(e, Atom) else None,
            e, coordinate)
        for role, symbol, s_depth, s_hierarchy, s_time in extra:
            self.components.append(PlacedComponent(
                path, role, symbol, symbol, e,
                Coordinate(s_depth, s_hierarchy, s_time)))
        return depth, hierarchy, chain


def placement_to_grid(placement, labels=None):
    """Build a Grid with one cell for every coordinate of a Placement.

    Args:
        placement: A Placement.
        labels: An optional dictionary from (depth, hierarchy) tuples to the
            labels of the cells. Coordinates without a label are captioned
            with the text of their shallowest component.

    Returns:
        A Grid.
    """
    labels = labels or {}
    cells = []
    for coordinate in sorted(placement.coordinates):
        parts = placement.at(coordinate)
        rep = min(parts, key=lambda c: (_ROLE_ORDER[c.role], len(c.path), c.path))
        named = [c for c in parts if c.symbol is not None]
        label = labels.get((coordinate.depth, coordinate.hierarchy), rep.label)
        if coordinate.depth == 1 and coordinate.hierarchy == 0 and \
                any(c.role == ROLE_CODOMAIN for c in parts):
            content = TruthResult(UNDEFINABLE)
        elif coordinate.hierarchy == 0:
            name = min(named, key=lambda c: (len(c.path), c.path)).symbol \
                if named else 'set'
            content = GroundSet(name)
        else:
            content = PredicateState(rep.expr)
        identifier = 'p{}-{}-{}'.format(*coordinate.to_tuple())
        cells.append(StateCell(identifier, coordinate, label, content))
    return Grid(cells)


def report(grid):
    """Render a grid as a table of coordinates and labels.

    Rows are sorted by depth, hierarchy and time. Cells sharing a coordinate
    share a row with their labels comma-separated in id order.

    Returns:
        Text with one LF-terminated line per row after a header line.
    """
    lines = [REPORT_HEADER]
    for coordinate in grid.coordinates:
        cells = sorted(grid.at(coordinate), key=lambda c: natural_key(c.identifier))
        lines.append('{}\t{}\t{}\t{}'.format(
            coordinate.depth, coordinate.hierarchy, coordinate.time,
            ', '.join(c.label for c in cells)))
    return '\n'.join(lines) + '\n'
