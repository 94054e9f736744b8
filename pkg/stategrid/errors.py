# coding=utf-8
"""Exceptions raised by stategrid operations.

Every error derives from StateGridError, which is a ValueError so that callers
validating input the usual way keep catching it.
"""


class StateGridError(ValueError):
    """Base class for all stategrid errors."""


class DuplicateCellError(StateGridError):
    """Raised when a cell id is already present in a grid."""

    def __init__(self, identifier):
        self.identifier = identifier
        StateGridError.__init__(
            self, 'Cell "{}" is already present in the grid.'.format(identifier))


class GridStructureError(StateGridError):
    """Raised when a cell breaks a structural rule of the grid."""


class PredicateSyntaxError(StateGridError):
    """Raised when predicate text does not follow the grammar."""

    def __init__(self, position, expected, text=None):
        self.position = position
        self.expected = expected
        msg = 'Syntax error at position {}: expected {}.'.format(position, expected)
        if text is not None:
            msg = '{}\n  {}\n  {}^'.format(msg, text, ' ' * position)
        StateGridError.__init__(self, msg)


class UnknownSymbolError(StateGridError):
    """Raised when a name is not declared in the vocabulary."""

    def __init__(self, name):
        self.name = name
        StateGridError.__init__(self, 'Unknown symbol "{}".'.format(name))


class ArityMismatchError(StateGridError):
    """Raised when a mapping is applied to the wrong number of arguments."""

    def __init__(self, name, got, want):
        self.name = name
        self.got = got
        self.want = want
        StateGridError.__init__(
            self, '"{}" takes {} argument(s) but {} were given.'.format(name, want, got))


class UnregisteredSymbolError(StateGridError):
    """Raised when a placed name has no entry in the depth registry."""

    def __init__(self, name):
        self.name = name
        StateGridError.__init__(
            self, 'Symbol "{}" has no state depth in the registry.'.format(name))


class UnboundVariableError(StateGridError):
    """Raised when an evaluated name is neither bound nor declared."""

    def __init__(self, name):
        self.name = name
        StateGridError.__init__(
            self, 'Name "{}" is neither bound nor declared by the model.'.format(name))


class ObjectNotFreeError(StateGridError):
    """Raised when a judgment's object parameter is not free in its body."""

    def __init__(self, name):
        self.name = name
        StateGridError.__init__(
            self, 'Object "{}" does not occur free in the judgment body.'.format(name))


class SubsetViolationError(StateGridError):
    """Raised when a declared sub-family is not contained in its family."""

    def __init__(self, name, index):
        self.name = name
        self.index = index
        StateGridError.__init__(
            self, 'Family "{}" is not a subset of the input family at index {}.'.format(
                name, index))


class EvaluationTypeError(StateGridError):
    """Raised when a value is used with an operation it does not support."""


class KindMismatchError(StateGridError):
    """Raised when a name is given two different kinds."""

    def __init__(self, name):
        self.name = name
        StateGridError.__init__(
            self, 'Symbol "{}" is mapped or merged across different kinds.'.format(name))


class TranslationMapError(StateGridError):
    """Raised when a translation map does not apply to a universe."""


class UnrelatedUniversesError(StateGridError):
    """Raised when two universes do not derive from the same base."""


class UnknownMaskEntryError(StateGridError):
    """Raised when an observability mask names nothing in the universe."""

    def __init__(self, entries):
        self.entries = tuple(sorted(entries))
        StateGridError.__init__(
            self, 'Mask entries name no symbol or cell: {}.'.format(
                ', '.join(self.entries)))


class NotAFuturePredictionError(StateGridError):
    """Raised when a prediction targets a time that is already materialized."""

    def __init__(self, target, t_max):
        self.target = target
        self.t_max = t_max
        StateGridError.__init__(
            self, 'Prediction target time {} is not after the current time {}.'.format(
                target, t_max))


class TimeNotMaterializedError(StateGridError):
    """Raised when evaluation is requested at a time beyond the universe."""

    def __init__(self, time, t_max):
        self.time = time
        self.t_max = t_max
        StateGridError.__init__(
            self, 'time {} not materialized (latest time is {})'.format(time, t_max))


class DocumentFormatError(StateGridError):
    """Raised when a universe or map document is malformed."""

    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        StateGridError.__init__(self, 'line {}: {}'.format(line, reason))


class VersionMismatchError(StateGridError):
    """Raised when a document was written by another format version."""

    def __init__(self, found, expected):
        self.found = found
        self.expected = expected
        StateGridError.__init__(
            self, 'Document version "{}" is not supported (expected "{}").'.format(
                found, expected))
