# coding=utf-8
"""Syntax tree of the predicate definition language.

Nodes are frozen dataclasses so that equal trees compare and hash equal. The
canonical text of a tree comes from to_text and parses back to the same tree.
"""
from __future__ import division
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Tuple, Union

from .vocabulary import FIELD_OPERATIONS, INDEX_NAME

INDEX_CURRENT = 'i'
INDEX_NEXT = 'i+1'


class Expr(object):
    """Base class of all syntax tree nodes."""
    __slots__ = ()

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Atom(Expr):
    name: str


@dataclass(frozen=True)
class RationalLit(Expr):
    value: Fraction


@dataclass(frozen=True)
class SetLit(Expr):
    elements: Tuple[Expr, ...]


@dataclass(frozen=True)
class TupleLit(Expr):
    elements: Tuple[Expr, ...]


@dataclass(frozen=True)
class App(Expr):
    fn: str
    args: Tuple[Expr, ...]


@dataclass(frozen=True)
class Card(Expr):
    of: Expr


@dataclass(frozen=True)
class AbsDiff(Expr):
    a: Expr
    b: Expr


@dataclass(frozen=True)
class Cmp(Expr):
    op: str
    lhs: Expr
    rhs: Expr


@dataclass(frozen=True)
class Member(Expr):
    x: Expr
    s: Expr


@dataclass(frozen=True)
class SubsetOf(Expr):
    a: Expr
    b: Expr


@dataclass(frozen=True)
class Not(Expr):
    e: Expr


@dataclass(frozen=True)
class And(Expr):
    a: Expr
    b: Expr


@dataclass(frozen=True)
class Or(Expr):
    a: Expr
    b: Expr


@dataclass(frozen=True)
class Implies(Expr):
    a: Expr
    b: Expr


@dataclass(frozen=True)
class Forall(Expr):
    var: str
    carrier: str
    body: Expr


@dataclass(frozen=True)
class Exists(Expr):
    var: str
    carrier: str
    body: Expr


@dataclass(frozen=True)
class AtTime(Expr):
    family: str
    index: Union[str, int]


@dataclass(frozen=True)
class Judge(Expr):
    name: str
    body: Expr


QUANTIFIERS = (Forall, Exists)
CONNECTIVES = (Not, And, Or, Implies)
RELATIONS = (Cmp, Member, SubsetOf)


def rational(value):
    """Get a RationalLit from an int, a Fraction or text like "-3/4"."""
    return RationalLit(Fraction(value))


def index_offset(index):
    """Get the offset of an index from the current index i (None for literals)."""
    if index == INDEX_CURRENT:
        return 0
    if index == INDEX_NEXT:
        return 1
    return None


def children(e):
    """Get a tuple of the direct sub-expressions of a node."""
    if isinstance(e, (SetLit, TupleLit)):
        return e.elements
    if isinstance(e, App):
        return e.args
    if isinstance(e, (Atom, RationalLit, AtTime)):
        return ()
    if isinstance(e, Card):
        return (e.of,)
    if isinstance(e, Cmp):
        return (e.lhs, e.rhs)
    if isinstance(e, Member):
        return (e.x, e.s)
    if isinstance(e, Not):
        return (e.e,)
    if isinstance(e, (Forall, Exists, Judge)):
        return (e.body,)
    return (e.a, e.b)


def replace_children(e, new_children):
    """Get a copy of a node with its sub-expressions swapped for new ones."""
    new_children = tuple(new_children)
    if isinstance(e, (SetLit, TupleLit)):
        return type(e)(new_children)
    if isinstance(e, App):
        return App(e.fn, new_children)
    if isinstance(e, (Atom, RationalLit, AtTime)):
        return e
    child_fields = [f.name for f in fields(e) if isinstance(getattr(e, f.name), Expr)]
    values = {f.name: getattr(e, f.name) for f in fields(e)}
    values.update(zip(child_fields, new_children))
    return type(e)(**values)


def walk(e, path=()):
    """Yield (path, node) pairs in pre-order. The path lists child positions."""
    yield path, e
    for i, child in enumerate(children(e)):
        for item in walk(child, path + (i,)):
            yield item


def node_at(e, path):
    """Get the node found by following a path of child positions."""
    for i in path:
        e = children(e)[i]
    return e


def free_vars(e, bound=frozenset()):
    """Get the names a formula depends on that no enclosing quantifier binds.

    Quantifier carriers, builtin operators and the time index are not free
    variables. Mapping names in applications and family names in time-indexed
    references are.
    """
    if isinstance(e, Atom):
        if e.name in bound or e.name == INDEX_NAME:
            return frozenset()
        return frozenset((e.name,))
    if isinstance(e, AtTime):
        return frozenset((e.family,))
    if isinstance(e, (Forall, Exists)):
        return free_vars(e.body, bound | {e.var})
    result = frozenset()
    if isinstance(e, App) and e.fn not in FIELD_OPERATIONS:
        result = frozenset((e.fn,))
    for child in children(e):
        result = result | free_vars(child, bound)
    return result


def symbols(e):
    """Get every vocabulary name an expression refers to, carriers included."""
    result = free_vars(e)
    for _, node in walk(e):
        if isinstance(node, (Forall, Exists)):
            result = result | {node.carrier}
    return result


def rename(e, mapping):
    """Substitute vocabulary names throughout an expression.

    Bound variables are never renamed.

    Args:
        e: An Expr.
        mapping: A dictionary from old names to new names.

    Returns:
        A new Expr.
    """
    return _rename(e, mapping, frozenset())


def _rename(e, mapping, bound):
    if isinstance(e, Atom):
        if e.name in bound:
            return e
        return Atom(mapping.get(e.name, e.name))
    if isinstance(e, AtTime):
        return AtTime(mapping.get(e.family, e.family), e.index)
    if isinstance(e, (Forall, Exists)):
        return type(e)(e.var, mapping.get(e.carrier, e.carrier),
                       _rename(e.body, mapping, bound | {e.var}))
    if isinstance(e, App):
        fn = e.fn if e.fn in FIELD_OPERATIONS else mapping.get(e.fn, e.fn)
        return App(fn, tuple(_rename(a, mapping, bound) for a in e.args))
    return replace_children(e, (_rename(c, mapping, bound) for c in children(e)))


def expand_abs_diff(e):
    """Rewrite comparisons of absolute differences through the order relation.

    abs(a - b) < d becomes (a - b < d) and (b - a < d). Other uses of abs are
    left as they are.
    """
    new_e = replace_children(e, (expand_abs_diff(c) for c in children(e)))
    if isinstance(new_e, Cmp) and new_e.op == '<' and isinstance(new_e.lhs, AbsDiff):
        a, b = new_e.lhs.a, new_e.lhs.b
        return And(Cmp('<', App('-', (a, b)), new_e.rhs),
                   Cmp('<', App('-', (b, a)), new_e.rhs))
    return new_e


"""____________CANONICAL PRINTING____________"""

_QUANT, _IMP, _DISJ, _CONJ, _NEG, _CMP, _SUM, _TERM = range(8)


def to_text(e):
    """Get the canonical text of an expression."""
    return _fmt(e, _QUANT)


def _fmt(e, level):
    text, own = _render(e)
    return '({})'.format(text) if own < level else text


def _index_text(index):
    if index == INDEX_NEXT:
        return '(i+1)'
    return str(index)


def _render(e):
    if isinstance(e, Atom):
        return e.name, _TERM
    if isinstance(e, RationalLit):
        return str(e.value), _TERM
    if isinstance(e, AtTime):
        return '{}@{}'.format(e.family, _index_text(e.index)), _TERM
    if isinstance(e, SetLit):
        return '{{{}}}'.format(', '.join(_fmt(x, _QUANT) for x in e.elements)), _TERM
    if isinstance(e, TupleLit):
        return '({})'.format(', '.join(_fmt(x, _QUANT) for x in e.elements)), _TERM
    if isinstance(e, App):
        if e.fn in FIELD_OPERATIONS:
            a, b = e.args
            return '{} {} {}'.format(_fmt(a, _SUM), e.fn, _fmt(b, _TERM)), _SUM
        return '{}({})'.format(e.fn, ', '.join(_fmt(x, _QUANT) for x in e.args)), _TERM
    if isinstance(e, Card):
        return 'card({})'.format(_fmt(e.of, _TERM)), _TERM
    if isinstance(e, AbsDiff):
        return 'abs({} - {})'.format(_fmt(e.a, _SUM), _fmt(e.b, _TERM)), _TERM
    if isinstance(e, Judge):
        return 'judge {}({})'.format(e.name, _fmt(e.body, _QUANT)), _TERM
    if isinstance(e, Cmp):
        return '{} {} {}'.format(_fmt(e.lhs, _SUM), e.op, _fmt(e.rhs, _SUM)), _CMP
    if isinstance(e, Member):
        return '{} in {}'.format(_fmt(e.x, _SUM), _fmt(e.s, _SUM)), _CMP
    if isinstance(e, SubsetOf):
        return '{} subset {}'.format(_fmt(e.a, _SUM), _fmt(e.b, _SUM)), _CMP
    if isinstance(e, Not):
        return 'not {}'.format(_fmt(e.e, _NEG)), _NEG
    if isinstance(e, And):
        return '{} and {}'.format(_fmt(e.a, _CONJ), _fmt(e.b, _NEG)), _CONJ
    if isinstance(e, Or):
        return '{} or {}'.format(_fmt(e.a, _DISJ), _fmt(e.b, _CONJ)), _DISJ
    if isinstance(e, Implies):
        return '{} -> {}'.format(_fmt(e.a, _DISJ), _fmt(e.b, _IMP)), _IMP
    if isinstance(e, (Forall, Exists)):
        word = 'forall' if isinstance(e, Forall) else 'exists'
        return '{} {} in {} . {}'.format(
            word, e.var, e.carrier, _fmt(e.body, _QUANT)), _QUANT
    raise TypeError('Not an expression node: {}'.format(type(e)))
