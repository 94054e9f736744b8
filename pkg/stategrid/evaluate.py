# coding=utf-8
"""Evaluate predicate expressions over finite models.

Evaluation is three-valued. A sub-expression that mentions a declared name the
model does not interpret is UNDEFINABLE and its parents combine it with the
strong Kleene connectives, so a FALSE conjunct or a TRUE disjunct still
decides. A name that is neither bound nor declared is a malformed query and
raises UnboundVariableError. Quantifiers range over the named finite carrier
and fold their branches with the same connectives.
"""
from __future__ import division
from fractions import Fraction

from .errors import UnboundVariableError, EvaluationTypeError, ObjectNotFreeError
from .expression import Atom, RationalLit, SetLit, TupleLit, App, Card, AbsDiff, \
    Cmp, Member, SubsetOf, Not, And, Or, Implies, Forall, Exists, AtTime, Judge, \
    index_offset, free_vars, symbols, rename, to_text
from .model import value_key, normalize_value
from .truth import TriValue, UNDEFINABLE, TRUE, FALSE, not3, and3, or3, implies3, \
    all3, any3
from .vocabulary import FIELD_OPERATIONS, INDEX_NAME


class _Undefined(object):
    """Marker for a term whose value the model does not determine."""
    __slots__ = ()

    def __repr__(self):
        return 'Undefined'


UNDEFINED = _Undefined()


def evaluate(e, model, env=None, judgments=None):
    """Evaluate a formula over a finite model.

    Args:
        e: An Expr for a formula.
        model: A Model.
        env: An optional dictionary binding variables to values. The time index
            is bound under the name i.
        judgments: An optional dictionary from predicate names to JudgmentFns
            used to evaluate predicate applications.

    Returns:
        A TriValue.
    """
    env = {n: v if n == INDEX_NAME else normalize_value(v)
           for n, v in (env or {}).items()}
    judgments = judgments or {}
    for name in sorted(symbols(e)):
        if name not in env and name not in judgments and \
                not model.is_declared(name):
            raise UnboundVariableError(name)
    return _Evaluator(model, judgments).truth(e, env)


def func_check(name, model):
    """Check that a mapping gives every argument a single image.

    Args:
        name: The name of a mapping.
        model: A Model.

    Returns:
        TRUE if every argument has a unique image, FALSE if one has two or more
        and UNDEFINABLE if the model does not interpret the mapping.
    """
    graph = model.graph(name)
    if graph is None:
        return UNDEFINABLE
    images = {}
    for pair in graph:
        args, image = pair[:-1], pair[-1]
        if images.setdefault(args, image) != image:
            return FALSE
    return TRUE


class _Evaluator(object):
    """Recursive evaluator bound to one model."""

    def __init__(self, model, judgments):
        self.model = model
        self.judgments = judgments

    def truth(self, e, env):
        """Evaluate a formula to a TriValue."""
        if isinstance(e, Not):
            return not3(self.truth(e.e, env))
        if isinstance(e, And):
            return and3(self.truth(e.a, env), self.truth(e.b, env))
        if isinstance(e, Or):
            return or3(self.truth(e.a, env), self.truth(e.b, env))
        if isinstance(e, Implies):
            return implies3(self.truth(e.a, env), self.truth(e.b, env))
        if isinstance(e, (Forall, Exists)):
            values = self.model.carrier(e.carrier)
            if values is None:
                return UNDEFINABLE
            fold = all3 if isinstance(e, Forall) else any3
            return fold(self.truth(e.body, _bind(env, e.var, v))
                        for v in sorted(values, key=value_key))
        if isinstance(e, Judge):
            return self.truth(e.body, env)
        if isinstance(e, Cmp):
            return self.compare(e, env)
        if isinstance(e, Member):
            x, s = self.value(e.x, env), self.value(e.s, env)
            if x is UNDEFINED or s is UNDEFINED:
                return UNDEFINABLE
            _require_set(s, e.s)
            return TriValue.from_bool(x in s)
        if isinstance(e, SubsetOf):
            a, b = self.value(e.a, env), self.value(e.b, env)
            if a is UNDEFINED or b is UNDEFINED:
                return UNDEFINABLE
            _require_set(a, e.a)
            _require_set(b, e.b)
            return TriValue.from_bool(a <= b)
        if isinstance(e, App) and e.fn in self.judgments:
            return self.judge(e, env)
        if isinstance(e, App) and e.fn not in FIELD_OPERATIONS and \
                self.model.kind_of(e.fn) is None:
            return UNDEFINABLE  # a predicate with no judgment to decide it
        raise EvaluationTypeError(
            '"{}" is a term where a formula was expected.'.format(to_text(e)))

    def compare(self, e, env):
        lhs, rhs = self.value(e.lhs, env), self.value(e.rhs, env)
        if lhs is UNDEFINED or rhs is UNDEFINED:
            return UNDEFINABLE
        if e.op == '=':
            return TriValue.from_bool(lhs == rhs)
        _require_rational(lhs, e.lhs)
        _require_rational(rhs, e.rhs)
        if e.op == '<':
            return TriValue.from_bool(lhs < rhs)
        if e.op == '>':
            return TriValue.from_bool(lhs > rhs)
        if e.op == '<=':
            return TriValue.from_bool(lhs <= rhs)
        return TriValue.from_bool(lhs >= rhs)

    def judge(self, e, env):
        if len(e.args) != 1 or not isinstance(e.args[0], Atom):
            raise EvaluationTypeError(
                'Judgment "{}" must be applied to a single symbol.'.format(e.fn))
        inner_env = {INDEX_NAME: env[INDEX_NAME]} if INDEX_NAME in env else None
        return self.judgments[e.fn].apply(
            self.model, e.args[0].name, inner_env, self.judgments)

    def index(self, index, env):
        offset = index_offset(index)
        if offset is None:
            return index
        if INDEX_NAME not in env:
            raise UnboundVariableError(INDEX_NAME)
        return int(env[INDEX_NAME]) + offset

    def value(self, e, env):
        """Evaluate a term to a model value or UNDEFINED."""
        if isinstance(e, Atom):
            return self.atom(e.name, env)
        if isinstance(e, RationalLit):
            return e.value
        if isinstance(e, (SetLit, TupleLit)):
            items = [self.value(x, env) for x in e.elements]
            if any(x is UNDEFINED for x in items):
                return UNDEFINED
            return frozenset(items) if isinstance(e, SetLit) else tuple(items)
        if isinstance(e, AtTime):
            found = self.model.family_at(e.family, self.index(e.index, env))
            return UNDEFINED if found is None else found
        if isinstance(e, Card):
            s = self.value(e.of, env)
            if s is UNDEFINED:
                return UNDEFINED
            _require_set(s, e.of)
            return Fraction(len(s))
        if isinstance(e, AbsDiff):
            a, b = self.value(e.a, env), self.value(e.b, env)
            if a is UNDEFINED or b is UNDEFINED:
                return UNDEFINED
            _require_rational(a, e.a)
            _require_rational(b, e.b)
            return abs(a - b)
        if isinstance(e, App):
            return self.apply(e, env)
        raise EvaluationTypeError(
            '"{}" is a formula where a term was expected.'.format(to_text(e)))

    def atom(self, name, env):
        if name in env:
            value = env[name]
            return Fraction(value) if name == INDEX_NAME else value
        if name == INDEX_NAME:
            raise UnboundVariableError(INDEX_NAME)
        kind = self.model.kind_of(name)
        if kind == 'set':
            found = self.model.carrier(name)
        elif kind == 'map':
            found = self.model.graph(name)
        elif kind == 'family':
            found = self.model.family_at(name, self.index(INDEX_NAME, env))
        else:
            found = None
        return UNDEFINED if found is None else found

    def apply(self, e, env):
        args = tuple(self.value(a, env) for a in e.args)
        if any(a is UNDEFINED for a in args):
            return UNDEFINED
        if e.fn in FIELD_OPERATIONS:
            a, b = args
            _require_rational(a, e.args[0])
            _require_rational(b, e.args[1])
            return a + b if e.fn == '+' else a - b
        graph = self.model.graph(e.fn)
        if graph is None:
            if e.fn in self.judgments or self.model.kind_of(e.fn) is not None:
                raise EvaluationTypeError(
                    '"{}" is not a mapping.'.format(e.fn))
            return UNDEFINED
        images = set(pair[-1] for pair in graph if pair[:-1] == args)
        # no image or several images leave the value undetermined
        return images.pop() if len(images) == 1 else UNDEFINED


def _bind(env, name, value):
    new_env = dict(env)
    new_env[name] = value
    return new_env


def _require_rational(value, e):
    if not isinstance(value, Fraction):
        raise EvaluationTypeError(
            '"{}" is not a rational number.'.format(to_text(e)))


def _require_set(value, e):
    if not isinstance(value, frozenset):
        raise EvaluationTypeError('"{}" is not a set.'.format(to_text(e)))


class JudgmentFn(object):
    """A predicate turned into a truth-valued judgment of one object.

    Args:
        name: Text for the name of the judgment (eg. Cont).
        body: An Expr for the predicate.
        parameter: The name of the tested object. It must occur free in body.

    Properties:
        * name
        * body
        * parameter
        * expression
    """
    __slots__ = ('_name', '_body', '_parameter')

    def __init__(self, name, body, parameter):
        self._name = name
        self._body = body
        if parameter not in free_vars(body):
            raise ObjectNotFreeError(parameter)
        self._parameter = parameter

    @property
    def name(self):
        return self._name

    @property
    def body(self):
        return self._body

    @property
    def parameter(self):
        """Get the name of the tested object."""
        return self._parameter

    @property
    def expression(self):
        """Get the judgment as a Judge expression wrapping the body."""
        return Judge(self._name, self._body)

    def apply(self, model, argument=None, env=None, judgments=None):
        """Judge an object of a model.

        Args:
            model: A Model.
            argument: The name of the object to judge. If None, the object
                parameter itself is judged.
            env: An optional dictionary of variable bindings.
            judgments: An optional dictionary of other judgments that the body
                may apply.

        Returns:
            A TriValue.
        """
        expr = self.expression
        if argument is not None and argument != self._parameter:
            expr = Judge(self._name, rename(self._body, {self._parameter: argument}))
        return evaluate(expr, model, env, judgments)

    def __repr__(self):
        return 'JudgmentFn: {}({})'.format(self._name, self._parameter)


def booleanize(name, body, obj):
    """Turn a predicate into a judgment of one object.

    Args:
        name: Text for the name of the judgment.
        body: An Expr for the predicate.
        obj: The name of the tested object, free in body.

    Returns:
        A JudgmentFn.
    """
    return JudgmentFn(name, body, obj)
