# coding=utf-8
"""Recursive-descent parser for the predicate definition language.

The grammar, from loosest to tightest binding::

    expr  := quant | imp
    quant := ("forall" | "exists") IDENT "in" IDENT "." expr
    imp   := disj [ "->" imp ]
    disj  := conj { "or" conj }
    conj  := neg { "and" neg }
    neg   := "not" neg | quant | cmp
    cmp   := sum [ ("<" | ">" | "=" | "<=" | ">=" | "in" | "subset") sum ]
    sum   := term { ("+" | "-") term }
    term  := "card" "(" setexpr ")" | "abs" "(" sum ")"
           | "judge" IDENT "(" expr ")"
           | IDENT "(" expr { "," expr } ")" | IDENT "@" index | IDENT
           | RATIONAL | "{" [ expr { "," expr } ] "}"
           | "(" expr { "," expr } ")"
    index := "i" | NATURAL | "(" ( "i" [ "+" "1" ] | NATURAL ) ")"

A sign directly before a numeral in term position belongs to the numeral.
"""
from __future__ import division
import re
from collections import namedtuple
from fractions import Fraction

from .errors import PredicateSyntaxError, UnknownSymbolError, ArityMismatchError
from .vocabulary import KEYWORDS, INDEX_NAME, RELATIONS
from .expression import Atom, RationalLit, SetLit, TupleLit, App, Card, AbsDiff, \
    Cmp, Member, SubsetOf, Not, And, Or, Implies, Forall, Exists, AtTime, Judge, \
    INDEX_CURRENT, INDEX_NEXT, to_text

Token = namedtuple('Token', ('kind', 'text', 'pos'))

_TOKEN_PATTERN = re.compile(r'''
    (?P<space>\s+)
  | (?P<number>\d+(?:/\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>->|<=|>=|[<>=+\-(),.@{}])
''', re.VERBOSE)


def tokenize(text):
    """Split predicate text into a list of Tokens ending with an 'end' token."""
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_PATTERN.match(text, pos)
        if match is None:
            raise PredicateSyntaxError(pos, 'a token', text)
        kind = match.lastgroup
        if kind != 'space':
            tokens.append(Token(kind, match.group(), pos))
        pos = match.end()
    tokens.append(Token('end', '', len(text)))
    return tokens


def parse(text, vocab=None, strict=True):
    """Parse predicate text into an Expr.

    Args:
        text: Predicate text.
        vocab: A Vocabulary against which names, kinds and arities are checked.
        strict: Set to False to accept names that the vocabulary does not
            declare. Lenient parsing is used for cells carried over from another
            vocabulary. (Default: True).

    Returns:
        The Expr for the text.
    """
    assert vocab is not None or not strict, \
        'A vocabulary is required to parse predicate text strictly.'
    return _Parser(text, vocab, strict).parse()


def check_well_formed(e, vocab):
    """Check an Expr against a vocabulary by parsing its canonical text.

    Returns:
        The Expr itself if it is well-formed.
    """
    parsed = parse(to_text(e), vocab)
    assert parsed == e, 'Expression "{}" does not parse back to itself.'.format(
        to_text(e))
    return e


class _Parser(object):
    """Parser state over one text."""

    def __init__(self, text, vocab, strict):
        self.text = text
        self.vocab = vocab
        self.strict = strict
        self.tokens = tokenize(text)
        self.i = 0
        self.scope = []

    # token helpers
    def peek(self, ahead=0):
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def next(self):
        tok = self.tokens[self.i]
        if tok.kind != 'end':
            self.i += 1
        return tok

    def at(self, text, ahead=0):
        tok = self.peek(ahead)
        return tok.kind in ('op', 'ident') and tok.text == text

    def error(self, expected, tok=None):
        tok = tok or self.peek()
        return PredicateSyntaxError(tok.pos, expected, self.text)

    def expect(self, text):
        if not self.at(text):
            raise self.error('"{}"'.format(text))
        return self.next()

    def ident(self, expected='a name'):
        tok = self.peek()
        if tok.kind != 'ident' or tok.text in KEYWORDS:
            raise self.error(expected)
        return self.next()

    # vocabulary helpers
    def bound(self, name):
        return any(var == name for var, _ in self.scope)

    def kind(self, name, tok):
        """Get the declared kind of a name, or None in lenient mode."""
        if self.vocab is not None and name in self.vocab:
            return self.vocab.kind(name)
        if self.strict:
            raise UnknownSymbolError(name)
        return None

    def parse(self):
        e = self.expr()
        if self.peek().kind != 'end':
            raise self.error('end of input')
        return e

    # grammar rules
    def expr(self):
        if self.at('forall') or self.at('exists'):
            return self.quant()
        return self.imp()

    def quant(self):
        word = self.next().text
        var_tok = self.ident('a variable name')
        if var_tok.text == INDEX_NAME or \
                (self.strict and var_tok.text in self.vocab):
            raise self.error('a fresh variable name', var_tok)
        self.expect('in')
        car_tok = self.ident('a carrier name')
        kind = self.kind(car_tok.text, car_tok)
        if kind is not None and not kind.is_carrier:
            raise self.error('a carrier name', car_tok)
        self.expect('.')
        self.scope.append((var_tok.text, car_tok.text))
        try:
            body = self.expr()
        finally:
            self.scope.pop()
        node = Forall if word == 'forall' else Exists
        return node(var_tok.text, car_tok.text, body)

    def imp(self):
        lhs = self.disj()
        if self.at('->'):
            self.next()
            return Implies(lhs, self.imp())
        return lhs

    def disj(self):
        e = self.conj()
        while self.at('or'):
            self.next()
            e = Or(e, self.conj())
        return e

    def conj(self):
        e = self.neg()
        while self.at('and'):
            self.next()
            e = And(e, self.neg())
        return e

    def neg(self):
        if self.at('not'):
            self.next()
            return Not(self.neg())
        if self.at('forall') or self.at('exists'):
            return self.quant()
        return self.cmp()

    def cmp(self):
        lhs = self.sum()
        tok = self.peek()
        if tok.kind == 'op' and tok.text in RELATIONS:
            self.next()
            return Cmp(tok.text, lhs, self.sum())
        if self.at('in'):
            self.next()
            rhs_tok = self.peek()
            rhs = self.sum()
            self.check_set(rhs, rhs_tok, allow_mapping=True)
            return Member(lhs, rhs)
        if self.at('subset'):
            self.next()
            rhs_tok = self.peek()
            rhs = self.sum()
            self.check_set(lhs, tok)
            self.check_set(rhs, rhs_tok)
            return SubsetOf(lhs, rhs)
        return lhs

    def sum(self):
        e = self.term()
        while self.at('+') or self.at('-'):
            op = self.next().text
            e = App(op, (e, self.term()))
        return e

    def term(self):
        tok = self.peek()
        if tok.kind == 'op' and tok.text in ('-', '+') and \
                self.peek(1).kind == 'number':
            self.next()
            value = self.number()
            return RationalLit(-value if tok.text == '-' else value)
        if tok.kind == 'number':
            return RationalLit(self.number())
        if self.at('('):
            self.next()
            items = [self.expr()]
            while self.at(','):
                self.next()
                items.append(self.expr())
            self.expect(')')
            return items[0] if len(items) == 1 else TupleLit(tuple(items))
        if self.at('{'):
            return self.set_literal()
        if self.at('card'):
            self.next()
            self.expect('(')
            operand = self.set_expr()
            self.expect(')')
            return Card(operand)
        if self.at('abs'):
            self.next()
            self.expect('(')
            diff = self.sum()
            if not (isinstance(diff, App) and diff.fn == '-'):
                raise self.error('a difference "a - b"')
            self.expect(')')
            return AbsDiff(diff.args[0], diff.args[1])
        if self.at('judge'):
            self.next()
            label = self.ident('a judgment name').text
            self.expect('(')
            body = self.expr()
            self.expect(')')
            return Judge(label, body)
        if tok.kind == 'ident' and tok.text not in KEYWORDS:
            self.next()
            if self.at('('):
                return self.application(tok)
            if self.at('@'):
                return self.at_time(tok)
            return self.atom(tok)
        raise self.error('a term')

    def number(self):
        tok = self.next()
        if '/' in tok.text:
            num, den = tok.text.split('/')
            if int(den) == 0:
                raise self.error('a non-zero denominator', tok)
            return Fraction(int(num), int(den))
        return Fraction(int(tok.text))

    def set_literal(self):
        self.expect('{')
        items = []
        if not self.at('}'):
            items.append(self.expr())
            while self.at(','):
                self.next()
                items.append(self.expr())
        self.expect('}')
        return SetLit(tuple(items))

    def set_expr(self):
        tok = self.peek()
        if self.at('{'):
            return self.set_literal()
        if tok.kind == 'ident' and tok.text not in KEYWORDS:
            self.next()
            if self.at('@'):
                return self.at_time(tok)
            e = self.atom(tok)
            self.check_set(e, tok)
            return e
        raise self.error('a set expression')

    def check_set(self, e, tok, allow_mapping=False):
        """Check that an operand denotes a set."""
        if isinstance(e, (SetLit, AtTime)) or self.vocab is None:
            return
        if isinstance(e, Atom) and not self.bound(e.name) and e.name in self.vocab:
            kind = self.vocab.kind(e.name)
            if kind.is_carrier or kind.is_family or (allow_mapping and kind.is_mapping):
                return
        elif isinstance(e, Atom) and not self.strict and not self.bound(e.name):
            return
        if not self.strict:
            return
        raise self.error('a set expression', tok)

    def application(self, tok):
        name = tok.text
        if self.strict:
            if self.bound(name) or name == INDEX_NAME:
                raise self.error('a mapping or predicate name', tok)
            kind = self.kind(name, tok)
            if not (kind.is_mapping or kind.is_predicate):
                raise self.error('a mapping or predicate name', tok)
        self.expect('(')
        args = [self.expr()]
        while self.at(','):
            self.next()
            args.append(self.expr())
        self.expect(')')
        if self.strict:
            want = kind.arity if kind.is_mapping else 1
            if len(args) != want:
                raise ArityMismatchError(name, len(args), want)
        return App(name, tuple(args))

    def at_time(self, tok):
        name = tok.text
        if self.strict:
            kind = self.kind(name, tok)
            if not kind.is_family or self.bound(name):
                raise self.error('a family name', tok)
        self.expect('@')
        if self.at('('):
            self.next()
            index = self.index(allow_successor=True)
            self.expect(')')
        else:
            index = self.index(allow_successor=False)
        return AtTime(name, index)

    def index(self, allow_successor):
        tok = self.peek()
        if tok.kind == 'number' and '/' not in tok.text:
            self.next()
            return int(tok.text)
        if self.at(INDEX_NAME):
            self.next()
            if allow_successor and self.at('+'):
                self.next()
                one = self.peek()
                if one.kind != 'number' or one.text != '1':
                    raise self.error('"1"')
                self.next()
                return INDEX_NEXT
            return INDEX_CURRENT
        raise self.error('a time index (i, i+1 or a natural number)')

    def atom(self, tok):
        name = tok.text
        if self.strict and not self.bound(name) and name != INDEX_NAME:
            self.kind(name, tok)
        return Atom(name)
