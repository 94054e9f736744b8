# coding=utf-8
"""Test the predicate language parser, printer and syntax tree helpers."""
from fractions import Fraction
import pytest
from hypothesis import given, settings, HealthCheck, strategies as st

from stategrid.errors import PredicateSyntaxError, UnknownSymbolError, \
    ArityMismatchError
from stategrid.expression import Atom, RationalLit, SetLit, TupleLit, App, Card, \
    AbsDiff, Cmp, Member, SubsetOf, Not, And, Or, Implies, Forall, Exists, AtTime, \
    Judge, free_vars, symbols, rename, expand_abs_diff, to_text, walk
from stategrid.parser import parse, tokenize, check_well_formed
from stategrid.reference import CONTINUITY_VOCABULARY, CONTINUITY_CLAUSE_TEXT
from stategrid.vocabulary import Vocabulary, CARRIER, FAMILY, PREDICATE, mapping

VOCAB = Vocabulary({'R': CARRIER, 'f': mapping(1), 'I': FAMILY, 'g': mapping(2),
                    'P': PREDICATE, 'S': CARRIER})


def test_parse_quantifiers():
    """Test nested quantifiers over a carrier."""
    vocab = Vocabulary({'R': CARRIER, 'f': mapping(1)})
    e = parse('forall x in R . exists y in R . f(x) = y', vocab)
    assert e == Forall('x', 'R', Exists(
        'y', 'R', Cmp('=', App('f', (Atom('x'),)), Atom('y'))))


def test_parse_time_index():
    """Test references to a family at the index and its successor."""
    vocab = Vocabulary({'I': FAMILY})
    e = parse('card(I@(i+1)) > card(I@i)', vocab)
    assert e == Cmp('>', Card(AtTime('I', 'i+1')), Card(AtTime('I', 'i')))
    assert parse('card(I@3) = 0', vocab) == \
        Cmp('=', Card(AtTime('I', 3)), RationalLit(Fraction(0)))
    assert parse('card(I@(2)) = 0', vocab).lhs.of.index == 2


def test_parse_errors():
    """Test the errors raised for malformed text."""
    with pytest.raises(PredicateSyntaxError) as info:
        parse('f(', VOCAB)
    assert info.value.position == 2
    with pytest.raises(UnknownSymbolError):
        parse('h(x) = 1', VOCAB)
    with pytest.raises(ArityMismatchError) as info:
        parse('g(1) = 1', VOCAB)
    assert (info.value.got, info.value.want) == (1, 2)
    with pytest.raises(PredicateSyntaxError):
        parse('card(I@(i+2)) = 0', VOCAB)
    with pytest.raises(PredicateSyntaxError):
        parse('forall R in R . R = R', VOCAB)
    with pytest.raises(PredicateSyntaxError):
        parse('1 < 2 )', VOCAB)
    with pytest.raises(PredicateSyntaxError):
        parse('1/0 < 2', VOCAB)
    with pytest.raises(PredicateSyntaxError):
        tokenize('x # y')


def test_parse_terms():
    """Test literals, tuples, sets, signs and the absolute difference."""
    e = parse('x - -1/2 < abs(x - 1)', Vocabulary(), strict=False)
    assert e == Cmp('<', App('-', (Atom('x'), RationalLit(Fraction(-1, 2)))),
                    AbsDiff(Atom('x'), RationalLit(Fraction(1))))
    e = parse('(x, y) in f and {1, 2} subset S', VOCAB, strict=False)
    assert e == And(Member(TupleLit((Atom('x'), Atom('y'))), Atom('f')),
                    SubsetOf(SetLit((RationalLit(Fraction(1)), RationalLit(Fraction(2)))),
                             Atom('S')))
    e = parse('judge In(card(I@i) > 0)', VOCAB)
    assert isinstance(e, Judge) and e.name == 'In'


def test_canonical_printing():
    """Test the printer drops redundant parentheses."""
    vocab = Vocabulary({'I': FAMILY})
    assert to_text(parse('card(I@i) = 0', vocab)) == 'card(I@i) = 0'
    assert to_text(parse('((x) < (y))', None, strict=False)) == 'x < y'
    assert to_text(parse('a - (b - c) = a - b - c', None, strict=False)) == \
        'a - (b - c) = a - b - c'
    assert to_text(parse('not (a < b and b < c)', None, strict=False)) == \
        'not (a < b and b < c)'
    assert to_text(parse('a < b -> (b < c -> c < d)', None, strict=False)) == \
        'a < b -> b < c -> c < d'
    assert to_text(parse('(a < b -> b < c) -> c < d', None, strict=False)) == \
        '(a < b -> b < c) -> c < d'
    assert to_text(parse('card(I@(i+1)) > 1', vocab)) == 'card(I@(i+1)) > 1'


def test_free_vars_and_symbols():
    """Test free variables and referenced symbols."""
    e = Forall('x', 'R', Cmp('<', Atom('x'), Atom('y')))
    assert free_vars(e) == {'y'}
    assert symbols(e) == {'y', 'R'}
    assert free_vars(RationalLit(Fraction(0))) == frozenset()
    clause = parse(CONTINUITY_CLAUSE_TEXT, CONTINUITY_VOCABULARY)
    assert free_vars(clause) == {'f'}
    assert symbols(clause) == {'f', 'R', 'Eps', 'Delta'}
    assert free_vars(parse('card(I@i) > 0', VOCAB)) == {'I'}


def test_rename():
    """Test renaming leaves bound variables and builtins alone."""
    e = parse('forall x in R . f(x) = x + 1', VOCAB)
    renamed = rename(e, {'R': 'Q', 'f': 'h', 'x': 'z'})
    assert to_text(renamed) == 'forall x in Q . h(x) = x + 1'
    assert to_text(rename(parse('card(I@i) > 0', VOCAB), {'I': 'J'})) == \
        'card(J@i) > 0'


def test_expand_abs_diff():
    """Test the rewrite of absolute differences through the order relation."""
    e = parse('abs(x - a) < d', None, strict=False)
    assert to_text(expand_abs_diff(e)) == 'x - a < d and a - x < d'
    other = parse('abs(x - a) > d', None, strict=False)
    assert expand_abs_diff(other) == other


def test_check_well_formed():
    """Test well-formedness against a vocabulary."""
    e = parse('card(I@i) > 0', VOCAB)
    assert check_well_formed(e, VOCAB) is e
    with pytest.raises(UnknownSymbolError):
        check_well_formed(e, Vocabulary({'R': CARRIER}))


def test_walk_paths():
    """Test pre-order paths of the syntax tree."""
    e = parse('a < b and not c = d', None, strict=False)
    paths = [p for p, _ in walk(e)]
    assert paths == [(), (0,), (0, 0), (0, 1), (1,), (1, 0), (1, 0, 0), (1, 0, 1)]


"""____________ROUND TRIP OF GENERATED TREES____________"""

_NAMES = st.sampled_from(['a', 'b', 'x', 'S', 'f'])
_LITERALS = st.builds(
    lambda n, d: RationalLit(Fraction(n, d)),
    st.integers(min_value=-5, max_value=5), st.integers(min_value=1, max_value=4))
_INDICES = st.one_of(st.sampled_from(['i', 'i+1']), st.integers(0, 9))
_SET_OPERANDS = st.one_of(
    st.builds(Atom, _NAMES), st.builds(AtTime, _NAMES, _INDICES))


def _terms(children):
    return st.one_of(
        st.builds(lambda a, b: App('+', (a, b)), children, children),
        st.builds(lambda a, b: App('-', (a, b)), children, children),
        st.builds(lambda n, args: App(n, tuple(args)), _NAMES,
                  st.lists(children, min_size=1, max_size=2)),
        st.builds(AbsDiff, children, children),
        st.builds(lambda xs: SetLit(tuple(xs)), st.lists(children, max_size=2)),
        st.builds(lambda xs: TupleLit(tuple(xs)),
                  st.lists(children, min_size=2, max_size=3)))


_TERMS = st.recursive(
    st.one_of(st.builds(Atom, _NAMES), _LITERALS, st.builds(AtTime, _NAMES, _INDICES),
              st.builds(Card, _SET_OPERANDS)),
    _terms, max_leaves=6)


def _formulas(children):
    return st.one_of(
        st.builds(Not, children),
        st.builds(And, children, children),
        st.builds(Or, children, children),
        st.builds(Implies, children, children),
        st.builds(Forall, st.sampled_from(['x', 'y']), _NAMES, children),
        st.builds(Exists, st.sampled_from(['x', 'y']), _NAMES, children),
        st.builds(Judge, st.sampled_from(['In', 'Cont']), children))


_ATOMIC = st.one_of(
    st.builds(Cmp, st.sampled_from(['<', '>', '=', '<=', '>=']), _TERMS, _TERMS),
    st.builds(Member, _TERMS, _TERMS),
    st.builds(SubsetOf, _TERMS, _TERMS))
_FORMULAS = st.recursive(_ATOMIC, _formulas, max_leaves=5)


@settings(max_examples=1000, deadline=None,
          suppress_health_check=[HealthCheck.too_slow])
@given(_FORMULAS)
def test_print_parse_round_trip(e):
    """Test parsing the canonical text of any tree gives the tree back."""
    text = to_text(e)
    assert parse(text, None, strict=False) == e
    assert to_text(parse(text, None, strict=False)) == text
