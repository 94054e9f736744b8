# coding=utf-8
"""Test the scale of operations and the codomain check."""
from stategrid.evaluate import booleanize
from stategrid.grid import Coordinate, StateCell, GroundSet, PredicateState
from stategrid.interuniversal import OperationScale, describe_names, \
    describe_translation, describe_tick, describe_integration, classify_operation, \
    codomain_check
from stategrid.parser import parse
from stategrid.translation import TranslationMap
from stategrid.universe import new_universe, declare_symbol, add_cell, observe, \
    set_depth
from stategrid.vocabulary import CARRIER, FAMILY, PREDICATE, mapping


def _universe():
    u = new_universe('shop')
    for name, kind in (('S', CARRIER), ('f', mapping(1)), ('I', FAMILY)):
        u = declare_symbol(u, name, kind)
    u = add_cell(u, StateCell('c1', Coordinate(2, 0), 'shelves', GroundSet('S')))
    u = add_cell(u, StateCell('c2', Coordinate(2, 2), 'two inputs', PredicateState(
        parse('card(I@i) = 2', u.vocab))))
    return add_cell(u, StateCell('c3', Coordinate(2, 2), 'flat', PredicateState(
        parse('forall x in S . f(x) = 1', u.vocab))))


def test_classify_operation():
    """Test whole-vocabulary operations are proved and partial ones verified."""
    whole = describe_names('edit', ['S', 'f', 'I'], ['I', 'S', 'f'])
    assert classify_operation(whole) is OperationScale.MACROCOSM
    assert OperationScale.MACROCOSM.validation_mode == 'proof'
    part = describe_names('edit', ['S', 'zz'], ['I', 'S', 'f'])
    assert part.footprint == {'S'}
    assert classify_operation(part) is OperationScale.MICROCOSM
    assert OperationScale.MICROCOSM.validation_mode == 'verification'
    empty = describe_names('edit', [], [])
    assert classify_operation(empty) is OperationScale.MICROCOSM
    assert str(OperationScale.MACROCOSM) == 'macrocosm'


def test_describe_operations():
    """Test the footprints of translations and ticks."""
    u = _universe()
    full = TranslationMap('shop', 'depot', {'S': 'E', 'f': 'g', 'I': 'J'})
    assert classify_operation(describe_translation(full, u)) is OperationScale.MACROCOSM
    partial = TranslationMap('shop', 'depot', {'S': 'E'})
    assert classify_operation(describe_translation(partial, u)) is \
        OperationScale.MICROCOSM
    assert describe_tick(u, ['S', 'c1']).footprint == {'S'}
    assert classify_operation(describe_tick(u, [])) is OperationScale.MICROCOSM


def test_describe_integration():
    """Test the footprint of a merge collects what either side changed."""
    base = _universe()
    a = observe(base, 'S', {1})
    b = set_depth(base, 'I', 3)
    descriptor = describe_integration(base, a, b)
    assert descriptor.footprint == {'S', 'I'}
    assert classify_operation(descriptor) is OperationScale.MICROCOSM
    b = observe(b, 'f', {(1, 1)})
    assert classify_operation(describe_integration(base, a, b)) is \
        OperationScale.MACROCOSM
    c = add_cell(base, StateCell('c4', Coordinate(2, 2), 'more', PredicateState(
        parse('card(S) = 1', base.vocab))))
    assert describe_integration(base, c, base).footprint == {'S'}
    d = declare_symbol(base, 'P', PREDICATE)
    assert describe_integration(base, d, base).footprint == {'P'}


def test_codomain_check():
    """Test predicate cells over uninterpreted names offend."""
    u = _universe()
    report = codomain_check(u)
    assert not report.verifiable
    assert report.offending == (('c2', frozenset(['I'])), ('c3', frozenset(['S', 'f'])))
    u = observe(observe(u, 'S', {1}), 'I', {'a'})
    assert codomain_check(u).offending == (('c3', frozenset(['f'])),)
    u = observe(u, 'f', {(1, 1)})
    assert codomain_check(u).verifiable
    assert codomain_check(u).offending == ()


def test_codomain_check_with_judgments():
    """Test predicates decided by a judgment count as interpreted."""
    u = declare_symbol(_universe(), 'Flat', PREDICATE)
    u = observe(observe(u, 'S', {1}), 'I', {'a', 'b'})
    u = add_cell(u, StateCell('c4', Coordinate(2, 3), 'flat pricing', PredicateState(
        parse('Flat(f)', u.vocab))))
    judgment = booleanize('Flat', parse('forall x in S . f(x) = 1', u.vocab), 'f')
    missing = dict(codomain_check(u).offending)
    assert missing['c4'] == {'Flat', 'f'}
    missing = dict(codomain_check(u, {'Flat': judgment}).offending)
    assert missing['c4'] == {'f'}
