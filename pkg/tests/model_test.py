# coding=utf-8
from fractions import Fraction
import pytest

from stategrid.model import Model, normalize_value, value_key


def test_normalize_value():
    """Test that ints become Fractions and collections become frozensets."""
    assert normalize_value(2) == Fraction(2)
    assert isinstance(normalize_value(2), Fraction)
    assert normalize_value([1, 2]) == frozenset((Fraction(1), Fraction(2)))
    assert normalize_value((1, 'a')) == (Fraction(1), 'a')
    with pytest.raises(TypeError):
        normalize_value(True)
    with pytest.raises(TypeError):
        normalize_value(1.5)
    assert normalize_value('x_1') == 'x_1'
    for bad in ('7', 'a b', '', '-a', 'a\n'):
        with pytest.raises(ValueError):
            normalize_value(bad)
        with pytest.raises(ValueError):
            Model({'A': {bad}})


def test_value_key():
    """Test the canonical order of values."""
    values = [frozenset((1,)), (1, 2), 'b', Fraction(1, 2), 'a', -3]
    assert sorted(values, key=value_key) == \
        [-3, Fraction(1, 2), 'a', 'b', (1, 2), frozenset((1,))]


def test_model_lookup():
    """Test carriers, mappings and families."""
    model = Model(carriers={'A': {0, 1}}, mappings={'f': {(0, 1), (1, 1)}},
                  families={'I': {0: {'a'}, 1: set()}})
    assert model.carrier('A') == {0, 1}
    assert model.graph('f') == {(0, 1), (1, 1)}
    assert model.family_at('I', 0) == {'a'}
    assert model.family_at('I', 1) == frozenset()
    assert model.family_at('I', 5) is None
    assert model.kind_of('A') == 'set'
    assert model.kind_of('f') == 'map'
    assert model.kind_of('I') == 'family'
    assert model.kind_of('zz') is None
    assert model.interpreted == {'A', 'f', 'I'}
    assert model.declared == {'A', 'f', 'I'}
    with pytest.raises(AssertionError):
        Model(mappings={'f': {1}})


def test_model_declared_only():
    """Test names that are known but carry no interpretation."""
    model = Model(carriers={'A': {0}}, declared=['B'])
    assert model.is_declared('B') and not model.is_interpreted('B')
    assert model.carrier('B') is None
    assert model.interpretation('B') is None
    assert not model.is_declared('C')


def test_model_updates():
    """Test that updates return new models."""
    model = Model(carriers={'A': {0, 1}})
    more = model.with_interpretation('f', 'map', {(0, 1)})
    assert more.graph('f') == {(0, 1)}
    assert model.graph('f') is None

    less = more.without(['A'])
    assert less.carrier('A') is None
    assert less.is_declared('A')
    assert less.graph('f') == {(0, 1)}
    with pytest.raises(ValueError):
        model.with_interpretation('g', 'relation', set())

    moved = more.renamed({'A': 'X'})
    assert moved.carrier('X') == {0, 1}
    assert not moved.is_declared('A')
    assert not moved.is_declared('f')
    assert model.with_declared(['B']).is_declared('B')


def test_model_equality():
    """Test that equal interpretations give equal models."""
    assert Model({'A': {0}}) == Model({'A': {Fraction(0)}})
    assert hash(Model({'A': {0}})) == hash(Model({'A': [0]}))
    assert Model({'A': {0}}) != Model({'A': {0}}, declared=['B'])
    families = Model(families={'I': {0: {1}}})
    assert families.interpretations() == frozenset(
        [('I', 'family', frozenset([(0, frozenset([Fraction(1)]))]))])
