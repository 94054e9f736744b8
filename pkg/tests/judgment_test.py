# coding=utf-8
"""Test the intelligence judgments over timed families."""
import itertools
import random
import pytest

from stategrid.errors import SubsetViolationError, UnboundVariableError
from stategrid.judgment import c_in, c_out, c_proc, int_literal, int_windowed, \
    intelligence_expression, DECLARED, FREE
from stategrid.expression import to_text
from stategrid.model import Model
from stategrid.truth import TRUE, FALSE, UNDEFINABLE


def _families(sizes):
    """Families of atoms with the given cardinality at each index."""
    return {j: set('e{}'.format(k) for k in range(n)) for j, n in enumerate(sizes)}


def test_structures():
    """Test the input and output structures on known cardinalities."""
    model = Model(families={'I': _families([2, 3]), 'O': _families([1, 2])})
    assert c_in('I', 'O', 0, model) is TRUE
    assert c_out('I', 'O', 0, model) is FALSE
    shrinking = Model(families={'I': _families([3, 2]), 'O': _families([1, 2])})
    assert c_out('I', 'O', 0, shrinking) is TRUE
    assert c_in('I', 'O', 1, model) is UNDEFINABLE


def test_process_structure_declared():
    """Test the processing structure over declared sub-families."""
    inputs = {0: {'a', 'b'}, 1: {'a', 'b', 'c'}}
    model = Model(families={
        'I': inputs, 'T': {0: {'a', 'b'}, 1: {'a'}}, 'V': {0: {'a'}, 1: {'a'}}})
    assert c_proc('I', 'T', 'V', 0, model, DECLARED) is TRUE
    still = Model(families={'I': inputs, 'T': {0: {'a'}, 1: {'a'}},
                            'V': {0: {'a'}, 1: {'a'}}})
    assert c_proc('I', 'T', 'V', 0, still, DECLARED) is FALSE
    outside = Model(families={'I': inputs, 'T': {0: {'z'}, 1: set()},
                              'V': {0: set(), 1: set()}})
    with pytest.raises(SubsetViolationError) as info:
        c_proc('I', 'T', 'V', 0, outside, DECLARED)
    assert info.value.index == 0


def _exhaustive_process(before, after):
    """Search every pair of sub-families for a shrinking or a growing one."""
    def subsets(items):
        items = sorted(items)
        return [set(c) for n in range(len(items) + 1)
                for c in itertools.combinations(items, n)]
    for t0, t1 in itertools.product(subsets(before), subsets(after)):
        if len(t1) < len(t0):
            return True
    for v0, v1 in itertools.product(subsets(before), subsets(after)):
        if len(v1) > len(v0):
            return True
    return False


def test_free_process_closed_form():
    """Test free sub-families against an exhaustive search of subsets."""
    for n0 in range(5):
        for n1 in range(5):
            families = _families([n0, n1])
            model = Model(families={'I': families})
            expected = _exhaustive_process(families[0], families[1])
            assert c_proc('I', 'T', 'V', 0, model, FREE) is \
                (TRUE if expected else FALSE)
            assert expected == (n0 >= 1 or n1 >= 1)


def test_int_literal_is_constant():
    """Test the single-index judgment is false whenever everything is observed."""
    rng = random.Random(99)
    for _ in range(1000):
        inputs = {j: set(rng.sample('abcdef', rng.randint(0, 6))) for j in (0, 1)}
        outputs = {j: set(rng.sample('uvwxyz', rng.randint(0, 6))) for j in (0, 1)}
        shrink = {j: set(rng.sample(sorted(inputs[j]), rng.randint(0, len(inputs[j]))))
                  for j in (0, 1)}
        grow = {j: set(rng.sample(sorted(inputs[j]), rng.randint(0, len(inputs[j]))))
                for j in (0, 1)}
        model = Model(families={'I': inputs, 'O': outputs, 'T': shrink, 'V': grow})
        assert int_literal('I', 'O', 'T', 'V', 0, model, DECLARED) is FALSE
        assert int_literal('I', 'O', 'T', 'V', 0, model, FREE) is FALSE


def _window_model():
    inputs = {0: {'a'}, 1: {'a', 'b'}, 2: {'a'}}
    outputs = {0: set(), 1: {'x'}, 2: {'x', 'y'}}
    return Model(families={'I': inputs, 'O': outputs, 'T': inputs, 'V': inputs})


def _direct_window(model, window):
    """Re-check the windowed judgment from raw cardinalities."""
    def size(name, j):
        return len(model.family_at(name, j))
    shown_in = any(size('I', j + 1) > size('I', j) and size('O', j + 1) > size('O', j)
                   for j in window)
    shown_out = any(size('I', j + 1) < size('I', j) and size('O', j + 1) > size('O', j)
                    for j in window)
    shown_proc = any(size('T', j + 1) < size('T', j) or size('V', j + 1) > size('V', j)
                     for j in window)
    return shown_in and shown_out and shown_proc


def test_int_windowed():
    """Test the windowed judgment against a direct count."""
    model = _window_model()
    assert _direct_window(model, (0, 1))
    assert int_windowed('I', 'O', 'T', 'V', (0, 1), model, DECLARED) is TRUE
    assert int_literal('I', 'O', 'T', 'V', 0, model, DECLARED) is FALSE
    assert not _direct_window(model, (0,))
    assert int_windowed('I', 'O', 'T', 'V', (0,), model, DECLARED) is FALSE


def test_int_windowed_edges():
    """Test empty windows, missing families and undeclared names."""
    model = _window_model()
    with pytest.raises(ValueError):
        int_windowed('I', 'O', 'T', 'V', (), model)
    assert int_windowed('I', 'O', 'T', 'V', (0, 1), model.without(['O'])) \
        is UNDEFINABLE
    with pytest.raises(UnboundVariableError):
        int_windowed('I', 'X', 'T', 'V', (0, 1), model)
    assert int_windowed('I', 'O', 'T', 'V', (0, 1), model.without(['T']), FREE) is TRUE


def test_intelligence_expression():
    """Test the combined judgment text follows the family names."""
    text = to_text(intelligence_expression('In0', 'Out0', 'T', 'V', DECLARED))
    assert text.startswith('judge In(card(In0@(i+1)) > card(In0@i)')
    assert 'judge Proc(card(T@(i+1)) < card(T@i)' in text
    free = to_text(intelligence_expression(subset_mode=FREE))
    assert 'judge Proc(card(I@i) >= 1 or card(I@(i+1)) >= 1)' in free
