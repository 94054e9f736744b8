# coding=utf-8
"""Judgments of intelligence over timed families.

The input, output and processing structures compare the cardinalities of a
family at an index i and its successor. They are written in the predicate
language and evaluated like any other formula.
"""
from .config import defaults
from .errors import SubsetViolationError, UnboundVariableError
from .evaluate import evaluate
from .expression import rename
from .parser import parse
from .truth import UNDEFINABLE, and3, any3
from .vocabulary import Vocabulary, FAMILY

DECLARED = 'declared'
FREE = 'free'
SUBSET_MODES = (DECLARED, FREE)

INPUT_STRUCTURE = 'card(I@(i+1)) > card(I@i) and card(O@(i+1)) > card(O@i)'
OUTPUT_STRUCTURE = 'card(I@(i+1)) < card(I@i) and card(O@(i+1)) > card(O@i)'
PROCESS_STRUCTURE = 'card(T@(i+1)) < card(T@i) or card(V@(i+1)) > card(V@i)'
# the processing structure when T and V range over every subset of I
FREE_PROCESS_STRUCTURE = 'card(I@i) >= 1 or card(I@(i+1)) >= 1'

TEMPLATE_VOCABULARY = Vocabulary({'I': FAMILY, 'O': FAMILY, 'T': FAMILY, 'V': FAMILY})


def _subset_mode(subset_mode):
    mode = defaults.subset_mode if subset_mode is None else subset_mode
    assert mode in SUBSET_MODES, 'Subset mode must be one of {}. Got "{}".'.format(
        SUBSET_MODES, mode)
    return mode


def structure_expression(template, I='I', O='O', T='T', V='V'):
    """Get a structure template as an Expr over the given family names."""
    names = {'I': I, 'O': O, 'T': T, 'V': V}
    return rename(parse(template, TEMPLATE_VOCABULARY), names)


def intelligence_expression(I='I', O='O', T='T', V='V', subset_mode=None):
    """Get the intelligence judgment as one expression.

    The result conjoins the In, Out and Proc judgments of the three structures.
    """
    process = PROCESS_STRUCTURE if _subset_mode(subset_mode) == DECLARED \
        else FREE_PROCESS_STRUCTURE
    text = 'judge In({}) and judge Out({}) and judge Proc({})'.format(
        INPUT_STRUCTURE, OUTPUT_STRUCTURE, process)
    return rename(parse(text, TEMPLATE_VOCABULARY), {'I': I, 'O': O, 'T': T, 'V': V})


def c_in(I, O, i, model):
    """Evaluate the input structure of families I and O at index i."""
    return evaluate(structure_expression(INPUT_STRUCTURE, I, O), model, {'i': i})


def c_out(I, O, i, model):
    """Evaluate the output structure of families I and O at index i."""
    return evaluate(structure_expression(OUTPUT_STRUCTURE, I, O), model, {'i': i})


def c_proc(I, T, V, i, model, subset_mode=None):
    """Evaluate the processing structure at index i.

    Args:
        I: Name of the input family.
        T: Name of the declared shrinking sub-family of I. Unused in free mode.
        V: Name of the declared growing sub-family of I. Unused in free mode.
        i: Natural number for the index.
        model: A Model.
        subset_mode: Either declared, where T and V are named families that
            must be contained in I, or free, where they range over every subset
            of I. If None, the default of the stategrid config is used.

    Returns:
        A TriValue.
    """
    if _subset_mode(subset_mode) == FREE:
        return evaluate(structure_expression(FREE_PROCESS_STRUCTURE, I), model, {'i': i})
    check_subfamilies(I, (T, V), (i, i + 1), model)
    return evaluate(
        structure_expression(PROCESS_STRUCTURE, I, T=T, V=V), model, {'i': i})


def check_subfamilies(I, subfamilies, indices, model):
    """Raise SubsetViolationError if a sub-family is not contained in I."""
    for j in indices:
        whole = model.family_at(I, j)
        if whole is None:
            continue
        for name in subfamilies:
            part = model.family_at(name, j)
            if part is not None and not part <= whole:
                raise SubsetViolationError(name, j)


def int_literal(I, O, T, V, i, model, subset_mode=None):
    """Evaluate the intelligence judgment with every structure at the same index.

    The input and output structures demand opposite changes of |I| so this is
    FALSE on every model that defines all of the cardinalities involved.
    """
    return and3(and3(c_in(I, O, i, model), c_out(I, O, i, model)),
                c_proc(I, T, V, i, model, subset_mode))


def int_windowed(I, O, T, V, window, model, subset_mode=None):
    """Evaluate the intelligence judgment with each structure shown somewhere in a window.

    Args:
        I: Name of the input family.
        O: Name of the output family.
        T: Name of the shrinking sub-family of I (unused in free mode).
        V: Name of the growing sub-family of I (unused in free mode).
        window: An iterable of natural numbers for the indices to search.
        model: A Model.
        subset_mode: Text for the subset mode (declared or free).

    Returns:
        A TriValue. It is UNDEFINABLE when any of the families is not
        interpreted by the model.
    """
    mode = _subset_mode(subset_mode)
    window = sorted(set(int(j) for j in window))
    if not window:
        raise ValueError('The index window of the intelligence judgment is empty.')
    names = [I, O] + ([T, V] if mode == DECLARED else [])
    for name in names:
        if not model.is_declared(name):
            raise UnboundVariableError(name)
    if any(not model.is_interpreted(name) for name in names):
        return UNDEFINABLE
    shown_in = any3(c_in(I, O, j, model) for j in window)
    shown_out = any3(c_out(I, O, j, model) for j in window)
    shown_proc = any3(c_proc(I, T, V, j, model, mode) for j in window)
    return and3(and3(shown_in, shown_out), shown_proc)
