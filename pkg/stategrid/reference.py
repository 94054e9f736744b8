# coding=utf-8
"""Bundled reference definitions and fixtures.

Two definitions ship with stategrid. The continuity test of a mapping over a
finite stand-in for the real line, and the intelligence test of a system
whose inputs and outputs are observed over time. Each comes with the
vocabulary, depth registry and captions needed to place it on the grid, plus
small models on which its verdict is known.
"""
from __future__ import division
from fractions import Fraction

from .evaluate import booleanize
from .grid import Coordinate, Grid, StateCell, GroundSet, MappingDecl
from .judgment import INPUT_STRUCTURE, OUTPUT_STRUCTURE, PROCESS_STRUCTURE, \
    intelligence_expression
from .model import Model
from .parser import parse
from .placement import TRANSPARENT, ELEVATING
from .registry import DepthRegistry
from .vocabulary import Vocabulary, CARRIER, FAMILY, mapping


"""____________CONTINUITY____________"""

CONTINUITY_VOCABULARY = Vocabulary(
    {'R': CARRIER, 'Eps': CARRIER, 'Delta': CARRIER, 'f': mapping(1)})
CONTINUITY_REGISTRY = DepthRegistry({'R': 5, 'Eps': 5, 'Delta': 5, 'f': 5})
CONTINUITY_MODE = TRANSPARENT

FUNC_TEXT = 'forall x in R . forall y in R . forall z in R . ' \
    '(x, y) in f and (x, z) in f -> y = z'
CONTINUITY_CLAUSE_TEXT = 'forall a in R . forall eps in Eps . exists delta in Delta . ' \
    'forall x in R . abs(x - a) < delta -> abs(f(x) - f(a)) < eps'
PHI_CONT_TEXT = '({}) and ({})'.format(FUNC_TEXT, CONTINUITY_CLAUSE_TEXT)

CONTINUITY_LABELS = {
    (5, 0): 'Real-number field ℝ',
    (4, 1): 'Field operations +, -, ·',
    (3, 2): 'Order predicate "<"',
    (5, 1): 'Function mapping f: ℝ → ℝ',
    (5, 2): 'φ_Cont(f)',
    (5, 3): 'Cont(f)',
    (1, 0): 'Truth values {True, False}',
}


def func_expression():
    """Get the expression stating that f gives every point one image."""
    return parse(FUNC_TEXT, CONTINUITY_VOCABULARY)


def phi_cont_expression():
    """Get the continuity condition on f, with f required to be a function."""
    return parse(PHI_CONT_TEXT, CONTINUITY_VOCABULARY)


def continuity_judgment():
    """Get the Cont judgment of the mapping f as a JudgmentFn."""
    return booleanize('Cont', phi_cont_expression(), 'f')


def identity_model():
    """Get a model where f is the identity on R = {0, 1/2, 1}. Cont(f) is TRUE."""
    points = (Fraction(0), Fraction(1, 2), Fraction(1))
    tolerances = (Fraction(1, 4), Fraction(1))
    return Model(
        carriers={'R': points, 'Eps': tolerances, 'Delta': tolerances},
        mappings={'f': set((x, x) for x in points)})


def step_model():
    """Get a model where f jumps from 0 to 1 at x = 1. Cont(f) is FALSE."""
    return Model(
        carriers={'R': (0, Fraction(1, 2), 1), 'Eps': (Fraction(1, 4),),
                  'Delta': (1,)},
        mappings={'f': {(0, 0), (Fraction(1, 2), 0), (1, 1)}})


def uninterpreted_model():
    """Get the identity model with f declared but not interpreted."""
    return identity_model().without(['f'])


"""____________INTELLIGENCE____________"""

INTELLIGENCE_VOCABULARY = Vocabulary(
    {'I': FAMILY, 'O': FAMILY, 'T': FAMILY, 'V': FAMILY})
INTELLIGENCE_REGISTRY = DepthRegistry({'I': 2, 'O': 2, 'T': 2, 'V': 2})
INTELLIGENCE_MODE = ELEVATING
INTELLIGENCE_WINDOW = (0, 1)

INTELLIGENCE_LABELS = {
    (2, 0): 'Base set',
    (2, 1): 'Cardinality mapping',
    (3, 0): 'Time-series ordered set',
    (3, 1): 'Order mapping (id, succ)',
    (3, 2): 'Order predicates',
    (3, 3): 'C_i, C_o, C_p',
    (3, 4): 'In, Out, Proc',
    (3, 5): 'Int',
    (1, 0): 'Truth values {True, False}',
}

STRUCTURE_TEXTS = {
    'C_i': INPUT_STRUCTURE, 'C_o': OUTPUT_STRUCTURE, 'C_p': PROCESS_STRUCTURE}


def intelligence_definition():
    """Get the Int definition over I, O, T and V as one expression."""
    return intelligence_expression('I', 'O', 'T', 'V', subset_mode='declared')


def window_model():
    """Get a model whose structures show at different indices of the window.

    The input structure holds at index 0 and the output structure at index 1,
    so the windowed judgment is TRUE while the literal one is FALSE.
    """
    inputs = {0: {'a'}, 1: {'a', 'b'}, 2: {'a'}}
    outputs = {0: set(), 1: {'x'}, 2: {'x', 'y'}}
    return Model(families={'I': inputs, 'O': outputs, 'T': inputs, 'V': inputs})


"""____________NUMERICAL SYSTEM____________"""

# one column per state depth, listed from hierarchy 0 upward
_NUMERIC_COLUMNS = (
    (('definability', 'definable or not'),
     ('definability_test', 'test of definability')),
    (('truth', 'empty or non-empty, the Boolean'),
     ('truth_function', 'truth-value functions such as logic gates'),
     ('connective', 'composite truth functions such as and, or'),
     ('connective_property', 'properties of composite truth functions')),
    (('base_set', 'unordered base set'),
     ('cardinality', 'cardinality, countable or not'),
     ('cardinality_predicate', 'equal cardinality, isomorphism'),
     ('cardinality_property', 'bijectivity and infinite cardinality tests')),
    (('ordered_set', 'ordered sets such as N and Z'),
     ('order_mapping', 'order with successor addition'),
     ('order_predicate', 'order predicates such as greatest element'),
     ('order_property', 'induction predicates')),
    (('field', 'fields and rings such as Q'),
     ('field_operation', 'the four arithmetic operations'),
     ('field_predicate', 'topology and metric of a field'),
     ('field_property', 'closure and continuity of field operations')),
    (('continuum', 'complete field R'),
     ('continuous_mapping', 'complete functions'),
     ('continuity_predicate', 'continuity and differentiability tests'),
     ('continuum_property', 'intermediate values, Banach space tests')),
)


def numeric_system_grid():
    """Get the reference grid of numerical-system states.

    Depths 0 to 5 run from definability to the complete field and hierarchies
    0 to 3 from ground sets to properties of predicates. Every mapping cell
    names the cell below it in the same column as its domain.
    """
    cells = []
    for depth, column in enumerate(_NUMERIC_COLUMNS):
        below = None
        for hierarchy, (name, label) in enumerate(column):
            coordinate = Coordinate(depth, hierarchy)
            if hierarchy == 0:
                content = GroundSet(name)
            else:
                content = MappingDecl(name, 1, below)
            cells.append(StateCell(
                'n{}-{}'.format(depth, hierarchy), coordinate, label, content))
            below = name
    return Grid(cells)
