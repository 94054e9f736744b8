# coding=utf-8
"""Test the placement of definitions on the hierarchical state grid."""
import pytest

from stategrid.errors import UnregisteredSymbolError
from stategrid.expression import Atom, Judge
from stategrid.grid import Coordinate, Grid, StateCell, GroundSet, TruthResult
from stategrid.judgment import structure_expression, INPUT_STRUCTURE
from stategrid.parser import parse
from stategrid.placement import place, hierarchy_of, placement_to_grid, report, \
    TRANSPARENT, ELEVATING, ROLE_NODE, REPORT_HEADER
from stategrid.reference import CONTINUITY_VOCABULARY, CONTINUITY_REGISTRY, \
    CONTINUITY_LABELS, continuity_judgment, phi_cont_expression, \
    INTELLIGENCE_VOCABULARY, INTELLIGENCE_REGISTRY, INTELLIGENCE_LABELS, \
    intelligence_definition, numeric_system_grid
from stategrid.registry import DepthRegistry
from stategrid.truth import UNDEFINABLE

CONTINUITY_COORDINATES = {(5, 0), (4, 1), (3, 2), (5, 1), (5, 2), (5, 3), (1, 0)}
INTELLIGENCE_COORDINATES = {(2, 0), (2, 1), (3, 0), (3, 1), (3, 2), (3, 3), (3, 4),
                            (3, 5), (1, 0)}


def _pairs(placement):
    return {(c.depth, c.hierarchy) for c in placement.coordinates}


def _place_continuity(mode=TRANSPARENT, time=0):
    return place(continuity_judgment().expression, CONTINUITY_REGISTRY, mode, time,
                 vocabulary=CONTINUITY_VOCABULARY)


def _place_intelligence(mode=ELEVATING, time=0, time_axis=False):
    return place(intelligence_definition(), INTELLIGENCE_REGISTRY, mode, time,
                 vocabulary=INTELLIGENCE_VOCABULARY, time_axis=time_axis)


def test_continuity_placement():
    """Test the continuity test lands on exactly its seven coordinates."""
    placement = _place_continuity()
    assert _pairs(placement) == CONTINUITY_COORDINATES
    assert all(c.time == 0 for c in placement.coordinates)
    assert placement.root == Coordinate(5, 3)
    assert placement.mode == TRANSPARENT


def test_intelligence_placement():
    """Test the intelligence test lands on exactly its nine coordinates."""
    placement = _place_intelligence()
    assert _pairs(placement) == INTELLIGENCE_COORDINATES
    assert placement.root == Coordinate(3, 5)


def test_hierarchy_of():
    """Test the hierarchy of single expressions."""
    assert hierarchy_of(Atom('R')) == 0
    phi = phi_cont_expression()
    assert hierarchy_of(phi, TRANSPARENT, CONTINUITY_VOCABULARY) == 2
    assert hierarchy_of(Judge('Cont', phi), TRANSPARENT, CONTINUITY_VOCABULARY) == 3
    c_i = structure_expression(INPUT_STRUCTURE)
    assert hierarchy_of(c_i, ELEVATING) == 3
    assert hierarchy_of(intelligence_definition(), ELEVATING) == 5
    assert hierarchy_of(parse('card(S) = 1', None, strict=False)) == 2


def test_judgment_adds_one():
    """Test a judgment sits one hierarchy above its body in both modes."""
    for body in (phi_cont_expression(), structure_expression(INPUT_STRUCTURE)):
        for mode in (TRANSPARENT, ELEVATING):
            h = hierarchy_of(body, mode, CONTINUITY_VOCABULARY)
            assert hierarchy_of(Judge('J', body), mode, CONTINUITY_VOCABULARY) == h + 1


def test_transparent_below_elevating():
    """Test transparent hierarchies never exceed elevating ones, node by node."""
    for e, registry, vocab in (
            (continuity_judgment().expression, CONTINUITY_REGISTRY,
             CONTINUITY_VOCABULARY),
            (intelligence_definition(), INTELLIGENCE_REGISTRY,
             INTELLIGENCE_VOCABULARY)):
        low = place(e, registry, TRANSPARENT, vocabulary=vocab).assignments
        high = place(e, registry, ELEVATING, vocabulary=vocab).assignments
        assert set(low) == set(high)
        for path in low:
            assert low[path].hierarchy <= high[path].hierarchy


def test_depth_monotonicity():
    """Test a node is never shallower than any of its children."""
    for placement in (_place_continuity(), _place_intelligence()):
        assignments = placement.assignments
        for path, coordinate in assignments.items():
            if path:
                assert assignments[path[:-1]].depth >= coordinate.depth


def test_place_single_atom():
    """Test a leaf takes its registry depth and the requested time."""
    placement = place(Atom('R'), DepthRegistry({'R': 5}), TRANSPARENT, 7)
    assert placement.coordinates == frozenset([Coordinate(5, 0, 7)])
    with pytest.raises(UnregisteredSymbolError):
        place(Atom('Q'), DepthRegistry())


def test_placement_is_deterministic():
    """Test identical inputs give identical placements."""
    assert _place_continuity() == _place_continuity()
    assert _place_intelligence(time=3) == _place_intelligence(time=3)
    assert all(c.time == 3 for c in _place_intelligence(time=3).coordinates)


def test_time_axis_placement():
    """Test time-indexed references move along the time axis."""
    placement = _place_intelligence(time_axis=True)
    coordinates = placement.coordinates
    assert Coordinate(2, 0, 1) in coordinates
    assert Coordinate(2, 0, 0) in coordinates
    assert not any(c.depth == 3 and c.hierarchy < 2 for c in coordinates)
    assert all(comp.role != 'index' for comp in placement.components)


def test_placement_to_grid_and_report():
    """Test the table of the continuity placement with its captions."""
    grid = placement_to_grid(_place_continuity(), CONTINUITY_LABELS)
    assert len(grid) == 7
    truth_cells = grid.at(Coordinate(1, 0))
    assert len(truth_cells) == 1
    truth_cell = list(truth_cells)[0]
    assert truth_cell.content == TruthResult(UNDEFINABLE)
    text = report(grid)
    lines = text.splitlines()
    assert lines[0] == REPORT_HEADER
    assert len(lines) == 8
    assert lines[1] == '1\t0\t0\t{}'.format(CONTINUITY_LABELS[(1, 0)])
    assert lines[-1] == '5\t3\t0\t{}'.format(CONTINUITY_LABELS[(5, 3)])
    grid = placement_to_grid(_place_intelligence(), INTELLIGENCE_LABELS)
    assert len(report(grid).splitlines()) == 10


def test_report():
    """Test the rendering of grids as tables."""
    assert report(Grid()) == REPORT_HEADER + '\n'
    coord = Coordinate(3, 2)
    grid = Grid([StateCell('c2', coord, 'second', GroundSet('B')),
                 StateCell('c10', coord, 'third', GroundSet('C')),
                 StateCell('c1', coord, 'first', GroundSet('A'))])
    assert report(grid) == REPORT_HEADER + '\n3\t2\t0\tfirst, second, third\n'


def test_numeric_system_grid():
    """Test the reference grid of numerical-system states."""
    grid = numeric_system_grid()
    assert len(grid) == 22
    assert {c.coordinate.depth for c in grid} == set(range(6))
    assert max(c.coordinate.hierarchy for c in grid) == 3
    assert len(report(grid).splitlines()) == 23
    assert grid.cell('n5-3').content.domain == 'continuity_predicate'


def test_node_components():
    """Test every syntax node is placed exactly once."""
    placement = _place_continuity()
    nodes = [c for c in placement.components if c.role == ROLE_NODE]
    assert len(nodes) == len(placement.assignments)
    assert len(placement) > len(nodes)
