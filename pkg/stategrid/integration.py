# coding=utf-8
"""Three-way integration of universes edited by different agents.

Cells are matched by id and compared through their canonical document line.
Edits made on one side only are kept. Edits made on both sides that disagree
become conflicts: the cell stays on the grid but its definability is
undefinable and a truth value it holds is demoted to undefinable as well.
"""
import logging
from dataclasses import dataclass, replace
from typing import Tuple

from .errors import UnrelatedUniversesError
from .grid import Grid, StateCell, TruthResult
from .model import Model
from .registry import DepthRegistry
from .truth import UNDEFINABLE
from .universe import Universe, LogEntry, digest
from .realtime import PredictionStatus
from .writer import cell_to_line

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Conflict:
    """A cell edited differently on both sides of a merge."""
    cell_id: str
    left: StateCell
    right: StateCell


@dataclass(frozen=True)
class MergeOutcome:
    """The merged universe together with everything that could not be merged.

    Symbol conflicts are (time, name) pairs of interpretations that both sides
    changed differently. The merged universe leaves those names uninterpreted.
    """
    merged: Universe
    conflicts: Tuple[Conflict, ...]
    symbol_conflicts: Tuple[Tuple[int, str], ...]

    @property
    def has_conflicts(self):
        return bool(self.conflicts or self.symbol_conflicts)


def three_way(base, left, right):
    """Pick the merged value of one item from its base and two edited versions.

    Returns:
        A tuple of (value, conflicted). When conflicted is True the value is
        None and the caller decides what to keep.
    """
    if left == right:
        return left, False
    if left == base:
        return right, False
    if right == base:
        return left, False
    return None, True


def check_ancestry(base, a, b):
    """Raise UnrelatedUniversesError unless both sides descend from base."""
    for side in (a, b):
        if side.log[:len(base.log)] != base.log:
            raise UnrelatedUniversesError(
                'Universe "{}" does not descend from "{}": their logs diverge.'.format(
                    side.identifier, base.identifier))


def demoted(cell):
    """Get a conflicted cell with no defined value left in it."""
    cell = cell.with_definability(UNDEFINABLE)
    if isinstance(cell.content, TruthResult):
        cell = cell.with_content(TruthResult(UNDEFINABLE))
    return cell


def merge_cells(base, a, b):
    """Merge the grids of two universes against their base.

    A cell missing on one side counts as unchanged there.

    Returns:
        A tuple of (cells, conflicts).
    """
    ids = set(c.identifier for c in base.grid) | \
        set(c.identifier for c in a.grid) | set(c.identifier for c in b.grid)
    cells, conflicts = [], []
    for cell_id in sorted(ids):
        original = base.grid.get(cell_id)
        left = a.grid.get(cell_id, original)
        right = b.grid.get(cell_id, original)
        if left is None or right is None:
            cells.append(left or right)
            continue
        lines = [cell_to_line(c) if c is not None else None
                 for c in (original, left, right)]
        line, conflicted = three_way(*lines)
        if not conflicted:
            cells.append(left if line == lines[1] else right)
            continue
        if original is not None:
            kept = original
        else:
            kept = left if lines[1] < lines[2] else right
        cells.append(demoted(kept))
        conflicts.append(Conflict(cell_id, left, right))
    return cells, conflicts


def merge_registries(base, a, b):
    """Merge depth registries name by name. Disagreements keep the base depth."""
    d0, da, db = base.registry.to_dict(), a.registry.to_dict(), b.registry.to_dict()
    depths = {}
    for name in sorted(set(da) | set(db)):
        left, right = da.get(name, d0.get(name)), db.get(name, d0.get(name))
        if left is None or right is None:
            depths[name] = left if right is None else right
            continue
        depth, conflicted = three_way(d0.get(name), left, right)
        if conflicted:
            depth = d0[name] if name in d0 else min(left, right)
        depths[name] = depth
    return DepthRegistry.from_dict(depths)


def _interpretation(u, time, name):
    if time > u.t_max:
        return None
    return u.models[time].interpretation(name)


def merge_models(base, a, b):
    """Merge snapshot models per time index and name.

    A snapshot a side has not materialized counts as unchanged there.

    Returns:
        A tuple of (models, symbol_conflicts).
    """
    t_max = max(a.t_max, b.t_max)
    models, conflicts = [], []
    for time in range(t_max + 1):
        names = set()
        for u in (base, a, b):
            if time <= u.t_max:
                names |= u.models[time].interpreted
        model = Model()
        for name in sorted(names):
            original = _interpretation(base, time, name)
            left = _interpretation(a, time, name) if time <= a.t_max else original
            right = _interpretation(b, time, name) if time <= b.t_max else original
            value, conflicted = three_way(original, left, right)
            if conflicted:
                conflicts.append((time, name))
                continue
            if value is not None:
                kind, data = value
                model = model.with_interpretation(
                    name, kind, dict(data) if kind == 'family' else data)
        models.append(model)
    return models, conflicts


def merge_predictions(a, b):
    """Unite the predictions of both sides.

    A settled status wins over a pending one. When the sides settle the same
    prediction differently it counts as refuted.
    """
    merged = {}
    for prediction in a.predictions + b.predictions:
        current = merged.get(prediction.key)
        if current is None or (not current.status.is_resolved and
                               prediction.status.is_resolved):
            merged[prediction.key] = prediction
        elif current.status.is_resolved and prediction.status.is_resolved and \
                current.status != prediction.status:
            merged[prediction.key] = replace(current, status=PredictionStatus.REFUTED)
    return tuple(merged[k] for k in sorted(merged))


def integrate(base, a, b, author=None):
    """Merge two universes that were edited from a common base.

    Args:
        base: The common ancestor Universe.
        a: A Universe derived from base.
        b: Another Universe derived from base.
        author: Optional id of the agent applying the merge.

    Returns:
        A MergeOutcome. integrate(base, a, b) and integrate(base, b, a) give
        the same merged universe and the same conflicting cell ids.
    """
    check_ancestry(base, a, b)
    cells, conflicts = merge_cells(base, a, b)
    models, symbol_conflicts = merge_models(base, a, b)
    vocab = a.vocab.union(b.vocab)
    registry = merge_registries(base, a, b)
    identifier = a.identifier if a.identifier == b.identifier else base.identifier
    sides = sorted(
        ' '.join(e.digest for e in u.log[len(base.log):]) for u in (a, b))
    entry = LogEntry(len(base.log), 'integrate', digest('|'.join(sides)), author)
    merged = Universe(identifier, vocab, registry, Grid(cells), models,
                      merge_predictions(a, b), base.log + (entry,))
    _logger.info('Integrated %s: %d cell conflicts, %d symbol conflicts.',
                 identifier, len(conflicts), len(symbol_conflicts))
    return MergeOutcome(merged, tuple(conflicts), tuple(symbol_conflicts))
