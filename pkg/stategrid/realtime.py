# coding=utf-8
"""Real-time progression of universes and predictions about their future.

A tick materializes the next time index. Only what the observability mask
names is carried over, so every other name becomes undefinable at the new
time until it is observed again. Predictions claim a truth value for a cell at
a future time and are settled once that time has been reached.
"""
import logging
from dataclasses import dataclass, replace
from enum import Enum

from .errors import UnknownMaskEntryError, NotAFuturePredictionError, \
    GridStructureError, UnboundVariableError
from .grid import PredicateState
from .model import Model
from .truth import TriValue, TRUE, FALSE, UNDEFINABLE
from .universe import evaluate_at

_logger = logging.getLogger(__name__)

COPY_SEPARATOR = '..t'


class PredictionStatus(Enum):
    PENDING = 'pending'
    CONFIRMED = 'confirmed'
    REFUTED = 'refuted'

    @property
    def is_resolved(self):
        return self is not PredictionStatus.PENDING


@dataclass(frozen=True)
class Prediction:
    """A claim that a predicate cell will have a truth value at a future time."""
    cell_id: str
    claim: TriValue
    target: int
    status: PredictionStatus = PredictionStatus.PENDING

    def __post_init__(self):
        assert self.claim in (TRUE, FALSE), \
            'A prediction must claim true or false. Got {}.'.format(self.claim)
        assert isinstance(self.target, int) and self.target >= 0, \
            'Prediction time must be a natural number. Got {}.'.format(self.target)

    @property
    def key(self):
        """Get a (cell_id, target, claim) tuple identifying the prediction."""
        return (self.cell_id, self.target, self.claim.value)


def copied_cell_id(identifier, time):
    """Get the id of the copy of a cell carried to a time by a tick."""
    base = identifier.split(COPY_SEPARATOR)[0]
    return '{}{}{}'.format(base, COPY_SEPARATOR, time)


def advance_time(u, mask, author=None):
    """Materialize the next time index of a universe.

    Args:
        u: A Universe.
        mask: An iterable of the symbol names and cell ids that stay observable.
            Masked interpretations are copied from the latest snapshot, with
            family values moved to the new index. Masked cells are copied to the
            new time under the id <cell-id>..t<time>.
        author: Optional id of the agent applying the tick.

    Returns:
        A new Universe whose t_max is one more than that of u.
    """
    mask = frozenset(mask)
    unknown = mask - set(u.vocab.names) - set(c.identifier for c in u.grid)
    if unknown:
        raise UnknownMaskEntryError(unknown)
    time = u.t_max + 1
    last = u.models[-1]
    carriers, mappings, families = {}, {}, {}
    for name in sorted(mask & last.interpreted):
        kind = last.kind_of(name)
        if kind == 'set':
            carriers[name] = last.carrier(name)
        elif kind == 'map':
            mappings[name] = last.graph(name)
        elif kind == 'family' and last.family_at(name, time - 1) is not None:
            families[name] = {time: last.family_at(name, time - 1)}
    copies = {}
    for cell in u.grid:
        if cell.identifier in mask:
            copy_id = copied_cell_id(cell.identifier, time)
            kept = copies.get(copy_id)
            # a cell and its earlier copies share one copy id; the latest wins
            if kept is None or (cell.coordinate.time, cell.identifier) > \
                    (kept.coordinate.time, kept.identifier):
                copies[copy_id] = cell
    grid = u.grid
    for copy_id in sorted(copies):
        cell = copies[copy_id]
        grid = grid.put(cell.moved(copy_id, cell.coordinate.at_time(time)))
    _logger.debug('Tick of %s to time %d keeps %d of %d names.', u.identifier, time,
                  len(carriers) + len(mappings) + len(families), len(u.vocab))
    models = u.models + (Model(carriers, mappings, families),)
    return u.evolve('tick', ','.join(sorted(mask)), grid=grid, models=models,
                   author=author)


def record_prediction(u, cell_id, claim, target, author=None):
    """Record a prediction about a predicate cell.

    Args:
        u: A Universe.
        cell_id: The id of a cell holding a PredicateState.
        claim: TRUE or FALSE. Predicting undefinability is not allowed.
        target: The time at which the claim is to be checked. It must be
            later than the latest time of the universe.
        author: Optional id of the agent making the prediction.

    Returns:
        A new Universe with one more pending prediction.
    """
    if target <= u.t_max:
        raise NotAFuturePredictionError(target, u.t_max)
    cell = u.grid.cell(cell_id)
    if not isinstance(cell.content, PredicateState):
        raise GridStructureError(
            'Cell "{}" holds no predicate to predict the truth of.'.format(cell_id))
    prediction = Prediction(cell_id, claim, target)
    return u.evolve(
        'predict', '{} {} {}'.format(cell_id, claim, target),
        predictions=u.predictions + (prediction,), author=author)


def settle(u, prediction):
    """Get the status of a prediction given what a universe now knows."""
    if prediction.status.is_resolved or prediction.target > u.t_max:
        return prediction.status
    cell = u.grid.get(prediction.cell_id)
    if cell is None or not isinstance(cell.content, PredicateState):
        return prediction.status
    try:
        value = evaluate_at(u, cell.content.expr, prediction.target)
    except UnboundVariableError:
        value = UNDEFINABLE  # names from outside the vocabulary never resolve
    if value is UNDEFINABLE:
        return PredictionStatus.PENDING
    if value is prediction.claim:
        return PredictionStatus.CONFIRMED
    return PredictionStatus.REFUTED


def verify_predictions(u, author=None):
    """Settle every pending prediction whose time has been reached.

    A prediction is confirmed when its cell evaluates to the claim at the
    target time, refuted when it evaluates to the opposite value and stays
    pending while the value is undefinable. Settled predictions never change.

    Returns:
        A new Universe.
    """
    predictions = tuple(replace(p, status=settle(u, p)) for p in u.predictions)
    resolved = sum(1 for old, new in zip(u.predictions, predictions)
                   if old.status != new.status)
    _logger.info('Resolved %d of %d predictions of %s.', resolved,
                 len(predictions), u.identifier)
    return u.evolve('verify', str(u.t_max), predictions=predictions,
                   author=author)
