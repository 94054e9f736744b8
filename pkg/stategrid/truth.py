# coding=utf-8
"""Three-valued truth with the strong Kleene connectives.

The UNDEFINABLE value fuses the definability plane (state depth 0) with the
Boolean plane (state depth 1): a value is definable when it is TRUE or FALSE and
its truth is only meaningful in that case.
"""
from enum import Enum


class TriValue(Enum):
    """A truth value that may be undefinable."""
    TRUE = 'true'
    FALSE = 'false'
    UNDEFINABLE = 'undef'

    @classmethod
    def from_bool(cls, value):
        """Get a definable TriValue from a Python boolean."""
        return cls.TRUE if value else cls.FALSE

    @classmethod
    def from_text(cls, text):
        """Get a TriValue from its text form (true, false or undef)."""
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(
                'Truth value must be one of true, false or undef. Got "{}".'.format(text))

    @property
    def is_definable(self):
        """Boolean for whether the value is TRUE or FALSE."""
        return self is not TriValue.UNDEFINABLE

    def __str__(self):
        return self.value


TRUE = TriValue.TRUE
FALSE = TriValue.FALSE
UNDEFINABLE = TriValue.UNDEFINABLE


def definable(value):
    """Project a TriValue onto the definability plane."""
    return value is not UNDEFINABLE


def truth(value):
    """Project a definable TriValue onto the Boolean plane."""
    assert definable(value), 'Truth of an undefinable value is meaningless.'
    return value is TRUE


def not3(a):
    """Three-valued negation."""
    if a is UNDEFINABLE:
        return UNDEFINABLE
    return FALSE if a is TRUE else TRUE


def and3(a, b):
    """Strong Kleene conjunction."""
    if a is FALSE or b is FALSE:
        return FALSE
    if a is TRUE and b is TRUE:
        return TRUE
    return UNDEFINABLE


def or3(a, b):
    """Strong Kleene disjunction."""
    if a is TRUE or b is TRUE:
        return TRUE
    if a is FALSE and b is FALSE:
        return FALSE
    return UNDEFINABLE


def implies3(a, b):
    """Strong Kleene implication, defined as or3(not3(a), b)."""
    return or3(not3(a), b)


def all3(values):
    """Fold an iterable of TriValues with and3, starting from TRUE."""
    result = TRUE
    for val in values:
        result = and3(result, val)
        if result is FALSE:
            break
    return result


def any3(values):
    """Fold an iterable of TriValues with or3, starting from FALSE."""
    result = FALSE
    for val in values:
        result = or3(result, val)
        if result is TRUE:
            break
    return result


def info_leq(a, b):
    """Information order: UNDEFINABLE is below both definable values.

    Returns:
        True if a is UNDEFINABLE or a equals b.
    """
    return a is UNDEFINABLE or a is b
