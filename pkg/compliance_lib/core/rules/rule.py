import math
import operator
from dataclasses import dataclass, field
from typing import Tuple, Union

from ... import exceptions
from ...constants import INFINITE
from ...enums import RuleKindEnum, ThetaEnum
from ...logger import logger

THETA_OPERATORS = {
    ThetaEnum.LT: operator.lt,
    ThetaEnum.EQ: operator.eq,
    ThetaEnum.GT: operator.gt,
    ThetaEnum.LE: operator.le,
    ThetaEnum.GE: operator.ge,
}


def theta_satisfied(theta, elapsed, delta_t):
    """Compare an elapsed time against a window bound.

    An infinite bound satisfies < and <= for every elapsed time and
    nothing else.

    Args:
        theta (ThetaEnum)
        elapsed (int): later minus earlier, in seconds
        delta_t (int|INFINITE)

    Returns:
        bool
    """
    if elapsed < 0:
        logger.error("Negative elapsed time {}".format(elapsed))
        raise exceptions.NegativeElapsedError(
            "Elapsed time must be >= 0, got {}".format(elapsed)
        )
    return THETA_OPERATORS[theta](elapsed, delta_t)


@dataclass(frozen=True)
class TimeWindow:
    delta_t: Union[int, float] = INFINITE
    theta: ThetaEnum = ThetaEnum.LE

    def __post_init__(self):
        if not isinstance(self.theta, ThetaEnum):
            raise exceptions.InvalidRuleError(
                "Unknown theta {!r}".format(self.theta)
            )
        if self.delta_t == INFINITE:
            return
        if type(self.delta_t) is not int or self.delta_t < 0:
            raise exceptions.InvalidRuleError(
                "delta_t must be a non-negative integer or INFINITE, "
                "got {!r}".format(self.delta_t)
            )

    @property
    def is_infinite(self):
        return math.isinf(self.delta_t)

    @property
    def is_unrestricted(self):
        return self.is_infinite and self.theta == ThetaEnum.LE

    def admits(self, elapsed):
        return theta_satisfied(self.theta, elapsed, self.delta_t)


UNRESTRICTED = TimeWindow()


@dataclass(frozen=True)
class Rule:
    """Order anti-pattern.

    `a` is always the earlier activity and `b` the later one:
    Response(a, b) asks every a to be followed by b, Precedes(a, b) asks
    every b to be preceded by a, Exclude(a, b, excluded) forbids the
    excluded activities between an a and a later b.
    """
    kind: RuleKindEnum
    a: str
    b: str
    excluded: Tuple[str, ...] = field(default_factory=tuple)
    window: TimeWindow = UNRESTRICTED

    def __post_init__(self):
        object.__setattr__(self, "excluded", tuple(self.excluded))
        if not isinstance(self.kind, RuleKindEnum):
            raise exceptions.InvalidRuleError(
                "Unknown rule kind {!r}".format(self.kind)
            )
        if not self.a or not self.b:
            raise exceptions.InvalidRuleError("Rule activities must be non-empty")
        if any(not activity for activity in self.excluded):
            raise exceptions.InvalidRuleError(
                "Excluded activities must be non-empty"
            )
        if (self.kind == RuleKindEnum.EXCLUDE) != bool(self.excluded):
            raise exceptions.InvalidRuleError(
                "An excluded list is required for EXCLUDE and only for EXCLUDE"
            )

    def __str__(self):
        from .parser import format_rule
        return format_rule(self)
