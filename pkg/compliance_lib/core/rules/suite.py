from ...enums import RuleKindEnum, ThetaEnum
from .rule import Rule, TimeWindow


def six_variant_suite(a, b, excluded, delta_t):
    """The six benchmark queries of one log.

    Precedes and Response each within (<) and beyond (>) the window,
    then Exclude with the window and without it.

    Args:
        a (string): earlier activity
        b (string): later activity
        excluded (iterable of string): activities forbidden between a and b
        delta_t (int): window in seconds

    Returns:
        list of Rule
    """
    within = TimeWindow(delta_t=delta_t, theta=ThetaEnum.LT)
    beyond = TimeWindow(delta_t=delta_t, theta=ThetaEnum.GT)
    excluded = tuple(excluded)

    return [
        Rule(RuleKindEnum.PRECEDES, a, b, window=within),
        Rule(RuleKindEnum.PRECEDES, a, b, window=beyond),
        Rule(RuleKindEnum.RESPONSE, a, b, window=within),
        Rule(RuleKindEnum.RESPONSE, a, b, window=beyond),
        Rule(RuleKindEnum.EXCLUDE, a, b, excluded, window=within),
        Rule(RuleKindEnum.EXCLUDE, a, b, excluded),
    ]
