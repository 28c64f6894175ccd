import time

from ...enums import RuleKindEnum
from ...logger import logger
from ..engine.report import EventRef, ViolationReport, Witness


def _ref(event):
    return EventRef(event.activity, event.position, event.timestamp)


def _response(trace, rule):
    witnesses = []
    for trigger in trace:
        if trigger.activity != rule.a:
            continue
        partners = [
            event for event in trace
            if event.activity == rule.b and event.position > trigger.position
        ]
        answered = any(
            rule.window.admits(partner.timestamp - trigger.timestamp)
            for partner in partners
        )
        if not answered:
            nearest = min(partners, key=lambda e: e.position, default=None)
            witnesses.append(Witness(
                trace.case_id, _ref(trigger), nearest and _ref(nearest)
            ))
    return witnesses


def _precedes(trace, rule):
    witnesses = []
    for trigger in trace:
        if trigger.activity != rule.b:
            continue
        partners = [
            event for event in trace
            if event.activity == rule.a and event.position <= trigger.position
        ]
        answered = any(
            rule.window.admits(trigger.timestamp - partner.timestamp)
            for partner in partners
        )
        if not answered:
            nearest = max(partners, key=lambda e: e.position, default=None)
            witnesses.append(Witness(
                trace.case_id, _ref(trigger), nearest and _ref(nearest)
            ))
    return witnesses


def _exclude(trace, rule):
    witnesses = []
    for trigger in trace:
        if trigger.activity != rule.a:
            continue
        blockers = []
        for partner in trace:
            if partner.activity != rule.b:
                continue
            if partner.position <= trigger.position:
                continue
            if not rule.window.admits(partner.timestamp - trigger.timestamp):
                continue
            for between in trace:
                if (
                    between.activity in rule.excluded
                    and trigger.position < between.position < partner.position
                ):
                    blockers.append(between)
        if blockers:
            first = min(blockers, key=lambda e: e.position)
            witnesses.append(Witness(trace.case_id, _ref(trigger), _ref(first)))
    return witnesses


def oracle_check(log, rule):
    """Reference evaluation by direct enumeration over each trace.

    Pairs of events are enumerated for RESPONSE and PRECEDES, triples for
    EXCLUDE. The report has the engine's shape with encoding None.

    Args:
        log (EventLog)
        rule (Rule)

    Returns:
        ViolationReport
    """
    evaluate = {
        RuleKindEnum.RESPONSE: _response,
        RuleKindEnum.PRECEDES: _precedes,
        RuleKindEnum.EXCLUDE: _exclude,
    }[rule.kind]

    start = time.perf_counter()
    witnesses = []
    for trace in log:
        witnesses.extend(evaluate(trace, rule))
    elapsed = time.perf_counter() - start
    logger.debug("Oracle enumerated {} traces".format(len(log)))

    return ViolationReport.from_witnesses(rule, None, witnesses, elapsed)
