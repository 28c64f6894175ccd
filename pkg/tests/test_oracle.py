from hypothesis import given

from compliance_lib.core.event_log import Event, EventLog, Trace
from compliance_lib.core.oracle import oracle_check
from compliance_lib.core.rules import Rule, TimeWindow, parse_rule
from compliance_lib.enums import RuleKindEnum

from .strategies import event_logs, rules


def test_sample_rules(sample_log):
    assert oracle_check(sample_log, parse_rule("PRECEDES(B, E)")).case_ids \
        == ("2", "3")
    assert oracle_check(sample_log, parse_rule("RESPONSE(A, B)")).case_ids \
        == ("2", "3")
    assert oracle_check(
        sample_log, parse_rule("PRECEDES(B, E) TIME <= 200000s")
    ).case_ids == ("1", "2", "3")


def test_report_shape(sample_log):
    report = oracle_check(sample_log, parse_rule("EXCLUDE(A, D, [E])"))
    assert report.encoding is None
    assert report.encoding_name == "oracle"
    assert report.to_dict()["encoding"] == "oracle"
    assert report.case_ids == ("1", "2", "3")


def test_single_event_trace():
    log = EventLog([Trace("1", (Event("1", "X", 0, 1),))])
    assert oracle_check(log, parse_rule("RESPONSE(A, X)")).case_ids == ()
    assert oracle_check(log, parse_rule("RESPONSE(X, A)")).case_ids == ("1",)


def is_subsequence(needle, haystack):
    remaining = iter(haystack)
    return all(item in remaining for item in needle)


def order_only_violations(log, rule):
    """Violating cases of an unrestricted rule from activity order alone."""
    violating = []
    for trace in log:
        activities = trace.activities
        for i, activity in enumerate(activities):
            before, after = activities[:i], activities[i + 1:]
            if rule.kind == RuleKindEnum.RESPONSE and activity == rule.a:
                broken = rule.b not in after
            elif rule.kind == RuleKindEnum.PRECEDES and activity == rule.b:
                broken = rule.a not in activities[:i + 1]
            elif rule.kind == RuleKindEnum.EXCLUDE and activity == rule.a:
                broken = any(
                    is_subsequence((c, rule.b), after) for c in rule.excluded
                )
            else:
                continue
            if broken:
                violating.append(trace.case_id)
                break
    return tuple(violating)


@given(event_logs(max_cases=10), rules())
def test_unrestricted_window_is_pure_order(log, rule):
    rule = Rule(rule.kind, rule.a, rule.b, rule.excluded, TimeWindow())
    assert oracle_check(log, rule).case_ids == order_only_violations(log, rule)
