import pytest
from hypothesis import given, settings

from compliance_lib.core.bench import GeneratorParams, gen_log
from compliance_lib.core.encoders import encode
from compliance_lib.core.engine import check
from compliance_lib.core.oracle import oracle_check
from compliance_lib.core.rules import Rule, TimeWindow
from compliance_lib.enums import EncodingKindEnum, RuleKindEnum, ThetaEnum

from .strategies import event_logs, rules


@settings(max_examples=1000)
@given(event_logs(), rules())
def test_encodings_agree_with_oracle(log, rule):
    expected = oracle_check(log, rule)
    for kind in EncodingKindEnum:
        report = check(encode(log, kind), rule)
        assert report.case_ids == expected.case_ids, kind
        # witnesses too, so every trigger is a genuine violation
        assert report.violations == expected.violations, kind


@settings(max_examples=100)
@given(event_logs(max_cases=20), rules())
def test_parallel_agrees_with_sequential(log, rule):
    for kind in EncodingKindEnum:
        encoded = encode(log, kind)
        assert check(encoded, rule, parallel=True, max_workers=3) \
            .same_findings(check(encoded, rule))


@settings(max_examples=200)
@given(event_logs(max_cases=20), rules())
def test_repeated_checks_are_identical(log, rule):
    encoded = encode(log, EncodingKindEnum.UA)
    assert check(encoded, rule).same_findings(check(encoded, rule))


DELTAS = [10 ** 2, 10 ** 4, 10 ** 6]


def nested_violations(log, kind, theta):
    encoded = encode(log, EncodingKindEnum.UA)
    return [
        set(check(encoded, Rule(
            kind, "a0", "a1", window=TimeWindow(delta_t, theta)
        )).case_ids)
        for delta_t in DELTAS
    ]


@pytest.mark.parametrize("seed", range(100))
@pytest.mark.parametrize("kind", [RuleKindEnum.RESPONSE,
                                  RuleKindEnum.PRECEDES])
def test_window_monotonicity(seed, kind):
    log = gen_log(GeneratorParams(
        num_cases=20, min_len=2, max_len=10, num_activities=3, seed=seed
    ))
    small, medium, large = nested_violations(log, kind, ThetaEnum.LT)
    assert small >= medium >= large

    small, medium, large = nested_violations(log, kind, ThetaEnum.GT)
    assert small <= medium <= large
