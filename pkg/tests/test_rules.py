import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from compliance_lib import exceptions
from compliance_lib.constants import INFINITE
from compliance_lib.core.rules import (Rule, TimeWindow, format_rule,
                                       load_rule_file, parse_rule,
                                       parse_rule_file, six_variant_suite,
                                       theta_satisfied)
from compliance_lib.enums import RuleKindEnum, ThetaEnum


@pytest.mark.parametrize("theta, elapsed, delta_t, expected", [
    (ThetaEnum.LT, 5, 10, True),
    (ThetaEnum.EQ, 10, 10, True),
    (ThetaEnum.GT, 5, 10, False),
    (ThetaEnum.LE, 999999, INFINITE, True),
    (ThetaEnum.LT, 0, INFINITE, True),
    (ThetaEnum.EQ, 10, INFINITE, False),
    (ThetaEnum.GT, 10 ** 12, INFINITE, False),
    (ThetaEnum.GE, 10 ** 12, INFINITE, False),
])
def test_theta_satisfied(theta, elapsed, delta_t, expected):
    assert theta_satisfied(theta, elapsed, delta_t) is expected


@given(st.integers(min_value=0, max_value=10 ** 9))
def test_theta_at_the_bound(x):
    assert theta_satisfied(ThetaEnum.LE, x, x)
    assert theta_satisfied(ThetaEnum.GE, x, x)
    assert not theta_satisfied(ThetaEnum.LT, x, x)
    assert not theta_satisfied(ThetaEnum.GT, x, x)


def test_negative_elapsed():
    with pytest.raises(exceptions.NegativeElapsedError):
        theta_satisfied(ThetaEnum.LT, -1, 10)


def test_parse_default_window():
    rule = parse_rule("PRECEDES(B, E)")
    assert rule == Rule(RuleKindEnum.PRECEDES, "B", "E")
    assert rule.window == TimeWindow(INFINITE, ThetaEnum.LE)


def test_parse_time_clause_in_hours():
    rule = parse_rule("RESPONSE(A, B) TIME < 3h")
    assert rule.kind == RuleKindEnum.RESPONSE
    assert (rule.a, rule.b) == ("A", "B")
    assert rule.window == TimeWindow(10800, ThetaEnum.LT)


def test_parse_exclude():
    rule = parse_rule("EXCLUDE(A, D, [E]) TIME <= 7200s")
    assert rule.excluded == ("E",)
    assert rule.window == TimeWindow(7200, ThetaEnum.LE)


@pytest.mark.parametrize("text, delta_t", [
    ("RESPONSE(A, B) TIME >= 2 d", 172800),
    ("RESPONSE(A, B) TIME = 90m", 5400),
    ("response(A, B) time > 0s", 0),
])
def test_parse_units_and_case(text, delta_t):
    assert parse_rule(text).window.delta_t == delta_t


def test_quoted_labels():
    rule = parse_rule(
        'EXCLUDE("W_Call after offers", "O_Sent, back", [C, "x \\"y\\""])'
    )
    assert rule.a == "W_Call after offers"
    assert rule.b == "O_Sent, back"
    assert rule.excluded == ("C", 'x "y"')


def test_missing_exclude_list():
    with pytest.raises(exceptions.MissingExcludeListError):
        parse_rule("EXCLUDE(A, D)")
    with pytest.raises(exceptions.MissingExcludeListError):
        parse_rule("EXCLUDE(A, D, [])")


def test_negative_window():
    with pytest.raises(exceptions.NegativeTimeWindowError):
        parse_rule("RESPONSE(A, B) TIME < -5s")


@pytest.mark.parametrize("text, position", [
    ("", 0),
    ("ALWAYS(A, B)", 0),
    ("RESPONSE A, B)", 9),
    ("RESPONSE(A B)", 11),
    ("RESPONSE(A, B", 13),
    ("RESPONSE(A, B, [C])", 13),
    ("RESPONSE(A, B) TIME < 5w", 22),
    ("RESPONSE(A, B) extra", 15),
    ('RESPONSE("A, B)', 9),
])
def test_syntax_error_position(text, position):
    with pytest.raises(exceptions.RuleSyntaxError) as e:
        parse_rule(text)
    assert e.value.position == position


def test_rule_invariants():
    with pytest.raises(exceptions.InvalidRuleError):
        Rule(RuleKindEnum.RESPONSE, "", "B")
    with pytest.raises(exceptions.InvalidRuleError):
        Rule(RuleKindEnum.EXCLUDE, "A", "B")
    with pytest.raises(exceptions.InvalidRuleError):
        Rule(RuleKindEnum.PRECEDES, "A", "B", ("C",))
    with pytest.raises(exceptions.InvalidRuleError):
        TimeWindow(-1, ThetaEnum.LT)


def test_format_rule():
    assert format_rule(parse_rule("RESPONSE(A,B) TIME < 10800 s")) \
        == "RESPONSE(A, B) TIME < 3h"
    assert format_rule(parse_rule("EXCLUDE(A, D, [E, F])")) \
        == "EXCLUDE(A, D, [E, F])"
    assert str(parse_rule('PRECEDES("a b", c) TIME >= 61s')) \
        == 'PRECEDES("a b", c) TIME >= 61s'


@pytest.mark.parametrize("theta", [ThetaEnum.LT, ThetaEnum.EQ, ThetaEnum.GT,
                                   ThetaEnum.GE])
def test_infinite_window_text(theta):
    rule = Rule(RuleKindEnum.RESPONSE, "A", "E",
                window=TimeWindow(INFINITE, theta))
    text = "RESPONSE(A, E) TIME {} inf".format(theta.value)
    assert format_rule(rule) == text
    assert parse_rule(text) == rule


def test_infinite_le_window_is_unrestricted():
    assert parse_rule("RESPONSE(A, E) TIME <= INF").window.is_unrestricted
    assert format_rule(parse_rule("RESPONSE(A, E) TIME <= inf")) \
        == "RESPONSE(A, E)"


labels = st.text(
    alphabet=st.sampled_from('ab _,"\\[]()<=x1'), min_size=1, max_size=6
)
windows = st.one_of(
    st.just(TimeWindow()),
    st.builds(
        TimeWindow, delta_t=st.just(INFINITE),
        theta=st.sampled_from(list(ThetaEnum)),
    ),
    st.builds(
        TimeWindow,
        delta_t=st.integers(min_value=0, max_value=10 ** 7),
        theta=st.sampled_from(list(ThetaEnum)),
    ),
)


@st.composite
def rules(draw):
    kind = draw(st.sampled_from(list(RuleKindEnum)))
    excluded = ()
    if kind == RuleKindEnum.EXCLUDE:
        excluded = tuple(draw(st.lists(labels, min_size=1, max_size=3)))
    return Rule(kind, draw(labels), draw(labels), excluded, draw(windows))


@given(rules())
def test_printed_rule_parses_back(rule):
    text = format_rule(rule)
    assert parse_rule(text) == rule
    assert format_rule(parse_rule(text)) == text


def test_parse_rule_file():
    stream = io.StringIO(
        "# comment\n\nPRECEDES(B, E)\n  \nRESPONSE(A, E) TIME < 1d\n"
    )
    parsed = parse_rule_file(stream)
    assert [rule.kind for rule in parsed] == [
        RuleKindEnum.PRECEDES, RuleKindEnum.RESPONSE
    ]


def test_parse_rule_file_reports_line():
    with pytest.raises(exceptions.RuleFileError) as e:
        parse_rule_file(io.StringIO("PRECEDES(B, E)\n# ok\nEXCLUDE(A, B)\n"))
    assert e.value.line_number == 3


def test_load_rule_file(rules_path):
    assert len(load_rule_file(rules_path)) == 4


def test_six_variant_suite():
    suite = six_variant_suite("a0", "a19", ["a10"], 3600)
    assert [(rule.kind, rule.window.theta) for rule in suite] == [
        (RuleKindEnum.PRECEDES, ThetaEnum.LT),
        (RuleKindEnum.PRECEDES, ThetaEnum.GT),
        (RuleKindEnum.RESPONSE, ThetaEnum.LT),
        (RuleKindEnum.RESPONSE, ThetaEnum.GT),
        (RuleKindEnum.EXCLUDE, ThetaEnum.LT),
        (RuleKindEnum.EXCLUDE, ThetaEnum.LE),
    ]
    assert suite[-1].window.is_unrestricted
    assert suite[4].excluded == ("a10",)
