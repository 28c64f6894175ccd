import re

from ... import exceptions
from ...constants import INFINITE, TIME_UNIT_SECONDS
from ...enums import RuleKindEnum, ThetaEnum
from ...logger import logger
from .rule import Rule, TimeWindow

TOKEN_RE = re.compile(r"""
     (?P<space>\s+)
    |(?P<string>"(?:[^"\\]|\\.)*")
    |(?P<op><=|>=|<|>|=)
    |(?P<punct>[()\[\],])
    |(?P<word>[^\s,()\[\]"<>=]+)
""", re.VERBOSE)
BARE_LABEL_RE = re.compile(r"^[^\s,()\[\]\"<>=\\]+$")
DURATION_RE = re.compile(r"^(\d+)([a-zA-Z]*)$")
TIME_KEYWORD = "TIME"
INFINITE_KEYWORD = "inf"


def _tokenize(text):
    tokens = []
    position = 0
    while position < len(text):
        match = TOKEN_RE.match(text, position)
        if match is None:
            if text[position] == '"':
                raise exceptions.RuleSyntaxError(
                    "Unterminated quoted label", position, text
                )
            raise exceptions.RuleSyntaxError(
                "Unexpected character {!r}".format(text[position]),
                position, text
            )
        kind = match.lastgroup
        if kind != "space":
            tokens.append((kind, match.group(kind), position))
        position = match.end()
    return tokens


def _unquote(literal):
    return re.sub(r"\\(.)", r"\1", literal[1:-1])


class _RuleParser:
    """Recursive descent over the token list of one rule."""

    def __init__(self, text):
        self._text = text
        self._tokens = _tokenize(text)
        self._index = 0

    def _peek(self):
        if self._index < len(self._tokens):
            return self._tokens[self._index]
        return ("end", None, len(self._text))

    def _next(self):
        token = self._peek()
        self._index += 1
        return token

    def _error(self, message, position=None, error=exceptions.RuleSyntaxError):
        if position is None:
            position = self._peek()[2]
        return error(message, position, self._text)

    def _expect(self, value):
        kind, text, position = self._next()
        if text != value:
            found = "end of input" if kind == "end" else repr(text)
            raise self._error(
                "Expected {!r}, found {}".format(value, found), position
            )

    def _label(self):
        kind, text, position = self._next()
        if kind == "word":
            return text
        if kind == "string":
            label = _unquote(text)
            if not label:
                raise self._error("Empty activity label", position)
            return label
        found = "end of input" if kind == "end" else repr(text)
        raise self._error("Expected activity label, found {}".format(found), position)

    def _excluded_list(self):
        self._expect("[")
        labels = []
        if self._peek()[1] == "]":
            raise self._error(
                "Exclude list must not be empty",
                error=exceptions.MissingExcludeListError
            )
        labels.append(self._label())
        while self._peek()[1] == ",":
            self._next()
            labels.append(self._label())
        self._expect("]")
        return tuple(labels)

    def _duration(self):
        kind, text, position = self._next()
        if kind != "word":
            raise self._error("Expected time value", position)
        if text.startswith("-"):
            raise self._error(
                "Time window must not be negative", position,
                error=exceptions.NegativeTimeWindowError
            )
        if text.lower() == INFINITE_KEYWORD:
            return INFINITE
        match = DURATION_RE.match(text)
        if match is None:
            raise self._error("Malformed time value {!r}".format(text), position)
        value, unit = int(match.group(1)), match.group(2)
        if not unit:
            unit_kind, unit, unit_position = self._next()
            if unit_kind != "word":
                raise self._error("Expected time unit", unit_position)
        if unit.lower() not in TIME_UNIT_SECONDS:
            raise self._error("Unknown time unit {!r}".format(unit), position)
        return value * TIME_UNIT_SECONDS[unit.lower()]

    def _window(self):
        kind, text, position = self._peek()
        if kind == "end":
            return TimeWindow()
        if kind != "word" or text.upper() != TIME_KEYWORD:
            raise self._error("Expected TIME clause or end of rule", position)
        self._next()

        kind, text, position = self._next()
        if kind != "op":
            raise self._error("Expected comparison operator", position)
        theta = ThetaEnum(text)
        return TimeWindow(delta_t=self._duration(), theta=theta)

    def parse(self):
        kind, text, position = self._next()
        try:
            rule_kind = RuleKindEnum(text.upper()) if kind == "word" else None
        except ValueError:
            rule_kind = None
        if rule_kind is None:
            raise self._error(
                "Expected RESPONSE, PRECEDES or EXCLUDE", position
            )

        self._expect("(")
        a = self._label()
        self._expect(",")
        b = self._label()

        excluded = ()
        if self._peek()[1] == ",":
            comma_position = self._next()[2]
            if rule_kind != RuleKindEnum.EXCLUDE:
                raise self._error(
                    "Only EXCLUDE takes an activity list", comma_position
                )
            excluded = self._excluded_list()
        if rule_kind == RuleKindEnum.EXCLUDE and not excluded:
            raise self._error(
                "EXCLUDE requires a bracketed activity list",
                error=exceptions.MissingExcludeListError
            )
        self._expect(")")

        window = self._window()
        if self._peek()[0] != "end":
            raise self._error("Unexpected trailing input")

        return Rule(
            kind=rule_kind, a=a, b=b, excluded=excluded, window=window
        )


def parse_rule(text):
    """Parse one rule.

    Grammar: KIND '(' A ',' B [',' '[' C (',' C)* ']'] ')'
    ['TIME' THETA (INTEGER UNIT | 'inf')], units s, m, h, d. Without a
    TIME clause the window is unrestricted (infinite, <=).

    Args:
        text (string)

    Returns:
        Rule
    """
    try:
        return _RuleParser(text).parse()
    except exceptions.RuleSyntaxError as e:
        logger.error("Rule syntax error: {}".format(e.message))
        raise


def _format_label(label):
    if BARE_LABEL_RE.match(label):
        return label
    return '"{}"'.format(label.replace("\\", "\\\\").replace('"', '\\"'))


def _format_duration(seconds):
    for unit, factor in sorted(
        TIME_UNIT_SECONDS.items(), key=lambda item: item[1], reverse=True
    ):
        if seconds and seconds % factor == 0:
            return "{}{}".format(seconds // factor, unit)
    return "{}s".format(seconds)


def format_rule(rule):
    """Canonical text of a rule; parse_rule reads it back unchanged."""
    arguments = [_format_label(rule.a), _format_label(rule.b)]
    if rule.excluded:
        arguments.append(
            "[" + ", ".join(_format_label(c) for c in rule.excluded) + "]"
        )
    text = "{}({})".format(rule.kind.value, ", ".join(arguments))
    window = rule.window
    if not window.is_unrestricted:
        if window.is_infinite:
            bound = INFINITE_KEYWORD
        else:
            bound = _format_duration(window.delta_t)
        text += " TIME {} {}".format(window.theta.value, bound)
    return text


def parse_rule_file(stream):
    """Read rules, one per line; blank lines and '#' comments are skipped.

    Returns:
        list of Rule
    """
    rules = []
    for line_number, line in enumerate(stream, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            rules.append(parse_rule(stripped))
        except exceptions.RuleError as e:
            raise exceptions.RuleFileError(e.message, line_number) from e
    logger.info("Read {} rules".format(len(rules)))
    return rules


def load_rule_file(path):
    try:
        f = open(path, encoding="utf-8")
    except OSError as e:
        logger.exception(e)
        raise exceptions.RuleError(
            "Cannot open rule file \"{}\": {}".format(path, e.strerror)
        ) from e
    with f:
        return parse_rule_file(f)
