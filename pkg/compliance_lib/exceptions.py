class ComplianceLibException(Exception):
    def __init__(self, message, additional_info=None):
        self.message = message
        self.additional_context = additional_info
        super(ComplianceLibException, self).__init__(self.message)




class EventLogError(ComplianceLibException): # noqa
    """Event log error."""


class EmptySourceError(EventLogError):
    """Source has no header row."""


class MissingColumnError(EventLogError):
    """A required column is absent from the header."""

    def __init__(self, column, message=None):
        self.column = column
        super().__init__(
            message or "Required column \"{}\" not found".format(column),
            additional_info={"column": column}
        )


class RowParseError(EventLogError):
    """A data row could not be turned into an event."""

    def __init__(self, message, line_number):
        self.line_number = line_number
        super().__init__(
            "Line {}: {}".format(line_number, message),
            additional_info={"line_number": line_number}
        )


class InvalidTimestampError(RowParseError):
    """Timestamp is neither epoch seconds nor ISO-8601."""


class EmptyFieldError(RowParseError):
    """Case or activity value is empty."""




class GraphError(ComplianceLibException): # noqa
    """Labeled property graph error."""


class EmptyLabelSetError(GraphError):
    """Node created without labels."""


class DanglingEndpointError(GraphError):
    """Edge endpoint does not exist."""


class FrozenGraphError(GraphError):
    """Mutation attempted on a frozen graph."""


class PropertyTypeMismatchError(GraphError):
    """Property values of different types were compared."""




class EncodingError(ComplianceLibException): # noqa
    """Encoding error."""


class UnknownEncodingError(EncodingError):
    """No encoder or strategy registered for the encoding."""


class SizeForecastError(EncodingError):
    """Counts given to the size forecast are inconsistent."""




class RuleError(ComplianceLibException): # noqa
    """Rule error."""


class InvalidRuleError(RuleError):
    """Rule fields violate the rule invariants."""


class RuleSyntaxError(RuleError):
    """Rule text does not follow the grammar."""

    def __init__(self, message, position, text=None):
        self.position = position
        self.text = text
        super().__init__(
            "{} at position {}".format(message, position),
            additional_info={"position": position, "text": text}
        )


class MissingExcludeListError(RuleSyntaxError):
    """EXCLUDE rule without a bracketed activity list."""


class NegativeTimeWindowError(RuleSyntaxError):
    """TIME clause with a negative value."""


class RuleFileError(RuleError):
    """A line of a rule file could not be parsed."""

    def __init__(self, message, line_number):
        self.line_number = line_number
        super().__init__(
            "Line {}: {}".format(line_number, message),
            additional_info={"line_number": line_number}
        )


class NegativeElapsedError(RuleError):
    """Elapsed time handed to the comparator is negative."""




class BenchError(ComplianceLibException): # noqa
    """Benchmark error."""


class InvalidGeneratorParametersError(BenchError):
    """Log generator bounds are invalid."""


class InvalidBenchConfigError(BenchError):
    """Benchmark configuration is invalid."""


class EncodingDisagreementError(BenchError):
    """Encodings returned different violating cases for a rule."""

    def __init__(self, message, divergent_cases):
        self.divergent_cases = divergent_cases
        super().__init__(message, additional_info=divergent_cases)
