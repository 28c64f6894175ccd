from enum import Enum


class EncodingKindEnum(Enum):
    BM = "bm"
    EP = "ep"
    UA = "ua"


class ThetaEnum(Enum):
    LT = "<"
    EQ = "="
    GT = ">"
    LE = "<="
    GE = ">="


class RuleKindEnum(Enum):
    RESPONSE = "RESPONSE"
    PRECEDES = "PRECEDES"
    EXCLUDE = "EXCLUDE"


class GraphLabelEnum(Enum):
    CASE = "Case"
    EVENT = "Event"
    ACTIVITY = "Activity"
    EVENT_TO_CASE = "Event_to_case"
    DIRECTLY_FOLLOWS = "Directly_follows"


class EventPropertyEnum(Enum):
    ID = "ID"
    NAME = "name"
    ACTIVITY = "activity"
    TIMESTAMP = "timestamp"
    POSITION = "position"
    RESOURCE = "resource"
    LIFECYCLE = "lifecycle"


class TimePreferenceEnum(Enum):
    START = "start"
    COMPLETE = "complete"


class OutputFormatEnum(Enum):
    CSV = "csv"
    JSON = "json"
