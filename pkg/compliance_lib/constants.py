# https://specifications.freedesktop.org/basedir-spec/basedir-spec-latest.html
# Logs go to XDG_CACHE_HOME

import math
import os

from .enums import EncodingKindEnum, GraphLabelEnum, TimePreferenceEnum

APP_VERSION = "0.3.0"
LOGGER_NAME = "compliance_lib"

# Event log columns
DEFAULT_CASE_COLUMN = "case"
DEFAULT_ACTIVITY_COLUMN = "activity"
DEFAULT_TIMESTAMP_COLUMN = "timestamp"
DEFAULT_START_TIME_COLUMN = "StartTime"
DEFAULT_COMPLETE_TIME_COLUMN = "CompleteTime"
DEFAULT_RESOURCE_COLUMN = "resource"
DEFAULT_LIFECYCLE_COLUMN = "lifecycle"
DEFAULT_TIME_PREFERENCE = TimePreferenceEnum.COMPLETE
POSITION_COLUMN = "position"

# Rules
INFINITE = math.inf
TIME_UNIT_SECONDS = {
    "s": 1,
    "m": 60,
    "h": 3600,
    "d": 86400,
}

# Graph vocabulary per encoding
ENCODING_LABELS = {
    EncodingKindEnum.BM: frozenset([
        GraphLabelEnum.CASE.value, GraphLabelEnum.EVENT.value,
        GraphLabelEnum.EVENT_TO_CASE.value,
        GraphLabelEnum.DIRECTLY_FOLLOWS.value,
    ]),
    EncodingKindEnum.EP: frozenset([
        GraphLabelEnum.CASE.value, GraphLabelEnum.EVENT.value,
        GraphLabelEnum.EVENT_TO_CASE.value,
    ]),
    EncodingKindEnum.UA: frozenset([
        GraphLabelEnum.CASE.value, GraphLabelEnum.ACTIVITY.value,
        GraphLabelEnum.EVENT_TO_CASE.value,
    ]),
}

# Benchmark
DEFAULT_REPETITIONS = 5
DEFAULT_WARMUP = 1
DEFAULT_MAX_WORKERS = 4
GENERATOR_MIN_GAP = 60
GENERATOR_MAX_GAP = 86400
GENERATOR_BASE_TIMESTAMP = 1609459200
GENERATOR_CASE_SPREAD = 365 * 86400
ACTIVITY_NAME_TEMPLATE = "a{}"

# Published structural figures, keyed by (log, cases):
# loaded events, distinct activities, then reported EP/UA average degree.
PUBLISHED_STRUCTURE = {
    ("BPIC'12", 13087): (164510, 24, 0.93, 12.54),
    ("BPIC'14", 15000): (133883, 9, 0.89, 8.92),
    ("BPIC'19", 25000): (110933, 8, 0.82, 4.5),
    ("RTFMP", 50000): (186633, 11, 0.78, 3.73),
}

# Constant folders
user_home = f'{os.path.expanduser("~")}'
XDG_CACHE_HOME = os.environ.get(
    "XDG_CACHE_HOME", os.path.join(user_home, ".cache")
)
PWD = os.path.dirname(os.path.abspath(__file__))
COMPLIANCE_XDG_CACHE_HOME = os.path.join(XDG_CACHE_HOME, "compliance_lib")
COMPLIANCE_XDG_CACHE_HOME_LOGS = os.path.join(
    COMPLIANCE_XDG_CACHE_HOME, "logs"
)

# Constant filepaths
APP_CONFIG = os.environ.get(
    "COMPLIANCE_CONFIG", os.path.join(PWD, "app.cfg")
)
LOGFILE = os.path.join(COMPLIANCE_XDG_CACHE_HOME_LOGS, "compliance.log")
