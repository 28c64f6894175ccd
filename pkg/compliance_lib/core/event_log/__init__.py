from .log import Event, EventLog, LogSummary, Trace, log_summary
from .parser import (ColumnConfig, load_event_log, parse_event_log,
                     parse_timestamp, serialize_event_log)

__all__ = [
    "Event", "Trace", "EventLog", "LogSummary", "log_summary",
    "ColumnConfig", "parse_event_log", "load_event_log",
    "parse_timestamp", "serialize_event_log",
]
