import io
import math
import re
from dataclasses import dataclass

import pandas as pd
from dateutil import tz
from dateutil.parser import isoparse

from ... import exceptions
from ...constants import (DEFAULT_ACTIVITY_COLUMN, DEFAULT_CASE_COLUMN,
                          DEFAULT_COMPLETE_TIME_COLUMN,
                          DEFAULT_LIFECYCLE_COLUMN, DEFAULT_RESOURCE_COLUMN,
                          DEFAULT_START_TIME_COLUMN, DEFAULT_TIME_PREFERENCE,
                          DEFAULT_TIMESTAMP_COLUMN, POSITION_COLUMN)
from ...enums import TimePreferenceEnum
from ...logger import logger
from .log import Event, EventLog, Trace

EPOCH_SECONDS_RE = re.compile(r"^[+-]?\d+$")
CANONICAL_COLUMNS = (
    DEFAULT_CASE_COLUMN, DEFAULT_ACTIVITY_COLUMN, DEFAULT_TIMESTAMP_COLUMN,
    POSITION_COLUMN, DEFAULT_RESOURCE_COLUMN, DEFAULT_LIFECYCLE_COLUMN,
)
EXTRA_PREFIX = "extra_"


@dataclass(frozen=True)
class ColumnConfig:
    """Column names of a CSV event log.

    The timestamp column wins when present. Otherwise the start/complete
    pair is used, picking the one named by time_preference when both exist.
    """
    case_column: str = DEFAULT_CASE_COLUMN
    activity_column: str = DEFAULT_ACTIVITY_COLUMN
    timestamp_column: str = DEFAULT_TIMESTAMP_COLUMN
    start_time_column: str = DEFAULT_START_TIME_COLUMN
    complete_time_column: str = DEFAULT_COMPLETE_TIME_COLUMN
    resource_column: str = DEFAULT_RESOURCE_COLUMN
    lifecycle_column: str = DEFAULT_LIFECYCLE_COLUMN
    time_preference: TimePreferenceEnum = DEFAULT_TIME_PREFERENCE

    def resolve_time_column(self, header):
        """Pick the authoritative time column.

        Args:
            header (list): column names of the source

        Returns:
            string: column name
        """
        if self.timestamp_column in header:
            return self.timestamp_column

        has_start = self.start_time_column in header
        has_complete = self.complete_time_column in header
        if has_start and has_complete:
            if self.time_preference == TimePreferenceEnum.START:
                return self.start_time_column
            return self.complete_time_column
        if has_complete:
            return self.complete_time_column
        if has_start:
            return self.start_time_column

        logger.error("No timestamp column in header {}".format(header))
        raise exceptions.MissingColumnError(self.timestamp_column)


def parse_timestamp(raw, line_number):
    """Normalize a timestamp to integer epoch seconds.

    Naive ISO-8601 datetimes are read as UTC; sub-second parts are floored.

    Args:
        raw (string): epoch seconds or ISO-8601 datetime
        line_number (int): source line, for error reporting

    Returns:
        int
    """
    value = raw.strip()
    if not value:
        raise exceptions.InvalidTimestampError("Empty timestamp", line_number)

    if EPOCH_SECONDS_RE.match(value):
        return int(value)

    try:
        moment = isoparse(value)
    except (ValueError, OverflowError) as e:
        raise exceptions.InvalidTimestampError(
            "Unparseable timestamp \"{}\"".format(value), line_number
        ) from e

    if moment.tzinfo is None:
        moment = moment.replace(tzinfo=tz.UTC)
    return math.floor(moment.timestamp())


def _read_frame(source):
    """Read every record as strings.

    Returns:
        tuple: (DataFrame, number of physical lines taken by the header)
    """
    try:
        frame = pd.read_csv(
            source, dtype=str, keep_default_na=False,
            skipinitialspace=True, skip_blank_lines=False, encoding="utf-8"
        )
    except pd.errors.EmptyDataError as e:
        logger.error("Event log source is empty")
        raise exceptions.EmptySourceError(
            "Event log has no header row"
        ) from e
    except pd.errors.ParserError as e:
        logger.exception(e)
        raise exceptions.EventLogError(
            "Malformed CSV event log: {}".format(e)
        ) from e
    except UnicodeDecodeError as e:
        logger.exception(e)
        raise exceptions.EventLogError(
            "Event log is not valid UTF-8: {} at byte {}".format(
                e.reason, e.start
            )
        ) from e

    header_lines = 1 + sum(str(column).count("\n") for column in frame.columns)
    frame.columns = [str(column).strip() for column in frame.columns]
    # blank lines come back as rows of NaN
    return frame.fillna(""), header_lines


def _extra_names(extra_columns, header):
    """Map extra columns to event extra keys.

    A key never equals a canonical column name, so the serialized form
    parses back to the same events.
    """
    names = {}
    for column in extra_columns:
        taken = set(header) - {column}
        name = column
        while name in CANONICAL_COLUMNS or name in taken:
            name = EXTRA_PREFIX + name
        if name != column:
            logger.debug("Extra column \"{}\" kept as \"{}\"".format(
                column, name
            ))
        names[column] = name
    return names


def parse_event_log(source, config=None):
    """Parse a CSV event log into traces.

    Events of a case are ordered by timestamp; equal timestamps keep the
    order of the input rows. Columns that are not recognized land in the
    event's extra mapping, prefixed with "extra_" when they would clash
    with a canonical column name. Blank lines are skipped; errors name the
    physical line of the record.

    Args:
        source (text stream|string): CSV with header row
        config (ColumnConfig): column names, defaults when None

    Returns:
        EventLog
    """
    config = config or ColumnConfig()
    if isinstance(source, str):
        source = io.StringIO(source)

    frame, header_lines = _read_frame(source)
    header = list(frame.columns)

    for required in (config.case_column, config.activity_column):
        if required not in header:
            logger.error("Missing column \"{}\"".format(required))
            raise exceptions.MissingColumnError(required)
    time_column = config.resolve_time_column(header)

    recognized = {
        config.case_column, config.activity_column, time_column,
        config.resource_column, config.lifecycle_column, POSITION_COLUMN,
    }
    extra_columns = [column for column in header if column not in recognized]
    extra_names = _extra_names(extra_columns, header)
    index = {column: i for i, column in enumerate(header)}

    def optional(row, column):
        if column not in index:
            return None
        return row[index[column]].strip() or None

    rows_by_case = {}
    next_line = header_lines + 1
    for row in frame.itertuples(index=False, name=None):
        line_number = next_line
        # quoted fields may span lines
        next_line += 1 + sum(value.count("\n") for value in row)
        if not any(value.strip() for value in row):
            continue

        case_id = row[index[config.case_column]].strip()
        activity = row[index[config.activity_column]].strip()
        if not case_id:
            raise exceptions.EmptyFieldError("Empty case value", line_number)
        if not activity:
            raise exceptions.EmptyFieldError(
                "Empty activity value", line_number
            )

        rows_by_case.setdefault(case_id, []).append({
            "activity": activity,
            "timestamp": parse_timestamp(
                row[index[time_column]], line_number
            ),
            "resource": optional(row, config.resource_column),
            "lifecycle": optional(row, config.lifecycle_column),
            "extra": {
                extra_names[column]: row[index[column]]
                for column in extra_columns
            },
        })

    traces = []
    for case_id, rows in rows_by_case.items():
        # sorted() is stable, ties keep input order
        ordered = sorted(rows, key=lambda fields: fields["timestamp"])
        events = tuple(
            Event(case_id=case_id, position=position, **fields)
            for position, fields in enumerate(ordered, start=1)
        )
        traces.append(Trace(case_id=case_id, events=events))

    log = EventLog(traces)
    logger.info(
        "Parsed event log: {} cases, {} events, {} activities "
        "(time column \"{}\")".format(
            len(log), log.num_events, len(log.activities), time_column
        )
    )
    return log


def load_event_log(path, config=None):
    """Open a CSV file and parse it."""
    logger.info("Loading event log \"{}\"".format(path))
    try:
        f = open(path, encoding="utf-8", newline="")
    except OSError as e:
        logger.exception(e)
        raise exceptions.EventLogError(
            "Cannot open event log \"{}\": {}".format(path, e.strerror)
        ) from e
    with f:
        return parse_event_log(f, config)


def serialize_event_log(log):
    """Write the canonical CSV form: default column names plus position.

    Extra keys must not reuse a canonical column name.

    Args:
        log (EventLog)

    Returns:
        string
    """
    extra_columns = sorted({
        column for trace in log for event in trace for column in event.extra
    })
    clashing = [column for column in extra_columns if column in CANONICAL_COLUMNS]
    if clashing:
        logger.error("Extra keys clash with canonical columns: {}".format(
            clashing
        ))
        raise exceptions.EventLogError(
            "Extra keys {} clash with canonical column names".format(
                ", ".join(clashing)
            )
        )
    columns = list(CANONICAL_COLUMNS) + extra_columns

    records = []
    for trace in log:
        for event in trace:
            record = [
                event.case_id, event.activity, event.timestamp,
                event.position, event.resource or "", event.lifecycle or "",
            ]
            record.extend(event.extra.get(column, "") for column in extra_columns)
            records.append(record)

    frame = pd.DataFrame(records, columns=columns)
    return frame.to_csv(index=False, lineterminator="\n")
