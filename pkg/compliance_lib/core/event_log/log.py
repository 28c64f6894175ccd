from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterator, Mapping, Optional, Tuple

from ... import exceptions
from ..utils import case_sort_key


@dataclass(frozen=True)
class Event:
    """One recorded event.

    The position is the 1-based rank of the event inside its trace.
    """
    case_id: str
    activity: str
    timestamp: int
    position: int
    resource: Optional[str] = None
    lifecycle: Optional[str] = None
    extra: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not self.case_id:
            raise exceptions.EventLogError("Event case id is empty")
        if not self.activity:
            raise exceptions.EventLogError("Event activity is empty")
        if self.position < 1:
            raise exceptions.EventLogError(
                "Event position must be >= 1, got {}".format(self.position)
            )


@dataclass(frozen=True)
class Trace:
    case_id: str
    events: Tuple[Event, ...]

    def __post_init__(self):
        previous_timestamp = None
        for expected_position, event in enumerate(self.events, start=1):
            if event.case_id != self.case_id:
                raise exceptions.EventLogError(
                    "Event of case \"{}\" found in trace \"{}\"".format(
                        event.case_id, self.case_id
                    )
                )
            if event.position != expected_position:
                raise exceptions.EventLogError(
                    "Trace \"{}\" has position {} where {} is expected".format(
                        self.case_id, event.position, expected_position
                    )
                )
            if (
                previous_timestamp is not None
                and event.timestamp < previous_timestamp
            ):
                raise exceptions.EventLogError(
                    "Trace \"{}\" timestamps decrease at position {}".format(
                        self.case_id, event.position
                    )
                )
            previous_timestamp = event.timestamp

    def __len__(self):
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    @property
    def activities(self):
        return tuple(event.activity for event in self.events)


class EventLog:
    """Immutable collection of traces keyed by case id.

    Traces are kept in case order (numeric ids numerically).
    """

    def __init__(self, traces=()):
        ordered = sorted(traces, key=lambda trace: case_sort_key(trace.case_id))
        self._traces: Dict[str, Trace] = {}
        for trace in ordered:
            if trace.case_id in self._traces:
                raise exceptions.EventLogError(
                    "Duplicate trace for case \"{}\"".format(trace.case_id)
                )
            self._traces[trace.case_id] = trace

        self._activities = frozenset(
            event.activity
            for trace in self._traces.values()
            for event in trace
        )
        self._num_events = sum(len(trace) for trace in self._traces.values())

    @property
    def traces(self) -> Mapping[str, Trace]:
        return dict(self._traces)

    @property
    def activities(self):
        return self._activities

    @property
    def cases(self):
        return frozenset(self._traces)

    @property
    def num_events(self):
        return self._num_events

    def __len__(self):
        return len(self._traces)

    def __iter__(self) -> Iterator[Trace]:
        return iter(self._traces.values())

    def __getitem__(self, case_id):
        return self._traces[case_id]

    def __contains__(self, case_id):
        return case_id in self._traces

    def __eq__(self, other):
        if not isinstance(other, EventLog):
            return NotImplemented
        return self._traces == other._traces

    def __repr__(self):
        return 'EventLog<{} cases, {} events>'.format(
            len(self), self.num_events
        )

    def iter_events(self):
        """All events ordered by timestamp; ties keep case then position order."""
        events = [event for trace in self for event in trace]
        return iter(sorted(events, key=lambda event: event.timestamp))

    def variants(self):
        """Distinct activity sequences with the number of cases showing them.

        Returns:
            list of (tuple of activity, int), most frequent first
        """
        counter = Counter(trace.activities for trace in self)
        return sorted(counter.items(), key=lambda item: (-item[1], item[0]))


@dataclass(frozen=True)
class LogSummary:
    num_cases: int
    num_events: int
    num_activities: int
    min_trace_length: int
    max_trace_length: int
    mean_trace_length: float


def log_summary(log):
    """Count cases, events and activities of a log.

    Args:
        log (EventLog)

    Returns:
        LogSummary
    """
    lengths = [len(trace) for trace in log]
    if not lengths:
        return LogSummary(0, 0, 0, 0, 0, 0.0)

    return LogSummary(
        num_cases=len(lengths),
        num_events=log.num_events,
        num_activities=len(log.activities),
        min_trace_length=min(lengths),
        max_trace_length=max(lengths),
        mean_trace_length=log.num_events / len(lengths),
    )
