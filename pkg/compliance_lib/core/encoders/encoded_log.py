from dataclasses import dataclass, field
from typing import Mapping

from ... import exceptions
from ...enums import EncodingKindEnum, EventPropertyEnum
from ...logger import logger
from ..lpg import Graph, GraphStats


@dataclass(frozen=True)
class PassTimings:
    """perf_counter readings around the node pass and the edge pass."""
    node_pass_start: float
    node_pass_end: float
    edge_pass_start: float
    edge_pass_end: float

    @property
    def node_pass_time(self):
        return self.node_pass_end - self.node_pass_start

    @property
    def edge_pass_time(self):
        return self.edge_pass_end - self.edge_pass_start


@dataclass(frozen=True)
class EncodedLog:
    """A frozen graph tagged with the encoding that produced it.

    case_nodes maps case ids to case node ids; activity_nodes maps
    activity labels to activity node ids (UA only, empty otherwise).
    """
    kind: EncodingKindEnum
    graph: Graph
    labels: frozenset
    case_nodes: Mapping[str, int] = field(default_factory=dict)
    activity_nodes: Mapping[str, int] = field(default_factory=dict)
    timings: PassTimings = None

    def case_id_of(self, case_node_id):
        return self.graph.node_property(
            case_node_id, EventPropertyEnum.ID.value
        )

    def __repr__(self):
        return 'EncodedLog<{} {!r}>'.format(self.kind.name, self.graph)


@dataclass(frozen=True)
class SizeForecast:
    nodes: int
    edges: int


def expected_sizes(num_cases, num_events, num_activities, kind):
    """Closed-form graph size of an encoding.

    BM: E + C nodes, 2E - C edges (one event_to_case per event, one
    directly_follows per consecutive pair). EP: E + C nodes, E edges.
    UA: C + A nodes, E edges.

    Args:
        num_cases (int): C
        num_events (int): E
        num_activities (int): A
        kind (EncodingKindEnum)

    Returns:
        SizeForecast
    """
    for name, value in (
        ("num_cases", num_cases), ("num_events", num_events),
        ("num_activities", num_activities)
    ):
        if value < 0:
            logger.error("Negative {} {}".format(name, value))
            raise exceptions.SizeForecastError(
                "{} must be >= 0, got {}".format(name, value)
            )
    if num_cases > 0 and num_events < num_cases:
        logger.error("Fewer events than cases")
        raise exceptions.SizeForecastError(
            "num_events ({}) must be >= num_cases ({})".format(
                num_events, num_cases
            )
        )

    if kind == EncodingKindEnum.BM:
        return SizeForecast(num_events + num_cases, 2 * num_events - num_cases)
    if kind == EncodingKindEnum.EP:
        return SizeForecast(num_events + num_cases, num_events)
    if kind == EncodingKindEnum.UA:
        return SizeForecast(num_cases + num_activities, num_events)

    raise exceptions.UnknownEncodingError(
        "Unknown encoding {!r}".format(kind)
    )


@dataclass(frozen=True)
class LoadingReport:
    kind: EncodingKindEnum
    num_cases: int
    forecast: SizeForecast
    actual: GraphStats
    timings: PassTimings

    @property
    def node_pass_time(self):
        return self.timings.node_pass_time

    @property
    def edge_pass_time(self):
        return self.timings.edge_pass_time

    @property
    def load_time(self):
        return self.node_pass_time + self.edge_pass_time

    @property
    def forecast_matches(self):
        return (
            self.forecast.nodes == self.actual.num_nodes
            and self.forecast.edges == self.actual.num_edges
        )

    @property
    def passes_ordered(self):
        return self.timings.edge_pass_start >= self.timings.node_pass_end

    def to_row(self):
        """Row shaped like the loading table: kind, cases, LT, #N, #E."""
        return {
            "encoding": self.kind.name,
            "cases": self.num_cases,
            "LT": round(self.load_time, 6),
            "node_pass": round(self.node_pass_time, 6),
            "edge_pass": round(self.edge_pass_time, 6),
            "#N": self.actual.num_nodes,
            "#E": self.actual.num_edges,
            "avg_degree": round(self.actual.avg_degree, 4),
        }
