"""Hypothesis strategies for random logs, rules and graphs."""
from dataclasses import replace

from hypothesis import strategies as st

from compliance_lib.constants import INFINITE
from compliance_lib.core.event_log import Event, EventLog, Trace
from compliance_lib.core.lpg import Graph
from compliance_lib.core.rules import Rule, TimeWindow
from compliance_lib.enums import RuleKindEnum, ThetaEnum

ACTIVITIES = ["a{}".format(i) for i in range(8)]
# small gaps so that ties and exact window hits happen
GAPS = st.sampled_from([0, 0, 1, 5, 10, 50, 100, 1000])
DELTAS = st.sampled_from([0, 1, 5, 10, 60, 100, 500, 5000, INFINITE])


@st.composite
def traces(draw, case_id, max_events=20, activities=ACTIVITIES):
    steps = draw(st.lists(
        st.tuples(st.sampled_from(activities), GAPS),
        min_size=1, max_size=max_events
    ))
    timestamp = draw(st.integers(min_value=0, max_value=10 ** 6))
    events = []
    for position, (activity, gap) in enumerate(steps, start=1):
        timestamp += gap
        events.append(Event(case_id, activity, timestamp, position))
    return Trace(case_id, tuple(events))


@st.composite
def event_logs(draw, max_cases=50, max_events=20, max_activities=8):
    activities = ACTIVITIES[:draw(
        st.integers(min_value=1, max_value=max_activities)
    )]
    num_cases = draw(st.integers(min_value=0, max_value=max_cases))
    return EventLog([
        draw(traces(str(index), max_events, activities))
        for index in range(1, num_cases + 1)
    ])


@st.composite
def rules(draw, kinds=tuple(RuleKindEnum), thetas=tuple(ThetaEnum)):
    kind = draw(st.sampled_from(kinds))
    a = draw(st.sampled_from(ACTIVITIES))
    b = draw(st.sampled_from(ACTIVITIES))
    excluded = ()
    if kind == RuleKindEnum.EXCLUDE:
        excluded = tuple(draw(st.lists(
            st.sampled_from(ACTIVITIES), min_size=1, max_size=3
        )))
    window = TimeWindow(draw(DELTAS), draw(st.sampled_from(thetas)))
    return Rule(kind, a, b, excluded, window)


EXTRA_KEYS = ["note", "region", "cost", "StartTime", "extra_case"]


@st.composite
def event_logs_with_extras(draw, max_cases=10, max_events=8):
    """Logs whose events all carry the same extra keys."""
    log = draw(event_logs(max_cases=max_cases, max_events=max_events))
    keys = draw(st.lists(
        st.sampled_from(EXTRA_KEYS), min_size=1, max_size=3, unique=True
    ))
    values = st.text(alphabet="abcXYZ019", max_size=4)
    traces = []
    for trace in log:
        events = tuple(
            replace(event, extra={key: draw(values) for key in keys})
            for event in trace
        )
        traces.append(Trace(trace.case_id, events))
    return EventLog(traces)


NODE_LABELS = ["Case", "Event", "Activity"]
EDGE_LABELS = ["Event_to_case", "Directly_follows"]
PROPERTY_KEYS = ["activity", "ID", "position"]
PROPERTY_VALUES = st.sampled_from(["A", "B", "1", 1, 2, None])


@st.composite
def graphs(draw, max_nodes=15, max_edges=30):
    graph = Graph()
    num_nodes = draw(st.integers(min_value=0, max_value=max_nodes))
    for _ in range(num_nodes):
        graph.add_node(
            draw(st.sets(st.sampled_from(NODE_LABELS), min_size=1)),
            draw(st.dictionaries(
                st.sampled_from(PROPERTY_KEYS), PROPERTY_VALUES
            )),
        )
    if num_nodes:
        node_ids = st.integers(min_value=0, max_value=num_nodes - 1)
        for _ in range(draw(st.integers(min_value=0, max_value=max_edges))):
            graph.add_edge(
                draw(node_ids), draw(node_ids),
                draw(st.sets(st.sampled_from(EDGE_LABELS), min_size=1)),
            )
    return graph
