import pytest
from hypothesis import given

from compliance_lib import exceptions
from compliance_lib.constants import PUBLISHED_STRUCTURE
from compliance_lib.core.encoders import (LogEncoder, encode, expected_sizes,
                                          loading_report)
from compliance_lib.core.event_log import Event, EventLog, Trace, log_summary
from compliance_lib.core.lpg import graph_stats
from compliance_lib.enums import EncodingKindEnum

from .strategies import event_logs

BM, EP, UA = EncodingKindEnum.BM, EncodingKindEnum.EP, EncodingKindEnum.UA


@pytest.mark.parametrize("kind, nodes, edges", [
    (BM, 16, 23),
    (EP, 16, 13),
    (UA, 8, 13),
])
def test_sample_sizes(sample_encoded, kind, nodes, edges):
    stats = graph_stats(sample_encoded[kind].graph)
    assert (stats.num_nodes, stats.num_edges) == (nodes, edges)


def test_encoded_graph_is_frozen(sample_encoded, encoding):
    encoded = sample_encoded[encoding]
    assert encoded.graph.is_frozen
    assert encoded.kind == encoding
    assert set(encoded.case_nodes) == {"1", "2", "3"}


def test_event_lookup_by_activity(sample_encoded):
    graph = sample_encoded[EP].graph
    assert len(graph.find_nodes("Event", "activity", "E")) == 4


def test_baseline_chain(sample_encoded):
    encoded = sample_encoded[BM]
    graph = encoded.graph
    (start,) = [
        node for node in graph.find_nodes("Event", "activity", "A")
        if graph.node_property(node, "timestamp") == 1614682812
    ]
    chain = [graph.node_property(start, "activity")]
    node = start
    while graph.out_edges(node, "Directly_follows"):
        node = graph.edge_endpoints(
            graph.out_edges(node, "Directly_follows")[0]
        )[1]
        chain.append(graph.node_property(node, "activity"))
    assert "".join(chain) == "AECDE"


def test_event_node_properties(sample_encoded):
    graph = sample_encoded[EP].graph
    (node,) = graph.find_nodes("Event", "activity", "B")
    assert graph.node(node).props == {
        "activity": "B",
        "timestamp": 1612458012,
        "position": 2,
        "resource": "John",
        "StartTime": "1612360812",
    }
    assert graph.out_edges(node, "Directly_follows") == []


def test_unique_activities_edges(sample_encoded):
    encoded = sample_encoded[UA]
    graph = encoded.graph
    assert set(encoded.activity_nodes) == {"A", "B", "C", "D", "E"}

    (e_node,) = graph.find_nodes("Activity", "name", "E")
    edges = graph.out_edges(e_node, "Event_to_case")
    case_3 = encoded.case_nodes["3"]
    positions = sorted(
        graph.edge_property(edge, "position")
        for edge in edges if graph.edge_endpoints(edge)[1] == case_3
    )
    # two parallel edges from E to case 3
    assert positions == [2, 5]
    assert graph.edge_property(edges[0], "activity") is None


def test_empty_log(encoding):
    encoded = encode(EventLog(), encoding)
    assert graph_stats(encoded.graph).num_nodes == 0
    assert encoded.graph.is_frozen


def test_unknown_encoding():
    with pytest.raises(exceptions.UnknownEncodingError):
        LogEncoder.get_encoder("xx")


@pytest.mark.parametrize("kind, nodes, edges", [
    (BM, 177597, 315933),
    (EP, 177597, 164510),
    (UA, 13111, 164510),
])
def test_expected_sizes_bpic12(kind, nodes, edges):
    forecast = expected_sizes(13087, 164510, 24, kind)
    assert (forecast.nodes, forecast.edges) == (nodes, edges)


@pytest.mark.parametrize("cases, events, acts, bm, ua_nodes", [
    (15000, 133883, 9, (148883, 252766), 15009),
    (25000, 110933, 8, (135933, 196866), 25008),
    (50000, 186633, 11, (236633, 323266), 50011),
])
def test_expected_sizes_other_logs(cases, events, acts, bm, ua_nodes):
    forecast = expected_sizes(cases, events, acts, BM)
    assert (forecast.nodes, forecast.edges) == bm
    assert expected_sizes(cases, events, acts, UA).nodes == ua_nodes


@pytest.mark.parametrize("key", sorted(PUBLISHED_STRUCTURE))
def test_average_degree_matches_published(key):
    name, cases = key
    events, acts, ep_degree, ua_degree = PUBLISHED_STRUCTURE[key]
    ep = expected_sizes(cases, events, acts, EP)
    ua = expected_sizes(cases, events, acts, UA)

    assert ep.edges / ep.nodes == pytest.approx(ep_degree, abs=0.01)
    if name == "BPIC'19":
        # 110933 / 25008 is 4.436; the published 4.5 is rounded
        assert ua.edges / ua.nodes == pytest.approx(4.436, abs=0.001)
    else:
        assert ua.edges / ua.nodes == pytest.approx(ua_degree, abs=0.01)


def test_expected_sizes_zero():
    for kind in EncodingKindEnum:
        forecast = expected_sizes(0, 0, 0, kind)
        assert (forecast.nodes, forecast.edges) == (0, 0)


@pytest.mark.parametrize("args", [(-1, 0, 0), (0, -1, 0), (2, 1, 1)])
def test_expected_sizes_rejects_bad_counts(args):
    with pytest.raises(exceptions.SizeForecastError):
        expected_sizes(*args, BM)


def test_loading_report(sample_log, encoding):
    report = loading_report(sample_log, encoding)
    assert report.forecast_matches
    assert report.passes_ordered
    assert report.load_time >= 0
    row = report.to_row()
    assert row["encoding"] == encoding.name
    assert row["cases"] == 3
    assert (row["#N"], row["#E"]) == (
        report.forecast.nodes, report.forecast.edges
    )


@given(event_logs())
def test_graph_sizes_match_forecast(log):
    summary = log_summary(log)
    for kind in EncodingKindEnum:
        stats = graph_stats(encode(log, kind).graph)
        forecast = expected_sizes(
            summary.num_cases, summary.num_events, summary.num_activities,
            kind
        )
        assert (stats.num_nodes, stats.num_edges) \
            == (forecast.nodes, forecast.edges), kind


@given(event_logs(max_cases=10))
def test_baseline_chain_follows_positions(log):
    encoded = encode(log, BM)
    graph = encoded.graph
    for trace in log:
        case_node = encoded.case_nodes[trace.case_id]
        event_nodes = [
            graph.edge(edge).src
            for edge in graph.in_edges(case_node, "Event_to_case")
        ]
        follows = [
            edge for node in event_nodes
            for edge in graph.out_edges(node, "Directly_follows")
        ]
        assert len(follows) == len(trace) - 1

        (start,) = [
            node for node in event_nodes
            if not graph.in_edges(node, "Directly_follows")
        ]
        visited = [start]
        while graph.out_edges(visited[-1], "Directly_follows"):
            (edge,) = graph.out_edges(visited[-1], "Directly_follows")
            visited.append(graph.edge(edge).dst)
        assert [graph.node_property(n, "position") for n in visited] \
            == list(range(1, len(trace) + 1))
        assert tuple(graph.node_property(n, "activity") for n in visited) \
            == trace.activities


def test_baseline_size_of_hundred_cases():
    activities = ["a{}".format(i) for i in range(10)]
    log = EventLog([
        Trace(str(case), tuple(
            Event(str(case), activity, 60 * position, position)
            for position, activity in enumerate(activities, start=1)
        ))
        for case in range(1, 101)
    ])
    stats = graph_stats(encode(log, BM).graph)
    assert (stats.num_nodes, stats.num_edges) == (1100, 1900)
    forecast = expected_sizes(100, 1000, 10, BM)
    assert (forecast.nodes, forecast.edges) == (1100, 1900)
