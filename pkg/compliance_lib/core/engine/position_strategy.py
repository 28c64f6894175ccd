from ...enums import EncodingKindEnum, EventPropertyEnum, GraphLabelEnum
from .indexed_strategy import IndexedStrategy
from .report import EventRef


class PositionStrategy(IndexedStrategy):
    """Event nodes by activity index, compared through their position and
    timestamp properties."""
    encoding = EncodingKindEnum.EP

    def _occurrences(self, encoded, activity, cases):
        graph = encoded.graph
        by_case = {}
        event_nodes = graph.find_nodes(
            GraphLabelEnum.EVENT.value, EventPropertyEnum.ACTIVITY.value,
            activity
        )
        for node_id in event_nodes:
            case_node = graph.edge_endpoints(
                graph.out_edges(node_id, GraphLabelEnum.EVENT_TO_CASE.value)[0]
            )[1]
            case_id = encoded.case_id_of(case_node)
            if cases is not None and case_id not in cases:
                continue
            by_case.setdefault(case_id, []).append(EventRef(
                activity,
                graph.node_property(
                    node_id, EventPropertyEnum.POSITION.value
                ),
                graph.node_property(
                    node_id, EventPropertyEnum.TIMESTAMP.value
                ),
            ))
        return by_case
