from ...enums import EncodingKindEnum, EventPropertyEnum, GraphLabelEnum
from .indexed_strategy import IndexedStrategy
from .report import EventRef


class UniqueActivitiesStrategy(IndexedStrategy):
    """The single activity node of a label, joined with its event_to_case
    edges grouped by case."""
    encoding = EncodingKindEnum.UA

    def _occurrences(self, encoded, activity, cases):
        graph = encoded.graph
        by_case = {}
        activity_nodes = graph.find_nodes(
            GraphLabelEnum.ACTIVITY.value, EventPropertyEnum.NAME.value,
            activity
        )
        for node_id in activity_nodes:
            for edge_id in graph.out_edges(
                node_id, GraphLabelEnum.EVENT_TO_CASE.value
            ):
                case_id = encoded.case_id_of(graph.edge_endpoints(edge_id)[1])
                if cases is not None and case_id not in cases:
                    continue
                by_case.setdefault(case_id, []).append(EventRef(
                    activity,
                    graph.edge_property(
                        edge_id, EventPropertyEnum.POSITION.value
                    ),
                    graph.edge_property(
                        edge_id, EventPropertyEnum.TIMESTAMP.value
                    ),
                ))
        return by_case
