from ...enums import EncodingKindEnum, GraphLabelEnum
from ._base import LogEncoder


class BaselineEncoder(LogEncoder):
    """Event and case nodes, event_to_case edges and a directly_follows
    chain per case."""
    encoding = EncodingKindEnum.BM
    with_directly_follows = True

    def _add_nodes(self, graph, log):
        cases = self.add_case_nodes(graph, log)
        events = {}
        for trace in log:
            # position order
            events[trace.case_id] = [
                graph.add_node(
                    (GraphLabelEnum.EVENT.value,),
                    self.event_properties(event)
                )
                for event in trace
            ]
        return {"cases": cases, "events": events}

    def _add_edges(self, graph, log, lookups):
        event_to_case = (GraphLabelEnum.EVENT_TO_CASE.value,)
        directly_follows = (GraphLabelEnum.DIRECTLY_FOLLOWS.value,)

        for case_id, event_nodes in lookups["events"].items():
            case_node = lookups["cases"][case_id]
            for event_node in event_nodes:
                graph.add_edge(event_node, case_node, event_to_case)

            if not self.with_directly_follows:
                continue
            for earlier, later in zip(event_nodes, event_nodes[1:]):
                graph.add_edge(earlier, later, directly_follows)
