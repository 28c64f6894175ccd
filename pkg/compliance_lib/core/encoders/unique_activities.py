from ...enums import EncodingKindEnum, EventPropertyEnum, GraphLabelEnum
from ._base import LogEncoder


class UniqueActivitiesEncoder(LogEncoder):
    """One node per case and per distinct activity.

    Every event becomes an event_to_case edge from its activity node to
    its case node, carrying the event attributes.
    """
    encoding = EncodingKindEnum.UA

    def _add_nodes(self, graph, log):
        cases = self.add_case_nodes(graph, log)
        activities = {
            activity: graph.add_node(
                (GraphLabelEnum.ACTIVITY.value,),
                {EventPropertyEnum.NAME.value: activity}
            )
            for activity in sorted(log.activities)
        }
        return {"cases": cases, "activities": activities}

    def _add_edges(self, graph, log, lookups):
        event_to_case = (GraphLabelEnum.EVENT_TO_CASE.value,)
        for trace in log:
            case_node = lookups["cases"][trace.case_id]
            for event in trace:
                graph.add_edge(
                    lookups["activities"][event.activity], case_node,
                    event_to_case,
                    self.event_properties(event, with_activity=False)
                )
