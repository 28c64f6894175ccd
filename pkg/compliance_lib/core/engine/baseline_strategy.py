import itertools

from ...enums import (EncodingKindEnum, EventPropertyEnum, GraphLabelEnum,
                      RuleKindEnum)
from ..lpg import compare_property_values, property_difference
from ._base import CheckStrategy, trigger_activity
from .report import EventRef, Witness

ACTIVITY = EventPropertyEnum.ACTIVITY.value
DIRECTLY_FOLLOWS = GraphLabelEnum.DIRECTLY_FOLLOWS.value
EVENT_TO_CASE = GraphLabelEnum.EVENT_TO_CASE.value


class BaselineStrategy(CheckStrategy):
    """Transitive traversal of the directly_follows chain.

    Trigger events are looked up by activity, then the chain is walked
    forward (RESPONSE, EXCLUDE) or backward (PRECEDES) until a partner
    meets the window or the trace ends.
    """
    encoding = EncodingKindEnum.BM

    def evaluate(self, encoded, rule, cases=None):
        graph = encoded.graph
        witnesses = []
        trigger_nodes = graph.find_nodes(
            GraphLabelEnum.EVENT.value, ACTIVITY, trigger_activity(rule)
        )
        check_trigger = {
            RuleKindEnum.RESPONSE: self._response,
            RuleKindEnum.PRECEDES: self._precedes,
            RuleKindEnum.EXCLUDE: self._exclude,
        }[rule.kind]

        for node_id in sorted(trigger_nodes):
            case_node = graph.edge_endpoints(
                graph.out_edges(node_id, EVENT_TO_CASE)[0]
            )[1]
            case_id = encoded.case_id_of(case_node)
            if cases is not None and case_id not in cases:
                continue
            witness = check_trigger(graph, rule, case_id, node_id)
            if witness is not None:
                witnesses.append(witness)

        return witnesses

    @staticmethod
    def _event_ref(graph, node_id):
        return EventRef(
            graph.node_property(node_id, ACTIVITY),
            graph.node_property(node_id, EventPropertyEnum.POSITION.value),
            graph.node_property(node_id, EventPropertyEnum.TIMESTAMP.value),
        )

    @staticmethod
    def _walk(graph, node_id, forward):
        while True:
            if forward:
                edges = graph.out_edges(node_id, DIRECTLY_FOLLOWS)
            else:
                edges = graph.in_edges(node_id, DIRECTLY_FOLLOWS)
            if not edges:
                return
            src, dst = graph.edge_endpoints(edges[0])
            node_id = dst if forward else src
            yield node_id

    @staticmethod
    def _is_activity(graph, node_id, activity):
        return compare_property_values(
            graph.node_property(node_id, ACTIVITY), activity
        ) == 0

    def _response(self, graph, rule, case_id, node_id):
        trigger = self._event_ref(graph, node_id)
        nearest = None
        for next_id in self._walk(graph, node_id, forward=True):
            if not self._is_activity(graph, next_id, rule.b):
                continue
            partner = self._event_ref(graph, next_id)
            nearest = nearest or partner
            if rule.window.admits(
                property_difference(partner.timestamp, trigger.timestamp)
            ):
                return None
        return Witness(case_id, trigger, nearest)

    def _precedes(self, graph, rule, case_id, node_id):
        trigger = self._event_ref(graph, node_id)
        nearest = None
        # the trigger itself counts when a = b
        candidates = itertools.chain(
            (node_id,), self._walk(graph, node_id, forward=False)
        )
        for previous_id in candidates:
            if not self._is_activity(graph, previous_id, rule.a):
                continue
            partner = self._event_ref(graph, previous_id)
            nearest = nearest or partner
            if rule.window.admits(
                property_difference(trigger.timestamp, partner.timestamp)
            ):
                return None
        return Witness(case_id, trigger, nearest)

    def _exclude(self, graph, rule, case_id, node_id):
        trigger = self._event_ref(graph, node_id)
        excluded = set(rule.excluded)
        blocker = None
        for next_id in self._walk(graph, node_id, forward=True):
            activity = graph.node_property(next_id, ACTIVITY)
            if blocker is None:
                if activity in excluded:
                    blocker = self._event_ref(graph, next_id)
                continue
            if not self._is_activity(graph, next_id, rule.b):
                continue
            timestamp = graph.node_property(
                next_id, EventPropertyEnum.TIMESTAMP.value
            )
            if rule.window.admits(
                property_difference(timestamp, trigger.timestamp)
            ):
                return Witness(case_id, trigger, blocker)
        return None
