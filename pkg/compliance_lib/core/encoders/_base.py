import time
from abc import ABCMeta, abstractmethod

from ... import exceptions
from ...constants import ENCODING_LABELS
from ...enums import EventPropertyEnum, GraphLabelEnum
from ...logger import logger
from ..lpg import Graph
from ..utils import SubclassesMixin
from .encoded_log import EncodedLog, PassTimings


class LogEncoder(SubclassesMixin, metaclass=ABCMeta):
    """Builds a graph from an event log in two passes.

    The first pass creates every node, the second every edge. Subclasses
    set the `encoding` attribute and implement both passes.
    """

    @classmethod
    def get_encoder(cls, kind):
        subclasses_dict = cls._get_subclasses_dict("encoding")
        if kind not in subclasses_dict:
            logger.error("No encoder for {!r}".format(kind))
            raise exceptions.UnknownEncodingError(
                "Encoder {!r} not implemented".format(kind)
            )
        logger.debug("Encoder: {}".format(subclasses_dict[kind]))

        return subclasses_dict[kind]()

    def encode(self, log):
        """Encode a log.

        Args:
            log (EventLog)

        Returns:
            EncodedLog: with a frozen graph
        """
        graph = Graph()

        node_pass_start = time.perf_counter()
        lookups = self._add_nodes(graph, log)
        node_pass_end = time.perf_counter()
        logger.info("{} node pass: {} nodes in {:.3f}s".format(
            self.encoding.name, graph.num_nodes,
            node_pass_end - node_pass_start
        ))

        edge_pass_start = time.perf_counter()
        self._add_edges(graph, log, lookups)
        edge_pass_end = time.perf_counter()
        logger.info("{} edge pass: {} edges in {:.3f}s".format(
            self.encoding.name, graph.num_edges,
            edge_pass_end - edge_pass_start
        ))

        graph.freeze()
        return EncodedLog(
            kind=self.encoding,
            graph=graph,
            labels=ENCODING_LABELS[self.encoding],
            case_nodes=lookups.get("cases", {}),
            activity_nodes=lookups.get("activities", {}),
            timings=PassTimings(
                node_pass_start, node_pass_end,
                edge_pass_start, edge_pass_end
            ),
        )

    @staticmethod
    def add_case_nodes(graph, log):
        return {
            trace.case_id: graph.add_node(
                (GraphLabelEnum.CASE.value,),
                {EventPropertyEnum.ID.value: trace.case_id}
            )
            for trace in log
        }

    @staticmethod
    def event_properties(event, with_activity=True):
        """Event attributes as graph properties; unset optionals are omitted."""
        props = dict(event.extra)
        if with_activity:
            props[EventPropertyEnum.ACTIVITY.value] = event.activity
        props[EventPropertyEnum.TIMESTAMP.value] = event.timestamp
        props[EventPropertyEnum.POSITION.value] = event.position
        if event.resource is not None:
            props[EventPropertyEnum.RESOURCE.value] = event.resource
        if event.lifecycle is not None:
            props[EventPropertyEnum.LIFECYCLE.value] = event.lifecycle
        return props

    @abstractmethod
    def _add_nodes(self, graph, log):
        """First pass. Returns the lookups the edge pass needs."""
        pass

    @abstractmethod
    def _add_edges(self, graph, log, lookups):
        """Second pass. Every node already exists."""
        pass
