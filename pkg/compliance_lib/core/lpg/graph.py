from dataclasses import dataclass
from typing import Union

from ... import exceptions
from ...logger import logger

PropertyValue = Union[str, int, None]


def ensure_property_value(value):
    # bool is an int subclass but not a property value
    if value is None or type(value) in (str, int):
        return value
    raise exceptions.PropertyTypeMismatchError(
        "Unsupported property value {!r} of type {}".format(
            value, type(value).__name__
        )
    )


def compare_property_values(left, right):
    """Three-way comparison of two property values of the same tag.

    Returns:
        int: -1, 0 or 1
    """
    if type(left) is not type(right):
        raise exceptions.PropertyTypeMismatchError(
            "Cannot compare {!r} with {!r}".format(left, right)
        )
    if left is None:
        return 0
    return (left > right) - (left < right)


def property_difference(later, earlier):
    """Integer difference of two integer properties (e.g. timestamps)."""
    if type(later) is not int or type(earlier) is not int:
        raise exceptions.PropertyTypeMismatchError(
            "Cannot subtract {!r} from {!r}".format(earlier, later)
        )
    return later - earlier


class Node:
    """
    Node is a view of a Graph.

    It holds references to the graph's internal storage, so it is
    intended to be short-lived.
    """
    def __init__(self, graph, node_id):
        self._graph = graph
        self._id = node_id

    @property
    def id(self):
        return self._id

    @property
    def labels(self):
        return self._graph._node_labels[self._id]

    @property
    def props(self):
        return dict(self._graph._node_props[self._id])

    def get(self, key, default=None):
        return self._graph._node_props[self._id].get(key, default)

    def __getitem__(self, key):
        return self._graph._node_props[self._id][key]

    def __repr__(self):
        return 'Node<{}:{}>'.format(self._id, ":".join(sorted(self.labels)))


class Edge:
    """View of an edge of a Graph, same lifetime rules as Node."""
    def __init__(self, graph, edge_id):
        self._graph = graph
        self._id = edge_id

    @property
    def id(self):
        return self._id

    @property
    def src(self):
        return self._graph._edge_src[self._id]

    @property
    def dst(self):
        return self._graph._edge_dst[self._id]

    @property
    def labels(self):
        return self._graph._edge_labels[self._id]

    @property
    def props(self):
        return dict(self._graph._edge_props[self._id] or {})

    def get(self, key, default=None):
        props = self._graph._edge_props[self._id]
        if props is None:
            return default
        return props.get(key, default)

    def __getitem__(self, key):
        props = self._graph._edge_props[self._id]
        if props is None:
            raise KeyError(key)
        return props[key]

    def __repr__(self):
        return 'Edge<{}:{}->{}:{}>'.format(
            self._id, self.src, self.dst, ":".join(sorted(self.labels))
        )


class Graph:
    """
    Directed labeled property multigraph.

    Node and edge ids are consecutive integers. Storage is columnar
    (one list per attribute) to keep large encodings small. Indexes:
    - label -> node ids, maintained on insert
    - (label, key) -> value -> node ids, built on first lookup and then
      maintained on insert; freeze() builds it for every pair
    - per node, outgoing and incoming edge ids grouped by edge label

    The graph is append-only; freeze() forbids further mutation, after which
    lookups only read the indexes.
    """
    def __init__(self):
        self._node_labels = []
        self._node_props = []
        self._edge_src = []
        self._edge_dst = []
        self._edge_labels = []
        self._edge_props = []
        self._out = []
        self._in = []

        self._label_index = {}
        self._property_index = {}
        self._labelsets = {}
        self._frozen = False

    @property
    def is_frozen(self):
        return self._frozen

    @property
    def num_nodes(self):
        return len(self._node_labels)

    @property
    def num_edges(self):
        return len(self._edge_src)

    def __repr__(self):
        return 'Graph<{} nodes, {} edges{}>'.format(
            self.num_nodes, self.num_edges,
            ", frozen" if self._frozen else ""
        )

    def freeze(self):
        if self._frozen:
            return self

        property_index = {}
        for node_id, labels in enumerate(self._node_labels):
            props = self._node_props[node_id]
            for label in labels:
                for key, value in props.items():
                    property_index.setdefault((label, key), {}) \
                        .setdefault(value, set()).add(node_id)
        self._property_index = property_index
        self._frozen = True
        logger.debug("Froze {!r}".format(self))
        return self

    def ensure_mutable(self):
        if self._frozen:
            logger.error("Mutation attempted on frozen graph")
            raise exceptions.FrozenGraphError("Graph is frozen")

    def _intern_labels(self, labels):
        labels = frozenset(labels)
        return self._labelsets.setdefault(labels, labels)

    def _clean_props(self, props):
        if not props:
            return None
        return {
            str(key): ensure_property_value(value)
            for key, value in props.items()
        }

    def add_node(self, labels, props=None):
        """Add a node.

        Args:
            labels (iterable of string): non-empty
            props (dict): property values (str, int or None)

        Returns:
            int: node id
        """
        self.ensure_mutable()
        labels = self._intern_labels(labels)
        if not labels:
            logger.error("Node without labels")
            raise exceptions.EmptyLabelSetError("Node labels must not be empty")

        props = self._clean_props(props) or {}
        node_id = len(self._node_labels)
        self._node_labels.append(labels)
        self._node_props.append(props)
        self._out.append(None)
        self._in.append(None)

        for label in labels:
            self._label_index.setdefault(label, set()).add(node_id)
            for key, value in props.items():
                built = self._property_index.get((label, key))
                if built is not None:
                    built.setdefault(value, set()).add(node_id)

        return node_id

    def add_edge(self, src, dst, labels, props=None):
        """Add a directed edge; parallel edges are allowed.

        Args:
            src (int): source node id
            dst (int): destination node id
            labels (iterable of string)
            props (dict): property values (str, int or None)

        Returns:
            int: edge id
        """
        self.ensure_mutable()
        for endpoint in (src, dst):
            if not self.has_node(endpoint):
                logger.error("Dangling edge endpoint {!r}".format(endpoint))
                raise exceptions.DanglingEndpointError(
                    "Node {!r} does not exist".format(endpoint)
                )

        labels = self._intern_labels(labels)
        edge_id = len(self._edge_src)
        self._edge_src.append(src)
        self._edge_dst.append(dst)
        self._edge_labels.append(labels)
        self._edge_props.append(self._clean_props(props))

        if self._out[src] is None:
            self._out[src] = {}
        if self._in[dst] is None:
            self._in[dst] = {}
        for label in labels or ("",):
            self._out[src].setdefault(label, []).append(edge_id)
            self._in[dst].setdefault(label, []).append(edge_id)

        return edge_id

    def has_node(self, node_id):
        return type(node_id) is int and 0 <= node_id < len(self._node_labels)

    def has_edge(self, edge_id):
        return type(edge_id) is int and 0 <= edge_id < len(self._edge_src)

    def node(self, node_id):
        if not self.has_node(node_id):
            raise KeyError(node_id)
        return Node(self, node_id)

    def edge(self, edge_id):
        if not self.has_edge(edge_id):
            raise KeyError(edge_id)
        return Edge(self, edge_id)

    def nodes(self):
        for node_id in range(self.num_nodes):
            yield Node(self, node_id)

    def edges(self):
        for edge_id in range(self.num_edges):
            yield Edge(self, edge_id)

    def node_property(self, node_id, key, default=None):
        return self._node_props[node_id].get(key, default)

    def edge_property(self, edge_id, key, default=None):
        props = self._edge_props[edge_id]
        if props is None:
            return default
        return props.get(key, default)

    def edge_endpoints(self, edge_id):
        return self._edge_src[edge_id], self._edge_dst[edge_id]

    def nodes_with_label(self, label):
        return frozenset(self._label_index.get(label, ()))

    def find_nodes(self, label, key, value):
        """Exact-match lookup of nodes by label and property.

        Returns:
            frozenset of node ids (empty when nothing matches)
        """
        by_value = self._property_index.get((label, key))
        if by_value is None and self._frozen:
            return frozenset()
        if by_value is None:
            by_value = {}
            for node_id in self._label_index.get(label, ()):
                props = self._node_props[node_id]
                if key in props:
                    by_value.setdefault(props[key], set()).add(node_id)
            self._property_index[(label, key)] = by_value
            logger.debug("Built property index ({}, {})".format(label, key))
        return frozenset(by_value.get(value, ()))

    def _adjacent(self, adjacency, node_id, label):
        if not self.has_node(node_id):
            raise KeyError(node_id)
        by_label = adjacency[node_id]
        if not by_label:
            return []
        if label is not None:
            return list(by_label.get(label, ()))
        seen = set()
        merged = []
        for edge_ids in by_label.values():
            for edge_id in edge_ids:
                if edge_id not in seen:
                    seen.add(edge_id)
                    merged.append(edge_id)
        merged.sort()
        return merged

    def out_edges(self, node_id, label=None):
        """Outgoing edge ids, optionally restricted to one label."""
        return self._adjacent(self._out, node_id, label)

    def in_edges(self, node_id, label=None):
        """Incoming edge ids, optionally restricted to one label."""
        return self._adjacent(self._in, node_id, label)

    def degree(self, node_id):
        """Number of incident edges, incoming plus outgoing."""
        return len(self.out_edges(node_id)) + len(self.in_edges(node_id))

    def dump(self, stream):
        """Write one line per node, then one per edge, for golden files."""
        def render(props):
            return "{" + ", ".join(
                "{}={!r}".format(key, props[key]) for key in sorted(props)
            ) + "}"

        for node in self.nodes():
            stream.write("N {} :{} {}\n".format(
                node.id, ":".join(sorted(node.labels)), render(node.props)
            ))
        for edge in self.edges():
            stream.write("E {} {}->{} :{} {}\n".format(
                edge.id, edge.src, edge.dst,
                ":".join(sorted(edge.labels)), render(edge.props)
            ))


@dataclass(frozen=True)
class GraphStats:
    num_nodes: int
    num_edges: int
    avg_degree: float


def graph_stats(graph):
    """Node and edge counts and the edges-per-node average degree.

    Returns:
        GraphStats
    """
    num_nodes = graph.num_nodes
    num_edges = graph.num_edges
    avg_degree = num_edges / num_nodes if num_nodes else 0.0
    return GraphStats(num_nodes, num_edges, avg_degree)
