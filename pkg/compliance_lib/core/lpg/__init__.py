from .graph import (Edge, Graph, GraphStats, Node, PropertyValue,
                    compare_property_values, graph_stats,
                    property_difference)

__all__ = [
    "Graph", "Node", "Edge", "GraphStats", "PropertyValue", "graph_stats",
    "compare_property_values", "property_difference",
]
