#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import networkx as nx
from .group import GroupElement
from .codec import require
from .errors import PathError, GroupMismatchError, SchemaError


class GainGraph(object):
    """
    GainGraph represents a cell graph of the base space whose directed edges
    carry deck group labels. Lifting a cell path to the covering space ends
    in the sheet given by the ordered product of the labels along the path.

    Attributes:

        group: pconnect.DeckGroup
            Deck transformation group.

        anchors: {str: str}
            Vertex designated for every Morse set id.
    """


    def __init__(self, group, vertices=(), edges=(), anchors=None):
        """
        Initializes a new instance of pconnect.GainGraph.

        Args:

            group: pconnect.DeckGroup
                Deck transformation group.

            vertices: (str,)
                Cell ids.

            edges: ((str, str, str, pconnect.GroupElement),)
                Edge id, tail, head and label.

            anchors: {str: str} or None
                Vertex of every Morse set.
        """

        self.group = group
        self.anchors = dict(anchors or {})

        self._graph = nx.MultiDiGraph()
        self._graph.add_nodes_from(vertices)
        self._edges = {}

        for edge_id, tail, head, label in edges:
            self.add_edge(edge_id, tail, head, label)

        # check anchors
        for set_id, vertex in self.anchors.items():
            if vertex not in self._graph:
                message = "Unknown anchor vertex! -> '%s' of '%s'" % (vertex, set_id)
                raise SchemaError(message)


    def __str__(self):
        """Gets standard string representation."""

        return "%d vertices, %d edges over %s" % (self._graph.number_of_nodes(), len(self._edges), self.group)


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def add_edge(self, edge_id, tail, head, label):
        """
        Adds labeled edge.

        Args:

            edge_id: str
                Unique edge id.

            tail: str
                Start vertex.

            head: str
                End vertex.

            label: pconnect.GroupElement
                Deck group label.
        """

        if edge_id in self._edges:
            message = "Duplicate edge id! -> '%s'" % edge_id
            raise SchemaError(message)

        if not isinstance(label, GroupElement) or label.group != self.group:
            message = "Group mismatch! -> edge '%s' labeled by %r" % (edge_id, label)
            raise GroupMismatchError(message)

        self._graph.add_edge(tail, head, key=edge_id, label=label)
        self._edges[edge_id] = (tail, head, label)


    def edge(self, edge_id):
        """Gets (tail, head, label) of edge."""

        if edge_id not in self._edges:
            message = "Unknown edge! -> '%s'" % edge_id
            raise PathError(message)

        return self._edges[edge_id]


    def vertices(self):
        """Gets all vertices."""

        return tuple(self._graph.nodes())


    def lift_path(self, path):
        """Gets the deck transformation of a lifted path, see pconnect.lift_path."""

        return lift_path(self, path)


    def endpoints(self, path):
        """
        Gets first and last vertex of a consecutive path.

        Args:
            path: [str]
                Edge steps, '-' prefix traverses against the edge.

        Returns:
            (str, str) or (None, None)
                Start and end vertex, None for empty path.
        """

        start = None
        end = None

        for step in path:
            tail, head, label, inverse = self._step(step)
            if inverse:
                tail, head = head, tail

            if end is not None and tail != end:
                message = "Non-consecutive path! -> step '%s' starts at '%s', previous ends at '%s'" % (step, tail, end)
                raise PathError(message)

            if start is None:
                start = tail
            end = head

        return start, end


    def lift_orbit(self, path, source_set, target_set):
        """
        Gets label of an orbit given as cell path from repeller to attractor.

        Args:

            path: [str]
                Edge steps.

            source_set: str
                Repeller set id.

            target_set: str
                Attractor set id.

        Returns:
            pconnect.GroupElement
                Orbit label.
        """

        start, end = self.endpoints(path)

        # check anchors
        for set_id, vertex in ((source_set, start), (target_set, end)):
            anchor = self.anchors.get(set_id, None)
            if anchor is not None and vertex is not None and anchor != vertex:
                message = "Non-consecutive path! -> path does not reach '%s' at its anchor '%s'" % (set_id, anchor)
                raise PathError(message)

        return lift_path(self, path)


    def to_dict(self):
        """Gets JSON representation."""

        return {
            'vertices': list(self.vertices()),
            'edges': [{'id': k, 'from': t, 'to': h, 'label': self.group.encode(g)} for k, (t, h, g) in self._edges.items()],
            'anchors': dict(self.anchors)}


    @classmethod
    def from_dict(cls, group, data, location='gain_graph'):
        """
        Creates gain graph from JSON object.

        Args:

            group: pconnect.DeckGroup
                Deck transformation group.

            data: dict
                JSON object with 'vertices', 'edges' and 'anchors'.

            location: str
                Location used in error messages.

        Returns:
            pconnect.GainGraph
                Gain graph.
        """

        vertices = require(data, 'vertices', location)

        edges = []
        for i, item in enumerate(require(data, 'edges', location)):
            where = "%s.edges[%d]" % (location, i)
            edges.append((
                require(item, 'id', where),
                require(item, 'from', where),
                require(item, 'to', where),
                group.decode(require(item, 'label', where))))

        return cls(group, vertices, edges, data.get('anchors', {}))


    def _step(self, step):
        """Parses path step into (tail, head, label, inverse)."""

        inverse = False
        if isinstance(step, str) and step.startswith('-'):
            step = step[1:]
            inverse = True

        tail, head, label = self.edge(step)
        return tail, head, label, inverse


def lift_path(graph, path):
    """
    Calculates the deck transformation reached by lifting an edge path, the
    ordered product of its labels. Traversing an edge against its direction
    contributes the inverse label.

    Args:

        graph: pconnect.GainGraph
            Labeled cell graph.

        path: [str]
            Edge ids, '-' prefix traverses against the edge.

    Returns:
        pconnect.GroupElement
            Product of labels, identity for empty path.
    """

    # check consecutiveness
    graph.endpoints(path)

    # multiply labels
    result = graph.group.identity()
    for step in path:
        tail, head, label, inverse = graph._step(step)
        result = result * (~label if inverse else label)

    return result
