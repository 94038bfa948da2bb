#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import itertools
import networkx as nx
from .errors import AdmissibilityError, SchemaError


class Poset(object):
    """
    Poset represents a finite strict partial order. The relation is stored
    as the transitive closure of the given pairs; reflexive pairs and cycles
    are rejected.

    Attributes:
        elements: (str,)
            Elements in their declared order.
    """


    def __init__(self, elements, relations=()):
        """
        Initializes a new instance of pconnect.Poset.

        Args:

            elements: (str,)
                Elements of the set.

            relations: ((str, str),)
                Pairs (a, b) meaning a < b.
        """

        self.elements = tuple(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}

        if len(self._index) != len(self.elements):
            message = "Duplicate poset elements! -> %s" % (self.elements,)
            raise SchemaError(message)

        # make graph
        graph = nx.DiGraph()
        graph.add_nodes_from(self.elements)

        for a, b in relations:

            if a not in self._index or b not in self._index:
                message = "Unknown poset element! -> (%s, %s)" % (a, b)
                raise SchemaError(message)

            if a == b:
                message = "Not an admissible decomposition! -> '%s' < '%s' is reflexive" % (a, b)
                raise AdmissibilityError(message)

            graph.add_edge(a, b)

        # check antisymmetry
        try:
            cycle = nx.find_cycle(graph)
        except nx.NetworkXNoCycle:
            cycle = None

        if cycle:
            path = " -> ".join([str(u) for u, v in cycle] + [str(cycle[-1][1])])
            message = "Not an admissible decomposition! -> cycle %s" % path
            raise AdmissibilityError(message)

        self._closure = nx.transitive_closure_dag(graph)
        self._hasse = nx.transitive_reduction(graph)
        self._hasse.add_nodes_from(self.elements)


    def __str__(self):
        """Gets standard string representation."""

        pairs = ", ".join("%s<%s" % p for p in self.relations())
        return "{%s | %s}" % (", ".join(self.elements), pairs)


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator."""

        if not isinstance(other, Poset):
            return False

        return set(self.elements) == set(other.elements) and set(self.relations()) == set(other.relations())


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    def __contains__(self, element):
        """Checks whether element exists."""

        return element in self._index


    def __len__(self):
        """Gets count of elements."""

        return len(self.elements)


    def less(self, a, b):
        """Returns True if a < b."""

        return self._closure.has_edge(a, b)


    def comparable(self, a, b):
        """Returns True if a < b or b < a."""

        return self.less(a, b) or self.less(b, a)


    def relations(self):
        """Gets all pairs (a, b) with a < b, sorted by element order."""

        key = lambda p: (self._index[p[0]], self._index[p[1]])
        return sorted(self._closure.edges(), key=key)


    def covers(self):
        """Gets Hasse diagram pairs (a, b), a < b with nothing in between."""

        key = lambda p: (self._index[p[0]], self._index[p[1]])
        return sorted(self._hasse.edges(), key=key)


    def below(self, element):
        """Gets elements below given one."""

        return self._sorted(self._closure.predecessors(element))


    def above(self, element):
        """Gets elements above given one."""

        return self._sorted(self._closure.successors(element))


    def linear_extension(self):
        """
        Gets admissible total order, smallest first. Ties are resolved by the
        declared element order.

        Returns:
            (str,)
                Ordered elements.
        """

        order = nx.lexicographical_topological_sort(self._closure, key=lambda x: self._index[x])
        return tuple(order)


    def is_interval(self, subset):
        """
        Checks interval condition: a, b in I and a < c < b implies c in I.

        Args:
            subset: iterable of str
                Checked subset.

        Returns:
            bool
                True if subset is an interval.
        """

        subset = set(subset)
        for a in subset:
            for c in self._closure.successors(a):
                if c in subset:
                    continue
                if any(self.less(c, b) for b in subset):
                    return False

        return True


    def is_adjacent(self, lower, upper):
        """
        Checks whether (lower, upper) is an adjacent pair of intervals:
        disjoint, union is an interval and nothing in upper is below lower.

        Args:

            lower: iterable of str
                Attractor side interval I.

            upper: iterable of str
                Repeller side interval J.

        Returns:
            bool
                True if the pair is adjacent.
        """

        lower = set(lower)
        upper = set(upper)

        if lower & upper:
            return False

        if not self.is_interval(lower) or not self.is_interval(upper) or not self.is_interval(lower | upper):
            return False

        return not any(self.less(j, i) for i in lower for j in upper)


    def intervals(self):
        """Gets all intervals, see pconnect.intervals."""

        return intervals(self)


    def adjacent_pairs(self):
        """Gets all adjacent pairs, see pconnect.adjacent_pairs."""

        return adjacent_pairs(self)


    def restrict(self, subset):
        """
        Gets sub-poset on given elements.

        Args:
            subset: iterable of str
                Retained elements.

        Returns:
            pconnect.Poset
                Restricted order.
        """

        subset = self._sorted(subset)
        keep = set(subset)
        relations = [(a, b) for a, b in self.relations() if a in keep and b in keep]

        return Poset(subset, relations)


    def _sorted(self, items):
        """Sorts elements by declared order."""

        return tuple(sorted(items, key=lambda x: self._index[x]))


def intervals(poset):
    """
    Enumerates all intervals of a poset, including the empty set.

    Args:
        poset: pconnect.Poset
            Partial order.

    Returns:
        [(str,)]
            Intervals ordered by size, then by element order.
    """

    result = []
    for size in range(len(poset.elements) + 1):
        for subset in itertools.combinations(poset.elements, size):
            if poset.is_interval(subset):
                result.append(subset)

    return result


def adjacent_pairs(poset):
    """
    Enumerates all adjacent pairs (I, J) of nonempty intervals.

    Args:
        poset: pconnect.Poset
            Partial order.

    Returns:
        [((str,), (str,))]
            Pairs with I on the attractor side.
    """

    candidates = [x for x in intervals(poset) if x]

    result = []
    for lower in candidates:
        for upper in candidates:
            if poset.is_adjacent(lower, upper):
                result.append((lower, upper))

    return result


def flow_order(orbits, elements=None):
    """
    Derives the flow ordering from connecting orbits: pi < pi' whenever an
    orbit runs from pi' to pi, closed transitively.

    Args:

        orbits: iterable of pconnect.OrbitRecord
            Orbit records.

        elements: (str,) or None
            All Morse set ids. Ids found in orbits are used if not given.

    Returns:
        pconnect.Poset
            Flow order.
    """

    orbits = list(orbits)

    # collect elements
    if elements is None:
        elements = []
        for orbit in orbits:
            for x in (orbit.target_set, orbit.source_set):
                if x not in elements:
                    elements.append(x)

    # collect relations
    relations = []
    for orbit in orbits:
        pair = (orbit.target_set, orbit.source_set)
        if pair not in relations:
            relations.append(pair)

    return Poset(elements, relations)
