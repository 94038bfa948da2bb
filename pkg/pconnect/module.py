#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
from .errors import SchemaError, DegreeError


class GradedModule(object):
    """
    GradedModule represents a graded free module by its basis, i.e. the
    ordered generator ids of every degree. The coefficient ring is not part
    of the module, it is carried by the matrices acting on it.

    Attributes:
        generators: {int: (str,)}
            Generator ids by degree.
    """


    def __init__(self, generators=None):
        """
        Initializes a new instance of pconnect.GradedModule.

        Args:
            generators: {int: [str]} or None
                Generator ids by degree. Empty degrees are dropped.
        """

        self.generators = {}
        self._degrees = {}

        for degree in sorted(generators or {}):

            ids = tuple(generators[degree])
            if not ids:
                continue

            # check degree
            if isinstance(degree, bool) or not isinstance(degree, int) or degree < 0:
                message = "Degree must be a non-negative integer! -> %s" % (degree,)
                raise DegreeError(message)

            # check uniqueness
            for gid in ids:
                if gid in self._degrees:
                    message = "Duplicate generator id! -> '%s'" % gid
                    raise SchemaError(message)
                self._degrees[gid] = degree

            self.generators[degree] = ids


    def __str__(self):
        """Gets standard string representation."""

        return " ".join("%d:[%s]" % (k, ",".join(self.generators[k])) for k in self.degrees()) or "0"


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator."""

        return isinstance(other, GradedModule) and self.generators == other.generators


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    def __contains__(self, gid):
        """Checks whether generator id exists."""

        return gid in self._degrees


    def __len__(self):
        """Gets total count of generators."""

        return len(self._degrees)


    def degrees(self):
        """Gets sorted list of nonzero degrees."""

        return sorted(self.generators)


    def basis(self, degree):
        """
        Gets ordered generator ids of given degree.

        Args:
            degree: int
                Degree.

        Returns:
            (str,)
                Generator ids, empty for zero degrees.
        """

        return self.generators.get(degree, ())


    def rank(self, degree):
        """Gets count of generators in given degree."""

        return len(self.basis(degree))


    def degree_of(self, gid):
        """
        Gets degree of generator.

        Args:
            gid: str
                Generator id.

        Returns:
            int
                Degree.
        """

        if gid not in self._degrees:
            message = "Unknown generator! -> '%s'" % gid
            raise SchemaError(message)

        return self._degrees[gid]


    def ids(self):
        """Gets all generator ids ordered by degree, then basis position."""

        return tuple(gid for k in self.degrees() for gid in self.generators[k])


    def permuted(self, order):
        """
        Creates the same module with reordered bases.

        Args:
            order: {int: [str]}
                New order of generator ids per degree.

        Returns:
            pconnect.GradedModule
                Reordered module.
        """

        generators = {}
        for degree in self.degrees():
            ids = tuple(order.get(degree, self.generators[degree]))
            if sorted(ids) != sorted(self.generators[degree]):
                message = "Permutation does not match basis! -> degree %d" % degree
                raise SchemaError(message)
            generators[degree] = ids

        return GradedModule(generators)


    def to_dict(self):
        """Gets JSON representation {degree: [ids]}."""

        return {str(k): list(self.generators[k]) for k in self.degrees()}


    @staticmethod
    def direct_sum(modules):
        """
        Creates direct sum of modules with disjoint generator ids.

        Args:
            modules: (pconnect.GradedModule,)
                Summands in order.

        Returns:
            pconnect.GradedModule
                Direct sum.
        """

        generators = {}
        for module in modules:
            for degree in module.degrees():
                generators.setdefault(degree, []).extend(module.basis(degree))

        return GradedModule(generators)
