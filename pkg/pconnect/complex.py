#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import logging
from .matrix import RingMatrix, compose
from .errors import DimensionError

log = logging.getLogger(__name__)


class PChainComplex(object):
    """
    PChainComplex represents a graded free module over a coefficient ring
    together with its degree -1 boundary maps.

    Attributes:

        module: pconnect.GradedModule
            Underlying graded module.

        ring: pconnect.Ring
            Coefficient ring.
    """


    def __init__(self, module, ring, boundaries=None):
        """
        Initializes a new instance of pconnect.PChainComplex.

        Args:

            module: pconnect.GradedModule
                Underlying graded module.

            ring: pconnect.Ring
                Coefficient ring.

            boundaries: {int: pconnect.RingMatrix} or None
                Boundary maps by source degree. Missing maps are zero.
        """

        self.module = module
        self.ring = ring
        self._boundaries = {}

        for degree, matrix in (boundaries or {}).items():

            # check shape
            if matrix.cols != module.basis(degree) or matrix.rows != module.basis(degree - 1):
                message = "Dimension mismatch! -> boundary of degree %d does not match module basis" % degree
                raise DimensionError(message)

            if matrix.ring != ring:
                message = "Dimension mismatch! -> boundary of degree %d is over %s, not %s" % (degree, matrix.ring, ring)
                raise DimensionError(message)

            if not matrix.is_zero():
                self._boundaries[degree] = matrix


    def __str__(self):
        """Gets standard string representation."""

        return "%s over %s" % (self.module, self.ring)


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator."""

        if not isinstance(other, PChainComplex):
            return False

        if self.module != other.module or self.ring != other.ring:
            return False

        return all(self.boundary(k) == other.boundary(k) for k in self.degrees())


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    def degrees(self):
        """Gets sorted degrees of the module."""

        return self.module.degrees()


    def boundary(self, degree):
        """
        Gets boundary map of given source degree.

        Args:
            degree: int
                Source degree k.

        Returns:
            pconnect.RingMatrix
                Map from degree k to degree k-1 generators.
        """

        if degree in self._boundaries:
            return self._boundaries[degree]

        return RingMatrix.zero(self.ring, self.module.basis(degree - 1), self.module.basis(degree))


    def boundaries(self):
        """Gets nonzero boundary maps by degree."""

        return dict(self._boundaries)


    def verify_boundary_squared(self):
        """Checks d o d = 0, see pconnect.verify_boundary_squared."""

        return verify_boundary_squared(self)


    def permuted(self, order):
        """
        Creates the same complex with reordered bases.

        Args:
            order: {int: [str]}
                New order of generator ids per degree.

        Returns:
            pconnect.PChainComplex
                Reordered complex.
        """

        module = self.module.permuted(order)

        boundaries = {}
        for degree, matrix in self._boundaries.items():
            boundaries[degree] = matrix.reindex(module.basis(degree - 1), module.basis(degree))

        return PChainComplex(module, self.ring, boundaries)


class BoundaryReport(object):
    """
    BoundaryReport holds the result of the d o d = 0 check.

    Attributes:

        failures: {int: [(str, str, ?)]}
            Offending (row, col, value) triples of d_{k-1} o d_k by degree k.

        checked: (int,)
            Checked degrees.
    """


    def __init__(self, checked, failures):

        self.checked = tuple(checked)
        self.failures = failures


    def __str__(self):
        """Gets standard string representation."""

        if self.passed:
            return "d^2 = 0 in all degrees"

        return "d^2 != 0 in degrees %s" % ", ".join(str(k) for k in sorted(self.failures))


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    @property
    def passed(self):
        """Returns True if no offending entry was found."""

        return not self.failures


    def offending(self):
        """Gets all offending entries as (degree, row, col, value)."""

        return [(k, r, c, v) for k in sorted(self.failures) for r, c, v in self.failures[k]]


def verify_boundary_squared(chain):
    """
    Checks that consecutive boundaries compose to zero (to precision for
    Novikov coefficients). A failing check is reported, not raised.

    Args:
        chain: pconnect.PChainComplex
            Checked complex.

    Returns:
        pconnect.BoundaryReport
            Check result with offending entries.
    """

    checked = []
    failures = {}

    for degree in chain.degrees():

        # nothing to compose
        if degree - 2 not in chain.module.generators:
            continue

        checked.append(degree)
        square = compose(chain.boundary(degree - 1), chain.boundary(degree))

        if not square.is_zero():
            failures[degree] = [(r, c, v) for (r, c), v in square.items()]
            log.debug("d^2 != 0 on degree %d: %d entries", degree, square.nnz())

    return BoundaryReport(checked, failures)
