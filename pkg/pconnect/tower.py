#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import logging
import numpy
from .novikov import NovikovSeries
from .circle import novikov_incidence, unrolled_id
from .errors import DimensionError

log = logging.getLogger(__name__)


class TruncationTower(object):
    """
    TruncationTower holds the Novikov boundary truncated to Z[t]/(t^(l+1))
    for every level l = 0 ... L together with the projections dropping
    higher exponents.

    The matrix of level l and degree k is an integer array of shape
    (rows, cols, l+1) whose last axis holds the coefficients of t^0 ... t^l.

    Attributes:

        levels: int
            Highest level L.

        max_level: int or None
            Highest record level of the data.

        stable_level: int or None
            Smallest level from which all levels equal level L, None if the
            data reach beyond L.
    """


    def __init__(self, levels, bases, matrices, max_level=None):
        """
        Initializes a new instance of pconnect.TruncationTower.

        Args:

            levels: int
                Highest level L.

            bases: {int: ((str,), (str,))}
                Row and column ids of every degree.

            matrices: {int: {int: numpy.ndarray}}
                Coefficient arrays by level and degree.

            max_level: int or None
                Highest record level of the data.
        """

        self.levels = levels
        self.max_level = max_level

        self._bases = bases
        self._matrices = matrices

        self.stable_level = self._find_stable_level()


    def __str__(self):
        """Gets standard string representation."""

        stable = "stable at %d" % self.stable_level if self.stabilized else "not stabilized"
        return "levels 0..%d, %s" % (self.levels, stable)


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    @property
    def stabilized(self):
        """Returns True if the stabilization level was reached."""

        return self.stable_level is not None


    def degrees(self):
        """Gets degrees k with boundary matrices."""

        return sorted(self._bases)


    def basis(self, degree):
        """Gets (rows, cols) ids of degree."""

        return self._bases[degree]


    def matrix(self, level, degree):
        """
        Gets coefficient array of a level.

        Args:

            level: int
                Level l.

            degree: int
                Source degree k.

        Returns:
            numpy.ndarray
                Array of shape (rows, cols, l+1).
        """

        return self._matrices[level][degree]


    def entry(self, level, degree, row, col):
        """
        Gets one truncated entry as polynomial.

        Args:

            level: int
                Level l.

            degree: int
                Source degree k.

            row: str
                Row id.

            col: str
                Column id.

        Returns:
            pconnect.NovikovSeries
                Exact polynomial of degree <= l.
        """

        rows, cols = self._bases[degree]
        coeffs = self._matrices[level][degree][rows.index(row), cols.index(col)]

        return NovikovSeries.from_terms(enumerate(int(c) for c in coeffs), level + 1, exact=True)


    def project(self, level, target):
        """
        Applies projection pi from level l to level j <= l.

        Args:

            level: int
                Source level l.

            target: int
                Target level j.

        Returns:
            {int: numpy.ndarray}
                Projected arrays by degree.
        """

        if target > level:
            message = "Projection goes to lower levels only! -> %d to %d" % (level, target)
            raise ValueError(message)

        return {k: a[:, :, :target + 1] for k, a in self._matrices[level].items()}


    def coherence(self):
        """
        Checks pi o (level l matrix) = (level j matrix) for all j <= l.

        Returns:
            [(int, int, int)]
                Failing (l, j, degree) triples.
        """

        failures = []
        for level in range(self.levels + 1):
            for target in range(level):
                projected = self.project(level, target)
                for k in self.degrees():
                    if not numpy.array_equal(projected[k], self._matrices[target][k]):
                        failures.append((level, target, k))

        return failures


    def expand(self, level, degree):
        """
        Expands level matrix into the integer boundary of the unrolled cover
        W(l), with basis t^j p named 'p@j' ordered by translate first.

        Args:

            level: int
                Level l.

            degree: int
                Source degree k.

        Returns:
            ((str,), (str,), numpy.ndarray)
                Row ids, column ids and integer matrix.
        """

        rows, cols = self._bases[degree]
        coeffs = self._matrices[level][degree]
        size = level + 1

        array = numpy.zeros((len(rows) * size, len(cols) * size), dtype=object)
        for i in range(len(rows)):
            for j in range(len(cols)):
                for e in range(size):
                    for shift in range(size - e):
                        array[(shift + e) * len(rows) + i, shift * len(cols) + j] = coeffs[i, j, e]

        row_ids = tuple(unrolled_id(r, s) for s in range(size) for r in rows)
        col_ids = tuple(unrolled_id(c, s) for s in range(size) for c in cols)

        return row_ids, col_ids, array


    def format_level(self, level, ring):
        """
        Formats nonzero entries of a level.

        Args:

            level: int
                Level l.

            ring: pconnect.NovikovRing
                Ring used for rendering.

        Returns:
            [(int, str, str, str)]
                Degree, row, column and polynomial.
        """

        lines = []
        for k in self.degrees():
            rows, cols = self._bases[k]
            for j, col in enumerate(cols):
                for i, row in enumerate(rows):
                    value = self.entry(level, k, row, col)
                    if not value.is_zero():
                        lines.append((k, row, col, ring.format(value)))

        return lines


    def _find_stable_level(self):
        """Finds smallest level whose pattern persists up to level L."""

        if self.max_level is not None and self.max_level > self.levels:
            return None

        top = self._matrices[self.levels]
        stable = self.levels

        for level in range(self.levels, -1, -1):
            if not all(numpy.array_equal(self._padded(level, k), top[k]) for k in self.degrees()):
                break
            stable = level

        return stable


    def _padded(self, level, degree):
        """Gets level array padded with zeros to level L."""

        array = self._matrices[level][degree]
        pad = self.levels - level

        return numpy.pad(array, ((0, 0), (0, 0), (0, pad)), constant_values=0)


class TowerReport(object):
    """
    TowerReport holds the comparison of a truncation tower with the
    Novikov complex.

    Attributes:

        mismatches: [(int, int, str, str, list, list)]
            Level, degree, row, column, tower and truncated coefficients.

        incoherent: [(int, int, int)]
            Failing projection squares (l, j, degree).
    """


    def __init__(self, mismatches, incoherent):

        self.mismatches = mismatches
        self.incoherent = incoherent


    def __str__(self):
        """Gets standard string representation."""

        if self.passed:
            return "tower matches Novikov boundary at all levels"

        levels = sorted(set(m[0] for m in self.mismatches))
        return "tower differs at levels %s" % ", ".join(str(x) for x in levels)


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    @property
    def passed(self):
        """Returns True if all levels match and projections commute."""

        return not self.mismatches and not self.incoherent


    def first_mismatch(self):
        """Gets (level, row, col) of the first mismatch, None if passed."""

        if not self.mismatches:
            return None

        level, degree, row, col, found, expected = self.mismatches[0]
        return level, row, col


def truncation_tower(data, levels):
    """
    Builds the tower of truncated Novikov boundaries of circle-valued data.

    Args:

        data: pconnect.CircleMorseData
            Circle-valued Morse data.

        levels: int
            Highest level L >= 0.

    Returns:
        pconnect.TruncationTower
            Tower with stabilization level.
    """

    if levels < 0:
        message = "Tower level must be non-negative! -> %d" % levels
        raise ValueError(message)

    module = data.module()
    top = max(levels, data.max_level() or 0) + 1

    # collect full coefficients
    bases = {}
    full = {}
    for k in module.degrees():
        if k - 1 not in module.generators:
            continue

        rows, cols = module.basis(k - 1), module.basis(k)
        array = numpy.zeros((len(rows), len(cols), levels + 1), dtype=object)

        for j, p in enumerate(cols):
            for i, q in enumerate(rows):
                series = novikov_incidence(data, p, q, top)
                for e, c in series.terms():
                    if e <= levels:
                        array[i, j, e] = c

        bases[k] = (rows, cols)
        full[k] = array

    # truncate per level
    matrices = {}
    for level in range(levels + 1):
        matrices[level] = {k: a[:, :, :level + 1].copy() for k, a in full.items()}

    tower = TruncationTower(levels, bases, matrices, data.max_level())
    log.debug("Tower of %s: %s", data, tower)

    return tower


def compare_tower_limit(tower, chain):
    """
    Compares every tower level with the Novikov boundary truncated above
    t^level.

    Args:

        tower: pconnect.TruncationTower
            Truncation tower.

        chain: pconnect.PChainComplex
            Novikov complex of the same data.

    Returns:
        pconnect.TowerReport
            Located mismatches.
    """

    mismatches = []

    for level in range(tower.levels + 1):
        for k in tower.degrees():

            rows, cols = tower.basis(k)
            boundary = chain.boundary(k)

            if boundary.rows != rows or boundary.cols != cols:
                message = "Dimension mismatch! -> tower and complex differ in degree %d" % k
                raise DimensionError(message)

            found_array = tower.matrix(level, k)

            for j, col in enumerate(cols):
                for i, row in enumerate(rows):

                    value = boundary.get(row, col)
                    expected = [value.coefficient(e) for e in range(level + 1)]
                    found = [int(c) for c in found_array[i, j]]

                    if expected != found or (value.terms() and value.terms()[0][0] < 0):
                        mismatches.append((level, k, row, col, found, expected))

    report = TowerReport(mismatches, tower.coherence())
    log.debug("Tower comparison: %s", report)

    return report
