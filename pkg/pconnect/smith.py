#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import logging
import numpy
from .novikov import NovikovSeries, novikov_divmod, unit_inverse
from .matrix import RingMatrix
from .errors import InsufficientPrecisionError, RingMismatchError

log = logging.getLogger(__name__)


class SmithForm(object):
    """
    SmithForm calculates the Smith normal form of an integer matrix by
    repeated Euclidean reduction of the smallest nonzero pivot.

    All arrays use object dtype holding Python integers, so entries never
    overflow.

    Attributes:

        matrix: numpy.ndarray
            Original matrix.

        D: numpy.ndarray
            Diagonal form D = U . matrix . V.

        U: numpy.ndarray
            Unimodular row transformation.

        V: numpy.ndarray
            Unimodular column transformation.
    """


    def __init__(self, matrix):
        """
        Initializes a new instance of pconnect.SmithForm.

        Args:
            matrix: numpy.ndarray, list or pconnect.RingMatrix
                Integer matrix.
        """

        if isinstance(matrix, RingMatrix):
            matrix = matrix.to_array()

        self.matrix = _as_int_array(matrix)
        self.D = self.matrix.copy()
        self.U = _int_eye(self.matrix.shape[0])
        self.V = _int_eye(self.matrix.shape[1])

        self._reduce()


    @property
    def num_rows(self):
        """Gets count of rows."""

        return self.D.shape[0]


    @property
    def num_cols(self):
        """Gets count of columns."""

        return self.D.shape[1]


    def diagonal(self):
        """Gets nonzero diagonal entries d_1 | d_2 | ..."""

        size = min(self.D.shape)
        return [int(self.D[i, i]) for i in range(size) if self.D[i, i] != 0]


    def rank(self):
        """Gets rank of the matrix."""

        return len(self.diagonal())


    def _reduce(self):
        """Diagonalizes the matrix in place."""

        for s in range(min(self.D.shape)):

            while True:

                # choose pivot
                row, col = nonzero_min_abs(self.D, s)
                if row is None:
                    return

                self._swap_rows(s, row)
                self._swap_cols(s, col)
                pivot = self.D[s, s]

                # eliminate the s-th column entries
                done = True
                for i in range(s + 1, self.num_rows):
                    if self.D[i, s] != 0:
                        self._add_row(i, s, -(self.D[i, s] // pivot))
                        done = done and self.D[i, s] == 0

                # eliminate the s-th row entries
                for j in range(s + 1, self.num_cols):
                    if self.D[s, j] != 0:
                        self._add_col(j, s, -(self.D[s, j] // pivot))
                        done = done and self.D[s, j] == 0

                if not done:
                    continue

                # move non-divisible entry into the s-th row
                row_next = self._find_non_divisible(s)
                if row_next is not None:
                    self._add_row(s, row_next, 1)
                    continue

                # make positive
                if self.D[s, s] < 0:
                    self._change_sign_row(s)

                break


    def _find_non_divisible(self, s):
        """Gets row of an entry not divisible by the pivot, None otherwise."""

        pivot = self.D[s, s]
        for i in range(s + 1, self.num_rows):
            for j in range(s + 1, self.num_cols):
                if self.D[i, j] % pivot != 0:
                    return i

        return None


    def _swap_rows(self, a, b):
        if a != b:
            self.U[[a, b]] = self.U[[b, a]]
            self.D[[a, b]] = self.D[[b, a]]


    def _swap_cols(self, a, b):
        if a != b:
            self.V[:, [a, b]] = self.V[:, [b, a]]
            self.D[:, [a, b]] = self.D[:, [b, a]]


    def _change_sign_row(self, axis):
        self.U[axis] *= -1
        self.D[axis] *= -1


    def _add_row(self, target, source, k):
        """Adds k times source row to target row."""

        self.U[target] += self.U[source] * k
        self.D[target] += self.D[source] * k


    def _add_col(self, target, source, k):
        """Adds k times source column to target column."""

        self.V[:, target] += self.V[:, source] * k
        self.D[:, target] += self.D[:, source] * k


def smith_normal_form(matrix):
    """
    Calculates Smith normal form of an integer matrix.

    Args:
        matrix: numpy.ndarray, list or pconnect.RingMatrix
            Integer matrix m.

    Returns:
        (numpy.ndarray, numpy.ndarray, numpy.ndarray)
            U, D, V with D = U . m . V, U and V unimodular and D diagonal
            with non-negative entries d_i dividing d_i+1.
    """

    snf = SmithForm(matrix)
    return snf.U, snf.D, snf.V


def nonzero_min_abs(array, s):
    """
    Gets position of the smallest nonzero |value| in array[s:, s:].

    Ties are resolved by the first position in row-major order.

    Args:

        array: numpy.ndarray
            Integer matrix.

        s: int
            First row and column of the block.

    Returns:
        (int, int) or (None, None)
            Pivot position.
    """

    idx = (None, None)
    valmin = None

    for i in range(s, array.shape[0]):
        for j in range(s, array.shape[1]):
            if array[i, j] == 0:
                continue
            if valmin is None or abs(array[i, j]) < valmin:
                idx = (i, j)
                valmin = abs(array[i, j])

    return idx


def determinant(matrix):
    """
    Calculates exact determinant of a square integer matrix by fraction-free
    Bareiss elimination.

    Args:
        matrix: numpy.ndarray or list
            Square integer matrix.

    Returns:
        int
            Determinant.
    """

    a = [[int(x) for x in row] for row in _as_int_array(matrix)]
    size = len(a)

    if size == 0:
        return 1

    if any(len(row) != size for row in a):
        message = "Determinant needs a square matrix! -> %dx%d" % (size, len(a[0]))
        raise ValueError(message)

    sign = 1
    prev = 1

    for k in range(size - 1):

        # find nonzero pivot
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign

        # eliminate
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev

        prev = a[k][k]

    return sign * a[size - 1][size - 1]


class NovikovReducer(object):
    """
    NovikovReducer diagonalizes a matrix over the Novikov ring by the
    Euclidean algorithm of pconnect.novikov_divmod.

    Pivots are chosen by smallest |leading coefficient|, ties by position.
    Unit pivots eliminate by fraction-free row operations
    row_i <- p*row_i - a_i*row_p, so exact input stays exact. Other pivots
    use Euclidean division and repeat until the pivot divides its row,
    column and the remaining block.

    Attributes:

        matrix: pconnect.RingMatrix
            Original matrix.

        divisors: [pconnect.NovikovSeries]
            Diagonal entries in pivot order.
    """


    def __init__(self, matrix):
        """
        Initializes a new instance of pconnect.NovikovReducer.

        Args:
            matrix: pconnect.RingMatrix
                Matrix over pconnect.NovikovRing.
        """

        if getattr(matrix.ring, 'precision', None) is None:
            message = "Ring mismatch! -> Novikov reduction needs a Novikov ring, got %s" % matrix.ring
            raise RingMismatchError(message)

        self.matrix = matrix
        self.precision = matrix.ring.precision
        self.divisors = []

        self._row_ids = list(matrix.rows)
        self._col_ids = list(matrix.cols)
        self._a = [[matrix.get(r, c) for c in matrix.cols] for r in matrix.rows]

        self._reduce()


    def rank(self):
        """Gets rank of the matrix."""

        return len(self.divisors)


    def elementary_divisors(self):
        """Gets non-unit divisors in canonical associate form."""

        return [d.canonical() for d in self.divisors if unit_inverse(d) is None]


    def _reduce(self):
        """Diagonalizes the matrix."""

        rows = len(self._row_ids)
        cols = len(self._col_ids)

        for s in range(min(rows, cols)):

            while True:

                # choose pivot
                row, col = self._find_pivot(s)
                if row is None:
                    self._check_undetermined(s)
                    return

                self._swap_rows(s, row)
                self._swap_cols(s, col)
                pivot = self._a[s][s]

                log.debug("Novikov pivot %d at (%s, %s): %s", s, self._row_ids[s], self._col_ids[s], pivot)

                # unit pivot
                if unit_inverse(pivot) is not None:
                    self._eliminate_by_unit(s)
                    break

                # euclidean steps
                if not self._eliminate_by_division(s):
                    continue

                # move non-divisible entry into the s-th row
                row_next = self._find_non_divisible(s)
                if row_next is not None:
                    self._add_row(s, row_next, NovikovSeries.constant(1, self.precision))
                    continue

                break

            self.divisors.append(self._a[s][s])


    def _find_pivot(self, s):
        """Gets position of the smallest nonzero nu in the block."""

        idx = (None, None)
        valmin = None

        for i in range(s, len(self._row_ids)):
            for j in range(s, len(self._col_ids)):
                value = self._a[i][j]
                if value.is_zero():
                    continue
                if valmin is None or value.nu < valmin:
                    idx = (i, j)
                    valmin = value.nu

        return idx


    def _check_undetermined(self, s):
        """Raises error if an unknown entry remains in the block."""

        for i in range(s, len(self._row_ids)):
            for j in range(s, len(self._col_ids)):
                if self._a[i][j].is_undetermined():
                    pivot = (self._row_ids[i], self._col_ids[j])
                    message = "Insufficient precision! -> entry (%s, %s) is %s at precision %d" % (pivot[0], pivot[1], self._a[i][j], self.precision)
                    raise InsufficientPrecisionError(message, pivot=pivot)


    def _eliminate_by_unit(self, s):
        """Clears the s-th column and row using unit pivot."""

        pivot = self._a[s][s]
        zero = NovikovSeries.zero(self.precision)

        # clear column by fraction-free row operations
        for i in range(s + 1, len(self._row_ids)):
            value = self._a[i][s]
            if value.exact and value.is_zero():
                continue
            for j in range(s + 1, len(self._col_ids)):
                self._a[i][j] = pivot * self._a[i][j] - value * self._a[s][j]
            self._a[i][s] = zero

        # clearing the row only touches the pivot row now
        for j in range(s + 1, len(self._col_ids)):
            self._a[s][j] = zero


    def _eliminate_by_division(self, s):
        """Reduces the s-th column and row, returns True if both are cleared."""

        pivot = self._a[s][s]
        zero = NovikovSeries.zero(self.precision)
        done = True

        # reduce column
        for i in range(s + 1, len(self._row_ids)):
            value = self._a[i][s]
            if value.exact and value.is_zero():
                continue
            quotient, remainder = novikov_divmod(value, pivot)
            self._add_row(i, s, -quotient)
            self._a[i][s] = zero if remainder.is_zero() else remainder
            done = done and remainder.is_zero()

        if not done:
            return False

        # reduce row, column s is zero below the pivot
        for j in range(s + 1, len(self._col_ids)):
            value = self._a[s][j]
            if value.exact and value.is_zero():
                continue
            quotient, remainder = novikov_divmod(value, pivot)
            self._a[s][j] = zero if remainder.is_zero() else remainder
            done = done and remainder.is_zero()

        return done


    def _find_non_divisible(self, s):
        """Gets row of an entry not divisible by the pivot, None otherwise."""

        pivot = self._a[s][s]
        for i in range(s + 1, len(self._row_ids)):
            for j in range(s + 1, len(self._col_ids)):
                value = self._a[i][j]
                if value.is_zero():
                    continue
                if not novikov_divmod(value, pivot)[1].is_zero():
                    return i

        return None


    def _swap_rows(self, a, b):
        if a != b:
            self._a[a], self._a[b] = self._a[b], self._a[a]
            self._row_ids[a], self._row_ids[b] = self._row_ids[b], self._row_ids[a]


    def _swap_cols(self, a, b):
        if a != b:
            for row in self._a:
                row[a], row[b] = row[b], row[a]
            self._col_ids[a], self._col_ids[b] = self._col_ids[b], self._col_ids[a]


    def _add_row(self, target, source, k):
        """Adds k times source row to target row."""

        for j in range(len(self._col_ids)):
            if not self._a[source][j].is_zero():
                self._a[target][j] = self._a[target][j] + k * self._a[source][j]


def _as_int_array(matrix):
    """Converts matrix to 2D object array of Python integers."""

    array = numpy.array(matrix, dtype=object)
    if array.size == 0:
        array = array.reshape(array.shape if array.ndim == 2 else (0, 0))

    if array.ndim != 2:
        message = "Matrix must be two-dimensional! -> %s" % (array.shape,)
        raise ValueError(message)

    return numpy.vectorize(int, otypes=[object])(array) if array.size else array


def _int_eye(size):
    """Creates identity of Python integers."""

    eye = numpy.zeros((size, size), dtype=object)
    for i in range(size):
        eye[i, i] = 1

    return eye
