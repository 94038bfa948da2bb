#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import numpy
from .ring import IntegerRing
from .codec import require
from .errors import DimensionError, RingMismatchError, SchemaError


class RingMatrix(object):
    """
    RingMatrix represents a sparse matrix over a coefficient ring with rows
    and columns indexed by generator ids. Columns are sources, rows are
    targets, so that column c lists the boundary of generator c.

    Instances are treated as immutable; zero entries (to precision) are never
    stored.

    Attributes:

        ring: pconnect.Ring
            Coefficient ring.

        rows: (str,)
            Row ids.

        cols: (str,)
            Column ids.
    """


    def __init__(self, ring, rows, cols, entries=None):
        """
        Initializes a new instance of pconnect.RingMatrix.

        Args:

            ring: pconnect.Ring
                Coefficient ring.

            rows: (str,)
                Row ids.

            cols: (str,)
                Column ids.

            entries: {(str, str): ?} or None
                Entries by (row, col).
        """

        self.ring = ring
        self.rows = tuple(rows)
        self.cols = tuple(cols)

        self._row_index = {x: i for i, x in enumerate(self.rows)}
        self._col_index = {x: i for i, x in enumerate(self.cols)}
        self._entries = {}

        # check ids
        if len(self._row_index) != len(self.rows) or len(self._col_index) != len(self.cols):
            message = "Dimension mismatch! -> duplicate row or column id"
            raise DimensionError(message)

        # store nonzero entries
        for (row, col), value in (entries or {}).items():

            if row not in self._row_index or col not in self._col_index:
                message = "Dimension mismatch! -> entry (%s, %s) outside matrix" % (row, col)
                raise DimensionError(message)

            ring.check(value)
            if not ring.is_zero(value):
                self._entries[(row, col)] = value


    def __str__(self):
        """Gets standard string representation."""

        return "%dx%d over %s, %d entries" % (len(self.rows), len(self.cols), self.ring, len(self._entries))


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator (to precision for Novikov series)."""

        if not isinstance(other, RingMatrix):
            return False

        if self.ring != other.ring or self.rows != other.rows or self.cols != other.cols:
            return False

        for key in set(self._entries) | set(other._entries):
            if not self.ring.equal(self.get(*key), other.get(*key)):
                return False

        return True


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    def __matmul__(self, other):
        """Matrix product operator."""

        return compose(self, other)


    @property
    def shape(self):
        """Gets (rows, cols) count."""

        return len(self.rows), len(self.cols)


    @classmethod
    def zero(cls, ring, rows, cols):
        """Creates zero matrix."""

        return cls(ring, rows, cols)


    @classmethod
    def identity(cls, ring, ids):
        """Creates identity matrix."""

        return cls(ring, ids, ids, {(x, x): ring.one() for x in ids})


    @classmethod
    def from_array(cls, rows, cols, array, ring=None):
        """
        Creates matrix from dense array.

        Args:

            rows: (str,)
                Row ids.

            cols: (str,)
                Column ids.

            array: numpy.ndarray or list
                Dense values of shape (rows, cols).

            ring: pconnect.Ring or None
                Coefficient ring, integers if not specified.

        Returns:
            pconnect.RingMatrix
                Sparse matrix.
        """

        ring = ring or IntegerRing()

        entries = {}
        for i, row in enumerate(rows):
            for j, col in enumerate(cols):
                value = array[i][j]
                if isinstance(ring, IntegerRing):
                    value = int(value)
                entries[(row, col)] = value

        return cls(ring, rows, cols, entries)


    def get(self, row, col):
        """
        Gets entry value.

        Args:

            row: str
                Row id.

            col: str
                Column id.

        Returns:
            ?
                Entry value, ring zero if not stored.
        """

        if row not in self._row_index or col not in self._col_index:
            message = "Dimension mismatch! -> no entry (%s, %s)" % (row, col)
            raise DimensionError(message)

        return self._entries.get((row, col), self.ring.zero())


    def items(self):
        """
        Iterates over nonzero entries in row-major order of the id lists.

        Yields:
            ((str, str), ?)
                Entry position and value.
        """

        key = lambda k: (self._row_index[k[0]], self._col_index[k[1]])
        for pos in sorted(self._entries, key=key):
            yield pos, self._entries[pos]


    def column(self, col):
        """Gets nonzero entries of column as {row: value}."""

        return {r: v for (r, c), v in self.items() if c == col}


    def is_zero(self):
        """Returns True if all entries vanish."""

        return not self._entries


    def nnz(self):
        """Gets count of nonzero entries."""

        return len(self._entries)


    def map(self, func, ring=None):
        """
        Applies function to every nonzero entry.

        Args:

            func: callable
                Entry mapping.

            ring: pconnect.Ring or None
                Ring of the results, same ring if not specified.

        Returns:
            pconnect.RingMatrix
                Mapped matrix.
        """

        entries = {pos: func(value) for pos, value in self._entries.items()}
        return RingMatrix(ring or self.ring, self.rows, self.cols, entries)


    def submatrix(self, rows, cols):
        """
        Gets block of the matrix.

        Args:

            rows: (str,)
                Row ids in required order.

            cols: (str,)
                Column ids in required order.

        Returns:
            pconnect.RingMatrix
                Block.
        """

        entries = {(r, c): self.get(r, c) for r in rows for c in cols if (r, c) in self._entries}
        return RingMatrix(self.ring, rows, cols, entries)


    def reindex(self, rows, cols):
        """Gets the same matrix with permuted row and column order."""

        if sorted(rows) != sorted(self.rows) or sorted(cols) != sorted(self.cols):
            message = "Dimension mismatch! -> reindexing must permute ids"
            raise DimensionError(message)

        return RingMatrix(self.ring, rows, cols, self._entries)


    def to_array(self):
        """
        Converts integer matrix to dense numpy array.

        Returns:
            numpy.ndarray
                Object array of Python integers.
        """

        if not isinstance(self.ring, IntegerRing):
            message = "Ring mismatch! -> dense conversion needs integers, got %s" % self.ring
            raise RingMismatchError(message)

        array = numpy.zeros((len(self.rows), len(self.cols)), dtype=object)
        for (row, col), value in self._entries.items():
            array[self._row_index[row], self._col_index[col]] = value

        return array


    def encode(self):
        """
        Encodes matrix as sparse triplets.

        Returns:
            dict
                JSON object with 'rows', 'cols' and 'entries'.
        """

        return {
            'rows': list(self.rows),
            'cols': list(self.cols),
            'entries': [{'row': r, 'col': c, 'value': self.ring.encode(v)} for (r, c), v in self.items()]}


    @classmethod
    def decode(cls, ring, data, location='matrix'):
        """
        Decodes matrix from sparse triplets.

        Args:

            ring: pconnect.Ring
                Coefficient ring.

            data: dict
                JSON object with 'rows', 'cols' and 'entries'.

            location: str
                Location used in error messages.

        Returns:
            pconnect.RingMatrix
                Decoded matrix.
        """

        rows = require(data, 'rows', location)
        cols = require(data, 'cols', location)

        entries = {}
        for i, item in enumerate(require(data, 'entries', location)):
            where = "%s.entries[%d]" % (location, i)
            pos = (require(item, 'row', where), require(item, 'col', where))
            if pos in entries:
                message = "Duplicate matrix entry! -> (%s, %s)" % pos
                raise SchemaError(message, location=where)
            entries[pos] = ring.decode(require(item, 'value', where))

        try:
            return cls(ring, rows, cols, entries)
        except DimensionError as e:
            raise SchemaError(str(e), location=location)


    def format_entries(self):
        """
        Formats nonzero entries.

        Returns:
            [(str, str, str)]
                Row, column and polynomial expression.
        """

        return [(r, c, self.ring.format(v)) for (r, c), v in self.items()]


def compose(outer, inner):
    """
    Multiplies matrices, outer applied after inner.

    For generators acting on the left, the boundary of a source c is
    sum_j inner[j, c] j, mapped on by the outer matrix. Entry (r, c) of the
    result therefore is sum_j inner[j, c] * outer[r, j], coefficients
    multiplied in path order. For commutative rings this is the usual
    product outer . inner.

    Args:

        outer: pconnect.RingMatrix
            Matrix applied second.

        inner: pconnect.RingMatrix
            Matrix applied first.

    Returns:
        pconnect.RingMatrix
            Composite with rows of outer and columns of inner.
    """

    # check compatibility
    if outer.ring != inner.ring:
        message = "Ring mismatch! -> %s, %s" % (outer.ring, inner.ring)
        raise RingMismatchError(message)

    if outer.cols != inner.rows:
        message = "Dimension mismatch! -> %d columns vs %d rows" % (len(outer.cols), len(inner.rows))
        raise DimensionError(message)

    ring = outer.ring

    # index outer by column
    by_col = {}
    for (r, j), value in outer.items():
        by_col.setdefault(j, []).append((r, value))

    # sum paths
    entries = {}
    for (j, c), a in inner.items():
        for r, b in by_col.get(j, ()):
            product = ring.mul(a, b)
            if (r, c) in entries:
                entries[(r, c)] = ring.add(entries[(r, c)], product)
            else:
                entries[(r, c)] = product

    return RingMatrix(ring, outer.rows, inner.cols, entries)
