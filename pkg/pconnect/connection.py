#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import logging
from .constants import *
from .ring import IntegerRing
from .novikov import NovikovSeries
from .algebra import coefficient_ring, augment
from .matrix import RingMatrix, compose
from .complex import PChainComplex
from .morse import validate_regime
from .errors import AdmissibilityError, DegreeError, DimensionError, GroupMismatchError, HomomorphismError, RingMismatchError

log = logging.getLogger(__name__)


class ConnectionBundle(object):
    """
    ConnectionBundle collects the per-lift connection matrices
    delta(R, gA) of one repeller-attractor pair, one integer matrix for
    every deck transformation g with nonempty C_g(R, A).

    Attributes:

        repeller: str
            Repeller set id R.

        attractor: str
            Attractor set id A.

        group: pconnect.DeckGroup
            Deck transformation group.

        ring: pconnect.Ring
            Coefficient ring Z((G)) the bundle assembles into.

        base_shift: pconnect.GroupElement
            Deck transformation h of the repeller lift the labels refer to.

        records: [pconnect.OrbitRecord]
            Orbit records of the pair.

        matrices: {pconnect.GroupElement: pconnect.RingMatrix}
            Nonzero integer matrices from repeller to attractor generators.
    """


    def __init__(self, decomposition, repeller, attractor, precision=DEFAULT_PRECISION):
        """
        Initializes a new instance of pconnect.ConnectionBundle.

        Args:

            decomposition: pconnect.MorseDecomposition
                Decomposition.

            repeller: str
                Repeller set id.

            attractor: str
                Attractor set id.

            precision: int
                Novikov precision.
        """

        self.repeller = repeller
        self.attractor = attractor
        self.group = decomposition.group
        self.ring = coefficient_ring(decomposition.group, decomposition.regime, precision)
        self.base_shift = decomposition.base_shift
        self.records = decomposition.orbits.for_pair(repeller, attractor)

        self.rows = decomposition.get_set(attractor).module.ids()
        self.cols = decomposition.get_set(repeller).module.ids()

        # sum records per label
        values = {}
        for record in self.records:
            entries = values.setdefault(record.label, {})
            entries[record.entry] = entries.get(record.entry, 0) + record.coeff

        # store nonzero matrices
        self.matrices = {}
        for label in sorted(values, key=self.group.sort_key):
            matrix = RingMatrix(IntegerRing(), self.rows, self.cols, values[label])
            if not matrix.is_zero():
                self.matrices[label] = matrix


    def __str__(self):
        """Gets standard string representation."""

        labels = ", ".join(self.group.format(g) for g in self.matrices)
        return "(%s, %s): {%s}" % (self.repeller, self.attractor, labels)


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    @property
    def pair(self):
        """Gets (repeller, attractor) set ids."""

        return self.repeller, self.attractor


    def labels(self):
        """Gets labels with nonzero matrices."""

        return tuple(self.matrices)


class PConnectionMatrix(object):
    """
    PConnectionMatrix represents the p-connection matrix N-Delta of a
    p-Morse decomposition, the block matrix over Z((G)) whose blocks
    delta(R, A) are assembled from the orbit records of adjacent pairs.

    All blocks are written in the basis embedding every Conley index
    generator with unit coefficient e. Rows of a block are attractor
    generators, columns are repeller generators.

    Attributes:

        decomposition: pconnect.MorseDecomposition
            Underlying decomposition.

        ring: pconnect.Ring
            Coefficient ring.

        blocks: {(str, str): pconnect.RingMatrix}
            Nonzero blocks by (repeller, attractor).
    """


    def __init__(self, decomposition, ring, blocks=None):
        """
        Initializes a new instance of pconnect.PConnectionMatrix.

        Args:

            decomposition: pconnect.MorseDecomposition
                Underlying decomposition.

            ring: pconnect.Ring
                Coefficient ring.

            blocks: {(str, str): pconnect.RingMatrix} or None
                Blocks by (repeller, attractor).
        """

        self.decomposition = decomposition
        self.ring = ring
        self.blocks = {}

        for (repeller, attractor), block in (blocks or {}).items():

            # check shape
            rows = decomposition.get_set(attractor).module.ids()
            cols = decomposition.get_set(repeller).module.ids()
            if block.rows != rows or block.cols != cols:
                message = "Dimension mismatch! -> block (%s, %s)" % (repeller, attractor)
                raise DimensionError(message)

            if not block.is_zero():
                self.blocks[(repeller, attractor)] = block

        self._module = decomposition.module()
        self._complex = self._make_complex()


    def __str__(self):
        """Gets standard string representation."""

        return "N-Delta over %s, %d blocks" % (self.ring, len(self.blocks))


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator."""

        if not isinstance(other, PConnectionMatrix):
            return False

        if self.ring != other.ring or self._module != other._module:
            return False

        if self.decomposition.poset != other.decomposition.poset:
            return False

        if set(self.blocks) != set(other.blocks):
            return False

        return all(self.blocks[k] == other.blocks[k] for k in self.blocks)


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    @property
    def group(self):
        """Gets deck transformation group."""

        return self.decomposition.group


    @property
    def precision(self):
        """Gets Novikov precision, None for group rings."""

        return getattr(self.ring, 'precision', None)


    @property
    def module(self):
        """Gets underlying module NC(S)."""

        return self._module


    @property
    def complex(self):
        """Gets chain complex (NC(S), N-Delta)."""

        return self._complex


    def block(self, repeller, attractor):
        """
        Gets block delta(R, A).

        Args:

            repeller: str
                Repeller set id.

            attractor: str
                Attractor set id.

        Returns:
            pconnect.RingMatrix
                Block, zero if not stored.
        """

        if (repeller, attractor) in self.blocks:
            return self.blocks[(repeller, attractor)]

        rows = self.decomposition.get_set(attractor).module.ids()
        cols = self.decomposition.get_set(repeller).module.ids()

        return RingMatrix.zero(self.ring, rows, cols)


    def is_zero(self):
        """Returns True if all blocks vanish."""

        return not self.blocks


    def entries(self):
        """
        Gets nonzero entries ordered by source degree, then generator ids.

        Returns:
            [(str, str, ?, (str, str))]
                Source generator, target generator, value and block pair.
        """

        items = []
        for pair, block in self.blocks.items():
            for (row, col), value in block.items():
                items.append((col, row, value, pair))

        degree = self._module.degree_of
        items.sort(key=lambda x: (degree(x[0]), x[0], x[1]))

        return items


    def full_matrix(self):
        """
        Gets N-Delta as one square matrix on all generators.

        Returns:
            pconnect.RingMatrix
                Matrix with rows and columns in module order.
        """

        ids = self._module.ids()
        entries = {}
        for pair, block in self.blocks.items():
            for pos, value in block.items():
                entries[pos] = value

        return RingMatrix(self.ring, ids, ids, entries)


    def is_upper_triangular(self):
        """Returns True if every nonzero block (R, A) has A < R."""

        poset = self.decomposition.poset
        return all(poset.less(a, r) for r, a in self.blocks)


    def restrict(self, interval):
        """
        Gets the p-connection matrix of the sub-decomposition on an interval.

        Args:
            interval: iterable of str
                Morse set ids forming an interval of the order.

        Returns:
            pconnect.PConnectionMatrix
                Restricted matrix.
        """

        d = self.decomposition
        interval = set(interval)

        if not d.poset.is_interval(interval):
            message = "Not an admissible decomposition! -> %s is not an interval" % sorted(interval)
            raise AdmissibilityError(message)

        sets = [s for s in d.sets if s.id in interval]
        orbits = [r for r in d.orbits if r.source_set in interval and r.target_set in interval]
        blocks = {p: b for p, b in self.blocks.items() if p[0] in interval and p[1] in interval}

        sub = d.replace(sets=sets, orbits=orbits, poset=d.poset.restrict(interval), reference=None)

        return PConnectionMatrix(sub, self.ring, blocks)


    def encode(self):
        """
        Encodes matrix as self-contained JSON artifact.

        Returns:
            dict
                Document of kind 'ndelta'.
        """

        blocks = []
        for s in self.decomposition.sets:
            for pair in sorted(self.blocks):
                if pair[0] == s.id:
                    blocks.append({
                        'repeller': pair[0],
                        'attractor': pair[1],
                        'matrix': self.blocks[pair].encode()})

        data = {
            'schema_version': SCHEMA_VERSION,
            'kind': NDELTA,
            'ring': self.ring.name,
            'decomposition': self.decomposition.to_dict(),
            'blocks': blocks}

        if self.precision is not None:
            data['precision'] = self.precision

        return data


    def _make_complex(self):
        """Creates chain complex of all blocks."""

        module = self._module

        # collect entries by source degree
        entries = {}
        for (repeller, attractor), block in self.blocks.items():
            for (row, col), value in block.items():

                k = module.degree_of(col)
                if module.degree_of(row) != k - 1:
                    message = "Degree drop must be exactly 1! -> entry (%s, %s)" % (row, col)
                    raise DegreeError(message)

                entries.setdefault(k, {})[(row, col)] = value

        # make boundaries
        boundaries = {}
        for k, values in entries.items():
            boundaries[k] = RingMatrix(self.ring, module.basis(k - 1), module.basis(k), values)

        return PChainComplex(module, self.ring, boundaries)


class ProjectionReport(object):
    """
    ProjectionReport holds the classical connection matrix obtained by
    augmentation together with the commuting square and reference checks.

    Attributes:

        matrix: pconnect.RingMatrix
            Projected matrix over Z.

        exact: bool
            False if some entry was augmented from a truncated series.

        square_ok: bool
            Projection of N-Delta o N-Delta equals the square of the projection.

        reference_ok: bool or None
            Projection equals the supplied reference, None without reference.

        differences: [(str, str, int, int)]
            Entries differing from the reference (row, col, found, expected).
    """


    def __init__(self, matrix, exact, square_ok, reference_ok=None, differences=None):

        self.matrix = matrix
        self.exact = exact
        self.square_ok = square_ok
        self.reference_ok = reference_ok
        self.differences = differences or []


    def __str__(self):
        """Gets standard string representation."""

        return "%s, %s" % ("zero" if self.matrix.is_zero() else "nonzero", self.verdict())


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    @property
    def passed(self):
        """Returns True if no check failed."""

        return self.square_ok and self.reference_ok is not False


    def verdict(self):
        """Gets reference verdict text."""

        if self.reference_ok is None:
            return "no reference"

        return "matches reference" if self.reference_ok else "differs from reference"


def assemble_delta(bundle):
    """
    Assembles the block delta(R, A) over Z((G)) from a connection bundle.

    Entry (a, r) is sum_g m_g[a, r] h^-1 g, where h is the base lift
    translation, so the block does not depend on the chosen repeller lift.

    Args:
        bundle: pconnect.ConnectionBundle
            Per-lift matrices of the pair.

    Returns:
        pconnect.RingMatrix
            Block over the coefficient ring.
    """

    ring = bundle.ring
    shift = ~bundle.base_shift

    entries = {}
    for label, matrix in bundle.matrices.items():
        g = shift * label
        for pos, coeff in matrix.items():
            term = ring.embed(g, coeff)
            entries[pos] = ring.add(entries[pos], term) if pos in entries else term

    return RingMatrix(ring, bundle.rows, bundle.cols, entries)


def assemble_NDelta(decomposition, precision=DEFAULT_PRECISION):
    """
    Assembles the p-connection matrix of a decomposition. Blocks of adjacent
    pairs come from their orbit records, all other blocks are zero.

    Args:

        decomposition: pconnect.MorseDecomposition
            Validated decomposition.

        precision: int
            Novikov precision.

    Returns:
        pconnect.PConnectionMatrix
            Assembled matrix.
    """

    # check regime and adjacency
    report = validate_regime(decomposition)
    if report.violations:
        raise AdmissibilityError(report.violations[0])

    ring = coefficient_ring(decomposition.group, decomposition.regime, precision)

    # assemble blocks
    blocks = {}
    for repeller, attractor in decomposition.connected_pairs():
        bundle = ConnectionBundle(decomposition, repeller, attractor, precision)
        block = assemble_delta(bundle)
        log.debug("Block (%s, %s): %d labels, %d entries", repeller, attractor, len(bundle.matrices), block.nnz())
        blocks[(repeller, attractor)] = block

    matrix = PConnectionMatrix(decomposition, ring, blocks)
    log.info("Assembled %s", matrix)

    return matrix


def project_classical(matrix):
    """
    Projects N-Delta to a classical connection matrix by augmentation,
    every group element sent to 1.

    Args:
        matrix: pconnect.PConnectionMatrix
            p-connection matrix.

    Returns:
        pconnect.RingMatrix
            Square matrix over Z on all generators.
    """

    full = matrix.full_matrix()
    return full.map(lambda x: int(augment(x)), IntegerRing())


def projection_report(matrix, reference=None):
    """
    Projects N-Delta and checks the commuting square and the reference.

    Args:

        matrix: pconnect.PConnectionMatrix
            p-connection matrix.

        reference: pconnect.RingMatrix or None
            Classical connection matrix to compare with.

    Returns:
        pconnect.ProjectionReport
            Projection with verdicts.
    """

    full = matrix.full_matrix()
    projected = project_classical(matrix)
    exact = all(augment(v).exact for pos, v in full.items())

    # projection of the square equals square of the projection
    square = compose(full, full).map(lambda x: int(augment(x)), IntegerRing())
    square_ok = square == compose(projected, projected)

    # compare reference
    reference_ok = None
    differences = []
    if reference is not None:
        ids = projected.rows
        if sorted(reference.rows) != sorted(ids) or sorted(reference.cols) != sorted(ids):
            reference_ok = False
        else:
            reference = reference.reindex(ids, ids)
            for r in ids:
                for c in ids:
                    found, expected = projected.get(r, c), reference.get(r, c)
                    if found != expected:
                        differences.append((r, c, found, expected))
            reference_ok = not differences

    return ProjectionReport(projected, exact, square_ok, reference_ok, differences)


def nonzero_entry_certificate(matrix, pair):
    """
    Lists the orbit records witnessing every nonzero entry of a block.

    Args:

        matrix: pconnect.PConnectionMatrix
            p-connection matrix.

        pair: (str, str)
            Repeller and attractor set ids.

    Returns:
        [((str, str), ?, [pconnect.OrbitRecord])]
            Entry position (row, col), value and witnessing records.
    """

    block = matrix.block(*pair)
    records = matrix.decomposition.orbits.for_pair(*pair)

    witnesses = []
    for pos, value in block.items():

        found = [r for r in records if r.entry == pos]
        if not found:
            message = "Assembly error! -> nonzero entry %s of %s has no witness" % (pos, pair)
            raise AssertionError(message)

        witnesses.append((pos, value, found))

    return witnesses


def transport_by_isomorphism(matrix, iso, precision=None):
    """
    Transports N-Delta along an isomorphism of deck groups, i.e. to an
    equivalent regular covering. Every coefficient is relabeled by the
    induced ring isomorphism H, and the result is checked against the
    matrix assembled from the relabeled decomposition.

    Args:

        matrix: pconnect.PConnectionMatrix
            p-connection matrix over Z((G1)).

        iso: pconnect.GroupMap
            Isomorphism G1 -> G2.

        precision: int or None
            Novikov precision, the current one if not specified.

    Returns:
        pconnect.PConnectionMatrix
            p-connection matrix over Z((G2)).
    """

    d = matrix.decomposition

    # check map
    if iso.source != d.group:
        message = "Group mismatch! -> map source %s, matrix group %s" % (iso.source, d.group)
        raise GroupMismatchError(message)

    iso.validate()

    if precision is None:
        precision = matrix.precision or DEFAULT_PRECISION

    ring = coefficient_ring(iso.target, d.regime, precision)

    # relabel coefficients
    def transport(x):

        if isinstance(x, NovikovSeries) and not x.exact:
            message = "Ring mismatch! -> cannot transport truncated series %s" % x
            raise RingMismatchError(message)

        result = ring.zero()
        for g, c in matrix.ring.terms(x):
            result = ring.add(result, ring.embed(iso(g), c))

        return result

    blocks = {pair: block.map(transport, ring) for pair, block in matrix.blocks.items()}

    # relabel decomposition
    transported = d.replace(
        group=iso.target,
        orbits=d.orbits.relabeled(iso),
        base_shift=iso(d.base_shift),
        reference=None)

    result = PConnectionMatrix(transported, ring, blocks)

    # check H o N-Delta = N-Delta' o H
    expected = assemble_NDelta(transported, precision)
    if expected != result:
        message = "Non-homomorphism map! -> transported matrix differs from matrix of transported orbits"
        raise HomomorphismError(message)

    return result
