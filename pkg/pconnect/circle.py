#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import logging
from .constants import *
from .group import DeckGroup
from .ring import IntegerRing
from .novikov import NovikovRing, NovikovSeries
from .module import GradedModule
from .matrix import RingMatrix
from .complex import PChainComplex, verify_boundary_squared
from .orbit import OrbitRecord
from .morse import MorseSet, MorseDecomposition
from .codec import encode_int
from .errors import DegreeError, InconsistentDataError, SchemaError

log = logging.getLogger(__name__)


class CriticalPoints(object):
    """
    CriticalPoints represents critical points with their Morse indices and
    provides the lookups shared by circle-valued and real-valued data.

    Attributes:
        points: ((str, int),)
            Critical point ids with Morse index in declared order.
    """


    def __init__(self, points):

        self.points = tuple((str(p), int(k)) for p, k in points)
        self._index = {}

        for p, k in self.points:

            if p in self._index:
                message = "Duplicate critical point! -> '%s'" % p
                raise SchemaError(message)

            if k < 0:
                message = "Morse index must be non-negative! -> '%s' (%d)" % (p, k)
                raise DegreeError(message)

            self._index[p] = k


    def __len__(self):
        """Gets count of critical points."""

        return len(self.points)


    def __contains__(self, point):
        """Checks whether critical point exists."""

        return point in self._index


    def index(self, point):
        """Gets Morse index of critical point."""

        if point not in self._index:
            message = "Unknown critical point! -> '%s'" % point
            raise SchemaError(message)

        return self._index[point]


    def crit(self, k):
        """Gets critical points of index k in declared order."""

        return tuple(p for p, i in self.points if i == k)


    def module(self):
        """Gets free module on the critical points graded by index."""

        generators = {}
        for p, k in self.points:
            generators.setdefault(k, []).append(p)

        return GradedModule(generators)


    def check_drop(self, source, target):
        """Checks index(source) = index(target) + 1."""

        if self.index(source) != self.index(target) + 1:
            message = "Index mismatch! -> index(%s) = %d, index(%s) = %d" % (source, self.index(source), target, self.index(target))
            raise DegreeError(message)


class IncidenceRecord(object):
    """
    IncidenceRecord holds the signed count n(p, t^level q; F) of gradient
    lines from the lift of p to the level-th translate of the lift of q.

    Attributes:

        source: str
            Critical point p.

        target: str
            Critical point q with index(q) = index(p) - 1.

        level: int
            Covering level, lifts are chosen inside W so it is non-negative.

        count: int
            Signed count.
    """


    def __init__(self, source, target, level, count):

        self.source = source
        self.target = target
        self.level = int(level)
        self.count = int(count)

        if self.level < 0:
            message = "Incidence level must be non-negative! -> %s -> %s at %d" % (source, target, self.level)
            raise SchemaError(message)


    def __str__(self):
        """Gets standard string representation."""

        return "%s -> t^%d %s: %+d" % (self.source, self.level, self.target, self.count)


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator."""

        if not isinstance(other, IncidenceRecord):
            return False

        return (self.source, self.target, self.level, self.count) == (other.source, other.target, other.level, other.count)


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    def to_dict(self):
        """Gets JSON representation."""

        return {'from': self.source, 'to': self.target, 'level': self.level, 'count': encode_int(self.count)}


class CircleMorseData(CriticalPoints):
    """
    CircleMorseData represents a circle-valued Morse function f: M -> S^1
    by its critical points and the signed gradient line counts between the
    lifts inside the fundamental cobordism W of the infinite cyclic cover.

    Attributes:

        points: ((str, int),)
            Critical point ids with Morse index.

        incidences: (pconnect.IncidenceRecord,)
            Incidence records.

        name: str or None
            Data name.
    """


    def __init__(self, points, incidences=(), name=None):
        """
        Initializes a new instance of pconnect.CircleMorseData.

        Args:

            points: ((str, int),)
                Critical point ids with Morse index.

            incidences: (pconnect.IncidenceRecord,) or ((str, str, int, int),)
                Incidence records as objects or (from, to, level, count).

            name: str or None
                Data name.
        """

        super().__init__(points)

        self.name = name
        self.incidences = tuple(x if isinstance(x, IncidenceRecord) else IncidenceRecord(*x) for x in incidences)

        for record in self.incidences:
            self.check_drop(record.source, record.target)


    def __str__(self):
        """Gets standard string representation."""

        return "%s: %d critical points, %d incidences" % (self.name or 'circle_morse', len(self.points), len(self.incidences))


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def max_level(self):
        """Gets highest level of a nonzero record, None if there is none."""

        levels = [r.level for r in self.incidences if r.count]
        return max(levels) if levels else None


    def unroll(self, levels):
        """
        Gets real-valued Morse data of W(levels), the union of the translates
        t^j W for j = 0 ... levels. Critical point p of translate j is named
        'p@j' and the counts are copied from the one-record-per-level data.

        Args:
            levels: int
                Highest translate.

        Returns:
            pconnect.RealMorseData
                Unrolled data.
        """

        points = [(unrolled_id(p, j), k) for j in range(levels + 1) for p, k in self.points]

        counts = []
        for record in self.incidences:
            for j in range(levels + 1 - record.level):
                counts.append((unrolled_id(record.source, j), unrolled_id(record.target, j + record.level), record.count))

        return RealMorseData(points, counts, name="%s W(%d)" % (self.name or 'circle_morse', levels))


    def real_part(self):
        """
        Gets real-valued Morse data formed by the level 0 records.

        Returns:
            pconnect.RealMorseData
                Level 0 data.
        """

        counts = [(r.source, r.target, r.count) for r in self.incidences if r.level == 0]
        return RealMorseData(self.points, counts, name=self.name)


    def to_decomposition(self, generator='t'):
        """
        Converts data into the equivalent p-Morse decomposition over the
        infinite cyclic group: every critical point is a Morse set with one
        generator and every record an orbit labeled t^level.

        Args:
            generator: str
                Name of the deck group generator.

        Returns:
            pconnect.MorseDecomposition
                Decomposition under (H2).
        """

        group = DeckGroup.infinite_cyclic(generator)
        sets = [MorseSet(p, {k: [p]}) for p, k in self.points]

        orbits = []
        for r in self.incidences:
            if r.count:
                orbits.append(OrbitRecord(
                    r.source, r.source, self.index(r.source),
                    r.target, r.target, self.index(r.target),
                    group.element(r.level), r.count))

        return MorseDecomposition(group, H2, sets, orbits, name=self.name)


    def to_dict(self):
        """Gets JSON document representation."""

        data = {
            'schema_version': SCHEMA_VERSION,
            'kind': CIRCLE_MORSE,
            'critical_points': [{'id': p, 'index': k} for p, k in self.points],
            'incidences': [r.to_dict() for r in self.incidences]}

        if self.name:
            data['name'] = self.name

        return data


class RealMorseData(CriticalPoints):
    """
    RealMorseData represents a real-valued Morse function by its critical
    points and the signed counts n(p, q; f) of gradient lines between
    critical points of consecutive index.

    Attributes:

        points: ((str, int),)
            Critical point ids with Morse index.

        counts: ((str, str, int),)
            Signed counts (p, q, n).

        name: str or None
            Data name.
    """


    def __init__(self, points, counts=(), name=None):

        super().__init__(points)

        self.name = name
        self.counts = tuple((p, q, int(n)) for p, q, n in counts)

        for p, q, n in self.counts:
            self.check_drop(p, q)


    def __str__(self):
        """Gets standard string representation."""

        return "%s: %d critical points, %d counts" % (self.name or 'morse', len(self.points), len(self.counts))


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def to_dict(self):
        """Gets JSON document representation."""

        data = {
            'schema_version': SCHEMA_VERSION,
            'kind': MORSE,
            'critical_points': [{'id': p, 'index': k} for p, k in self.points],
            'counts': [{'from': p, 'to': q, 'count': encode_int(n)} for p, q, n in self.counts]}

        if self.name:
            data['name'] = self.name

        return data


def unrolled_id(point, level):
    """Gets id of critical point in translate t^level W."""

    return "%s@%d" % (point, level)


def novikov_incidence(data, p, q, precision=DEFAULT_PRECISION):
    """
    Calculates the Novikov incidence coefficient N(p, q) as the series
    sum_l n(p, t^l q) t^l.

    Args:

        data: pconnect.CircleMorseData
            Circle-valued Morse data.

        p: str
            Critical point of index k.

        q: str
            Critical point of index k-1.

        precision: int
            Novikov precision.

    Returns:
        pconnect.NovikovSeries
            Exact series with non-negative exponents.
    """

    data.check_drop(p, q)

    terms = {}
    for record in data.incidences:
        if record.source == p and record.target == q:
            terms[record.level] = terms.get(record.level, 0) + record.count

    return NovikovSeries.from_terms(terms, precision, exact=True)


def build_novikov_complex(data, precision=DEFAULT_PRECISION, generator='t'):
    """
    Builds the Novikov complex: the free Z((t))-module on the critical points
    with boundary d(p) = sum_q N(p, q) q.

    Args:

        data: pconnect.CircleMorseData
            Circle-valued Morse data.

        precision: int
            Novikov precision.

        generator: str
            Name of the series variable.

    Returns:
        pconnect.PChainComplex
            Complex over pconnect.NovikovRing.
    """

    ring = NovikovRing(DeckGroup.infinite_cyclic(generator), precision)
    module = data.module()

    # make boundaries
    boundaries = {}
    for k in module.degrees():
        if k - 1 not in module.generators:
            continue

        entries = {}
        for p in module.basis(k):
            for q in module.basis(k - 1):
                entries[(q, p)] = novikov_incidence(data, p, q, precision)

        boundaries[k] = RingMatrix(ring, module.basis(k - 1), module.basis(k), entries)

    chain = PChainComplex(module, ring, boundaries)

    # check d o d = 0
    report = verify_boundary_squared(chain)
    if not report.passed:
        k, row, col, value = report.offending()[0]
        message = "Inconsistent incidence data! -> d^2 (%s, %s) = %s at degree %d" % (row, col, value, k)
        raise InconsistentDataError(message)

    log.debug("Novikov complex of %s: %s", data, chain)

    return chain


def build_morse_complex(data):
    """
    Builds the Morse complex of real-valued data over the integers.

    Args:
        data: pconnect.RealMorseData
            Real-valued Morse data.

    Returns:
        pconnect.PChainComplex
            Complex over pconnect.IntegerRing.
    """

    ring = IntegerRing()
    module = data.module()

    # sum counts
    values = {}
    for p, q, n in data.counts:
        k = data.index(p)
        entries = values.setdefault(k, {})
        entries[(q, p)] = entries.get((q, p), 0) + n

    boundaries = {}
    for k, entries in values.items():
        boundaries[k] = RingMatrix(ring, module.basis(k - 1), module.basis(k), entries)

    chain = PChainComplex(module, ring, boundaries)

    # check d o d = 0
    report = verify_boundary_squared(chain)
    if not report.passed:
        k, row, col, value = report.offending()[0]
        message = "Inconsistent Morse data! -> d^2 (%s, %s) = %d at degree %d" % (row, col, value, k)
        raise InconsistentDataError(message)

    return chain
