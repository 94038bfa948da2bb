#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import logging
from .ring import IntegerRing
from .novikov import NovikovRing
from .smith import SmithForm, NovikovReducer
from .complex import verify_boundary_squared
from .errors import NotAComplexError, RingMismatchError

log = logging.getLogger(__name__)


class HomologyGroup(object):
    """
    HomologyGroup represents a finitely generated module over a principal
    ideal domain, R^rank + R/(d_1) + ... + R/(d_n).

    Attributes:

        degree: int
            Homological degree.

        rank: int
            Free rank (Betti number).

        torsion: [int] or [pconnect.NovikovSeries]
            Non-unit elementary divisors.
    """


    def __init__(self, degree, rank, torsion, ring):

        self.degree = degree
        self.rank = rank
        self.torsion = list(torsion)
        self.ring = ring


    def __str__(self):
        """Gets standard string representation."""

        return "H_%d = %s" % (self.degree, self.format())


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator."""

        if not isinstance(other, HomologyGroup):
            return False

        return (self.degree, self.rank, self.torsion) == (other.degree, other.rank, other.torsion)


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    def is_zero(self):
        """Returns True if the group vanishes."""

        return self.rank == 0 and not self.torsion


    def format(self):
        """Formats group, e.g. 'Z^2 + Z/2'."""

        name = 'Z' if isinstance(self.ring, IntegerRing) else self.ring.name

        parts = []
        if self.rank == 1:
            parts.append(name)
        elif self.rank > 1:
            parts.append("%s^%d" % (name, self.rank))

        for d in self.torsion:
            divisor = self.ring.format(d)
            if " " in divisor:
                divisor = "(%s)" % divisor
            parts.append("%s/%s" % (name, divisor))

        return " + ".join(parts) or "0"


class HomologyReport(object):
    """
    HomologyReport holds homology of a chain complex by degree.

    Attributes:

        groups: {int: pconnect.HomologyGroup}
            Homology by degree.

        ring: pconnect.Ring
            Coefficient ring.

        precision: int or None
            Novikov precision the groups were computed at.
    """


    def __init__(self, groups, ring, precision=None):

        self.groups = groups
        self.ring = ring
        self.precision = precision


    def __str__(self):
        """Gets standard string representation."""

        return "; ".join(self.lines())


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __getitem__(self, degree):
        """Gets homology of given degree."""

        return self.groups[degree]


    def is_zero(self):
        """Returns True if homology vanishes in all degrees."""

        return all(g.is_zero() for g in self.groups.values())


    def lines(self):
        """Formats report lines."""

        suffix = " (precision %d)" % self.precision if self.precision is not None else ""

        if self.is_zero():
            return ["H_k = 0 for all k%s" % suffix]

        return ["%s%s" % (self.groups[k], suffix) for k in sorted(self.groups)]


    def to_dict(self):
        """Gets JSON representation."""

        data = {
            'ring': self.ring.name,
            'precision': self.precision,
            'degrees': {}}

        for k in sorted(self.groups):
            group = self.groups[k]
            data['degrees'][str(k)] = {
                'rank': group.rank,
                'torsion': [self.ring.encode(d) for d in group.torsion]}

        return data


def homology_Z(chain):
    """
    Calculates homology of a chain complex over the integers.

    Args:
        chain: pconnect.PChainComplex
            Complex over pconnect.IntegerRing.

    Returns:
        pconnect.HomologyReport
            Betti numbers and torsion coefficients by degree.
    """

    if not isinstance(chain.ring, IntegerRing):
        message = "Ring mismatch! -> integer homology needs Z, got %s" % chain.ring
        raise RingMismatchError(message)

    _check_complex(chain)

    # diagonalize boundaries
    ranks = {}
    divisors = {}
    for k in chain.degrees():
        snf = SmithForm(chain.boundary(k))
        ranks[k] = snf.rank()
        divisors[k] = [d for d in snf.diagonal() if d != 1]

    # make groups
    groups = {}
    for k in chain.degrees():
        rank = chain.module.rank(k) - ranks[k] - ranks.get(k + 1, 0)
        groups[k] = HomologyGroup(k, rank, divisors.get(k + 1, []), chain.ring)

    return HomologyReport(groups, chain.ring)


def homology_novikov(chain):
    """
    Calculates homology of a chain complex over the Novikov ring.

    The result carries the precision it was computed at. Divisors are given
    as canonical associates, unit divisors are dropped.

    Args:
        chain: pconnect.PChainComplex
            Complex over pconnect.NovikovRing.

    Returns:
        pconnect.HomologyReport
            Ranks and elementary divisors by degree.
    """

    if not isinstance(chain.ring, NovikovRing):
        message = "Ring mismatch! -> Novikov homology needs Z((t)), got %s" % chain.ring
        raise RingMismatchError(message)

    _check_complex(chain)

    # diagonalize boundaries
    ranks = {}
    divisors = {}
    for k in chain.degrees():
        reducer = NovikovReducer(chain.boundary(k))
        ranks[k] = reducer.rank()
        divisors[k] = reducer.elementary_divisors()
        log.debug("Novikov boundary %d: rank %d, divisors %s", k, ranks[k], divisors[k])

    # make groups
    groups = {}
    for k in chain.degrees():
        rank = chain.module.rank(k) - ranks[k] - ranks.get(k + 1, 0)
        groups[k] = HomologyGroup(k, rank, divisors.get(k + 1, []), chain.ring)

    return HomologyReport(groups, chain.ring, chain.ring.precision)


def _check_complex(chain):
    """Raises error if d o d != 0."""

    report = verify_boundary_squared(chain)
    if not report.passed:
        k, row, col, value = report.offending()[0]
        message = "Not a complex! -> d^2 != 0 at degree %d entry (%s, %s) = %s" % (k, row, col, chain.ring.format(value))
        raise NotAComplexError(message)
