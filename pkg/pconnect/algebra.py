#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
from .constants import *
from .ring import IntegerRing, Augmentation
from .group_ring import GroupRing, GroupRingElem
from .novikov import NovikovRing, NovikovSeries
from .errors import RingMismatchError, RegimeError


def ring_of(x):
    """
    Gets the ring an element belongs to.

    Args:
        x: int, pconnect.GroupRingElem or pconnect.NovikovSeries
            Ring element.

    Returns:
        pconnect.Ring
            Coefficient ring.
    """

    if isinstance(x, GroupRingElem):
        return GroupRing(x.group)

    if isinstance(x, NovikovSeries):
        return NovikovRing(precision=x.precision)

    if isinstance(x, int) and not isinstance(x, bool):
        return IntegerRing()

    message = "Ring mismatch! -> %r is not a ring element" % (x,)
    raise RingMismatchError(message)


def ring_mul(x, y):
    """
    Multiplies two elements of the same ring.

    Group ring elements are convolved exactly, Novikov series are multiplied
    to the smaller of both precisions.

    Args:

        x: int, pconnect.GroupRingElem or pconnect.NovikovSeries
            Left factor.

        y: int, pconnect.GroupRingElem or pconnect.NovikovSeries
            Right factor.

    Returns:
        int, pconnect.GroupRingElem or pconnect.NovikovSeries
            Product x*y.
    """

    if type(x) is not type(y):
        message = "Ring mismatch! -> %r, %r" % (x, y)
        raise RingMismatchError(message)

    return x * y


def augment(x):
    """
    Gets the augmentation (coefficient sum) of a ring element.

    Args:
        x: int, pconnect.GroupRingElem or pconnect.NovikovSeries
            Ring element.

    Returns:
        pconnect.Augmentation
            Coefficient sum, flagged inexact for truncated series.
    """

    return ring_of(x).augment(x)


def unit_inverse(x):
    """
    Gets the inverse of a detected unit.

    Args:
        x: int, pconnect.GroupRingElem or pconnect.NovikovSeries
            Ring element.

    Returns:
        int, pconnect.GroupRingElem, pconnect.NovikovSeries or None
            Inverse (to precision) or None if x is not a detected unit.
    """

    return ring_of(x).unit_inverse(x)


def is_unit(x):
    """Returns True if x is a detected unit."""

    return unit_inverse(x) is not None


def coefficient_ring(group, regime, precision=DEFAULT_PRECISION):
    """
    Creates the ring realizing Z((G)) for given group and regime.

    (H-1) and (H-3) use the group ring Z[G]. (H-2) uses the Novikov ring for
    infinite cyclic groups and the group ring otherwise, since finite record
    lists always have finite support.

    Args:

        group: pconnect.DeckGroup
            Deck group.

        regime: str
            Coefficient regime.

        precision: int
            Novikov precision.

    Returns:
        pconnect.Ring
            Coefficient ring.
    """

    check_regime(group, regime)

    if regime == H2 and group.kind == INFINITE_CYCLIC:
        return NovikovRing(group, precision)

    return GroupRing(group)


def check_regime(group, regime):
    """
    Checks that the regime is supported for the group kind.

    Args:

        group: pconnect.DeckGroup
            Deck group.

        regime: str
            Coefficient regime.
    """

    if regime not in REGIMES:
        message = "Unsupported coefficient regime for this group! -> unknown regime '%s'" % regime
        raise RegimeError(message)

    if regime == H1 and group.kind != FINITE:
        message = "Unsupported coefficient regime for this group! -> (%s) needs a finite group, got '%s'" % (regime, group.kind)
        raise RegimeError(message)

    if regime == H2 and not group.is_ordered():
        message = "Unsupported coefficient regime for this group! -> (%s) needs an ordered abelian group, got '%s'" % (regime, group.kind)
        raise RegimeError(message)
