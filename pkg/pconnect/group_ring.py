#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
from .ring import Ring, Augmentation
from .group import GroupElement
from .codec import encode_int, decode_int
from .errors import RingMismatchError, SchemaError


class GroupRing(Ring):
    """
    GroupRing represents the integral group ring Z[G] of a deck group. It
    realizes Z((G)) under the finite support regimes (H-1) and (H-3).

    Attributes:
        group: pconnect.DeckGroup
            Deck group.
    """


    def __init__(self, group):
        """
        Initializes a new instance of pconnect.GroupRing.

        Args:
            group: pconnect.DeckGroup
                Deck group.
        """

        self.group = group


    def __eq__(self, other):
        """Equal operator."""

        return isinstance(other, GroupRing) and self.group == other.group


    def __hash__(self):
        """Gets hash."""

        return hash(('Z[G]', self.group))


    @property
    def name(self):
        """Gets ring name."""

        return "Z[%s]" % self.group


    def contains(self, x):
        """Returns True if x belongs to the ring."""

        return isinstance(x, GroupRingElem) and x.group == self.group


    def from_int(self, n):
        """Embeds integer as multiple of the identity."""

        return GroupRingElem(self.group, {self.group.identity(): n})


    def embed(self, element, coeff=1):
        """
        Embeds group element.

        Args:

            element: pconnect.GroupElement
                Group element.

            coeff: int
                Coefficient.

        Returns:
            pconnect.GroupRingElem
                Ring element coeff*element.
        """

        return GroupRingElem(self.group, {element: coeff})


    def terms(self, x):
        """
        Gets nonzero terms.

        Args:
            x: pconnect.GroupRingElem
                Ring element.

        Returns:
            ((pconnect.GroupElement, int),)
                Sorted terms.
        """

        return x.terms()


    def is_zero(self, x):
        """Returns True if x is zero."""

        return not x.support


    def augment(self, x):
        """Gets coefficient sum."""

        return Augmentation(sum(x.support.values()))


    def unit_inverse(self, x):
        """Gets inverse of trivial unit +-g, None otherwise."""

        if len(x.support) != 1:
            return None

        element, coeff = next(iter(x.support.items()))
        if coeff not in (1, -1):
            return None

        return GroupRingElem(self.group, {~element: coeff})


    def encode(self, x):
        """Encodes element as list of [element, coefficient] pairs."""

        return [[self.group.encode(g), encode_int(c)] for g, c in x.terms()]


    def decode(self, data):
        """Decodes element from list of [element, coefficient] pairs."""

        # check data
        if isinstance(data, (int, str)) and not isinstance(data, bool):
            return self.from_int(decode_int(data))

        if not isinstance(data, list):
            message = "Group ring element must be a list of [element, coefficient] pairs! -> %s" % (data,)
            raise SchemaError(message)

        support = {}
        for item in data:
            if not isinstance(item, list) or len(item) != 2:
                message = "Invalid group ring term! -> %s" % (item,)
                raise SchemaError(message)
            element = self.group.decode(item[0])
            support[element] = support.get(element, 0) + decode_int(item[1])

        return GroupRingElem(self.group, support)


    def format(self, x):
        """Formats element as a polynomial, e.g. '1 + a b'."""

        return format_terms([(None if g.is_identity() else str(g), c) for g, c in x.terms()])


class GroupRingElem(object):
    """
    GroupRingElem represents a finite sum of group elements with integer
    coefficients. Instances are immutable.

    Attributes:

        group: pconnect.DeckGroup
            Deck group.

        support: {pconnect.GroupElement: int}
            Nonzero coefficients.
    """

    __slots__ = ('group', 'support', '_hash')


    def __init__(self, group, support=None):
        """
        Initializes a new instance of pconnect.GroupRingElem.

        Args:

            group: pconnect.DeckGroup
                Deck group.

            support: {pconnect.GroupElement: int} or None
                Coefficients, zeros are dropped.
        """

        self.group = group
        self.support = {}
        self._hash = None

        for element, coeff in (support or {}).items():

            # check element
            if not isinstance(element, GroupElement) or element.group != group:
                message = "Group mismatch! -> %r not in %s" % (element, group)
                raise RingMismatchError(message)

            # store nonzero
            coeff = int(coeff)
            if coeff:
                self.support[element] = coeff


    def __str__(self):
        """Gets standard string representation."""

        return GroupRing(self.group).format(self)


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator."""

        if self is other:
            return True

        if isinstance(other, int) and not isinstance(other, bool):
            other = GroupRingElem(self.group, {self.group.identity(): other})

        if not isinstance(other, GroupRingElem):
            return False

        return self.group == other.group and self.support == other.support


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    def __hash__(self):
        """Gets hash."""

        if self._hash is None:
            self._hash = hash(frozenset(self.support.items()))

        return self._hash


    def __add__(self, other):
        """Addition operator."""

        other = self._check(other)

        support = dict(self.support)
        for element, coeff in other.support.items():
            support[element] = support.get(element, 0) + coeff

        return GroupRingElem(self.group, support)


    __radd__ = __add__


    def __neg__(self):
        """Negation operator."""

        return GroupRingElem(self.group, {g: -c for g, c in self.support.items()})


    def __sub__(self, other):
        """Subtraction operator."""

        return self + (-self._check(other))


    def __rsub__(self, other):
        """Reversed subtraction operator."""

        return self._check(other) - self


    def __mul__(self, other):
        """Multiplication operator (convolution, self on the left)."""

        other = self._check(other)

        support = {}
        for g, a in self.support.items():
            for h, b in other.support.items():
                gh = g * h
                support[gh] = support.get(gh, 0) + a * b

        return GroupRingElem(self.group, support)


    def __rmul__(self, other):
        """Reversed multiplication operator."""

        return self._check(other) * self


    def terms(self):
        """
        Gets nonzero terms sorted by group element.

        Returns:
            ((pconnect.GroupElement, int),)
                Identity first, then by deterministic element order.
        """

        key = lambda item: (not item[0].is_identity(), self.group.sort_key(item[0]))
        return tuple(sorted(self.support.items(), key=key))


    def is_zero(self):
        """Returns True if element is zero."""

        return not self.support


    def _check(self, other):
        """Converts integers and checks ring."""

        if isinstance(other, int) and not isinstance(other, bool):
            return GroupRingElem(self.group, {self.group.identity(): other})

        if not isinstance(other, GroupRingElem) or other.group != self.group:
            message = "Ring mismatch! -> %r, %r" % (self, other)
            raise RingMismatchError(message)

        return other


def format_terms(terms):
    """
    Formats (label, coefficient) terms as a polynomial expression.

    Args:
        terms: ((str or None, int),)
            Monomial labels with coefficients. None label is the unit.

    Returns:
        str
            Expression, e.g. '1 - t^2' or '2 a + b'; '0' for no terms.
    """

    buff = ""
    for label, coeff in terms:

        if not coeff:
            continue

        # sign
        if not buff:
            buff = "-" if coeff < 0 else ""
        else:
            buff += " - " if coeff < 0 else " + "

        # coefficient and label
        coeff = abs(coeff)
        if label is None:
            buff += "%d" % coeff
        elif coeff == 1:
            buff += label
        else:
            buff += "%d %s" % (coeff, label)

    return buff or "0"
