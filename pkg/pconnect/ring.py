#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
from .errors import RingMismatchError
from .codec import encode_int, decode_int


class Augmentation(int):
    """
    Augmentation represents the coefficient sum of a ring element.

    Attributes:
        exact: bool
            False if the value was summed from a truncated series.
    """


    def __new__(cls, value, exact=True):
        obj = super().__new__(cls, value)
        obj.exact = exact
        return obj


class Ring(object):
    """
    Ring represents a base class for all the coefficient rings. Ring objects
    provide the element arithmetic used by pconnect.RingMatrix, so that the
    matrix code does not need to know the element types.
    """


    def __str__(self):
        """Gets standard string representation."""

        return self.name


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    @property
    def name(self):
        """Gets ring name."""

        return self.__class__.__name__


    def check(self, x):
        """
        Checks that x belongs to the ring.

        Args:
            x: ?
                Ring element.

        Returns:
            ?
                Same element.
        """

        if not self.contains(x):
            message = "Ring mismatch! -> %r not in %s" % (x, self)
            raise RingMismatchError(message)

        return x


    def contains(self, x):
        """Returns True if x belongs to the ring."""

        message = "The 'contains(self, x)' method is not implemented for this class. -> %s" % self.__class__.__name__
        raise NotImplementedError(message)


    def zero(self):
        """Gets additive identity."""

        return self.from_int(0)


    def one(self):
        """Gets multiplicative identity."""

        return self.from_int(1)


    def from_int(self, n):
        """Embeds integer into the ring."""

        message = "The 'from_int(self, n)' method is not implemented for this class. -> %s" % self.__class__.__name__
        raise NotImplementedError(message)


    def is_zero(self, x):
        """Returns True if x is zero (to precision)."""

        return x == self.zero()


    def add(self, x, y):
        """Adds two elements."""

        return x + y


    def neg(self, x):
        """Negates element."""

        return -x


    def mul(self, x, y):
        """Multiplies two elements."""

        return x * y


    def equal(self, x, y):
        """Returns True if elements are equal (to precision)."""

        return x == y


    def augment(self, x):
        """Gets coefficient sum as pconnect.Augmentation."""

        message = "The 'augment(self, x)' method is not implemented for this class. -> %s" % self.__class__.__name__
        raise NotImplementedError(message)


    def unit_inverse(self, x):
        """Gets inverse if x is a (detected) unit, None otherwise."""

        message = "The 'unit_inverse(self, x)' method is not implemented for this class. -> %s" % self.__class__.__name__
        raise NotImplementedError(message)


    def encode(self, x):
        """Encodes element for JSON output."""

        message = "The 'encode(self, x)' method is not implemented for this class. -> %s" % self.__class__.__name__
        raise NotImplementedError(message)


    def decode(self, data):
        """Decodes element from JSON."""

        message = "The 'decode(self, data)' method is not implemented for this class. -> %s" % self.__class__.__name__
        raise NotImplementedError(message)


    def format(self, x):
        """Formats element as a polynomial expression."""

        return str(x)


class IntegerRing(Ring):
    """IntegerRing represents the ring Z with plain Python integers."""


    def __eq__(self, other):
        """Equal operator."""

        return isinstance(other, IntegerRing)


    def __hash__(self):
        """Gets hash."""

        return hash('Z')


    @property
    def name(self):
        """Gets ring name."""

        return 'Z'


    def contains(self, x):
        """Returns True if x is an integer."""

        return isinstance(x, int) and not isinstance(x, bool)


    def from_int(self, n):
        """Embeds integer into the ring."""

        return int(n)


    def is_zero(self, x):
        """Returns True if x is zero."""

        return x == 0


    def augment(self, x):
        """Gets the integer itself."""

        return Augmentation(x)


    def unit_inverse(self, x):
        """Gets inverse of +1 or -1, None otherwise."""

        return x if x in (1, -1) else None


    def encode(self, x):
        """Encodes integer for JSON output."""

        return encode_int(x)


    def decode(self, data):
        """Decodes integer from JSON."""

        return decode_int(data)
