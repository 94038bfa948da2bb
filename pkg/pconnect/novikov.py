#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import math
from .constants import *
from .ring import Ring, Augmentation
from .group import DeckGroup, GroupElement
from .group_ring import format_terms
from .codec import encode_int, decode_int
from .errors import RingMismatchError, DivisionByZeroError, SchemaError

INFINITY = math.inf


class NovikovSeries(object):
    """
    NovikovSeries represents an element of the Novikov ring Z((t)) known to a
    finite number of coefficients. Instances are immutable.

    A series is either exact, i.e. a Laurent polynomial with no terms beyond
    the stored ones, or known on exponents min_degree ... horizon-1 only.
    Equality and arithmetic are evaluated to precision: two series are equal
    when they agree on all exponents known for both of them.

    Attributes:

        min_degree: int
            Lowest exponent with nonzero coefficient (n(x)). For a series which
            is zero to precision it equals the horizon.

        coeffs: (int,)
            Coefficients of exponents min_degree, min_degree+1, ...

        precision: int
            Count of retained exponents (relative precision).

        exact: bool
            True if all coefficients beyond the stored ones are zero.
    """

    __slots__ = ('min_degree', 'coeffs', 'precision', 'exact')
    __hash__ = None


    def __init__(self, min_degree, coeffs, precision=DEFAULT_PRECISION, exact=False):
        """
        Initializes a new instance of pconnect.NovikovSeries.

        Leading zero coefficients are stripped and the series is truncated to
        given relative precision. An exact polynomial with more than
        precision terms becomes inexact.

        Args:

            min_degree: int
                Exponent of the first coefficient.

            coeffs: (int,)
                Coefficients starting at min_degree. For inexact series these
                are all the known coefficients.

            precision: int
                Count of retained exponents.

            exact: bool
                True if coefficients beyond the given ones are zero.
        """

        # check precision
        if isinstance(precision, bool) or not isinstance(precision, int) or precision < 1:
            message = "Precision must be a positive integer! -> %s" % (precision,)
            raise ValueError(message)

        coeffs = [int(c) for c in coeffs]
        min_degree = int(min_degree)
        horizon = min_degree + len(coeffs)

        # strip leading zeros
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1

        coeffs = coeffs[start:]
        min_degree += start

        # strip trailing zeros of exact polynomials
        if exact:
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()

        # exact zero
        if exact and not coeffs:
            min_degree = 0

        # zero to precision
        elif not coeffs:
            min_degree = horizon

        # truncate to precision
        elif len(coeffs) > precision:
            coeffs = coeffs[:precision]
            exact = False

        # pad exact polynomials
        elif exact:
            coeffs = coeffs + [0] * (precision - len(coeffs))

        self.min_degree = min_degree
        self.coeffs = tuple(coeffs)
        self.precision = precision
        self.exact = bool(exact)


    def __str__(self):
        """Gets standard string representation."""

        return self.format()


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator (to precision)."""

        if self is other:
            return True

        if isinstance(other, int) and not isinstance(other, bool):
            other = NovikovSeries.constant(other, self.precision)

        if not isinstance(other, NovikovSeries):
            return False

        # compare exact polynomials completely
        horizon = min(self.horizon, other.horizon)
        if horizon == INFINITY:
            return self.terms() == other.terms()

        # compare common known range
        start = min(self.min_degree, other.min_degree)
        for e in range(start, horizon):
            if self.coefficient(e) != other.coefficient(e):
                return False

        return True


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    def __add__(self, other):
        """Addition operator."""

        other = self._check(other)
        precision = min(self.precision, other.precision)

        # exact sum
        if self.exact and other.exact:
            support = dict(self.terms())
            for e, c in other.terms():
                support[e] = support.get(e, 0) + c
            return NovikovSeries.from_terms(support, precision, exact=True)

        # sum of known coefficients
        horizon = min(self.horizon, other.horizon)
        start = min(self.min_degree, other.min_degree, horizon)
        coeffs = [self.coefficient(e) + other.coefficient(e) for e in range(start, horizon)]

        return NovikovSeries(start, coeffs, precision)


    __radd__ = __add__


    def __neg__(self):
        """Negation operator."""

        if self.exact:
            return NovikovSeries(self.min_degree, [-c for c in self.coeffs], self.precision, exact=True)

        return NovikovSeries(self.min_degree, [-c for c in self.coeffs], self.precision)


    def __sub__(self, other):
        """Subtraction operator."""

        return self + (-self._check(other))


    def __rsub__(self, other):
        """Reversed subtraction operator."""

        return self._check(other) - self


    def __mul__(self, other):
        """Multiplication operator."""

        other = self._check(other)
        precision = min(self.precision, other.precision)

        # exact zero annihilates
        if (self.exact and self.is_zero()) or (other.exact and other.is_zero()):
            return NovikovSeries.zero(precision)

        # exact product
        if self.exact and other.exact:
            support = {}
            for e, a in self.terms():
                for f, b in other.terms():
                    support[e + f] = support.get(e + f, 0) + a * b
            return NovikovSeries.from_terms(support, precision, exact=True)

        # known product coefficients
        start = self.min_degree + other.min_degree
        horizon = min(self.min_degree + other.horizon, self.horizon + other.min_degree)
        length = int(horizon - start)

        coeffs = [0] * length
        for i, a in enumerate(self.coeffs[:length]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[:length - i]):
                coeffs[i + j] += a * b

        return NovikovSeries(start, coeffs, precision)


    __rmul__ = __mul__


    @property
    def horizon(self):
        """Gets the first exponent whose coefficient is unknown."""

        if self.exact:
            return INFINITY

        return self.min_degree + len(self.coeffs)


    @property
    def leading_coefficient(self):
        """Gets coefficient at min_degree (0 for zero)."""

        return self.coeffs[0] if self.coeffs else 0


    @property
    def nu(self):
        """Gets Euclidean value |leading coefficient|."""

        return abs(self.leading_coefficient)


    @classmethod
    def zero(cls, precision=DEFAULT_PRECISION):
        """Creates exact zero."""

        return cls(0, (), precision, exact=True)


    @classmethod
    def constant(cls, value, precision=DEFAULT_PRECISION):
        """Creates exact constant series."""

        return cls(0, (value,), precision, exact=True)


    @classmethod
    def monomial(cls, coeff, exponent, precision=DEFAULT_PRECISION):
        """Creates exact monomial coeff*t^exponent."""

        return cls(exponent, (coeff,), precision, exact=True)


    @classmethod
    def from_terms(cls, terms, precision=DEFAULT_PRECISION, exact=True, horizon=None):
        """
        Creates series from exponent/coefficient terms.

        Args:

            terms: {int: int} or ((int, int),)
                Coefficients by exponent.

            precision: int
                Count of retained exponents.

            exact: bool
                True if given terms form the whole series.

            horizon: int or None
                First unknown exponent of inexact series.

        Returns:
            pconnect.NovikovSeries
                Created series.
        """

        terms = dict(terms)
        exponents = [e for e, c in terms.items() if c]

        # zero
        if not exponents:
            if exact:
                return cls.zero(precision)
            return cls(horizon, (), precision)

        start = min(exponents)
        stop = max(exponents) + 1 if exact else horizon

        return cls(start, [terms.get(e, 0) for e in range(start, stop)], precision, exact=exact)


    def coefficient(self, exponent):
        """
        Gets coefficient at exponent.

        Args:
            exponent: int
                Exponent.

        Returns:
            int or None
                Coefficient or None if unknown.
        """

        if exponent < self.min_degree:
            return 0

        if exponent >= self.horizon:
            return None

        index = exponent - self.min_degree
        return self.coeffs[index] if index < len(self.coeffs) else 0


    def terms(self):
        """
        Gets known nonzero terms.

        Returns:
            ((int, int),)
                Exponent/coefficient pairs in increasing order.
        """

        return tuple((self.min_degree + i, c) for i, c in enumerate(self.coeffs) if c)


    def is_zero(self):
        """Returns True if series is zero to precision."""

        return not any(self.coeffs)


    def is_undetermined(self):
        """Returns True if series is zero to precision but not known to vanish."""

        return not self.exact and self.is_zero()


    def truncate(self, precision):
        """
        Truncates series to given relative precision.

        Args:
            precision: int
                Count of retained exponents.

        Returns:
            pconnect.NovikovSeries
                Truncated series.
        """

        if self.exact:
            return NovikovSeries(self.min_degree, self.coeffs, precision, exact=True)

        return NovikovSeries(self.min_degree, self.coeffs[:precision], precision)


    def truncate_above(self, degree):
        """
        Discards all exponents above given degree.

        Args:
            degree: int
                Highest retained exponent.

        Returns:
            {int: int}
                Known coefficients with exponent <= degree.
        """

        return {e: c for e, c in self.terms() if e <= degree}


    def canonical(self):
        """
        Gets canonical representative of the associate class.

        The series is shifted to min_degree 0 and multiplied by the unit
        which makes the leading coefficient a positive and brings every
        further coefficient into [0, a). Two associated series therefore
        give the same representative, e.g. 2 - 2t and 2 both give 2.

        Returns:
            pconnect.NovikovSeries
                Canonical series.
        """

        if self.is_zero():
            return self

        sign = -1 if self.coeffs[0] < 0 else 1
        coeffs = [sign * c for c in self.coeffs]
        lead = coeffs[0]

        # associate of the leading coefficient
        if self.exact and all(c % lead == 0 for c in coeffs):
            return NovikovSeries.constant(lead, self.precision)

        # reduce coefficients by unit 1 + u_1 t + u_2 t^2 + ...
        unit = [1]
        result = [lead]
        for k in range(1, len(coeffs)):
            value = sum(coeffs[j] * unit[k - j] for j in range(1, k + 1))
            unit.append(-(value // lead))
            result.append(value % lead)

        # unit 1 keeps exact polynomials exact
        exact = self.exact and not any(unit[1:])

        return NovikovSeries(0, result, self.precision, exact=exact)


    def shift(self, exponent):
        """Multiplies series by t^exponent."""

        if self.is_zero() and self.exact:
            return self

        return NovikovSeries(self.min_degree + exponent, self.coeffs, self.precision, exact=self.exact)


    def format(self, variable='t'):
        """
        Formats series as polynomial, e.g. '1 - t^2'.

        Inexact series end with the order term 'O(t^n)'.

        Args:
            variable: str
                Variable name.

        Returns:
            str
                Formatted series.
        """

        terms = []
        for e, c in self.terms():
            if e == 0:
                terms.append((None, c))
            elif e == 1:
                terms.append((variable, c))
            else:
                terms.append(("%s^%d" % (variable, e), c))

        buff = format_terms(terms)
        if self.exact:
            return buff

        order = "O(%s^%d)" % (variable, self.horizon)
        return order if buff == "0" else "%s + %s" % (buff, order)


    def _check(self, other):
        """Converts integers and checks type."""

        if isinstance(other, int) and not isinstance(other, bool):
            return NovikovSeries.constant(other, self.precision)

        if not isinstance(other, NovikovSeries):
            message = "Ring mismatch! -> %r, %r" % (self, other)
            raise RingMismatchError(message)

        return other


class NovikovRing(Ring):
    """
    NovikovRing represents the Novikov ring Z((t)) of Laurent series with
    finitely many negative exponents. It realizes Z((G)) for the infinite
    cyclic deck group under regime (H-2).

    Attributes:

        group: pconnect.DeckGroup
            Infinite cyclic deck group.

        precision: int
            Count of retained exponents of created series.
    """


    def __init__(self, group=None, precision=DEFAULT_PRECISION):
        """
        Initializes a new instance of pconnect.NovikovRing.

        Args:

            group: pconnect.DeckGroup or None
                Infinite cyclic deck group. The group generated by 't' is
                used if not specified.

            precision: int
                Count of retained exponents.
        """

        if group is None:
            group = DeckGroup.infinite_cyclic()

        if group.kind != INFINITE_CYCLIC:
            message = "Novikov ring needs infinite cyclic group! -> %s" % group
            raise RingMismatchError(message)

        self.group = group
        self.precision = precision


    def __eq__(self, other):
        """Equal operator."""

        return isinstance(other, NovikovRing) and self.group == other.group


    def __hash__(self):
        """Gets hash."""

        return hash(('Z((t))', self.group))


    @property
    def name(self):
        """Gets ring name."""

        return "Z((%s))" % self.variable


    @property
    def variable(self):
        """Gets variable name."""

        return self.group.generators[0]


    def contains(self, x):
        """Returns True if x is a series."""

        return isinstance(x, NovikovSeries)


    def from_int(self, n):
        """Embeds integer as constant series."""

        return NovikovSeries.constant(n, self.precision)


    def zero(self):
        """Gets exact zero."""

        return NovikovSeries.zero(self.precision)


    def embed(self, element, coeff=1):
        """
        Embeds group element t^n as monomial.

        Args:

            element: pconnect.GroupElement
                Group element.

            coeff: int
                Coefficient.

        Returns:
            pconnect.NovikovSeries
                Monomial series.
        """

        if element.group != self.group:
            message = "Ring mismatch! -> %r not in %s" % (element, self.group)
            raise RingMismatchError(message)

        return NovikovSeries.monomial(coeff, element.normal_form, self.precision)


    def series(self, coeffs, min_degree=0, exact=True):
        """Creates series at ring precision."""

        return NovikovSeries(min_degree, coeffs, self.precision, exact=exact)


    def terms(self, x):
        """
        Gets known nonzero terms as group elements.

        Args:
            x: pconnect.NovikovSeries
                Series.

        Returns:
            ((pconnect.GroupElement, int),)
                Terms ordered by exponent.
        """

        return tuple((GroupElement(self.group, e), c) for e, c in x.terms())


    def is_zero(self, x):
        """Returns True if x is zero to precision."""

        return x.is_zero()


    def augment(self, x):
        """Gets sum of retained coefficients, exact for polynomials only."""

        return Augmentation(sum(x.coeffs), exact=x.exact)


    def unit_inverse(self, x):
        """Gets inverse of series with leading coefficient +-1, None otherwise."""

        return unit_inverse(x)


    def encode(self, x):
        """Encodes series as {'min_degree', 'coeffs', 'precision', 'exact'}."""

        coeffs = list(x.coeffs)
        if x.exact:
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()

        return {
            'min_degree': x.min_degree,
            'coeffs': [encode_int(c) for c in coeffs],
            'precision': x.precision,
            'exact': x.exact}


    def decode(self, data):
        """Decodes series from JSON object or integer."""

        if isinstance(data, (int, str)) and not isinstance(data, bool):
            return self.from_int(decode_int(data))

        if not isinstance(data, dict) or 'coeffs' not in data:
            message = "Novikov series must be an object with 'coeffs'! -> %s" % (data,)
            raise SchemaError(message)

        min_degree = decode_int(data.get('min_degree', 0))
        coeffs = [decode_int(c) for c in data['coeffs']]
        precision = decode_int(data.get('precision', self.precision))
        exact = bool(data.get('exact', True))

        return NovikovSeries(min_degree, coeffs, precision, exact=exact)


    def format(self, x):
        """Formats series, e.g. '1 - t^2'."""

        return x.format(self.variable)


def unit_inverse(x):
    """
    Inverts series with leading coefficient +1 or -1.

    Args:
        x: pconnect.NovikovSeries
            Series.

    Returns:
        pconnect.NovikovSeries or None
            Inverse to precision, or None if x is not a unit.
    """

    # check unit
    if x.is_zero() or x.coeffs[0] not in (1, -1):
        return None

    lead = x.coeffs[0]

    # monomials invert exactly
    if x.exact and len(x.terms()) == 1:
        return NovikovSeries.monomial(lead, -x.min_degree, x.precision)

    # count of known coefficients
    length = x.precision if x.exact else len(x.coeffs)
    a = list(x.coeffs) + [0] * max(0, length - len(x.coeffs))

    # solve x * y = 1 term by term
    b = [lead]
    for k in range(1, length):
        total = sum(a[i] * b[k - i] for i in range(1, k + 1))
        b.append(-lead * total)

    return NovikovSeries(-x.min_degree, b, x.precision)


def novikov_divmod(num, den):
    """
    Divides series with remainder using the Euclidean function
    nu(x) = |leading coefficient of x|.

    Args:

        num: pconnect.NovikovSeries
            Dividend.

        den: pconnect.NovikovSeries
            Divisor.

    Returns:
        (pconnect.NovikovSeries, pconnect.NovikovSeries)
            Quotient q and remainder r with num = q*den + r to precision and
            r zero or nu(r) < nu(den).
    """

    # check divisor
    if den.is_zero():
        message = "Division by zero! -> %s" % den
        raise DivisionByZeroError(message)

    precision = min(num.precision, den.precision)
    c = den.coeffs[0]
    m = den.min_degree

    quotient = {}
    first = None
    remainder = num
    exact = True
    horizon = None

    while True:

        # remainder vanished
        if remainder.is_zero():
            if not remainder.exact:
                exact = False
                horizon = remainder.horizon - m
            break

        # remainder is small
        a = remainder.coeffs[0]
        k = remainder.min_degree
        if abs(a) < abs(c):
            break

        # quotient precision exhausted
        if first is None:
            first = k - m

        if k - m >= first + precision:
            exact = False
            horizon = first + precision
            remainder = NovikovSeries(k, (), precision)
            break

        # reduce leading coefficient
        q = a // c
        quotient[k - m] = q
        remainder = remainder - NovikovSeries.monomial(q, k - m, precision) * den

    # make quotient
    if exact:
        quotient = NovikovSeries.from_terms(quotient, precision, exact=True)
    else:
        quotient = NovikovSeries.from_terms(quotient, precision, exact=False, horizon=horizon)

    return quotient, remainder
