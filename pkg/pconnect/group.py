#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import re
import itertools
from .constants import *
from .errors import GroupMismatchError, HomomorphismError, SchemaError

# compile basic patterns
TOKEN_PATTERN = re.compile('^([A-Za-z][A-Za-z0-9_]*)(\^(-?[0-9]+))?$')
IDENTITY_TOKENS = ('', 'e', '1')


class DeckGroup(object):
    """
    DeckGroup represents a group of covering translations with decidable
    normal forms.

    Normal forms by kind:
        finite - element name
        free_abelian - tuple of integer exponents
        free - reduced tuple of (generator index, nonzero power) syllables
        infinite_cyclic - integer exponent
        klein_bottle - pair (n, m) meaning b^n a^m

    Attributes:

        kind: str
            Group kind, one of the pconnect group kind constants.

        generators: (str,)
            Generator names.

        rank: int or None
            Rank of free and free abelian groups.

        elements: (str,) or None
            Element names of a finite group.
    """


    def __init__(self, kind, generators=None, rank=None, elements=None, table=None):
        """
        Initializes a new instance of pconnect.DeckGroup.

        Use the named constructors (finite, free_abelian, free,
        infinite_cyclic, klein_bottle) rather than this method directly.

        Args:

            kind: str
                Group kind.

            generators: (str,) or None
                Generator names.

            rank: int or None
                Rank of free and free abelian groups.

            elements: (str,) or None
                Element names of a finite group.

            table: {(str, str): str} or None
                Multiplication table of a finite group.
        """

        # check kind
        if kind not in GROUP_KINDS:
            message = "Unknown group kind! -> '%s'" % kind
            raise SchemaError(message)

        self.kind = kind
        self.rank = rank
        self.generators = tuple(generators or ())
        self.elements = tuple(elements) if elements is not None else None

        self._table = table
        self._identity_name = None
        self._inverses = {}
        self._words = {}

        # check generator names
        for name in self.generators:
            if not TOKEN_PATTERN.match(name) or name in IDENTITY_TOKENS:
                message = "Invalid generator name! -> '%s'" % name
                raise SchemaError(message)

        if len(set(self.generators)) != len(self.generators):
            message = "Duplicate generator names! -> %s" % (self.generators,)
            raise SchemaError(message)

        # validate finite table
        if kind == FINITE:
            self._validate_table()


    def __str__(self):
        """Gets standard string representation."""

        if self.kind == FINITE:
            return "finite(%s)" % ", ".join(self.elements)

        if self.kind in (FREE, FREE_ABELIAN):
            return "%s(%d: %s)" % (self.kind, self.rank, " ".join(self.generators))

        return "%s(%s)" % (self.kind, " ".join(self.generators))


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator."""

        if self is other:
            return True

        if not isinstance(other, DeckGroup):
            return False

        return self._signature() == other._signature()


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    def __hash__(self):
        """Gets hash."""

        return hash(self._signature())


    @classmethod
    def finite(cls, elements, table, generators=None):
        """
        Creates finite group from its multiplication table.

        Args:

            elements: (str,)
                Element names.

            table: ((str,),) or {(str, str): str}
                Multiplication table either as rows ordered by elements, where
                table[i][j] is the product elements[i]*elements[j], or as a
                dict of products.

            generators: (str,) or None
                Generating elements. All non-identity elements are used if not
                specified.

        Returns:
            pconnect.DeckGroup
                Finite group.
        """

        elements = tuple(elements)

        # convert rows to dict
        if not isinstance(table, dict):

            if len(table) != len(elements) or any(len(row) != len(elements) for row in table):
                message = "Multiplication table is not square! -> %d elements" % len(elements)
                raise SchemaError(message)

            table = {(x, y): table[i][j] for i, x in enumerate(elements) for j, y in enumerate(elements)}

        return cls(FINITE, generators=generators, elements=elements, table=dict(table))


    @classmethod
    def free_abelian(cls, rank, generators=None):
        """Creates free abelian group of given rank."""

        rank = cls._check_rank(rank)
        if generators is None:
            generators = ["g%d" % (i+1) for i in range(rank)]

        if len(generators) != rank:
            message = "Generator count does not match rank! -> %d != %d" % (len(generators), rank)
            raise SchemaError(message)

        return cls(FREE_ABELIAN, generators=generators, rank=rank)


    @classmethod
    def free(cls, rank, generators=None):
        """Creates free group of given rank."""

        rank = cls._check_rank(rank)
        if generators is None:
            generators = [chr(ord('a') + i) for i in range(rank)] if rank <= 26 else ["x%d" % (i+1) for i in range(rank)]

        if len(generators) != rank:
            message = "Generator count does not match rank! -> %d != %d" % (len(generators), rank)
            raise SchemaError(message)

        return cls(FREE, generators=generators, rank=rank)


    @classmethod
    def infinite_cyclic(cls, generator='t'):
        """Creates infinite cyclic group."""

        return cls(INFINITE_CYCLIC, generators=(generator,), rank=1)


    @classmethod
    def klein_bottle(cls, generators=('a', 'b')):
        """Creates the Klein bottle group <a, b | ab = b^-1 a>."""

        if len(generators) != 2:
            message = "Klein bottle group needs two generators! -> %s" % (tuple(generators),)
            raise SchemaError(message)

        return cls(KLEIN_BOTTLE, generators=generators, rank=2)


    @classmethod
    def from_dict(cls, data):
        """
        Creates group from its JSON description.

        Args:
            data: dict
                Group description with the 'kind' tag.

        Returns:
            pconnect.DeckGroup
                Deck group.
        """

        # check data
        if not isinstance(data, dict) or 'kind' not in data:
            message = "Group description must be an object with 'kind'! -> %s" % (data,)
            raise SchemaError(message, location='group')

        kind = data['kind']
        generators = data.get('generators', None)

        if kind == FINITE:
            if 'elements' not in data or 'table' not in data:
                message = "Finite group needs 'elements' and 'table'! -> %s" % sorted(data)
                raise SchemaError(message, location='group')
            return cls.finite(data['elements'], data['table'], generators)

        if kind == FREE_ABELIAN:
            return cls.free_abelian(data.get('rank'), generators)

        if kind == FREE:
            return cls.free(data.get('rank'), generators)

        if kind == INFINITE_CYCLIC:
            return cls.infinite_cyclic(*(generators or ('t',)))

        if kind == KLEIN_BOTTLE:
            return cls.klein_bottle(generators or ('a', 'b'))

        message = "Unknown group kind! -> '%s'" % kind
        raise SchemaError(message, location='group.kind')


    def to_dict(self):
        """Gets JSON description of the group."""

        data = {'kind': self.kind, 'generators': list(self.generators)}

        if self.kind == FINITE:
            data['elements'] = list(self.elements)
            data['table'] = [[self._table[(x, y)] for y in self.elements] for x in self.elements]

        elif self.kind in (FREE, FREE_ABELIAN):
            data['rank'] = self.rank

        return data


    def identity(self):
        """
        Gets the neutral element.

        Returns:
            pconnect.GroupElement
                Identity element.
        """

        if self.kind == FINITE:
            return GroupElement(self, self._identity_name)

        if self.kind == FREE_ABELIAN:
            return GroupElement(self, (0,) * self.rank)

        if self.kind == FREE:
            return GroupElement(self, ())

        if self.kind == INFINITE_CYCLIC:
            return GroupElement(self, 0)

        return GroupElement(self, (0, 0))


    def generator(self, name):
        """
        Gets generator element by its name.

        For finite groups any element name is accepted.

        Args:
            name: str
                Generator name.

        Returns:
            pconnect.GroupElement
                Generator element.
        """

        # finite group elements
        if self.kind == FINITE:
            if name in self.elements:
                return GroupElement(self, name)
            message = "Unknown group element! -> '%s'" % name
            raise SchemaError(message)

        # check name
        if name not in self.generators:
            message = "Unknown generator! -> '%s'" % name
            raise SchemaError(message)

        index = self.generators.index(name)

        if self.kind == FREE_ABELIAN:
            exponents = [0] * self.rank
            exponents[index] = 1
            return GroupElement(self, tuple(exponents))

        if self.kind == FREE:
            return GroupElement(self, ((index, 1),))

        if self.kind == INFINITE_CYCLIC:
            return GroupElement(self, 1)

        # klein bottle generators are (a, b)
        return GroupElement(self, (0, 1) if index == 0 else (1, 0))


    def element(self, normal_form):
        """
        Creates element from a normal form, normalizing it first.

        Args:
            normal_form: ?
                Kind-specific encoding.

        Returns:
            pconnect.GroupElement
                Group element.
        """

        return GroupElement(self, self.normalize(normal_form))


    def normalize(self, normal_form):
        """
        Brings kind-specific encoding into its canonical normal form.

        Args:
            normal_form: ?
                Kind-specific encoding.

        Returns:
            ?
                Canonical normal form.
        """

        if self.kind == FINITE:
            if normal_form not in self.elements:
                message = "Unknown group element! -> '%s'" % (normal_form,)
                raise SchemaError(message)
            return normal_form

        if self.kind == FREE_ABELIAN:
            exponents = tuple(int(x) for x in normal_form)
            if len(exponents) != self.rank:
                message = "Exponent vector does not match rank! -> %s" % (exponents,)
                raise SchemaError(message)
            return exponents

        if self.kind == FREE:
            return self._reduce_word(normal_form)

        if self.kind == INFINITE_CYCLIC:
            return int(normal_form)

        n, m = normal_form
        return (int(n), int(m))


    def multiply(self, x, y):
        """
        Multiplies two normal forms.

        Args:
            x: ?
                Left normal form.

            y: ?
                Right normal form.

        Returns:
            ?
                Normal form of x*y.
        """

        if self.kind == FINITE:
            return self._table[(x, y)]

        if self.kind == FREE_ABELIAN:
            return tuple(a + b for a, b in zip(x, y))

        if self.kind == FREE:
            return self._reduce_word(x + y)

        if self.kind == INFINITE_CYCLIC:
            return x + y

        # (b^n a^m)(b^q a^p) = b^(n + (-1)^m q) a^(m + p)
        n, m = x
        q, p = y
        sign = -1 if m % 2 else 1
        return (n + sign * q, m + p)


    def invert(self, x):
        """
        Inverts a normal form.

        Args:
            x: ?
                Normal form.

        Returns:
            ?
                Normal form of x^-1.
        """

        if self.kind == FINITE:
            return self._inverses[x]

        if self.kind == FREE_ABELIAN:
            return tuple(-a for a in x)

        if self.kind == FREE:
            return tuple((index, -power) for index, power in reversed(x))

        if self.kind == INFINITE_CYCLIC:
            return -x

        n, m = x
        sign = -1 if m % 2 else 1
        return (-sign * n, -m)


    def word(self, element):
        """
        Expresses element as a product of generator powers.

        Args:
            element: pconnect.GroupElement
                Group element.

        Returns:
            ((str, int),)
                Generator names with powers, left to right.
        """

        nf = element.normal_form

        if self.kind == FINITE:
            return self._words[nf]

        if self.kind == FREE_ABELIAN:
            return tuple((self.generators[i], p) for i, p in enumerate(nf) if p)

        if self.kind == FREE:
            return tuple((self.generators[i], p) for i, p in nf)

        if self.kind == INFINITE_CYCLIC:
            return ((self.generators[0], nf),) if nf else ()

        n, m = nf
        word = []
        if n:
            word.append((self.generators[1], n))
        if m:
            word.append((self.generators[0], m))
        return tuple(word)


    def format(self, element):
        """
        Formats element as a human readable word.

        Args:
            element: pconnect.GroupElement
                Group element.

        Returns:
            str
                Word representation, 'e' for identity.
        """

        # finite groups use element names
        if self.kind == FINITE:
            return element.normal_form

        # make word
        tokens = []
        for name, power in self.word(element):
            tokens.append(name if power == 1 else "%s^%d" % (name, power))

        return " ".join(tokens) if tokens else 'e'


    def parse(self, text):
        """
        Parses element from its word representation, e.g. 'a b^-1'.

        Args:
            text: str
                Space separated generator powers.

        Returns:
            pconnect.GroupElement
                Group element.
        """

        text = text.strip()

        # finite element names may contain several letters
        if self.kind == FINITE and text in self.elements:
            return GroupElement(self, text)

        # multiply tokens
        result = self.identity()
        for token in text.split():

            if token in IDENTITY_TOKENS:
                continue

            match = TOKEN_PATTERN.match(token)
            if not match:
                message = "Invalid word token! -> '%s'" % token
                raise SchemaError(message)

            power = int(match.group(3)) if match.group(3) else 1
            result = result * (self.generator(match.group(1)) ** power)

        return result


    def encode(self, element):
        """
        Encodes element for JSON output.

        Args:
            element: pconnect.GroupElement
                Group element.

        Returns:
            str, list or dict
                JSON encoding.
        """

        if self.kind == KLEIN_BOTTLE:
            n, m = element.normal_form
            return {self.generators[1]: n, self.generators[0]: m}

        if self.kind == FREE_ABELIAN:
            return list(element.normal_form)

        return self.format(element)


    def decode(self, data):
        """
        Decodes element from JSON.

        Args:
            data: str, int, list or dict
                JSON encoding.

        Returns:
            pconnect.GroupElement
                Group element.
        """

        # words
        if isinstance(data, str):
            return self.parse(data)

        # klein bottle pairs
        if isinstance(data, dict) and self.kind == KLEIN_BOTTLE:
            unknown = set(data) - set(self.generators)
            if unknown:
                message = "Unknown generators in element! -> %s" % sorted(unknown)
                raise SchemaError(message)
            return self.element((int(data.get(self.generators[1], 0)), int(data.get(self.generators[0], 0))))

        # exponent vectors
        if isinstance(data, list) and self.kind == FREE_ABELIAN:
            return self.element(data)

        # cyclic exponents
        if isinstance(data, int) and not isinstance(data, bool) and self.kind == INFINITE_CYCLIC:
            return self.element(data)

        message = "Cannot decode group element! -> %s" % (data,)
        raise SchemaError(message)


    def all_elements(self):
        """
        Gets all elements of a finite group.

        Returns:
            (pconnect.GroupElement,)
                Group elements in table order.
        """

        if self.kind != FINITE:
            message = "Group is not finite! -> '%s'" % self.kind
            raise ValueError(message)

        return tuple(GroupElement(self, x) for x in self.elements)


    def is_ordered(self):
        """Returns True if the group carries a multiplication compatible total order."""

        return self.kind in (INFINITE_CYCLIC, FREE_ABELIAN)


    def order_key(self, element):
        """
        Gets sort key of the multiplication compatible order.

        Infinite cyclic groups are ordered by exponent, free abelian groups
        lexicographically by exponent vector.

        Args:
            element: pconnect.GroupElement
                Group element.

        Returns:
            int or (int,)
                Order key.
        """

        if not self.is_ordered():
            message = "Group carries no supported order! -> '%s'" % self.kind
            raise ValueError(message)

        return element.normal_form


    def sort_key(self, element):
        """Gets deterministic sort key for any element (not the group order)."""

        if self.kind == FINITE:
            return (self.elements.index(element.normal_form),)

        if self.kind == FREE:
            return (len(element.normal_form), element.normal_form)

        if self.kind == INFINITE_CYCLIC:
            return (element.normal_form,)

        return tuple(element.normal_form)


    def _signature(self):
        """Gets identity tuple of the group."""

        table = None
        if self.kind == FINITE:
            table = tuple(sorted(self._table.items()))

        return (self.kind, self.generators, self.rank, self.elements, table)


    def _reduce_word(self, syllables):
        """Reduces free group word given as (index, power) syllables."""

        word = []
        for index, power in syllables:

            index = int(index)
            power = int(power)

            if not 0 <= index < self.rank:
                message = "Generator index out of range! -> %d" % index
                raise SchemaError(message)

            # merge with previous syllable
            if word and word[-1][0] == index:
                word[-1] = (index, word[-1][1] + power)
            elif power:
                word.append((index, power))

            # cancel
            if word and word[-1][1] == 0:
                word.pop()

        return tuple(word)


    def _validate_table(self):
        """Checks that finite table defines a group."""

        elements = self.elements
        table = self._table

        # check elements
        if not elements or len(set(elements)) != len(elements):
            message = "Finite group needs unique element names! -> %s" % (elements,)
            raise SchemaError(message, location='group.elements')

        # check closure
        for x, y in itertools.product(elements, repeat=2):
            if table.get((x, y)) not in elements:
                message = "Multiplication table is not closed! -> %s*%s" % (x, y)
                raise SchemaError(message, location='group.table')

        # check identity
        identities = [e for e in elements if all(table[(e, x)] == x and table[(x, e)] == x for x in elements)]
        if not identities:
            message = "Multiplication table has no identity! -> %s" % (elements,)
            raise SchemaError(message, location='group.table')

        self._identity_name = identities[0]

        # check associativity
        for x, y, z in itertools.product(elements, repeat=3):
            if table[(table[(x, y)], z)] != table[(x, table[(y, z)])]:
                message = "Multiplication table is not associative! -> (%s, %s, %s)" % (x, y, z)
                raise SchemaError(message, location='group.table')

        # check inverses
        for x in elements:
            inverses = [y for y in elements if table[(x, y)] == self._identity_name]
            if not inverses:
                message = "Element has no inverse! -> '%s'" % x
                raise SchemaError(message, location='group.table')
            self._inverses[x] = inverses[0]

        # set default generators
        if not self.generators:
            self.generators = tuple(x for x in elements if x != self._identity_name)

        for name in self.generators:
            if name not in elements:
                message = "Generator is not a group element! -> '%s'" % name
                raise SchemaError(message, location='group.generators')

        # express elements as generator words
        self._words = {self._identity_name: ()}
        frontier = [self._identity_name]
        while frontier:
            buff = []
            for x in frontier:
                for name in self.generators:
                    y = table[(x, name)]
                    if y not in self._words:
                        self._words[y] = self._words[x] + ((name, 1),)
                        buff.append(y)
            frontier = buff

        if len(self._words) != len(elements):
            missing = [x for x in elements if x not in self._words]
            message = "Generators do not generate the group! -> %s" % missing
            raise SchemaError(message, location='group.generators')


    @staticmethod
    def _check_rank(rank):
        """Checks group rank."""

        if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
            message = "Group rank must be a positive integer! -> %s" % (rank,)
            raise SchemaError(message, location='group.rank')

        return rank


class GroupElement(object):
    """
    GroupElement represents a deck transformation in its normal form.

    Attributes:

        group: pconnect.DeckGroup
            Parent group.

        normal_form: ?
            Kind-specific canonical encoding.
    """

    __slots__ = ('group', 'normal_form')


    def __init__(self, group, normal_form):
        """
        Initializes a new instance of pconnect.GroupElement.

        Args:

            group: pconnect.DeckGroup
                Parent group.

            normal_form: ?
                Canonical encoding. Use DeckGroup.element to normalize
                arbitrary encodings.
        """

        self.group = group
        self.normal_form = normal_form


    def __str__(self):
        """Gets standard string representation."""

        return self.group.format(self)


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator."""

        if self is other:
            return True

        if not isinstance(other, GroupElement):
            return False

        return self.normal_form == other.normal_form and self.group == other.group


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    def __hash__(self):
        """Gets hash."""

        return hash((self.group.kind, self.normal_form))


    def __mul__(self, other):
        """Multiplication operator."""

        return group_mul(self, other)


    def __invert__(self):
        """Inversion operator."""

        return GroupElement(self.group, self.group.invert(self.normal_form))


    def __pow__(self, n):
        """Power operator."""

        base = self if n >= 0 else ~self
        result = self.group.identity()

        for _ in range(abs(n)):
            result = result * base

        return result


    def is_identity(self):
        """Returns True if element is the neutral element."""

        return self == self.group.identity()


class GroupMap(object):
    """
    GroupMap represents a homomorphism between deck groups given on
    generators.

    Attributes:

        source: pconnect.DeckGroup
            Domain group.

        target: pconnect.DeckGroup
            Codomain group.

        images: {str: pconnect.GroupElement}
            Images of the source generators.
    """


    def __init__(self, source, target, images):
        """
        Initializes a new instance of pconnect.GroupMap.

        Args:

            source: pconnect.DeckGroup
                Domain group.

            target: pconnect.DeckGroup
                Codomain group.

            images: {str: pconnect.GroupElement or str}
                Images of the source generators, either as elements or words.
        """

        self.source = source
        self.target = target
        self.images = {}

        # check generators
        missing = set(source.generators) - set(images)
        if missing:
            message = "Non-homomorphism map, generator images missing! -> %s" % sorted(missing)
            raise HomomorphismError(message)

        # parse images
        for name, image in images.items():
            if name not in source.generators:
                message = "Non-homomorphism map, unknown generator! -> '%s'" % name
                raise HomomorphismError(message)
            if isinstance(image, GroupElement):
                if image.group != target:
                    raise GroupMismatchError("Group mismatch! -> %s" % image)
                self.images[name] = image
            else:
                self.images[name] = target.decode(image)


    def __call__(self, element):
        """Applies map to element."""

        return self.apply(element)


    def apply(self, element):
        """
        Maps given element.

        Args:
            element: pconnect.GroupElement
                Source element.

        Returns:
            pconnect.GroupElement
                Image in target group.
        """

        # check group
        if element.group != self.source:
            message = "Group mismatch! -> %s not in %s" % (element, self.source)
            raise GroupMismatchError(message)

        # multiply generator images
        result = self.target.identity()
        for name, power in self.source.word(element):
            result = result * (self.images[name] ** power)

        return result


    def inverse(self):
        """
        Creates the inverse isomorphism.

        Returns:
            pconnect.GroupMap
                Inverse map.
        """

        self.validate()

        images = {}
        for name in self.target.generators:
            images[name] = self._preimage(self.target.generator(name))

        return GroupMap(self.target, self.source, images)


    def validate(self):
        """
        Checks that the map is a bijective homomorphism.

        Supported cases are all finite tables, automorphisms of the infinite
        cyclic, free abelian and Klein bottle groups, generator permutations
        with inversions for free groups, and generator-to-generator maps
        between rank one cyclic kinds.
        """

        source = self.source
        target = self.target

        # finite groups are checked exhaustively
        if source.kind == FINITE or target.kind == FINITE:
            self._validate_finite()
            return

        cyclic = (INFINITE_CYCLIC, FREE, FREE_ABELIAN)

        # rank one infinite cyclic groups
        if source.kind in cyclic and target.kind in cyclic and source.rank == 1 and target.rank == 1:
            image = self.images[source.generators[0]]
            generator = target.generator(target.generators[0])
            if image not in (generator, ~generator):
                message = "Non-homomorphism map, generator must map to a generator! -> %s" % image
                raise HomomorphismError(message)
            return

        # check kinds
        if source.kind != target.kind or source.rank != target.rank:
            message = "Non-homomorphism map, groups are not isomorphic! -> %s, %s" % (source, target)
            raise HomomorphismError(message)

        if source.kind == FREE_ABELIAN:
            from .smith import determinant
            matrix = [list(self.images[name].normal_form) for name in source.generators]
            if abs(determinant(matrix)) != 1:
                message = "Non-homomorphism map, exponent matrix is not unimodular! -> %s" % matrix
                raise HomomorphismError(message)
            return

        if source.kind == FREE:
            images = set()
            for name in source.generators:
                word = self.images[name].normal_form
                if len(word) != 1 or abs(word[0][1]) != 1:
                    message = "Non-homomorphism map, only signed generator permutations are supported! -> %s" % self.images[name]
                    raise HomomorphismError(message)
                images.add(word[0][0])
            if len(images) != source.rank:
                message = "Non-homomorphism map, generator images are not distinct! -> %s" % self.images
                raise HomomorphismError(message)
            return

        if source.kind == KLEIN_BOTTLE:
            a = self.images[source.generators[0]]
            b = self.images[source.generators[1]]
            if a * b != (~b) * a:
                message = "Non-homomorphism map, relation ab = b^-1 a not preserved! -> %s, %s" % (a, b)
                raise HomomorphismError(message)
            if b.normal_form not in ((1, 0), (-1, 0)) or a.normal_form[1] not in (1, -1):
                message = "Non-homomorphism map, map is not bijective! -> %s, %s" % (a, b)
                raise HomomorphismError(message)
            return


    def _validate_finite(self):
        """Checks finite isomorphism exhaustively."""

        if self.source.kind != FINITE or self.target.kind != FINITE:
            message = "Non-homomorphism map, finite and infinite groups! -> %s, %s" % (self.source, self.target)
            raise HomomorphismError(message)

        elements = self.source.all_elements()
        images = {x: self.apply(x) for x in elements}

        # check bijection
        if len(set(images.values())) != len(self.target.elements) or len(elements) != len(self.target.elements):
            message = "Non-homomorphism map, map is not bijective! -> %s" % self.images
            raise HomomorphismError(message)

        # check homomorphism
        for x, y in itertools.product(elements, repeat=2):
            if images[x * y] != images[x] * images[y]:
                message = "Non-homomorphism map! -> f(%s %s) != f(%s) f(%s)" % (x, y, x, y)
                raise HomomorphismError(message)


    def _preimage(self, element):
        """Finds preimage of target element."""

        source = self.source

        # search finite group
        if source.kind == FINITE:
            for x in source.all_elements():
                if self.apply(x) == element:
                    return x

        # rank one cyclic
        elif source.rank == 1:
            image = self.images[source.generators[0]]
            generator = source.generator(source.generators[0])
            return generator if image == element else ~generator

        # free abelian solve by adjugate
        elif source.kind == FREE_ABELIAN:
            from .smith import determinant
            matrix = [list(self.images[name].normal_form) for name in source.generators]
            det = determinant(matrix)
            target = list(element.normal_form)
            exponents = []
            for i in range(source.rank):
                replaced = [row[:] for row in matrix]
                replaced[i] = target
                exponents.append(determinant(replaced) * det)
            return source.element(exponents)

        # free signed permutation
        elif source.kind == FREE:
            index = element.normal_form[0][0]
            for name in source.generators:
                word = self.images[name].normal_form
                if word[0][0] == index:
                    generator = source.generator(name)
                    return generator if word[0][1] == element.normal_form[0][1] else ~generator

        # klein bottle automorphism a -> b^k a^d, b -> b^s
        elif source.kind == KLEIN_BOTTLE:
            a = source.generator(source.generators[0])
            b = source.generator(source.generators[1])
            k, d = self.images[source.generators[0]].normal_form
            s = self.images[source.generators[1]].normal_form[0]
            for candidate in (b ** s, (b ** (-s * k)) * (a ** d)):
                if self.apply(candidate) == element:
                    return candidate

        message = "Non-homomorphism map, preimage not found! -> %s" % element
        raise HomomorphismError(message)


def group_mul(x, y):
    """
    Multiplies two group elements.

    Args:

        x: pconnect.GroupElement
            Left factor.

        y: pconnect.GroupElement
            Right factor.

    Returns:
        pconnect.GroupElement
            Product x*y in normal form.
    """

    # check groups
    if x.group is not y.group and x.group != y.group:
        message = "Group mismatch! -> %s, %s" % (x.group, y.group)
        raise GroupMismatchError(message)

    return GroupElement(x.group, x.group.multiply(x.normal_form, y.normal_form))
