#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
from .group import GroupElement
from .codec import encode_int
from .errors import DegreeError, SchemaError, GroupMismatchError


class OrbitRecord(object):
    """
    OrbitRecord represents a signed count of g-orbits between one Conley
    index generator of a repeller and one generator of an attractor, i.e.
    a single entry of the per-lift connection matrix.

    Attributes:

        source_set: str
            Repeller Morse set id.

        source: str
            Repeller generator id.

        source_degree: int
            Degree k of the repeller generator.

        target_set: str
            Attractor Morse set id.

        target: str
            Attractor generator id.

        target_degree: int
            Degree k-1 of the attractor generator.

        label: pconnect.GroupElement
            Deck transformation g of the attractor lift.

        coeff: int
            Signed orbit count, never zero.

        path: list or None
            Cell path the label was lifted from.
    """


    def __init__(self, source_set, source, source_degree, target_set, target, target_degree, label, coeff, path=None):
        """
        Initializes a new instance of pconnect.OrbitRecord.

        Args:

            source_set: str
                Repeller Morse set id.

            source: str
                Repeller generator id.

            source_degree: int
                Degree of the repeller generator.

            target_set: str
                Attractor Morse set id.

            target: str
                Attractor generator id.

            target_degree: int
                Degree of the attractor generator.

            label: pconnect.GroupElement
                Deck transformation label.

            coeff: int
                Signed orbit count.

            path: list or None
                Cell path the label was lifted from.
        """

        # check label
        if not isinstance(label, GroupElement):
            message = "Orbit label must be a group element! -> %r" % (label,)
            raise GroupMismatchError(message)

        # check coefficient
        if isinstance(coeff, bool) or not isinstance(coeff, int) or coeff == 0:
            message = "Orbit coefficient must be a nonzero integer! -> %s" % (coeff,)
            raise SchemaError(message)

        # check sets
        if source_set == target_set:
            message = "Orbit must join two different Morse sets! -> '%s'" % source_set
            raise SchemaError(message)

        # check degrees
        if source_degree - target_degree != 1:
            message = "Degree drop must be exactly 1! -> %s (%d) to %s (%d)" % (source, source_degree, target, target_degree)
            raise DegreeError(message)

        self.source_set = source_set
        self.source = source
        self.source_degree = source_degree
        self.target_set = target_set
        self.target = target
        self.target_degree = target_degree
        self.label = label
        self.coeff = coeff
        self.path = path


    def __str__(self):
        """Gets standard string representation."""

        return "%s -> %s [%s] %+d" % (self.source, self.target, self.label, self.coeff)


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator."""

        if self is other:
            return True

        if not isinstance(other, OrbitRecord):
            return False

        return self.key() == other.key()


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    def __hash__(self):
        """Gets hash."""

        return hash(self.key())


    @property
    def pair(self):
        """Gets (repeller, attractor) set ids."""

        return self.source_set, self.target_set


    @property
    def entry(self):
        """Gets (attractor generator, repeller generator) matrix position."""

        return self.target, self.source


    def key(self):
        """Gets identity tuple."""

        return (self.source_set, self.source, self.target_set, self.target, self.label, self.coeff)


    def translated(self, h):
        """
        Creates copy with label h*g, i.e. seen from the repeller lift hR.

        Args:
            h: pconnect.GroupElement
                Deck transformation.

        Returns:
            pconnect.OrbitRecord
                Translated record.
        """

        return self.relabeled(h * self.label)


    def relabeled(self, label):
        """Creates copy with different label."""

        return OrbitRecord(
            self.source_set, self.source, self.source_degree,
            self.target_set, self.target, self.target_degree,
            label, self.coeff, self.path)


    def to_dict(self):
        """Gets JSON representation."""

        data = {
            'from': self.source,
            'to': self.target,
            'label': self.label.group.encode(self.label),
            'coeff': encode_int(self.coeff)}

        if self.path is not None:
            data['path'] = list(self.path)

        return data


class OrbitList(object):
    """
    OrbitList represents a container for orbit records. It ensures that the
    records are always sorted by pair, generators and label, which makes
    every derived matrix and report deterministic.
    """


    def __init__(self, records=None):
        """
        Initializes a new instance of pconnect.OrbitList.

        Args:
            records: (pconnect.OrbitRecord,) or None
                Orbit records.
        """

        self._records = []

        if records:
            self._records = [self._check_record(x) for x in records]
            self.sort()


    def __str__(self):
        """Gets standard string representation."""

        records = ""
        for record in self._records:
            records += "\t%s\n" % record

        return "[\n%s]" % records


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator."""

        if self is other:
            return True

        if not isinstance(other, OrbitList):
            return False

        return self._records == other._records


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    def __len__(self):
        """Gets number of records."""

        return len(self._records)


    def __iter__(self):
        """Gets iterator."""

        return self._records.__iter__()


    def __getitem__(self, i):
        """Gets record at index."""

        return self._records[i]


    def add(self, record):
        """
        Adds given record into the list.

        Args:
            record: pconnect.OrbitRecord
                Record to be added.
        """

        self._records.append(self._check_record(record))
        self.sort()


    def sort(self):
        """Sorts records by pair, generators and label."""

        self._records.sort(key=self._sort_key)


    def pairs(self):
        """Gets (repeller, attractor) pairs having records, in list order."""

        pairs = []
        for record in self._records:
            if record.pair not in pairs:
                pairs.append(record.pair)

        return pairs


    def for_pair(self, repeller, attractor):
        """Gets records of given pair."""

        return [r for r in self._records if r.pair == (repeller, attractor)]


    def signed_count(self, repeller, attractor):
        """Gets sum of coefficients of given pair."""

        return sum(r.coeff for r in self.for_pair(repeller, attractor))


    def translated(self, h):
        """Creates list with all labels multiplied by h from the left."""

        return OrbitList([r.translated(h) for r in self._records])


    def relabeled(self, func):
        """Creates list with labels mapped by func."""

        return OrbitList([r.relabeled(func(r.label)) for r in self._records])


    def _sort_key(self, record):
        """Gets deterministic sort key."""

        label = record.label
        return (record.source_set, record.target_set, record.source, record.target, label.group.sort_key(label), record.coeff)


    def _check_record(self, item):
        """Checks item to be a valid OrbitRecord."""

        if isinstance(item, OrbitRecord):
            return item

        message = "Each orbit must be of type pconnect.OrbitRecord! -> '%s'" % type(item)
        raise TypeError(message)
