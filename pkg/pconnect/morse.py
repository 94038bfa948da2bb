#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import logging
from .constants import *
from .module import GradedModule
from .orbit import OrbitList
from .poset import flow_order
from .algebra import check_regime
from .errors import AdmissibilityError, GroupMismatchError, SchemaError

log = logging.getLogger(__name__)


class MorseSet(object):
    """
    MorseSet represents an isolated invariant set of the decomposition by
    the generators of its homology Conley index.

    Attributes:

        id: str
            Set id.

        module: pconnect.GradedModule
            Conley index generators by degree.

        evenly_covered: bool
            Set is evenly covered by the covering projection.

        index_trivial: bool
            Set is declared to carry trivial Conley index.
    """


    def __init__(self, id, generators, evenly_covered=True, index_trivial=False):
        """
        Initializes a new instance of pconnect.MorseSet.

        Args:

            id: str
                Set id.

            generators: {int: [str]} or pconnect.GradedModule
                Conley index generators by degree.

            evenly_covered: bool
                Set is evenly covered by the covering projection.

            index_trivial: bool
                Set carries trivial Conley index.
        """

        if not isinstance(generators, GradedModule):
            generators = GradedModule(generators)

        self.id = id
        self.module = generators
        self.evenly_covered = bool(evenly_covered)
        self.index_trivial = bool(index_trivial)

        # check generators
        if not len(self.module) and not self.index_trivial:
            message = "Morse set has no index generators! -> '%s'" % id
            raise SchemaError(message)

        if not self.evenly_covered:
            message = "Morse set must be evenly covered! -> '%s'" % id
            raise AdmissibilityError(message)


    def __str__(self):
        """Gets standard string representation."""

        return "%s %s" % (self.id, self.module)


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator."""

        if not isinstance(other, MorseSet):
            return False

        return (self.id, self.module, self.index_trivial) == (other.id, other.module, other.index_trivial)


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    def to_dict(self):
        """Gets JSON representation."""

        data = {
            'id': self.id,
            'generators': self.module.to_dict()}

        if self.index_trivial:
            data['index_trivial'] = True

        return data


class MorseDecomposition(object):
    """
    MorseDecomposition represents a p-Morse decomposition: a poset of Morse
    sets with Conley index generators, the g-labeled connecting orbit
    records between them and the deck group of the covering.

    Attributes:

        name: str or None
            Decomposition name.

        group: pconnect.DeckGroup
            Deck transformation group.

        regime: str
            Coefficient regime (H1, H2 or H3).

        sets: (pconnect.MorseSet,)
            Morse sets in declared order.

        orbits: pconnect.OrbitList
            Connecting orbit records.

        poset: pconnect.Poset
            Admissible order, the flow order if not declared.

        base_shift: pconnect.GroupElement
            Deck transformation h of the repeller lift the labels refer to.

        reference: pconnect.RingMatrix or None
            Classical connection matrix supplied for comparison.
    """


    def __init__(self, group, regime, sets, orbits=None, poset=None, base_shift=None, name=None, reference=None):
        """
        Initializes a new instance of pconnect.MorseDecomposition.

        Args:

            group: pconnect.DeckGroup
                Deck transformation group.

            regime: str
                Coefficient regime.

            sets: (pconnect.MorseSet,)
                Morse sets.

            orbits: pconnect.OrbitList, (pconnect.OrbitRecord,) or None
                Connecting orbit records.

            poset: pconnect.Poset or None
                Declared admissible order. The flow order is used if None.

            base_shift: pconnect.GroupElement or None
                Repeller lift translation, identity if None.

            name: str or None
                Decomposition name.

            reference: pconnect.RingMatrix or None
                Classical connection matrix for comparison.
        """

        self.name = name
        self.group = group
        self.regime = regime
        self.sets = tuple(sets)
        self.orbits = orbits if isinstance(orbits, OrbitList) else OrbitList(orbits)
        self.base_shift = base_shift if base_shift is not None else group.identity()
        self.reference = reference

        self._sets = {}
        self._generators = {}

        # index sets and generators
        for item in self.sets:
            if item.id in self._sets:
                message = "Duplicate Morse set id! -> '%s'" % item.id
                raise SchemaError(message)
            self._sets[item.id] = item
            for gid in item.module.ids():
                if gid in self._generators:
                    message = "Duplicate generator id! -> '%s'" % gid
                    raise SchemaError(message)
                self._generators[gid] = item.id

        self._check_orbits()

        # make order
        if poset is None:
            poset = flow_order(self.orbits, [s.id for s in self.sets])

        self.poset = poset
        self._check_order()


    def __str__(self):
        """Gets standard string representation."""

        return "%s: %d sets, %d orbits over %s (%s)" % (self.name or 'decomposition', len(self.sets), len(self.orbits), self.group, self.regime)


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    def __eq__(self, other):
        """Equal operator."""

        if not isinstance(other, MorseDecomposition):
            return False

        return (self.group == other.group
            and self.regime == other.regime
            and self.sets == other.sets
            and self.orbits == other.orbits
            and self.poset == other.poset
            and self.base_shift == other.base_shift)


    def __ne__(self, other):
        """Not equal operator."""

        return not self.__eq__(other)


    def get_set(self, set_id):
        """
        Gets Morse set by id.

        Args:
            set_id: str
                Set id.

        Returns:
            pconnect.MorseSet
                Morse set.
        """

        if set_id not in self._sets:
            message = "Unknown Morse set! -> '%s'" % set_id
            raise SchemaError(message)

        return self._sets[set_id]


    def set_of(self, gid):
        """Gets id of the Morse set owning given generator."""

        if gid not in self._generators:
            message = "Unknown generator! -> '%s'" % gid
            raise SchemaError(message)

        return self._generators[gid]


    def module(self):
        """
        Gets the module NC(S), the direct sum of all Conley index modules.

        Returns:
            pconnect.GradedModule
                Direct sum in declared set order.
        """

        return GradedModule.direct_sum([s.module for s in self.sets])


    def is_adjacent(self, repeller, attractor):
        """Returns True if ({attractor}, {repeller}) is an adjacent pair."""

        return self.poset.is_adjacent((attractor,), (repeller,))


    def connected_pairs(self):
        """Gets (repeller, attractor) pairs carrying orbit records."""

        return self.orbits.pairs()


    def non_adjacent_pairs(self):
        """Gets pairs carrying orbit records which are not adjacent."""

        return [p for p in self.connected_pairs() if not self.is_adjacent(*p)]


    def replace(self, **attrs):
        """
        Creates copy with some attributes replaced.

        Args:
            attrs: {str: ?}
                Replaced constructor arguments.

        Returns:
            pconnect.MorseDecomposition
                New decomposition.
        """

        args = {
            'group': self.group,
            'regime': self.regime,
            'sets': self.sets,
            'orbits': self.orbits,
            'poset': self.poset,
            'base_shift': self.base_shift,
            'name': self.name,
            'reference': self.reference}

        for name in attrs:
            if name not in args:
                message = "Unknown decomposition attribute! -> '%s'" % name
                raise AttributeError(message)

        args.update(attrs)
        return MorseDecomposition(**args)


    def to_dict(self):
        """Gets JSON document representation."""

        data = {
            'schema_version': SCHEMA_VERSION,
            'kind': DECOMPOSITION,
            'group': self.group.to_dict(),
            'regime': self.regime,
            'sets': [s.to_dict() for s in self.sets],
            'order': [list(p) for p in self.poset.covers()],
            'orbits': [r.to_dict() for r in self.orbits]}

        if self.name:
            data['name'] = self.name

        if not self.base_shift.is_identity():
            data['base_lift'] = self.group.encode(self.base_shift)

        if self.reference is not None:
            data['reference'] = self.reference.encode()

        return data


    def _check_orbits(self):
        """Checks that orbit records match sets and group."""

        for record in self.orbits:

            if record.label.group != self.group:
                message = "Group mismatch! -> orbit %s labeled by %s" % (record, record.label.group)
                raise GroupMismatchError(message)

            for set_id, gid, degree in ((record.source_set, record.source, record.source_degree), (record.target_set, record.target, record.target_degree)):
                item = self.get_set(set_id)
                if gid not in item.module or item.module.degree_of(gid) != degree:
                    message = "Orbit generator does not belong to Morse set! -> '%s' in '%s'" % (gid, set_id)
                    raise SchemaError(message)


    def _check_order(self):
        """Checks that every orbit runs downward in the order."""

        if set(self.poset.elements) != set(self._sets):
            message = "Not an admissible decomposition! -> order elements differ from Morse sets"
            raise AdmissibilityError(message)

        for record in self.orbits:
            if not self.poset.less(record.target_set, record.source_set):
                message = "Not an admissible decomposition! -> orbit %s runs upward" % record
                raise AdmissibilityError(message)


class ValidationReport(object):
    """
    ValidationReport holds the regime and adjacency checks of a
    decomposition.

    Attributes:

        regime: str
            Coefficient regime.

        kind: str
            Group kind.

        pairs: [dict]
            Per connected pair: buckets, support and minimal label.

        violations: [str]
            Semantic violations.

        advisories: [str]
            Assumptions the input cannot prove.
    """


    def __init__(self, regime, kind):

        self.regime = regime
        self.kind = kind
        self.pairs = []
        self.violations = []
        self.advisories = []


    def __str__(self):
        """Gets standard string representation."""

        state = "accepted" if self.passed else "%d violations" % len(self.violations)
        return "(%s) over %s: %s" % (self.regime, self.kind, state)


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.__str__())


    @property
    def passed(self):
        """Returns True if no violation was found."""

        return not self.violations


    def to_dict(self):
        """Gets JSON representation."""

        return {
            'regime': self.regime,
            'kind': self.kind,
            'passed': self.passed,
            'pairs': self.pairs,
            'violations': list(self.violations),
            'advisories': list(self.advisories)}


def classify_orbits(decomposition, pair):
    """
    Partitions the orbit records of a pair into buckets C_g(R, A) by label.

    Args:

        decomposition: pconnect.MorseDecomposition
            Decomposition.

        pair: (str, str)
            Repeller and attractor set ids.

    Returns:
        {pconnect.GroupElement: [pconnect.OrbitRecord]}
            Buckets ordered by label.
    """

    buckets = {}
    for record in decomposition.orbits.for_pair(*pair):
        buckets.setdefault(record.label, []).append(record)

    group = decomposition.group
    return {g: buckets[g] for g in sorted(buckets, key=group.sort_key)}


def translate_decomposition(decomposition, h):
    """
    Relabels orbits as seen from the repeller lift hR: every label g becomes
    hg and the base lift translation is multiplied by h.

    Args:

        decomposition: pconnect.MorseDecomposition
            Decomposition.

        h: pconnect.GroupElement
            Deck transformation.

    Returns:
        pconnect.MorseDecomposition
            Translated decomposition.
    """

    if h.group != decomposition.group:
        message = "Group mismatch! -> %r not in %s" % (h, decomposition.group)
        raise GroupMismatchError(message)

    return decomposition.replace(
        orbits=decomposition.orbits.translated(h),
        base_shift=h * decomposition.base_shift)


def validate_regime(decomposition):
    """
    Checks the coefficient regime against the group kind and reports the
    label support of every connected pair.

    Args:
        decomposition: pconnect.MorseDecomposition
            Decomposition.

    Returns:
        pconnect.ValidationReport
            Support report with violations and advisories.
    """

    group = decomposition.group
    regime = decomposition.regime

    # check kind
    check_regime(group, regime)

    report = ValidationReport(regime, group.kind)

    # report pairs
    for pair in decomposition.connected_pairs():

        buckets = classify_orbits(decomposition, pair)
        shift = ~decomposition.base_shift
        support = [shift * g for g in buckets]

        item = {
            'pair': list(pair),
            'regime': regime,
            'buckets': {group.format(g): len(records) for g, records in buckets.items()},
            'support': [group.format(g) for g in support],
            'support_size': len(buckets),
            'adjacent': decomposition.is_adjacent(*pair)}

        if group.is_ordered() and support:
            lowest = min(support, key=group.order_key)
            item['min_label'] = group.format(lowest)

        report.pairs.append(item)

        if not item['adjacent']:
            report.violations.append("Not an admissible decomposition! -> orbits join non-adjacent Morse sets %s -> %s" % pair)

    # add advisories
    if regime == H3:
        report.advisories.append("(H3) assumes finitely many g with nonempty C_g(R, A); finite record lists satisfy it, isolation of S_{R,gA} is not checked")

    if group.kind == FREE:
        report.advisories.append("free groups are used without an order, only finite support coefficients are available")

    log.debug("Regime check %s: %d pairs, %d violations", report, len(report.pairs), len(report.violations))

    return report
