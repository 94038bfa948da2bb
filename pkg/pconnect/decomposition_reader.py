#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import logging
from .fixture_reader import *
from .group import DeckGroup
from .ring import IntegerRing
from .matrix import RingMatrix
from .poset import Poset
from .orbit import OrbitRecord
from .morse import MorseSet, MorseDecomposition
from .gain_graph import GainGraph
from .codec import decode_int
from .errors import PathError

log = logging.getLogger(__name__)


class DecompositionReader(FixtureReader):
    """
    DecompositionReader reads p-Morse decompositions from JSON documents of
    kind 'decomposition'.

    Orbit records reference Conley index generators by id. Their labels are
    given directly or derived from a cell path through the 'gain_graph'.
    """


    def __init__(self, path, **kwargs):
        """
        Initializes a new instance of pconnect.DecompositionReader.

        Args:
            path: str
                Path of the document to be read.
        """

        super().__init__(path)


    @property
    def kind(self):
        """Gets document kind this reader accepts."""

        return DECOMPOSITION


    def load(self, **kwargs):
        """
        Creates decomposition from document.

        Returns:
            pconnect.MorseDecomposition
                Decomposition.
        """

        return parse_decomposition(self.document())


    def decomposition(self, **kwargs):
        """
        Gets p-Morse decomposition described by the document.

        Returns:
            pconnect.MorseDecomposition
                Decomposition.
        """

        return self.load()


    def _summary(self):
        """Gets kind specific summary items."""

        d = self.load()

        return {
            'group': str(d.group),
            'regime': d.regime,
            'sets': len(d.sets),
            'orbits': len(d.orbits),
            'generators': len(d.module())}


def parse_decomposition(data, location='$'):
    """
    Creates p-Morse decomposition from JSON object.

    Args:

        data: dict
            Object with 'group', 'regime', 'sets' and 'orbits'. Optional items
            are 'order', 'gain_graph', 'base_lift', 'reference' and 'name'.

        location: str
            Location of the object used in error messages.

    Returns:
        pconnect.MorseDecomposition
            Decomposition.
    """

    group = DeckGroup.from_dict(require(data, 'group', location))

    # get regime
    regime = require(data, 'regime', location)
    if regime not in REGIMES:
        message = "Unknown coefficient regime! -> '%s'" % (regime,)
        raise SchemaError(message, location="%s.regime" % location)

    # get sets
    sets = []
    owners = {}
    for i, item in enumerate(require(data, 'sets', location)):
        where = "%s.sets[%d]" % (location, i)
        morse_set = _parse_set(item, where)
        sets.append(morse_set)
        for gid in morse_set.module.ids():
            owners[gid] = morse_set

    # get gain graph
    graph = None
    if data.get('gain_graph', None) is not None:
        graph = GainGraph.from_dict(group, data['gain_graph'], "%s.gain_graph" % location)

    # get orbits
    orbits = []
    for i, item in enumerate(data.get('orbits', [])):
        where = "%s.orbits[%d]" % (location, i)
        orbits.append(_parse_orbit(item, group, owners, graph, where))

    # get order
    poset = None
    if data.get('order', None) is not None:
        relations = []
        for i, pair in enumerate(data['order']):
            if not isinstance(pair, list) or len(pair) != 2:
                message = "Order item must be a [lower, upper] pair! -> %s" % (pair,)
                raise SchemaError(message, location="%s.order[%d]" % (location, i))
            relations.append(tuple(pair))
        poset = Poset([s.id for s in sets], relations)

    # get base lift
    base_shift = None
    if data.get('base_lift', None) is not None:
        base_shift = _decode_element(group, data['base_lift'], "%s.base_lift" % location)

    # get reference
    reference = None
    if data.get('reference', None) is not None:
        reference = RingMatrix.decode(IntegerRing(), data['reference'], "%s.reference" % location)

    decomposition = MorseDecomposition(
        group, regime, sets,
        orbits = orbits,
        poset = poset,
        base_shift = base_shift,
        name = data.get('name', None),
        reference = reference)

    log.debug("Parsed %s", decomposition)

    return decomposition


def _parse_set(item, location):
    """Parses Morse set object."""

    generators = {}
    for key, ids in require(item, 'generators', location).items():

        degree = decode_int(key, "%s.generators" % location)
        if not isinstance(ids, list):
            message = "Generator ids must be a list! -> %s" % (ids,)
            raise SchemaError(message, location="%s.generators.%s" % (location, key))

        generators[degree] = ids

    return MorseSet(
        require(item, 'id', location),
        generators,
        evenly_covered = item.get('evenly_covered', True),
        index_trivial = item.get('index_trivial', False))


def _parse_orbit(item, group, owners, graph, location):
    """Parses orbit record object."""

    # get generators
    ends = []
    for key in ('from', 'to'):
        gid = require(item, key, location)
        if gid not in owners:
            message = "Unknown generator! -> '%s'" % gid
            raise SchemaError(message, location="%s.%s" % (location, key))
        ends.append((owners[gid].id, gid, owners[gid].module.degree_of(gid)))

    source, target = ends
    path = item.get('path', None)

    # get label
    label = None
    if item.get('label', None) is not None:
        label = _decode_element(group, item['label'], "%s.label" % location)

    if path is not None and graph is not None:
        lifted = graph.lift_orbit(path, source[0], target[0])
        if label is not None and label != lifted:
            message = "Non-consecutive path! -> path lifts to %s, label is %s" % (group.format(lifted), group.format(label))
            raise PathError(message)
        label = lifted

    if label is None:
        message = "Orbit needs 'label' or 'path' with 'gain_graph'! -> %s" % sorted(item)
        raise SchemaError(message, location=location)

    coeff = decode_int(item.get('coeff', 1), "%s.coeff" % location)

    return OrbitRecord(
        source[0], source[1], source[2],
        target[0], target[1], target[2],
        label, coeff, path)


def _decode_element(group, data, location):
    """Decodes group element with location."""

    try:
        return group.decode(data)
    except SchemaError as e:
        raise SchemaError(str(e), location=e.location or location)
