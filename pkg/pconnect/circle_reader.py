#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
from .fixture_reader import *
from .circle import CircleMorseData, IncidenceRecord
from .codec import decode_int


class CircleMorseReader(FixtureReader):
    """
    CircleMorseReader reads circle-valued Morse data from JSON documents of
    kind 'circle_morse'.

    Each incidence record holds the signed count of gradient lines from the
    lift of a critical point to the level-th translate of the lift of a
    critical point of one lower index.
    """


    def __init__(self, path, **kwargs):
        super().__init__(path)


    @property
    def kind(self):
        """Gets document kind this reader accepts."""

        return CIRCLE_MORSE


    def load(self, **kwargs):
        """
        Creates circle-valued Morse data from document.

        Returns:
            pconnect.CircleMorseData
                Morse data.
        """

        data = self.document()

        points = parse_critical_points(data)

        incidences = []
        for i, item in enumerate(data.get('incidences', [])):
            where = "incidences[%d]" % i
            incidences.append(IncidenceRecord(
                require(item, 'from', where),
                require(item, 'to', where),
                decode_int(require(item, 'level', where), "%s.level" % where),
                decode_int(require(item, 'count', where), "%s.count" % where)))

        return CircleMorseData(points, incidences, name=data.get('name', None))


    def decomposition(self, generator='t', **kwargs):
        """
        Gets equivalent p-Morse decomposition over the infinite cyclic group.

        Args:
            generator: str
                Name of the deck group generator.

        Returns:
            pconnect.MorseDecomposition
                Decomposition under (H2).
        """

        return self.load().to_decomposition(generator)


    def _summary(self):
        """Gets kind specific summary items."""

        data = self.load()

        return {
            'critical_points': len(data),
            'incidences': len(data.incidences),
            'max_level': data.max_level()}


def parse_critical_points(data, location='$'):
    """
    Parses list of critical points with Morse index.

    Args:

        data: dict
            Object with 'critical_points'.

        location: str
            Location of the object used in error messages.

    Returns:
        [(str, int)]
            Point ids with index.
    """

    points = []
    for i, item in enumerate(require(data, 'critical_points', location)):
        where = "%s.critical_points[%d]" % (location, i)
        points.append((require(item, 'id', where), decode_int(require(item, 'index', where), "%s.index" % where)))

    return points
