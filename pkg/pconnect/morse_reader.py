#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
from .fixture_reader import *
from .circle import RealMorseData
from .circle_reader import parse_critical_points
from .codec import decode_int


class MorseReader(FixtureReader):
    """
    MorseReader reads real-valued Morse data, critical points with their
    signed gradient line counts, from JSON documents of kind 'morse'.
    """


    def __init__(self, path, **kwargs):
        super().__init__(path)


    @property
    def kind(self):
        """Gets document kind this reader accepts."""

        return MORSE


    def load(self, **kwargs):
        """
        Creates real-valued Morse data from document.

        Returns:
            pconnect.RealMorseData
                Morse data.
        """

        data = self.document()

        counts = []
        for i, item in enumerate(data.get('counts', [])):
            where = "counts[%d]" % i
            counts.append((
                require(item, 'from', where),
                require(item, 'to', where),
                decode_int(require(item, 'count', where), "%s.count" % where)))

        return RealMorseData(parse_critical_points(data), counts, name=data.get('name', None))


    def _summary(self):
        """Gets kind specific summary items."""

        data = self.load()

        return {
            'critical_points': len(data),
            'counts': len(data.counts)}
