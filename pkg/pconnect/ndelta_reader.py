#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
from .fixture_reader import *
from .algebra import coefficient_ring
from .matrix import RingMatrix
from .connection import PConnectionMatrix
from .decomposition_reader import parse_decomposition
from .codec import decode_int


class NDeltaReader(FixtureReader):
    """
    NDeltaReader reads the p-connection matrix artifact written by the
    'assemble' command, JSON documents of kind 'ndelta'. The artifact embeds
    its decomposition so the matrix can be rebuilt without the source file.
    """


    def __init__(self, path, **kwargs):
        super().__init__(path)


    @property
    def kind(self):
        """Gets document kind this reader accepts."""

        return NDELTA


    def load(self, **kwargs):
        """
        Creates p-connection matrix from document.

        Returns:
            pconnect.PConnectionMatrix
                Stored matrix.
        """

        data = self.document()

        decomposition = parse_decomposition(require(data, 'decomposition', '$'), 'decomposition')
        precision = decode_int(data.get('precision', DEFAULT_PRECISION), 'precision')
        ring = coefficient_ring(decomposition.group, decomposition.regime, precision)

        # check ring
        if data.get('ring', ring.name) != ring.name:
            message = "Ring does not match decomposition! -> '%s' instead of '%s'" % (data['ring'], ring.name)
            raise SchemaError(message, location='ring')

        blocks = {}
        for i, item in enumerate(require(data, 'blocks', '$')):
            where = "blocks[%d]" % i
            pair = (require(item, 'repeller', where), require(item, 'attractor', where))
            blocks[pair] = RingMatrix.decode(ring, require(item, 'matrix', where), "%s.matrix" % where)

        return PConnectionMatrix(decomposition, ring, blocks)


    def decomposition(self, **kwargs):
        """Gets decomposition embedded in the artifact."""

        return parse_decomposition(require(self.document(), 'decomposition', '$'), 'decomposition')


    def _summary(self):
        """Gets kind specific summary items."""

        matrix = self.load()

        return {
            'ring': matrix.ring.name,
            'blocks': len(matrix.blocks),
            'precision': matrix.precision}
