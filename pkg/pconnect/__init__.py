#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# set version
version = (0, 1, 0)

# import modules
import os.path
import json

# import objects
from .constants import *
from .errors import *
from .group import DeckGroup, GroupElement, GroupMap, group_mul
from .ring import Ring, IntegerRing, Augmentation
from .group_ring import GroupRing, GroupRingElem
from .novikov import NovikovRing, NovikovSeries, novikov_divmod
from .algebra import ring_mul, augment, unit_inverse, is_unit, coefficient_ring, check_regime
from .module import GradedModule
from .matrix import RingMatrix, compose
from .complex import PChainComplex, BoundaryReport, verify_boundary_squared
from .smith import SmithForm, NovikovReducer, smith_normal_form
from .homology import HomologyGroup, HomologyReport, homology_Z, homology_novikov
from .poset import Poset, intervals, adjacent_pairs, flow_order
from .orbit import OrbitRecord, OrbitList
from .morse import MorseSet, MorseDecomposition, ValidationReport, classify_orbits, translate_decomposition, validate_regime
from .gain_graph import GainGraph, lift_path
from .connection import ConnectionBundle, PConnectionMatrix, ProjectionReport
from .connection import assemble_delta, assemble_NDelta, project_classical, projection_report, nonzero_entry_certificate, transport_by_isomorphism
from .circle import CircleMorseData, RealMorseData, IncidenceRecord, novikov_incidence, build_novikov_complex, build_morse_complex
from .tower import TruncationTower, TowerReport, truncation_tower, compare_tower_limit
from .config import RunConfig
from .codec import load_document, dump_document

# import readers
from .fixture_reader import FixtureReader
from .decomposition_reader import DecompositionReader, parse_decomposition
from .circle_reader import CircleMorseReader
from .morse_reader import MorseReader
from .ndelta_reader import NDeltaReader


def read(path, file_format=None):
    """
    Returns specific document reader for given file.

    Args:
        path: str
            File path.

        file_format: str

            Document kind to be used or None to get it directly from the
            document. Supported kinds are 'decomposition', 'circle_morse',
            'morse' and 'ndelta'.

    Returns:
        pconnect.FixtureReader
            Initialized reader for specific document kind.
    """

    # remove whitespace
    path = path.strip()

    # check path
    if not os.path.exists(path):
        message = "File not found! -> '%s'" % path
        raise IOError(message)

    # get format
    if not file_format:
        file_format = resolve_format(path)

    # report parse failure
    if file_format is None:
        load_document(path)

    # init relevant reader
    if file_format == DECOMPOSITION:
        return DecompositionReader(path)

    if file_format == CIRCLE_MORSE:
        return CircleMorseReader(path)

    if file_format == MORSE:
        return MorseReader(path)

    if file_format == NDELTA:
        return NDeltaReader(path)

    # unknown format
    message = "Unknown document kind! -> '%s'" % file_format
    raise SchemaError(message, location='kind')


def resolve_format(path):
    """
    Resolves document kind from its 'kind' tag.

    Args:
        path: str
            File path.

    Returns:
        str or None
            Document kind.
    """

    # check path
    if not os.path.exists(path):
        message = "File not found! -> " + path
        raise IOError(message)

    # read tag
    with open(path) as f:
        try:
            data = json.load(f)
        except ValueError:
            return None

    if isinstance(data, dict):
        return data.get('kind', None)

    # unknown document
    return None
