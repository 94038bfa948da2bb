#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import sys
import argparse
import logging
from . import read, version
from .constants import *
from .config import RunConfig
from .codec import load_document, dump_document
from .ring import IntegerRing
from .novikov import NovikovRing
from .matrix import RingMatrix
from .complex import verify_boundary_squared
from .homology import homology_Z, homology_novikov
from .morse import validate_regime
from .connection import assemble_NDelta, projection_report
from .circle import build_novikov_complex, build_morse_complex
from .tower import truncation_tower, compare_tower_limit
from .report import render, validation_section, assembly_section, projection_section, homology_section, tower_section, morse_section
from .errors import PConnectError, SchemaError, InsufficientPrecisionError, RingMismatchError

log = logging.getLogger(__name__)

PROG = 'pconnect'


def make_parser():
    """
    Creates the argument parser of the command line interface.

    Returns:
        argparse.ArgumentParser
            Parser.
    """

    parser = argparse.ArgumentParser(
        prog = PROG,
        description = "Assemble and analyze p-connection matrices of Morse decompositions on regular coverings.")

    parser.add_argument("command",
        choices=COMMANDS,
        help="command to run.")
    parser.add_argument("-i", "--input",
        action="store",
        required=True,
        help="input JSON document (decomposition, circle_morse, morse or ndelta).",
        metavar="PATH")
    parser.add_argument("-p", "--precision",
        action="store",
        type=int,
        default=DEFAULT_PRECISION,
        help="Novikov precision, count of known series coefficients (default %d)." % DEFAULT_PRECISION,
        metavar="N")
    parser.add_argument("-f", "--format",
        action="store",
        choices=(HUMAN, JSON),
        default=HUMAN,
        help="output format.")
    parser.add_argument("-r", "--reference",
        action="store",
        help="classical connection matrix to compare the projection with.",
        metavar="PATH")
    parser.add_argument("-l", "--levels",
        action="store",
        type=int,
        default=DEFAULT_LEVELS,
        help="highest level of the truncation tower (default %d)." % DEFAULT_LEVELS,
        metavar="L")
    parser.add_argument("-o", "--output",
        action="store",
        help="write the assembled N∆ as JSON artifact.",
        metavar="PATH")
    parser.add_argument("-v", "--verbose",
        action="store_true",
        help="log computation details.")
    parser.add_argument("--version",
        action="version",
        version="%s %s" % (PROG, ".".join(str(x) for x in version)))

    return parser


def main(argv=None):
    """
    Runs the command line interface.

    Args:
        argv: [str] or None
            Arguments, sys.argv[1:] if None.

    Returns:
        int
            Exit code: 0 ok, 1 semantic violation, 2 parse failure,
            3 insufficient precision.
    """

    parser = make_parser()
    args = parser.parse_args(argv)

    config = RunConfig(
        command = args.command,
        input = args.input,
        precision = args.precision,
        format = args.format,
        reference = args.reference,
        levels = args.levels,
        output = args.output,
        verbose = args.verbose)

    try:
        config.validate()
    except ValueError as e:
        parser.error(str(e))

    # init logging
    logging.basicConfig(
        level = logging.DEBUG if config.verbose else logging.WARNING,
        format = "%(levelname)s %(name)s: %(message)s")

    log.debug("Running %s", config)

    # run command
    try:
        text, code = run(config)

    except SchemaError as e:
        location = " at %s" % e.location if e.location else ""
        sys.stderr.write("error: %s%s\n" % (e, location))
        return EXIT_PARSE

    except InsufficientPrecisionError as e:
        pivot = " (pivot %s, %s)" % tuple(e.pivot) if e.pivot else ""
        sys.stderr.write("error: %s%s\n" % (e, pivot))
        return EXIT_PRECISION

    except PConnectError as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_SEMANTIC

    except IOError as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_PARSE

    sys.stdout.write(text)
    return code


def run(config):
    """
    Runs configured command.

    Args:
        config: pconnect.RunConfig
            Validated settings.

    Returns:
        (str, int)
            Rendered report and exit code.
    """

    commands = {
        'validate': cmd_validate,
        'assemble': cmd_assemble,
        'project': cmd_project,
        'homology': cmd_homology,
        'tower': cmd_tower,
        'report': cmd_report}

    with read(config.input) as reader:
        sections = commands[config.command](config, reader)

    code = EXIT_OK if all(s.passed for s in sections) else EXIT_SEMANTIC
    log.info("%s finished with exit code %d", config.command, code)

    return render(sections, config.format), code


def cmd_validate(config, reader):
    """Checks schema, order, regime and degree drops."""

    # real-valued data
    if reader.kind == MORSE:
        data = reader.load()
        chain = build_morse_complex(data)
        return [morse_section(data, verify_boundary_squared(chain))]

    # circle-valued data are checked as complex first
    if reader.kind == CIRCLE_MORSE:
        build_novikov_complex(reader.load(), config.precision)

    decomposition = reader.decomposition()
    report = validate_regime(decomposition)

    return [validation_section(decomposition, report)]


def cmd_assemble(config, reader):
    """Assembles N∆ and writes the artifact."""

    matrix = _load_matrix(config, reader)

    # check d o d = 0
    report = verify_boundary_squared(matrix.complex)
    if not report.passed:
        log.warning("N∆ o N∆ != 0 (%s), coefficients may lack a sign convention", report)

    # write artifact
    if config.output:
        with open(config.output, 'w') as f:
            f.write(dump_document(matrix.encode()))
        log.info("N∆ written to '%s'", config.output)

    return [assembly_section(matrix)]


def cmd_project(config, reader):
    """Projects N∆ to the classical connection matrix."""

    matrix = _load_matrix(config, reader)

    reference = matrix.decomposition.reference
    if config.reference:
        reference = load_reference(config.reference)

    return [projection_section(projection_report(matrix, reference))]


def cmd_homology(config, reader):
    """Computes homology over Z or the Novikov ring."""

    # real-valued data
    if reader.kind == MORSE:
        return [homology_section(homology_Z(build_morse_complex(reader.load())))]

    # circle-valued data
    if reader.kind == CIRCLE_MORSE:
        chain = build_novikov_complex(reader.load(), config.precision)
        return [homology_section(homology_novikov(chain))]

    # decompositions
    matrix = _load_matrix(config, reader)

    if isinstance(matrix.ring, NovikovRing):
        return [homology_section(homology_novikov(matrix.complex))]

    message = "Ring mismatch! -> homology over %s is not computed" % matrix.ring.name
    raise RingMismatchError(message)


def cmd_tower(config, reader):
    """Builds the truncation tower of circle-valued data."""

    if reader.kind != CIRCLE_MORSE:
        message = "Tower needs circle-valued Morse data! -> '%s'" % reader.kind
        raise SchemaError(message, location='kind')

    data = reader.load()
    tower = truncation_tower(data, config.levels)

    # compare with Novikov boundary
    precision = max(config.precision, config.levels + 1, (data.max_level() or 0) + 1)
    chain = build_novikov_complex(data, precision)
    comparison = compare_tower_limit(tower, chain)

    return [tower_section(tower, chain.ring, comparison)]


def cmd_report(config, reader):
    """Runs all commands applicable to the input."""

    sections = cmd_validate(config, reader)
    if not all(s.passed for s in sections):
        return sections

    if reader.kind != MORSE:
        sections += cmd_assemble(config, reader)
        sections += cmd_project(config, reader)

    # homology is skipped for group rings
    try:
        sections += cmd_homology(config, reader)
    except RingMismatchError as e:
        log.info("Homology skipped: %s", e)

    if reader.kind == CIRCLE_MORSE:
        sections += cmd_tower(config, reader)

    return sections


def load_reference(path):
    """
    Loads classical connection matrix over Z from a document holding a
    'reference' item or the sparse matrix itself.

    Args:
        path: str
            Document path.

    Returns:
        pconnect.RingMatrix
            Reference matrix.
    """

    data = load_document(path)
    if 'reference' in data:
        return RingMatrix.decode(IntegerRing(), data['reference'], 'reference')

    return RingMatrix.decode(IntegerRing(), data, '$')


def _load_matrix(config, reader):
    """Gets N∆ from artifact or assembles it."""

    if reader.kind == NDELTA:
        return reader.load()

    if reader.kind == MORSE:
        message = "Morse data have no decomposition! -> use 'homology' or 'validate'"
        raise SchemaError(message, location='kind')

    return assemble_NDelta(reader.decomposition(), config.precision)


if __name__ == '__main__':
    sys.exit(main())
