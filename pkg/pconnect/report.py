#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
from .constants import *
from .codec import dump_document, encode_int

ARROW = " → "


class Section(object):
    """
    Section holds one part of a command report in both output formats.

    Attributes:

        name: str
            Section name, the command producing it.

        lines: [str]
            Human readable lines.

        data: dict
            JSON representation.

        passed: bool
            False if the section reports a failed check.
    """


    def __init__(self, name, lines, data, passed=True):

        self.name = name
        self.lines = list(lines)
        self.data = data
        self.passed = passed


    def __str__(self):
        """Gets standard string representation."""

        return "\n".join(self.lines)


    def __repr__(self):
        """Gets debug string representation."""

        return "%s(%s)" % (self.__class__.__name__, self.name)


def render(sections, output_format=HUMAN):
    """
    Renders sections deterministically.

    Args:

        sections: [pconnect.Section]
            Report sections.

        output_format: str
            Format as pconnect.HUMAN or pconnect.JSON.

    Returns:
        str
            Report text ending with new line.
    """

    # json
    if output_format == JSON:
        if len(sections) == 1:
            return dump_document(sections[0].data)
        return dump_document({s.name: s.data for s in sections})

    # single section
    if len(sections) == 1:
        return "\n".join(sections[0].lines) + "\n"

    # titled sections
    buff = []
    for section in sections:
        buff.append("[%s]" % section.name)
        buff.extend(section.lines)
        buff.append("")

    return "\n".join(buff)


def validation_section(decomposition, report):
    """
    Creates section of the decomposition checks.

    Args:

        decomposition: pconnect.MorseDecomposition
            Checked decomposition.

        report: pconnect.ValidationReport
            Regime and adjacency checks.

    Returns:
        pconnect.Section
            Report section.
    """

    state = "valid" if report.passed else "invalid"
    lines = ["%s: %s" % (state, decomposition)]

    for item in report.pairs:
        line = "(%s%s%s): support {%s}" % (item['pair'][0], ARROW, item['pair'][1], ", ".join(item['support']))
        if 'min_label' in item:
            line += ", min %s" % item['min_label']
        lines.append(line)

    lines.extend("violation: %s" % x for x in report.violations)
    lines.extend("advisory: %s" % x for x in report.advisories)

    data = report.to_dict()
    data['name'] = decomposition.name

    return Section('validate', lines, data, report.passed)


def assembly_section(matrix):
    """
    Creates section listing nonzero entries of N-Delta ordered by source
    degree and generator ids, e.g. '(h2_4 → h1_2): 1 - t^2'.

    Args:
        matrix: pconnect.PConnectionMatrix
            p-connection matrix.

    Returns:
        pconnect.Section
            Report section.
    """

    ring = matrix.ring
    entries = matrix.entries()

    if not entries:
        lines = ["N∆ = 0"]
    else:
        lines = ["(%s%s%s): %s" % (source, ARROW, target, ring.format(value)) for source, target, value, pair in entries]

    data = {
        'ring': ring.name,
        'precision': matrix.precision,
        'zero': not entries,
        'entries': [{
            'from': source,
            'to': target,
            'block': list(pair),
            'value': ring.encode(value),
            'text': ring.format(value)} for source, target, value, pair in entries]}

    return Section('assemble', lines, data)


def projection_section(report):
    """
    Creates section of the classical projection.

    Args:
        report: pconnect.ProjectionReport
            Projection with verdicts.

    Returns:
        pconnect.Section
            Report section.
    """

    matrix = report.matrix

    if matrix.is_zero():
        lines = ["classical connection matrix = 0"]
    else:
        lines = ["(%s%s%s): %s" % (col, ARROW, row, text) for row, col, text in matrix.format_entries()]

    if not report.exact:
        lines.append("warning: augmentation of truncated series")

    lines.append("commuting square: %s" % ("ok" if report.square_ok else "failed"))
    lines.append("verdict: %s" % report.verdict())

    for row, col, found, expected in report.differences:
        lines.append("difference (%s%s%s): %d instead of %d" % (col, ARROW, row, found, expected))

    data = {
        'matrix': matrix.encode(),
        'exact': report.exact,
        'square_ok': report.square_ok,
        'verdict': report.verdict(),
        'differences': [{'row': r, 'col': c, 'found': encode_int(f), 'expected': encode_int(e)} for r, c, f, e in report.differences]}

    return Section('project', lines, data, report.passed)


def homology_section(report):
    """
    Creates section of per-degree homology.

    Args:
        report: pconnect.HomologyReport
            Homology by degree.

    Returns:
        pconnect.Section
            Report section.
    """

    return Section('homology', report.lines(), report.to_dict())


def tower_section(tower, ring, comparison=None):
    """
    Creates section with per-level matrices and the stabilization level.

    Args:

        tower: pconnect.TruncationTower
            Truncation tower.

        ring: pconnect.NovikovRing
            Ring used for rendering.

        comparison: pconnect.TowerReport or None
            Comparison with the Novikov boundary.

    Returns:
        pconnect.Section
            Report section.
    """

    lines = []
    levels = []

    for level in range(tower.levels + 1):

        entries = tower.format_level(level, ring)
        if not entries:
            lines.append("level %d: 0" % level)
        else:
            lines.append("level %d: %s" % (level, "; ".join("(%s%s%s): %s" % (col, ARROW, row, text) for k, row, col, text in entries)))

        levels.append({
            'level': level,
            'entries': [{'degree': k, 'from': col, 'to': row, 'text': text} for k, row, col, text in entries]})

    # stabilization
    if tower.stabilized:
        lines.append("stabilization: ℓ* = %d" % tower.stable_level)
    else:
        lines.append("stabilization: not reached (max level %d > %d)" % (tower.max_level, tower.levels))

    data = {
        'levels': levels,
        'stabilized': tower.stabilized,
        'stable_level': tower.stable_level}

    passed = True
    if comparison is not None:
        passed = comparison.passed
        lines.append("limit: %s" % comparison)
        data['limit_passed'] = comparison.passed
        data['mismatches'] = [{'level': m[0], 'degree': m[1], 'row': m[2], 'col': m[3]} for m in comparison.mismatches]

    return Section('tower', lines, data, passed)


def morse_section(data, report):
    """
    Creates validation section of real-valued or circle-valued Morse data.

    Args:

        data: pconnect.CircleMorseData or pconnect.RealMorseData
            Morse data.

        report: pconnect.BoundaryReport
            Check of d o d = 0.

    Returns:
        pconnect.Section
            Report section.
    """

    state = "valid" if report.passed else "invalid"
    lines = ["%s: %s" % (state, data)]

    for k, row, col, value in report.offending():
        lines.append("violation: d^2 (%s, %s) != 0 at degree %d" % (row, col, k))

    info = {
        'name': data.name,
        'passed': report.passed,
        'critical_points': len(data)}

    return Section('validate', lines, info, report.passed)
