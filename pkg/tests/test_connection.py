#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

import pytest

import pconnect
from pconnect import GroupMap, RingMatrix, NovikovRing, NovikovSeries, PConnectionMatrix, ConnectionBundle
from pconnect import assemble_delta, assemble_NDelta, project_classical, projection_report
from pconnect import nonzero_entry_certificate, transport_by_isomorphism
from pconnect import AdmissibilityError, DimensionError, GroupMismatchError, HomomorphismError, RingMismatchError


def load(fixture_path, name):
    return pconnect.read(fixture_path(name)).load()


def block_formats(matrix):
    return {pair: [matrix.ring.format(v) for pos, v in block.items()] for pair, block in matrix.blocks.items()}


def test_klein_blocks(fixture_path):
    matrix = assemble_NDelta(load(fixture_path, 'klein.json'))

    assert block_formats(matrix) == {
        ('x', 'y1'): ["1 + b"],
        ('x', 'y2'): ["1 + a"],
        ('y1', 'z'): ["a + b"],
        ('y2', 'z'): ["1 + b"]}

    assert matrix.precision is None
    assert matrix.is_upper_triangular()


def test_double_torus_blocks(fixture_path):
    matrix = assemble_NDelta(load(fixture_path, 'double_torus.json'))

    assert matrix.ring.format(matrix.block('x', 'y').get('y', 'x')) == "1 + a"
    assert matrix.ring.format(matrix.block('y', 'gamma').get('gamma0', 'y')) == "a + ab"
    assert matrix.block('y', 'gamma').get('gamma1', 'y') == 0
    assert matrix.block('x', 'gamma').is_zero()


def test_solid_double_torus_block(fixture_path):
    matrix = assemble_NDelta(load(fixture_path, 'solid_double_torus.json'))
    assert block_formats(matrix) == {('p', 'q'): ["1 + a + b + b^2 + a b^-1"]}


def test_torus_block(fixture_path):
    matrix = assemble_NDelta(load(fixture_path, 'torus_decomposition.json'))

    assert matrix.precision == 32
    assert block_formats(matrix) == {
        ('h1_3', 'h0_1'): ["1 - t^2"],
        ('h2_4', 'h1_2'): ["1 - t^2"]}

    assert [(src, dst) for src, dst, value, pair in matrix.entries()] == [('h1_3', 'h0_1'), ('h2_4', 'h1_2')]


def test_precision(fixture_path):
    matrix = assemble_NDelta(load(fixture_path, 'torus_decomposition.json'), precision=2)

    assert matrix.ring == NovikovRing(precision=2)
    assert matrix.block('h2_4', 'h1_2').get('h1_2', 'h2_4') == NovikovSeries(0, [1, 0, -1], 2)


def test_bundle(fixture_path):
    d = load(fixture_path, 'klein.json')
    bundle = ConnectionBundle(d, 'x', 'y1')

    assert bundle.pair == ('x', 'y1')
    assert [d.group.format(g) for g in bundle.labels()] == ["e", "b"]
    assert bundle.matrices[d.group.identity()].get('y1', 'x') == 1
    assert assemble_delta(bundle) == assemble_NDelta(d).block('x', 'y1')


def test_cancelling_records(fixture_path):
    d = load(fixture_path, 'torus_decomposition.json')
    orbits = list(d.orbits) + [r for r in d.orbits.for_pair('h2_4', 'h1_2') if str(r.label) == "t^2"]
    matrix = assemble_NDelta(d.replace(orbits=orbits))

    assert matrix.ring.format(matrix.block('h2_4', 'h1_2').get('h1_2', 'h2_4')) == "1 - 2 t^2"


def test_complex(fixture_path):
    matrix = assemble_NDelta(load(fixture_path, 'klein.json'))
    chain = matrix.complex

    assert chain.boundary(2).rows == ('y1', 'y2')
    assert chain.boundary(2).cols == ('x',)

    full = matrix.full_matrix()
    assert full.rows == ('z', 'y1', 'y2', 'x')
    assert full.nnz() == 4


def test_projection_torus(fixture_path):
    d = load(fixture_path, 'torus_decomposition.json')
    report = projection_report(assemble_NDelta(d), d.reference)

    assert report.matrix.is_zero()
    assert report.exact
    assert report.square_ok
    assert report.reference_ok
    assert report.verdict() == "matches reference"
    assert report.passed


def test_projection_klein(fixture_path):
    matrix = assemble_NDelta(load(fixture_path, 'klein.json'))
    projected = project_classical(matrix)
    report = projection_report(matrix)

    assert [v for pos, v in projected.items()] == [2, 2, 2, 2]
    assert report.square_ok
    assert report.reference_ok is None
    assert report.verdict() == "no reference"


def test_projection_differs(fixture_path):
    matrix = assemble_NDelta(load(fixture_path, 'klein.json'))
    ids = matrix.module.ids()
    reference = RingMatrix.zero(pconnect.IntegerRing(), ids, ids)

    report = projection_report(matrix, reference)
    assert not report.reference_ok
    assert not report.passed
    assert report.verdict() == "differs from reference"
    assert len(report.differences) == 4
    assert ('y1', 'x', 2, 0) in report.differences

    report = projection_report(matrix, RingMatrix.zero(pconnect.IntegerRing(), ('z',), ('z',)))
    assert report.reference_ok is False


def test_restrict(fixture_path):
    matrix = assemble_NDelta(load(fixture_path, 'klein.json'))
    sub = matrix.restrict(('x', 'y1'))

    assert set(sub.blocks) == {('x', 'y1')}
    assert sub.module.ids() == ('y1', 'x')
    assert sub == assemble_NDelta(sub.decomposition)

    with pytest.raises(AdmissibilityError):
        matrix.restrict(('x', 'z'))


def test_certificate(fixture_path):
    matrix = assemble_NDelta(load(fixture_path, 'klein.json'))
    witnesses = nonzero_entry_certificate(matrix, ('x', 'y2'))

    assert len(witnesses) == 1
    pos, value, records = witnesses[0]
    assert pos == ('y2', 'x')
    assert len(records) == 2
    assert records[1].path == ['s1', 's2', 's3']

    assert nonzero_entry_certificate(matrix, ('x', 'z')) == []


def test_certificate_missing_witness(fixture_path):
    d = load(fixture_path, 'torus_decomposition.json')
    ring = NovikovRing()
    block = RingMatrix(ring, ('h1_3',), ('h2_4',), {('h1_3', 'h2_4'): ring.from_int(1)})
    matrix = PConnectionMatrix(d, ring, {('h2_4', 'h1_3'): block})

    with pytest.raises(AssertionError):
        nonzero_entry_certificate(matrix, ('h2_4', 'h1_3'))


def test_block_shape(fixture_path):
    d = load(fixture_path, 'torus_decomposition.json')
    ring = NovikovRing()
    block = RingMatrix(ring, ('h1_2',), ('h1_3',), {('h1_2', 'h1_3'): ring.from_int(1)})

    with pytest.raises(DimensionError):
        PConnectionMatrix(d, ring, {('h2_4', 'h1_2'): block})


def test_encode(fixture_path):
    matrix = assemble_NDelta(load(fixture_path, 'torus_decomposition.json'))
    data = matrix.encode()

    assert data['kind'] == pconnect.NDELTA
    assert data['ring'] == "Z((t))"
    assert data['precision'] == 32
    assert [(b['repeller'], b['attractor']) for b in data['blocks']] == [('h1_3', 'h0_1'), ('h2_4', 'h1_2')]


def test_transport_inversion(fixture_path):
    d = load(fixture_path, 'torus_decomposition.json')
    matrix = assemble_NDelta(d)
    iso = GroupMap(d.group, d.group, {'t': 't^-1'})

    result = transport_by_isomorphism(matrix, iso)
    assert result.ring.format(result.block('h2_4', 'h1_2').get('h1_2', 'h2_4')) == "-t^-2 + 1"
    assert [str(r.label) for r in result.decomposition.orbits.for_pair('h2_4', 'h1_2')] == ["t^-2", "e"]


def test_transport_swap(fixture_path):
    d = load(fixture_path, 'double_torus.json')
    matrix = assemble_NDelta(d)
    iso = GroupMap(d.group, d.group, {'a': 'b', 'b': 'a'})

    result = transport_by_isomorphism(matrix, iso)
    assert result.ring.format(result.block('x', 'y').get('y', 'x')) == "1 + b"
    assert result.ring.format(result.block('y', 'gamma').get('gamma0', 'y')) == "b + ab"


def test_transport_errors(fixture_path, klein, cyclic):
    d = load(fixture_path, 'torus_decomposition.json')

    with pytest.raises(GroupMismatchError):
        transport_by_isomorphism(assemble_NDelta(d), GroupMap(klein, klein, {'a': 'a', 'b': 'b'}))

    with pytest.raises(HomomorphismError):
        transport_by_isomorphism(assemble_NDelta(d), GroupMap(d.group, d.group, {'t': 't^2'}))

    with pytest.raises(RingMismatchError):
        transport_by_isomorphism(assemble_NDelta(d, precision=2), GroupMap(d.group, d.group, {'t': 't^-1'}))
