#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

import numpy
import pytest

from pconnect import IntegerRing, GroupRing, NovikovRing, RingMatrix, compose
from pconnect import GradedModule, PChainComplex, verify_boundary_squared
from pconnect import DimensionError, RingMismatchError, SchemaError, DegreeError


def test_sparse_storage():
    m = RingMatrix(IntegerRing(), ('x', 'y'), ('p', 'q'), {('x', 'p'): 2, ('y', 'q'): 0})

    assert m.nnz() == 1
    assert m.get('y', 'q') == 0
    assert m.shape == (2, 2)
    assert list(m.items()) == [(('x', 'p'), 2)]

    with pytest.raises(DimensionError):
        m.get('z', 'p')

    with pytest.raises(DimensionError):
        RingMatrix(IntegerRing(), ('x',), ('p',), {('x', 'q'): 1})

    with pytest.raises(DimensionError):
        RingMatrix(IntegerRing(), ('x', 'x'), ('p',))


def test_dense_conversion():
    array = [[1, 0, -2], [0, 3, 0]]
    m = RingMatrix.from_array(('r1', 'r2'), ('c1', 'c2', 'c3'), array)

    assert m.nnz() == 3
    assert numpy.array_equal(m.to_array(), numpy.array(array, dtype=object))


def test_compose_integers():
    a = RingMatrix.from_array(('r1', 'r2'), ('j1', 'j2'), [[1, 2], [3, 4]])
    b = RingMatrix.from_array(('j1', 'j2'), ('c1',), [[5], [6]])

    product = compose(a, b)
    assert product.rows == ('r1', 'r2')
    assert product.cols == ('c1',)
    assert numpy.array_equal(product.to_array(), numpy.array([[17], [39]], dtype=object))
    assert a @ b == product


def test_compose_path_order(klein):
    ring = GroupRing(klein)
    a = ring.embed(klein.generator('a'))
    b = ring.embed(klein.generator('b'))

    inner = RingMatrix(ring, ('j',), ('c',), {('j', 'c'): a})
    outer = RingMatrix(ring, ('r',), ('j',), {('r', 'j'): b})

    assert compose(outer, inner).get('r', 'c') == a * b
    assert ring.format(compose(outer, inner).get('r', 'c')) == "b^-1 a"


def test_compose_mismatch(klein):
    a = RingMatrix.zero(IntegerRing(), ('r',), ('j',))
    b = RingMatrix.zero(IntegerRing(), ('k',), ('c',))

    with pytest.raises(DimensionError):
        compose(a, b)

    with pytest.raises(RingMismatchError):
        compose(a, RingMatrix.zero(GroupRing(klein), ('j',), ('c',)))

    with pytest.raises(RingMismatchError):
        RingMatrix(IntegerRing(), ('r',), ('c',), {('r', 'c'): GroupRing(klein).one()})


def test_encode_decode():
    ring = NovikovRing(precision=8)
    m = RingMatrix(ring, ('q',), ('p1', 'p2'), {
        ('q', 'p1'): ring.series([1, 0, -1]),
        ('q', 'p2'): ring.series([2], min_degree=-1)})

    data = m.encode()
    assert data['rows'] == ['q']
    assert RingMatrix.decode(ring, data) == m
    assert m.format_entries() == [('q', 'p1', "1 - t^2"), ('q', 'p2', "2 t^-1")]


def test_decode_errors():
    data = {'rows': ['q'], 'cols': ['p'], 'entries': [{'row': 'q', 'col': 'p', 'value': 1}, {'row': 'q', 'col': 'p', 'value': 2}]}

    with pytest.raises(SchemaError):
        RingMatrix.decode(IntegerRing(), data)

    with pytest.raises(SchemaError) as e:
        RingMatrix.decode(IntegerRing(), {'rows': ['q'], 'cols': ['p']}, 'ref')
    assert e.value.location == 'ref.entries'

    data = {'rows': ['q'], 'cols': ['p'], 'entries': [{'row': 'x', 'col': 'p', 'value': 1}]}
    with pytest.raises(SchemaError):
        RingMatrix.decode(IntegerRing(), data)


def test_reindex():
    m = RingMatrix.from_array(('r1', 'r2'), ('c1', 'c2'), [[1, 2], [3, 4]])
    r = m.reindex(('r2', 'r1'), ('c2', 'c1'))

    assert r.get('r1', 'c2') == 2
    assert numpy.array_equal(r.to_array(), numpy.array([[4, 3], [2, 1]], dtype=object))

    with pytest.raises(DimensionError):
        m.reindex(('r1',), ('c1', 'c2'))


def test_module():
    module = GradedModule({1: ['y1', 'y2'], 0: ['z'], 2: []})

    assert module.degrees() == [0, 1]
    assert module.basis(1) == ('y1', 'y2')
    assert module.basis(5) == ()
    assert module.degree_of('z') == 0
    assert module.ids() == ('z', 'y1', 'y2')
    assert len(module) == 3
    assert module.permuted({1: ['y2', 'y1']}).basis(1) == ('y2', 'y1')

    with pytest.raises(SchemaError):
        GradedModule({0: ['z'], 1: ['z']})

    with pytest.raises(DegreeError):
        GradedModule({-1: ['z']})


def test_direct_sum():
    total = GradedModule.direct_sum([GradedModule({1: ['a']}), GradedModule({1: ['b'], 0: ['c']})])
    assert total.basis(1) == ('a', 'b')
    assert total.basis(0) == ('c',)


def test_boundary_squared():
    ring = IntegerRing()
    module = GradedModule({0: ['v'], 1: ['e1', 'e2'], 2: ['f']})

    d1 = RingMatrix.from_array(('v',), ('e1', 'e2'), [[1, -1]])
    d2 = RingMatrix.from_array(('e1', 'e2'), ('f',), [[1], [1]])
    chain = PChainComplex(module, ring, {1: d1, 2: d2})

    assert verify_boundary_squared(chain).passed
    assert chain.boundary(0).shape == (0, 1)

    d2 = RingMatrix.from_array(('e1', 'e2'), ('f',), [[1], [0]])
    report = PChainComplex(module, ring, {1: d1, 2: d2}).verify_boundary_squared()
    assert not report.passed
    assert report.offending() == [(2, 'v', 'f', 1)]


def test_complex_shape():
    module = GradedModule({0: ['v'], 1: ['e']})

    with pytest.raises(DimensionError):
        PChainComplex(module, IntegerRing(), {1: RingMatrix.zero(IntegerRing(), ('e',), ('v',))})


def test_submatrix():
    ring = IntegerRing()
    m = RingMatrix.from_array(('x', 'y'), ('p', 'q'), [[1, 2], [0, 3]])

    block = m.submatrix(('y',), ('q', 'p'))
    assert block.shape == (1, 2)
    assert block.get('y', 'q') == 3
    assert block.get('y', 'p') == 0
    assert ring.neg(block.get('y', 'q')) == -3


def random_matrix(ring, rows, cols, value, rng):
    entries = {(r, c): value(rng) for r in rows for c in cols if rng.random() < 0.6}
    return RingMatrix(ring, rows, cols, entries)


def test_compose_associative(klein, rng, random_ring_element, random_series):
    rings = (
        (IntegerRing(), lambda rng: rng.randint(-5, 5)),
        (GroupRing(klein), lambda rng: random_ring_element(klein, rng)),
        (NovikovRing(precision=16), lambda rng: random_series(rng, precision=16, length=4)))

    for ring, value in rings:
        for _ in range(30):
            a = random_matrix(ring, ('r1', 'r2'), ('s1', 's2', 's3'), value, rng)
            b = random_matrix(ring, ('s1', 's2', 's3'), ('u1', 'u2'), value, rng)
            c = random_matrix(ring, ('u1', 'u2'), ('w1', 'w2', 'w3', 'w4'), value, rng)

            assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_compose_identity(klein, rng, random_ring_element):
    ring = GroupRing(klein)
    m = random_matrix(ring, ('x', 'y'), ('p', 'q', 'r'), lambda rng: random_ring_element(klein, rng), rng)

    assert compose(RingMatrix.identity(ring, ('x', 'y')), m) == m
    assert compose(m, RingMatrix.identity(ring, ('p', 'q', 'r'))) == m

    novikov = NovikovRing()
    m = RingMatrix(novikov, ('x',), ('p',), {('x', 'p'): novikov.series([1, 0, -1])})
    zero = RingMatrix.zero(novikov, ('p',), ('q',))
    assert compose(m, zero).is_zero()
