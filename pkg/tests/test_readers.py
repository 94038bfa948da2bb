#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

import copy
import json

import pytest

import pconnect
from pconnect import CircleMorseReader, DecompositionReader, MorseReader, NDeltaReader
from pconnect import load_document, dump_document, parse_decomposition, assemble_NDelta
from pconnect.codec import encode_int, decode_int, require
from pconnect import SchemaError


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(data if isinstance(data, str) else json.dumps(data))
    return str(path)


@pytest.fixture
def klein_data(fixture_path):
    return load_document(fixture_path('klein.json'))


def test_dispatch(fixture_path):
    assert isinstance(pconnect.read(fixture_path('torus.json')), CircleMorseReader)
    assert isinstance(pconnect.read(fixture_path('klein.json')), DecompositionReader)
    assert isinstance(pconnect.read(fixture_path('circle_height.json')), MorseReader)
    assert isinstance(pconnect.read(" %s " % fixture_path('klein.json')), DecompositionReader)


def test_explicit_format(fixture_path):
    reader = pconnect.read(fixture_path('torus.json'), file_format=pconnect.CIRCLE_MORSE)
    assert reader.kind == pconnect.CIRCLE_MORSE

    with pytest.raises(SchemaError) as e:
        pconnect.read(fixture_path('torus.json'), file_format=pconnect.MORSE).load()
    assert e.value.location == 'kind'


def test_context_manager(fixture_path):
    with pconnect.read(fixture_path('torus.json')) as reader:
        assert reader.document()['name'] == "torus"
        assert reader.path == fixture_path('torus.json')

    assert reader._data is None


def test_summary(fixture_path, capsys):
    reader = pconnect.read(fixture_path('torus.json'))

    summary = reader.summary(show=False)
    assert summary == {
        'kind': 'circle_morse',
        'name': 'torus',
        'schema_version': 1,
        'critical_points': 4,
        'incidences': 4,
        'max_level': 2}

    reader.summary()
    out = capsys.readouterr().out
    assert out.startswith("Document: circle_morse | torus")
    assert "\tMax Level: 2" in out


def test_decomposition_summary(fixture_path):
    summary = pconnect.read(fixture_path('klein.json')).summary(show=False)

    assert summary['regime'] == "H3"
    assert summary['orbits'] == 8
    assert summary['generators'] == 4


def test_missing_file(tmp_path):
    with pytest.raises(IOError):
        pconnect.read(str(tmp_path / "missing.json"))

    with pytest.raises(IOError):
        DecompositionReader(str(tmp_path / "missing.json"))


def test_unknown_kind(tmp_path):
    path = write(tmp_path, "doc.json", {'schema_version': 1, 'kind': 'weird'})

    with pytest.raises(SchemaError) as e:
        pconnect.read(path)
    assert e.value.location == 'kind'


def test_kind_mismatch(fixture_path):
    with pytest.raises(SchemaError) as e:
        CircleMorseReader(fixture_path('klein.json')).load()
    assert e.value.location == 'kind'


def test_missing_kind(tmp_path):
    path = write(tmp_path, "doc.json", {'schema_version': 1})

    with pytest.raises(SchemaError) as e:
        MorseReader(path).load()
    assert e.value.location == '$.kind'


def test_schema_version(tmp_path):
    path = write(tmp_path, "doc.json", {'schema_version': 2, 'kind': 'decomposition'})

    with pytest.raises(SchemaError) as e:
        pconnect.read(path).load()
    assert e.value.location == 'schema_version'


def test_malformed(tmp_path):
    path = write(tmp_path, "doc.json", '{"schema_version": 1, "kind": ')

    with pytest.raises(SchemaError):
        pconnect.read(path)

    path = write(tmp_path, "list.json", '[1, 2]')
    with pytest.raises(SchemaError) as e:
        load_document(path)
    assert e.value.location == '$'


def test_parse_errors(klein_data):
    data = copy.deepcopy(klein_data)
    del data['regime']
    with pytest.raises(SchemaError) as e:
        parse_decomposition(data)
    assert e.value.location == '$.regime'

    data = copy.deepcopy(klein_data)
    data['regime'] = 'H4'
    with pytest.raises(SchemaError) as e:
        parse_decomposition(data)
    assert e.value.location == '$.regime'

    data = copy.deepcopy(klein_data)
    data['orbits'][0]['from'] = 'nowhere'
    with pytest.raises(SchemaError) as e:
        parse_decomposition(data)
    assert e.value.location == '$.orbits[0].from'

    data = copy.deepcopy(klein_data)
    del data['orbits'][0]['label']
    with pytest.raises(SchemaError) as e:
        parse_decomposition(data)
    assert e.value.location == '$.orbits[0]'

    data = copy.deepcopy(klein_data)
    data['order'] = [['z']]
    with pytest.raises(SchemaError) as e:
        parse_decomposition(data)
    assert e.value.location == '$.order[0]'

    data = copy.deepcopy(klein_data)
    data['sets'][0]['generators'] = {'two': ['x']}
    with pytest.raises(SchemaError) as e:
        parse_decomposition(data)
    assert e.value.location == '$.sets[0].generators'


def test_declared_order(klein_data):
    data = copy.deepcopy(klein_data)
    data['order'] = [['y1', 'x'], ['y2', 'x'], ['z', 'y1'], ['z', 'y2']]

    d = parse_decomposition(data)
    assert d.poset == parse_decomposition(klein_data).poset


def test_base_lift(fixture_path):
    data = load_document(fixture_path('torus_decomposition.json'))
    data['base_lift'] = 't^3'
    data['orbits'][1]['label'] = 't^5'
    data['orbits'][0]['label'] = 't^3'

    d = parse_decomposition(data)
    assert str(d.base_shift) == "t^3"
    assert assemble_NDelta(d).block('h2_4', 'h1_2') == assemble_NDelta(parse_decomposition(load_document(fixture_path('torus_decomposition.json')))).block('h2_4', 'h1_2')


def test_large_counts(tmp_path):
    count = str(2 ** 70)
    doc = {
        'schema_version': 1,
        'kind': 'morse',
        'critical_points': [{'id': 'p', 'index': 1}, {'id': 'q', 'index': 0}],
        'counts': [{'from': 'p', 'to': 'q', 'count': count}]}

    data = pconnect.read(write(tmp_path, "big.json", doc)).load()
    assert data.counts == (('p', 'q', 2 ** 70),)
    assert data.to_dict()['counts'][0]['count'] == count


def test_ndelta_reader(fixture_path, tmp_path):
    matrix = assemble_NDelta(pconnect.read(fixture_path('torus_decomposition.json')).load())
    path = write(tmp_path, "ndelta.json", dump_document(matrix.encode()))

    reader = pconnect.read(path)
    assert isinstance(reader, NDeltaReader)
    assert reader.load() == matrix
    assert reader.decomposition() == matrix.decomposition
    assert reader.summary(show=False)['blocks'] == 2

    data = matrix.encode()
    data['ring'] = 'Z'
    with pytest.raises(SchemaError) as e:
        NDeltaReader(write(tmp_path, "bad.json", data)).load()
    assert e.value.location == 'ring'


def test_codec():
    assert encode_int(5) == 5
    assert encode_int(-2 ** 63) == "-9223372036854775808"
    assert encode_int(2 ** 63 - 1) == 2 ** 63 - 1
    assert decode_int(" -12 ") == -12
    assert decode_int(7) == 7

    with pytest.raises(SchemaError):
        decode_int(True)

    with pytest.raises(SchemaError) as e:
        decode_int("1.5", 'loc')
    assert e.value.location == 'loc'

    assert dump_document({'b': 1, 'a': 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'

    with pytest.raises(SchemaError) as e:
        require({}, 'key', '$.sets[0]')
    assert e.value.location == '$.sets[0].key'
