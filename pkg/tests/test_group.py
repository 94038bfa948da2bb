#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

import pytest

from pconnect import DeckGroup, GroupMap, group_mul
from pconnect import SchemaError, GroupMismatchError, HomomorphismError

KINDS = ('finite', 'klein_bottle', 'free', 'infinite_cyclic', 'free_abelian')


@pytest.mark.parametrize('kind', KINDS)
def test_group_axioms(kind, groups, rng, random_element):
    group = groups[kind]
    e = group.identity()

    for _ in range(500):
        x, y, z = (random_element(group, rng) for _ in range(3))

        assert (x * y) * z == x * (y * z)
        assert x * e == x and e * x == x
        assert (x * ~x).is_identity()
        assert (~x * x).is_identity()


@pytest.mark.parametrize('kind', KINDS)
def test_parse_format(kind, groups, rng, random_element):
    group = groups[kind]

    for _ in range(50):
        x = random_element(group, rng)
        assert group.parse(group.format(x)) == x
        assert group.decode(group.encode(x)) == x


def test_klein_relation(klein):
    a = klein.generator('a')
    b = klein.generator('b')

    assert a * b == ~b * a
    assert (b * a * b) == a
    assert klein.format(a * b) == "b^-1 a"
    assert klein.encode(a * b) == {'b': -1, 'a': 1}
    assert klein.decode({'b': -1, 'a': 1}) == a * b


def test_klein_sort_order(klein):
    elements = [klein.parse(x) for x in ("b", "a", "e", "b a")]
    ordered = sorted(elements, key=klein.sort_key)

    assert [klein.format(x) for x in ordered] == ["e", "a", "b", "b a"]


def test_free_reduction(free2):
    a = free2.generator('a')
    b = free2.generator('b')

    assert (a * b * ~b * ~a).is_identity()
    assert (a * b * ~b).normal_form == ((0, 1),)
    assert free2.format(a ** 2 * ~b) == "a^2 b^-1"
    assert free2.parse("a b^-1 b a") == a ** 2
    assert a * b != b * a


def test_free_default_generators():
    group = DeckGroup.free(3)
    assert group.generators == ('a', 'b', 'c')


def test_cyclic(cyclic):
    t = cyclic.generator('t')

    assert t ** 3 == cyclic.element(3)
    assert cyclic.parse("t^-2") == cyclic.element(-2)
    assert cyclic.format(cyclic.identity()) == "e"
    assert cyclic.decode(4) == t ** 4
    assert cyclic.is_ordered()
    assert cyclic.order_key(t ** -2) < cyclic.order_key(t)


def test_finite_table(z2z2):
    a = z2z2.generator('a')
    b = z2z2.generator('b')

    assert a * b == z2z2.element('ab')
    assert (a * a).is_identity()
    assert z2z2.parse("ab") == a * b
    assert z2z2.parse("a b") == a * b
    assert len(z2z2.all_elements()) == 4


def test_finite_from_dict(z2z2):
    group = DeckGroup.from_dict(z2z2.to_dict())
    assert group == z2z2


def test_finite_invalid_table():
    table = (('e', 'a', 'b'), ('a', 'e', 'e'), ('b', 'e', 'e'))

    with pytest.raises(SchemaError):
        DeckGroup.finite(('e', 'a', 'b'), table)


def test_finite_not_generated(z2z2):
    with pytest.raises(SchemaError):
        DeckGroup.finite(z2z2.elements, [[z2z2.multiply(x, y) for y in z2z2.elements] for x in z2z2.elements], ('a',))


def test_unknown_kind():
    with pytest.raises(SchemaError) as e:
        DeckGroup.from_dict({'kind': 'heisenberg'})

    assert e.value.location == 'group.kind'


def test_invalid_rank():
    with pytest.raises(SchemaError):
        DeckGroup.free(0)


def test_unknown_generator(klein):
    with pytest.raises(SchemaError):
        klein.parse("c")


def test_invalid_token(cyclic):
    with pytest.raises(SchemaError):
        cyclic.parse("t^^2")


def test_group_mismatch(klein, free2):
    with pytest.raises(GroupMismatchError):
        group_mul(klein.generator('a'), free2.generator('a'))


def test_no_order(klein):
    assert not klein.is_ordered()

    with pytest.raises(ValueError):
        klein.order_key(klein.identity())


def test_map_cyclic_inversion(cyclic, rng, random_element):
    iso = GroupMap(cyclic, cyclic, {'t': 't^-1'})
    iso.validate()

    for _ in range(20):
        x = random_element(cyclic, rng)
        assert iso(x) == ~x
        assert iso.inverse()(iso(x)) == x


def test_map_swap(z2z2):
    iso = GroupMap(z2z2, z2z2, {'a': 'b', 'b': 'a'})
    iso.validate()

    assert iso(z2z2.element('a')) == z2z2.element('b')
    assert iso(z2z2.element('ab')) == z2z2.element('ab')


def test_map_lattice_inverse(lattice, rng, random_element):
    iso = GroupMap(lattice, lattice, {'u': [2, 1], 'v': [1, 1]})
    inverse = iso.inverse()

    for _ in range(20):
        x = random_element(lattice, rng)
        assert inverse(iso(x)) == x


def test_map_klein_inverse(klein, rng, random_element):
    iso = GroupMap(klein, klein, {'a': {'b': 2, 'a': 1}, 'b': {'b': -1}})
    inverse = iso.inverse()

    for _ in range(20):
        x = random_element(klein, rng)
        assert inverse(iso(x)) == x


def test_map_free_permutation(free2):
    iso = GroupMap(free2, free2, {'a': 'b^-1', 'b': 'a'})
    iso.validate()

    a = free2.generator('a')
    b = free2.generator('b')
    assert iso(a * b) == ~b * a


def test_map_missing_generator(cyclic):
    with pytest.raises(HomomorphismError):
        GroupMap(cyclic, cyclic, {})


def test_map_not_bijective(cyclic, lattice, z2z2, klein):
    with pytest.raises(HomomorphismError):
        GroupMap(cyclic, cyclic, {'t': 't^2'}).validate()

    with pytest.raises(HomomorphismError):
        GroupMap(lattice, lattice, {'u': [2, 0], 'v': [0, 1]}).validate()

    with pytest.raises(HomomorphismError):
        GroupMap(z2z2, z2z2, {'a': 'a', 'b': 'a'}).validate()

    with pytest.raises(HomomorphismError):
        GroupMap(klein, klein, {'a': 'b', 'b': 'a'}).validate()


@pytest.mark.parametrize('kind', KINDS)
def test_normalize_idempotent(kind, groups, rng, random_element):
    group = groups[kind]

    for _ in range(100):
        x = random_element(group, rng)
        assert group.normalize(x.normal_form) == x.normal_form


def test_normalize_raw(free2, klein, lattice, rng):
    for _ in range(100):
        word = [(rng.randrange(2), rng.choice((-2, -1, 1, 2))) for _ in range(8)]
        once = free2.normalize(word)
        assert free2.normalize(once) == once

    assert klein.normalize(klein.normalize(['2', -1])) == (2, -1)
    assert lattice.normalize(lattice.normalize([1, '-3'])) == (1, -3)
