"""Tests for semigroup morphisms and the exhaustive morphism search."""

from itertools import product

import pytest

from iquotients.enumeration import enumerate_semigroups
from iquotients.errors import InputError
from iquotients.morphisms import Morphism, enumerate_morphisms
from iquotients.relations import is_left_ample, plus_table
from iquotients.samples import (
    ample_not_inverse,
    chain_semilattice,
    cyclic_group,
    klein_four,
    left_zero,
)


def test_construction_validates_length_and_range():
    c2, c3 = cyclic_group(2), cyclic_group(3)
    with pytest.raises(InputError):
        Morphism(c2, c3, [0])
    with pytest.raises(InputError):
        Morphism(c2, c3, [0, 0, 0])
    with pytest.raises(InputError):
        Morphism(c2, c3, [0, 3])
    with pytest.raises(InputError):
        Morphism(c2, c3, [0, -1])


def test_construction_rejects_non_multiplicative_maps():
    c2, c3 = cyclic_group(2), cyclic_group(3)
    with pytest.raises(InputError):
        Morphism(c2, c3, [0, 1])
    Morphism(c2, c3, [0, 1], check=False)


def test_identity_and_call():
    s = chain_semilattice(3)
    ident = Morphism.identity(s)
    assert ident.mapping == (0, 1, 2)
    assert ident(1) == 1
    assert ident.is_isomorphism()
    with pytest.raises(AttributeError):
        ident.mapping = ()


def test_image_and_jectivity():
    c4, c2 = cyclic_group(4), cyclic_group(2)
    halve = Morphism(c4, c2, [0, 1, 0, 1])
    assert halve.image() == [0, 1]
    assert not halve.is_injective()
    assert halve.is_surjective()
    assert not halve.is_isomorphism()
    embed = Morphism(c2, c4, [0, 2])
    assert embed.is_injective()
    assert not embed.is_surjective()


def test_then_composes_left_to_right():
    c4, c2 = cyclic_group(4), cyclic_group(2)
    halve = Morphism(c4, c2, [0, 1, 0, 1])
    embed = Morphism(c2, c4, [0, 2])
    both = halve.then(embed)
    assert both.source == c4 and both.target == c4
    assert both.mapping == (0, 2, 0, 2)
    with pytest.raises(InputError):
        embed.then(embed)


def test_inverse_round_trip():
    v4 = klein_four()
    swap = Morphism(v4, v4, [0, 2, 1, 3])
    assert swap.inverse().then(swap).mapping == Morphism.identity(v4).mapping
    assert swap.then(swap.inverse()).mapping == (0, 1, 2, 3)
    halve = Morphism(cyclic_group(4), cyclic_group(2), [0, 1, 0, 1])
    with pytest.raises(InputError):
        halve.inverse()


def test_equality_and_hash():
    c2 = cyclic_group(2)
    a = Morphism.identity(c2)
    b = Morphism(c2, c2, [0, 1])
    assert a == b and hash(a) == hash(b)
    assert a != Morphism(c2, c2, [0, 0])
    assert a != (0, 1)
    assert "Morphism(2 -> 2" in repr(a)


def test_two_one_on_plus_preserving_maps():
    s = ample_not_inverse()
    plus = plus_table(s)
    for f in enumerate_morphisms(s, s):
        expected = all(f.mapping[plus[a]] == plus[f.mapping[a]] for a in range(s.order))
        assert f.is_two_one() == expected
    collapse = Morphism(s, left_zero(2), [0, 0, 0])
    assert not collapse.is_two_one()


def test_group_morphisms_are_two_one():
    c4, c2 = cyclic_group(4), cyclic_group(2)
    assert Morphism(c4, c2, [0, 1, 0, 1]).is_two_one()
    assert Morphism.identity(c4).is_two_one()


def test_text_round_trip():
    c4, c2 = cyclic_group(4), cyclic_group(2)
    halve = Morphism(c4, c2, [0, 1, 0, 1])
    text = halve.to_text()
    assert text == "0 -> 0\n1 -> 1\n2 -> 0\n3 -> 1\n"
    again = Morphism.from_text(c4, c2, text)
    assert again == halve
    commented = "# halving map\n\n0 -> 0\n1 -> 1\n2 -> 0\n3 -> 1\n"
    assert Morphism.from_text(c4, c2, commented) == halve


def test_from_text_errors():
    c2 = cyclic_group(2)
    with pytest.raises(InputError):
        Morphism.from_text(c2, c2, "0 -> 0 -> 1\n1 -> 1\n")
    with pytest.raises(InputError):
        Morphism.from_text(c2, c2, "0 -> x\n1 -> 1\n")
    with pytest.raises(InputError):
        Morphism.from_text(c2, c2, "0 -> 0\n0 -> 1\n1 -> 1\n")
    with pytest.raises(InputError):
        Morphism.from_text(c2, c2, "0 -> 0\n")
    with pytest.raises(InputError):
        Morphism.from_text(c2, c2, "0 -> 0\n2 -> 1\n")
    with pytest.raises(InputError):
        Morphism.from_text(c2, c2, "0 -> 0\n1 -> 5\n")


def test_enumerate_matches_brute_force_on_small_pairs():
    smalls = list(enumerate_semigroups(2)) + list(enumerate_semigroups(3, up_to_iso=True))
    for source in smalls[:8]:
        for target in smalls[:8]:
            found = {f.mapping for f in enumerate_morphisms(source, target)}
            expected = set()
            for mapping in product(range(target.order), repeat=source.order):
                if all(
                    target.mul(mapping[a], mapping[b]) == mapping[source.mul(a, b)]
                    for a in range(source.order)
                    for b in range(source.order)
                ):
                    expected.add(mapping)
            assert found == expected


def test_enumerate_two_one_equals_posthoc_filter():
    pool = [
        s
        for s in enumerate_semigroups(3, up_to_iso=True)
        if is_left_ample(s)
    ]
    for source in pool:
        for target in pool:
            direct = {f.mapping for f in enumerate_morphisms(source, target, two_one=True)}
            posthoc = {
                f.mapping
                for f in enumerate_morphisms(source, target)
                if f.is_two_one()
            }
            assert direct == posthoc


def test_enumerate_two_one_requires_ample_endpoints():
    with pytest.raises(InputError):
        list(enumerate_morphisms(left_zero(2), cyclic_group(2), two_one=True))
    with pytest.raises(InputError):
        list(enumerate_morphisms(cyclic_group(2), left_zero(2), two_one=True))


def test_enumerated_morphisms_are_valid_and_ordered():
    s, t = chain_semilattice(2), chain_semilattice(3)
    maps = [f.mapping for f in enumerate_morphisms(s, t)]
    assert maps == sorted(maps)
    for mapping in maps:
        Morphism(s, t, mapping)
