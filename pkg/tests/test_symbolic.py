"""Symbolic infinite semigroups: closed forms validated on finite windows."""

import pytest

from iquotients.errors import InputError
from iquotients.symbolic import (
    SymbolicSemigroup,
    additive_naturals,
    bicyclic,
    free_monoid_rank2,
)


def test_kind_and_window_validation():
    with pytest.raises(InputError):
        SymbolicSemigroup("integers")
    with pytest.raises(InputError):
        SymbolicSemigroup("nat", 0)
    with pytest.raises(InputError):
        SymbolicSemigroup("nat", True)


def test_membership():
    q = bicyclic()
    assert q.contains((3, 5))
    assert not q.contains((3, -1))
    assert not q.contains(3)
    n = additive_naturals()
    assert n.contains(0) and not n.contains(-1) and not n.contains(True)
    f = free_monoid_rank2()
    assert f.contains("xyyx") and f.contains("") and not f.contains("abc")


def test_bicyclic_product_closed_form():
    q = bicyclic()
    assert q.multiply((1, 2), (3, 4)) == (2, 4)
    assert q.multiply((0, 1), (1, 0)) == (0, 0)
    assert q.multiply((1, 0), (0, 1)) == (1, 1)
    assert q.multiply((0, 0), (5, 7)) == (5, 7)


def test_bicyclic_product_is_associative_on_window():
    q = bicyclic(3)
    elems = q.elements()
    for x in elems:
        for y in elems:
            for z in elems:
                assert q.multiply(q.multiply(x, y), z) == q.multiply(
                    x, q.multiply(y, z)
                )


def test_identity_elements():
    assert bicyclic().identity_element() == (0, 0)
    assert additive_naturals().identity_element() == 0
    assert free_monoid_rank2().identity_element() == ""


def test_idempotents():
    q = bicyclic(4)
    assert q.idempotents() == [(a, a) for a in range(5)]
    assert additive_naturals(5).idempotents() == [0]
    assert free_monoid_rank2(2).idempotents() == [""]


def test_inversion():
    q = bicyclic()
    assert q.has_inversion
    assert q.invert((2, 5)) == (5, 2)
    x = (3, 1)
    assert q.multiply(q.multiply(x, q.invert(x)), x) == x
    with pytest.raises(InputError):
        additive_naturals().invert(1)


def test_plus_of():
    q = bicyclic()
    assert q.plus_of((3, 7)) == (3, 3)
    assert additive_naturals().plus_of(5) == 0
    assert free_monoid_rank2().plus_of("xy") == ""


def window_pairs(q, bound):
    return [(a, b) for a in range(bound) for b in range(bound)]


def test_bicyclic_green_closed_forms_match_windowed_divisibility():
    # verdicts come from coordinates; cross-check against an explicit
    # search for multipliers within a larger window
    q = bicyclic(12)
    probes = window_pairs(q, 4)
    elems = q.elements()

    def divides_r(x, y):
        # x in yQ?
        return x == y or any(q.multiply(y, u) == x for u in elems)

    def divides_l(x, y):
        return x == y or any(q.multiply(u, y) == x for u in elems)

    for x in probes:
        for y in probes:
            assert q.leq_r(x, y) == divides_r(x, y), (x, y)
            assert q.leq_l(x, y) == divides_l(x, y), (x, y)
            assert q.r_related(x, y) == (divides_r(x, y) and divides_r(y, x))
            assert q.l_related(x, y) == (divides_l(x, y) and divides_l(y, x))
            assert q.h_related(x, y) == (q.r_related(x, y) and q.l_related(x, y))


def test_bicyclic_is_bisimple():
    q = bicyclic(5)
    for x in window_pairs(q, 3):
        for y in window_pairs(q, 3):
            assert q.d_related(x, y)
            assert q.j_related(x, y)


def test_rstar_closed_forms():
    q = bicyclic()
    # inverse semigroup: Rstar is R, the first-coordinate fibers
    assert q.rstar_related((2, 5), (2, 0))
    assert not q.rstar_related((2, 5), (3, 5))
    # cancellative monoids: one class
    n = additive_naturals()
    assert n.rstar_related(0, 17)
    f = free_monoid_rank2()
    assert f.rstar_related("", "xyyx")


def test_nat_relations_are_trivial():
    n = additive_naturals()
    assert n.r_related(3, 3) and not n.r_related(3, 4)
    assert n.leq_r(5, 3) and not n.leq_r(3, 5)
    assert n.d_related(2, 2) and not n.d_related(2, 3)


def test_free2_green_relations_are_trivial():
    f = free_monoid_rank2()
    assert not f.r_related("xy", "yx")
    assert f.leq_r("xyyx", "xy")  # prefix order
    assert f.leq_l("xyyx", "yx")  # suffix order
    assert not f.leq_l("xyyx", "xy")


def test_ideal_membership_predicates():
    q = bicyclic()
    assert q.in_left_ideal((4, 7), (0, 7))
    assert not q.in_left_ideal((4, 6), (0, 7))
    assert q.in_right_ideal((4, 6), (4, 0))
    n = additive_naturals()
    assert n.in_left_ideal(7, 3) and not n.in_left_ideal(3, 7)


def test_lc_witness_closed_forms_give_true_meets():
    q = bicyclic(10)
    probes = window_pairs(q, 3)
    check = window_pairs(q, 6)
    for a in probes:
        for b in probes:
            w = q.lc_witness(a, b)
            assert w == (0, max(a[1], b[1]))
            for x in check:
                assert q.in_left_ideal(x, w) == (
                    q.in_left_ideal(x, a) and q.in_left_ideal(x, b)
                )
    n = additive_naturals(10)
    for a in range(4):
        for b in range(4):
            w = n.lc_witness(a, b)
            assert w == max(a, b)
            for x in range(8):
                assert n.in_left_ideal(x, w) == (
                    n.in_left_ideal(x, a) and n.in_left_ideal(x, b)
                )


def test_free2_lacks_lc():
    f = free_monoid_rank2()
    assert not f.has_lc()
    assert f.lc_witness("x", "y") is None
    assert f.lc_witness("xyx", "yx") == "xyx"
    assert f.lc_witness("yx", "xyx") == "xyx"
    assert bicyclic().has_lc() and additive_naturals().has_lc()


def test_cancellativity_flags():
    assert not bicyclic().is_cancellative()
    assert additive_naturals().is_cancellative()
    assert free_monoid_rank2().is_cancellative()


def test_parse_format_round_trips():
    q = bicyclic()
    for x in [(0, 0), (3, 17), (5, 0)]:
        assert q.parse_element(q.format_element(x)) == x
    n = additive_naturals()
    assert n.parse_element(n.format_element(12)) == 12
    f = free_monoid_rank2()
    for w in ["", "x", "xyyx"]:
        assert f.parse_element(f.format_element(w)) == w
    assert f.format_element("") == "1"


def test_parse_errors():
    q = bicyclic()
    with pytest.raises(InputError):
        q.parse_element("3,4")
    with pytest.raises(InputError):
        q.parse_element("(3;4)")
    with pytest.raises(InputError):
        q.parse_element("(x,4)")
    with pytest.raises(InputError):
        q.parse_element("(-1,4)")
    with pytest.raises(InputError):
        additive_naturals().parse_element("x")
    with pytest.raises(InputError):
        free_monoid_rank2().parse_element("abc")


def test_elements_window_sizes():
    assert len(bicyclic(3).elements()) == 16
    assert len(additive_naturals(9).elements()) == 10
    assert len(free_monoid_rank2(2).elements()) == 7  # 1 + 2 + 4 words


def test_with_window():
    q = bicyclic(5)
    assert q.with_window(9).window == 9
    assert q.with_window(9).kind == "bicyclic"


def test_operations_reject_foreign_elements():
    q = bicyclic()
    with pytest.raises(InputError):
        q.multiply((0, 1), 4)
    with pytest.raises(InputError):
        q.leq_r("x", (0, 0))
