"""Partial bijections and their closure under composition and inversion."""

import pytest
from hypothesis import given, strategies as st

from iquotients.charts import PartialBijection, closure
from iquotients.errors import InputError, ResourceError
from iquotients.inverse import brandt, recognize_inverse
from iquotients.samples import cyclic_group
from iquotients.tables import are_isomorphic

from _oracles import oracle_chart_compose


def charts(ground=4):
    """Hypothesis strategy for partial bijections on 0..ground-1."""

    def build(flags):
        targets = [t for t, keep in enumerate(flags) if keep]
        entries = [
            (s, t) for s, t in zip(sorted(range(len(flags))), targets)
        ]
        # spread sources out deterministically from the same flags
        sources = [s for s, keep in enumerate(flags) if keep]
        return PartialBijection(len(flags), tuple(zip(sources, targets)))

    return st.lists(
        st.booleans(), min_size=ground, max_size=ground
    ).map(build)


def test_construction_and_lookups():
    f = PartialBijection(4, ((0, 2), (3, 1)))
    assert f.domain() == (0, 3)
    assert f.image() == (1, 2)
    assert f(0) == 2
    assert f(3) == 1
    with pytest.raises(InputError):
        f(1)


def test_rejects_non_injective_entries():
    with pytest.raises(InputError):
        PartialBijection(3, ((0, 1), (2, 1)))
    with pytest.raises(InputError):
        PartialBijection(3, ((0, 1), (0, 2)))
    with pytest.raises(InputError):
        PartialBijection(2, ((0, 5),))


def test_identity_and_empty():
    ident = PartialBijection.identity(3)
    empty = PartialBijection.empty(3)
    assert ident.domain() == (0, 1, 2)
    assert empty.domain() == ()
    f = PartialBijection(3, ((0, 2), (1, 0)))
    assert ident.compose(f) == f
    assert f.compose(ident) == f
    assert f.compose(empty) == empty
    assert empty.compose(f) == empty


def test_compose_is_left_to_right():
    f = PartialBijection(3, ((0, 1),))
    g = PartialBijection(3, ((1, 2),))
    assert f.compose(g) == PartialBijection(3, ((0, 2),))
    assert g.compose(f).domain() == ()
    assert (f * g)(0) == 2


def test_invert_round_trip():
    f = PartialBijection(4, ((0, 2), (1, 3)))
    g = f.invert()
    assert g.domain() == (2, 3)
    assert f.compose(g) == PartialBijection(4, ((0, 0), (1, 1)))
    assert g.compose(f) == PartialBijection(4, ((2, 2), (3, 3)))


def test_compose_rejects_mismatched_grounds():
    f = PartialBijection(2, ((0, 1),))
    g = PartialBijection(3, ((0, 1),))
    with pytest.raises(InputError):
        f.compose(g)


@given(charts(), charts())
def test_compose_matches_dict_model(f, g):
    want = oracle_chart_compose(
        {s: f(s) for s in f.domain()}, {s: g(s) for s in g.domain()}
    )
    got = f.compose(g)
    assert {s: got(s) for s in got.domain()} == want


@given(charts(5), charts(5), charts(5))
def test_compose_is_associative(f, g, h):
    assert f.compose(g).compose(h) == f.compose(g.compose(h))


@given(charts(5))
def test_double_inversion(f):
    assert f.invert().invert() == f
    # f f^-1 f = f, the defining identity of an inverse of a chart
    assert f.compose(f.invert()).compose(f) == f


def test_text_round_trip():
    f = PartialBijection(4, ((0, 2), (3, 1)))
    assert PartialBijection.from_text(f.to_text()) == f
    e = PartialBijection.empty(2)
    assert PartialBijection.from_text(e.to_text()) == e


def test_from_text_errors():
    with pytest.raises(InputError):
        PartialBijection.from_text("")
    with pytest.raises(InputError):
        PartialBijection.from_text("3; 0->x")


def test_tokens_are_distinct_for_distinct_charts():
    f = PartialBijection(3, ((0, 1),))
    g = PartialBijection(3, ((1, 0),))
    assert f.token() != g.token()
    assert PartialBijection.empty(3).token() == "~"


def test_closure_of_single_shift_is_the_five_element_brandt_semigroup():
    # 0 -> 1 on two points: composing with its inverse yields both partial
    # identities, the reverse shift, and the empty chart
    seed = PartialBijection(2, ((0, 1),))
    semigroup, elements = closure([seed], include_inverses=True)
    assert semigroup.order == 5
    assert are_isomorphic(semigroup, brandt(cyclic_group(1), 2).semigroup)
    assert recognize_inverse(semigroup).ok


def test_closure_without_inverses_can_be_smaller():
    seed = PartialBijection(2, ((0, 1),))
    semigroup, elements = closure([seed])
    # the shift alone squares to the empty chart and stops there
    assert semigroup.order == 2


def test_closure_of_identity_is_trivial():
    semigroup, elements = closure([PartialBijection.identity(3)])
    assert semigroup.order == 1


def test_closure_budget():
    seed = PartialBijection(2, ((0, 1),))
    with pytest.raises(ResourceError) as err:
        closure([seed], include_inverses=True, budget=3)
    assert err.value.partial_size is not None
    assert err.value.partial_size >= 3


def test_closure_rejects_mixed_grounds():
    with pytest.raises(InputError):
        closure([PartialBijection.identity(2), PartialBijection.identity(3)])


def test_closure_product_matches_chart_composition():
    seed = PartialBijection(2, ((0, 1),))
    semigroup, elements = closure([seed], include_inverses=True)
    for i, f in enumerate(elements):
        for j, g in enumerate(elements):
            assert elements[semigroup.mul(i, j)] == f.compose(g)
