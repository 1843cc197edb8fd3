"""Tests for strong semilattices of semigroups and hull assembly."""

from itertools import combinations

import pytest

from iquotients.assembly import (
    SemilatticeDiagram,
    ample_semilattice_report,
    assemble_hull_semilattice,
    build_strong_semilattice,
    extract_strong_structure,
    load_diagram,
)
from iquotients.enumeration import enumerate_semigroups
from iquotients.errors import ConsistencyError, InputError
from iquotients.inverse import recognize_inverse
from iquotients.iorder import is_straight
from iquotients.morphisms import Morphism
from iquotients.samples import (
    chain_semilattice,
    cyclic_group,
    left_zero,
    null_semigroup,
)
from iquotients.tables import FiniteSemigroup, are_isomorphic


def c2_over_point():
    y = chain_semilattice(2)
    c1, c2 = cyclic_group(1), cyclic_group(2)
    return SemilatticeDiagram(
        y, {0: c1, 1: c2}, {(1, 0): Morphism(c2, c1, [0, 0])}
    )


def clifford_two_chain():
    y = chain_semilattice(2)
    c2 = cyclic_group(2)
    return SemilatticeDiagram(
        y, {0: c2, 1: c2}, {(1, 0): Morphism(c2, c2, [0, 1])}
    )


def refusing_diagram():
    source = FiniteSemigroup([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 1, 2, 3]])
    target = FiniteSemigroup([[0, 0, 0], [0, 0, 0], [0, 1, 2]])
    y = chain_semilattice(2)
    return SemilatticeDiagram(
        y, {0: target, 1: source}, {(1, 0): Morphism(source, target, [0, 1, 1, 2])}
    )


def test_diagram_requires_a_semilattice():
    c2 = cyclic_group(2)
    with pytest.raises(InputError):
        SemilatticeDiagram(c2, {0: c2, 1: c2}, {})


def test_diagram_requires_one_component_per_vertex():
    y = chain_semilattice(2)
    c2 = cyclic_group(2)
    with pytest.raises(InputError):
        SemilatticeDiagram(y, {0: c2}, {})
    with pytest.raises(InputError):
        SemilatticeDiagram(y, {0: c2, 1: c2, 2: c2}, {})


def test_diagram_requires_every_connector():
    y = chain_semilattice(2)
    c2 = cyclic_group(2)
    with pytest.raises(InputError):
        SemilatticeDiagram(y, {0: c2, 1: c2}, {})


def test_diagram_rejects_order_violating_connectors():
    y = chain_semilattice(2)
    c1, c2 = cyclic_group(1), cyclic_group(2)
    with pytest.raises(InputError):
        SemilatticeDiagram(
            y,
            {0: c1, 1: c2},
            {(1, 0): Morphism(c2, c1, [0, 0]), (0, 1): Morphism(c1, c2, [0])},
        )


def test_diagram_rejects_component_mismatch():
    y = chain_semilattice(2)
    c1, c2 = cyclic_group(1), cyclic_group(2)
    with pytest.raises(InputError):
        SemilatticeDiagram(y, {0: c1, 1: c2}, {(1, 0): Morphism(c2, c2, [0, 1])})


def test_diagram_rejects_non_identity_diagonal():
    y = chain_semilattice(2)
    c1, c2 = cyclic_group(1), cyclic_group(2)
    with pytest.raises(InputError):
        SemilatticeDiagram(
            y,
            {0: c1, 1: c2},
            {(1, 0): Morphism(c2, c1, [0, 0]), (1, 1): Morphism(c2, c2, [0, 0])},
        )
    SemilatticeDiagram(
        y,
        {0: c1, 1: c2},
        {(1, 0): Morphism(c2, c1, [0, 0]), (1, 1): Morphism(c2, c2, [0, 1])},
    )


def test_diagram_rejects_non_commuting_composites():
    y = chain_semilattice(3)
    c2 = cyclic_group(2)
    ident = Morphism(c2, c2, [0, 1])
    collapse = Morphism(c2, c2, [0, 0])
    with pytest.raises(InputError):
        SemilatticeDiagram(
            y,
            {0: c2, 1: c2, 2: c2},
            {(2, 1): ident, (1, 0): ident, (2, 0): collapse},
        )


def test_comparable_pairs_of_a_chain():
    y = chain_semilattice(3)
    c2 = cyclic_group(2)
    ident = Morphism(c2, c2, [0, 1])
    d = SemilatticeDiagram(
        y,
        {0: c2, 1: c2, 2: c2},
        {(2, 1): ident, (1, 0): ident, (2, 0): ident},
    )
    assert d.comparable_pairs() == [(1, 0), (2, 0), (2, 1)]
    assert d.connector(2, 2).mapping == (0, 1)


def test_build_group_over_point():
    built = build_strong_semilattice(c2_over_point())
    s = built.semigroup
    assert s.table == ((0, 0, 0), (0, 1, 2), (0, 2, 1))
    assert s.names == ("0@0", "0@1", "1@1")
    assert built.vertex_of == (0, 1, 1)
    assert built.local_of == (0, 0, 1)
    assert built.part(0) == (0,)
    assert built.part(1) == (1, 2)
    assert built.global_index(1, 1) == 2


def test_build_clifford_chain_is_inverse():
    built = build_strong_semilattice(clifford_two_chain())
    assert built.semigroup.order == 4
    assert recognize_inverse(built.semigroup)


def test_extract_recovers_a_chain_of_monoids():
    p = FiniteSemigroup([[0, 0, 0], [0, 1, 1], [0, 1, 2]])
    result = extract_strong_structure(p, [[0], [1, 2]])
    d = result.diagram
    assert d.y.is_semilattice()
    assert d.components[0].order == 1
    assert d.components[1].order == 2
    assert d.connector(1, 0).mapping == (0, 0)
    assert result.to_built == (0, 1, 2)
    assert result.from_built == (0, 1, 2)
    rebuilt = result.built.semigroup
    for a in range(p.order):
        for b in range(p.order):
            assert result.to_built[p.mul(a, b)] == rebuilt.mul(
                result.to_built[a], result.to_built[b]
            )


def test_extract_rejects_bad_partitions():
    p = chain_semilattice(3)
    with pytest.raises(InputError):
        extract_strong_structure(p, [[0], [1]])
    with pytest.raises(InputError):
        extract_strong_structure(p, [[0, 1], [1, 2]])
    with pytest.raises(InputError):
        extract_strong_structure(p, [[0, 2], [1]])


def test_extract_rejects_non_semilattice_part_products():
    with pytest.raises(InputError):
        extract_strong_structure(cyclic_group(2), [[0], [1]])
    with pytest.raises(InputError):
        extract_strong_structure(left_zero(2), [[0], [1]])


def test_extract_rejects_non_monoid_parts():
    with pytest.raises(InputError):
        extract_strong_structure(null_semigroup(2), [[0, 1]])


def test_extract_rejects_wandering_part_identities():
    p = FiniteSemigroup([[0, 0, 0], [0, 1, 0], [0, 0, 2]])
    with pytest.raises(InputError) as err:
        extract_strong_structure(p, [[1], [0, 2]])
    assert "part identities are not closed" in str(err.value)


def test_extract_round_trips_a_built_diagram():
    built = build_strong_semilattice(c2_over_point())
    result = extract_strong_structure(
        built.semigroup, [built.part(0), built.part(1)]
    )
    assert result.to_built == (0, 1, 2)
    assert result.diagram.components[1].table == cyclic_group(2).table
    assert result.diagram.connector(1, 0).mapping == (0, 0)


def test_extract_never_breaks_its_own_guarantees():
    blocks = list(range(3))
    partitions = [[[0, 1, 2]]]
    for solo in blocks:
        rest = [b for b in blocks if b != solo]
        partitions.append([[solo], rest])
    for s in enumerate_semigroups(3):
        for parts in partitions:
            try:
                result = extract_strong_structure(s, parts)
            except InputError:
                continue
            rebuilt = result.built.semigroup
            for a in range(s.order):
                for b in range(s.order):
                    assert result.to_built[s.mul(a, b)] == rebuilt.mul(
                        result.to_built[a], result.to_built[b]
                    )


def test_ample_report_on_a_clifford_chain():
    report = ample_semilattice_report(clifford_two_chain())
    assert report == {
        "left_ample": True,
        "rstar_matches_components": True,
        "lc_iff_connectors_preserve": True,
    }


def test_ample_report_flags_non_preserving_connectors():
    report = ample_semilattice_report(refusing_diagram())
    assert report == {
        "left_ample": True,
        "rstar_matches_components": True,
        "lc_iff_connectors_preserve": False,
    }


def test_ample_report_requires_ample_components():
    y = chain_semilattice(2)
    lz = left_zero(2)
    d = SemilatticeDiagram(
        y,
        {0: cyclic_group(1), 1: lz},
        {(1, 0): Morphism(lz, cyclic_group(1), [0, 0])},
    )
    with pytest.raises(InputError):
        ample_semilattice_report(d)


def test_ample_report_requires_plus_preserving_connectors():
    t = FiniteSemigroup([[0, 0, 0], [0, 0, 0], [0, 1, 2]])
    d = SemilatticeDiagram(
        chain_semilattice(2),
        {0: t, 1: t},
        {(1, 0): Morphism(t, t, [0, 0, 2])},
    )
    with pytest.raises(InputError):
        ample_semilattice_report(d)


def test_assemble_group_over_point():
    result = assemble_hull_semilattice(c2_over_point())
    assert result.iso
    assert result.hulls[0].hull.order == 1
    assert result.hulls[1].hull.order == 2
    assert result.quotient_built.semigroup.order == 3
    assert result.view.order == 3
    assert is_straight(result.member_embedding)
    assert are_isomorphic(result.view.semigroup, result.built.semigroup)


def test_assemble_clifford_chain_matches_itself():
    result = assemble_hull_semilattice(clifford_two_chain())
    assert result.iso
    assert result.view.order == 4
    assert are_isomorphic(result.view.semigroup, result.built.semigroup)
    assert result.hull_connectors[(1, 0)].mapping == (0, 1)


def test_assemble_refuses_non_preserving_connectors():
    with pytest.raises(InputError) as err:
        assemble_hull_semilattice(refusing_diagram())
    assert "connector 1 -> 0 does not preserve (LC) witnesses" in str(err.value)
    assert "(1, 2, 0)" in str(err.value)


def test_assemble_requires_ample_components():
    y = chain_semilattice(2)
    lz = left_zero(2)
    d = SemilatticeDiagram(
        y,
        {0: cyclic_group(1), 1: lz},
        {(1, 0): Morphism(lz, cyclic_group(1), [0, 0])},
    )
    with pytest.raises(InputError):
        assemble_hull_semilattice(d)


def write_diagram_files(tmp_path):
    (tmp_path / "y.txt").write_text(chain_semilattice(2).to_text())
    (tmp_path / "comp0.txt").write_text(cyclic_group(1).to_text())
    (tmp_path / "comp1.txt").write_text(cyclic_group(2).to_text())
    (tmp_path / "conn.txt").write_text("0 -> 0\n1 -> 0\n")
    body = (
        "# a group collapsing onto a point\n"
        "semilattice y.txt\n"
        "component 0 comp0.txt\n"
        "component 1 comp1.txt\n"
        "connector 1 0 conn.txt\n"
    )
    path = tmp_path / "diagram.txt"
    path.write_text(body)
    return path


def test_load_diagram_round_trip(tmp_path):
    d = load_diagram(str(write_diagram_files(tmp_path)))
    built = build_strong_semilattice(d)
    assert built.semigroup.table == ((0, 0, 0), (0, 1, 2), (0, 2, 1))


def test_load_diagram_errors(tmp_path):
    path = write_diagram_files(tmp_path)
    cases = [
        "component 0 comp0.txt\n",
        "semilattice y.txt\nsemilattice y.txt\n",
        "semilattice y.txt\ncomponent 0 comp0.txt\ncomponent 0 comp1.txt\n",
        "semilattice y.txt\ncomponent 0 comp0.txt\n",
        "semilattice y.txt\ncomponent 0 comp0.txt\ncomponent 1 comp1.txt\n"
        "connector 5 0 conn.txt\n",
        "semilattice y.txt\ncomponent x comp0.txt\n",
        "frobnicate y.txt\n",
        "semilattice missing.txt\n",
    ]
    for body in cases:
        bad = tmp_path / "bad.txt"
        bad.write_text(body)
        with pytest.raises(InputError):
            load_diagram(str(bad))
