"""Enumeration of faithful irreducibles and the Table 1 fixture."""

import pytest

from lieforge.charlab import equivalent
from lieforge.reps import (
    class_key,
    dominant_weights_up_to,
    enumerate_composite,
    enumerate_simple,
    outer_orbit,
    simple_types,
    table1_fixture,
    table1_not_self_dual,
    verify_table1,
)
from lieforge.rootsys import SemisimpleAlgebra, SimpleType
from lieforge.weights import FSType, IrreducibleRep, character, weyl_dim


def _labels(n):
    return [c.label for c in enumerate_composite(n)]


def test_small_counts():
    assert _labels(2) == ["2A1"]
    assert sorted(_labels(3)) == ["3A1", "3A2"]
    assert sorted(_labels(4)) == ["2A1x2A1", "4A1", "4A3", "4C2"]
    assert len(enumerate_composite(7)) == 4
    assert len(enumerate_composite(8)) == 11


@pytest.mark.parametrize("n", [0, 1, 9])
def test_composite_range(n):
    with pytest.raises(ValueError):
        enumerate_composite(n)


@pytest.mark.parametrize("n", [0, 65])
def test_simple_range(n):
    with pytest.raises(ValueError):
        enumerate_simple(n)


def _box(rank, cap):
    out = [()]
    for _ in range(rank):
        out = [w + (k,) for w in out for k in range(cap + 1)]
    return out


def test_enumeration_closed_by_coordinate_bound():
    dim_max = 8
    for t in simple_types(dim_max):
        alg = SemisimpleAlgebra((t,))
        cap = dim_max if t.rank <= 3 else 2
        brute = {w for w in _box(t.rank, cap)
                 if any(w) and weyl_dim(IrreducibleRep(alg, w)) <= dim_max}
        assert set(dominant_weights_up_to(t, dim_max)) == brute
        # every weight on the outer face of the box is already too large
        for w in _box(t.rank, cap):
            if max(w, default=0) == cap:
                assert weyl_dim(IrreducibleRep(alg, w)) > dim_max


def test_types_missing_from_the_list_have_no_small_irreducible():
    listed = {str(t) for t in simple_types(8)}
    for name in ["B4", "C5", "D5", "A8"]:
        t = SimpleType.parse(name)
        assert name not in listed
        alg = SemisimpleAlgebra((t,))
        for i in range(t.rank):
            w = tuple(int(j == i) for j in range(t.rank))
            assert weyl_dim(IrreducibleRep(alg, w)) > 8


def test_classes_are_consistent():
    for n in range(2, 9):
        for c in enumerate_composite(n):
            ch = character(c.rep)
            assert c.dim == n == weyl_dim(c.rep) == len(ch)
            assert c.rank == c.algebra.rank
            assert c.rep.faithful
            assert all(x == 0 for x in ch.total())
            for v, m in ch.items():
                for i in range(c.algebra.rank):
                    assert ch.multiplicity(c.algebra.reflect(v, i)) == m
            assert c.rep.highest in c.outer_orbit
            assert c.outer_orbit_tag == max(c.outer_orbit)


def test_lie_irreducible_ranks_at_eight():
    classes = enumerate_composite(8)
    rank1 = [c.label for c in classes if c.rank == 1]
    rank2 = sorted(c.label for c in classes if c.rank == 2)
    assert rank1 == ["8A1"]
    assert rank2 == ["2A1x4A1", "8A2"]


def test_outer_orbits():
    a3 = SimpleType("A", 3)
    assert outer_orbit(a3, (1, 0, 0)) == ((0, 0, 1), (1, 0, 0))
    d4 = SimpleType("D", 4)
    assert outer_orbit(d4, (1, 0, 0, 0)) == ((1, 0, 0, 0),)
    assert outer_orbit(d4, (0, 0, 0, 1)) == ((0, 0, 0, 1), (0, 0, 1, 0))
    assert len(outer_orbit(d4, (1, 0, 0, 0), full_triality=True)) == 3
    assert outer_orbit(SimpleType("C", 3), (1, 0, 0)) == ((1, 0, 0),)


def test_class_key_ignores_factor_order():
    a = IrreducibleRep(SemisimpleAlgebra.of("A1", "C2"), (1, 1, 0))
    b = IrreducibleRep(SemisimpleAlgebra.of("C2", "A1"), (1, 0, 1))
    assert class_key(a) == class_key(b)


def test_table1_fixture_rows():
    rows = table1_fixture()
    assert [r.row for r in rows] == list(range(1, 16))
    printed = [r for r in rows if r.character is not None]
    assert len(printed) == 9
    for r in rows:
        assert weyl_dim(r.rep) == r.dim
        if r.character is not None:
            assert equivalent(character(r.rep), r.character)
    assert table1_not_self_dual() == {4, 11, 15}


def test_table1_self_duality_column():
    from lieforge.weights import fs_type

    rows = {r.row: r for r in table1_fixture()}
    nsd = {i for i, r in rows.items() if fs_type(r.rep) is FSType.NOT_SELF_DUAL}
    assert nsd == {4, 11, 15}
    assert fs_type(rows[12].rep) is FSType.SYMPLECTIC
    assert fs_type(rows[3].rep) is FSType.ORTHOGONAL


def test_verify_table1_passes():
    rep = verify_table1()
    assert rep.passed, [c for c in rep.checks if not c.passed]


def test_enumeration_is_deterministic():
    a = [str(c) for c in enumerate_composite(8)]
    b = [str(c) for c in enumerate_composite(8)]
    assert a == b
