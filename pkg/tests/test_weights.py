"""Weyl dimension, Freudenthal characters, plethysms, decomposition."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from lieforge.reps import enumerate_composite, enumerate_simple
from lieforge.rootsys import parse_algebra
from lieforge.weights import (
    FSType,
    IrreducibleRep,
    NotACharacter,
    WeightMultiset,
    character,
    decompose,
    dominant_multiplicities,
    dual,
    fs_type,
    irrep,
    is_self_dual,
    parse_weights,
    sym2,
    tensor,
    tensor_external,
    trivial,
    trivial_multiplicity,
    wedge2,
    wedge3,
    weyl_dim,
)

import oracles


@pytest.mark.parametrize("alg,hw,dim", [
    ("A1", (6,), 7), ("A1", (7,), 8), ("A2", (1, 1), 8), ("A2", (2, 0), 6), ("B3", (1, 0, 0), 7),
    ("B3", (0, 0, 1), 8), ("C4", (1, 0, 0, 0), 8), ("D4", (1, 0, 0, 0), 8), ("D4", (0, 0, 0, 1), 8),
    ("G2", (1, 0), 7), ("G2", (0, 1), 14), ("A6", (1, 0, 0, 0, 0, 0), 7), ("C2", (0, 1), 5),
    ("A1xA1", (1, 3), 8), ("A1xC2", (1, 1, 0), 8), ("D5", (0, 0, 0, 0, 1), 16),
])
def test_weyl_dim_known(alg, hw, dim):
    assert weyl_dim(irrep(alg, *hw)) == dim


def test_weyl_dim_high_rank():
    hw = [1] + [0] * 62
    assert weyl_dim(irrep("A63", *hw)) == 64
    assert weyl_dim(irrep("B6", 0, 0, 0, 0, 0, 1)) == 64


def test_character_size_matches_weyl_dim():
    for c in enumerate_simple(20):
        assert len(character(c.rep)) == c.dim


def test_freudenthal_against_tensor_oracle():
    seen = 0
    for name, cap in [("A1", 20), ("A2", 5), ("B2", 4)]:
        for w in oracles.dominant_box(name, cap):
            rep = irrep(name, *w)
            d = weyl_dim(rep)
            if max(w) == cap:
                assert d > 20
            if d > 20:
                continue
            seen += 1
            assert dict(character(rep).counts()) == dict(oracles.tensor_character(name, w))
    assert seen == 39


def test_characters_are_weyl_stable_and_dominant_part_agrees():
    for c in enumerate_simple(10):
        ch = character(c.rep)
        alg = c.algebra
        for v, m in ch.items():
            for i in range(alg.rank):
                assert ch.multiplicity(alg.reflect(v, i)) == m
        dom = dominant_multiplicities(c.rep)
        assert dom == {v: m for v, m in ch.items() if all(x >= 0 for x in v)}


def test_a2_adjoint_zero_weight():
    assert character(irrep("A2", 1, 1)).multiplicity((0, 0)) == 2


def test_decompose_examples():
    a2 = parse_algebra("A2")
    std = character(irrep("A2", 1, 0))
    assert sorted(decompose(tensor(std, std), a2)) == [((0, 1), 1), ((2, 0), 1)]
    assert sorted(decompose(sym2(std), a2)) == [((2, 0), 1)]
    assert sorted(decompose(wedge2(std), a2)) == [((0, 1), 1)]
    with pytest.raises(NotACharacter):
        decompose(WeightMultiset([(1, 0)]), a2)


def test_plethysm_sizes():
    x = character(irrep("C2", 1, 0))
    n = len(x)
    assert len(sym2(x)) == n * (n + 1) // 2
    assert len(wedge2(x)) == n * (n - 1) // 2
    assert len(wedge3(x)) == n * (n - 1) * (n - 2) // 6
    assert sym2(x) + wedge2(x) == tensor(x, x)


@pytest.mark.parametrize("alg,hw,want", [
    ("A6", (1, 0, 0, 0, 0, 0), FSType.NOT_SELF_DUAL), ("B3", (1, 0, 0), FSType.ORTHOGONAL),
    ("C4", (1, 0, 0, 0), FSType.SYMPLECTIC), ("A1", (1,), FSType.SYMPLECTIC),
    ("A1", (2,), FSType.ORTHOGONAL), ("G2", (1, 0), FSType.ORTHOGONAL),
    ("A1xA1", (1, 1), FSType.ORTHOGONAL), ("A1xC2", (1, 1, 0), FSType.ORTHOGONAL),
])
def test_fs_type(alg, hw, want):
    assert fs_type(irrep(alg, *hw)) is want


def test_fs_type_matches_self_duality():
    for c in enumerate_simple(16):
        nsd = fs_type(c.rep) is FSType.NOT_SELF_DUAL
        assert nsd == (not is_self_dual(character(c.rep)))


def test_trivial_multiplicity_counts_constituents():
    b3 = irrep("B3", 1, 0, 0)
    x = character(b3)
    assert trivial_multiplicity(sym2(x), b3.algebra) == 1
    assert trivial_multiplicity(wedge2(x), b3.algebra) == 0
    # the adjoint of A2 has a 2-dim zero weight space but one trivial summand in its square
    adj = irrep("A2", 1, 1)
    assert trivial_multiplicity(tensor(character(adj), character(adj)), adj.algebra) == 1


def test_irrep_validation():
    with pytest.raises(ValueError):
        irrep("A2", 1)
    with pytest.raises(ValueError):
        irrep("A2", -1, 0)
    assert not IrreducibleRep(parse_algebra("A1xA1"), (1, 0)).faithful
    assert IrreducibleRep(parse_algebra("A1xA1"), (1, 1)).faithful


def test_tensor_rank_mismatch():
    with pytest.raises(ValueError):
        tensor(trivial(1), trivial(2))


def test_decompose_conserves_dimension_on_random_pairs():
    pool = [c for n in range(2, 9) for c in enumerate_composite(n)]
    rng = random.Random(7)
    for _ in range(100):
        a, b = rng.choice(pool), rng.choice(pool)
        if a.algebra == b.algebra:
            alg = a.algebra
            prod = tensor(character(a.rep), character(b.rep))
        else:
            alg = parse_algebra(f"{a.algebra}x{b.algebra}")
            prod = tensor_external(character(a.rep), character(b.rep))
        parts = decompose(prod, alg)
        assert sum(m * weyl_dim(IrreducibleRep(alg, w)) for w, m in parts) == a.dim * b.dim


multisets = st.integers(1, 3).flatmap(
    lambda r: st.lists(st.tuples(*[st.integers(-5, 5)] * r), min_size=1, max_size=12)
).map(WeightMultiset)


@given(multisets)
@settings(max_examples=100)
def test_dual_is_involution(x):
    assert dual(dual(x)) == x
    assert len(dual(x)) == len(x)


@given(multisets)
@settings(max_examples=100)
def test_text_round_trip(x):
    assert parse_weights(x.to_text()) == x
    assert WeightMultiset.from_text(x.to_text()) == x


@given(multisets, multisets)
@settings(max_examples=60)
def test_tensor_commutes_when_ranks_agree(x, y):
    if x.rank != y.rank:
        return
    assert tensor(x, y) == tensor(y, x)
    assert len(tensor(x, y)) == len(x) * len(y)


def test_multiset_arithmetic():
    x = parse_weights("rank=1: (1) (0)x2 (-1)")
    assert len(x) == 4
    assert x.scaled(2).multiplicity((0,)) == 4
    assert (x - parse_weights("rank=1: (0)")).multiplicity((0,)) == 1
    with pytest.raises(ValueError):
        parse_weights("rank=1: (1, 2)")
    with pytest.raises(ValueError):
        x - parse_weights("rank=1: (5)")
