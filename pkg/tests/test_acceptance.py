"""The nine acceptance criteria, each at its stated tolerance.

Every test prints one ``PASS``/``FAIL`` line (visible with ``-s`` or in the
captured output of ``pytest -v``) and fails when its criterion fails.
"""

import random
import subprocess
import sys
import time
from contextlib import contextmanager

from lieforge import caseengine
from lieforge.charlab import (
    a3_to_d3,
    d3_standard,
    equivalent,
    feasible_dimension_types,
    rank1_partitions,
)
from lieforge.cli import main
from lieforge.htlemma import _instances, build_A, lemma_scan, signed_perm_report, solve_X
from lieforge.rectlab import CHROMIUM_GROUPS, chromium_verify, verify_rect_classification
from lieforge.reps import enumerate_composite, table1_fixture, verify_table1
from lieforge.rootsys import parse_algebra
from lieforge.weights import (
    FSType,
    IrreducibleRep,
    WeightMultiset,
    character,
    decompose,
    fs_type,
    irrep,
    sym2,
    tensor,
    tensor_external,
    wedge3,
    weyl_dim,
)

import oracles


@contextmanager
def criterion(capsys, number: int, title: str, limit: float | None = None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        assert limit is None or elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({elapsed:.1f}s)")


def test_criterion_1_table1(capsys):
    with criterion(capsys, 1, "Table 1 reproduction", limit=30):
        rep = verify_table1()
        assert rep.passed, [c for c in rep.checks if not c.passed]
        assert len(enumerate_composite(7)) == 4
        assert len(enumerate_composite(8)) == 11
        rows = table1_fixture()
        assert {r.row for r in rows if fs_type(r.rep) is FSType.NOT_SELF_DUAL} == {4, 11, 15}
        printed = [r for r in rows if r.character is not None]
        assert len(printed) == 9
        assert all(equivalent(character(r.rep), r.character) for r in printed)
        for r in rows:
            assert weyl_dim(r.rep) == r.dim and r.rep.algebra.rank == r.rank


def test_criterion_2_table2(capsys):
    with criterion(capsys, 2, "Table 2 reproduction", limit=5):
        got = [caseengine.sym2_eig_counts(caseengine.ConjugationSignature(s)) for s, _ in caseengine.TABLE2]
        assert got == [(0, 10), (3, 7), (4, 6), (3, 7), (0, 10)]
        negs = [n for n, _ in got]
        pairs = [(a, b) for i, a in enumerate(negs) for b in negs[i:]]
        assert len(pairs) == 15
        assert all(a + b != 10 for a, b in pairs)
        assert caseengine.verify_table2().passed


def test_criterion_3_rectangular(capsys):
    with criterion(capsys, 3, "rectangular classification and length groups", limit=60):
        rect = verify_rect_classification(6)
        assert rect.passed, [c for c in rect.checks if not c.passed]
        chrom = chromium_verify()
        assert chrom.passed, [c for c in chrom.checks if not c.passed]
        groups = {c.name for c in chrom.checks if c.name.startswith("group ")}
        assert groups == {"group {8}", "group {2,4}", "group {2,2,2}"}
        assert sorted(map(len, CHROMIUM_GROUPS.values())) == [1, 1, 5]


def test_criterion_4_wedge3_identity(capsys):
    with criterion(capsys, 4, "wedge^3 identity"):
        std = character(irrep("A3", 1, 0, 0))
        std_dual = character(irrep("A3", 0, 0, 1))
        lhs = a3_to_d3(sym2(std) + sym2(std_dual))
        rhs = wedge3(d3_standard())
        assert len(lhs) == len(rhs) == 20
        assert lhs == rhs


def test_criterion_5_ht_lemma(capsys):
    with criterion(capsys, 5, "HT lemma at bound 12 and oracle agreement at bound 8", limit=600):
        assert main(["verify", "ht-lemma", "--bound", "12"]) == 0
        res = lemma_scan(12)
        assert res.p_instances >= 1
        assert not res.counterexamples
        disagree = [inst for inst in _instances(8)
                    if solve_X(build_A(inst)) != oracles.brute_solve(build_A(inst))]
        assert not disagree, disagree[:3]


def test_criterion_6_signed_permutations(capsys):
    with criterion(capsys, 6, "signed-permutation analysis", limit=5):
        cases = signed_perm_report()
        assert len(cases) == 384
        assert all(c.h_closed == c.h for c in cases)
        assert all(c.det_M == (1 - c.h) * c.det_K for c in cases)
        small = [c for c in cases if c.r <= 2]
        assert len(small) == 264
        assert all(c.det_M != 0 and c.h != 1 for c in small)


def test_criterion_7_oracle_equivalence(capsys):
    with criterion(capsys, 7, "Freudenthal vs tensor construction; dimension conservation"):
        checked = 0
        for name, cap in [("A1", 20), ("A2", 5), ("B2", 4)]:
            for w in oracles.dominant_box(name, cap):
                rep = irrep(name, *w)
                if weyl_dim(rep) > 20:
                    continue
                checked += 1
                assert dict(character(rep).counts()) == dict(oracles.tensor_character(name, w)), (name, w)
        assert checked == 39
        pool = [c for n in range(2, 9) for c in enumerate_composite(n)]
        rng = random.Random(2024)
        for _ in range(100):
            a, b = rng.choice(pool), rng.choice(pool)
            if a.algebra == b.algebra:
                alg, prod = a.algebra, tensor(character(a.rep), character(b.rep))
            else:
                alg = parse_algebra(f"{a.algebra}x{b.algebra}")
                prod = tensor_external(character(a.rep), character(b.rep))
            total = sum(m * weyl_dim(IrreducibleRep(alg, w)) for w, m in decompose(prod, alg))
            assert total == a.dim * b.dim


def test_criterion_8_case_predicates(capsys):
    with criterion(capsys, 8, "case predicates"):
        assert len(rank1_partitions(character(irrep("A1", 6)))) == 2
        assert len(rank1_partitions(character(irrep("A1", 7)))) == 1
        cube = WeightMultiset([(a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1)])
        assert sorted(feasible_dimension_types(cube)) == sorted(
            [(8,), (6, 2), (4, 4), (4, 2, 2), (2, 2, 2, 2)])
        assert character(irrep("A2", 1, 1)).multiplicity((0, 0)) == 2


def test_criterion_9_determinism(capsys):
    with criterion(capsys, 9, "byte-identical verify all reruns"):
        cmd = [sys.executable, "-m", "lieforge.cli", "verify", "all"]
        first = subprocess.run(cmd, capture_output=True, check=False)
        second = subprocess.run(cmd, capture_output=True, check=False)
        assert first.returncode == second.returncode == 0
        assert first.stdout and first.stdout == second.stdout
