"""Scripted case analysis for dimensions 7 and 8, and the top-level verifier."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from lieforge.charlab import (
    FormalCharacter,
    a3_to_d3,
    d3_half_spin,
    d3_standard,
    equivalent,
    essentially_self_dual,
    feasible_dimension_types,
    multiplicity_free,
    rank1_partitions,
    subset_sum_zero,
    zero_weight_count,
)
from lieforge.htlemma import lemma_search, verify_signed_perm
from lieforge.rectlab import chromium_verify, verify_rect_classification
from lieforge.report import CaseReport
from lieforge.reps import verify_table1
from lieforge.weights import (
    FSType,
    character,
    decompose,
    dual,
    fs_type,
    irrep,
    sym2,
    tensor,
    wedge3,
    weyl_dim,
)


@dataclass(frozen=True)
class ConjugationSignature:
    signs: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.signs) != 4 or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"expected four signs +-1, got {self.signs}")


def sym2_eig_counts(sig: ConjugationSignature) -> tuple[int, int]:
    """(number of -1, number of +1) among the products e_i e_j, i <= j."""
    prods = [a * b for a, b in combinations_with_replacement(sig.signs, 2)]
    neg = prods.count(-1)
    return neg, len(prods) - neg


#: one signature per number of -1 eigenvalues, with the expected counts
TABLE2 = [
    ((1, 1, 1, 1), (0, 10)),
    ((1, 1, 1, -1), (3, 7)),
    ((1, 1, -1, -1), (4, 6)),
    ((1, -1, -1, -1), (3, 7)),
    ((-1, -1, -1, -1), (0, 10)),
]


def verify_table2() -> CaseReport:
    rep = CaseReport("table2")
    for signs, want in TABLE2:
        got = sym2_eig_counts(ConjugationSignature(signs))
        rep.add(f"signs {signs}", got == want, f"{got}")
    negs = [sym2_eig_counts(ConjugationSignature(s))[0] for s, _ in TABLE2]
    pairs = list(combinations_with_replacement(negs, 2))
    total = max(a + b for a, b in pairs)
    rep.add("no pair gives 10 negative eigenvalues", all(a + b != 10 for a, b in pairs),
            f"{len(pairs)} pairs, max {total}")
    # every signature, not only the listed representatives
    counts = {sym2_eig_counts(ConjugationSignature(s)) for s in product((1, -1), repeat=4)}
    rep.add("all 16 signatures covered by the table", counts == {w for _, w in TABLE2},
            str(sorted(counts)))
    return rep


def _row(i: int) -> FormalCharacter:
    reps = {
        1: irrep("A1", 6), 2: irrep("G2", 1, 0), 3: irrep("B3", 1, 0, 0), 5: irrep("A1", 7),
        6: irrep("A1xA1", 1, 3), 8: irrep("A1xA1xA1", 1, 1, 1), 9: irrep("A1xC2", 1, 1, 0),
        10: irrep("B3", 0, 0, 1), 12: irrep("C4", 1, 0, 0, 0), 13: irrep("D4", 1, 0, 0, 0),
        14: irrep("D4", 0, 0, 0, 1),
    }
    return FormalCharacter.of(character(reps[i]))


def _fmt_types(types) -> str:
    return ", ".join("+".join(map(str, t)) for t in types)


def _case_1(rep: CaseReport) -> None:
    parts = rank1_partitions(_row(1))
    dims = sorted(p.dims for p in parts)
    rep.add("Sym^6 ladder splits", dims == [(4, 3), (7,)],
            "; ".join("+".join(map(str, d)) for d in dims))


def _case_2(rep: CaseReport) -> None:
    r = irrep("G2", 1, 0)
    ch = character(r)
    rep.add("G2 excluded by hypothesis", True, "standard 7-dim representation of G2 is assumed away")
    rep.add("G2 character", len(ch) == 7 and zero_weight_count(ch) == 1, ch.to_text())
    rep.add("G2 orthogonal", fs_type(r) is FSType.ORTHOGONAL, fs_type(r).value)


def _case_3(rep: CaseReport) -> None:
    fc = _row(3)
    rep.add("one zero weight", zero_weight_count(fc) == 1, str(zero_weight_count(fc)))
    triples = subset_sum_zero(fc, 3, nonzero_only=True)
    rep.add("no zero-sum nonzero triple", not triples, str(len(triples)))
    types = feasible_dimension_types(fc)
    rep.add("6+1 feasible", (6, 1) in types, _fmt_types(types))
    rep.add("no type with two 1-dim parts", all(t.count(1) <= 1 for t in types))


def _case_5(rep: CaseReport) -> None:
    parts = rank1_partitions(_row(5))
    rep.add("Sym^7 does not split", [p.dims for p in parts] == [(8,)],
            "; ".join("+".join(map(str, p.dims)) for p in parts))
    rep.add("no zero weight", zero_weight_count(_row(5)) == 0)


def _case_7(rep: CaseReport) -> None:
    adj = character(irrep("A2", 1, 1))
    rep.add("adjoint zero weight multiplicity", adj.multiplicity((0, 0)) == 2,
            str(adj.multiplicity((0, 0))))
    std = character(irrep("A2", 1, 0))
    dec = decompose(tensor(std, dual(std)), irrep("A2", 1, 1).algebra)
    rep.add("Std x Std^ = 1 + adjoint", sorted(dec) == [((0, 0), 1), ((1, 1), 1)], str(dec))


def _spin_group(rep: CaseReport) -> None:
    for i in (10, 12, 13):
        fc = _row(i)
        rep.add(f"row ({i}) has no zero weight", zero_weight_count(fc) == 0)
        rep.add(f"row ({i}) has no zero-sum triple", not subset_sum_zero(fc, 3))
        rep.add(f"row ({i}) multiplicity free", multiplicity_free(fc))
        nu = essentially_self_dual(fc)
        rep.add(f"row ({i}) self-dual with zero twist", nu is not None and not any(nu), str(nu))
    types = feasible_dimension_types(_row(10))
    want = [(8,), (6, 2), (4, 4), (4, 2, 2), (2, 2, 2, 2)]
    rep.add("row (10) dimension types", sorted(types) == sorted(want), _fmt_types(types))

    a3 = irrep("A3", 1, 0, 0)
    std = character(a3)
    std_dual = character(irrep("A3", 0, 0, 1))
    rep.add("A3 Std maps to a D3 half-spin", a3_to_d3(std) == d3_half_spin(1))
    lhs = a3_to_d3(sym2(std) + sym2(std_dual))
    rhs = wedge3(d3_standard())
    rep.add("Sym^2 Std + Sym^2 Std^ = wedge^3 of the 6-dim", lhs == rhs and len(rhs) == 20,
            f"{len(lhs)} = {len(rhs)} weights")
    dec = decompose(tensor(std, std_dual), a3.algebra)
    dims = sorted(weyl_dim(irrep("A3", *w)) * m for w, m in dec)
    rep.add("Std x Std^ = 1 + 15", dims == [1, 15], str(dec))
    rep.add("rows (13),(14) have equivalent formal characters", equivalent(_row(13), _row(14)),
            "std and half-spin are exchanged by triality")


def _rect_group(rep: CaseReport) -> None:
    chrom = chromium_verify()
    rep.add("length groups", chrom.passed,
            f"{sum(c.passed for c in chrom.checks)}/{len(chrom.checks)} checks")
    for i in (6, 8, 9):
        rep.add(f"row ({i}) multiplicity free", multiplicity_free(_row(i)))
        types = feasible_dimension_types(_row(i))
        allowed = {(2, 2, 2, 2), (6, 2), (4, 2, 2), (4, 4), (8,)}
        rep.add(f"row ({i}) dimension types within the 8, 2+2+2+2, 6+2, 4+2+2, 4+4 list",
                set(types) <= allowed, _fmt_types(types))
    a1 = irrep("A1", 1)
    f = character(a1)
    dec = decompose(tensor(f, dual(f)), a1.algebra)
    rep.add("Std x Std^ = 1 + 3 for A1", sorted(dec) == [((0,), 1), ((2,), 1)], str(dec))


CASES = {
    "1": _case_1, "2": _case_2, "3": _case_3, "5": _case_5, "7": _case_7,
    "spin_group": _spin_group, "rect_group": _rect_group,
}


def verify_case(case_id: str | int) -> CaseReport:
    key = str(case_id)
    if key not in CASES:
        raise ValueError(f"unknown case {case_id!r}; choose from {', '.join(CASES)}")
    rep = CaseReport(f"case {key}")
    CASES[key](rep)
    return rep


DEFAULT_BOUND = 12


def verify_all(bound: int = DEFAULT_BOUND, emit_witnesses: bool = False,
               with_shifts: bool = False) -> list[CaseReport]:
    reports = [verify_table1(), verify_table2(), verify_rect_classification(6), chromium_verify()]
    reports += [verify_case(c) for c in CASES]
    reports.append(lemma_search(bound, emit_witnesses=emit_witnesses, with_shifts=with_shifts))
    reports.append(verify_signed_perm())
    return reports
