"""Exact checks of the Hodge-Tate weight lemma for Sym^2 (+) Sym^2 = wedge^3.

Given Hodge-Tate weights a_1..a_4 of one 4-dimensional piece (the other has
n - a_i) and a twist m, the triple sums of six unknowns x_1..x_6 must equal

    A = {a_i + a_j + m, 2n - (a_i + a_j) + m : i <= j}.

The lemma says that when the eight values a_i, n - a_i are distinct and free
of 3-term progressions, every solution x has distinct entries.  Everything
here is exact integer or Fraction arithmetic.
"""

from __future__ import annotations

import random
from math import lcm
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations, product
from typing import Iterable, Sequence

from lieforge import _linalg
from lieforge.report import CaseReport


@dataclass(frozen=True)
class HTInstance:
    a: tuple[int, int, int, int]
    n: int
    m: int = 0

    def values(self) -> tuple:
        """The eight weights a_i and n - a_i."""
        return tuple(self.a) + tuple(self.n - x for x in self.a)


def ap_witnesses(x: Iterable) -> list[tuple]:
    """All (a, c, b) with a < c < b members of x and a + b = 2c."""
    vals = sorted(set(x))
    present = set(vals)
    out = []
    for i, a in enumerate(vals):
        for b in vals[i + 2:]:
            c = Fraction(a + b) / 2
            if c in present:
                out.append((a, c, b))
    return out


def no_3term_ap(x: Iterable) -> bool:
    return not ap_witnesses(x)


def condition_p(inst: HTInstance) -> bool:
    vals = inst.values()
    return len(set(vals)) == 8 and no_3term_ap(vals)


def build_A(inst: HTInstance) -> list:
    a, n, m = inst.a, inst.n, inst.m
    out = []
    for i, j in combinations_with_replacement(range(4), 2):
        s = a[i] + a[j]
        out.append(s + m)
        out.append(2 * n - s + m)
    return sorted(out)


def build_B(x: Sequence) -> list:
    if len(x) != 6:
        raise ValueError("build_B needs exactly six values")
    return sorted(x[i] + x[j] + x[k] for i, j, k in combinations(range(6), 3))


def _as_int_scaled(A: Sequence) -> tuple[list[int], int]:
    den = 1
    for v in A:
        den = lcm(den, Fraction(v).denominator)
    scale = 3 * den
    return sorted(int(Fraction(v) * scale) for v in A), scale


def solve_X(A: Sequence) -> list[tuple[Fraction, ...]]:
    """Every non-decreasing 6-tuple x with build_B(x) == A, as Fractions.

    Sorted, the two smallest triple sums are x1+x2+x3 and x1+x2+x4 and the
    two largest are x3+x5+x6 and x4+x5+x6, which fixes x4 - x3.  Once the
    values of x1+x3+x4 and x2+x3+x4 are chosen from A, x1..x4 follow; x5 is
    read off the smallest sum not using x1..x4 alone, and x6 from the total.
    """
    if len(A) != 20:
        raise ValueError(f"A must have 20 entries, got {len(A)}")
    S, scale = _as_int_scaled(A)
    delta = S[1] - S[0]
    if S[-1] - S[-2] != delta:
        return []
    total = sum(S)
    if total % 10:
        return []
    xsum = total // 10
    values = sorted(set(S))
    sols = set()
    for ia, a in enumerate(values):
        for b in values[ia:]:
            num = a + b - S[0] - 2 * delta
            if num % 3:
                continue
            x3 = num // 3
            x4 = x3 + delta
            x1 = a - x3 - x4
            x2 = b - x3 - x4
            if not x1 <= x2 <= x3:
                continue
            rest = list(S)
            try:
                for t in (x1 + x2 + x3, x1 + x2 + x4, x1 + x3 + x4, x2 + x3 + x4):
                    rest.remove(t)
            except ValueError:
                continue
            x5 = rest[0] - x1 - x2
            x6 = xsum - (x1 + x2 + x3 + x4 + x5)
            if not x4 <= x5 <= x6:
                continue
            x = (x1, x2, x3, x4, x5, x6)
            if build_B(x) == S:
                sols.add(x)
    return [tuple(Fraction(v, scale) for v in x) for x in sorted(sols)]


def _instances(bound: int):
    for n in range(0, bound + 1):
        for a2 in range(1, 2 * bound + 1):
            for a3 in range(a2 + 1, 2 * bound + 1):
                for a4 in range(-bound, 2 * bound + 1):
                    if a4 in (0, a2, a3):
                        continue
                    yield HTInstance((0, a2, a3, a4), n)


@dataclass
class LemmaResult:
    bound: int
    instances: int = 0
    p_instances: int = 0
    solved: int = 0
    solutions: int = 0
    counterexamples: list = field(default_factory=list)
    first_p: HTInstance | None = None
    sharpness: tuple | None = None
    witnesses: list = field(default_factory=list)


def lemma_scan(bound: int, emit_witnesses: bool = False) -> LemmaResult:
    """Exhaustive run over the box; also records the first non-(P) instance
    whose equation A = B has a solution with a repeated entry."""
    if bound < 1:
        raise ValueError("bound must be positive")
    res = LemmaResult(bound)
    for inst in _instances(bound):
        res.instances += 1
        p = condition_p(inst)
        if not p and res.sharpness is not None:
            continue
        sols = solve_X(build_A(inst))
        if not p:
            for x in sols:
                if len(set(x)) < 6:
                    res.sharpness = (inst, x)
                    break
            continue
        res.p_instances += 1
        if res.first_p is None:
            res.first_p = inst
        if sols:
            res.solved += 1
            res.solutions += len(sols)
            if emit_witnesses:
                res.witnesses.append((inst, sols))
        for x in sols:
            if len(set(x)) < 6:
                res.counterexamples.append((inst, x))
    return res


def normalize(inst: HTInstance) -> HTInstance:
    """Shift to m = n = 0: a_i -> a_i - n/2.

    A moves by -(m + n), so solutions move by -(m + n)/3; condition (P) is
    unchanged because all eight values move together.
    """
    half = Fraction(inst.n, 2)
    return HTInstance(tuple(Fraction(v) - half for v in inst.a), 0, 0)


def normalization_shift(inst: HTInstance) -> Fraction:
    return Fraction(inst.m + inst.n, 3)


def _shift_check(rng: random.Random, trials: int, seeds: Sequence[HTInstance] = ()
                 ) -> tuple[int, int, list]:
    """Instances with m, n != 0 (random, plus shifts of solvable ones from
    the main scan): their solutions, moved by the normalization shift, are
    exactly those of the normalized instance, and (P) instances keep
    distinct solutions."""
    insts = []
    for _ in range(trials):
        a = tuple(rng.sample(range(-8, 9), 4))
        insts.append(HTInstance(a, rng.choice([-1, 1]) * rng.randint(1, 8),
                                rng.choice([-1, 1]) * rng.randint(1, 8)))
    for base in seeds:
        m = rng.choice([-1, 1]) * rng.randint(1, 9)
        insts.append(HTInstance(tuple(v + Fraction(m, 2) for v in base.a), base.n + m, m))
    with_sols = 0
    bad = []
    for inst in insts:
        sols = solve_X(build_A(inst))
        norm = solve_X(build_A(normalize(inst)))
        t = normalization_shift(inst)
        shifted = sorted(tuple(v - t for v in xs) for xs in sols)
        if shifted != norm:
            bad.append(inst)
        with_sols += bool(sols)
        if condition_p(inst) and any(len(set(xs)) < 6 for xs in sols):
            bad.append(inst)
    return len(insts), with_sols, bad


def lemma_search(bound: int = 12, emit_witnesses: bool = False, with_shifts: bool = False,
                 seed: int = 0) -> CaseReport:
    if bound < 8:
        raise ValueError("bound must be at least 8")
    res = lemma_scan(bound, emit_witnesses)
    rep = CaseReport("ht-lemma")
    rep.add("instances scanned", res.instances > 0, str(res.instances))
    rep.add("condition (P) instances", res.p_instances >= 1,
            f"{res.p_instances}; first {_fmt_inst(res.first_p)}")
    rep.add("(P) instances with a solution", True, f"{res.solved} ({res.solutions} solutions)")
    rep.add("no repeated-entry solution under (P)", not res.counterexamples,
            "; ".join(f"{_fmt_inst(i)} -> {_fmt_x(x)}" for i, x in res.counterexamples[:5]) or "0 counterexamples")
    if res.sharpness:
        inst, x = res.sharpness
        rep.add("sharpness: non-(P) instance with repeated entry", True,
                f"{_fmt_inst(inst)} -> {_fmt_x(x)}")
    else:
        rep.add("sharpness: non-(P) instance with repeated entry", True, "none in box")
    if emit_witnesses:
        for inst, sols in res.witnesses:
            rep.add(f"witness {_fmt_inst(inst)}", all(len(set(x)) == 6 for x in sols),
                    " | ".join(_fmt_x(x) for x in sols))
    if with_shifts:
        solvable = [i for i, _ in res.witnesses] or [i for i, _ in lemma_scan(8, True).witnesses]
        checked, with_sols, bad = _shift_check(random.Random(seed), 400, solvable[:200])
        rep.add("shifted instances agree with the normalized ones", not bad,
                f"{checked} checked, {with_sols} with solutions")
    return rep


def _fmt_inst(inst: HTInstance | None) -> str:
    if inst is None:
        return "none"
    return f"a={list(inst.a)} n={inst.n} m={inst.m}"


def _fmt_x(x: Sequence) -> str:
    return "(" + ",".join(str(v) for v in x) + ")"


# -- the signed-permutation determinant argument ------------------------------

@dataclass(frozen=True)
class SignedPermCase:
    signs: tuple[int, int, int, int]
    perm: tuple[int, int, int, int]
    omega: tuple[int, ...]
    r: int
    det_K: Fraction
    det_M: Fraction
    h: Fraction
    N: int
    eps: int
    a: tuple[int, ...]
    h_closed: Fraction
    lhs: int
    rhs: int
    rhs_printed: int

    @property
    def up(self) -> list[list[int]]:
        return signed_perm_matrix(self.signs, self.perm)


def signed_perm_matrix(signs: Sequence[int], perm: Sequence[int]) -> list[list[int]]:
    """(UP)[i][perm[i]] = signs[i]."""
    return [[signs[i] if j == perm[i] else 0 for j in range(4)] for i in range(4)]


def _order_up_to_sign(m: list[list[int]]) -> tuple[int, int]:
    ident = [[int(i == j) for j in range(4)] for i in range(4)]
    neg = [[-x for x in row] for row in ident]
    p = m
    for k in range(1, 13):
        if p == ident:
            return k, 1
        if p == neg:
            return k, -1
        p = _linalg.matmul(p, m)
    raise AssertionError("signed permutation with no finite order")


def signed_perm_case(signs: Sequence[int], perm: Sequence[int]) -> SignedPermCase:
    up = signed_perm_matrix(signs, perm)
    omega = tuple(int(d == 1) for d in signs)
    r = sum(omega)
    K = [[2 * int(i == j) + up[i][j] for j in range(4)] for i in range(4)]
    M = [[K[i][j] - omega[j] for j in range(4)] for i in range(4)]
    Kinv = _linalg.inverse(K)
    h = sum((omega[i] * Kinv[i][j] for i in range(4) for j in range(4)), Fraction(0))
    N, eps = _order_up_to_sign(up)
    a = []
    vec = [1, 1, 1, 1]
    for _ in range(2 * N):
        a.append(sum(w * v for w, v in zip(omega, vec)))
        vec = [sum(up[i][j] * vec[j] for j in range(4)) for i in range(4)]
    half = Fraction(-1, 2)
    h_closed = sum((half ** k * a[k] for k in range(N)), Fraction(0)) / (2 - 2 * eps * half ** N)
    lhs = sum((-1) ** k * 2 ** (N - 1 - k) * a[k] for k in range(N))
    return SignedPermCase(
        signs=tuple(signs), perm=tuple(perm), omega=omega, r=r,
        det_K=Fraction(_linalg.det(K)), det_M=Fraction(_linalg.det(M)), h=h, N=N, eps=eps,
        a=tuple(a), h_closed=h_closed, lhs=lhs,
        rhs=2 ** N - (-1) ** N * eps, rhs_printed=2 ** N - (-1) ** N * eps * 2)


def signed_perm_report() -> list[SignedPermCase]:
    """All 2^4 * 4! = 384 sign/permutation cases."""
    return [signed_perm_case(s, p)
            for s in product((1, -1), repeat=4) for p in permutations(range(4))]


def verify_signed_perm() -> CaseReport:
    cases = signed_perm_report()
    rep = CaseReport("sign-perm")
    rep.add("case count", len(cases) == 384, str(len(cases)))

    def failing(pred) -> str:
        bad = [c for c in cases if not pred(c)]
        return f"{len(bad)} failing, first {bad[0].signs}/{bad[0].perm}" if bad else "all"

    checks = [
        ("closed form h equals direct h", lambda c: c.h_closed == c.h),
        ("det M = (1 - h) det K", lambda c: c.det_M == (1 - c.h) * c.det_K),
        ("K invertible", lambda c: c.det_K != 0),
        ("a_0 = a_1 = r", lambda c: c.a[0] == c.a[1] == c.r),
        ("|a_m| <= r", lambda c: all(abs(x) <= c.r for x in c.a)),
        ("a_(m+N) = eps a_m", lambda c: all(c.a[k + c.N] == c.eps * c.a[k] for k in range(c.N))),
        ("h = 1 iff LHS = 2^N - (-1)^N eps", lambda c: (c.h == 1) == (c.lhs == c.rhs)),
    ]
    for name, pred in checks:
        rep.add(name, all(pred(c) for c in cases), failing(pred))
    small = [c for c in cases if c.r <= 2]
    rep.add("cases with r <= 2", len(small) == 264, str(len(small)))
    rep.add("r <= 2: h != 1 and det M != 0",
            all(c.h != 1 and c.det_M != 0 for c in small),
            f"min |det M| = {min(abs(c.det_M) for c in small)}")
    # The variant with the extra factor 2 is not equivalent to h = 1: it is
    # reached in 25 cases (h = 2/3 or 0), none of which has h = 1.
    hits = [c for c in small if c.lhs == c.rhs_printed]
    rep.add("r <= 2: LHS = 2^N - 2(-1)^N eps only where h != 1",
            all(c.h != 1 for c in hits),
            f"{len(hits)} cases reach it, h values {sorted({str(c.h) for c in hits})}")
    big = [c for c in cases if c.r >= 3]
    zero = sum(1 for c in big if c.det_M == 0)
    rep.add("r >= 3 (reported only)", True, f"{len(big)} cases, {zero} with det M = 0")
    rep.add("max order N", max(c.N for c in cases) <= 8, str(max(c.N for c in cases)))
    ident = signed_perm_case((1, 1, 1, 1), (0, 1, 2, 3))
    rep.add("U = I, P = id: det M", ident.det_M == -27, str(ident.det_M))
    neg = signed_perm_case((-1, -1, -1, -1), (0, 1, 2, 3))
    rep.add("U = -I, P = id: h and det M", neg.h == 0 and neg.det_M == 1,
            f"h={neg.h} det={neg.det_M}")
    return rep
