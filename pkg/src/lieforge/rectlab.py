"""Rectangular weight multisets: grids Z_{d_1} x ... x Z_{d_r} up to linear change.

A grid image is fixed by one corner and one step vector per axis.  The
lexicographically least weight is a vertex of the convex hull, hence a grid
corner, so the search only has to choose steps from that point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from lieforge import _linalg
from lieforge.report import CaseReport
from lieforge.rootsys import SemisimpleAlgebra, parse_algebra
from lieforge.weights import WeightMultiset, character, irrep, tensor_external


class NotRectangular(ValueError):
    pass


@dataclass(frozen=True)
class GridShape:
    lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(x < 2 for x in self.lengths):
            raise ValueError(f"grid lengths must be >= 2, got {self.lengths}")
        object.__setattr__(self, "lengths", tuple(sorted(self.lengths, reverse=True)))

    @property
    def size(self) -> int:
        out = 1
        for x in self.lengths:
            out *= x
        return out

    def __str__(self) -> str:
        return "{" + ",".join(map(str, sorted(self.lengths))) + "}"


@dataclass(frozen=True)
class RectWitness:
    shape: GridShape
    corner: tuple
    steps: tuple[tuple, ...]

    def points(self) -> list[tuple]:
        """Images of all grid points, in grid order."""
        out = []
        for g in product(*(range(n) for n in self.shape.lengths)):
            p = list(self.corner)
            for k, s in zip(g, self.steps):
                for i, x in enumerate(s):
                    p[i] += k * x
            out.append(tuple(p))
        return out


def span_rank(x: WeightMultiset) -> int:
    pts = x.support()
    if not pts:
        return 0
    base = pts[0]
    return _linalg.rank([[a - b for a, b in zip(p, base)] for p in pts[1:]] or [[0] * x.rank])


def _factorizations(n: int, r: int, largest: int | None = None) -> list[tuple[int, ...]]:
    if r == 0:
        return [()] if n == 1 else []
    largest = n if largest is None else largest
    out = []
    for f in range(min(n, largest), 1, -1):
        if n % f == 0:
            out.extend((f,) + rest for rest in _factorizations(n // f, r - 1, f))
    return out


def _add(p, q, k=1):
    return tuple(a + k * b for a, b in zip(p, q))


def _search(pts: set, corner: tuple, cands: list[tuple], lengths: tuple[int, ...]) -> list[tuple] | None:
    def go(axis: int, grid: set, steps: list, min_idx: int) -> list | None:
        if axis == len(lengths):
            return list(steps)
        n = lengths[axis]
        start = min_idx if axis and lengths[axis] == lengths[axis - 1] else 0
        for idx in range(start, len(cands)):
            s = cands[idx]
            new = set()
            ok = True
            for p in grid:
                for k in range(1, n):
                    q = _add(p, s, k)
                    if q not in pts or q in grid or q in new:
                        ok = False
                        break
                    new.add(q)
                if not ok:
                    break
            if not ok:
                continue
            steps.append(s)
            if _linalg.rank(steps) == len(steps):
                found = go(axis + 1, grid | new, steps, idx + 1)
                if found is not None:
                    return found
            steps.pop()
        return None

    return go(0, {corner}, [], 0)


def is_rectangular(x: WeightMultiset) -> RectWitness | None:
    """A grid witness for x, or None.

    x must be multiplicity-free with zero entry sum (the grid is centered
    at the origin) and its support must be a grid of rank equal to the span.
    """
    if len(x) == 0 or any(m != 1 for _, m in x.items()):
        return None
    if any(c != 0 for c in x.total()):
        return None
    r = span_rank(x)
    n = len(x)
    if r == 0:
        return None
    pts = set(x.support())
    corner = min(pts)
    cands = sorted(_add(p, corner, -1) for p in pts if p != corner)
    for lengths in _factorizations(n, r):
        steps = _search(pts, corner, cands, lengths)
        if steps is not None:
            return RectWitness(GridShape(lengths), corner, tuple(steps))
    return None


def verify_witness(x: WeightMultiset, w: RectWitness) -> bool:
    """Re-check a witness by direct evaluation, without trusting the search."""
    pts = w.points()
    if len(pts) != len(x) or w.shape.size != len(x):
        return False
    if WeightMultiset(pts, rank=x.rank) != x:
        return False
    if _linalg.rank(w.steps) != len(w.steps):
        return False
    # centered: the grid midpoint is the origin
    mid = list(w.corner)
    for n, s in zip(w.shape.lengths, w.steps):
        for i, c in enumerate(s):
            mid[i] += Fraction(n - 1, 2) * c
    return all(c == 0 for c in mid)


def lengths(x: WeightMultiset) -> GridShape:
    w = is_rectangular(x)
    if w is None:
        raise NotRectangular("weight multiset is not rectangular")
    return w.shape


def is_hypercubic(x: WeightMultiset) -> bool:
    return len(set(lengths(x).lengths)) == 1


def _project(x: WeightMultiset, coords: tuple[int, ...]) -> WeightMultiset:
    return x.map(lambda w: tuple(w[i] for i in coords))


def is_decomposable_rect(x: WeightMultiset, alg: SemisimpleAlgebra | str | None = None
                         ) -> tuple[WeightMultiset, WeightMultiset] | None:
    """Split x as an external tensor product of two rectangular pieces.

    With an algebra, candidate splits group whole simple factors; without
    one, any bipartition of the coordinates is tried.  Returns the two
    projected multisets, or None when x is indecomposable.
    """
    if is_rectangular(x) is None:
        raise NotRectangular("weight multiset is not rectangular")
    if alg is not None:
        alg = parse_algebra(alg) if isinstance(alg, str) else alg
        units = [tuple(range(o, o + f.rank)) for o, f in zip(alg.offsets, alg.factors)]
    else:
        units = [(i,) for i in range(x.rank)]
    k = len(units)
    for size in range(1, k // 2 + 1):
        for left in combinations(range(k), size):
            if 2 * size == k and 0 not in left:
                continue
            a = tuple(i for u in left for i in units[u])
            b = tuple(i for u in range(k) if u not in left for i in units[u])
            xa, xb = _project(x, a), _project(x, b)
            if len(xa.support()) * len(xb.support()) != len(x):
                continue
            prod = {}
            for p in xa.support():
                for q in xb.support():
                    v = [0] * x.rank
                    for i, c in zip(a, p):
                        v[i] = c
                    for i, c in zip(b, q):
                        v[i] = c
                    prod[tuple(v)] = 1
            if WeightMultiset(prod, rank=x.rank) != x:
                continue
            xa = WeightMultiset(xa.support(), rank=len(a))
            xb = WeightMultiset(xb.support(), rank=len(b))
            if is_rectangular(xa) and is_rectangular(xb):
                return xa, xb
    return None


# -- classification families --------------------------------------------------

def _spin_b(m: int) -> tuple[str, WeightMultiset]:
    if m == 2:
        return "C2", character(irrep("C2", 1, 0))
    return f"B{m}", character(irrep(f"B{m}", *([0] * (m - 1) + [1])))


def _spin_d(m: int) -> WeightMultiset:
    a = [0] * m
    b = [0] * m
    a[-1] = 1
    b[-2] = 1
    return character(irrep(f"D{m}", *a)) + character(irrep(f"D{m}", *b))


def d2_spin() -> WeightMultiset:
    """(Std x 1) + (1 x Std) for A1 x A1."""
    return WeightMultiset([(1, 0), (-1, 0), (0, 1), (0, -1)])


def rect_families(m_max: int) -> list[tuple[str, str, WeightMultiset, tuple[int, ...], bool]]:
    """(name, algebra, character, expected lengths, expect hypercubic)."""
    fams = []
    for r in range(1, 2 * m_max + 1):
        fams.append((f"(A1, Sym^{r})", "A1", character(irrep("A1", r)), (r + 1,), True))
    for r in range(1, m_max + 1):
        ch = character(irrep("A1", r)) + character(irrep("A1", r - 1))
        fams.append((f"(A1, Sym^{r} + Sym^{r - 1})", "A1", ch, (2 * r + 1,), True))
    fams.append(("(D2, Spin)", "A1xA1", d2_spin(), (2, 2), True))
    fams.append(("(B2, Std + Spin)", "C2",
                 character(irrep("C2", 0, 1)) + character(irrep("C2", 1, 0)), (3, 3), True))
    for m in range(2, m_max + 1):
        alg, ch = _spin_b(m)
        fams.append((f"(B{m}, Spin)", alg, ch, (2,) * m, True))
    fams.append(("(A3, Std + Std^)", "A3",
                 character(irrep("A3", 1, 0, 0)) + character(irrep("A3", 0, 0, 1)), (2, 2, 2), True))
    for m in range(4, m_max + 1):
        fams.append((f"(D{m}, Spin)", f"D{m}", _spin_d(m), (2,) * m, True))
    return fams


def verify_rect_classification(m_max: int = 6) -> CaseReport:
    if not 2 <= m_max <= 6:
        raise ValueError(f"m_max must lie in [2, 6], got {m_max}")
    rep = CaseReport("rect")
    for name, alg, ch, expect, hyper in rect_families(m_max):
        w = is_rectangular(ch)
        if not rep.add(f"{name} rectangular", w is not None and verify_witness(ch, w),
                       str(w.shape) if w else "no witness"):
            continue
        rep.add(f"{name} lengths", w.shape.lengths == GridShape(expect).lengths, str(w.shape))
        rep.add(f"{name} hypercubic", is_hypercubic(ch) == hyper, str(hyper))
        rep.add(f"{name} indecomposable", is_decomposable_rect(ch, alg) is None, alg)
    return rep


# -- the dimension-8 proposition ---------------------------------------------

def building_blocks(n: int = 8) -> list[tuple[str, str, WeightMultiset]]:
    """Indecomposable hypercubic pieces whose dimension divides n."""
    blocks = []
    for r in range(1, n):
        if (r + 1) <= n and n % (r + 1) == 0:
            blocks.append((f"(A1, Sym^{r})" if r > 1 else "(A1, Std)", "A1", character(irrep("A1", r))))
    for r in range(1, n):
        if n % (2 * r + 1) == 0:
            blocks.append((f"(A1, Sym^{r} + Sym^{r - 1})", "A1",
                           character(irrep("A1", r)) + character(irrep("A1", r - 1))))
    blocks.append(("(D2, Spin)", "A1xA1", d2_spin()))
    if n % 9 == 0:
        blocks.append(("(B2, Std + Spin)", "C2",
                       character(irrep("C2", 0, 1)) + character(irrep("C2", 1, 0))))
    m = 2
    while 2 ** m <= n:
        if n % 2 ** m == 0:
            alg, ch = _spin_b(m)
            name = "(C2, Std)" if m == 2 else f"(B{m}, Spin)"
            blocks.append((name, alg, ch))
        m += 1
    blocks.append(("(A3, Std + Std^)", "A3",
                   character(irrep("A3", 1, 0, 0)) + character(irrep("A3", 0, 0, 1))))
    m = 4
    while 2 ** m <= n:
        if n % 2 ** m == 0:
            blocks.append((f"(D{m}, Spin)", f"D{m}", _spin_d(m)))
        m += 1
    return [b for b in blocks if n % len(b[2]) == 0]


def _products(blocks, n: int, start: int = 0):
    if n == 1:
        yield ()
        return
    for i in range(start, len(blocks)):
        d = len(blocks[i][2])
        if n % d == 0:
            for rest in _products(blocks, n // d, i):
                yield (blocks[i],) + rest


CHROMIUM_GROUPS = {
    (8,): ["(A1, Sym^7)"],
    (4, 2): ["(A1, Std)x(A1, Sym^3)"],
    (2, 2, 2): ["(A1, Std)x(A1, Std)x(A1, Std)", "(A1, Std)x(D2, Spin)", "(A1, Std)x(C2, Std)",
                "(A3, Std + Std^)", "(B3, Spin)"],
}

NOT_RECTANGULAR_8 = [("8A2", irrep("A2", 1, 1)), ("8C4", irrep("C4", 1, 0, 0, 0)),
                     ("8D4 std", irrep("D4", 1, 0, 0, 0)), ("8D4 half-spin", irrep("D4", 0, 0, 0, 1))]


def chromium_verify() -> CaseReport:
    from lieforge.reps import enumerate_composite
    from lieforge.weights import FSType

    rep = CaseReport("chromium")
    groups: dict[tuple[int, ...], list[str]] = {}
    blocks = sorted(building_blocks(8), key=lambda b: (len(b[2]), b[0]))
    for combo in _products(blocks, 8):
        ch = combo[0][2]
        for b in combo[1:]:
            ch = tensor_external(ch, b[2])
        name = "x".join(b[0] for b in combo)
        w = is_rectangular(ch)
        if not rep.add(f"{name} rectangular", w is not None and verify_witness(ch, w),
                       str(w.shape) if w else "no witness"):
            continue
        groups.setdefault(w.shape.lengths, []).append(name)
    for key in set(groups) | set(CHROMIUM_GROUPS):
        got, want = sorted(groups.get(key, [])), sorted(CHROMIUM_GROUPS.get(key, []))
        rep.add(f"group {GridShape(key)}", got == want, "; ".join(got))

    # Irreducible self-dual classes of dimension 8: rectangular exactly when listed.
    expected_rect = {"8A1": (8,), "2A1x4A1": (4, 2), "2A1x2A1x2A1": (2, 2, 2),
                     "2A1x4C2": (2, 2, 2), "8B3": (2, 2, 2)}
    for cls in enumerate_composite(8):
        if cls.self_duality is FSType.NOT_SELF_DUAL:
            continue
        w = is_rectangular(character(cls.rep))
        got = w.shape.lengths if w else None
        rep.add(f"{cls} lengths", got == expected_rect.get(cls.label),
                str(w.shape) if w else "not rectangular")
    for name, r in NOT_RECTANGULAR_8:
        rep.add(f"{name} not rectangular", is_rectangular(character(r)) is None)
    return rep

