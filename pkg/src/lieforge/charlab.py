"""Formal characters compared up to isomorphism of the image torus.

A formal character is a multiset of torus weights.  Two are the same when a
linear isomorphism between the spans of their entries carries one multiset
onto the other; such a map automatically identifies the lattices generated
by the entries, so this is equality of characters of the image tori.

The canonical form is found by brute force over ordered frames (r linearly
independent entries): writing every entry in frame coordinates gives a
finite list of candidate coordinate multisets, and equivalent characters
produce the same list.  The lexicographically least candidate is then
rewritten in the Hermite basis of the lattice it generates.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import lcm
from typing import Iterable, Sequence

from lieforge import _linalg
from lieforge.weights import WeightMultiset, parse_weights


@dataclass(frozen=True)
class FormalCharacter:
    """A multiset of torus weights; ``rank`` is the rank of the lattice they span."""

    entries: WeightMultiset

    @classmethod
    def of(cls, x: FormalCharacter | WeightMultiset | Iterable[Sequence]) -> FormalCharacter:
        if isinstance(x, FormalCharacter):
            return x
        if isinstance(x, WeightMultiset):
            return cls(x)
        return cls(WeightMultiset(x))

    @classmethod
    def from_text(cls, text: str) -> FormalCharacter:
        return cls(parse_weights(text))

    def to_text(self) -> str:
        return self.entries.to_text()

    @property
    def rank(self) -> int:
        return _linalg.rank(self.entries.support())

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


CharLike = FormalCharacter | WeightMultiset


def _entries(fc: CharLike) -> WeightMultiset:
    return fc.entries if isinstance(fc, FormalCharacter) else fc


@dataclass(frozen=True)
class LatticeIso:
    """Square integer matrix of determinant +-1, acting on row vectors."""

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        if any(len(r) != len(m) for r in m) or _linalg.det(m) not in (1, -1):
            raise ValueError("a lattice isomorphism must be square with determinant +-1")

    def apply(self, fc: CharLike) -> FormalCharacter:
        return FormalCharacter(_entries(fc).transform(self.matrix))


def _pivot_coordinates(vectors: Sequence[Sequence]) -> tuple[list[list[Fraction]], int]:
    """Coordinates of each vector in an RREF basis of their span."""
    basis, pivots = _linalg.rref(vectors)
    return [[Fraction(v[p]) for p in pivots] for v in vectors], len(pivots)


def _integerize(vectors: list[list[Fraction]]) -> list[list[int]]:
    den = lcm(*(x.denominator for v in vectors for x in v)) if vectors and vectors[0] else 1
    return [[int(x * den) for x in v] for v in vectors]


@lru_cache(maxsize=1024)
def _canonical(ws: WeightMultiset) -> WeightMultiset:
    support = ws.support()
    mults = [ws.multiplicity(v) for v in support]
    coords, r = _pivot_coordinates(support)
    if r == 0:
        return WeightMultiset({(): len(ws)}, rank=0)
    coords = [[Fraction(x) for x in v] for v in _integerize(coords)]
    best = None
    for frame in combinations(range(len(support)), r):
        f = [coords[i] for i in frame]
        if _linalg.det(f) == 0:
            continue
        # reordering the frame only permutes the coordinates
        inv = _linalg.inverse(f)
        base = [(_linalg.vecmat(v, inv), m) for v, m in zip(coords, mults)]
        for order in permutations(range(r)):
            cand = sorted((tuple(c[j] for j in order), m) for c, m in base)
            if best is None or cand < best:
                best = cand
    assert best is not None
    ints = _integerize([list(v) for v, _ in best])
    hnf = _linalg.hermite_basis(ints)
    hinv = _linalg.inverse(hnf)
    out = Counter()
    for v, (_, m) in zip(ints, best):
        c = _linalg.vecmat(v, hinv)
        out[tuple(int(x) for x in c)] += m
    return WeightMultiset(out, rank=r)


def canonicalize(fc: CharLike) -> FormalCharacter:
    """Canonical representative of the equivalence class (idempotent)."""
    return FormalCharacter(_canonical(_entries(fc)))


def equivalent(a: CharLike, b: CharLike) -> bool:
    ea, eb = _entries(a), _entries(b)
    if len(ea) != len(eb):
        return False
    if sorted(ea.counts().values()) != sorted(eb.counts().values()):
        return False
    if _linalg.rank(ea.support()) != _linalg.rank(eb.support()):
        return False
    return _canonical(ea) == _canonical(eb)


# -- bi-characters ---------------------------------------------------------------


@dataclass(frozen=True)
class FormalBiCharacter:
    """Pairs (derived-torus weight, full-torus weight), one per basis vector."""

    pairs: tuple[tuple[tuple, tuple], ...]

    @classmethod
    def from_projection(cls, full: WeightMultiset, projection: Sequence[Sequence[int]]) -> FormalBiCharacter:
        k = len(projection[0])
        pairs = []
        for w in full:
            der = tuple(sum(w[i] * projection[i][j] for i in range(full.rank)) for j in range(k))
            pairs.append((der, tuple(w)))
        return cls(tuple(sorted(pairs)))

    @property
    def full(self) -> WeightMultiset:
        return WeightMultiset([f for _, f in self.pairs])

    @property
    def derived(self) -> WeightMultiset:
        return WeightMultiset([d for d, _ in self.pairs])

    @property
    def full_rank(self) -> int:
        return _linalg.rank([f for _, f in self.pairs])

    @property
    def der_rank(self) -> int:
        return _linalg.rank([d for d, _ in self.pairs])


def _linear_map_between(src: Sequence[Sequence], dst: Sequence[Sequence]) -> bool:
    """Is there an injective linear map sending src[i] to dst[i] for every i?"""
    ra = _linalg.rank(src)
    rb = _linalg.rank(dst)
    joint = _linalg.rank([tuple(s) + tuple(d) for s, d in zip(src, dst)])
    return ra == rb == joint


def equivalent_bi(a: FormalBiCharacter, b: FormalBiCharacter) -> bool:
    """Simultaneous equivalence of the full and derived characters."""
    if len(a.pairs) != len(b.pairs) or a.der_rank != b.der_rank:
        return False
    if not equivalent(a.full, b.full):
        return False
    fa = sorted(set(f for _, f in a.pairs))
    fb = sorted(set(f for _, f in b.pairs))
    der_a = {f: d for d, f in a.pairs}
    der_b = {f: d for d, f in b.pairs}
    ca, r = _pivot_coordinates(fa)
    cb, rb = _pivot_coordinates(fb)
    if r != rb:
        return False
    count_a = Counter(f for _, f in a.pairs)
    count_b = Counter(f for _, f in b.pairs)
    index_b = {tuple(v): f for v, f in zip(cb, fb)}
    frame_a = next(fr for fr in combinations(range(len(fa)), r)
                   if _linalg.det([ca[i] for i in fr]) != 0)
    inv_a = _linalg.inverse([ca[i] for i in frame_a])
    frames_b = (p for fr in combinations(range(len(fb)), r)
                if _linalg.det([cb[i] for i in fr]) != 0 for p in permutations(fr))
    for frame_b in frames_b:
        fbm = [cb[i] for i in frame_b]
        phi = _linalg.matmul(inv_a, fbm)
        match = {}
        for v, f in zip(ca, fa):
            img = index_b.get(tuple(_linalg.vecmat(v, phi)))
            if img is None or count_b[img] != count_a[f]:
                break
            match[f] = img
        else:
            src = [der_a[f] for f in fa]
            dst = [der_b[match[f]] for f in fa]
            if _linear_map_between(src, dst):
                return True
    return False


# -- case predicates -------------------------------------------------------------


def zero_weight_count(fc: CharLike) -> int:
    ws = _entries(fc)
    return ws.multiplicity((0,) * ws.rank)


def subset_sum_zero(fc: CharLike, k: int, nonzero_only: bool = False) -> list[tuple[tuple, ...]]:
    """All sub-multisets of size k summing to zero, as sorted tuples of weights."""
    if k < 1:
        raise ValueError("k must be positive")
    ws = _entries(fc)
    zero = (0,) * ws.rank
    entries = [w for w in ws if not (nonzero_only and w == zero)]
    found = set()
    for combo in combinations(entries, k):
        if all(sum(c) == 0 for c in zip(*combo)):
            found.add(tuple(sorted(combo)))
    return sorted(found)


def multiplicity_free(fc: CharLike) -> bool:
    return all(m == 1 for _, m in _entries(fc).items())


def essentially_self_dual(fc: CharLike) -> tuple | None:
    """The twist nu with entries = nu - entries, or None if there is none."""
    ws = _entries(fc)
    if not len(ws):
        return (0,) * ws.rank
    sup = ws.support()
    nu = tuple(a + b for a, b in zip(sup[0], sup[-1]))
    flipped = ws.map(lambda w: tuple(n - x for n, x in zip(nu, w)))
    return nu if flipped == ws else None


@dataclass(frozen=True)
class LadderPartition:
    """A split of a rank-1 character into ladders scale*Z_d with a shared scale."""

    scale: Fraction
    ladders: tuple[int, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(d + 1 for d in self.ladders)


def ladder(d: int) -> list[int]:
    """Z_d = {-d, -d+2, ..., d}."""
    return list(range(-d, d + 1, 2))


def rank1_partitions(fc: CharLike) -> list[LadderPartition]:
    canon = canonicalize(fc).entries
    if canon.rank > 1:
        raise ValueError("rank1_partitions needs a rank-1 character")
    values = [w[0] if w else 0 for w in canon]
    positive = sorted({v for v in values if v > 0})
    scales = sorted({Fraction(v, d) for v in positive for d in range(1, len(values) + 1)})
    if not positive:
        scales = [Fraction(1)]
    out = []
    for c in scales:
        scaled = [Fraction(v) / c for v in values]
        if any(x.denominator != 1 for x in scaled):
            continue
        parts = _greedy_ladders(Counter(int(x) for x in scaled))
        if parts is not None:
            out.append(LadderPartition(c, tuple(sorted(parts, reverse=True))))
    return sorted(set(out), key=lambda p: (len(p.ladders), p.ladders, p.scale))


def _greedy_ladders(rest: Counter) -> list[int] | None:
    # The entry of largest absolute value is the top of its ladder, so the
    # decomposition at a fixed scale is forced.
    parts = []
    rest = Counter({k: v for k, v in rest.items() if v})
    while rest:
        d = max(abs(k) for k in rest)
        for v in ladder(d):
            if rest[v] <= 0:
                return None
            rest[v] -= 1
            if not rest[v]:
                del rest[v]
        parts.append(d)
    return parts


def feasible_dimension_types(fc: CharLike) -> list[tuple[int, ...]]:
    """Partitions of |fc| realizable by splitting it into zero-sum blocks.

    Blocks of size one therefore have to be zero weights.
    """
    ws = _entries(fc)
    entries = list(ws)
    n = len(entries)
    if n > 20:
        raise ValueError("exhaustive search is limited to 20 weights")
    sums = {}
    for mask in range(1, 1 << n):
        low = mask & -mask
        prev = mask ^ low
        w = entries[low.bit_length() - 1]
        base = sums.get(prev, (0,) * ws.rank)
        sums[mask] = tuple(a + b for a, b in zip(base, w))
    zero = (0,) * ws.rank
    zero_masks = [m for m, s in sums.items() if s == zero]
    by_low: dict[int, list[int]] = {}
    for m in zero_masks:
        by_low.setdefault(m & -m, []).append(m)

    @lru_cache(maxsize=None)
    def types(mask: int) -> frozenset[tuple[int, ...]]:
        if mask == 0:
            return frozenset({()})
        low = mask & -mask
        out = set()
        for block in by_low.get(low, ()):
            if block & mask == block:
                size = bin(block).count("1")
                for t in types(mask ^ block):
                    out.add(tuple(sorted(t + (size,), reverse=True)))
        return frozenset(out)

    return sorted(types((1 << n) - 1), key=lambda t: (len(t), tuple(-x for x in t)))


# -- the A3 = D3 dictionary ------------------------------------------------------

HALF = Fraction(1, 2)

#: A3 fundamental-weight coordinates -> D3 orthogonal coordinates.  The A3 nodes
#: 1, 2, 3 go to the D3 nodes 2, 1, 3 (the middle A3 node is the D3 vector node).
A3_TO_D3 = (
    (HALF, HALF, -HALF),
    (Fraction(1), Fraction(0), Fraction(0)),
    (HALF, HALF, HALF),
)


def a3_to_d3(ws: WeightMultiset) -> WeightMultiset:
    if ws.rank != 3:
        raise ValueError("expected an A3 weight multiset")
    return ws.transform(A3_TO_D3)


def d3_standard() -> WeightMultiset:
    """Weights +-e_i of the 6-dimensional orthogonal representation."""
    out = []
    for i in range(3):
        for s in (1, -1):
            v = [0, 0, 0]
            v[i] = s
            out.append(tuple(v))
    return WeightMultiset(out)


def d3_half_spin(parity: int) -> WeightMultiset:
    """(+-1/2)^3 with an even (parity 0) or odd (parity 1) number of minus signs."""
    out = []
    for signs in range(8):
        v = tuple(-HALF if signs >> i & 1 else HALF for i in range(3))
        if sum(1 for x in v if x < 0) % 2 == parity:
            out.append(v)
    return WeightMultiset(out)
