"""Weight multisets and characters of irreducible representations.

Characters come from Freudenthal's recursion run over the dominant weights
below the highest weight, then spread over Weyl orbits.  Symmetric and
exterior powers are taken directly on the listed eigenvalues.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Mapping, Sequence

from lieforge.rootsys import (
    SemisimpleAlgebra,
    Weight,
    as_algebra,
    dominant_representative,
    inner_product,
    is_dominant,
    weyl_orbit,
)


class NotACharacter(ValueError):
    """A multiset is not a nonnegative combination of irreducible characters."""


class WeightMultiset:
    """Immutable finite multiset of equal-length weight vectors.

    Entries may be integers or Fractions (orthogonal coordinates for spin
    weights need halves).
    """

    __slots__ = ("rank", "_counts", "_hash")

    def __init__(self, entries: Iterable[Sequence] | Mapping[Sequence, int] = (), rank: int | None = None):
        if isinstance(entries, Mapping):
            counts = Counter({tuple(k): v for k, v in entries.items()})
        else:
            counts = Counter(tuple(e) for e in entries)
        if any(v < 0 for v in counts.values()):
            raise ValueError("negative multiplicity")
        counts = Counter({k: v for k, v in counts.items() if v})
        lengths = {len(k) for k in counts}
        if len(lengths) > 1:
            raise ValueError(f"mixed vector lengths {sorted(lengths)}")
        if rank is None:
            if not lengths:
                raise ValueError("rank is required for an empty multiset")
            rank = lengths.pop()
        elif lengths and lengths != {rank}:
            raise ValueError(f"entries have length {lengths.pop()}, expected {rank}")
        self.rank = rank
        self._counts = counts
        self._hash = None

    # -- container protocol -------------------------------------------------
    def __len__(self) -> int:
        return sum(self._counts.values())

    def __iter__(self) -> Iterator[tuple]:
        for k in sorted(self._counts):
            for _ in range(self._counts[k]):
                yield k

    def __contains__(self, w) -> bool:
        return tuple(w) in self._counts

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightMultiset):
            return NotImplemented
        return self.rank == other.rank and self._counts == other._counts

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self._counts.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"WeightMultiset({self.to_text()})"

    def __add__(self, other: WeightMultiset) -> WeightMultiset:
        """Multiset union (direct sum of representations)."""
        _same_rank(self, other)
        return WeightMultiset(self._counts + other._counts, rank=self.rank)

    def __sub__(self, other: WeightMultiset) -> WeightMultiset:
        _same_rank(self, other)
        diff = Counter(self._counts)
        diff.subtract(other._counts)
        if any(v < 0 for v in diff.values()):
            raise NotACharacter("subtraction produced a negative multiplicity")
        return WeightMultiset(diff, rank=self.rank)

    def scaled(self, k: int) -> WeightMultiset:
        return WeightMultiset({w: k * m for w, m in self._counts.items()}, rank=self.rank)

    # -- accessors ------------------------------------------------------------
    def multiplicity(self, w: Sequence) -> int:
        return self._counts.get(tuple(w), 0)

    def items(self) -> list[tuple[tuple, int]]:
        return sorted(self._counts.items())

    def support(self) -> list[tuple]:
        return sorted(self._counts)

    def counts(self) -> Counter:
        return Counter(self._counts)

    def total(self) -> tuple:
        """Entry-weighted sum of the vectors."""
        s = [0] * self.rank
        for w, m in self._counts.items():
            for i, x in enumerate(w):
                s[i] += m * x
        return tuple(s)

    def map(self, f) -> WeightMultiset:
        out: Counter = Counter()
        for w, m in self._counts.items():
            out[tuple(f(w))] += m
        rank = len(next(iter(out))) if out else self.rank
        return WeightMultiset(out, rank=rank)

    def transform(self, matrix: Sequence[Sequence]) -> WeightMultiset:
        """Apply a linear map given as a (rank x k) matrix acting on row vectors."""
        k = len(matrix[0])
        return WeightMultiset(
            {tuple(sum(w[i] * matrix[i][j] for i in range(self.rank)) for j in range(k)): m
             for w, m in self._counts.items()}, rank=k)

    def to_text(self) -> str:
        parts = [f"({','.join(_fmt(x) for x in w)})x{m}" for w, m in self.items()]
        return f"rank={self.rank}: " + " ".join(parts)

    @classmethod
    def from_text(cls, text: str) -> WeightMultiset:
        return parse_weights(text)


def _fmt(x) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


def _num(tok: str):
    f = Fraction(tok.strip())
    return int(f) if f.denominator == 1 else f


_ENTRY = re.compile(r"\(([^)]*)\)(?:x(\d+))?")


def parse_weights(text: str) -> WeightMultiset:
    """Inverse of :meth:`WeightMultiset.to_text`.

    Multiplicities default to 1, so ``rank=1: (-1) (1)`` is accepted.
    """
    head, _, body = text.strip().partition(":")
    m = re.fullmatch(r"\s*rank\s*=\s*(\d+)\s*", head)
    if not m:
        raise ValueError(f"missing 'rank=N:' header in {text!r}")
    rank = int(m.group(1))
    counts: Counter = Counter()
    pos = 0
    body = body.strip()
    for hit in _ENTRY.finditer(body):
        if body[pos:hit.start()].strip():
            raise ValueError(f"unparsable text {body[pos:hit.start()]!r}")
        pos = hit.end()
        inner = hit.group(1).strip()
        vec = tuple(_num(t) for t in inner.split(",")) if inner else ()
        counts[vec] += int(hit.group(2) or 1)
    if body[pos:].strip():
        raise ValueError(f"unparsable text {body[pos:]!r}")
    return WeightMultiset(counts, rank=rank)


def _same_rank(a: WeightMultiset, b: WeightMultiset) -> None:
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")


def trivial(rank: int) -> WeightMultiset:
    return WeightMultiset([(0,) * rank])


@dataclass(frozen=True)
class IrreducibleRep:
    algebra: SemisimpleAlgebra
    highest: Weight

    def __post_init__(self) -> None:
        object.__setattr__(self, "algebra", as_algebra(self.algebra))
        object.__setattr__(self, "highest", tuple(int(x) for x in self.highest))
        self.algebra.check_weight(self.highest)
        if not is_dominant(self.highest):
            raise ValueError(f"highest weight {self.highest} is not dominant")

    @property
    def faithful(self) -> bool:
        return all(any(b) for b in self.algebra.blocks(self.highest))

    def __str__(self) -> str:
        blocks = ";".join(",".join(map(str, b)) for b in self.algebra.blocks(self.highest))
        return f"({self.algebra}, [{blocks}])"


def weyl_dim(rep: IrreducibleRep) -> int:
    return _weyl_dim(rep.algebra, rep.highest)


@lru_cache(maxsize=None)
def _weyl_dim(alg: SemisimpleAlgebra, lam: Weight) -> int:
    # <lam + rho, alpha^vee> / <rho, alpha^vee>; with alpha = sum c_i alpha_i the
    # coroot is sum c_i d_i / d_alpha alpha_i^vee, and d_alpha cancels.
    d = alg.symmetrizer
    num, den = 1, 1
    for coeffs in alg.root_coefficients:
        num *= sum(c * di * (x + 1) for c, di, x in zip(coeffs, d, lam) if c)
        den *= sum(c * di for c, di in zip(coeffs, d) if c)
    q, r = divmod(num, den)
    assert r == 0
    return q


def dominant_multiplicities(rep: IrreducibleRep) -> dict[Weight, int]:
    """Freudenthal multiplicities of the dominant weights of ``rep``."""
    return dict(_freudenthal(rep.algebra, rep.highest))


@lru_cache(maxsize=None)
def _freudenthal(alg: SemisimpleAlgebra, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    pos = alg.positive_roots
    # Dominant weights below lam are connected to lam by subtracting positive
    # roots through dominant weights, so a search over those finds all of them.
    dominant = {lam}
    stack = [lam]
    while stack:
        v = stack.pop()
        for a in pos:
            u = tuple(x - y for x, y in zip(v, a))
            if is_dominant(u) and u not in dominant:
                dominant.add(u)
                stack.append(u)
    depth = {mu: alg.height(tuple(x - y for x, y in zip(lam, mu))) for mu in dominant}
    order = sorted(dominant, key=lambda mu: (depth[mu], tuple(-x for x in mu)))

    rho = alg.weyl_vector
    lr = tuple(a + b for a, b in zip(lam, rho))
    top = inner_product(alg, lr, lr)
    mult: dict[Weight, int] = {lam: 1}

    def m(w: Weight) -> int:
        return mult.get(dominant_representative(alg, w), 0)

    for mu in order[1:]:
        total = Fraction(0)
        for a in pos:
            k = 1
            while True:
                w = tuple(x + k * y for x, y in zip(mu, a))
                mw = m(w)
                if not mw:
                    break
                total += mw * inner_product(alg, w, a)
                k += 1
        mr = tuple(a + b for a, b in zip(mu, rho))
        denom = top - inner_product(alg, mr, mr)
        val = 2 * total / denom
        assert val.denominator == 1 and val >= 0, (lam, mu, val)
        mult[mu] = int(val)
    return tuple(sorted((w, c) for w, c in mult.items() if c))


def character(rep: IrreducibleRep) -> WeightMultiset:
    return _character(rep.algebra, rep.highest)


@lru_cache(maxsize=None)
def _character(alg: SemisimpleAlgebra, lam: Weight) -> WeightMultiset:
    counts: Counter = Counter()
    for mu, c in _freudenthal(alg, lam):
        for w in weyl_orbit(alg, mu):
            counts[w] = c
    return WeightMultiset(counts, rank=alg.rank)


def tensor(a: WeightMultiset, b: WeightMultiset) -> WeightMultiset:
    """Internal tensor product: both multisets live on the same torus."""
    _same_rank(a, b)
    out: Counter = Counter()
    for v, m in a.items():
        for w, n in b.items():
            out[tuple(x + y for x, y in zip(v, w))] += m * n
    return WeightMultiset(out, rank=a.rank)


def tensor_external(a: WeightMultiset, b: WeightMultiset) -> WeightMultiset:
    """External tensor product: coordinates are concatenated."""
    out: Counter = Counter()
    for v, m in a.items():
        for w, n in b.items():
            out[v + w] += m * n
    return WeightMultiset(out, rank=a.rank + b.rank)


def _vsum(ws: Iterable[tuple]) -> tuple:
    ws = list(ws)
    return tuple(sum(c) for c in zip(*ws))


def sym2(x: WeightMultiset) -> WeightMultiset:
    entries = list(x)
    return WeightMultiset([_vsum(p) for p in combinations_with_replacement(entries, 2)], rank=x.rank)


def wedge2(x: WeightMultiset) -> WeightMultiset:
    entries = list(x)
    return WeightMultiset([_vsum(p) for p in combinations(entries, 2)], rank=x.rank)


def wedge3(x: WeightMultiset) -> WeightMultiset:
    entries = list(x)
    if len(entries) < 3:
        raise ValueError("wedge3 needs at least three weights")
    return WeightMultiset([_vsum(p) for p in combinations(entries, 3)], rank=x.rank)


def decompose(x: WeightMultiset, alg: SemisimpleAlgebra) -> list[tuple[Weight, int]]:
    """Split a Weyl-stable multiset into irreducible characters.

    Repeatedly strips the character of a highest remaining weight.  Raises
    NotACharacter if that ever drives a multiplicity negative or leaves a
    non-integral weight behind.
    """
    alg = as_algebra(alg)
    if x.rank != alg.rank:
        raise ValueError(f"multiset rank {x.rank} does not match algebra rank {alg.rank}")
    rest = x.counts()
    out: dict[Weight, int] = {}
    while rest:
        best_h = max(alg.height(w) for w in rest)
        top = max(w for w in rest if alg.height(w) == best_h)
        if not is_dominant(top) or any(isinstance(c, Fraction) and c.denominator != 1 for c in top):
            raise NotACharacter(f"highest remaining weight {top} is not dominant integral")
        top = tuple(int(c) for c in top)
        k = rest[top]
        for w, c in _character(alg, top).items():
            left = rest.get(w, 0) - k * c
            if left < 0:
                raise NotACharacter(f"multiplicity of {w} would become negative")
            if left:
                rest[w] = left
            else:
                rest.pop(w, None)
        out[top] = out.get(top, 0) + k
    return sorted(out.items(), key=lambda kv: (-alg.height(kv[0]), tuple(-c for c in kv[0])))


def dual(x: WeightMultiset) -> WeightMultiset:
    return x.map(lambda w: tuple(-c for c in w))


def is_self_dual(x: WeightMultiset) -> bool:
    return dual(x) == x


class FSType(str, Enum):
    ORTHOGONAL = "Orthogonal"
    SYMPLECTIC = "Symplectic"
    NOT_SELF_DUAL = "NotSelfDual"


def trivial_multiplicity(x: WeightMultiset, alg: SemisimpleAlgebra) -> int:
    """Multiplicity of the trivial constituent (not just the zero-weight count)."""
    zero = (0,) * alg.rank
    return dict(decompose(x, alg)).get(zero, 0)


def fs_type(rep: IrreducibleRep) -> FSType:
    ch = character(rep)
    if not is_self_dual(ch):
        return FSType.NOT_SELF_DUAL
    if trivial_multiplicity(sym2(ch), rep.algebra):
        return FSType.ORTHOGONAL
    if trivial_multiplicity(wedge2(ch), rep.algebra):
        return FSType.SYMPLECTIC
    raise AssertionError(f"self-dual {rep} has no invariant bilinear form")


def irrep(alg: SemisimpleAlgebra | str, *highest: int) -> IrreducibleRep:
    """Shorthand: ``irrep("A2", 1, 1)``."""
    return IrreducibleRep(as_algebra(alg), tuple(highest))
