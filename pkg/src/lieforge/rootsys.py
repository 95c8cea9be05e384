"""Cartan data, inner products and Weyl orbits for types A, B, C, D, G2.

Conventions, fixed once here:

* Bourbaki node numbering.  ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so row
  ``i`` of the Cartan matrix is the simple root ``alpha_i`` written in
  fundamental-weight coordinates.  G2 is ``[[2, -1], [-3, 2]]`` (alpha_1 short).
* Weights are integer tuples in fundamental-weight coordinates.  A semisimple
  algebra concatenates the coordinates of its simple factors in order.
* The invariant form is normalized so that short roots have squared length 2;
  ``symmetrizer[i] = (alpha_i, alpha_i) / 2``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from lieforge import _linalg

Weight = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4, "G": 2}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _MIN_RANK:
            raise ValueError(f"unsupported family {self.family!r}")
        if self.family == "G" and self.rank != 2:
            raise ValueError("G only exists in rank 2")
        if self.family == "D" and self.rank in (2, 3):
            raise ValueError(
                f"D{self.rank} is not accepted; use "
                + ("A1xA1" if self.rank == 2 else "A3")
            )
        if self.rank < _MIN_RANK[self.family]:
            raise ValueError(f"invalid rank {self.rank} for family {self.family}")

    @classmethod
    def parse(cls, text: str) -> SimpleType:
        m = re.fullmatch(r"\s*([ABCDG])_?(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse simple type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class RootDatum:
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[Weight, ...]
    weyl_vector: Weight
    #: the same positive roots in the simple-root basis
    root_coefficients: tuple[Weight, ...] = ()


def cartan_matrix(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    if t.family == "G":
        return ((2, -1), (-3, 2))
    chain = n - 1 if t.family != "D" else n - 2
    for i in range(chain):
        a[i][i + 1] = a[i + 1][i] = -1
    if t.family == "B" and n >= 2:
        a[n - 2][n - 1], a[n - 1][n - 2] = -2, -1
    elif t.family == "C" and n >= 2:
        a[n - 2][n - 1], a[n - 1][n - 2] = -1, -2
    elif t.family == "D":
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    return tuple(tuple(r) for r in a)


def _symmetrizer(t: SimpleType) -> tuple[int, ...]:
    n = t.rank
    if t.family == "B":
        return (2,) * (n - 1) + (1,)
    if t.family == "C":
        return (1,) * (n - 1) + (2,)
    if t.family == "G":
        return (1, 3)
    return (1,) * n


def _positive_roots_in_root_basis(cartan: Sequence[Sequence[int]]) -> list[Weight]:
    # Build roots height by height from simple root strings: beta + alpha_i is a
    # root iff p - <beta, alpha_i^vee> > 0, p being how far the string extends down.
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                label = sum(beta[k] * cartan[k][i] for k in range(n))
                p = 0
                lower = list(beta)
                while True:
                    lower[i] -= 1
                    if tuple(lower) in roots:
                        p += 1
                    else:
                        break
                if p - label > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda c: (sum(c), c))


@lru_cache(maxsize=None)
def root_datum(t: SimpleType) -> RootDatum:
    cartan = cartan_matrix(t)
    coeffs = _positive_roots_in_root_basis(cartan)
    pos = tuple(_linalg.vecmat(c, cartan) for c in coeffs)
    return RootDatum(
        cartan=cartan,
        symmetrizer=_symmetrizer(t),
        positive_roots=pos,
        weyl_vector=(1,) * t.rank,
        root_coefficients=tuple(coeffs),
    )


def positive_root_count(t: SimpleType) -> int:
    """Closed-form count, used only as a cross-check."""
    n = t.rank
    return {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1), "G": 6}[t.family]


@dataclass(frozen=True)
class SemisimpleAlgebra:
    factors: tuple[SimpleType, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("a semisimple algebra needs at least one simple factor")
        object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def of(cls, *types: SimpleType | str) -> SemisimpleAlgebra:
        return cls(tuple(t if isinstance(t, SimpleType) else SimpleType.parse(t) for t in types))

    def __str__(self) -> str:
        return "x".join(str(f) for f in self.factors)

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, k = [], 0
        for f in self.factors:
            out.append(k)
            k += f.rank
        return tuple(out)

    def blocks(self, w: Sequence) -> list[tuple]:
        """Split a concatenated weight into per-factor pieces."""
        return [tuple(w[o:o + f.rank]) for o, f in zip(self.offsets, self.factors)]

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        a = [[0] * n for _ in range(n)]
        for o, f in zip(self.offsets, self.factors):
            c = root_datum(f).cartan
            for i in range(f.rank):
                for j in range(f.rank):
                    a[o + i][o + j] = c[i][j]
        return tuple(tuple(r) for r in a)

    @cached_property
    def symmetrizer(self) -> tuple[int, ...]:
        return tuple(d for f in self.factors for d in root_datum(f).symmetrizer)

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        out = []
        for o, f in zip(self.offsets, self.factors):
            for r in root_datum(f).positive_roots:
                v = [0] * self.rank
                v[o:o + f.rank] = r
                out.append(tuple(v))
        return tuple(out)

    @cached_property
    def root_coefficients(self) -> tuple[Weight, ...]:
        """Positive roots in the simple-root basis, aligned with positive_roots."""
        out = []
        for o, f in zip(self.offsets, self.factors):
            for c in root_datum(f).root_coefficients:
                v = [0] * self.rank
                v[o:o + f.rank] = c
                out.append(tuple(v))
        return tuple(out)

    @cached_property
    def weyl_vector(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """Form on fundamental weights: (omega_i, omega_j) = (A^-1)_{ji} d_i."""
        inv = _linalg.inverse(self.cartan)
        d = self.symmetrizer
        n = self.rank
        return tuple(tuple(inv[j][i] * d[i] for j in range(n)) for i in range(n))

    @cached_property
    def _cartan_inverse(self) -> list[list[Fraction]]:
        return _linalg.inverse(self.cartan)

    def simple_root(self, i: int) -> Weight:
        return self.cartan[i]

    def reflect(self, w: Sequence[int], i: int) -> Weight:
        c = w[i]
        if c == 0:
            return tuple(w)
        row = self.cartan[i]
        return tuple(x - c * a for x, a in zip(w, row))

    def root_coordinates(self, w: Sequence[int]) -> tuple[Fraction, ...]:
        """Express a weight in the simple-root basis (rational in general)."""
        return _linalg.vecmat(w, self._cartan_inverse)

    def height(self, w: Sequence[int]) -> Fraction:
        return sum(self.root_coordinates(w), Fraction(0))

    def check_weight(self, w: Sequence) -> None:
        if len(w) != self.rank:
            raise ValueError(f"weight {tuple(w)} has length {len(w)}, expected {self.rank}")


def parse_algebra(text: str) -> SemisimpleAlgebra:
    """Parse ``"A1xC2"`` (also accepts ``*`` or ``×`` as separators)."""
    parts = [p for p in re.split(r"[x×*]", text.strip()) if p]
    return SemisimpleAlgebra.of(*parts)


def as_algebra(alg: SemisimpleAlgebra | SimpleType | str) -> SemisimpleAlgebra:
    if isinstance(alg, SemisimpleAlgebra):
        return alg
    if isinstance(alg, SimpleType):
        return SemisimpleAlgebra((alg,))
    return parse_algebra(alg)


def inner_product(alg: SemisimpleAlgebra, v: Sequence, w: Sequence) -> Fraction:
    alg.check_weight(v)
    alg.check_weight(w)
    g = alg.gram
    return sum((v[i] * g[i][j] * w[j] for i in range(len(v)) for j in range(len(w))
                if v[i] and w[j]), Fraction(0))


def dominant_representative(alg: SemisimpleAlgebra, w: Sequence[int]) -> Weight:
    w = tuple(w)
    while True:
        for i, c in enumerate(w):
            if c < 0:
                w = alg.reflect(w, i)
                break
        else:
            return w


def is_dominant(w: Iterable) -> bool:
    return all(c >= 0 for c in w)


def weyl_orbit(alg: SemisimpleAlgebra, w: Sequence[int]) -> frozenset[Weight]:
    alg.check_weight(w)
    return _orbit(alg, tuple(w))


@lru_cache(maxsize=4096)
def _orbit(alg: SemisimpleAlgebra, w: Weight) -> frozenset[Weight]:
    seen = {w}
    queue = deque([w])
    while queue:
        v = queue.popleft()
        for i in range(alg.rank):
            if v[i]:
                u = alg.reflect(v, i)
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return frozenset(seen)


def _fundamental_in_orthogonal(t: SimpleType) -> list[list[Fraction]]:
    n = t.rank
    half = Fraction(1, 2)
    rows = []
    for i in range(n):
        v = [Fraction(0)] * n
        if t.family == "B" and i == n - 1:
            v = [half] * n
        elif t.family == "D" and i == n - 2:
            v = [half] * (n - 1) + [-half]
        elif t.family == "D" and i == n - 1:
            v = [half] * n
        else:
            for k in range(i + 1):
                v[k] = Fraction(1)
        rows.append(v)
    return rows


def to_orthogonal(t: SimpleType, w: Sequence[int]) -> tuple[Fraction, ...]:
    """Fundamental-weight coordinates to the usual e_i coordinates (B, C, D)."""
    if t.family not in "BCD":
        raise ValueError(f"orthogonal coordinates are only defined here for B, C, D, not {t}")
    return _linalg.vecmat(w, _fundamental_in_orthogonal(t))


def from_orthogonal(t: SimpleType, v: Sequence) -> Weight:
    inv = _linalg.inverse(_fundamental_in_orthogonal(t))
    out = _linalg.vecmat([Fraction(x) for x in v], inv)
    if any(x.denominator != 1 for x in out):
        raise ValueError(f"{tuple(v)} is not in the weight lattice of {t}")
    return tuple(int(x) for x in out)
