"""Faithful irreducible representations of small dimension.

Simple factors come from a monotone search over dominant weights; composite
classes are external tensor products whose factor dimensions multiply to n.
Classes are identified up to factor permutation and diagram automorphisms
(A_k reversal, D_k swap of the two spin nodes).
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations_with_replacement, permutations, product

from lieforge.charlab import FormalCharacter, equivalent, zero_weight_count
from lieforge.report import CaseReport
from lieforge.rootsys import SemisimpleAlgebra, SimpleType, Weight, parse_algebra
from lieforge.weights import FSType, IrreducibleRep, character, fs_type, weyl_dim


@dataclass(frozen=True)
class IrreducibleClass:
    rep: IrreducibleRep
    dim: int
    rank: int
    self_duality: FSType
    #: highest weights identified with rep.highest by diagram automorphisms
    outer_orbit: tuple[Weight, ...]
    label: str

    @property
    def outer_orbit_tag(self) -> Weight:
        """Canonical orbit marker: the lexicographically largest member."""
        return max(self.outer_orbit)

    @property
    def algebra(self) -> SemisimpleAlgebra:
        return self.rep.algebra

    def __str__(self) -> str:
        return f"{self.label} {self.rep}"


# -- diagram automorphisms ----------------------------------------------------

def _node_perms(t: SimpleType, full_triality: bool = False) -> list[tuple[int, ...]]:
    n = t.rank
    ident = tuple(range(n))
    if t.family == "A" and n >= 2:
        return [ident, tuple(reversed(ident))]
    if t.family == "D":
        if n == 4 and full_triality:
            out = []
            for img in permutations((0, 2, 3)):
                p = [0, 1, 0, 0]
                for src, dst in zip((0, 2, 3), img):
                    p[src] = dst
                out.append(tuple(p))
            return sorted(out)
        return [ident, ident[:-2] + (n - 1, n - 2)]
    return [ident]


def outer_orbit(t: SimpleType, w: Weight, full_triality: bool = False) -> tuple[Weight, ...]:
    """Images of w under the diagram automorphisms of t.

    For D4 only the swap of the two spin nodes is used unless full_triality
    is set, so the standard and half-spin representations stay apart.
    """
    imgs = set()
    for p in _node_perms(t, full_triality):
        v = [0] * t.rank
        for i, x in enumerate(w):
            v[p[i]] = x
        imgs.add(tuple(v))
    return tuple(sorted(imgs))


def _canonical(t: SimpleType, w: Weight) -> Weight:
    return max(outer_orbit(t, w))


# -- simple factors -----------------------------------------------------------

def simple_types(dim_max: int) -> list[SimpleType]:
    """Simple types having a nontrivial irreducible of dimension <= dim_max.

    B2 = C2 is listed once, as C2.  D needs rank >= 4 (D3 = A3).
    """
    out: list[SimpleType] = []
    k = 1
    while k + 1 <= dim_max:
        out.append(SimpleType("A", k))
        k += 1
    k = 3
    while min(2 * k + 1, 2 ** k) <= dim_max:
        out.append(SimpleType("B", k))
        k += 1
    k = 2
    while 2 * k <= dim_max:
        out.append(SimpleType("C", k))
        k += 1
    k = 4
    while min(2 * k, 2 ** (k - 1)) <= dim_max:
        out.append(SimpleType("D", k))
        k += 1
    if dim_max >= 7:
        out.append(SimpleType("G", 2))
    return out


def dominant_weights_up_to(t: SimpleType, dim_max: int) -> list[Weight]:
    """Nonzero dominant weights of t with Weyl dimension <= dim_max.

    Raising any coordinate strictly raises the dimension, so a depth-first
    walk that stops as soon as the bound is exceeded visits everything.
    """
    alg = SemisimpleAlgebra((t,))
    zero = (0,) * t.rank
    seen = {zero}
    stack = [zero]
    found = []
    while stack:
        w = stack.pop()
        for i in range(t.rank):
            v = w[:i] + (w[i] + 1,) + w[i + 1:]
            if v in seen:
                continue
            seen.add(v)
            if weyl_dim(IrreducibleRep(alg, v)) <= dim_max:
                found.append(v)
                stack.append(v)
    return sorted(found)


def _label(factors: list[tuple[SimpleType, int]]) -> str:
    return "x".join(f"{d}{t}" for t, d in factors)


def _make_class(parts: list[tuple[SimpleType, Weight, int]]) -> IrreducibleClass:
    alg = SemisimpleAlgebra(tuple(t for t, _, _ in parts))
    hw = tuple(x for _, w, _ in parts for x in w)
    rep = IrreducibleRep(alg, hw)
    orbit = tuple(sorted(tuple(x for piece in combo for x in piece)
                         for combo in product(*(outer_orbit(t, w) for t, w, _ in parts))))
    dim = 1
    for _, _, d in parts:
        dim *= d
    return IrreducibleClass(rep=rep, dim=dim, rank=alg.rank, self_duality=fs_type(rep),
                            outer_orbit=orbit, label=_label([(t, d) for t, _, d in parts]))


@lru_cache(maxsize=None)
def _simple_parts(dim_max: int) -> tuple[tuple[SimpleType, Weight, int], ...]:
    out = set()
    for t in simple_types(dim_max):
        alg = SemisimpleAlgebra((t,))
        for w in dominant_weights_up_to(t, dim_max):
            out.add((t, _canonical(t, w), weyl_dim(IrreducibleRep(alg, w))))
    return tuple(sorted(out, key=_part_key))


def _part_key(part: tuple[SimpleType, Weight, int]) -> tuple:
    t, w, d = part
    return (d, t, w)


def enumerate_simple(dim_max: int) -> list[IrreducibleClass]:
    """One class per (simple type, diagram-orbit of highest weight), dim <= dim_max."""
    if not 1 <= dim_max <= 64:
        raise ValueError(f"dim_max must lie in [1, 64], got {dim_max}")
    return [_make_class([p]) for p in _simple_parts(dim_max)]


def _mult_partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    """Factorizations of n into factors >= 2, non-increasing."""
    if n == 1:
        return [()]
    largest = n if largest is None else largest
    out = []
    for f in range(min(n, largest), 1, -1):
        if n % f == 0:
            out.extend((f,) + rest for rest in _mult_partitions(n // f, f))
    return out


def enumerate_composite(n: int) -> list[IrreducibleClass]:
    """Faithful irreducibles of dimension exactly n, simple or not."""
    if not 2 <= n <= 8:
        raise ValueError(f"n must lie in [2, 8], got {n}")
    by_dim: dict[int, list] = {}
    for p in _simple_parts(n):
        by_dim.setdefault(p[2], []).append(p)
    out = []
    for dims in _mult_partitions(n):
        counts: dict[int, int] = {}
        for d in dims:
            counts[d] = counts.get(d, 0) + 1
        choices = [list(combinations_with_replacement(by_dim.get(d, []), c))
                   for d, c in sorted(counts.items())]
        for combo in product(*choices):
            parts = sorted((p for group in combo for p in group), key=_part_key)
            out.append(_make_class(parts))
    return sorted(out, key=lambda c: (c.dim, c.rank, c.label, c.rep.highest))


def class_key(rep: IrreducibleRep) -> tuple:
    """Identifier of rep up to factor order and diagram automorphisms."""
    parts = []
    for t, w in zip(rep.algebra.factors, rep.algebra.blocks(rep.highest)):
        parts.append((t, _canonical(t, w)))
    return tuple(sorted(parts))


# -- the reference table ------------------------------------------------------

@dataclass(frozen=True)
class Table1Row:
    row: int
    label: str
    rep: IrreducibleRep
    dim: int
    rank: int
    character: FormalCharacter | None


def table1_fixture() -> list[Table1Row]:
    text = resources.files("lieforge").joinpath("fixtures/table1.ini").read_text()
    cfg = configparser.ConfigParser()
    cfg.read_string(text)
    rows = []
    for section in cfg.sections():
        if not section.startswith("row "):
            continue
        s = cfg[section]
        alg = parse_algebra(s["algebra"])
        hw = tuple(int(x) for x in s["highest"].split(","))
        ch = s.get("character", "").strip()
        rows.append(Table1Row(
            row=int(section.split()[1]), label=s["label"], rep=IrreducibleRep(alg, hw),
            dim=s.getint("dim"), rank=s.getint("rank"),
            character=FormalCharacter.from_text(ch) if ch else None))
    return sorted(rows, key=lambda r: r.row)


def table1_not_self_dual() -> set[int]:
    text = resources.files("lieforge").joinpath("fixtures/table1.ini").read_text()
    cfg = configparser.ConfigParser()
    cfg.read_string(text)
    return {int(x) for x in cfg["meta"]["not_self_dual"].split(",")}


def verify_table1() -> CaseReport:
    rep = CaseReport("table1")
    classes = {7: enumerate_composite(7), 8: enumerate_composite(8)}
    rep.add("count n=7", len(classes[7]) == 4, f"{len(classes[7])} classes")
    rep.add("count n=8", len(classes[8]) == 11, f"{len(classes[8])} classes")
    simple = {class_key(c.rep) for c in enumerate_simple(8) if c.dim >= 7}
    composite_simple = {class_key(c.rep) for c in classes[7] + classes[8] if len(c.algebra.factors) == 1}
    rep.add("simple classes agree with the simple enumeration", simple == composite_simple,
            f"{len(simple)} simple classes")

    rows = table1_fixture()
    # Row 14 is the half-spin orbit; rows 13 and 14 together form one triality orbit.
    enumerated = {class_key(c.rep): c for c in classes[7] + classes[8]}
    matched = set()
    for row in rows:
        key = class_key(row.rep)
        cls = enumerated.get(key)
        tag = f"row ({row.row})"
        if not rep.add(f"{tag} enumerated", cls is not None, row.label):
            continue
        matched.add(key)
        rep.add(f"{tag} label", cls.label == row.label, cls.label)
        rep.add(f"{tag} dim", cls.dim == row.dim == weyl_dim(row.rep), str(cls.dim))
        rep.add(f"{tag} rank", cls.rank == row.rank, str(cls.rank))
        computed = character(cls.rep)
        if row.character is not None:
            rep.add(f"{tag} character", equivalent(computed, row.character),
                    row.character.to_text())
        else:
            rep.add(f"{tag} computed character", len(computed) == row.dim,
                    FormalCharacter.of(computed).to_text())
    extra = sorted(str(enumerated[k]) for k in enumerated if k not in matched)
    rep.add("every class has a row", not extra, ", ".join(extra) or "bijection")

    by_row = {r.row: r for r in rows}
    nsd = {r.row for r in rows if fs_type(r.rep) is FSType.NOT_SELF_DUAL}
    rep.add("not self-dual rows", nsd == table1_not_self_dual(),
            ", ".join(f"({i})" for i in sorted(nsd)))
    if 13 in by_row and 14 in by_row:
        d4 = SimpleType("D", 4)
        related = by_row[14].rep.highest in outer_orbit(d4, by_row[13].rep.highest, full_triality=True)
        rep.add("rows (13),(14) related by triality", related,
                "kept as separate rows; one class up to triality")
    rep.add("row (5) has no zero weight",
            zero_weight_count(character(by_row[5].rep)) == 0 if 5 in by_row else False)
    return rep
