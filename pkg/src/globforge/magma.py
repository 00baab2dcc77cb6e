"""Composition structures, magma and strict-category validators, canonical
reversors, and the reversibility index.

A composition structure stores, for each 0 <= p < m <= D, a finite partial
map comp[m][p] on pairs of m-cells.  The pair (y, x) stands for the composite
"y after x": it is admissible exactly when the p-source of y equals the
p-target of x.  The positional axioms locate the boundary of a composite:

  (a)  p < q < m:  the q-boundary of y o_p x is the q-composite of the
                   q-boundaries, side by side;
  (b)  q = p:      source comes from x, target from y;
  (c)  q < p:      both cells already share those boundaries, and the
                   composite inherits them.

Strictness adds associativity, units via reflexors, the interchange law,
and functoriality of reflexors over lower compositions.  In a strict
structure every invertible cell has a unique inverse, which is what
derive_canonical_reversors extracts by brute-force search.

Validators take `require_total=False` to check size- or length-bounded
fragments, where composites may fall outside the stored carrier; axioms are
then checked on the stored entries only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .globular import GlobularMorphism, TruncatedGlobularSet, boundary, validate_morphism
from .layers import ReflexorStructure, ReversorStructure
from .report import ValidationReport

LAW_POSITIONAL_A = "boundary of a composite above the composition level is the composite of boundaries"
LAW_POSITIONAL_B = "at the composition level, source comes from the second factor and target from the first"
LAW_POSITIONAL_C = "below the composition level both factors share the boundary and the composite inherits it"
LAW_COMP_TOTAL = "composition is defined exactly on boundary-compatible pairs"
LAW_ASSOC = "composition is associative"
LAW_UNITS = "degenerate cells on the boundary are units for composition"
LAW_INTERCHANGE = "the two middle-four bracketings of a composable square agree"
LAW_REFL_FUNCTORIAL = "reflexors distribute over lower compositions"
LAW_REFL_ABSORB = "a reflexor of a degenerate cell is the degenerate cell of the core"
LAW_UNIQUE_INVERSE = "inverses in a strict structure are unique"
LAW_FUNCTOR = "strict morphisms preserve composition, reflexors, and hence reversors"


class NoInverseError(Exception):
    """An m-cell admits no inverse over dimension p."""

    def __init__(self, cell: str, m: int, p: int):
        super().__init__(f"{m}-cell {cell} has no inverse over dimension {p}")
        self.cell, self.m, self.p = cell, m, p


class AmbiguousInverseError(Exception):
    """More than one inverse found; the input violates strictness despite passing validation."""

    def __init__(self, cell: str, m: int, p: int, candidates: tuple[str, ...]):
        super().__init__(f"{m}-cell {cell} has several inverses over dimension {p}: {candidates}")
        self.cell, self.m, self.p, self.candidates = cell, m, p, candidates


@dataclass(frozen=True)
class CompositionStructure:
    """Tables comp[(m, p)] : {(y, x) -> y o_p x} for 0 <= p < m <= D."""

    maps: Mapping[tuple[int, int], Mapping[tuple[str, str], str]]

    def table(self, m: int, p: int) -> Mapping[tuple[str, str], str]:
        return self.maps.get((m, p), {})

    def get(self, m: int, p: int, y: str, x: str) -> str | None:
        return self.maps.get((m, p), {}).get((y, x))

    def apply(self, m: int, p: int, y: str, x: str) -> str:
        return self.maps[(m, p)][(y, x)]


@dataclass(frozen=True)
class InfinityMagma:
    gs: TruncatedGlobularSet
    refl: ReflexorStructure
    comp: CompositionStructure


@dataclass(frozen=True)
class NMagma:
    """A magma with an unconstrained reversor layer on top."""

    magma: InfinityMagma
    rev: ReversorStructure

    @property
    def threshold(self) -> int:
        return self.rev.threshold


@dataclass(frozen=True)
class StrictNCategory:
    """A strict structure whose cells are invertible down to the threshold."""

    magma: InfinityMagma
    threshold: int

    @property
    def gs(self) -> TruncatedGlobularSet:
        return self.magma.gs


def compatible_pairs(gs: TruncatedGlobularSet, m: int, p: int) -> list[tuple[str, str]]:
    """All (y, x) with the p-source of y equal to the p-target of x."""
    by_src: dict[str, list[str]] = {}
    for y in gs.grade(m):
        by_src.setdefault(boundary(gs, m, y, p, "source"), []).append(y)
    pairs = []
    for x in gs.grade(m):
        tx = boundary(gs, m, x, p, "target")
        for y in by_src.get(tx, ()):
            pairs.append((y, x))
    return pairs


def validate_magma(mag: InfinityMagma, *, require_total: bool = True) -> ValidationReport:
    """Positional axioms plus domain exactness of the composition tables.

    Assumes the underlying globular set and reflexors already validate.
    With require_total=False, missing composites on compatible pairs are
    tolerated (bounded fragments); stored entries are always checked.
    """
    rep = ValidationReport("magma")
    gs, comp = mag.gs, mag.comp

    for (m, p), table in sorted(comp.maps.items()):
        if not (0 <= p < m <= gs.max_dim):
            rep.add(
                "positional.domain", LAW_COMP_TOTAL, (),
                f"table comp[{m}][{p}] is outside the range 0 <= p < m <= {gs.max_dim}",
            )
            continue
        grade = set(gs.grade(m))
        for (y, x), z in sorted(table.items()):
            if y not in grade or x not in grade or z not in grade:
                rep.add(
                    "positional.domain", LAW_COMP_TOTAL, (y, x, z),
                    f"comp[{m}][{p}] entry ({y}, {x}) -> {z} mentions cells outside grade {m}",
                )
                continue
            if boundary(gs, m, y, p, "source") != boundary(gs, m, x, p, "target"):
                rep.add(
                    "positional.domain", LAW_COMP_TOTAL, (y, x),
                    f"comp[{m}][{p}] is defined on ({y}, {x}) although the pair is not {p}-compatible",
                )
    if not rep.valid:
        return rep

    if require_total:
        for m in range(1, gs.max_dim + 1):
            for p in range(m):
                table = comp.table(m, p)
                for (y, x) in compatible_pairs(gs, m, p):
                    if (y, x) not in table:
                        rep.add(
                            "positional.total", LAW_COMP_TOTAL, (y, x),
                            f"comp[{m}][{p}] misses the compatible pair ({y}, {x})",
                        )

    for (m, p), table in sorted(comp.maps.items()):
        for (y, x), z in sorted(table.items()):
            for q in range(m):
                for side, tag in (("source", "src"), ("target", "tgt")):
                    bz = boundary(gs, m, z, q, side)
                    if q > p:
                        by = boundary(gs, m, y, q, side)
                        bx = boundary(gs, m, x, q, side)
                        want = comp.get(q, p, by, bx)
                        if want is None:
                            if require_total:
                                rep.add(
                                    "positional.total", LAW_COMP_TOTAL, (by, bx),
                                    f"comp[{q}][{p}] misses ({by}, {bx}) needed for the boundary of ({y}, {x})",
                                )
                            continue
                        if bz != want:
                            rep.add(
                                "positional.a", LAW_POSITIONAL_A, (y, x, z),
                                f"{tag}_{q}({y} o[{m},{p}] {x}) = {bz} but the composite of boundaries is {want}",
                            )
                    elif q == p:
                        want = boundary(gs, m, x if side == "source" else y, q, side)
                        if bz != want:
                            rep.add(
                                "positional.b", LAW_POSITIONAL_B, (y, x, z),
                                f"{tag}_{p}({y} o[{m},{p}] {x}) = {bz}, expected {want}",
                            )
                    else:
                        bx = boundary(gs, m, x, q, side)
                        # sanity cross-check: compatibility plus globularity force
                        # the factors to agree below the composition level
                        assert bx == boundary(gs, m, y, q, side)
                        if bz != bx:
                            rep.add(
                                "positional.c", LAW_POSITIONAL_C, (y, x, z),
                                f"{tag}_{q}({y} o[{m},{p}] {x}) = {bz}, expected the shared boundary {bx}",
                            )
    return rep


def validate_strict(mag: InfinityMagma, *, require_total: bool = True) -> ValidationReport:
    """Associativity, units, interchange, and reflexor clauses on a valid magma.

    Assumes validate_magma already passed.  On partial fragments, equations
    whose inner composites are absent are skipped.
    """
    rep = ValidationReport("strict")
    gs, refl, comp = mag.gs, mag.refl, mag.comp

    for (m, p), table in sorted(comp.maps.items()):
        for (y, x), yx in sorted(table.items()):
            for z in gs.grade(m):
                zy = comp.get(m, p, z, y)
                if zy is None:
                    continue
                left = comp.get(m, p, zy, x)
                right = comp.get(m, p, z, yx)
                if left is None or right is None:
                    if require_total:
                        rep.add(
                            "assoc.triple", LAW_ASSOC, (z, y, x),
                            f"a composite needed for the triple ({z}, {y}, {x}) over comp[{m}][{p}] is missing",
                        )
                    continue
                if left != right:
                    rep.add(
                        "assoc.triple", LAW_ASSOC, (z, y, x),
                        f"(({z} o {y}) o {x}) = {left} but ({z} o ({y} o {x})) = {right} over comp[{m}][{p}]",
                    )

    for m in range(1, gs.max_dim + 1):
        for p in range(m):
            table = comp.table(m, p)
            for x in gs.grade(m):
                sx = boundary(gs, m, x, p, "source")
                tx = boundary(gs, m, x, p, "target")
                if not refl.defined(p, m, sx) or not refl.defined(p, m, tx):
                    continue
                unit_s, unit_t = refl.apply(p, m, sx), refl.apply(p, m, tx)
                right = table.get((x, unit_s))
                left = table.get((unit_t, x))
                if right is None or left is None:
                    if require_total:
                        rep.add(
                            "units.missing", LAW_UNITS, (x,),
                            f"a unit composite for {x} over comp[{m}][{p}] is missing",
                        )
                    continue
                if right != x:
                    rep.add(
                        "units.right", LAW_UNITS, (x,),
                        f"{x} o[{m},{p}] refl[{p}][{m}]({sx}) = {right}, expected {x}",
                    )
                if left != x:
                    rep.add(
                        "units.left", LAW_UNITS, (x,),
                        f"refl[{p}][{m}]({tx}) o[{m},{p}] {x} = {left}, expected {x}",
                    )

    for m in range(2, gs.max_dim + 1):
        for p in range(m - 1):
            for q in range(p + 1, m):
                table_q = comp.table(m, q)
                for (y2, y1), yy in sorted(table_q.items()):
                    for (x2, x1), xx in sorted(table_q.items()):
                        outer = comp.get(m, p, yy, xx)
                        if outer is None:
                            continue
                        a = comp.get(m, p, y2, x2)
                        b = comp.get(m, p, y1, x1)
                        if a is None or b is None:
                            continue
                        other = comp.get(m, q, a, b)
                        if other is None:
                            continue
                        if outer != other:
                            rep.add(
                                "interchange.square", LAW_INTERCHANGE, (y2, y1, x2, x1),
                                f"(({y2} o_{q} {y1}) o_{p} ({x2} o_{q} {x1})) = {outer} "
                                f"but (({y2} o_{p} {x2}) o_{q} ({y1} o_{p} {x1})) = {other}",
                            )

    for m in range(2, gs.max_dim + 1):
        for p in range(1, m):
            for q in range(p):
                table = comp.table(p, q)
                for (y, x), yx in sorted(table.items()):
                    if not (refl.defined(p, m, y) and refl.defined(p, m, x) and refl.defined(p, m, yx)):
                        continue
                    ry, rx, ryx = refl.apply(p, m, y), refl.apply(p, m, x), refl.apply(p, m, yx)
                    together = comp.get(m, q, ry, rx)
                    if together is None:
                        if require_total:
                            rep.add(
                                "refl-functorial.pair", LAW_REFL_FUNCTORIAL, (y, x),
                                f"comp[{m}][{q}] misses (refl({y}), refl({x}))",
                            )
                        continue
                    if ryx != together:
                        rep.add(
                            "refl-functorial.pair", LAW_REFL_FUNCTORIAL, (y, x),
                            f"refl[{p}][{m}]({y} o[{p},{q}] {x}) = {ryx} "
                            f"but refl({y}) o[{m},{q}] refl({x}) = {together}",
                        )

    for m in range(2, gs.max_dim + 1):
        for p in range(1, m):
            for q in range(p):
                for a in gs.grade(q):
                    if not refl.defined(q, m, a):
                        continue
                    via_p = refl.apply(p, m, refl.apply(q, p, a))
                    direct = refl.apply(q, m, a)
                    if via_p != direct:
                        rep.add(
                            "refl-absorb.chain", LAW_REFL_ABSORB, (a,),
                            f"refl[{p}][{m}](refl[{q}][{p}]({a})) = {via_p} but refl[{q}][{m}]({a}) = {direct}",
                        )
    return rep


def _inverse_candidates(
    mag: InfinityMagma, m: int, p: int, alpha: str, *, cells: tuple[str, ...]
) -> list[str]:
    gs, refl, comp = mag.gs, mag.refl, mag.comp
    s_a = boundary(gs, m, alpha, p, "source")
    t_a = boundary(gs, m, alpha, p, "target")
    if not (refl.defined(p, m, s_a) and refl.defined(p, m, t_a)):
        return []
    unit_t = refl.apply(p, m, t_a)
    unit_s = refl.apply(p, m, s_a)
    found = []
    for beta in cells:
        if comp.get(m, p, alpha, beta) == unit_t and comp.get(m, p, beta, alpha) == unit_s:
            found.append(beta)
    return found


def derive_canonical_reversors(cat: StrictNCategory, n: int) -> ReversorStructure:
    """Search each grade for the unique two-sided inverse over every p >= n.

    The result satisfies the reversor boundary axioms, is involutive, and is
    compatible with the reflexors; those are theorems about strict
    structures, and the validators confirm them on any concrete input.
    """
    gs = cat.gs
    maps: dict[tuple[int, int], dict[str, str]] = {}
    for m in range(n + 1, gs.max_dim + 1):
        cells = gs.grade(m)
        for p in range(n, m):
            table: dict[str, str] = {}
            for alpha in cells:
                found = _inverse_candidates(cat.magma, m, p, alpha, cells=cells)
                if not found:
                    raise NoInverseError(alpha, m, p)
                if len(found) > 1:
                    raise AmbiguousInverseError(alpha, m, p, tuple(found))
                table[alpha] = found[0]
            maps[(m, p)] = table
    return ReversorStructure(threshold=n, maps=maps)


def compute_index(cat: StrictNCategory) -> int:
    """Least threshold k such that every cell is invertible over all p >= k.

    Each (m, p) pair is searched once and shared across thresholds: a pair
    that fails forces the threshold above p, and reversibility is monotone
    in the threshold, so the answer is the largest such p + 1 (at most
    max_dim, where the condition is vacuous).
    """
    gs = cat.gs
    index = 0
    for m in range(1, gs.max_dim + 1):
        cells = gs.grade(m)
        for p in range(m):
            if p < index:
                continue  # a lower pair already pushed the threshold past p
            for alpha in cells:
                if len(_inverse_candidates(cat.magma, m, p, alpha, cells=cells)) != 1:
                    index = p + 1
                    break
    return index


def check_functor_reversors(
    F: GlobularMorphism, cat: StrictNCategory, cat2: StrictNCategory
) -> ValidationReport:
    """Verify that a strict morphism commutes with the canonical reversors.

    The reversor square is forced for genuine strict morphisms, so any
    failure here is always accompanied by a composition or reflexor
    preservation failure, which this report also records.
    """
    rep = ValidationReport("functor")
    rep.extend(validate_morphism(F))
    if not rep.valid:
        return rep
    gs = cat.gs

    for (m, p), table in sorted(cat.magma.comp.maps.items()):
        for (y, x), z in sorted(table.items()):
            image = cat2.magma.comp.get(m, p, F.apply(m, y), F.apply(m, x))
            if image != F.apply(m, z):
                rep.add(
                    "functor.comp", LAW_FUNCTOR, (y, x),
                    f"F({y} o[{m},{p}] {x}) = {F.apply(m, z)} but F({y}) o F({x}) = {image}",
                )
    for p in range(gs.max_dim):
        table = cat.magma.refl.table(p, p + 1)
        for x, ix in sorted(table.items()):
            want = cat2.magma.refl.table(p, p + 1).get(F.apply(p, x))
            if want != F.apply(p + 1, ix):
                rep.add(
                    "functor.refl", LAW_FUNCTOR, (x,),
                    f"F(refl[{p}][{p + 1}]({x})) = {F.apply(p + 1, ix)} but refl(F({x})) = {want}",
                )

    n = max(cat.threshold, cat2.threshold)
    try:
        rev = derive_canonical_reversors(StrictNCategory(cat.magma, n), n)
        rev2 = derive_canonical_reversors(StrictNCategory(cat2.magma, n), n)
    except (NoInverseError, AmbiguousInverseError) as exc:
        rep.add("functor.reversor", LAW_UNIQUE_INVERSE, (), f"canonical reversors unavailable: {exc}")
        return rep
    for (m, p) in rev.pairs(gs.max_dim):
        for alpha in gs.grade(m):
            lhs = F.apply(m, rev.apply(m, p, alpha))
            rhs = rev2.apply(m, p, F.apply(m, alpha))
            if lhs != rhs:
                rep.add(
                    "functor.reversor", LAW_FUNCTOR, (alpha,),
                    f"F(j[{m}][{p}]({alpha})) = {lhs} but j[{m}][{p}](F({alpha})) = {rhs}",
                )
    return rep


def product_category(cat: StrictNCategory, cat2: StrictNCategory, sep: str = "|") -> StrictNCategory:
    """Componentwise product; useful for generating fixture families."""
    gs, gs2 = cat.gs, cat2.gs
    if gs.max_dim != gs2.max_dim:
        raise ValueError("product requires equal truncation bounds")
    D = gs.max_dim
    name = lambda a, b: f"{a}{sep}{b}"
    cells = {m: [name(a, b) for a in gs.grade(m) for b in gs2.grade(m)] for m in range(D + 1)}
    src = {
        m: {
            name(a, b): name(gs.map("source", m)[a], gs2.map("source", m)[b])
            for a in gs.grade(m)
            for b in gs2.grade(m)
        }
        for m in range(1, D + 1)
    }
    tgt = {
        m: {
            name(a, b): name(gs.map("target", m)[a], gs2.map("target", m)[b])
            for a in gs.grade(m)
            for b in gs2.grade(m)
        }
        for m in range(1, D + 1)
    }
    from .globular import globular_set

    prod_gs = globular_set(D, cells, src, tgt)
    refl = ReflexorStructure(
        {
            (p, p + 1): {
                name(a, b): name(cat.magma.refl.apply(p, p + 1, a), cat2.magma.refl.apply(p, p + 1, b))
                for a in gs.grade(p)
                for b in gs2.grade(p)
            }
            for p in range(D)
        }
    )
    comp_maps: dict[tuple[int, int], dict[tuple[str, str], str]] = {}
    for m in range(1, D + 1):
        for p in range(m):
            t1, t2 = cat.magma.comp.table(m, p), cat2.magma.comp.table(m, p)
            table: dict[tuple[str, str], str] = {}
            for (y1, x1), z1 in t1.items():
                for (y2, x2), z2 in t2.items():
                    table[(name(y1, y2), name(x1, x2))] = name(z1, z2)
            comp_maps[(m, p)] = table
    comp = CompositionStructure(comp_maps)
    return StrictNCategory(InfinityMagma(prod_gs, refl, comp), max(cat.threshold, cat2.threshold))
