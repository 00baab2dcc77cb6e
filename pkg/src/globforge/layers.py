"""Reversor and reflexor structures layered on a globular set.

A reversor structure with threshold n supplies, for every pair n <= p < m up
to the truncation bound, a total self-map j[m][p] on m-cells.  The boundary
axioms split by how far the reversor reaches down:

  (a)  m > p+1:  src(j[m][p] x) = j[m-1][p](src x)   and the same for tgt
  (b)  m = p+1:  src(j[p+1][p] x) = tgt(x)           and  tgt(...) = src(x)

so a reversor swaps the p-dimensional faces and commutes with everything
above them.

A reflexor structure supplies degeneracy maps refl[p][m] : X_p -> X_m.  The
one-step maps refl[p][p+1] generate everything: a declared multi-step table
must agree pointwise with the composite of one-step maps, and one-step
images must have the original cell as both faces.

Tables are explicit and finite; a missing entry is a violation, never an
implicit identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .globular import TruncatedGlobularSet
from .report import ValidationReport

LAW_REVERSOR_SERIAL = "reversors commute with boundaries above the base dimension"
LAW_REVERSOR_SWAP = "a reversor swaps the source and target at its base dimension"
LAW_REVERSOR_TOTAL = "reversor tables are total level-preserving maps"
LAW_REFLEXOR_UNIT = "a one-step reflexor image has the original cell as source and target"
LAW_REFLEXOR_COMPOSITE = "multi-step reflexors are composites of one-step reflexors"
LAW_REFLEXOR_TOTAL = "one-step reflexor tables are total"
LAW_INVOLUTIVE = "reversors are involutions on strict structures"
LAW_COMPAT_FIX = "a reversor fixes cells degenerate at or below its base dimension"
LAW_COMPAT_PUSH = "a reversor moves through a higher reflexor to the core cell"


@dataclass(frozen=True)
class ReversorStructure:
    """Tables j[(m, p)] : X_m -> X_m for threshold <= p < m <= D."""

    threshold: int
    maps: Mapping[tuple[int, int], Mapping[str, str]]

    def pairs(self, max_dim: int) -> list[tuple[int, int]]:
        return [
            (m, p)
            for m in range(self.threshold + 1, max_dim + 1)
            for p in range(self.threshold, m)
        ]

    def table(self, m: int, p: int) -> Mapping[str, str]:
        return self.maps.get((m, p), {})

    def apply(self, m: int, p: int, x: str) -> str:
        return self.maps[(m, p)][x]


@dataclass(frozen=True)
class ReflexorStructure:
    """Tables refl[(p, m)] : X_p -> X_m, generated by the one-step maps."""

    maps: Mapping[tuple[int, int], Mapping[str, str]]

    def table(self, p: int, m: int) -> Mapping[str, str]:
        return self.maps.get((p, m), {})

    def apply(self, p: int, m: int, x: str) -> str:
        """Composite of one-step maps; the authoritative multi-step value."""
        cur = x
        for k in range(p, m):
            cur = self.maps[(k, k + 1)][cur]
        return cur

    def defined(self, p: int, m: int, x: str) -> bool:
        cur = x
        for k in range(p, m):
            step = self.maps.get((k, k + 1), {})
            if cur not in step:
                return False
            cur = step[cur]
        return True


def validate_reversors(gs: TruncatedGlobularSet, rev: ReversorStructure) -> ValidationReport:
    """Totality, level preservation, and the (a)/(b) boundary axioms."""
    rep = ValidationReport("reversors")
    n = rev.threshold
    for (m, p) in rev.pairs(gs.max_dim):
        table = rev.table(m, p)
        grade = set(gs.grade(m))
        for x in gs.grade(m):
            if x not in table:
                rep.add("reversor.total", LAW_REVERSOR_TOTAL, (x,), f"j[{m}][{p}] has no entry for {x}")
            elif table[x] not in grade:
                rep.add(
                    "reversor.total", LAW_REVERSOR_TOTAL, (x, table[x]),
                    f"j[{m}][{p}]({x}) = {table[x]} is not an {m}-cell",
                )
        for x in table:
            if x not in grade:
                rep.add("reversor.total", LAW_REVERSOR_TOTAL, (x,), f"j[{m}][{p}] mentions undeclared cell {x}")
    for (m, p) in rev.maps:
        if not (n <= p < m <= gs.max_dim):
            rep.add(
                "reversor.total", LAW_REVERSOR_TOTAL, (),
                f"table j[{m}][{p}] is outside the range {n} <= p < m <= {gs.max_dim}",
            )
    if not rep.valid:
        return rep

    src, tgt = gs.map, gs.map
    for (m, p) in rev.pairs(gs.max_dim):
        table = rev.table(m, p)
        for x in gs.grade(m):
            jx = table[x]
            if m > p + 1:
                lower = rev.table(m - 1, p)
                for side, tag in (("source", "src"), ("target", "tgt")):
                    face = gs.map(side, m)
                    got = face[jx]
                    want = lower[face[x]]
                    if got != want:
                        rep.add(
                            "reversor.a", LAW_REVERSOR_SERIAL, (x,),
                            f"{tag}(j[{m}][{p}]({x})) = {got} but j[{m - 1}][{p}]({tag}({x})) = {want}",
                        )
            else:
                s_m, t_m = gs.map("source", m), gs.map("target", m)
                if s_m[jx] != t_m[x]:
                    rep.add(
                        "reversor.b", LAW_REVERSOR_SWAP, (x,),
                        f"src(j[{m}][{p}]({x})) = {s_m[jx]} but tgt({x}) = {t_m[x]}",
                    )
                if t_m[jx] != s_m[x]:
                    rep.add(
                        "reversor.b", LAW_REVERSOR_SWAP, (x,),
                        f"tgt(j[{m}][{p}]({x})) = {t_m[jx]} but src({x}) = {s_m[x]}",
                    )
    return rep


def validate_reflexors(gs: TruncatedGlobularSet, refl: ReflexorStructure) -> ValidationReport:
    """One-step totality, the unit axiom, and composite agreement of multi-step tables."""
    rep = ValidationReport("reflexors")
    for p in range(gs.max_dim):
        table = refl.table(p, p + 1)
        grade = set(gs.grade(p + 1))
        for x in gs.grade(p):
            if x not in table:
                rep.add("reflexor.total", LAW_REFLEXOR_TOTAL, (x,), f"refl[{p}][{p + 1}] has no entry for {x}")
            elif table[x] not in grade:
                rep.add(
                    "reflexor.total", LAW_REFLEXOR_TOTAL, (x, table[x]),
                    f"refl[{p}][{p + 1}]({x}) = {table[x]} is not a {p + 1}-cell",
                )
    for (p, m) in refl.maps:
        if not (0 <= p < m <= gs.max_dim):
            rep.add(
                "reflexor.total", LAW_REFLEXOR_TOTAL, (),
                f"table refl[{p}][{m}] is outside the range 0 <= p < m <= {gs.max_dim}",
            )
    if not rep.valid:
        return rep

    for p in range(gs.max_dim):
        table = refl.table(p, p + 1)
        s_m, t_m = gs.map("source", p + 1), gs.map("target", p + 1)
        for x in gs.grade(p):
            ix = table[x]
            if s_m[ix] != x or t_m[ix] != x:
                rep.add(
                    "reflexor.unit", LAW_REFLEXOR_UNIT, (x, ix),
                    f"refl[{p}][{p + 1}]({x}) = {ix} has src {s_m[ix]} and tgt {t_m[ix]}, expected {x} twice",
                )

    for (p, m), table in sorted(refl.maps.items()):
        if m == p + 1:
            continue
        for x in gs.grade(p):
            if x not in table:
                rep.add(
                    "reflexor.composite", LAW_REFLEXOR_COMPOSITE, (x,),
                    f"declared refl[{p}][{m}] has no entry for {x}",
                )
                continue
            want = refl.apply(p, m, x)
            if table[x] != want:
                rep.add(
                    "reflexor.composite", LAW_REFLEXOR_COMPOSITE, (x,),
                    f"refl[{p}][{m}]({x}) = {table[x]} but the one-step composite gives {want}",
                )
    return rep


def validate_involutive(gs: TruncatedGlobularSet, rev: ReversorStructure) -> ValidationReport:
    """j[m][p] o j[m][p] = id on every applicable grade."""
    rep = ValidationReport("involutive")
    for (m, p) in rev.pairs(gs.max_dim):
        table = rev.table(m, p)
        for x in gs.grade(m):
            back = table[table[x]]
            if back != x:
                rep.add(
                    "involutive.jj", LAW_INVOLUTIVE, (x,),
                    f"j[{m}][{p}](j[{m}][{p}]({x})) = {back}, expected {x}",
                )
    return rep


def validate_reflexive_compat(
    gs: TruncatedGlobularSet,
    refl: ReflexorStructure,
    rev: ReversorStructure,
) -> ValidationReport:
    """Compatibility of reversors with reflexors.

    (i)  for n <= q < m and p <= q:   j[m][q](refl[p][m] a) = refl[p][m] a
    (ii) for n <= q < p < m:          j[m][q](refl[p][m] a) = refl[p][m](j[p][q] a)
    """
    rep = ValidationReport("reflexive-compat")
    n = rev.threshold
    for m in range(1, gs.max_dim + 1):
        for q in range(n, m):
            jtable = rev.table(m, q)
            for p in range(0, m):
                for a in gs.grade(p):
                    image = refl.apply(p, m, a)
                    if p <= q:
                        got = jtable[image]
                        if got != image:
                            rep.add(
                                "reflexive-compat.i", LAW_COMPAT_FIX, (a, image),
                                f"j[{m}][{q}](refl[{p}][{m}]({a})) = {got}, expected the degenerate cell {image}",
                            )
                    else:
                        want = refl.apply(p, m, rev.apply(p, q, a))
                        got = jtable[image]
                        if got != want:
                            rep.add(
                                "reflexive-compat.ii", LAW_COMPAT_PUSH, (a, image),
                                f"j[{m}][{q}](refl[{p}][{m}]({a})) = {got} but refl[{p}][{m}](j[{p}][{q}]({a})) = {want}",
                            )
    return rep
