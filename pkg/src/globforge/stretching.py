"""Bounded stretchings: a magma over a strict structure with coherence cells.

A stretching pairs a magma-with-reversors M with a strict structure C
through a graded projection pi and a bracket table.  A bracket cell
B = [c1, c0]_m is an (m+1)-cell witnessing that the parallel, pi-equal
m-cells c1 and c0 agree after strictification:

    tgt(B) = c1,   src(B) = c0,   pi(B) = refl[m][m+1](pi(c1)),

and the diagonal bracket [c, c]_m is the degenerate cell refl[m][m+1](c).

generate_free_stretching builds the free bounded instance on a generating
graph: M holds every term of size <= S and dimension <= D, closed under the
constructors, with a bracket admitted exactly when its arguments are
parallel and strictify equally; C is the normal-form fragment the stored
cells project onto.  Tables are partial at the size boundary, so validators
on the pieces should run with require_total=False.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .globular import TruncatedGlobularSet, globular_set, parallel
from .layers import ReflexorStructure, ReversorStructure
from .magma import CompositionStructure, InfinityMagma, NMagma
from .normalform import NF, Strictifier, nf_name
from .report import ValidationReport
from .terms import StretchTerm, TermContext, term_dim, term_name, term_size

LAW_PI_MORPHISM = "the projection onto the strict side preserves all structure"
LAW_BRACKET_FACES = "a bracket cell has its first argument as target and its second as source"
LAW_BRACKET_PROJ = "a bracket cell projects to the degenerate cell on its target's image"
LAW_BRACKET_DIAG = "the diagonal bracket is the degenerate cell"
LAW_BRACKET_DOMAIN = "brackets pair parallel cells with equal strictification"


class UnsupportedDimensionError(ValueError):
    """The requested truncation exceeds what free generation supports."""


class SectionViolationError(ValueError):
    """v o lam is not the identity, or v does not commute with boundaries."""


@dataclass
class Stretching:
    m_side: NMagma
    c_side: NMagma
    threshold: int
    pi: Mapping[int, Mapping[str, str]]
    brackets: Mapping[tuple[int, str, str], str]
    terms: Mapping[int, Mapping[str, StretchTerm]] = field(default_factory=dict)

    def pi_of(self, m: int, x: str) -> str | None:
        return self.pi.get(m, {}).get(x)


def validate_stretching(E: Stretching) -> ValidationReport:
    """Bracket axioms plus pi being a magma-and-reversor morphism on stored cells."""
    rep = ValidationReport("stretching")
    mgs, cgs = E.m_side.magma.gs, E.c_side.magma.gs

    for m in range(mgs.max_dim + 1):
        for x in mgs.grade(m):
            px = E.pi_of(m, x)
            if px is None:
                rep.add("stretching.pi-total", LAW_PI_MORPHISM, (x,), f"pi misses the {m}-cell {x}")
            elif not cgs.has_cell(m, px):
                rep.add(
                    "stretching.pi-total", LAW_PI_MORPHISM, (x, px),
                    f"pi({x}) = {px} is not an {m}-cell of the strict side",
                )
    if not rep.valid:
        return rep

    for m in range(1, mgs.max_dim + 1):
        for x in mgs.grade(m):
            px = E.pi_of(m, x)
            for side, axiom in (("source", "stretching.pi-src"), ("target", "stretching.pi-tgt")):
                want = E.pi_of(m - 1, mgs.map(side, m)[x])
                got = cgs.map(side, m).get(px)
                if got != want:
                    rep.add(
                        axiom, LAW_PI_MORPHISM, (x,),
                        f"pi({side}({x})) = {want} but {side}(pi({x})) = {got}",
                    )

    for (m, p), table in sorted(E.m_side.magma.comp.maps.items()):
        ctable = E.c_side.magma.comp.table(m, p)
        for (y, x), z in sorted(table.items()):
            got = ctable.get((E.pi_of(m, y), E.pi_of(m, x)))
            if got != E.pi_of(m, z):
                rep.add(
                    "stretching.pi-comp", LAW_PI_MORPHISM, (y, x),
                    f"pi({y} o[{m},{p}] {x}) = {E.pi_of(m, z)} but the strict composite is {got}",
                )

    for (p, m), table in sorted(E.m_side.magma.refl.maps.items()):
        ctable = E.c_side.magma.refl.table(p, m)
        for x, ix in sorted(table.items()):
            got = ctable.get(E.pi_of(p, x))
            if got != E.pi_of(m, ix):
                rep.add(
                    "stretching.pi-refl", LAW_PI_MORPHISM, (x,),
                    f"pi(refl[{p}][{m}]({x})) = {E.pi_of(m, ix)} but the strict degenerate cell is {got}",
                )

    for (m, p), table in sorted(E.m_side.rev.maps.items()):
        ctable = E.c_side.rev.table(m, p)
        for x, jx in sorted(table.items()):
            got = ctable.get(E.pi_of(m, x))
            if got != E.pi_of(m, jx):
                rep.add(
                    "stretching.pi-rev", LAW_PI_MORPHISM, (x,),
                    f"pi(j[{m}][{p}]({x})) = {E.pi_of(m, jx)} but the strict reverse is {got}",
                )

    for (m, c1, c0), B in sorted(E.brackets.items()):
        if not (mgs.has_cell(m, c1) and mgs.has_cell(m, c0) and mgs.has_cell(m + 1, B)):
            rep.add(
                "stretching.bracket-domain", LAW_BRACKET_DOMAIN, (c1, c0, B),
                f"bracket ({m}, {c1}, {c0}) -> {B} mentions undeclared cells",
            )
            continue
        if m >= 1 and not parallel(mgs, m, c1, c0):
            rep.add(
                "stretching.bracket-domain", LAW_BRACKET_DOMAIN, (c1, c0),
                f"bracket arguments {c1}, {c0} are not parallel",
            )
        if E.pi_of(m, c1) != E.pi_of(m, c0):
            rep.add(
                "stretching.bracket-domain", LAW_BRACKET_DOMAIN, (c1, c0),
                f"bracket arguments project differently: {E.pi_of(m, c1)} vs {E.pi_of(m, c0)}",
            )
        if mgs.map("target", m + 1)[B] != c1:
            rep.add(
                "stretching.bracket-target", LAW_BRACKET_FACES, (B, c1),
                f"tgt({B}) = {mgs.map('target', m + 1)[B]}, expected {c1}",
            )
        if mgs.map("source", m + 1)[B] != c0:
            rep.add(
                "stretching.bracket-source", LAW_BRACKET_FACES, (B, c0),
                f"src({B}) = {mgs.map('source', m + 1)[B]}, expected {c0}",
            )
        want = E.c_side.magma.refl.table(m, m + 1).get(E.pi_of(m, c1))
        if want is None or E.pi_of(m + 1, B) != want:
            rep.add(
                "stretching.bracket-proj", LAW_BRACKET_PROJ, (B,),
                f"pi({B}) = {E.pi_of(m + 1, B)}, expected the degenerate cell {want}",
            )
        if c1 == c0:
            refl_c = E.m_side.magma.refl.table(m, m + 1).get(c1)
            if B != refl_c:
                rep.add(
                    "stretching.bracket-diagonal", LAW_BRACKET_DIAG, (B, c1),
                    f"[{c1},{c1}] = {B}, expected the degenerate cell {refl_c}",
                )
    return rep


def generate_free_stretching(
    g: TruncatedGlobularSet, n: int, D: int, S: int
) -> Stretching:
    """All terms of size <= S and dimension <= D over g, with brackets.

    Deterministic: grades are sorted by (size, name), brackets are stored
    once per unordered pair with the larger term as target.
    """
    if D > 3:
        raise UnsupportedDimensionError(f"free stretching generation supports dimension <= 3, got {D}")
    strict = Strictifier(g, n)
    ctx = TermContext(g, n, strict)

    order = lambda t: (term_size(t), term_name(t))
    by_size: dict[int, list[StretchTerm]] = {}
    terms: dict[int, dict[str, StretchTerm]] = {m: {} for m in range(D + 1)}
    # terms bucketed by the p-target boundary, for composability lookups
    tgt_bucket: dict[tuple[int, int, str], list[StretchTerm]] = {}
    # terms bucketed by (faces, strict image), for bracket pairing
    par_bucket: dict[tuple[int, str, str, str], list[StretchTerm]] = {}

    refl_maps: dict[tuple[int, int], dict[str, str]] = {(p, p + 1): {} for p in range(D)}
    rev_maps: dict[tuple[int, int], dict[str, str]] = {
        (m, p): {} for m in range(n + 1, D + 1) for p in range(n, m)
    }
    comp_maps: dict[tuple[int, int], dict[tuple[str, str], str]] = {
        (m, p): {} for m in range(1, D + 1) for p in range(m)
    }
    bracket_pairs: dict[tuple[int, str, str], StretchTerm] = {}

    def admit(t: StretchTerm) -> None:
        d, nm = term_dim(t), term_name(t)
        if d > D or nm in terms[d]:
            return
        terms[d][nm] = t
        by_size.setdefault(term_size(t), []).append(t)
        for p in range(d):
            tgt_bucket.setdefault(
                (d, p, term_name(ctx.boundary(t, p, "target"))), []
            ).append(t)
        if d + 1 <= D:
            sname = term_name(ctx.src(t)) if d >= 1 else ""
            tname = term_name(ctx.tgt(t)) if d >= 1 else ""
            par_bucket.setdefault((d, sname, tname, nf_name(strict.pi(t))), []).append(t)

    for m in range(min(D, g.max_dim) + 1):
        for c in g.grade(m):
            admit(ctx.gen(c))

    for s in range(2, S + 1):
        # unary constructors on terms of size s-1
        for t in list(by_size.get(s - 1, [])):
            d = term_dim(t)
            if d + 1 <= D:
                u = ctx.refl(d, d + 1, t)
                admit(u)
                refl_maps[(d, d + 1)][term_name(t)] = term_name(u)
            for p in range(n, d):
                u = ctx.rev(d, p, t)
                admit(u)
                rev_maps[(d, p)][term_name(t)] = term_name(u)
        # binary constructors with argument sizes summing to s-1
        for s1 in range(1, s - 1):
            s0 = s - 1 - s1
            for t1 in list(by_size.get(s1, [])):
                d = term_dim(t1)
                for p in range(d):
                    key = (d, p, term_name(ctx.boundary(t1, p, "source")))
                    for t0 in tgt_bucket.get(key, []):
                        if term_size(t0) != s0:
                            continue
                        u = ctx.comp(d, p, t1, t0)
                        admit(u)
                        comp_maps[(d, p)][(term_name(t1), term_name(t0))] = term_name(u)
                if d + 1 <= D and d >= 1:
                    key2 = (
                        d,
                        term_name(ctx.src(t1)),
                        term_name(ctx.tgt(t1)),
                        nf_name(strict.pi(t1)),
                    )
                    for t0 in par_bucket.get(key2, []):
                        if term_size(t0) != s0 or order(t1) <= order(t0):
                            continue
                        B = ctx.bracket(d, t1, t0)
                        admit(B)
                        bracket_pairs[(d, term_name(t1), term_name(t0))] = B

    # materialize the magma side
    cells = {m: sorted(terms[m]) for m in range(D + 1)}
    src = {
        m: {nm: term_name(ctx.src(t)) for nm, t in terms[m].items()}
        for m in range(1, D + 1)
    }
    tgt = {
        m: {nm: term_name(ctx.tgt(t)) for nm, t in terms[m].items()}
        for m in range(1, D + 1)
    }
    gs = globular_set(D, cells, src, tgt)

    m_side = NMagma(
        InfinityMagma(gs, ReflexorStructure(refl_maps), CompositionStructure(comp_maps)),
        ReversorStructure(n, rev_maps),
    )

    pi_tables: dict[int, dict[str, str]] = {}
    nfs: dict[int, dict[str, NF]] = {m: {} for m in range(D + 2)}
    for m in range(D + 1):
        pi_tables[m] = {}
        for nm, t in terms[m].items():
            nf = strict.pi(t)
            pi_tables[m][nm] = nf_name(nf)
            nfs[m][nf_name(nf)] = nf
    # close the strict fragment under boundaries
    for m in range(D, 0, -1):
        for nf in list(nfs[m].values()):
            for face in (strict.src_nf(nf), strict.tgt_nf(nf)):
                nfs[m - 1].setdefault(nf_name(face), face)

    c_refl: dict[tuple[int, int], dict[str, str]] = {}
    for p in range(D):
        table = {}
        for nm, nf in list(nfs[p].items()):
            lifted = strict.refl_lift(nf)
            table[nm] = nf_name(lifted)
            nfs[p + 1].setdefault(nf_name(lifted), lifted)
        c_refl[(p, p + 1)] = table
    c_cells = {m: sorted(nfs[m]) for m in range(D + 1)}
    c_src = {
        m: {nm: nf_name(strict.src_nf(nf)) for nm, nf in nfs[m].items()}
        for m in range(1, D + 1)
    }
    c_tgt = {
        m: {nm: nf_name(strict.tgt_nf(nf)) for nm, nf in nfs[m].items()}
        for m in range(1, D + 1)
    }
    c_gs = globular_set(D, c_cells, c_src, c_tgt)

    c_comp: dict[tuple[int, int], dict[tuple[str, str], str]] = {}
    for (m, p), table in comp_maps.items():
        ctable = {}
        for (n1, n0), nz in table.items():
            ctable[(pi_tables[m][n1], pi_tables[m][n0])] = pi_tables[m][nz]
        c_comp[(m, p)] = ctable
    c_rev: dict[tuple[int, int], dict[str, str]] = {}
    for (m, p), table in rev_maps.items():
        ctable = {}
        for nx, nj in table.items():
            ctable[pi_tables[m][nx]] = pi_tables[m][nj]
        c_rev[(m, p)] = ctable

    c_side = NMagma(
        InfinityMagma(c_gs, ReflexorStructure(c_refl), CompositionStructure(c_comp)),
        ReversorStructure(n, c_rev),
    )

    brackets = {key: term_name(B) for key, B in bracket_pairs.items()}
    for m in range(D):
        for nm in terms[m]:
            refl_nm = refl_maps[(m, m + 1)].get(nm)
            if refl_nm is not None:
                brackets[(m, nm, nm)] = refl_nm

    return Stretching(m_side, c_side, n, pi_tables, brackets, terms)


def induced_algebra_magma(
    E: Stretching,
    G: TruncatedGlobularSet,
    v: Mapping[int, Mapping[str, str]],
    lam: Mapping[int, Mapping[str, str]],
) -> NMagma:
    """Transport the free structure along a retraction v with section lam.

    comp(a, b) = v(comp(lam a, lam b)), refl(a) = v(refl(lam a)), and
    rev(a) = v(rev(lam a)); entries exist where the free side stores the
    needed operation.
    """
    mgs = E.m_side.magma.gs
    for m in range(G.max_dim + 1):
        for a in G.grade(m):
            la = lam.get(m, {}).get(a)
            if la is None or not mgs.has_cell(m, la):
                raise SectionViolationError(f"lam misses the {m}-cell {a}")
            if v.get(m, {}).get(la) != a:
                raise SectionViolationError(f"v(lam({a})) = {v.get(m, {}).get(la)}, expected {a}")
    for m in range(1, min(mgs.max_dim, G.max_dim) + 1):
        for x in mgs.grade(m):
            vx = v.get(m, {}).get(x)
            if vx is None:
                raise SectionViolationError(f"v misses the {m}-cell {x}")
            for side in ("source", "target"):
                if v[m - 1][mgs.map(side, m)[x]] != G.map(side, m).get(vx):
                    raise SectionViolationError(f"v does not commute with {side} at {x}")

    comp_maps: dict[tuple[int, int], dict[tuple[str, str], str]] = {}
    for (m, p), table in E.m_side.magma.comp.maps.items():
        if m > G.max_dim:
            continue
        out: dict[tuple[str, str], str] = {}
        for a in G.grade(m):
            for b in G.grade(m):
                z = table.get((lam[m][a], lam[m][b]))
                if z is not None:
                    out[(a, b)] = v[m][z]
        comp_maps[(m, p)] = out
    refl_maps: dict[tuple[int, int], dict[str, str]] = {}
    for (p, m), table in E.m_side.magma.refl.maps.items():
        if m > G.max_dim:
            continue
        out2: dict[str, str] = {}
        for a in G.grade(p):
            ia = table.get(lam[p][a])
            if ia is not None:
                out2[a] = v[m][ia]
        refl_maps[(p, m)] = out2
    rev_maps: dict[tuple[int, int], dict[str, str]] = {}
    for (m, p), table in E.m_side.rev.maps.items():
        if m > G.max_dim:
            continue
        out2 = {}
        for a in G.grade(m):
            ja = table.get(lam[m][a])
            if ja is not None:
                out2[a] = v[m][ja]
        rev_maps[(m, p)] = out2

    return NMagma(
        InfinityMagma(G, ReflexorStructure(refl_maps), CompositionStructure(comp_maps)),
        ReversorStructure(E.threshold, rev_maps),
    )


# -- serialization ------------------------------------------------------


def _nmagma_payload(nm: NMagma) -> dict:
    gs = nm.magma.gs
    return {
        "max_dim": gs.max_dim,
        "threshold": nm.threshold,
        "cells": {str(m): list(gs.grade(m)) for m in range(gs.max_dim + 1)},
        "src": {str(m): dict(gs.map("source", m)) for m in range(1, gs.max_dim + 1)},
        "tgt": {str(m): dict(gs.map("target", m)) for m in range(1, gs.max_dim + 1)},
        "refl": {f"{p}.{m}": dict(t) for (p, m), t in sorted(nm.magma.refl.maps.items())},
        "rev": {f"{m}.{p}": dict(t) for (m, p), t in sorted(nm.rev.maps.items())},
        "comp": {
            f"{m}.{p}": [[y, x, z] for (y, x), z in sorted(t.items())]
            for (m, p), t in sorted(nm.magma.comp.maps.items())
        },
    }


def _nmagma_from_payload(payload: dict) -> NMagma:
    D = payload["max_dim"]
    gs = globular_set(
        D,
        {int(m): cs for m, cs in payload["cells"].items()},
        {int(m): t for m, t in payload["src"].items()},
        {int(m): t for m, t in payload["tgt"].items()},
    )
    refl = ReflexorStructure(
        {tuple(map(int, k.split("."))): dict(t) for k, t in payload["refl"].items()}
    )
    rev = ReversorStructure(
        payload["threshold"],
        {tuple(map(int, k.split("."))): dict(t) for k, t in payload["rev"].items()},
    )
    comp = CompositionStructure(
        {
            tuple(map(int, k.split("."))): {(y, x): z for y, x, z in t}
            for k, t in payload["comp"].items()
        }
    )
    return NMagma(InfinityMagma(gs, refl, comp), rev)


def dump_stretching(E: Stretching) -> str:
    payload = {
        "kind": "stretching",
        "threshold": E.threshold,
        "m_side": _nmagma_payload(E.m_side),
        "c_side": _nmagma_payload(E.c_side),
        "pi": {str(m): dict(t) for m, t in sorted(E.pi.items())},
        "brackets": [
            [m, c1, c0, B] for (m, c1, c0), B in sorted(E.brackets.items())
        ],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def load_stretching(text: str) -> Stretching:
    payload = json.loads(text)
    if payload.get("kind") != "stretching":
        raise ValueError("not a stretching dump")
    return Stretching(
        m_side=_nmagma_from_payload(payload["m_side"]),
        c_side=_nmagma_from_payload(payload["c_side"]),
        threshold=payload["threshold"],
        pi={int(m): dict(t) for m, t in payload["pi"].items()},
        brackets={(m, c1, c0): B for m, c1, c0, B in payload["brackets"]},
    )
