"""Syntax trees for cells of bounded free structures.

A StretchTerm is built from five constructors over a generating globular
set:

    gen(c)                a generating cell
    comp(m, p, t1, t0)    the composite "t1 after t0" of two m-terms over p
    refl(p, m, t)         the degenerate m-term on a p-term (one-step nested)
    rev(m, p, t)          the formal reverse of an m-term over p
    bracket(m, t1, t0)    the coherence (m+1)-term with target t1, source t0

Terms are the cells of the free side of a bounded stretching, so boundary
compatibility for comp is syntactic equality of boundary terms, and the
side conditions are checked at construction time by TermContext:

  - comp needs the p-source of t1 to equal the p-target of t0;
  - rev needs threshold <= p < m;
  - bracket needs parallel arguments with equal strictification, and the
    diagonal bracket collapses to the reflexor term it must equal.

Multi-step reflexors are represented by nested one-step constructors, so
refl-tower absorption is definitional.  Term size counts constructor nodes
of this canonical representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .globular import TruncatedGlobularSet


class IllTypedTermError(ValueError):
    """A constructor side condition failed."""


@dataclass(frozen=True)
class StretchTerm:
    kind: str  # gen | comp | refl | rev | bracket
    dims: tuple[int, ...]
    args: tuple["StretchTerm", ...]
    cell: str = ""


@lru_cache(maxsize=None)
def term_dim(t: StretchTerm) -> int:
    if t.kind == "gen":
        return t.dims[0]
    if t.kind == "comp":
        return t.dims[0]
    if t.kind == "refl":
        return t.dims[1]
    if t.kind == "rev":
        return t.dims[0]
    if t.kind == "bracket":
        return t.dims[0] + 1
    raise ValueError(t.kind)


@lru_cache(maxsize=None)
def term_size(t: StretchTerm) -> int:
    return 1 + sum(term_size(a) for a in t.args)


@lru_cache(maxsize=None)
def term_name(t: StretchTerm) -> str:
    if t.kind == "gen":
        return t.cell
    if t.kind == "comp":
        m, p = t.dims
        return f"({term_name(t.args[0])} *{m}.{p} {term_name(t.args[1])})"
    if t.kind == "refl":
        p, m = t.dims
        return f"1[{p}.{m}]({term_name(t.args[0])})"
    if t.kind == "rev":
        m, p = t.dims
        return f"j[{m}.{p}]({term_name(t.args[0])})"
    if t.kind == "bracket":
        (m,) = t.dims
        return f"[{term_name(t.args[0])};{term_name(t.args[1])}]{m}"
    raise ValueError(t.kind)


class TermContext:
    """Constructor front-end enforcing the side conditions over one graph.

    The optional strictifier decides the bracket admission test; without
    one, brackets other than the diagonal are rejected.
    """

    def __init__(self, g: TruncatedGlobularSet, threshold: int, strictifier=None):
        self.g = g
        self.threshold = threshold
        self.strictifier = strictifier
        self._faces: dict[tuple[StretchTerm, str], StretchTerm] = {}

    def _face(self, t: StretchTerm, side: str) -> StretchTerm:
        """One-step boundary term of a term of dimension >= 1."""
        key = (t, side)
        hit = self._faces.get(key)
        if hit is not None:
            return hit
        m = term_dim(t)
        assert m >= 1
        if t.kind == "gen":
            out = StretchTerm("gen", (m - 1,), (), self.g.map(side, m)[t.cell])
        elif t.kind == "comp":
            _, p = t.dims
            t1, t0 = t.args
            if p == m - 1:
                out = self._face(t0, side) if side == "source" else self._face(t1, side)
            else:
                out = StretchTerm("comp", (m - 1, p), (self._face(t1, side), self._face(t0, side)))
        elif t.kind == "refl":
            out = t.args[0]  # one-step reflexor: both faces are the core
        elif t.kind == "rev":
            _, p = t.dims
            inner = t.args[0]
            if m == p + 1:
                other = "target" if side == "source" else "source"
                out = self._face(inner, other)
            else:
                out = StretchTerm("rev", (m - 1, p), (self._face(inner, side),))
        elif t.kind == "bracket":
            out = t.args[1] if side == "source" else t.args[0]
        else:
            raise ValueError(t.kind)
        self._faces[key] = out
        return out

    def src(self, t: StretchTerm) -> StretchTerm:
        return self._face(t, "source")

    def tgt(self, t: StretchTerm) -> StretchTerm:
        return self._face(t, "target")

    def boundary(self, t: StretchTerm, q: int, side: str) -> StretchTerm:
        cur = t
        for _ in range(term_dim(t) - q):
            cur = self._face(cur, side)
        return cur

    def parallel(self, t1: StretchTerm, t0: StretchTerm) -> bool:
        if term_dim(t1) != term_dim(t0):
            return False
        if term_dim(t1) == 0:
            return True
        return self.src(t1) == self.src(t0) and self.tgt(t1) == self.tgt(t0)

    def gen(self, name: str) -> StretchTerm:
        for m in range(self.g.max_dim + 1):
            if self.g.has_cell(m, name):
                return StretchTerm("gen", (m,), (), name)
        raise IllTypedTermError(f"no generating cell named {name}")

    def comp(self, m: int, p: int, t1: StretchTerm, t0: StretchTerm) -> StretchTerm:
        if not 0 <= p < m:
            raise IllTypedTermError(f"composition indices need 0 <= p < m, got ({m}, {p})")
        if term_dim(t1) != m or term_dim(t0) != m:
            raise IllTypedTermError(
                f"composition over ({m}, {p}) needs two {m}-terms, "
                f"got dimensions {term_dim(t1)} and {term_dim(t0)}"
            )
        if self.boundary(t1, p, "source") != self.boundary(t0, p, "target"):
            raise IllTypedTermError(
                f"terms are not {p}-compatible: {term_name(t1)} after {term_name(t0)}"
            )
        return StretchTerm("comp", (m, p), (t1, t0))

    def refl(self, p: int, m: int, t: StretchTerm) -> StretchTerm:
        if not 0 <= p < m:
            raise IllTypedTermError(f"reflexor indices need 0 <= p < m, got ({p}, {m})")
        if term_dim(t) != p:
            raise IllTypedTermError(f"reflexor over ({p}, {m}) needs a {p}-term")
        cur = t
        for k in range(p, m):
            cur = StretchTerm("refl", (k, k + 1), (cur,))
        return cur

    def rev(self, m: int, p: int, t: StretchTerm) -> StretchTerm:
        if not self.threshold <= p < m:
            raise IllTypedTermError(
                f"reversor indices need {self.threshold} <= p < m, got ({m}, {p})"
            )
        if term_dim(t) != m:
            raise IllTypedTermError(f"reversor over ({m}, {p}) needs an {m}-term")
        return StretchTerm("rev", (m, p), (t,))

    def bracket(self, m: int, t1: StretchTerm, t0: StretchTerm) -> StretchTerm:
        if term_dim(t1) != m or term_dim(t0) != m:
            raise IllTypedTermError(f"bracket at level {m} needs two {m}-terms")
        if t1 == t0:
            # the diagonal bracket is the degenerate cell, definitionally
            return self.refl(m, m + 1, t1)
        if not self.parallel(t1, t0):
            raise IllTypedTermError(
                f"bracket arguments are not parallel: {term_name(t1)} vs {term_name(t0)}"
            )
        if self.strictifier is None:
            raise IllTypedTermError("bracket admission needs a strictifier")
        if self.strictifier.pi(t1) != self.strictifier.pi(t0):
            raise IllTypedTermError(
                f"bracket arguments strictify differently: {term_name(t1)} vs {term_name(t0)}"
            )
        return StretchTerm("bracket", (m,), (t1, t0))
