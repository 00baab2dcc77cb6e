"""First-order terms over the operation symbols, with symbolic dimensions.

Dimensions are affine expressions "variable + offset" (or constants), so
one derivation covers every admissible dimension at once; inequalities
between them are decided against a derivation's assumptions by
difference-bound closure in DimSolver.

Each term node carries a carrier tag: M for the free side of a stretching,
C for its strict side, G for an algebra.  The structural symbols src, tgt,
rev, one (reflexor), comp, and bracket keep the carrier; pi maps M to C,
v maps M to G, and lam maps G back to M.  Display follows the usual
notation per carrier (j/i for rev, 1/iota for one, */o for comp).
Suite-local symbols (unary carrier endomaps) can be registered on top.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Union

Position = tuple[int, ...]


class TermError(ValueError):
    """Ill-formed term: grade or carrier mismatch."""


@dataclass(frozen=True)
class DimExpr:
    var: str | None
    off: int

    def shift(self, k: int) -> "DimExpr":
        return DimExpr(self.var, self.off + k)

    def __str__(self) -> str:
        if self.var is None:
            return str(self.off)
        if self.off == 0:
            return self.var
        return f"{self.var}{'+' if self.off > 0 else ''}{self.off}"


def dim(value: Union[int, str, DimExpr], off: int = 0) -> DimExpr:
    if isinstance(value, DimExpr):
        return value.shift(off)
    if isinstance(value, int):
        return DimExpr(None, value + off)
    return DimExpr(value, off)


@dataclass(frozen=True)
class DimCond:
    """lhs <= rhs, strictly when strict is set."""

    lhs: DimExpr
    rhs: DimExpr
    strict: bool = False

    def __str__(self) -> str:
        return f"{self.lhs} {'<' if self.strict else '<='} {self.rhs}"


def le(a, b) -> DimCond:
    return DimCond(dim(a), dim(b), strict=False)


def lt(a, b) -> DimCond:
    return DimCond(dim(a), dim(b), strict=True)


class DimSolver:
    """Difference-bound entailment over dimension variables.

    Dimension variables are natural numbers; a constraint a <= b becomes the
    difference bound var(a) - var(b) <= off(b) - off(a), and entailment is a
    shortest-path query in the constraint graph.
    """

    def __init__(self, assumptions: tuple[DimCond, ...]):
        self.edges: dict[tuple[str, str], int] = {}
        names = {"0"}
        for cond in assumptions:
            names.add(cond.lhs.var or "0")
            names.add(cond.rhs.var or "0")
            self._add(cond)
        for v in names:
            if v != "0":
                self._edge(v, "0", 0)  # every dimension is >= 0
        self.names = names
        self._closure()

    def _edge(self, frm: str, to: str, w: int) -> None:
        # encodes to - frm <= w
        key = (frm, to)
        if key not in self.edges or self.edges[key] > w:
            self.edges[key] = w

    def _add(self, cond: DimCond) -> None:
        a, b = cond.lhs, cond.rhs
        bound = b.off - a.off - (1 if cond.strict else 0)
        self._edge(b.var or "0", a.var or "0", bound)

    def _closure(self) -> None:
        names = sorted({v for pair in self.edges for v in pair} | {"0"})
        dist = {(a, b): (0 if a == b else None) for a in names for b in names}
        for (frm, to), w in self.edges.items():
            cur = dist[(frm, to)]
            dist[(frm, to)] = w if cur is None else min(cur, w)
        for k, i, j in itertools.product(names, names, names):
            ik, kj = dist[(i, k)], dist[(k, j)]
            if ik is None or kj is None:
                continue
            cur = dist[(i, j)]
            if cur is None or ik + kj < cur:
                dist[(i, j)] = ik + kj
        self.dist = dist
        self.names_closed = names

    def entails(self, cond: DimCond) -> bool:
        a, b = cond.lhs, cond.rhs
        va, vb = a.var or "0", b.var or "0"
        need = b.off - a.off - (1 if cond.strict else 0)
        if va == vb:
            return 0 <= need
        if (vb, va) not in self.dist or self.dist.get((vb, va)) is None:
            return False
        return self.dist[(vb, va)] <= need


# -- symbols -------------------------------------------------------------

CARRIERS = ("M", "C", "G")

# unary carrier maps: symbol -> (argument carrier, result carrier)
CARRIER_MAPS: dict[str, tuple[str, str]] = {
    "pi": ("M", "C"),
    "v": ("M", "G"),
    "lam": ("G", "M"),
}


def register_symbol(name: str, frm: str, to: str) -> None:
    """Register a grade-preserving unary symbol between carriers."""
    existing = CARRIER_MAPS.get(name)
    if existing is not None and existing != (frm, to):
        raise TermError(f"symbol {name} already registered with a different signature")
    CARRIER_MAPS[name] = (frm, to)


DISPLAY = {
    ("rev", "M"): "j", ("rev", "C"): "j", ("rev", "G"): "i",
    ("one", "M"): "1", ("one", "C"): "1", ("one", "G"): "iota",
    ("comp", "M"): "*", ("comp", "C"): "o", ("comp", "G"): "o",
}


@dataclass(frozen=True)
class Atom:
    name: str
    grade: DimExpr
    carrier: str
    const: bool = False


@dataclass(frozen=True)
class App:
    sym: str
    dims: tuple[DimExpr, ...]
    args: tuple["Term", ...]
    grade: DimExpr = field(compare=False, default=DimExpr(None, -1))
    carrier: str = field(compare=False, default="?")


Term = Union[Atom, App]


def _check_grade(t: Term, want: DimExpr, what: str) -> None:
    if t.grade != want:
        raise TermError(f"{what}: expected grade {want}, got {t.grade} in {render(t)}")


def app(sym: str, dims: tuple[DimExpr, ...], args: tuple[Term, ...]) -> App:
    """Smart constructor: checks grades and carriers, fills in the result's."""
    if sym in ("src", "tgt"):
        m, q = dims
        (x,) = args
        _check_grade(x, m, sym)
        return App(sym, dims, args, grade=q, carrier=x.carrier)
    if sym == "rev":
        m, p = dims
        (x,) = args
        _check_grade(x, m, sym)
        return App(sym, dims, args, grade=m, carrier=x.carrier)
    if sym == "one":
        p, m = dims
        (x,) = args
        _check_grade(x, p, sym)
        return App(sym, dims, args, grade=m, carrier=x.carrier)
    if sym == "comp":
        m, p = dims
        y, x = args
        _check_grade(y, m, sym)
        _check_grade(x, m, sym)
        if y.carrier != x.carrier and "?" not in (y.carrier, x.carrier):
            raise TermError(f"composition across carriers {y.carrier} and {x.carrier}")
        carrier = y.carrier if y.carrier != "?" else x.carrier
        return App(sym, dims, args, grade=m, carrier=carrier)
    if sym == "bracket":
        (m,) = dims
        c1, c0 = args
        _check_grade(c1, m, sym)
        _check_grade(c0, m, sym)
        for c in args:
            if c.carrier not in ("M", "?"):
                raise TermError("brackets live on the free side")
        return App(sym, dims, args, grade=m.shift(1), carrier="M")
    if sym in CARRIER_MAPS:
        frm, to = CARRIER_MAPS[sym]
        (x,) = args
        if dims:
            raise TermError(f"{sym} takes no dimension arguments")
        if x.carrier not in (frm, "?"):
            raise TermError(f"{sym} expects a {frm}-term, got {x.carrier}")
        return App(sym, dims, args, grade=x.grade, carrier=to)
    raise TermError(f"unknown symbol {sym}")


# concise constructors

def srcT(m, q, x) -> App:
    return app("src", (dim(m), dim(q)), (x,))


def tgtT(m, q, x) -> App:
    return app("tgt", (dim(m), dim(q)), (x,))


def revT(m, p, x) -> App:
    return app("rev", (dim(m), dim(p)), (x,))


def oneT(p, m, x) -> App:
    return app("one", (dim(p), dim(m)), (x,))


def compT(m, p, y, x) -> App:
    return app("comp", (dim(m), dim(p)), (y, x))


def bracketT(m, c1, c0) -> App:
    return app("bracket", (dim(m),), (c1, c0))


def piT(x) -> App:
    return app("pi", (), (x,))


def vT(x) -> App:
    return app("v", (), (x,))


def lamT(x) -> App:
    return app("lam", (), (x,))


def unary(sym: str, x: Term) -> App:
    return app(sym, (), (x,))


def var(name: str, grade, carrier: str = "?") -> Atom:
    return Atom(name, dim(grade), carrier)


def const(name: str, grade, carrier: str) -> Atom:
    return Atom(name, dim(grade), carrier, const=True)


# -- traversal -----------------------------------------------------------


def subterm(t: Term, pos: Position) -> Term:
    for i in pos:
        if not isinstance(t, App) or i >= len(t.args):
            raise TermError(f"position {pos} does not exist in {render(t)}")
        t = t.args[i]
    return t


def replace(t: Term, pos: Position, new: Term) -> Term:
    if not pos:
        return new
    assert isinstance(t, App)
    i = pos[0]
    args = list(t.args)
    args[i] = replace(args[i], pos[1:], new)
    return app(t.sym, t.dims, tuple(args))


def brackets_in(t: Term) -> frozenset[App]:
    out = set()
    stack = [t]
    while stack:
        cur = stack.pop()
        if isinstance(cur, App):
            if cur.sym == "bracket":
                out.add(cur)
            stack.extend(cur.args)
    return frozenset(out)


def atoms_in(t: Term) -> set[str]:
    out = set()
    stack = [t]
    while stack:
        cur = stack.pop()
        if isinstance(cur, Atom):
            if not cur.const:
                out.add(cur.name)
        else:
            stack.extend(cur.args)
    return out


def dim_vars_in(t: Term) -> set[str]:
    out = set()

    def walk_dim(d: DimExpr) -> None:
        if d.var is not None:
            out.add(d.var)

    stack = [t]
    while stack:
        cur = stack.pop()
        walk_dim(cur.grade)
        if isinstance(cur, App):
            for d in cur.dims:
                walk_dim(d)
            stack.extend(cur.args)
    return out


def render(t: Term) -> str:
    if isinstance(t, Atom):
        return t.name
    sym = DISPLAY.get((t.sym, t.carrier), t.sym)
    if t.sym == "comp":
        m, p = t.dims
        return f"({render(t.args[0])} {sym}[{m},{p}] {render(t.args[1])})"
    if t.sym == "bracket":
        (m,) = t.dims
        return f"[{render(t.args[0])};{render(t.args[1])}]_{m}"
    if t.dims:
        ds = ",".join(str(d) for d in t.dims)
        return f"{sym}[{ds}]({', '.join(render(a) for a in t.args)})"
    return f"{sym}({', '.join(render(a) for a in t.args)})"


# -- substitution and matching -------------------------------------------


@dataclass(frozen=True)
class Subst:
    cells: Mapping[str, Term]
    dims: Mapping[str, DimExpr]

    def dim(self, d: DimExpr) -> DimExpr:
        if d.var is None:
            return d
        if d.var not in self.dims:
            raise TermError(f"unbound dimension variable {d.var}")
        return self.dims[d.var].shift(d.off)

    def term(self, t: Term) -> Term:
        if isinstance(t, Atom):
            if t.const:
                return t
            if t.name not in self.cells:
                raise TermError(f"unbound variable {t.name}")
            out = self.cells[t.name]
            want = self.dim(t.grade)
            if out.grade != want:
                raise TermError(
                    f"variable {t.name} expects grade {want}, got {out.grade}"
                )
            if t.carrier not in ("?", out.carrier):
                raise TermError(
                    f"variable {t.name} expects carrier {t.carrier}, got {out.carrier}"
                )
            return out
        return app(t.sym, tuple(self.dim(d) for d in t.dims), tuple(self.term(a) for a in t.args))


class MatchError(ValueError):
    pass


def match(pattern: Term, concrete: Term, cells: dict, dims: dict) -> None:
    """One-sided matching; extends the bindings in place or raises."""

    def match_dim(pd: DimExpr, cd: DimExpr) -> None:
        if pd.var is None:
            if cd != pd:
                raise MatchError(f"dimension {cd} is not {pd}")
            return
        want = DimExpr(cd.var, cd.off - pd.off)
        if pd.var in dims:
            if dims[pd.var] != want:
                raise MatchError(f"dimension variable {pd.var} bound twice")
        else:
            dims[pd.var] = want

    if isinstance(pattern, Atom):
        if pattern.const:
            if pattern != concrete:
                raise MatchError(f"constant {pattern.name} does not match {render(concrete)}")
            return
        match_dim(pattern.grade, concrete.grade)
        if pattern.carrier not in ("?", concrete.carrier):
            raise MatchError(f"carrier mismatch for {pattern.name}")
        if pattern.name in cells:
            if cells[pattern.name] != concrete:
                raise MatchError(f"variable {pattern.name} bound twice")
        else:
            cells[pattern.name] = concrete
        return
    if not isinstance(concrete, App) or concrete.sym != pattern.sym:
        raise MatchError(f"{render(concrete)} does not match symbol {pattern.sym}")
    for pd, cd in zip(pattern.dims, concrete.dims):
        match_dim(pd, cd)
    for pa, ca in zip(pattern.args, concrete.args):
        match(pa, ca, cells, dims)
