"""Strictification: normal forms for bounded free strict structures.

Cells of the free strict structure on a generating globular set g (of
dimension <= 2) admit canonical normal forms in low dimensions:

  dim 0: the generating 0-cell itself;
  dim 1: a word of signed edges, reduced when the threshold is 0;
  dim 2: a source word together with one column per word position.  A
         2-generator has single generating edges as faces, so a whiskered
         generator rewrites exactly one position of the word.  The
         interchange law makes distinct positions commute, which sorts every
         2-cell into independent per-position columns: each column is a path
         of (2-generator, orientation) letters acting on its slot, reduced
         when vertical inverses exist (threshold <= 1);
  dim 3: with no 3-dimensional generators every 3-cell is degenerate, so a
         3-cell is the identity wrapper on the normal form of its 2-source.

Two configurations share these forms: free strict 2-categories (no
orientations, the normalize2 case) and free structures with threshold >= 1
(positive words, groupoidal columns).  Threshold 0 over a graph WITH
2-generators would let word reduction merge columns, which is outside the
slot picture; Strictifier rejects that configuration up front.
"""

from __future__ import annotations

from dataclasses import dataclass

from .globular import TruncatedGlobularSet
from .terms import IllTypedTermError, StretchTerm, TermContext, term_dim, term_name
from .words import Step, Word, reduce_word, word_name

Letter = tuple[str, int]  # (2-generator, +1 or -1)


class UnsupportedFreeConstructionError(ValueError):
    """The requested free structure has no normal-form backing here."""


@dataclass(frozen=True)
class NF0:
    cell: str


@dataclass(frozen=True)
class NF1:
    word: Word


@dataclass(frozen=True)
class NF2:
    dom: Word
    cols: tuple[tuple[Letter, ...], ...]

    @property
    def degenerate(self) -> bool:
        return all(not col for col in self.cols)


@dataclass(frozen=True)
class NF3:
    content: NF2


NF = NF0 | NF1 | NF2 | NF3


def nf_dim(nf: NF) -> int:
    return {NF0: 0, NF1: 1, NF2: 2, NF3: 3}[type(nf)]


def nf_name(nf: NF) -> str:
    """Canonical, injective cell name per dimension grade."""
    if isinstance(nf, NF0):
        return nf.cell
    if isinstance(nf, NF1):
        return word_name(nf.word)
    if isinstance(nf, NF2):
        if nf.degenerate:
            return f"1({word_name(nf.dom)})"
        cols = ",".join(
            f"{k}:" + ".".join(f"{g}{'+' if s > 0 else '-'}" for g, s in col)
            for k, col in enumerate(nf.cols)
            if col
        )
        return f"2<{word_name(nf.dom)}|{cols}>"
    if isinstance(nf, NF3):
        return f"1({nf_name(nf.content)})"
    raise TypeError(type(nf))


def _reduce_letters(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for let in letters:
        if stack and stack[-1][0] == let[0] and stack[-1][1] == -let[1]:
            stack.pop()
        else:
            stack.append(let)
    return tuple(stack)


class Strictifier:
    """Normal-form presentation of the free strict structure on a graph."""

    def __init__(self, g: TruncatedGlobularSet, threshold: int):
        if g.max_dim > 2:
            raise UnsupportedFreeConstructionError(
                "normal-form strictification needs a generating set of dimension <= 2"
            )
        if threshold == 0 and g.grade(2):
            raise UnsupportedFreeConstructionError(
                "threshold 0 with 2-dimensional generators: word reduction "
                "would merge columns, which the slot normal form cannot decide"
            )
        self.g = g
        self.threshold = threshold
        self.inv1 = threshold == 0
        self.inv2 = threshold <= 1
        self._ctx = TermContext(g, threshold)
        self._memo: dict[StretchTerm, NF] = {}

    # -- column bookkeeping --------------------------------------------

    def _apply_letter(self, step: Step, letter: Letter) -> Step:
        edge, orient = step
        gen2, sign = letter
        if orient != 1:
            raise UnsupportedFreeConstructionError("a 2-generator cannot act on an inverted edge")
        lo = self.g.map("source", 2)[gen2]
        hi = self.g.map("target", 2)[gen2]
        if sign > 0:
            if edge != lo:
                raise IllTypedTermError(f"{gen2} expects slot edge {lo}, found {edge}")
            return (hi, 1)
        if edge != hi:
            raise IllTypedTermError(f"{gen2} reversed expects slot edge {hi}, found {edge}")
        return (lo, 1)

    def _slot_end(self, step: Step, col: tuple[Letter, ...]) -> Step:
        for letter in col:
            step = self._apply_letter(step, letter)
        return step

    def _word(self, base: str, steps) -> Word:
        from .words import make_word

        return make_word(self.g, base, list(steps))

    def cod2(self, nf: NF2) -> Word:
        steps = tuple(self._slot_end(s, c) for s, c in zip(nf.dom.steps, nf.cols))
        return self._word(nf.dom.base, steps)

    # -- normal-form operations ----------------------------------------

    def refl_lift(self, nf: NF) -> NF:
        """The degenerate cell one grade up."""
        if isinstance(nf, NF0):
            return NF1(Word(nf.cell, ()))
        if isinstance(nf, NF1):
            return NF2(nf.word, tuple(() for _ in nf.word.steps))
        if isinstance(nf, NF2):
            return NF3(nf)
        raise UnsupportedFreeConstructionError("no grade above 3 in this presentation")

    def src_nf(self, nf: NF) -> NF:
        if isinstance(nf, NF1):
            return NF0(self._word_src(nf.word))
        if isinstance(nf, NF2):
            return NF1(nf.dom)
        if isinstance(nf, NF3):
            return nf.content
        raise ValueError("0-cells have no boundary")

    def tgt_nf(self, nf: NF) -> NF:
        if isinstance(nf, NF1):
            return NF0(self._word_tgt(nf.word))
        if isinstance(nf, NF2):
            return NF1(self.cod2(nf))
        if isinstance(nf, NF3):
            return nf.content
        raise ValueError("0-cells have no boundary")

    def _word_src(self, w: Word) -> str:
        from .words import word_source

        return word_source(self.g, w)

    def _word_tgt(self, w: Word) -> str:
        from .words import word_target

        return word_target(self.g, w)

    def comp_nf(self, m: int, p: int, a: NF, b: NF) -> NF:
        """Composite "a after b" of two m-dimensional normal forms."""
        if nf_dim(a) != m or nf_dim(b) != m:
            raise IllTypedTermError("composition of normal forms needs matching dimensions")
        if m == 1:
            assert isinstance(a, NF1) and isinstance(b, NF1)
            return NF1(reduce_word(self.g, Word(b.word.base, a.word.steps + b.word.steps)))
        if m == 2:
            assert isinstance(a, NF2) and isinstance(b, NF2)
            if p == 1:
                if self.cod2(b) != a.dom:
                    raise IllTypedTermError("vertical composition of non-matching 2-cells")
                cols = tuple(
                    _reduce_letters(cb + ca) if self.inv2 else cb + ca
                    for cb, ca in zip(b.cols, a.cols)
                )
                return NF2(b.dom, cols)
            steps = a.dom.steps + b.dom.steps
            cols = a.cols + b.cols
            if self.inv1:
                # only the degenerate case can cancel; columns are empty then
                reduced = reduce_word(self.g, self._word(b.dom.base, steps))
                if len(reduced.steps) != len(steps):
                    if any(cols):
                        raise UnsupportedFreeConstructionError(
                            "cancellation under a nonempty column"
                        )
                    return NF2(reduced, tuple(() for _ in reduced.steps))
            return NF2(self._word(b.dom.base, steps), cols)
        if m == 3:
            assert isinstance(a, NF3) and isinstance(b, NF3)
            if p == 2:
                return NF3(a.content)
            inner = self.comp_nf(2, p, a.content, b.content)
            assert isinstance(inner, NF2)
            return NF3(inner)
        raise IllTypedTermError(f"no composition at dimension {m}")

    def rev_nf(self, m: int, p: int, nf: NF) -> NF:
        if p < self.threshold:
            raise IllTypedTermError(f"no reversor below the threshold {self.threshold}")
        if m == 1:
            assert isinstance(nf, NF1)
            from .words import reverse_word

            return NF1(reverse_word(self.g, nf.word))
        if m == 2:
            assert isinstance(nf, NF2)
            if p == 1:
                cols = tuple(
                    tuple((g2, -s) for g2, s in reversed(col)) for col in nf.cols
                )
                return NF2(self.cod2(nf), cols)
            if not nf.degenerate:
                raise UnsupportedFreeConstructionError(
                    "reversing a non-degenerate 2-cell over dimension 0"
                )
            rev1 = self.rev_nf(1, 0, NF1(nf.dom))
            assert isinstance(rev1, NF1)
            return NF2(rev1.word, tuple(() for _ in rev1.word.steps))
        if m == 3:
            assert isinstance(nf, NF3)
            if p == 2:
                return nf
            inner = self.rev_nf(2, p, nf.content)
            assert isinstance(inner, NF2)
            return NF3(inner)
        raise IllTypedTermError(f"no reversor at dimension {m}")

    # -- strictification of terms --------------------------------------

    def pi(self, t: StretchTerm) -> NF:
        hit = self._memo.get(t)
        if hit is not None:
            return hit
        nf = self._pi(t)
        self._memo[t] = nf
        return nf

    def _pi(self, t: StretchTerm) -> NF:
        d = term_dim(t)
        if d == 0:
            assert t.kind == "gen"
            return NF0(t.cell)
        if t.kind == "gen":
            if d == 1:
                return NF1(self._word("", ((t.cell, 1),)))
            if d == 2:
                src_edge = self.g.map("source", 2)[t.cell]
                return NF2(self._word("", ((src_edge, 1),)), (((t.cell, 1),),))
            raise UnsupportedFreeConstructionError("generators above dimension 2")
        if t.kind == "comp":
            m, p = t.dims
            return self.comp_nf(m, p, self.pi(t.args[0]), self.pi(t.args[1]))
        if t.kind == "refl":
            return self.refl_lift(self.pi(t.args[0]))
        if t.kind == "rev":
            m, p = t.dims
            return self.rev_nf(m, p, self.pi(t.args[0]))
        if t.kind == "bracket":
            # the bracket projects to the degenerate cell on its target's image
            return self.refl_lift(self.pi(t.args[0]))
        raise ValueError(t.kind)

    # -- canonical representative terms --------------------------------

    def canonical_term(self, nf: NF) -> StretchTerm:
        ctx = self._ctx
        if isinstance(nf, NF0):
            return ctx.gen(nf.cell)
        if isinstance(nf, NF1):
            return self._word_term(nf.word)
        if isinstance(nf, NF2):
            if nf.degenerate:
                return ctx.refl(1, 2, self._word_term(nf.dom))
            # canonical layer order: slot-major left to right, column order
            # within a slot; each layer is a right-nested horizontal product
            # of one 2-generator and single-step identities, so consecutive
            # layers chain syntactically
            layers = []
            current = list(nf.dom.steps)
            for k, col in enumerate(nf.cols):
                for letter in col:
                    layers.append(self._layer_term(current, k, letter))
                    current[k] = self._apply_letter(current[k], letter)
            term = layers[0]
            for lay in layers[1:]:
                term = ctx.comp(2, 1, lay, term)
            return term
        if isinstance(nf, NF3):
            return ctx.refl(2, 3, self.canonical_term(nf.content))
        raise TypeError(type(nf))

    def _step_term(self, step: Step) -> StretchTerm:
        edge, orient = step
        return self._ctx.gen(edge) if orient > 0 else self._ctx.rev(1, 0, self._ctx.gen(edge))

    def _word_term(self, w: Word) -> StretchTerm:
        ctx = self._ctx
        if not w.steps:
            return ctx.refl(0, 1, ctx.gen(w.base))
        terms = [self._step_term(s) for s in w.steps]
        out = terms[-1]
        for t in reversed(terms[:-1]):
            out = ctx.comp(1, 0, t, out)
        return out

    def _layer_term(self, positions: list[Step], k: int, letter: Letter) -> StretchTerm:
        ctx = self._ctx
        gen2, sign = letter
        factors = []
        for i, step in enumerate(positions):
            if i == k:
                factors.append(ctx.gen(gen2) if sign > 0 else ctx.rev(2, 1, ctx.gen(gen2)))
            else:
                factors.append(ctx.refl(1, 2, self._step_term(step)))
        out = factors[-1]
        for f in reversed(factors[:-1]):
            out = ctx.comp(2, 0, f, out)
        return out


def normalize2(g: TruncatedGlobularSet, t: StretchTerm) -> StretchTerm:
    """Canonical representative in the free strict 2-category on g.

    Accepts terms built from gen, comp, and refl only; two inputs get equal
    results exactly when the axioms (associativity, units, interchange,
    reflexor functoriality) identify them.
    """

    def check(u: StretchTerm) -> None:
        if u.kind in ("rev", "bracket"):
            raise IllTypedTermError(f"normalize2 does not accept {u.kind} nodes: {term_name(u)}")
        for a in u.args:
            check(a)

    check(t)
    if term_dim(t) > 2:
        raise IllTypedTermError("normalize2 handles terms of dimension <= 2")
    strict = Strictifier(g, threshold=max(2, 0))
    return strict.canonical_term(strict.pi(t))
