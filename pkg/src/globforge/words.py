"""Words over a generating graph and the dimension-1 free groupoid.

A word is a base 0-cell together with a sequence of signed edges.  The
sequence is read right to left as composition: the last step is applied
first, so consecutive steps must chain head-to-tail, the word's source is
the tail of its last step, and its target is the head of its first step.
The empty word at a point is that point's identity.

Reduction deletes adjacent inverse pairs e+e- or e-e+ of the same edge
until none remain.  The rewrite is confluent, so the reduced word is unique
regardless of deletion order; reduce_word uses a single stack scan and
reduce_word_any_order replays an arbitrary deletion order for comparison.

free_groupoid_cells materializes the 1-truncated free groupoid on a graph
as a strict structure whose 1-cells are the reduced words up to a length
bound.  Composition is concatenate-then-reduce and is partial at the length
boundary, so validators should be run with require_total=False.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .globular import TruncatedGlobularSet, globular_set
from .layers import ReflexorStructure
from .magma import CompositionStructure, InfinityMagma, StrictNCategory

Step = tuple[str, int]  # (edge name, +1 or -1)


class MalformedWordError(ValueError):
    """Consecutive steps of a word do not chain, or a step names no edge."""


@dataclass(frozen=True)
class Word:
    base: str  # source 0-cell; the whole word for the empty sequence
    steps: tuple[Step, ...]

    def __len__(self) -> int:
        return len(self.steps)


def _ends(gs: TruncatedGlobularSet, step: Step) -> tuple[str, str]:
    """(tail, head) of a signed edge."""
    edge, orient = step
    if not gs.has_cell(1, edge):
        raise MalformedWordError(f"unknown edge {edge}")
    s, t = gs.map("source", 1)[edge], gs.map("target", 1)[edge]
    return (s, t) if orient > 0 else (t, s)


def word_source(gs: TruncatedGlobularSet, w: Word) -> str:
    return _ends(gs, w.steps[-1])[0] if w.steps else w.base


def word_target(gs: TruncatedGlobularSet, w: Word) -> str:
    return _ends(gs, w.steps[0])[1] if w.steps else w.base


def make_word(gs: TruncatedGlobularSet, base: str, steps: list[Step] | tuple[Step, ...]) -> Word:
    """Validate chaining and endpoints, then freeze."""
    steps = tuple(steps)
    for step in steps:
        _ends(gs, step)
    for first, second in zip(steps, steps[1:]):
        if _ends(gs, first)[0] != _ends(gs, second)[1]:
            raise MalformedWordError(
                f"steps {first} and {second} do not chain: tail {_ends(gs, first)[0]} vs head {_ends(gs, second)[1]}"
            )
    if steps:
        base = _ends(gs, steps[-1])[0]
    elif not gs.has_cell(0, base):
        raise MalformedWordError(f"unknown 0-cell {base}")
    return Word(base, steps)


def _cancels(a: Step, b: Step) -> bool:
    return a[0] == b[0] and a[1] == -b[1]


def reduce_word(gs: TruncatedGlobularSet, w: Word) -> Word:
    """Unique reduced form via a stack scan; idempotent and endpoint-preserving."""
    stack: list[Step] = []
    for step in w.steps:
        if stack and _cancels(stack[-1], step):
            stack.pop()
        else:
            stack.append(step)
    return make_word(gs, w.base, stack)


def reduce_word_any_order(gs: TruncatedGlobularSet, w: Word, rng: random.Random) -> Word:
    """Delete a randomly chosen cancellable adjacent pair until none remain.

    Confluence of the cancellation rewrite makes this agree with
    reduce_word for every deletion order.
    """
    steps = list(w.steps)
    while True:
        sites = [i for i in range(len(steps) - 1) if _cancels(steps[i], steps[i + 1])]
        if not sites:
            return make_word(gs, w.base, steps)
        i = rng.choice(sites)
        del steps[i : i + 2]


def word_name(w: Word) -> str:
    """Canonical cell name: id(a) for the empty word, dotted signed edges otherwise."""
    if not w.steps:
        return f"id({w.base})"
    return ".".join(f"{edge}{'+' if orient > 0 else '-'}" for edge, orient in w.steps)


def parse_word(gs: TruncatedGlobularSet, text: str) -> Word:
    """Parse 'e+.f-' or 'e+ f-' or 'id(a)' into a validated word."""
    text = text.strip()
    if text.startswith("id(") and text.endswith(")"):
        return make_word(gs, text[3:-1].strip(), [])
    tokens = [t for chunk in text.split() for t in chunk.split(".") if t]
    if not tokens:
        raise MalformedWordError("empty word needs an explicit base point, e.g. id(a)")
    steps: list[Step] = []
    for tok in tokens:
        if tok.endswith("+"):
            steps.append((tok[:-1], 1))
        elif tok.endswith("-"):
            steps.append((tok[:-1], -1))
        else:
            raise MalformedWordError(f"step {tok!r} must end with an orientation sign")
    return make_word(gs, "", steps)


def enumerate_reduced_words(gs: TruncatedGlobularSet, max_len: int) -> list[Word]:
    """All reduced words of length <= max_len, in a deterministic order."""
    edges = gs.grade(1)
    frontier: list[Word] = [Word(a, ()) for a in gs.grade(0)]
    out: list[Word] = list(frontier)
    for _ in range(max_len):
        nxt: list[Word] = []
        for w in frontier:
            head = word_target(gs, w)
            for edge in edges:
                for orient in (1, -1):
                    step = (edge, orient)
                    tail, _ = _ends(gs, step)
                    # extend on the outside; reject immediate cancellation
                    if tail != head:
                        continue
                    if w.steps and _cancels(step, w.steps[0]):
                        continue
                    nxt.append(Word(w.base, (step,) + w.steps))
        frontier = nxt
        out.extend(frontier)
    out.sort(key=lambda w: (len(w.steps), word_name(w)))
    return out


def free_groupoid_cells(g: TruncatedGlobularSet, max_len: int) -> StrictNCategory:
    """The 1-truncated free groupoid on a graph, cells bounded by word length.

    Composition entries exist exactly when the reduced concatenation stays
    within the bound; the total fragment is strict and every 1-cell has the
    reversed word as its inverse.
    """
    if g.max_dim > 1:
        raise ValueError("free groupoid generation expects a graph of dimension <= 1")
    words = enumerate_reduced_words(g, max_len)
    names = {word_name(w): w for w in words}
    cells1 = tuple(sorted(names))
    src = {1: {nm: word_source(g, w) for nm, w in names.items()}}
    tgt = {1: {nm: word_target(g, w) for nm, w in names.items()}}
    gs = globular_set(1, {0: g.grade(0), 1: cells1}, src, tgt)

    refl = ReflexorStructure({(0, 1): {a: word_name(Word(a, ())) for a in g.grade(0)}})

    table: dict[tuple[str, str], str] = {}
    for ny, wy in names.items():
        for nx, wx in names.items():
            if word_source(g, wy) != word_target(g, wx):
                continue
            z = reduce_word(g, Word(wx.base, wy.steps + wx.steps))
            if len(z) <= max_len:
                table[(ny, nx)] = word_name(z)
    comp = CompositionStructure({(1, 0): table})
    return StrictNCategory(InfinityMagma(gs, refl, comp), threshold=0)


def reverse_word(gs: TruncatedGlobularSet, w: Word) -> Word:
    """Formal inverse: reversed steps with flipped orientations."""
    steps = tuple((edge, -orient) for edge, orient in reversed(w.steps))
    return make_word(gs, word_target(gs, w), list(steps))
