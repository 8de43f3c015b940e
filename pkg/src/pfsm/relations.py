"""Distinguishability, equivalence and alikeness between machine states.

Two states are *C-equivalent* when they produce the same output on every
word of C that runs from both. They are *C-alike* when, in addition, every
word of C runs from both or from neither. With ``C`` a finite test suite the
check is direct; for the full set of words it is decided by a breadth-first
traversal of the synchronous product, which also yields the shortest witness
(ties broken lexicographically by input-symbol order).

A symbol that appears in only one machine's alphabet is treated as undefined
in the other.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .fsm import (
    Completed,
    Fsm,
    InvalidInputError,
    State,
    Word,
    _trace,
    format_word,
    make_suite,
    word_key,
)

OUTPUT_MISMATCH = "OutputMismatch"
BLOCKING_ASYMMETRY = "BlockingAsymmetry"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a relation check.

    On failure ``witness`` is a shortest distinguishing word. For a
    blocking asymmetry, ``side`` names the machine (``"first"`` or
    ``"second"``) in which the witness runs to completion.
    """

    holds: bool
    witness: Optional[Word] = None
    kind: Optional[str] = None
    side: Optional[str] = None
    detail: Optional[str] = None

    def __bool__(self):
        return self.holds

    @property
    def kind_label(self) -> Optional[str]:
        if self.kind == BLOCKING_ASYMMETRY and self.side:
            return f"{self.kind}({self.side})"
        return self.kind

    def line(self) -> str:
        if self.holds:
            return "HOLDS"
        parts = ["FAILS"]
        if self.kind:
            parts.append(self.kind_label)
        if self.witness is not None:
            parts.append(format_word(self.witness))
        elif self.detail:
            parts.append(self.detail)
        return " ".join(parts)


HOLDS = Verdict(True)


def union_order(m: Fsm, n: Fsm) -> dict:
    symbols = list(m.inputs) + [x for x in n.inputs if x not in m.input_index]
    return {x: i for i, x in enumerate(symbols)}


def _check_pair(m, s, n, q):
    m.check_state(s)
    n.check_state(q)


def _check_suite(m, n, suite):
    order = union_order(m, n)
    for w in suite:
        for x in w:
            if x not in order:
                raise InvalidInputError(f"suite symbol {x!r} is in neither input alphabet")
    return order


def _suite_verdict(m, s, n, q, suite, blocking):
    suite = make_suite(suite)
    _check_pair(m, s, n, q)
    order = _check_suite(m, n, suite)
    for w in sorted(suite, key=lambda w: word_key(w, order)):
        a = _trace(m, s, w)
        b = _trace(n, q, w)
        ca, cb = isinstance(a, Completed), isinstance(b, Completed)
        if ca and cb:
            if a.output != b.output:
                return Verdict(False, w, OUTPUT_MISMATCH)
        elif blocking and ca != cb:
            return Verdict(False, w, BLOCKING_ASYMMETRY, "first" if ca else "second")
    return HOLDS


def equiv_under_suite(m: Fsm, s: State, n: Fsm, q: State, suite: Iterable) -> Verdict:
    """Whether ``s`` and ``q`` agree on every suite word that runs from both."""
    return _suite_verdict(m, s, n, q, suite, blocking=False)


def alike_under_suite(m: Fsm, s: State, n: Fsm, q: State, suite: Iterable) -> Verdict:
    """Whether ``s`` and ``q`` block on the same suite words and agree on the rest."""
    return _suite_verdict(m, s, n, q, suite, blocking=True)


def _product_search(m, s, n, q, blocking):
    _check_pair(m, s, n, q)
    symbols = list(union_order(m, n))
    start = (s, q)
    access = {start: ()}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, r = pair
        for x in symbols:
            a = m.transitions.get((p, x))
            b = n.transitions.get((r, x))
            if a is None or b is None:
                if blocking and (a is None) != (b is None):
                    side = "first" if a is not None else "second"
                    return Verdict(False, access[pair] + (x,), BLOCKING_ASYMMETRY, side)
                continue
            if a[1] != b[1]:
                return Verdict(False, access[pair] + (x,), OUTPUT_MISMATCH)
            nxt = (a[0], b[0])
            if nxt not in access:
                access[nxt] = access[pair] + (x,)
                queue.append(nxt)
    return HOLDS


def equiv_total(m: Fsm, s: State, n: Fsm, q: State) -> Verdict:
    """Equivalence over all words: equal outputs wherever both states run."""
    return _product_search(m, s, n, q, blocking=False)


def alike_total(m: Fsm, s: State, n: Fsm, q: State) -> Verdict:
    """Alikeness over all words: same runnable words and equal outputs on them."""
    return _product_search(m, s, n, q, blocking=True)


def alikeness_partition(m: Fsm) -> list:
    """Classes of mutually alike states of ``m``.

    Blocks are lists in declaration order; blocks are ordered by their
    least member.
    """
    parent = {s: s for s in m.states}

    def find(s):
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    for i, s in enumerate(m.states):
        for r in m.states[i + 1:]:
            if find(s) != find(r) and alike_total(m, s, m, r).holds:
                a, b = find(s), find(r)
                if m.state_index[a] < m.state_index[b]:
                    parent[b] = a
                else:
                    parent[a] = b
    blocks = {}
    for s in m.states:
        blocks.setdefault(find(s), []).append(s)
    return sorted(blocks.values(), key=lambda b: m.state_index[b[0]])
