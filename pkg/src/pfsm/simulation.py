"""Simulations, bi-similarity and isomorphism of machines.

A relation ``R`` between the states of ``m`` and ``n`` is a simulation of
``m`` by ``n`` when it relates the initial states and every transition
``s -x/a-> r`` of a related ``s`` is matched by some ``q -x/a-> p`` with
``(r, p)`` again related.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional

from .fsm import Fsm
from .reduction import reachable


class UnreachableStatesError(ValueError):
    def __init__(self, machine, states):
        self.machine = machine
        self.states = tuple(states)
        super().__init__(
            f"machine {machine!r} has unreachable states: {' '.join(map(str, self.states))}")


class AlphabetMismatchError(ValueError):
    pass


def _transfers(m: Fsm, n: Fsm, s, q, rel) -> bool:
    for x in m.inputs:
        a = m.transitions.get((s, x))
        if a is None:
            continue
        b = n.transitions.get((q, x))
        if b is None or b[1] != a[1] or (a[0], b[0]) not in rel:
            return False
    return True


def greatest_simulation(m: Fsm, n: Fsm) -> Optional[frozenset]:
    """Largest transfer-closed relation between ``m`` and ``n``.

    Starts from all state pairs and deletes violators until stable. Returns
    ``None`` when the initial pair does not survive.
    """
    rel = {(s, q) for s in m.states for q in n.states}
    changed = True
    while changed:
        changed = False
        for pair in sorted(rel, key=lambda p: (m.state_index[p[0]], n.state_index[p[1]])):
            if not _transfers(m, n, pair[0], pair[1], rel):
                rel.discard(pair)
                changed = True
    if (m.initial, n.initial) not in rel:
        return None
    return frozenset(rel)


def is_simulation(m: Fsm, n: Fsm, pairs: Iterable) -> bool:
    """Whether ``pairs`` is a simulation of ``m`` by ``n``."""
    rel = set(pairs)
    if (m.initial, n.initial) not in rel:
        return False
    return all(_transfers(m, n, s, q, rel) for s, q in rel)


def bisimilar(m: Fsm, n: Fsm) -> bool:
    return greatest_simulation(m, n) is not None and greatest_simulation(n, m) is not None


def _require_reachable(m: Fsm):
    live = reachable(m)
    if len(live) != len(m.states):
        raise UnreachableStatesError(m.name, [s for s in m.states if s not in live])


def isomorphic(m: Fsm, n: Fsm) -> Optional[dict]:
    """The isomorphism of ``m`` onto ``n`` as a dict, or ``None``.

    Both machines must be fully reachable. Determinism forces the only
    candidate map: the one pairing states reached by the same word.
    """
    _require_reachable(m)
    _require_reachable(n)
    if set(m.outputs) != set(n.outputs):
        raise AlphabetMismatchError(
            f"output alphabets differ: {m.outputs} vs {n.outputs}")
    if len(m.states) != len(n.states):
        return None
    symbols = list(m.inputs) + [x for x in n.inputs if x not in m.input_index]
    f = {m.initial: n.initial}
    used = {n.initial}
    queue = deque([m.initial])
    while queue:
        s = queue.popleft()
        q = f[s]
        for x in symbols:
            a = m.transitions.get((s, x))
            b = n.transitions.get((q, x))
            if a is None and b is None:
                continue
            if a is None or b is None or a[1] != b[1]:
                return None
            r, p = a[0], b[0]
            if r in f:
                if f[r] != p:
                    return None
            else:
                if p in used:
                    return None
                f[r] = p
                used.add(p)
                queue.append(r)
    if len(f) != len(m.states):
        return None
    return f
