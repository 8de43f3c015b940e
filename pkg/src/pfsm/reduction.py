"""Reachability, reducedness and the alikeness quotient."""

from __future__ import annotations

from collections import deque

from .fsm import Fsm
from .relations import HOLDS, Verdict, alike_total, alikeness_partition, equiv_total


def reachable(m: Fsm) -> frozenset:
    seen = {m.initial}
    queue = deque([m.initial])
    while queue:
        s = queue.popleft()
        for x in m.inputs:
            t = m.transitions.get((s, x))
            if t is not None and t[0] not in seen:
                seen.add(t[0])
                queue.append(t[0])
    return frozenset(seen)


def _unreachable_verdict(m: Fsm):
    live = reachable(m)
    dead = [s for s in m.states if s not in live]
    if dead:
        return Verdict(False, detail="unreachable " + " ".join(map(str, dead)))
    return None


def is_reduced(m: Fsm) -> Verdict:
    """All states reachable and every two distinct states distinguishable."""
    bad = _unreachable_verdict(m)
    if bad is not None:
        return bad
    for i, s in enumerate(m.states):
        for r in m.states[i + 1:]:
            if equiv_total(m, s, m, r).holds:
                return Verdict(False, detail=f"equivalent {s} {r}")
    return HOLDS


def is_p_reduced(m: Fsm) -> Verdict:
    """All states reachable and no two distinct states alike."""
    bad = _unreachable_verdict(m)
    if bad is not None:
        return bad
    for block in alikeness_partition(m):
        if len(block) > 1:
            return Verdict(False, detail="alike " + " ".join(map(str, block)))
    return HOLDS


def class_name(rep) -> str:
    return f"[{rep}]"


def p_reduce(m: Fsm, name: str = None) -> Fsm:
    """Quotient of the reachable part of ``m`` by state alikeness.

    Each class is named ``[rep]`` after its least reachable member. Alike
    states have the same defined inputs, outputs and alike successors, so
    the representative's transitions determine the class's.
    """
    live = reachable(m)
    states = [s for s in m.states if s in live]
    rep = {}
    order = []
    for s in states:
        if s in rep:
            continue
        rep[s] = s
        order.append(s)
        for r in states:
            if r not in rep and alike_total(m, s, m, r).holds:
                rep[r] = s
    transitions = {}
    for s in order:
        for x in m.inputs:
            t = m.transitions.get((s, x))
            if t is not None:
                transitions[(class_name(s), x)] = (class_name(rep[t[0]]), t[1])
    return Fsm(
        name or f"{m.name}_p",
        [class_name(s) for s in order],
        class_name(rep[m.initial]),
        m.inputs,
        m.outputs,
        transitions,
    )


def prune(m: Fsm, name: str = None) -> Fsm:
    """Drop unreachable states."""
    live = reachable(m)
    return Fsm(
        name or m.name,
        [s for s in m.states if s in live],
        m.initial,
        m.inputs,
        m.outputs,
        {k: v for k, v in m.transitions.items() if k[0] in live},
    )
