"""Independent brute-force oracles and random machine generators for tests.

Nothing here calls into the product-automaton or fixpoint code of the
package; the oracles work from explicit word enumeration and raw
transition dictionaries.
"""

import itertools

import numpy as np

from pfsm import Fsm

BIN = ("0", "1")


def random_fsm(rng, n_states, inputs=BIN, outputs=BIN, p_defined=0.7, name="R",
               prefix="s"):
    states = [f"{prefix}{i}" for i in range(n_states)]
    trans = {}
    for s in states:
        for x in inputs:
            if rng.random() < p_defined:
                trans[(s, x)] = (rng.choice(states), rng.choice(outputs))
    return Fsm(name, states, states[0], inputs, outputs, trans)


def random_reachable_fsm(rng, n_states, **kw):
    """Random machine whose states are all reachable from the first one."""
    while True:
        m = random_fsm(rng, n_states, **kw)
        if _reach(m) == set(m.states):
            return m


def _reach(m):
    seen, todo = {m.initial}, [m.initial]
    while todo:
        s = todo.pop()
        for x in m.inputs:
            t = m.transitions.get((s, x))
            if t and t[0] not in seen:
                seen.add(t[0])
                todo.append(t[0])
    return seen


def random_suite(rng, alphabet=BIN, max_words=4, max_len=4, allow_empty=False):
    lo = 0 if allow_empty else 1
    words = set()
    for _ in range(rng.randint(1, max_words)):
        n = rng.randint(lo, max_len)
        words.add(tuple(rng.choice(alphabet) for _ in range(n)))
    return frozenset(words)


def words_upto(alphabet, n):
    for k in range(n + 1):
        yield from itertools.product(alphabet, repeat=k)


def trace(m, s, w):
    """Return ``(ok, target, outputs)`` by walking raw transitions."""
    out = []
    for x in w:
        t = m.transitions.get((s, x))
        if t is None:
            return False, None, None
        s, y = t
        out.append(y)
    return True, s, tuple(out)


def union_alphabet(m, n):
    return tuple(m.inputs) + tuple(x for x in n.inputs if x not in m.inputs)


def _tables(m, order):
    """Next-state and output tables indexed ``[state, symbol]``; -1 means undefined."""
    idx = {s: i for i, s in enumerate(m.states)}
    out_idx = {y: i for i, y in enumerate(m.outputs)}
    nxt = np.full((len(m.states) + 1, len(order)), -1, dtype=np.int64)
    out = np.full((len(m.states) + 1, len(order)), -1, dtype=np.int64)
    for (s, x), (t, y) in m.transitions.items():
        nxt[idx[s], order.index(x)] = idx[t]
        out[idx[s], order.index(x)] = out_idx[y]
    return idx, nxt, out


def oracle_witnesses(m, s, n, q, blocking, max_len, limit=None):
    """Witnesses of non-equivalence (or unlikeness) in length-lex order.

    Every word up to ``max_len`` over the union alphabet is run in both
    machines at once: level ``k`` holds one array slot per word of length
    ``k``, in lexicographic order. The row ``-1`` of each table is the
    blocked sink. A witness for equivalence runs in both machines with some
    differing output; for alikeness, running in exactly one machine also
    counts. Output symbols are compared by name.
    """
    order = list(union_alphabet(m, n))
    k = len(order)
    im, nm, om = _tables(m, order)
    iq, nq, oq = _tables(n, order)
    # map output indices to shared ids so they compare by name
    names = {y: i for i, y in enumerate(dict.fromkeys(tuple(m.outputs) + tuple(n.outputs)))}
    om = np.where(om >= 0, np.array([names[y] for y in m.outputs] + [-1])[om], -1)
    oq = np.where(oq >= 0, np.array([names[y] for y in n.outputs] + [-1])[oq], -1)
    a = np.array([im[s]])
    b = np.array([iq[q]])
    differs = np.array([False])
    found = []
    for length in range(max_len + 1):
        da, db = a >= 0, b >= 0
        hit = da & db & differs
        if blocking:
            hit |= da != db
        for i in np.flatnonzero(hit):
            found.append(_decode(int(i), length, order))
            if limit and len(found) >= limit:
                return found
        if length == max_len:
            break
        ra, rb = np.where(da, a, -1), np.where(db, b, -1)
        ya, yb = om[ra], oq[rb]
        a, b = nm[ra].ravel(), nq[rb].ravel()
        differs = (np.repeat(differs, k) | ((ya != yb) & (ya >= 0) & (yb >= 0)).ravel())
    return found


def _decode(i, length, order):
    k = len(order)
    w = []
    for _ in range(length):
        i, r = divmod(i, k)
        w.append(order[r])
    return tuple(reversed(w))


def oracle_equiv(m, s, n, q, max_len, limit=1):
    return oracle_witnesses(m, s, n, q, False, max_len, limit)


def oracle_alike(m, s, n, q, max_len, limit=1):
    return oracle_witnesses(m, s, n, q, True, max_len, limit)


def behaviour_signature(m, max_len):
    """Runnable words with their outputs from the initial state, up to ``max_len``."""
    sig = []
    for w in words_upto(m.inputs, max_len):
        ok, _, out = trace(m, m.initial, w)
        sig.append(out if ok else None)
    return tuple(sig)


def brute_force_canonical_count(max_states, inputs, outputs):
    """Count reachable machines with at most ``max_states`` states up to isomorphism.

    Enumerates every labelled machine over ``{0..n-1}`` with state 0 initial,
    keeps the fully reachable ones, and collapses isomorphic copies by
    relabelling with all permutations that fix state 0.
    """
    seen = set()
    for n in range(1, max_states + 1):
        slots = [(s, x) for s in range(n) for x in inputs]
        choices = [None] + [(t, y) for t in range(n) for y in outputs]
        for combo in itertools.product(choices, repeat=len(slots)):
            trans = {k: v for k, v in zip(slots, combo) if v is not None}
            reach, todo = {0}, [0]
            while todo:
                s = todo.pop()
                for x in inputs:
                    t = trans.get((s, x))
                    if t and t[0] not in reach:
                        reach.add(t[0])
                        todo.append(t[0])
            if len(reach) != n:
                continue
            forms = []
            for perm in itertools.permutations(range(1, n)):
                p = (0,) + perm
                forms.append(tuple(sorted(
                    ((p[s], x), (p[t], y)) for (s, x), (t, y) in trans.items())))
            seen.add((n, min(forms)))
    return len(seen)
