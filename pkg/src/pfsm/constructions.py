"""Counterexample machines for completeness and perfectness.

``completeness_counterexample`` layers copies of a reduced specification,
one layer per symbol of a shortest non-extensible suite word ``sigma``
plus a final layer. Walking ``sigma`` climbs the layers; in the top layer a
single transition (the *marked* one) has its output changed. Any run that
reaches the top layer has ``sigma`` as a subsequence, so choosing ``sigma``
not embedded in any longer suite word hides the fault from the suite.

``perfectness_counterexample`` grows a tree machine that follows ``sigma``
with a wrong final output, then grafts just enough of the specification to
make every runnable suite word behave as specified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .fsm import (
    Blocked,
    Completed,
    Fsm,
    Word,
    WordLike,
    _trace,
    as_word,
    format_word,
    make_suite,
    word_key,
)
from .reduction import is_reduced
from .reduction import prune as prune_unreachable


class ConstructionError(ValueError):
    """A precondition of a counterexample construction does not hold."""


class NotReduced(ConstructionError):
    pass


class OutputAlphabetTooSmall(ConstructionError):
    pass


class NoUsableSigma(ConstructionError):
    pass


class NoMarkedTransition(ConstructionError):
    pass


class SigmaInSuite(ConstructionError):
    pass


class SigmaBlocks(ConstructionError):
    pass


class SigmaHasSuiteExtension(ConstructionError):
    pass


def is_embedded(needle: WordLike, haystack: WordLike) -> bool:
    """Whether ``needle`` occurs in ``haystack`` as a (scattered) subsequence."""
    it = iter(as_word(haystack))
    return all(any(x == y for y in it) for x in as_word(needle))


def is_extensible(w: WordLike, suite: Iterable[WordLike]) -> bool:
    """Whether inserting a nonempty block somewhere in ``w`` yields a suite word."""
    w = as_word(w)
    n = len(w)
    for t in make_suite(suite):
        extra = len(t) - n
        if extra <= 0:
            continue
        for i in range(n + 1):
            if t[:i] == w[:i] and t[i + extra:] == w[i:]:
                return True
    return False


def _default_order(suite) -> dict:
    return {x: i for i, x in enumerate(sorted({x for w in suite for x in w}))}


def shortest_non_extensible(suite: Iterable[WordLike], order: Mapping = None) -> Word:
    """Least non-extensible suite member by length, then symbol order.

    ``order`` maps symbols to ranks; it defaults to sorted symbol order.
    """
    suite = make_suite(suite)
    order = order or _default_order(suite)
    for w in sorted(suite, key=lambda w: word_key(w, order)):
        if not is_extensible(w, suite):
            return w
    raise AssertionError("a longest suite word is never extensible")


def _other_output(m: Fsm, a):
    for b in m.outputs:
        if b != a:
            return b
    raise OutputAlphabetTooSmall(f"machine {m.name!r} has a single output symbol")


def _measure(tree: Fsm, suite) -> int:
    total = 0
    for w in suite:
        r = _trace(tree, tree.initial, w)
        total += len(w) if isinstance(r, Completed) else r.defined_prefix_length
    return total


def level_name(s, level: int) -> str:
    return f"{s}@{level}"


def is_embedded_in_suite(w: WordLike, suite: Iterable[WordLike]) -> bool:
    """Whether ``w`` is a subsequence of some strictly longer suite word."""
    w = as_word(w)
    return any(len(t) > len(w) and is_embedded(w, t) for t in make_suite(suite))


def shortest_non_embedded(suite: Iterable[WordLike], order: Mapping = None) -> Word:
    """Least suite member not embedded in a longer one, by length then symbol order.

    Every such word is also non-extensible; the converse fails, e.g. ``1``
    in ``{0, 1, 01110}``.
    """
    suite = make_suite(suite)
    order = order or _default_order(suite)
    for w in sorted(suite, key=lambda w: word_key(w, order)):
        if not is_embedded_in_suite(w, suite):
            return w
    raise AssertionError("a longest suite word is never embedded in a longer one")


def _layer_sigma(m: Fsm, suite, sigma):
    if sigma is None:
        sigma = shortest_non_embedded(suite, m.input_index)
    sigma = as_word(sigma)
    if not sigma:
        raise NoUsableSigma("sigma is empty, so every machine is equivalent on the suite")
    path = [m.initial]
    for x in sigma:
        t = m.transitions.get((path[-1], x))
        if t is None:
            raise NoUsableSigma(f"sigma {format_word(sigma)!r} blocks in {m.name!r}")
        path.append(t[0])
    return sigma, path


def completeness_counterexample(m: Fsm, suite: Iterable[WordLike], prune: bool = False,
                                sigma: WordLike = None, name: str = None) -> Fsm:
    """A machine equivalent to ``m`` on ``suite`` but not in general.

    ``sigma`` defaults to :func:`shortest_non_embedded`; with that choice
    every suite run reaching the top layer would embed ``sigma`` in a
    longer suite word, so the flipped output is never observed. The result
    has ``(len(sigma) + 1) * len(m.states)`` states named ``state@level``
    before optional pruning, and runs exactly the words ``m`` runs.
    """
    suite = make_suite(suite)
    if not is_reduced(m).holds:
        raise NotReduced(f"machine {m.name!r} is not reduced")
    if len(m.outputs) < 2:
        raise OutputAlphabetTooSmall(f"machine {m.name!r} has a single output symbol")
    sigma, path = _layer_sigma(m, suite, sigma)
    top = len(sigma)
    end = path[-1]
    marked_inputs = m.defined_inputs(end)
    if not marked_inputs:
        raise NoMarkedTransition(f"no transition leaves {end!r} in {m.name!r}")
    z = marked_inputs[0]

    transitions = {}
    for level in range(top):
        climb = (path[level], sigma[level])
        for s, x, y, r in m.edges():
            dst = level + 1 if (s, x) == climb else level
            transitions[(level_name(s, level), x)] = (level_name(r, dst), y)
    for s, x, y, r in m.edges():
        if (s, x) == (end, z):
            y = _other_output(m, y)
        transitions[(level_name(s, top), x)] = (level_name(r, top), y)

    states = [level_name(s, level) for level in range(top + 1) for s in m.states]
    n = Fsm(name or f"{m.name}_cc", states, level_name(m.initial, 0), m.inputs, m.outputs,
            transitions)
    return prune_unreachable(n) if prune else n


@dataclass(frozen=True)
class TreeMachine:
    """Result of the perfectness construction.

    ``sigma_path`` lists the tree states along ``sigma``; ``grafts`` the
    ``(state, input)`` pairs added afterwards, in order; ``measures`` the
    suite blocking measure of each intermediate tree, starting with the
    bare ``sigma`` path.
    """

    fsm: Fsm
    sigma: Word
    sigma_path: tuple
    grafts: tuple = ()
    grafted_words: tuple = ()
    measures: tuple = field(default=())


def perfectness_counterexample(m: Fsm, suite: Iterable[WordLike], sigma: WordLike,
                               name: str = None) -> TreeMachine:
    """A tree machine alike to ``m`` on ``suite`` but unlike ``m`` on ``sigma``."""
    suite = make_suite(suite)
    sigma = as_word(sigma)
    if not sigma:
        raise SigmaBlocks("sigma must be nonempty")
    if sigma in suite:
        raise SigmaInSuite(f"sigma {format_word(sigma)!r} belongs to the suite")
    if any(x not in m.input_index for x in sigma):
        raise SigmaBlocks("sigma uses symbols outside the input alphabet")
    if len(m.outputs) < 2:
        raise OutputAlphabetTooSmall(f"machine {m.name!r} has a single output symbol")
    spec_run = _trace(m, m.initial, sigma)
    if not isinstance(spec_run, Completed):
        raise SigmaBlocks(f"sigma {format_word(sigma)!r} blocks in {m.name!r}")
    runnable = [w for w in suite if isinstance(_trace(m, m.initial, w), Completed)]
    for w in runnable:
        if len(w) > len(sigma) and w[:len(sigma)] == sigma:
            raise SigmaHasSuiteExtension(
                f"suite word {format_word(w)!r} extends sigma {format_word(sigma)!r}")

    counter = 0

    def fresh():
        nonlocal counter
        counter += 1
        return f"t{counter - 1}"

    states = [fresh()]
    transitions = {}
    for i, x in enumerate(sigma):
        dst = fresh()
        y = spec_run.output[i]
        if i == len(sigma) - 1:
            y = _other_output(m, y)
        transitions[(states[-1], x)] = (dst, y)
        states.append(dst)
    sigma_path = tuple(states)
    root = states[0]

    def snapshot():
        return Fsm(name or f"{m.name}_pc", states, root, m.inputs, m.outputs, transitions)

    tree = snapshot()
    measures = [_measure(tree, suite)]
    grafts = []
    grafted = []
    runnable.sort(key=lambda w: word_key(w, m.input_index))
    while True:
        missing = next((w for w in runnable
                        if isinstance(_trace(tree, root, w), Blocked)), None)
        if missing is None:
            break
        k = _trace(tree, root, missing).defined_prefix_length
        at = _trace(tree, root, missing[:k]).target
        x = missing[k]
        spec_at = _trace(m, m.initial, missing[:k]).target
        _, c = m.transitions[(spec_at, x)]
        new = fresh()
        states.append(new)
        transitions[(at, x)] = (new, c)
        grafts.append((at, x))
        grafted.append(missing)
        tree = snapshot()
        measures.append(_measure(tree, suite))
        if measures[-1] <= measures[-2]:
            raise AssertionError("graft did not increase the suite blocking measure")
    return TreeMachine(tree, sigma, sigma_path, tuple(grafts), tuple(grafted), tuple(measures))

