"""Brute-force m-completeness and m-perfectness verdicts.

The fault domain "every machine with at most m states" is searched in
canonical form: states are numbered in breadth-first discovery order from
the initial state, so each reachable machine appears exactly once up to
isomorphism. Both verdicts are invariant under isomorphism and under
removal of unreachable states, so nothing is lost.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Optional

from .constructions import _layer_sigma
from .fsm import Fsm, make_suite
from .reduction import reachable
from .relations import Verdict, alike_total, alike_under_suite, equiv_total, equiv_under_suite
from .simulation import bisimilar


class SearchTruncated(Exception):
    """The candidate cap was reached before the enumeration finished."""

    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"candidate cap of {cap} reached")


class Status(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SearchConfig:
    """Bounds of a brute-force search.

    ``inputs``/``outputs`` default to the specification's alphabets.
    ``require_containment`` defaults to on for completeness and off for
    perfectness.
    """

    max_states: int
    inputs: Optional[tuple] = None
    outputs: Optional[tuple] = None
    candidate_cap: Optional[int] = None
    require_containment: Optional[bool] = None
    workers: int = 1
    batch_size: int = 4096

    def __post_init__(self):
        if self.max_states < 1:
            raise ValueError("max_states must be at least 1")
        if self.inputs is not None and not self.inputs:
            raise ValueError("input alphabet must be nonempty")
        if self.outputs is not None and not self.outputs:
            raise ValueError("output alphabet must be nonempty")
        if self.candidate_cap is not None and self.candidate_cap < 0:
            raise ValueError("candidate_cap must be nonnegative")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    def resolved(self, spec: Fsm) -> "SearchConfig":
        return replace(
            self,
            inputs=tuple(self.inputs) if self.inputs is not None else spec.inputs,
            outputs=tuple(self.outputs) if self.outputs is not None else spec.outputs,
        )


@dataclass(frozen=True)
class SearchResult:
    status: Status
    counterexample: Optional[Fsm] = None
    witness: Optional[Verdict] = None
    examined: int = 0

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS


def _canonical_machines(max_states, inputs, outputs):
    """Yield ``(n_states, transitions)`` over integer states, canonical order."""
    k = len(inputs)
    trans = {}

    def rec(slot, discovered):
        state, j = divmod(slot, k)
        if state == discovered:
            yield discovered, dict(trans)
            return
        x = inputs[j]
        yield from rec(slot + 1, discovered)
        for t in range(discovered + (discovered < max_states)):
            grown = discovered + (t == discovered)
            for y in outputs:
                trans[(state, x)] = (t, y)
                yield from rec(slot + 1, grown)
            del trans[(state, x)]

    yield from rec(0, 1)


def enumerate_candidates(cfg: SearchConfig, name: str = "N") -> Iterator[Fsm]:
    """Every reachable machine with at most ``cfg.max_states`` states, once each.

    ``cfg.inputs`` and ``cfg.outputs`` must be set. Raises
    :class:`SearchTruncated` instead of yielding more than
    ``cfg.candidate_cap`` machines.
    """
    if cfg.inputs is None or cfg.outputs is None:
        raise ValueError("enumerate_candidates needs explicit alphabets")
    inputs, outputs = tuple(cfg.inputs), tuple(cfg.outputs)
    names = [f"q{i}" for i in range(cfg.max_states)]
    for count, (n, trans) in enumerate(_canonical_machines(cfg.max_states, inputs, outputs)):
        if cfg.candidate_cap is not None and count >= cfg.candidate_cap:
            raise SearchTruncated(cfg.candidate_cap)
        yield Fsm(name, names[:n], names[0], inputs, outputs,
                  {(names[s], x): (names[t], y) for (s, x), (t, y) in trans.items()})


def contains_runs(spec: Fsm, impl: Fsm) -> bool:
    """Whether every word that runs in ``spec`` also runs in ``impl``."""
    start = (spec.initial, impl.initial)
    seen = {start}
    queue = deque([start])
    while queue:
        s, q = queue.popleft()
        for x in spec.inputs:
            a = spec.transitions.get((s, x))
            if a is None:
                continue
            b = impl.transitions.get((q, x))
            if b is None:
                return False
            nxt = (a[0], b[0])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return True


def _complete_witness(spec, suite, cand, containment):
    if not equiv_under_suite(spec, spec.initial, cand, cand.initial, suite).holds:
        return None
    if containment and not contains_runs(spec, cand):
        return None
    v = equiv_total(spec, spec.initial, cand, cand.initial)
    return None if v.holds else v


def _perfect_witness(spec, suite, cand, containment):
    if not alike_under_suite(spec, spec.initial, cand, cand.initial, suite).holds:
        return None
    if containment and not contains_runs(spec, cand):
        return None
    v = alike_total(spec, spec.initial, cand, cand.initial)
    return None if v.holds else v


_CHECKS = {"complete": _complete_witness, "perfect": _perfect_witness}


def _scan_batch(mode, spec, suite, containment, batch):
    check = _CHECKS[mode]
    for i, cand in enumerate(batch):
        v = check(spec, suite, cand, containment)
        if v is not None:
            return i, v
    return None


def _batches(candidates, size):
    it = iter(candidates)
    while True:
        batch = list(itertools.islice(it, size))
        if not batch:
            return
        yield batch


def _search(mode, spec, suite, cfg, candidates, containment_default):
    suite = make_suite(suite)
    cfg = cfg.resolved(spec)
    containment = cfg.require_containment
    if containment is None:
        containment = containment_default
    if candidates is None:
        candidates = enumerate_candidates(cfg)
    elif cfg.candidate_cap is not None:
        candidates = _capped(candidates, cfg.candidate_cap)
    examined = 0
    try:
        if cfg.workers == 1:
            check = _CHECKS[mode]
            for cand in candidates:
                examined += 1
                v = check(spec, suite, cand, containment)
                if v is not None:
                    return SearchResult(Status.FAILS, cand, v, examined)
        else:
            found = _parallel_scan(mode, spec, suite, containment, candidates, cfg)
            examined = found[0]
            if found[1] is not None:
                return SearchResult(Status.FAILS, found[1], found[2], examined)
    except SearchTruncated:
        return SearchResult(Status.INCONCLUSIVE, examined=cfg.candidate_cap)
    return SearchResult(Status.HOLDS, examined=examined)


def _capped(candidates, cap):
    for i, cand in enumerate(candidates):
        if i >= cap:
            raise SearchTruncated(cap)
        yield cand


def _parallel_scan(mode, spec, suite, containment, candidates, cfg):
    # Batches are consumed in enumeration order, so the reported
    # counterexample is the least one regardless of scheduling.
    examined = 0
    window = 2 * cfg.workers
    with ProcessPoolExecutor(cfg.workers) as pool:
        pending = deque()
        source = _batches(candidates, cfg.batch_size)
        exhausted = False
        try:
            while True:
                while not exhausted and len(pending) < window:
                    try:
                        batch = next(source)
                    except StopIteration:
                        exhausted = True
                        break
                    fut = pool.submit(_scan_batch, mode, spec, suite, containment, batch)
                    pending.append((fut, batch))
                if not pending:
                    return examined, None, None
                fut, batch = pending.popleft()
                hit = fut.result()
                if hit is not None:
                    return examined + hit[0] + 1, batch[hit[0]], hit[1]
                examined += len(batch)
        finally:
            for fut, _ in pending:
                fut.cancel()


def check_m_complete(spec: Fsm, suite: Iterable, cfg: SearchConfig,
                     candidates: Iterable[Fsm] = None) -> SearchResult:
    """Search for a machine that the suite fails to tell apart from ``spec``.

    A counterexample runs every word ``spec`` runs (unless the config turns
    that condition off), is not equivalent to ``spec``, yet is equivalent on
    the suite. ``candidates`` replaces the canonical enumeration.
    """
    return _search("complete", spec, suite, cfg, candidates, True)


def check_m_perfect(spec: Fsm, suite: Iterable, cfg: SearchConfig,
                    candidates: Iterable[Fsm] = None) -> SearchResult:
    """Search for a machine unlike ``spec`` that is alike to it on the suite."""
    return _search("perfect", spec, suite, cfg, candidates, False)


@dataclass
class CrossValidationReport:
    examined: int = 0
    suite_alike: int = 0
    disagreements: list = field(default_factory=list)
    truncated: bool = False
    perfect_by_definition: Optional[bool] = None
    perfect_by_bisimulation: Optional[bool] = None

    @property
    def consistent(self) -> bool:
        return not self.disagreements and (
            self.perfect_by_definition == self.perfect_by_bisimulation)


def cross_validate_perfectness(spec: Fsm, suite: Iterable, cfg: SearchConfig,
                               candidates: Iterable[Fsm] = None) -> CrossValidationReport:
    """Compare the alikeness and bi-simulation views of m-perfectness.

    For each candidate alike to ``spec`` on the suite, records whether full
    alikeness and bi-similarity disagree. Also compares the two resulting
    verdicts.
    """
    suite = make_suite(suite)
    cfg = cfg.resolved(spec)
    if candidates is None:
        candidates = enumerate_candidates(cfg)
    elif cfg.candidate_cap is not None:
        candidates = _capped(candidates, cfg.candidate_cap)
    report = CrossValidationReport()
    by_def = by_bisim = True
    try:
        for cand in candidates:
            report.examined += 1
            if not alike_under_suite(spec, spec.initial, cand, cand.initial, suite).holds:
                continue
            report.suite_alike += 1
            alike = alike_total(spec, spec.initial, cand, cand.initial).holds
            bisim = bisimilar(spec, cand)
            by_def &= alike
            by_bisim &= bisim
            if alike != bisim:
                report.disagreements.append((cand, alike, bisim))
    except SearchTruncated:
        report.truncated = True
        return report
    report.perfect_by_definition = by_def
    report.perfect_by_bisimulation = by_bisim
    return report


def completeness_bound(spec: Fsm, suite: Iterable) -> int:
    """State count at which ``suite`` is certainly not complete for ``spec``.

    Equals the state count of :func:`completeness_counterexample` for the
    same inputs.
    """
    suite = make_suite(suite)
    sigma, _ = _layer_sigma(spec, suite, None)
    return (len(sigma) + 1) * len(reachable(spec))
