import itertools
import random

import pytest

from pfsm import (
    BLOCKING_ASYMMETRY,
    Fsm,
    NoUsableSigma,
    SearchConfig,
    SigmaBlocks,
    SigmaHasSuiteExtension,
    SigmaInSuite,
    Status,
    SearchTruncated,
    alike_total,
    alike_under_suite,
    check_m_complete,
    check_m_perfect,
    completeness_bound,
    completeness_counterexample,
    contains_runs,
    cross_validate_perfectness,
    enumerate_candidates,
    isomorphic,
    perfectness_counterexample,
    reachable,
)
from pfsm.catalog import (
    chain,
    chain_with_loop,
    faulty_four_state,
    spec_two_state,
    spec_with_twin_states,
)

from oracles import BIN, brute_force_canonical_count, random_reachable_fsm, random_suite

FIG2_SUITE = ["0000", "100"]
CHAIN_SUITE = ["000", "00"]


# --- enumeration --------------------------------------------------------------

def test_enumeration_tiny_counts():
    one = list(enumerate_candidates(SearchConfig(1, inputs=("0",), outputs=("0",))))
    assert [dict(m.transitions) for m in one] == [{}, {("q0", "0"): ("q0", "0")}]
    assert sum(1 for _ in enumerate_candidates(SearchConfig(1, inputs=BIN, outputs=BIN))) == 9


@pytest.mark.parametrize("m", [1, 2, 3])
def test_enumeration_matches_brute_force_isomorphism_classes(m):
    cfg = SearchConfig(m, inputs=BIN, outputs=BIN)
    assert sum(1 for _ in enumerate_candidates(cfg)) == brute_force_canonical_count(m, BIN, BIN)


def test_enumerated_machines_are_reachable_and_pairwise_distinct():
    cands = list(enumerate_candidates(SearchConfig(2, inputs=BIN, outputs=BIN)))
    assert len(cands) == 409
    for c in cands:
        assert reachable(c) == set(c.states)
    by_size = {}
    for c in cands:
        by_size.setdefault(len(c.states), []).append(c)
    for group in by_size.values():
        for a, b in itertools.combinations(group, 2):
            assert isomorphic(a, b) is None


def test_invalid_configs():
    with pytest.raises(ValueError):
        SearchConfig(0)
    with pytest.raises(ValueError):
        SearchConfig(1, inputs=())
    with pytest.raises(ValueError):
        SearchConfig(1, workers=0)
    with pytest.raises(ValueError):
        list(enumerate_candidates(SearchConfig(1)))


def test_cap_raises_truncation():
    cfg = SearchConfig(2, inputs=BIN, outputs=BIN, candidate_cap=10)
    with pytest.raises(SearchTruncated):
        list(enumerate_candidates(cfg))


# --- completeness ---------------------------------------------------------

def test_worked_example_is_two_complete():
    r = check_m_complete(spec_two_state(), FIG2_SUITE, SearchConfig(2))
    assert r.status is Status.HOLDS and r.examined == 409


def test_worked_example_fails_with_four_state_candidate():
    pool = [spec_two_state(), spec_with_twin_states(), faulty_four_state()]
    r = check_m_complete(spec_two_state(), FIG2_SUITE, SearchConfig(4), candidates=pool)
    assert r.status is Status.FAILS
    assert isomorphic(r.counterexample, faulty_four_state()) is not None
    assert r.witness.witness == tuple("1000")


def test_truncated_search_is_inconclusive():
    r = check_m_complete(spec_two_state(), FIG2_SUITE, SearchConfig(2, candidate_cap=50))
    assert r.status is Status.INCONCLUSIVE and not r.holds
    pool = [spec_two_state()] * 5
    r = check_m_complete(spec_two_state(), FIG2_SUITE, SearchConfig(4, candidate_cap=3),
                         candidates=pool)
    assert r.status is Status.INCONCLUSIVE


def test_suite_of_blocking_words_detects_nothing():
    m = spec_two_state()
    r = check_m_complete(m, ["11"], SearchConfig(1))
    assert r.status is Status.FAILS
    c = r.counterexample
    assert len(c.states) == 1 and contains_runs(m, c)


def test_containment_switch():
    # Without the containment condition a candidate that runs nothing
    # beyond the empty word slips through more easily.
    m = spec_two_state()
    strict = check_m_complete(m, FIG2_SUITE, SearchConfig(2))
    loose = check_m_complete(m, FIG2_SUITE, SearchConfig(2, require_containment=False))
    assert strict.holds and loose.status is Status.FAILS
    assert not contains_runs(m, loose.counterexample)


def test_parallel_search_reports_the_same_least_counterexample():
    cfg = SearchConfig(3, workers=1)
    par = SearchConfig(3, workers=3, batch_size=500)
    m = spec_two_state()
    a = check_m_complete(m, FIG2_SUITE, cfg)
    b = check_m_complete(m, FIG2_SUITE, par)
    assert a.status is b.status is Status.FAILS
    assert a.counterexample == b.counterexample and a.examined == b.examined
    c = check_m_complete(m, FIG2_SUITE, SearchConfig(2, workers=2, batch_size=64))
    assert c.holds and c.examined == 409


# --- perfectness ----------------------------------------------------------

def test_chain_separates_completeness_from_perfectness():
    m3 = chain(3)
    assert check_m_complete(m3, CHAIN_SUITE, SearchConfig(3)).holds
    r = check_m_perfect(m3, CHAIN_SUITE, SearchConfig(3))
    assert r.status is Status.FAILS
    assert r.witness.kind == BLOCKING_ASYMMETRY
    looped = check_m_perfect(m3, CHAIN_SUITE, SearchConfig(3), candidates=[chain_with_loop(3)])
    assert looped.status is Status.FAILS and looped.witness.witness == tuple("001")


@pytest.mark.slow
def test_worked_example_is_not_four_perfect():
    m = spec_two_state()
    r = check_m_perfect(m, FIG2_SUITE, SearchConfig(4))
    assert r.status is Status.FAILS
    n = r.counterexample
    assert alike_under_suite(m, "s0", n, n.initial, FIG2_SUITE).holds
    assert not alike_total(m, "s0", n, n.initial).holds


def test_empty_spec_with_empty_word_suite_is_not_one_perfect():
    # The one-state loop runs 0 while the spec runs nothing, and the suite
    # {eps} cannot see it.
    z = Fsm("Z", ["z"], "z", ("0",), ("0",), {})
    r = check_m_perfect(z, [""], SearchConfig(1))
    assert r.status is Status.FAILS and r.examined == 2
    assert r.witness.witness == ("0",) and r.witness.side == "second"


# --- cross validation -----------------------------------------------------

@pytest.mark.parametrize("spec,suite,m", [
    (spec_two_state(), FIG2_SUITE, 2),
    (chain(3), CHAIN_SUITE, 2),
    (Fsm("Z", ["z"], "z", ("0",), ("0",), {}), [""], 1),
])
def test_cross_validation_examples(spec, suite, m):
    rep = cross_validate_perfectness(spec, suite, SearchConfig(m))
    assert rep.consistent and not rep.disagreements and not rep.truncated
    assert rep.perfect_by_definition == check_m_perfect(spec, suite, SearchConfig(m)).holds


def test_cross_validation_truncates():
    rep = cross_validate_perfectness(spec_two_state(), FIG2_SUITE,
                                     SearchConfig(2, candidate_cap=5))
    assert rep.truncated and rep.perfect_by_definition is None


# --- bound ------------------------------------------------------------------

def test_bound_examples():
    assert completeness_bound(spec_two_state(), FIG2_SUITE) == 8
    with pytest.raises(NoUsableSigma):
        completeness_bound(spec_two_state(), [""])
    assert completeness_bound(chain(3), ["00"]) == 9


def test_constructed_machine_fails_completeness_at_the_bound():
    rng = random.Random(61)
    done = 0
    while done < 40:
        m = random_reachable_fsm(rng, rng.randint(1, 3))
        t = random_suite(rng)
        try:
            n = completeness_counterexample(m, t, prune=True)
            bound = completeness_bound(m, t)
        except ValueError:
            continue
        done += 1
        assert len(n.states) <= bound
        r = check_m_complete(m, t, SearchConfig(bound), candidates=[n])
        assert r.status is Status.FAILS


def test_completeness_failure_yields_perfectness_counterexample():
    rng = random.Random(67)
    built = 0
    for _ in range(300):
        m = random_reachable_fsm(rng, rng.randint(1, 2))
        t = random_suite(rng, max_len=3)
        r = check_m_complete(m, t, SearchConfig(2))
        if r.status is not Status.FAILS:
            continue
        sigma = r.witness.witness
        try:
            tree = perfectness_counterexample(m, t, sigma)
        except (SigmaInSuite, SigmaBlocks, SigmaHasSuiteExtension):
            continue
        built += 1
        n = tree.fsm
        assert alike_under_suite(m, m.initial, n, n.initial, t).holds
        assert not alike_total(m, m.initial, n, n.initial).holds
    assert built > 10
