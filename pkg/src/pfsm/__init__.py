"""Partial finite state machines, test-suite completeness and perfectness."""

from .constructions import (
    ConstructionError,
    NoMarkedTransition,
    NotReduced,
    NoUsableSigma,
    OutputAlphabetTooSmall,
    SigmaBlocks,
    SigmaHasSuiteExtension,
    SigmaInSuite,
    TreeMachine,
    completeness_counterexample,
    is_embedded,
    is_embedded_in_suite,
    is_extensible,
    perfectness_counterexample,
    shortest_non_embedded,
    shortest_non_extensible,
)
from .fsm import (
    EPSILON,
    Blocked,
    Completed,
    Fsm,
    FsmError,
    InvalidInputError,
    accepts,
    as_word,
    blocking_measure,
    format_word,
    make_suite,
    run,
    suite_measure,
)
from .reduction import is_p_reduced, is_reduced, p_reduce, prune, reachable
from .relations import (
    BLOCKING_ASYMMETRY,
    OUTPUT_MISMATCH,
    Verdict,
    alike_total,
    alike_under_suite,
    alikeness_partition,
    equiv_total,
    equiv_under_suite,
)
from .simulation import (
    AlphabetMismatchError,
    UnreachableStatesError,
    bisimilar,
    greatest_simulation,
    is_simulation,
    isomorphic,
)
from .textio import (
    FormatError,
    format_fsm,
    format_suite,
    parse_fsm,
    parse_suite,
    parse_word,
    read_fsm,
    read_suite,
    write_fsm,
)
from .verdicts import (
    CrossValidationReport,
    SearchConfig,
    SearchResult,
    SearchTruncated,
    Status,
    check_m_complete,
    check_m_perfect,
    completeness_bound,
    contains_runs,
    cross_validate_perfectness,
    enumerate_candidates,
)

__all__ = [
    "accepts",
    "alike_total",
    "alike_under_suite",
    "alikeness_partition",
    "AlphabetMismatchError",
    "as_word",
    "bisimilar",
    "Blocked",
    "BLOCKING_ASYMMETRY",
    "blocking_measure",
    "check_m_complete",
    "check_m_perfect",
    "Completed",
    "completeness_bound",
    "completeness_counterexample",
    "ConstructionError",
    "contains_runs",
    "cross_validate_perfectness",
    "CrossValidationReport",
    "enumerate_candidates",
    "EPSILON",
    "equiv_total",
    "equiv_under_suite",
    "format_fsm",
    "format_suite",
    "format_word",
    "FormatError",
    "Fsm",
    "FsmError",
    "greatest_simulation",
    "InvalidInputError",
    "is_embedded",
    "is_embedded_in_suite",
    "is_extensible",
    "is_p_reduced",
    "is_reduced",
    "is_simulation",
    "isomorphic",
    "make_suite",
    "NoMarkedTransition",
    "NotReduced",
    "NoUsableSigma",
    "OUTPUT_MISMATCH",
    "OutputAlphabetTooSmall",
    "p_reduce",
    "parse_fsm",
    "parse_suite",
    "parse_word",
    "perfectness_counterexample",
    "prune",
    "reachable",
    "read_fsm",
    "read_suite",
    "run",
    "SearchConfig",
    "SearchResult",
    "SearchTruncated",
    "shortest_non_embedded",
    "shortest_non_extensible",
    "SigmaBlocks",
    "SigmaHasSuiteExtension",
    "SigmaInSuite",
    "Status",
    "suite_measure",
    "TreeMachine",
    "UnreachableStatesError",
    "Verdict",
    "write_fsm",
]

__version__ = "0.1.0"
