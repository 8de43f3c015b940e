# %% [markdown]
# # A two-word suite that is 2-complete but not 4-complete
#
# The specification has two states. From `s0`, input `0` loops with output
# `1` and input `1` moves to `s1`. At `s1` only input `0` is defined.

# %%
from pfsm import (
    SearchConfig,
    check_m_complete,
    completeness_bound,
    completeness_counterexample,
    equiv_total,
    equiv_under_suite,
    format_fsm,
    isomorphic,
    run,
)
from pfsm.catalog import faulty_four_state, spec_two_state

spec = spec_two_state()
suite = ["0000", "100"]
print(format_fsm(spec))

# %% [markdown]
# Every machine with at most two states that runs everything the
# specification runs and agrees with it on the suite is in fact equivalent
# to it. The search walks all 409 canonical candidates.

# %%
result = check_m_complete(spec, suite, SearchConfig(2))
print(result.status.value, "after", result.examined, "candidates")

# %% [markdown]
# The bound construction layers copies of the specification, one layer per
# symbol of `sigma = 100` plus a top layer where one output is flipped.

# %%
print("size bound:", completeness_bound(spec, suite))
layered = completeness_counterexample(spec, suite)
print(len(layered.states), "states:", " ".join(layered.states))
pruned = completeness_counterexample(spec, suite, prune=True)
print(format_fsm(pruned))

# %% [markdown]
# Only four layered states are reachable, and they form the same machine as
# the hand-drawn four-state implementation.

# %%
print(isomorphic(pruned, faulty_four_state()))

for w in ("0000", "100", "1000"):
    a = "".join(run(spec, spec.initial, w).output)
    b = "".join(run(pruned, pruned.initial, w).output)
    print(f"{w}: spec {a}  impl {b}  {'same' if a == b else 'DIFFERENT'}")

print("on the suite:", equiv_under_suite(spec, "s0", pruned, pruned.initial, suite).line())
print("everywhere:  ", equiv_total(spec, "s0", pruned, pruned.initial).line())

# %% [markdown]
# A brute-force search already finds a smaller fault with three states.

# %%
r3 = check_m_complete(spec, suite, SearchConfig(3))
print(r3.status.value, r3.witness.line())
print(format_fsm(r3.counterexample))
