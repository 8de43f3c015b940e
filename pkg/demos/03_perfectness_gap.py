# %% [markdown]
# # Blocking matters: complete is not perfect
#
# A three-state chain runs only `0`, `00` and the empty word. The suite
# `{000, 00}` pins down every equivalent three-state implementation, but it
# cannot notice an implementation that runs more than the chain does.

# %%
from pfsm import (
    SearchConfig,
    alike_total,
    alike_under_suite,
    check_m_complete,
    check_m_perfect,
    format_fsm,
    perfectness_counterexample,
)
from pfsm.catalog import chain, chain_with_loop

m3 = chain(3)
suite = ["000", "00"]
print("3-complete:", check_m_complete(m3, suite, SearchConfig(3)).status.value)
r = check_m_perfect(m3, suite, SearchConfig(3))
print("3-perfect: ", r.status.value, r.witness.line())
print(format_fsm(r.counterexample))

# %%
looped = chain_with_loop(3)
print("looped chain on the suite:", alike_under_suite(m3, "s0", looped, "q0", suite).line())
print("looped chain everywhere:  ", alike_total(m3, "s0", looped, "q0").line())

# %% [markdown]
# ## Tree counterexamples
#
# Given a word `sigma` that runs in the specification and is not in the
# suite, a tree machine follows `sigma` with a wrong last output and then
# grows branches only where a suite word needs them.

# %%
tree = perfectness_counterexample(m3, ["0"], "00")
print(format_fsm(tree.fsm))
print("measures:", tree.measures)

from pfsm.catalog import spec_two_state

spec = spec_two_state()
tree = perfectness_counterexample(spec, ["100"], "0000")
print(format_fsm(tree.fsm))
print("grafts:", tree.grafts, "measures:", tree.measures)
print(alike_under_suite(spec, "s0", tree.fsm, "t0", ["100"]).line(),
      "|", alike_total(spec, "s0", tree.fsm, "t0").line())

# %% [markdown]
# ## With a state bound the implication breaks
#
# Unbounded perfectness implies completeness, but the tree witness can
# need more states than the bound allows. Below, the one-state machine with
# loops `0/1` and `1/0` runs every word the specification runs and agrees
# with it on `1`, so the suite misses an output fault on `10`. For
# perfectness the same machine is caught, since it runs `11` and the
# specification blocks there. Every other one-state machine is caught as
# well, so the suite is 1-perfect without being 1-complete.

# %%
from pfsm import Fsm

spec = Fsm("S", ["q0", "q1"], "q0", ("0", "1"), ("0", "1"), {
    ("q0", "1"): ("q1", "0"),
    ("q1", "0"): ("q0", "0"),
})
t = ["1", "11"]
for m in (1, 2):
    p = check_m_perfect(spec, t, SearchConfig(m))
    c = check_m_complete(spec, t, SearchConfig(m))
    print(f"m={m}: perfect {p.status.value}, complete {c.status.value} {c.witness.line()}")
print(format_fsm(check_m_complete(spec, t, SearchConfig(1)).counterexample))
