# %% [markdown]
# # Collapsing alike states
#
# `q1` and `q2` bounce between each other on input `0` with output `0` and
# block on `1`. No experiment can tell them apart, not even by blocking.

# %%
from pfsm import (
    alikeness_partition,
    bisimilar,
    format_fsm,
    greatest_simulation,
    is_p_reduced,
    is_reduced,
    isomorphic,
    p_reduce,
)
from pfsm.catalog import spec_two_state, spec_with_twin_states

twins = spec_with_twin_states()
print(format_fsm(twins))
print("classes:", alikeness_partition(twins))
print("reduced:", is_reduced(twins).line(), "| p-reduced:", is_p_reduced(twins).line())

# %% [markdown]
# The quotient names each class after its first member.

# %%
quotient = p_reduce(twins)
print(format_fsm(quotient))
print("isomorphism onto the two-state spec:", isomorphic(quotient, spec_two_state()))

# %% [markdown]
# Simulations in both directions exist between a machine and its quotient.

# %%
print(sorted(greatest_simulation(twins, quotient)))
print(sorted(greatest_simulation(quotient, twins)))
print("bisimilar:", bisimilar(twins, quotient))

# %% [markdown]
# On a batch of random machines the quotient is always p-reduced and
# bi-similar to the original, and quotienting twice changes nothing.

# %%
import random

import numpy as np

from pfsm import Fsm

rng = random.Random(0)
sizes = []
for _ in range(500):
    n = rng.randint(1, 6)
    states = [f"s{i}" for i in range(n)]
    trans = {(s, x): (rng.choice(states), rng.choice("01"))
             for s in states for x in "01" if rng.random() < 0.7}
    m = Fsm("R", states, "s0", ("0", "1"), ("0", "1"), trans)
    q = p_reduce(m)
    assert is_p_reduced(q) and bisimilar(m, q) and isomorphic(p_reduce(q), q) is not None
    sizes.append((n, len(q.states)))

sizes = np.array(sizes)
for n in range(1, 7):
    row = sizes[sizes[:, 0] == n, 1]
    print(f"{n} states -> quotient mean {row.mean():.2f}, min {row.min()}, max {row.max()}")
