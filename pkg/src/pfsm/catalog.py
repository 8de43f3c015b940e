"""Small reference machines used throughout the tests and demos."""

from .fsm import Fsm

BINARY = ("0", "1")


def spec_two_state() -> Fsm:
    """Two-state partial specification; ``s1`` has no transition on ``1``."""
    return Fsm("M", ["s0", "s1"], "s0", BINARY, BINARY, {
        ("s0", "0"): ("s0", "1"),
        ("s0", "1"): ("s1", "1"),
        ("s1", "0"): ("s1", "0"),
    })


def spec_with_twin_states() -> Fsm:
    """Three states, two of them alike; its quotient is :func:`spec_two_state`."""
    return Fsm("N1", ["q0", "q1", "q2"], "q0", BINARY, BINARY, {
        ("q0", "0"): ("q0", "1"),
        ("q0", "1"): ("q1", "1"),
        ("q1", "0"): ("q2", "0"),
        ("q2", "0"): ("q1", "0"),
    })


def faulty_four_state() -> Fsm:
    """Four-state implementation that passes ``{0000, 100}`` but differs on ``1000``."""
    return Fsm("N", ["q0", "q1", "q2", "q3"], "q0", BINARY, BINARY, {
        ("q0", "0"): ("q0", "1"),
        ("q0", "1"): ("q1", "1"),
        ("q1", "0"): ("q2", "0"),
        ("q2", "0"): ("q3", "0"),
        ("q3", "0"): ("q3", "1"),
    })


def chain(n: int, name: str = None) -> Fsm:
    """``n`` states linked by ``0/0``; the last state has no transitions."""
    states = [f"s{i}" for i in range(n)]
    trans = {(states[i], "0"): (states[i + 1], "0") for i in range(n - 1)}
    return Fsm(name or f"M{n}", states, states[0], BINARY, BINARY, trans)


def chain_with_loop(n: int, name: str = None) -> Fsm:
    """:func:`chain` plus a ``1/1`` self-loop on the last state."""
    states = [f"q{i}" for i in range(n)]
    trans = {(states[i], "0"): (states[i + 1], "0") for i in range(n - 1)}
    trans[(states[-1], "1")] = (states[-1], "1")
    return Fsm(name or f"N{n}", states, states[0], BINARY, BINARY, trans)


def loop_zero_one() -> Fsm:
    """One state with a single ``0/1`` self-loop."""
    return Fsm("L", ["p0"], "p0", BINARY, BINARY, {("p0", "0"): ("p0", "1")})
