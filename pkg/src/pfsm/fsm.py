"""Partial deterministic Mealy machines and their run semantics.

A machine is defined only on part of ``states x inputs``. Feeding it a word
either completes (reaching a target state and producing one output symbol
per input symbol) or blocks at the first undefined ``(state, input)`` pair.

Words are tuples of symbols. Anywhere a word is expected a plain string may
be given instead; it is split into single characters, so ``"100"`` means
``("1", "0", "0")`` and ``""`` is the empty word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Hashable, Iterable, Mapping, Sequence, Union

State = Hashable
Symbol = str
Word = tuple
WordLike = Union[str, Sequence[str]]

EPSILON: Word = ()


class FsmError(ValueError):
    """A machine violates the structural invariants of a partial FSM."""


class InvalidInputError(ValueError):
    """A state or input symbol does not belong to the machine."""


def as_word(w: WordLike) -> Word:
    if isinstance(w, tuple):
        return w
    return tuple(w)


def word_key(w: Word, order: Mapping[Symbol, int]):
    """Sort key: shorter words first, then lexicographic by symbol order."""
    return (len(w), tuple(order.get(x, len(order)) for x in w))


def format_word(w: Word) -> str:
    if not w:
        return "eps"
    if all(len(x) == 1 for x in w):
        return "".join(w)
    return " ".join(w)


@dataclass(frozen=True, eq=False)
class Fsm:
    """A partial deterministic Mealy machine.

    ``transitions`` maps ``(state, input)`` to ``(next_state, output)``.
    Its key set is the specification domain. ``states``, ``inputs`` and
    ``outputs`` are ordered; that order drives every tie-break in the
    package.
    """

    name: str
    states: tuple
    initial: State
    inputs: tuple
    outputs: tuple
    transitions: Mapping = field(default_factory=dict)

    def __post_init__(self):
        states = tuple(self.states)
        inputs = tuple(self.inputs)
        outputs = tuple(self.outputs)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "outputs", outputs)
        if len(set(states)) != len(states):
            raise FsmError("duplicate state identifiers")
        if len(set(inputs)) != len(inputs) or len(set(outputs)) != len(outputs):
            raise FsmError("duplicate alphabet symbols")
        if not inputs or not outputs:
            raise FsmError("input and output alphabets must be nonempty")
        if self.initial not in states:
            raise FsmError(f"initial state {self.initial!r} not in states")
        state_set, in_set, out_set = set(states), set(inputs), set(outputs)
        table = {}
        for (src, x), (dst, y) in dict(self.transitions).items():
            if src not in state_set or dst not in state_set:
                raise FsmError(f"transition {src!r} -{x}/{y}-> {dst!r} uses an unknown state")
            if x not in in_set:
                raise FsmError(f"input {x!r} not in the input alphabet")
            if y not in out_set:
                raise FsmError(f"output {y!r} not in the output alphabet")
            table[(src, x)] = (dst, y)
        object.__setattr__(self, "transitions", MappingProxyType(table))
        object.__setattr__(self, "_state_index", {s: i for i, s in enumerate(states)})
        object.__setattr__(self, "_input_index", {x: i for i, x in enumerate(inputs)})

    def __eq__(self, other):
        if not isinstance(other, Fsm):
            return NotImplemented
        return (
            self.name == other.name
            and self.states == other.states
            and self.initial == other.initial
            and self.inputs == other.inputs
            and self.outputs == other.outputs
            and dict(self.transitions) == dict(other.transitions)
        )

    def __hash__(self):
        return hash((self.name, self.states, self.initial, self.inputs, self.outputs,
                     frozenset(self.transitions.items())))

    def __repr__(self):
        return f"Fsm({self.name!r}, {len(self.states)} states, {len(self.transitions)} transitions)"

    def __reduce__(self):
        return (Fsm, (self.name, self.states, self.initial, self.inputs, self.outputs,
                      dict(self.transitions)))

    @property
    def state_index(self) -> Mapping[State, int]:
        return self._state_index

    @property
    def input_index(self) -> Mapping[Symbol, int]:
        return self._input_index

    def step(self, s: State, x: Symbol):
        """``(next_state, output)`` or ``None`` if ``(s, x)`` is undefined."""
        return self.transitions.get((s, x))

    def defined_inputs(self, s: State) -> tuple:
        return tuple(x for x in self.inputs if (s, x) in self.transitions)

    def edges(self):
        """All transitions as ``(src, input, output, dst)`` in declaration order."""
        for s in self.states:
            for x in self.inputs:
                t = self.transitions.get((s, x))
                if t is not None:
                    yield s, x, t[1], t[0]

    def sort_states(self, states: Iterable[State]) -> list:
        return sorted(states, key=self._state_index.__getitem__)

    def check_state(self, s: State):
        if s not in self._state_index:
            raise InvalidInputError(f"unknown state {s!r} in machine {self.name!r}")

    def check_word(self, w: Word):
        for x in w:
            if x not in self._input_index:
                raise InvalidInputError(f"symbol {x!r} not in the input alphabet of {self.name!r}")

    def renamed(self, name: str) -> "Fsm":
        return Fsm(name, self.states, self.initial, self.inputs, self.outputs, self.transitions)


@dataclass(frozen=True)
class Completed:
    target: State
    output: Word


@dataclass(frozen=True)
class Blocked:
    defined_prefix_length: int


RunResult = Union[Completed, Blocked]


def _trace(m: Fsm, s: State, w: Word) -> RunResult:
    # Symbols outside the alphabet behave as undefined inputs.
    out = []
    for i, x in enumerate(w):
        t = m.transitions.get((s, x))
        if t is None:
            return Blocked(i)
        s = t[0]
        out.append(t[1])
    return Completed(s, tuple(out))


def run(m: Fsm, s: State, w: WordLike) -> RunResult:
    """Feed ``w`` to ``m`` starting at ``s``.

    Raises :class:`InvalidInputError` for an unknown state or symbol; an
    undefined transition is not an error and yields :class:`Blocked`.
    """
    w = as_word(w)
    m.check_state(s)
    m.check_word(w)
    return _trace(m, s, w)


def accepts(m: Fsm, s: State, w: WordLike) -> bool:
    """Whether ``w`` runs to completion from ``s``."""
    return isinstance(run(m, s, w), Completed)


def blocking_measure(m: Fsm, w: WordLike) -> int:
    """Length of the longest prefix of ``w`` that runs from the initial state.

    Non-blocking words measure their full length.
    """
    w = as_word(w)
    r = run(m, m.initial, w)
    return len(w) if isinstance(r, Completed) else r.defined_prefix_length


def suite_measure(m: Fsm, suite: Iterable[WordLike]) -> int:
    return sum(blocking_measure(m, w) for w in make_suite(suite))


def make_suite(words: Iterable[WordLike]) -> frozenset:
    """Normalize an iterable of words into a nonempty frozenset of tuples."""
    if isinstance(words, (str, tuple)):
        raise TypeError("a test suite is a collection of words, not a single word")
    suite = frozenset(as_word(w) for w in words)
    if not suite:
        raise ValueError("a test suite must be nonempty")
    return suite


def sorted_suite(suite: Iterable[Word], order: Mapping[Symbol, int]) -> list:
    return sorted(suite, key=lambda w: word_key(w, order))
