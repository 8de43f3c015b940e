"""Line-oriented text formats for machines, suites and relations.

Machine files::

    # comment
    fsm M
    inputs 0 1
    outputs 0 1
    states s0 s1          (optional; fixes declaration order)
    initial s0
    trans s0 0/1 s0
    trans s0 1/1 s1

Without a ``states`` line, states are ordered by first appearance.
Suite files hold one word per line; ``eps`` is the empty word.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

from .fsm import Fsm, FsmError, Word, format_word, sorted_suite


class FormatError(ValueError):
    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_fsm(text: str, source=None) -> Fsm:
    name = None
    inputs = outputs = None
    declared_states = None
    initial = None
    order: list = []
    seen = set()
    transitions = {}

    def note(s):
        if s not in seen:
            seen.add(s)
            order.append(s)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        key, *rest = line.split()
        if key == "fsm":
            if len(rest) != 1 or name is not None:
                raise FormatError("expected a single 'fsm <name>' header", lineno, source)
            name = rest[0]
        elif key == "inputs":
            if not rest or inputs is not None:
                raise FormatError("expected one nonempty 'inputs' line", lineno, source)
            inputs = tuple(rest)
        elif key == "outputs":
            if not rest or outputs is not None:
                raise FormatError("expected one nonempty 'outputs' line", lineno, source)
            outputs = tuple(rest)
        elif key == "states":
            if not rest or declared_states is not None:
                raise FormatError("expected one nonempty 'states' line", lineno, source)
            declared_states = tuple(rest)
            for s in rest:
                note(s)
        elif key == "initial":
            if len(rest) != 1 or initial is not None:
                raise FormatError("expected a single 'initial <state>' line", lineno, source)
            initial = rest[0]
            note(initial)
        elif key == "trans":
            if len(rest) != 3 or rest[1].count("/") != 1:
                raise FormatError("expected 'trans <src> <in>/<out> <dst>'", lineno, source)
            src, label, dst = rest
            x, y = label.split("/")
            if (src, x) in transitions:
                raise FormatError(f"duplicate transition for ({src}, {x})", lineno, source)
            note(src)
            note(dst)
            transitions[(src, x)] = (dst, y)
        else:
            raise FormatError(f"unknown directive {key!r}", lineno, source)

    for what, value in (("fsm", name), ("inputs", inputs), ("outputs", outputs),
                        ("initial", initial)):
        if value is None:
            raise FormatError(f"missing '{what}' line", source=source)
    if declared_states is not None:
        extra = [s for s in order if s not in set(declared_states)]
        if extra:
            raise FormatError(f"states {extra} used but not declared", source=source)
        states = declared_states
    else:
        states = tuple(order)
    try:
        return Fsm(name, states, initial, inputs, outputs, transitions)
    except FsmError as exc:
        raise FormatError(str(exc), source=source) from exc


def format_fsm(m: Fsm, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"fsm {m.name}")
    lines.append("inputs " + " ".join(m.inputs))
    lines.append("outputs " + " ".join(m.outputs))
    lines.append("states " + " ".join(str(s) for s in m.states))
    lines.append(f"initial {m.initial}")
    for s, x, y, t in m.edges():
        lines.append(f"trans {s} {x}/{y} {t}")
    return "\n".join(lines) + "\n"


def parse_word(text: str, alphabet: Iterable[str] = None) -> Word:
    """Parse one word.

    Whitespace-separated tokens are symbols. A single token is split into
    characters unless it is itself a multi-character symbol of ``alphabet``.
    """
    text = text.strip()
    if text in ("eps", ""):
        return ()
    tokens = text.split()
    if len(tokens) > 1:
        return tuple(tokens)
    if alphabet is not None and len(text) > 1 and text in set(alphabet):
        return (text,)
    return tuple(text)


def parse_suite(text: str, alphabet: Iterable[str] = None, source=None) -> frozenset:
    alphabet = None if alphabet is None else tuple(alphabet)
    words = set()
    for raw in text.splitlines():
        line = _strip(raw)
        if line:
            words.add(parse_word(line, alphabet))
    if not words:
        raise FormatError("a test suite must contain at least one word", source=source)
    return frozenset(words)


def format_suite(suite: Iterable[Word], order=None) -> str:
    order = order or {}
    return "".join(format_word(w) + "\n" for w in sorted_suite(suite, order))


def format_relation(pairs: Iterable) -> str:
    return "".join(f"pair {a} {b}\n" for a, b in pairs)


def read_fsm(path) -> Fsm:
    path = Path(path)
    return parse_fsm(path.read_text(), source=str(path))


def read_suite(path, alphabet=None) -> frozenset:
    path = Path(path)
    return parse_suite(path.read_text(), alphabet, source=str(path))


def write_fsm(m: Fsm, path, comments: Sequence[str] = ()):
    Path(path).write_text(format_fsm(m, comments))
