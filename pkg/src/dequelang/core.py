"""Deque automata: machine model, move semantics, and the run engine.

A deque automaton scans its input left to right while reading and writing
strings at both ends of an initially empty deque tape.  The stored tape
string is kept front-at-the-left throughout: writing at the front prepends
(the written string's leftmost character becomes the new leftmost deque
character), writing at the tail appends.  Acceptance requires a final
state, the whole input consumed, and an empty deque.

Machines are quasi-real-time: a declared delay ``p`` bounds runs of
consecutive non-consuming moves to ``p - 1``.  The engine enforces the
bound at run time, which also makes the search space finite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

EPSILON = ""

CLASSES = ("ff", "ft", "tf", "tt")

# Guard kinds for spontaneous moves of machines using the emptiness-test
# extension: "empty" fires only on an empty deque, "nonempty" on a
# non-empty one.
GUARD_NONE = ""
GUARD_EMPTY = "empty"
GUARD_NONEMPTY = "nonempty"


class ValidationError(Exception):
    """A machine violates one of its structural invariants."""


@dataclass(frozen=True)
class TapeSymbol:
    """A deque tape symbol, optionally tagged with its partition class.

    The class tag (ff/ft/tf/tt) names the write end and the read end of
    the symbol: the first letter is where it is written, the second where
    it is read.  Either all symbols of a machine carry a tag or none do.
    """

    name: str
    cls: Optional[str] = None


@dataclass(frozen=True)
class Transition:
    """One 7-tuple move: read/write strings at both deque ends.

    ``inp`` is the consumed input letter or ``""`` for a spontaneous move.
    Tape strings are tuples of symbol names; ``read_front`` is removed
    from the left end, ``read_tail`` from the right, then ``write_front``
    is prepended and ``write_tail`` appended.
    """

    src: str
    inp: str
    read_front: tuple[str, ...]
    read_tail: tuple[str, ...]
    dst: str
    write_front: tuple[str, ...]
    write_tail: tuple[str, ...]
    guard: str = GUARD_NONE

    def touches_deque(self) -> bool:
        return bool(self.read_front or self.read_tail
                    or self.write_front or self.write_tail)

    def op_count(self) -> int:
        return (len(self.read_front) + len(self.read_tail)
                + len(self.write_front) + len(self.write_tail))


@dataclass(frozen=True)
class DequeAutomaton:
    input_alphabet: frozenset[str]
    tape: tuple[TapeSymbol, ...]
    states: tuple[str, ...]
    initial: str
    finals: frozenset[str]
    transitions: tuple[Transition, ...]
    delay: int = 1
    allow_emptiness_test: bool = False

    def tape_names(self) -> frozenset[str]:
        return frozenset(s.name for s in self.tape)

    def symbol_class(self) -> dict[str, Optional[str]]:
        return {s.name: s.cls for s in self.tape}

    def is_partitioned(self) -> bool:
        return all(s.cls is not None for s in self.tape)

    def is_simple(self) -> bool:
        return all(t.op_count() <= 1 for t in self.transitions)

    def validate(self) -> "DequeAutomaton":
        names = [s.name for s in self.tape]
        if len(set(names)) != len(names):
            raise ValidationError("tape symbol names are not unique")
        tagged = [s for s in self.tape if s.cls is not None]
        if tagged and len(tagged) != len(self.tape):
            raise ValidationError("partition tags must be all-or-none")
        for s in tagged:
            if s.cls not in CLASSES:
                raise ValidationError(f"unknown partition class {s.cls!r}")
        if len(set(self.states)) != len(self.states):
            raise ValidationError("duplicate state names")
        state_set = set(self.states)
        if self.initial not in state_set:
            raise ValidationError("initial state not among states")
        if not self.finals <= state_set:
            raise ValidationError("final states not among states")
        if self.delay < 1:
            raise ValidationError("delay must be >= 1")
        tape_set = set(names)
        for t in self.transitions:
            if t.src not in state_set or t.dst not in state_set:
                raise ValidationError(f"transition references unknown state: {t}")
            if t.inp != EPSILON and t.inp not in self.input_alphabet:
                raise ValidationError(f"transition input {t.inp!r} not in alphabet")
            for part in (t.read_front, t.read_tail, t.write_front, t.write_tail):
                for sym in part:
                    if sym not in tape_set:
                        raise ValidationError(f"unknown tape symbol {sym!r} in {t}")
            if t.guard:
                if t.guard not in (GUARD_EMPTY, GUARD_NONEMPTY):
                    raise ValidationError(f"unknown guard {t.guard!r}")
                if not self.allow_emptiness_test:
                    raise ValidationError("guarded move on a machine without the emptiness-test feature")
                if t.inp != EPSILON or t.touches_deque():
                    raise ValidationError("test moves must be spontaneous and touch no deque symbol")
        return self

    def max_write(self) -> int:
        return max((len(t.write_front) + len(t.write_tail) for t in self.transitions),
                   default=0)

    def max_read(self) -> int:
        return max((len(t.read_front) + len(t.read_tail) for t in self.transitions),
                   default=0)


@dataclass(frozen=True)
class Configuration:
    state: str
    pos: int
    deque: tuple[str, ...]


@dataclass(frozen=True)
class RunTrace:
    word: tuple[str, ...]
    steps: tuple[tuple[Transition, Configuration], ...]
    accepted: bool


@dataclass(frozen=True)
class Limits:
    """Caller-set resource bounds for :func:`decide`."""

    max_expansions: Optional[int] = None
    max_deque: Optional[int] = None


ACCEPT = "accept"
REJECT = "reject"
RESOURCE_EXCEEDED = "resource-exceeded"


@dataclass(frozen=True)
class Decision:
    verdict: str
    trace: Optional[RunTrace] = None

    @property
    def accepted(self) -> bool:
        return self.verdict == ACCEPT


Word = Union[str, Sequence[str]]


def as_word(word: Word) -> tuple[str, ...]:
    """Normalize input: a plain string is a sequence of one-char letters."""
    return tuple(word)


def apply_move(cfg: Configuration, t: Transition, word: Word) -> Optional[Configuration]:
    """Fire ``t`` on ``cfg`` if applicable, else return ``None``.

    The deque must factor as ``read_front . middle . read_tail`` with the
    two read segments disjoint, and the input letter (if any) must match
    the next unread letter of ``word``.
    """
    w = as_word(word)
    if t.src != cfg.state:
        return None
    if t.guard == GUARD_EMPTY and cfg.deque:
        return None
    if t.guard == GUARD_NONEMPTY and not cfg.deque:
        return None
    if t.inp != EPSILON:
        if cfg.pos >= len(w) or w[cfg.pos] != t.inp:
            return None
        npos = cfg.pos + 1
    else:
        npos = cfg.pos
    lf, lt = len(t.read_front), len(t.read_tail)
    dq = cfg.deque
    if len(dq) < lf + lt:
        return None
    if dq[:lf] != t.read_front:
        return None
    if lt and dq[len(dq) - lt:] != t.read_tail:
        return None
    middle = dq[lf:len(dq) - lt] if lt else dq[lf:]
    return Configuration(t.dst, npos, t.write_front + middle + t.write_tail)


def _transitions_by_state(m: DequeAutomaton) -> dict[str, list[Transition]]:
    by_state: dict[str, list[Transition]] = {q: [] for q in m.states}
    for t in m.transitions:
        by_state[t.src].append(t)
    return by_state


def decide(m: DequeAutomaton, word: Word, limits: Optional[Limits] = None) -> Decision:
    """Exhaustively search the move relation from the initial configuration.

    Runs are pruned after ``delay - 1`` consecutive non-consuming moves;
    visited configurations are memoized per input position (keeping the
    smallest spontaneous-run counter seen, so no viable run is lost).
    Accept returns one witness trace; Reject is definitive.
    """
    w = as_word(word)
    by_state = _transitions_by_state(m)
    start = Configuration(m.initial, 0, ())
    n = len(w)

    def accepting(c: Configuration) -> bool:
        return c.state in m.finals and c.pos == n and not c.deque

    # best spontaneous-run counter seen per configuration
    best: dict[Configuration, int] = {start: 0}
    parent: dict[Configuration, tuple[Configuration, Transition]] = {}
    stack: list[tuple[Configuration, int]] = [(start, 0)]
    expansions = 0

    if accepting(start):
        return Decision(ACCEPT, RunTrace(w, (), True))

    while stack:
        cfg, eps = stack.pop()
        if eps > best.get(cfg, eps):
            continue
        if limits is not None and limits.max_expansions is not None:
            expansions += 1
            if expansions > limits.max_expansions:
                return Decision(RESOURCE_EXCEEDED)
        for t in by_state[cfg.state]:
            nxt = apply_move(cfg, t, w)
            if nxt is None:
                continue
            new_eps = 0 if t.inp != EPSILON else eps + 1
            if new_eps > m.delay - 1:
                continue
            if limits is not None and limits.max_deque is not None \
                    and len(nxt.deque) > limits.max_deque:
                return Decision(RESOURCE_EXCEEDED)
            if new_eps >= best.get(nxt, m.delay):
                continue
            best[nxt] = new_eps
            parent[nxt] = (cfg, t)
            if accepting(nxt):
                steps = []
                cur = nxt
                while cur != start:
                    prev, tr = parent[cur]
                    steps.append((tr, cur))
                    cur = prev
                steps.reverse()
                return Decision(ACCEPT, RunTrace(w, tuple(steps), True))
            stack.append((nxt, new_eps))
    return Decision(REJECT)


def decide_with_emptiness_test(m: DequeAutomaton, word: Word,
                               limits: Optional[Limits] = None) -> Decision:
    """Same contract as :func:`decide`, for machines with test moves."""
    if not m.allow_emptiness_test:
        raise ValidationError("machine does not declare the emptiness-test feature")
    return decide(m, word, limits)


def enumerate_language(m: DequeAutomaton, max_len: int) -> set[tuple[str, ...]]:
    """All words of length <= max_len accepted by ``m``.

    Shares work across words by memoizing accepted continuations per
    (state, deque, spontaneous-run, remaining-length) tuple; far cheaper
    than running :func:`decide` on every word of the bounded universe.
    """
    by_state = _transitions_by_state(m)
    max_read = max(m.max_read(), 1)
    memo: dict[tuple, frozenset] = {}

    def go(state: str, dq: tuple[str, ...], eps: int, rem: int) -> frozenset:
        # a deque that cannot be drained within the remaining move budget
        # leads nowhere
        if len(dq) > max_read * m.delay * (rem + 1):
            return frozenset()
        key = (state, dq, eps, rem)
        hit = memo.get(key)
        if hit is not None:
            return hit
        # no cycle guard needed: children strictly decrease rem or
        # strictly increase the bounded eps counter
        out: set[tuple[str, ...]] = set()
        if state in m.finals and not dq:
            out.add(())
        cfg = Configuration(state, 0, dq)
        for t in by_state[state]:
            if t.inp != EPSILON:
                if rem == 0:
                    continue
                probe = apply_move(cfg, t, (t.inp,))
                if probe is None:
                    continue
                for suffix in go(probe.state, probe.deque, 0, rem - 1):
                    out.add((t.inp,) + suffix)
            else:
                if eps + 1 > m.delay - 1:
                    continue
                probe = apply_move(cfg, t, ())
                if probe is None:
                    continue
                out |= go(probe.state, probe.deque, eps + 1, rem)
        res = frozenset(out)
        memo[key] = res
        return res

    return set(go(m.initial, (), 0, max_len))


def bounded_language(m: DequeAutomaton, max_len: int) -> set[str]:
    """Like :func:`enumerate_language`, joined to strings.

    Only valid when every input letter is a single character.
    """
    words = enumerate_language(m, max_len)
    return {"".join(w) for w in words}
