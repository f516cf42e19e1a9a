"""Cancellation rules: deciding schedule membership by rewriting to empty.

Four rules each delete one matched open/close pair:

  CR1  u ff_i x ffc_i v -> u x v   with no ff-close anywhere in u and x
       over the tail-operating letters only (ft-close, tf-open, tt-open,
       tt-close)
  CR2  symmetric for tt: no tt-close in u, x over the front-operating
       letters (ff-open, ff-close, ft-open, tf-close)
  CR3  ft_i x ftc_i v -> x v at the very start of the word, x over
       ft-opens only
  CR4  symmetric for tf at the start, x over tf-opens only

A word is a valid schedule iff the rules reduce it to the empty word; the
verdict does not depend on the order of application, which the test
suite checks empirically rather than assuming.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .cdl import CharLetter, CharWord

# letters allowed strictly between the matched pair, per rule
_X_CR1 = lambda l: (l.cls == "tt") or (l.cls == "ft" and not l.opening) \
    or (l.cls == "tf" and l.opening)
_X_CR2 = lambda l: (l.cls == "ff") or (l.cls == "ft" and l.opening) \
    or (l.cls == "tf" and not l.opening)


@dataclass(frozen=True)
class ReductionStep:
    rule: str
    open_pos: int   # 0-based positions into ``before``
    close_pos: int
    before: CharWord
    after: CharWord


def _delete(word: CharWord, i: int, j: int) -> CharWord:
    letters = word.letters
    return CharWord(letters[:i] + letters[i + 1:j] + letters[j + 1:], word.k)


def _stack_rule(word: CharWord, cls: str, rule: str, x_ok) -> Optional[ReductionStep]:
    # the matched close is forced: the first close of the class; the
    # matched open is the nearest preceding open of the class
    letters = word.letters
    close_pos = next((i for i, l in enumerate(letters)
                      if l.cls == cls and not l.opening), None)
    if close_pos is None:
        return None
    open_pos = next((i for i in range(close_pos - 1, -1, -1)
                     if letters[i].cls == cls and letters[i].opening), None)
    if open_pos is None:
        return None
    if letters[open_pos].index != letters[close_pos].index:
        return None
    if not all(x_ok(letters[i]) for i in range(open_pos + 1, close_pos)):
        return None
    return ReductionStep(rule, open_pos, close_pos, word, _delete(word, open_pos, close_pos))


def _queue_rule(word: CharWord, cls: str, rule: str) -> Optional[ReductionStep]:
    # anchored at the word start: an open of the class, then opens of the
    # same class only, then the matching close
    letters = word.letters
    if not letters or letters[0].cls != cls or not letters[0].opening:
        return None
    j = 1
    while j < len(letters) and letters[j].cls == cls and letters[j].opening:
        j += 1
    if j >= len(letters):
        return None
    closer = letters[j]
    if closer.cls != cls or closer.opening or closer.index != letters[0].index:
        return None
    return ReductionStep(rule, 0, j, word, _delete(word, 0, j))


def applicable_steps(word: CharWord) -> list[ReductionStep]:
    """Every rule instance on ``word`` (at most one per rule)."""
    steps = [
        _stack_rule(word, "ff", "CR1", _X_CR1),
        _stack_rule(word, "tt", "CR2", _X_CR2),
        _queue_rule(word, "ft", "CR3"),
        _queue_rule(word, "tf", "CR4"),
    ]
    found = [s for s in steps if s is not None]
    found.sort(key=lambda s: (s.open_pos, s.close_pos, s.rule))
    return found


@dataclass(frozen=True)
class ReduceResult:
    emptied: bool
    steps: tuple[ReductionStep, ...]
    residual: Optional[CharWord] = None


def reduce_word(word: CharWord, strategy: str = "leftmost",
                seed: Optional[int] = None) -> ReduceResult:
    """Rewrite ``word`` to empty if possible.

    ``leftmost`` repeatedly applies the first applicable step, ``random``
    a uniformly chosen one (reproducible from ``seed``), ``exhaustive``
    searches every application order and succeeds iff some order empties
    the word.
    """
    if strategy == "exhaustive":
        return _reduce_exhaustive(word)
    rng = random.Random(seed) if strategy == "random" else None
    cur = word
    taken: list[ReductionStep] = []
    while cur.letters:
        steps = applicable_steps(cur)
        if not steps:
            return ReduceResult(False, tuple(taken), cur)
        step = steps[0] if rng is None else rng.choice(steps)
        taken.append(step)
        cur = step.after
    return ReduceResult(True, tuple(taken))


def _reduce_exhaustive(word: CharWord) -> ReduceResult:
    seen: set[tuple[CharLetter, ...]] = set()

    def go(cur: CharWord, taken: list[ReductionStep]) -> Optional[list[ReductionStep]]:
        if not cur.letters:
            return taken
        if cur.letters in seen:
            return None
        seen.add(cur.letters)
        for step in applicable_steps(cur):
            hit = go(step.after, taken + [step])
            if hit is not None:
                return hit
        return None

    hit = go(word, [])
    if hit is not None:
        return ReduceResult(True, tuple(hit))
    return ReduceResult(False, (), word)
