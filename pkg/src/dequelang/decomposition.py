"""Dyck/AntiDyck recognizers and the shuffle-decomposition decider.

The schedule language splits along the two deque ends.  Front-operating
letters (ff letters, ft-opens, tf-closes) must form a word of

  H1 = (Dyck_ff . (ft-opens | tf-closes)*)* Dyck_ff

tail-operating letters (tt letters, ft-closes, tf-opens) one of the
symmetric H2, and erasing all ff/tt letters must leave a concatenation
of same-class FIFO-balanced blocks (H3).  Since the H1 and H2 alphabets
are disjoint, shuffle membership degenerates to projecting the word on
each alphabet, so the decider is three linear scans.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cdl import CharLetter, CharWord


class AlphabetViolation(ValueError):
    """A letter lies outside the recognizer's alphabet."""


def member_dyck(word: CharWord, cls: str) -> bool:
    """LIFO bracket matching over a single stack class (ff or tt)."""
    if cls not in ("ff", "tt"):
        raise AlphabetViolation(f"{cls!r} is not a stack class")
    stack: list[int] = []
    for let in word:
        if let.cls != cls:
            raise AlphabetViolation(f"{let.token} not over class {cls}")
        if let.opening:
            stack.append(let.index)
        else:
            if not stack or stack.pop() != let.index:
                return False
    return not stack


def member_antidyck(word: CharWord, cls: str) -> bool:
    """FIFO bracket matching over a single queue class (ft or tf)."""
    if cls not in ("ft", "tf"):
        raise AlphabetViolation(f"{cls!r} is not a queue class")
    queue: list[int] = []
    head = 0
    for let in word:
        if let.cls != cls:
            raise AlphabetViolation(f"{let.token} not over class {cls}")
        if let.opening:
            queue.append(let.index)
        else:
            if head >= len(queue) or queue[head] != let.index:
                return False
            head += 1
    return head == len(queue)


def _h_scan(word: CharWord, stack_cls: str, loose_ok) -> bool:
    # shared H1/H2 scanner: a class-Dyck stack plus interleaving letters
    # that are legal only between complete Dyck blocks
    stack: list[int] = []
    for let in word:
        if let.cls == stack_cls:
            if let.opening:
                stack.append(let.index)
            else:
                if not stack or stack.pop() != let.index:
                    return False
        elif loose_ok(let):
            if stack:
                return False
        else:
            raise AlphabetViolation(f"{let.token} outside the alphabet")
    return not stack


def member_h1(word: CharWord) -> bool:
    """ff letters Dyck-balanced; ft-opens/tf-closes only at depth zero."""
    return _h_scan(word, "ff",
                   lambda l: (l.cls == "ft" and l.opening)
                   or (l.cls == "tf" and not l.opening))


def member_h2(word: CharWord) -> bool:
    """tt letters Dyck-balanced; ft-closes/tf-opens only at depth zero."""
    return _h_scan(word, "tt",
                   lambda l: (l.cls == "ft" and not l.opening)
                   or (l.cls == "tf" and l.opening))


def member_h3(word: CharWord) -> bool:
    """Erase ff/tt letters; the residue must factor into same-class
    AntiDyck blocks.

    Maximal same-class runs are checked directly: same-class AntiDyck
    words are closed under concatenation, so a finer split never
    succeeds where the maximal-run split fails.
    """
    residue = [l for l in word if l.cls in ("ft", "tf")]
    i = 0
    while i < len(residue):
        j = i
        while j < len(residue) and residue[j].cls == residue[i].cls:
            j += 1
        block = CharWord(tuple(residue[i:j]), word.k)
        if not member_antidyck(block, residue[i].cls):
            return False
        i = j
    return True


@dataclass(frozen=True)
class RowProjection:
    """The two row words of the unrolled drawing plus the queue residue."""

    front_row: CharWord
    tail_row: CharWord
    queue_word: CharWord


def _operates_front(let: CharLetter) -> bool:
    return let.writes_front() if let.opening else let.reads_front()


def project_rows(word: CharWord) -> RowProjection:
    front = tuple(l for l in word if _operates_front(l))
    tail = tuple(l for l in word if not _operates_front(l))
    queue = tuple(l for l in word if l.cls in ("ft", "tf"))
    return RowProjection(CharWord(front, word.k), CharWord(tail, word.k),
                         CharWord(queue, word.k))


def decomposition_member(word: CharWord) -> tuple[bool, RowProjection]:
    """Decide membership as H1-row and H2-row checks plus H3."""
    rows = project_rows(word)
    ok = (member_h1(rows.front_row) and member_h2(rows.tail_row)
          and member_h3(word))
    return ok, rows
