"""The characteristic deque alphabet and the deque-schedule language.

Letters come in four classes naming a write end and a read end (ff, ft,
tf, tt), two polarities (open = write, close = read) and an index
1..k.  A word is a valid deque schedule iff the deterministic one-state
scan below consumes it and ends with an empty deque:

  open  ff_j / ft_j   prepend FF_j / FT_j at the front
  open  tf_j / tt_j   append  TF_j / TT_j at the tail
  close ff_j / tf_j   the front symbol must be FF_j / TF_j; remove it
  close ft_j / tt_j   the tail symbol must be FT_j / TT_j; remove it

Token syntax is ``<class><polarity><index>``, e.g. ``ff+3`` or ``tt-1``,
whitespace-separated in words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .core import (CLASSES, DequeAutomaton, TapeSymbol, Transition)

FRONT_WRITE = frozenset({"ff", "ft"})
FRONT_READ = frozenset({"ff", "tf"})


class TokenError(ValueError):
    """A token is not of the form <class><polarity><index>."""


class BlockedPrefixError(ValueError):
    """The requested prefix already blocks the scan."""


class CharLetter(NamedTuple):
    cls: str
    opening: bool
    index: int

    @property
    def token(self) -> str:
        return f"{self.cls}{'+' if self.opening else '-'}{self.index}"

    @property
    def tape_symbol(self) -> str:
        """Upper-case deque symbol this letter writes or expects."""
        return f"{self.cls.upper()}_{self.index}"

    def writes_front(self) -> bool:
        return self.cls in FRONT_WRITE

    def reads_front(self) -> bool:
        return self.cls in FRONT_READ


def parse_token(tok: str) -> CharLetter:
    cls = tok[:2]
    if cls not in CLASSES or len(tok) < 4 or tok[2] not in "+-":
        raise TokenError(f"bad characteristic letter {tok!r}")
    try:
        index = int(tok[3:])
    except ValueError:
        raise TokenError(f"bad index in {tok!r}") from None
    if index < 1:
        raise TokenError(f"index must be >= 1 in {tok!r}")
    return CharLetter(cls, tok[2] == "+", index)


@dataclass(frozen=True)
class CharWord:
    letters: tuple[CharLetter, ...]
    k: int

    def __post_init__(self):
        for let in self.letters:
            if not 1 <= let.index <= self.k:
                raise TokenError(f"letter {let.token} exceeds k={self.k}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[CharLetter]:
        return iter(self.letters)

    @property
    def tokens(self) -> str:
        return " ".join(let.token for let in self.letters)

    @classmethod
    def parse(cls, text: str, k: Optional[int] = None) -> "CharWord":
        letters = tuple(parse_token(t) for t in text.split())
        if k is None:
            k = max((let.index for let in letters), default=1)
        return cls(letters, k)


@dataclass(frozen=True)
class MemberResult:
    """Verdict of the deterministic scan.

    On acceptance ``trace`` holds the deque content (front first) after
    each letter.  On a blocked scan ``position`` is the 1-based index of
    the offending letter with the expected and found symbols; a scan
    that completes with a non-empty deque reports the leftover instead.
    """

    accepted: bool
    trace: tuple[tuple[str, ...], ...] = ()
    position: Optional[int] = None
    expected: Optional[str] = None
    found: Optional[str] = None
    residue: tuple[str, ...] = ()

    def reason(self) -> str:
        if self.accepted:
            return "accepted"
        if self.position is not None:
            return (f"blocked at position {self.position}: "
                    f"expected {self.expected}, found {self.found}")
        return "input exhausted with non-empty deque " + " ".join(self.residue)


def _scan(word: CharWord):
    """Yield (index, letter, deque-after) or raise via sentinel.

    Internal driver shared by membership, prefix inspection and the
    graph builder.  The deque holds (cls, index) pairs, front at 0.
    """
    dq: list[tuple[str, int]] = []
    for i, let in enumerate(word.letters, start=1):
        if let.opening:
            if let.writes_front():
                dq.insert(0, (let.cls, let.index))
            else:
                dq.append((let.cls, let.index))
        else:
            end = 0 if let.reads_front() else -1
            if not dq or dq[end] != (let.cls, let.index):
                found = None if not dq else dq[end]
                yield (i, let, None, found)
                return
            dq.pop(end)
        yield (i, let, tuple(dq), None)


def _fmt(sym: Optional[tuple[str, int]]) -> str:
    return "empty deque" if sym is None else f"{sym[0].upper()}_{sym[1]}"


def member_dq(word: CharWord) -> MemberResult:
    """Deterministic linear membership scan; no search happens."""
    trace = []
    for (i, let, dq, found) in _scan(word):
        if dq is None:
            return MemberResult(False, tuple(trace), position=i,
                                expected=let.tape_symbol, found=_fmt(found))
        trace.append(tuple(f"{c.upper()}_{j}" for (c, j) in dq))
    if trace and trace[-1]:
        return MemberResult(False, tuple(trace), residue=trace[-1])
    return MemberResult(True, tuple(trace))


def deque_after_prefix(word: CharWord, length: int) -> tuple[str, ...]:
    """Deque content (front first) after the first ``length`` letters."""
    if length == 0:
        return ()
    last = ()
    for (i, let, dq, found) in _scan(word):
        if dq is None:
            raise BlockedPrefixError(
                f"prefix blocks at position {i}: expected {let.tape_symbol}, "
                f"found {_fmt(found)}")
        last = tuple(f"{c.upper()}_{j}" for (c, j) in dq)
        if i == length:
            return last
    raise BlockedPrefixError(f"word has fewer than {length} letters")


def alphabet(k: int) -> list[CharLetter]:
    """Delta_k in the fixed enumeration order (class, polarity, index)."""
    return [CharLetter(c, opening, i)
            for c in CLASSES for opening in (True, False)
            for i in range(1, k + 1)]


def enumerate_dq(k: int, n: int) -> tuple[list[CharWord], list[int]]:
    """All members of length <= n, length-lexicographic, plus counts.

    Generation extends only prefixes whose scan has not blocked; live
    but non-extendable deques (e.g. a deadlocked [FT, TF] pair) are cut
    by the length bound like any other prefix.
    """
    order = alphabet(k)
    by_length: dict[int, list[CharWord]] = {ln: [] for ln in range(n + 1)}

    prefix: list[CharLetter] = []
    dq: list[tuple[str, int]] = []

    def rec():
        ln = len(prefix)
        if not dq:
            by_length[ln].append(CharWord(tuple(prefix), k))
        if ln == n:
            return
        for let in order:
            if let.opening:
                pos = 0 if let.writes_front() else len(dq)
                dq.insert(pos, (let.cls, let.index))
                prefix.append(let)
                rec()
                prefix.pop()
                dq.pop(pos)
            else:
                end = 0 if let.reads_front() else -1
                if dq and dq[end] == (let.cls, let.index):
                    sym = dq.pop(end)
                    prefix.append(let)
                    rec()
                    prefix.pop()
                    if end == 0:
                        dq.insert(0, sym)
                    else:
                        dq.append(sym)

    rec()
    members: list[CharWord] = []
    counts = []
    for ln in range(n + 1):
        members.extend(by_length[ln])
        counts.append(len(by_length[ln]))
    return members, counts


def rho_reduce(word: CharWord) -> CharWord:
    """Reduce a Delta_k word to Delta_2: index j becomes a 1,2^j block.

    Opens map to ``a1 a2^j`` of the same class.  Closes must replay the
    block in the order the deque end yields it: last-in-first-out for the
    stack classes ff/tt (``a2^j a1``), first-in-first-out for the queue
    classes ft/tf (``a1 a2^j``).
    """
    out: list[CharLetter] = []
    for let in word.letters:
        ones = CharLetter(let.cls, let.opening, 1)
        twos = [CharLetter(let.cls, let.opening, 2)] * let.index
        if let.opening or let.cls in ("ft", "tf"):
            out.append(ones)
            out.extend(twos)
        else:
            out.extend(twos)
            out.append(ones)
    return CharWord(tuple(out), 2)


def cdl_automaton(k: int) -> DequeAutomaton:
    """The one-state deterministic real-time recognizer of the schedule
    language, as a plain deque automaton over the token alphabet."""
    tape = tuple(TapeSymbol(f"{c.upper()}_{i}", c)
                 for c in CLASSES for i in range(1, k + 1))
    trans = []
    for let in alphabet(k):
        sym = let.tape_symbol
        if let.opening:
            wf = (sym,) if let.writes_front() else ()
            wt = () if let.writes_front() else (sym,)
            trans.append(Transition("q0", let.token, (), (), "q0", wf, wt))
        else:
            rf = (sym,) if let.reads_front() else ()
            rt = () if let.reads_front() else (sym,)
            trans.append(Transition("q0", let.token, rf, rt, "q0", (), ()))
    return DequeAutomaton(
        input_alphabet=frozenset(let.token for let in alphabet(k)),
        tape=tape,
        states=("q0",),
        initial="q0",
        finals=frozenset({"q0"}),
        transitions=tuple(trans),
        delay=1,
    ).validate()
