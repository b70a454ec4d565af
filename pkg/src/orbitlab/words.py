"""The four-letter restricted growth language.

A word over {1, 2, 3, 4} is valid when, with an implicit leading 1, each
letter is at most one more than the running maximum of the letters before
it.  So the first displayed letter is 1 or 2, and a 4 can only follow a 3
somewhere earlier.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import check_budget

ALPHABET = (1, 2, 3, 4)


def is_valid_word(letters) -> bool:
    """True iff letters form a restricted growth word; never raises."""
    running = 1
    for a in letters:
        if a not in ALPHABET:
            return False
        if a > running + 1:
            return False
        if a > running:
            running = a
    return True


@dataclass(frozen=True, slots=True)
class RGWord:
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if not is_valid_word(self.letters):
            raise ValueError(f"not a restricted growth word: {self.letters}")

    def __str__(self) -> str:
        return "".join(str(a) for a in self.letters)

    def __len__(self) -> int:
        return len(self.letters)


def word_from_string(text: str) -> RGWord:
    """Parse a digit string, naming the first violated constraint."""
    letters = []
    for pos, ch in enumerate(text, 1):
        if ch not in "1234":
            raise ValueError(
                f"letter {ch!r} at position {pos} is outside the alphabet 1..4")
        letters.append(int(ch))
    running = 1
    for pos, a in enumerate(letters, 1):
        if a > running + 1:
            raise ValueError(
                f"letter {a} at position {pos} breaks the growth bound: "
                f"at most running maximum {running} plus 1 is allowed")
        if a > running:
            running = a
    return RGWord(tuple(letters))


def enumerate_words(m: int, budget: int | None = None) -> list[RGWord]:
    """All valid words of length m, lexicographically, by prefix extension."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    check_budget(4 ** m, budget)
    out: list[RGWord] = []
    prefix: list[int] = []

    def extend(running: int) -> None:
        if len(prefix) == m:
            out.append(RGWord(tuple(prefix)))
            return
        for a in range(1, min(4, running + 1) + 1):
            prefix.append(a)
            extend(running if a <= running else a)
            prefix.pop()

    extend(1)
    return out


def count_words(m: int) -> int:
    """Count valid words of length m by dynamic programming on the running
    maximum: from maximum M the next letter ranges over 1..min(4, M+1)."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    counts = {1: 1, 2: 0, 3: 0, 4: 0}
    for _ in range(m):
        nxt = dict.fromkeys(ALPHABET, 0)
        for mx, c in counts.items():
            if not c:
                continue
            nxt[mx] += mx * c
            if mx < 4:
                nxt[mx + 1] += c
        counts = nxt
    return sum(counts.values())
