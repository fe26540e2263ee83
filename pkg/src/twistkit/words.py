"""Freely reduced words over indexed generators and their formal inverses.

A letter is stored as a nonzero signed integer: ``k`` is the generator with
index ``k`` and ``-k`` is its inverse.  The public ``letters`` view exposes the
same data as ``(index, sign)`` pairs.

Products follow functional notation: in ``u * v`` the factor ``v`` acts first
whenever the word denotes a composite map.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence, Tuple, Union

Letter = Tuple[int, int]
RawLetter = Union[int, Letter]

_TOKEN = re.compile(r"^s(\d+)(\^-1)?$")


class WordParseError(ValueError):
    """Raised for malformed word text; ``position`` is the 0-based token offset."""

    def __init__(self, message: str, position: int, token: str):
        super().__init__(f"{message} at token {position} ({token!r})")
        self.position = position
        self.token = token


def _signed(letter: RawLetter) -> int:
    if isinstance(letter, tuple):
        index, sign = letter
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign}")
    else:
        index, sign = abs(letter), (1 if letter > 0 else -1)
    if index < 1:
        raise ValueError(f"generator indices are 1-based, got {index}")
    return index * sign


def _free_reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def _join(u: Sequence[int], v: Sequence[int]) -> Tuple[int, ...]:
    # Both inputs are reduced, so cancellation only happens at the seam.
    i = 0
    n = min(len(u), len(v))
    while i < n and u[len(u) - 1 - i] == -v[i]:
        i += 1
    return tuple(u[: len(u) - i]) + tuple(v[i:])


class Word:
    """An immutable freely reduced word.

    Construct from signed integers or ``(index, sign)`` pairs; the input is
    reduced on the way in, so two words are equal exactly when they are the
    same group element of the free group.
    """

    __slots__ = ("_w",)

    def __init__(self, letters: Iterable[RawLetter] = ()):
        self._w = _free_reduce(_signed(x) for x in letters)

    @classmethod
    def _trusted(cls, reduced: Tuple[int, ...]) -> "Word":
        w = object.__new__(cls)
        w._w = reduced
        return w

    @classmethod
    def gen(cls, index: int, sign: int = 1) -> "Word":
        return cls._trusted((_signed((index, sign)),))

    @classmethod
    def identity(cls) -> "Word":
        return cls._trusted(())

    @property
    def signed(self) -> Tuple[int, ...]:
        return self._w

    @property
    def letters(self) -> Tuple[Letter, ...]:
        return tuple((abs(x), 1 if x > 0 else -1) for x in self._w)

    def max_index(self) -> int:
        return max((abs(x) for x in self._w), default=0)

    def is_identity(self) -> bool:
        return not self._w

    def __len__(self) -> int:
        return len(self._w)

    def __iter__(self) -> Iterator[int]:
        return iter(self._w)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self._w == other._w

    def __hash__(self) -> int:
        return hash(self._w)

    def __mul__(self, other: "Word") -> "Word":
        return Word._trusted(_join(self._w, other._w))

    def __invert__(self) -> "Word":
        return Word._trusted(tuple(-x for x in reversed(self._w)))

    inverse = __invert__

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)


def reduce(raw: Iterable[RawLetter]) -> Word:
    return Word(raw)


def multiply(u: Word, v: Word) -> Word:
    return u * v


def invert(u: Word) -> Word:
    return ~u


def conjugate(u: Word, f: Word) -> Word:
    """Return ``f u f^-1``."""
    return f * u * ~f


def power(u: Word, k: int) -> Word:
    if k < 0:
        u, k = ~u, -k
    result = Word.identity()
    base = u
    # square-and-multiply; powers of one element commute so order is irrelevant
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


def product(words: Iterable[Word]) -> Word:
    result: Tuple[int, ...] = ()
    for w in words:
        result = _join(result, w.signed)
    return Word._trusted(result)


def format_word(w: Word, symbol: str = "s") -> str:
    return " ".join(f"{symbol}{abs(x)}" + ("" if x > 0 else "^-1") for x in w.signed)


def parse_word(text: str) -> Word:
    """Parse whitespace-separated ``s<k>`` / ``s<k>^-1`` tokens.

    >>> parse_word("s1 s2 s2^-1 s3")
    Word('s1 s3')
    """
    letters = []
    for pos, token in enumerate(text.split()):
        m = _TOKEN.match(token)
        if m is None:
            raise WordParseError("malformed token", pos, token)
        index = int(m.group(1))
        if index == 0:
            raise WordParseError("generator index 0 is not allowed", pos, token)
        letters.append(-index if m.group(2) else index)
    return Word(letters)
