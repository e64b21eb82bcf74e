# Copyright 2025 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Freely reduced words over a finite alphabet.

Surface syntax accepted by :func:`parse_word`:

* a lowercase letter is a generator, the same letter uppercased its inverse;
* ``^<integer>`` raises the preceding letter or parenthesised group to a power;
* whitespace is ignored.

So ``"b a^3 b^-1"``, ``"baaaB"`` and ``"b(a)^3B"`` all denote the same word.
"""

import string
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict, field_validator

from app.app_utils.config import get_settings
from app.errors import AlphabetMismatchError, WordLengthError, WordParseError

_ASCII_LOWERCASE = frozenset(string.ascii_lowercase)
_ASCII_DIGITS = frozenset(string.digits)


class Alphabet(BaseModel):
    """Ordered generator names fixing a free group of rank ``len(names)``."""

    model_config = ConfigDict(frozen=True)

    names: tuple[str, ...]

    @field_validator("names")
    @classmethod
    def _check_names(cls, names: tuple[str, ...]) -> tuple[str, ...]:
        if not names:
            raise ValueError("an alphabet needs at least one generator")
        for name in names:
            if len(name) != 1 or name not in _ASCII_LOWERCASE:
                raise ValueError(
                    f"generator names must be single lowercase ASCII letters, got {name!r}"
                )
        if len(set(names)) != len(names):
            raise ValueError(f"generator names must be distinct: {''.join(names)}")
        return names

    @classmethod
    def of(cls, names: str | Iterable[str]) -> "Alphabet":
        return cls(names=tuple(names))

    @property
    def rank(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise WordParseError(f"unknown letter {name!r}") from None

    def __str__(self) -> str:
        return "".join(self.names)


DEFAULT_ALPHABET = Alphabet.of("ab")


class Letter(NamedTuple):
    index: int
    sign: int  # +1 generator, -1 formal inverse

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.sign)


def _free_reduce(letters: Iterable[Letter], rank: int) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for letter in letters:
        if not 0 <= letter.index < rank or letter.sign not in (1, -1):
            raise WordParseError(f"letter {letter} is not valid for a rank-{rank} alphabet")
        if stack and stack[-1].index == letter.index and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclass(frozen=True, slots=True)
class Word:
    """An element of the free group on ``alphabet``; always freely reduced."""

    alphabet: Alphabet
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "letters", _free_reduce(self.letters, self.alphabet.rank)
        )

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Word":
        return cls(alphabet)

    @classmethod
    def generator(cls, alphabet: Alphabet, name: str) -> "Word":
        return cls(alphabet, (Letter(alphabet.index(name), 1),))

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, e: int) -> "Word":
        return power(self, e)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Word({render(self) or '1'!r})"


def reduce(letters: Sequence[Letter], alphabet: Alphabet = DEFAULT_ALPHABET) -> Word:
    """Return the freely reduced word equal to ``letters``."""
    return Word(alphabet, tuple(letters))


def _check_alphabets(u: Word, v: Word) -> None:
    if u.alphabet is not v.alphabet and u.alphabet != v.alphabet:
        raise AlphabetMismatchError(
            f"words over different alphabets: {u.alphabet} vs {v.alphabet}"
        )


def invert(w: Word) -> Word:
    return Word(w.alphabet, tuple(letter.inverse() for letter in reversed(w.letters)))


def concat(u: Word, v: Word) -> Word:
    _check_alphabets(u, v)
    return Word(u.alphabet, u.letters + v.letters)


def cyclic_reduction(w: Word) -> tuple[Word, Word]:
    """Split ``w`` as ``u · c · u⁻¹`` with ``c`` cyclically reduced.

    Returns ``(u, c)``.
    """
    letters = w.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i].index == letters[j].index and letters[i].sign == -letters[j].sign:
        i += 1
        j -= 1
    return Word(w.alphabet, letters[:i]), Word(w.alphabet, letters[i : j + 1])


def power_length(w: Word, e: int) -> int:
    """Length of ``w**e`` computed without expanding it."""
    if e == 0 or w.is_identity():
        return 0
    u, core = cyclic_reduction(w)
    return 2 * len(u) + abs(e) * len(core)


def power(w: Word, e: int) -> Word:
    if e == 0 or w.is_identity():
        return Word.identity(w.alphabet)
    base = w if e > 0 else invert(w)
    u, core = cyclic_reduction(base)
    # core is cyclically reduced, so repeating it cancels nothing
    return Word(w.alphabet, u.letters + core.letters * abs(e) + invert(u).letters)


def conjugate(w: Word, g: Word) -> Word:
    """Return ``g · w · g⁻¹``."""
    _check_alphabets(w, g)
    return Word(w.alphabet, g.letters + w.letters + invert(g).letters)


def render(w: Word) -> str:
    """Canonical text form, e.g. ``b^2ab^-2``; the identity renders as ``""``."""
    parts: list[str] = []
    letters = w.letters
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        exponent = (j - i) * letters[i].sign
        name = w.alphabet.names[letters[i].index]
        parts.append(name if exponent == 1 else f"{name}^{exponent}")
        i = j
    return "".join(parts)


class _WordParser:
    def __init__(self, text: str, alphabet: Alphabet, max_length: int) -> None:
        self.text = text
        self.alphabet = alphabet
        self.max_length = max_length
        self.pos = 0

    def _skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str | None:
        self._skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> Word:
        word = self._sequence()
        if self._peek() is not None:
            raise WordParseError("unbalanced ')'", self.pos)
        return word

    def _sequence(self) -> Word:
        stack: list[Letter] = []
        while (char := self._peek()) is not None and char != ")":
            for letter in self._item().letters:
                if stack and stack[-1] == letter.inverse():
                    stack.pop()
                else:
                    stack.append(letter)
            if len(stack) > self.max_length:
                raise WordLengthError(
                    f"word exceeds the length cap of {self.max_length} letters", self.pos
                )
        return Word(self.alphabet, tuple(stack))

    def _item(self) -> Word:
        atom = self._atom()
        if self._peek() != "^":
            return atom
        self.pos += 1
        exponent = self._exponent()
        if power_length(atom, exponent) > self.max_length:
            raise WordLengthError(
                f"exponent {exponent} expands past the length cap of "
                f"{self.max_length} letters",
                self.pos,
            )
        return power(atom, exponent)

    def _atom(self) -> Word:
        char = self._peek()
        start = self.pos
        if char == "(":
            self.pos += 1
            inner = self._sequence()
            if self._peek() != ")":
                raise WordParseError("missing ')'", start)
            self.pos += 1
            return inner
        if char == "^":
            raise WordParseError("exponent with no preceding letter or group", start)
        if char is not None and char.isalpha():
            self.pos += 1
            try:
                index = self.alphabet.index(char.lower())
            except WordParseError:
                raise WordParseError(
                    f"unknown letter {char!r} for alphabet {self.alphabet}", start
                ) from None
            sign = 1 if char.islower() else -1
            return Word(self.alphabet, (Letter(index, sign),))
        raise WordParseError(f"unexpected character {char!r}", start)

    def _exponent(self) -> int:
        self._peek()
        start = self.pos
        end = start
        if end < len(self.text) and self.text[end] in "+-":
            end += 1
        digits_start = end
        while end < len(self.text) and self.text[end] in _ASCII_DIGITS:
            end += 1
        if end == digits_start:
            raise WordParseError("malformed exponent", start)
        self.pos = end
        try:
            return int(self.text[start:end])
        except ValueError:
            raise WordLengthError("exponent overflow", start) from None


def parse_word(
    text: str, alphabet: Alphabet = DEFAULT_ALPHABET, max_length: int | None = None
) -> Word:
    """Parse ``text`` into a reduced word.

    Raises:
        WordParseError: unknown letter, malformed exponent or bad parentheses.
        WordLengthError: expansion beyond ``max_length`` (default from
            ``STALLINGS_MAX_WORD_LENGTH``).
    """
    cap = max_length if max_length is not None else get_settings().max_word_length
    return _WordParser(text, alphabet, cap).parse()
