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

"""Text files listing subgroup generators, one word per line.

    # comments start with '#'
    alphabet: ab
    a
    b a b^-1

The ``alphabet:`` line is optional; without it the alphabet is the set of
letters used (case-folded) together with ``a`` and ``b``.
"""

import string
from pathlib import Path

from pydantic import BaseModel, ValidationError

from app.errors import AlphabetMismatchError, WordParseError
from app.word_algebra import Alphabet, Word, parse_word

_DEFAULT_LETTERS = frozenset("ab")


class GeneratorLine(BaseModel):
    line: int
    text: str


class SubgroupFile(BaseModel):
    path: Path
    alphabet_declaration: str | None = None
    generator_lines: list[GeneratorLine] = []

    def letters(self) -> set[str]:
        return {
            char.lower()
            for entry in self.generator_lines
            for char in entry.text
            if char in string.ascii_letters
        }

    def words(self, alphabet: Alphabet) -> list[Word]:
        words = []
        for entry in self.generator_lines:
            try:
                words.append(parse_word(entry.text, alphabet))
            except WordParseError as e:
                raise e.at_line(entry.line) from e
        return words


def parse_subgroup_text(text: str, path: Path | str = "<string>") -> SubgroupFile:
    declaration: str | None = None
    lines: list[GeneratorLine] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if content.lower().startswith("alphabet:"):
            if declaration is not None or lines:
                raise WordParseError(
                    "the alphabet declaration must come before any generator", line=number
                )
            names = "".join(
                char for char in content.split(":", 1)[1] if char not in " ,\t"
            )
            try:
                Alphabet.of(names)
            except ValidationError as e:
                raise WordParseError(
                    f"bad alphabet declaration: {e.errors()[0]['msg']}", line=number
                ) from e
            declaration = names
            continue
        lines.append(GeneratorLine(line=number, text=content))
    return SubgroupFile(
        path=Path(path), alphabet_declaration=declaration, generator_lines=lines
    )


def load_subgroup_file(path: Path | str) -> SubgroupFile:
    return parse_subgroup_text(Path(path).read_text(encoding="utf-8"), path)


def resolve_alphabet(*files: SubgroupFile) -> Alphabet:
    """One alphabet all ``files`` can be read over.

    Raises:
        AlphabetMismatchError: two files declare different alphabets.
    """
    declared = {f.alphabet_declaration for f in files if f.alphabet_declaration}
    if len(declared) > 1:
        raise AlphabetMismatchError(
            "files declare different alphabets: " + ", ".join(sorted(declared))
        )
    if declared:
        return Alphabet.of(declared.pop())
    letters = set(_DEFAULT_LETTERS)
    for f in files:
        letters |= f.letters()
    return Alphabet.of(sorted(letters))
