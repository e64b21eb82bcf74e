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

"""Exception types raised by the toolkit.

Everything derives from ``ValueError`` so callers that only care about bad
input can catch one type.
"""


class StallingsError(ValueError):
    """Root of all toolkit errors."""


class ConfigurationError(StallingsError):
    pass


class WordParseError(StallingsError):
    """Raised when word text cannot be parsed."""

    def __init__(
        self, message: str, position: int | None = None, line: int | None = None
    ) -> None:
        self.message = message
        self.position = position
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        suffix = f" (at column {position + 1})" if position is not None else ""
        super().__init__(f"{prefix}{message}{suffix}")

    def at_line(self, line: int) -> "WordParseError":
        """Return a copy of this error tagged with a file line number."""
        return type(self)(self.message, self.position, line)


class WordLengthError(WordParseError):
    """Raised when exponent expansion would exceed the word-length cap."""


class AlphabetMismatchError(StallingsError):
    pass


class GraphSizeError(StallingsError):
    """Raised when a graph construction would exceed the vertex cap."""


class GraphNotFoldedError(StallingsError):
    pass


class FamilySpecError(StallingsError):
    pass


class TrivialSubgroupError(StallingsError):
    pass
