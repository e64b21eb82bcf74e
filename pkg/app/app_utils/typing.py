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

import csv
import io

from pydantic import BaseModel, Field, computed_field


class SweepCase(BaseModel):
    """One (m, n, k, ℓ) family case: expected vs computed intersection rank."""

    m: int
    n: int
    k: int
    ell: int
    expected: int
    computed: int
    h_rank: int
    k_rank: int

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return (
            self.computed == self.expected
            and self.h_rank == self.m
            and self.k_rank == self.n
        )


class SweepReport(BaseModel):
    cases: list[SweepCase] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> list[SweepCase]:
        return [case for case in self.cases if not case.passed]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["m", "n", "k", "l", "expected", "computed", "pass"])
        for c in self.cases:
            writer.writerow(
                [c.m, c.n, c.k, c.ell, c.expected, c.computed, str(c.passed).lower()]
            )
        return buffer.getvalue()

    def summary(self) -> str:
        return (
            f"theorem: {len(self.cases) - len(self.failures)}/{len(self.cases)} "
            "cases pass"
        )


class CorollaryCase(BaseModel):
    m: int
    n: int
    expected: int
    computed: int
    h_rank: int
    k_rank: int

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return (
            self.computed == self.expected
            and self.h_rank == self.m
            and self.k_rank == self.n
        )


class AchievableCase(BaseModel):
    m: int
    n: int
    target: int
    computed: int
    h_rank: int
    k_rank: int
    extension: bool = Field(
        description="target rank 0 or 1, below the range 2 ≤ N of the classical statement"
    )

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return (
            self.computed == self.target
            and self.h_rank == self.m
            and self.k_rank == self.n
        )


class TrimCase(BaseModel):
    """Trimmed pullback of (m, n, m−2, 0) against that of (m−1, n, m−3, n−1)."""

    m: int
    n: int
    untrimmed_vertices: int
    trimmed_vertices: int
    rank: int
    reference_rank: int
    same_shape: bool = Field(
        description="trimmed graph equals the reference graph up to vertex renaming"
    )

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.rank == self.reference_rank and self.same_shape


class NeumannTrial(BaseModel):
    trial: int
    h_rank: int
    k_rank: int
    intersection_rank: int
    weak: bool
    strong: bool


class VerificationReport(BaseModel):
    theorem: SweepReport = Field(default_factory=SweepReport)
    corollary: list[CorollaryCase] = Field(default_factory=list)
    achievable: list[AchievableCase] = Field(default_factory=list)
    trim: list[TrimCase] = Field(default_factory=list)
    neumann: list[NeumannTrial] = Field(default_factory=list)
    error: str | None = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return (
            self.error is None
            and self.theorem.passed
            and all(c.passed for c in self.corollary)
            and all(c.passed for c in self.achievable)
            and all(c.passed for c in self.trim)
            and all(t.weak for t in self.neumann)
        )

    def summary(self) -> str:
        lines = [self.theorem.summary()]
        for case in self.theorem.failures:
            lines.append(
                f"  FAIL m={case.m} n={case.n} k={case.k} l={case.ell}: "
                f"expected {case.expected}, computed {case.computed} "
                f"(rank H={case.h_rank}, rank K={case.k_rank})"
            )
        if self.corollary:
            ok = sum(c.passed for c in self.corollary)
            lines.append(f"corollary: {ok}/{len(self.corollary)} cases pass")
        if self.achievable:
            ok = sum(c.passed for c in self.achievable)
            extension = sum(c.extension for c in self.achievable)
            lines.append(
                f"achievable ranks: {ok}/{len(self.achievable)} cases pass "
                f"({extension} with N in {{0, 1}}, an extension of the usual range)"
            )
        if self.trim:
            ok = sum(c.passed for c in self.trim)
            lines.append(f"tree trimming keeps rank: {ok}/{len(self.trim)} cases pass")
        if self.neumann:
            weak = sum(t.weak for t in self.neumann)
            strong = sum(t.strong for t in self.neumann)
            lines.append(
                f"neumann: weak bound held in {weak}/{len(self.neumann)} trials, "
                f"strengthened bound in {strong}/{len(self.neumann)}"
            )
        if self.error:
            lines.append(f"error: {self.error}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)
