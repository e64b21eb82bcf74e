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

"""Unit tests for the sweeps, the Neumann checks and the async runner."""

import logging
import time

import pytest

from app import verification
from app.app_utils.typing import SweepCase, SweepReport, TrimCase, VerificationReport
from app.errors import FamilySpecError, TrivialSubgroupError
from app.families import FamilySpec, corollary_pair, family_H, family_K, family_spec
from app.verification import (
    family_specs,
    neumann_check,
    run_neumann_trials,
    run_verification,
    theorem_case,
    verify_achievable_sweep,
    verify_corollary_sweep,
    verify_theorem_sweep,
    verify_trim_invariance,
)
from app.word_algebra import parse_word


def test_family_specs_enumeration() -> None:
    """The box enumerates every valid (m, n, k, ℓ) in lexicographic order."""
    assert len(family_specs(2, 2)) == 2
    specs = family_specs(3, 3)
    assert len(specs) == 15
    assert specs[0] == family_spec(2, 2, 0, 0)
    assert specs[-1] == family_spec(3, 3, 1, 2)
    assert specs == sorted(specs, key=lambda s: (s.m, s.n, s.k, s.ell))


def test_family_specs_rejects_small_box() -> None:
    """Bounds below 2 are refused."""
    with pytest.raises(FamilySpecError):
        family_specs(1, 3)


def test_theorem_case() -> None:
    """A single case records expected and computed ranks."""
    case = theorem_case(family_spec(3, 3, 1, 2))
    assert (case.expected, case.computed, case.h_rank, case.k_rank) == (4, 4, 3, 3)
    assert case.passed


def test_small_sweep() -> None:
    """The 2×2 box has two passing cases with ranks 0 and 1."""
    report = verify_theorem_sweep(2, 2)
    assert [c.expected for c in report.cases] == [0, 1]
    assert report.passed
    assert report.failures == []


def test_sweep_csv() -> None:
    """CSV has a header and one row per case."""
    csv_text = verify_theorem_sweep(3, 3).to_csv()
    rows = csv_text.strip().splitlines()
    assert rows[0] == "m,n,k,l,expected,computed,pass"
    assert len(rows) == 16
    assert "3,3,1,2,4,4,true" in rows


def test_failing_case_is_reported() -> None:
    """A mismatch is a failing entry, not an exception."""
    case = SweepCase(m=3, n=3, k=1, ell=2, expected=4, computed=3, h_rank=3, k_rank=3)
    report = SweepReport(cases=[case])
    assert not report.passed
    assert report.failures == [case]
    assert report.to_csv().splitlines()[1] == "3,3,1,2,4,3,false"


def test_corollary_and_achievable_sweeps() -> None:
    """Corollary pairs and every achievable rank check out on a small box."""
    corollary = verify_corollary_sweep(3, 3)
    assert len(corollary) == 4
    assert all(c.passed for c in corollary)
    achievable = verify_achievable_sweep(3, 3)
    # (2,2): 0..2, (2,3): 0..3, (3,2): 0..3, (3,3): 0..5
    assert len(achievable) == 3 + 4 + 4 + 6
    assert all(c.passed for c in achievable)
    assert sum(c.extension for c in achievable) == 8


def test_trim_invariance() -> None:
    """Hanging trees are trimmed without changing the rank."""
    case = verify_trim_invariance(4, 3)
    assert case.passed
    assert case.same_shape
    assert case.rank == 4
    assert case.untrimmed_vertices > case.trimmed_vertices
    with pytest.raises(FamilySpecError):
        verify_trim_invariance(2, 3)


def test_neumann_check_examples() -> None:
    """Both bounds hold on the family and corollary examples."""
    spec = family_spec(3, 3, 1, 2)
    assert neumann_check(family_H(spec), family_K(3)) == (True, True)
    assert neumann_check(*corollary_pair(3, 3)) == (True, True)
    assert neumann_check([parse_word("a")], [parse_word("b")]) == (True, True)


def test_neumann_check_trivial_subgroup() -> None:
    """Rank-0 subgroups are refused."""
    with pytest.raises(TrivialSubgroupError):
        neumann_check([], [parse_word("a")])
    with pytest.raises(TrivialSubgroupError):
        neumann_check([parse_word("aA")], [parse_word("a")])


def test_neumann_trials_deterministic() -> None:
    """Trials honour the weak bound and repeat under the same seed."""
    first = run_neumann_trials(50, seed=1)
    assert len(first) == 50
    assert all(t.weak for t in first)
    assert all(t.h_rank >= 1 and t.k_rank >= 1 for t in first)
    assert first == run_neumann_trials(50, seed=1)


@pytest.mark.asyncio
async def test_run_verification_small_box() -> None:
    """The async runner combines every requested check."""
    report = await run_verification(
        3, 3, corollary=True, neumann_trials=20, seed=0, timeout=60
    )
    assert report.passed
    assert len(report.theorem.cases) == 15
    assert len(report.corollary) == 4
    assert len(report.trim) == 2
    assert len(report.neumann) == 20
    assert report.summary().endswith("PASS")


@pytest.mark.asyncio
async def test_run_verification_timeout(monkeypatch: pytest.MonkeyPatch) -> None:
    """A timeout returns the partial report with the error set."""

    def slow_case(spec: FamilySpec) -> SweepCase:
        time.sleep(1.5)
        return theorem_case(spec)

    monkeypatch.setattr(verification, "theorem_case", slow_case)
    report = await run_verification(2, 2, timeout=1)
    assert report.error is not None
    assert "timed out" in report.error
    assert not report.passed
    assert report.summary().endswith("FAIL")


@pytest.mark.parametrize(("m", "n"), [(3, 2), (3, 3), (5, 4), (6, 6)])
def test_trimmed_graph_matches_smaller_family(m: int, n: int) -> None:
    """Trimming gives back the (m−1, n, m−3, n−1) graph, not just its rank."""
    case = verify_trim_invariance(m, n)
    assert case.same_shape
    assert case.rank == case.reference_rank == (m - 2) * (n - 1)


def test_trim_case_needs_same_shape() -> None:
    """Equal ranks alone do not pass the comparison."""
    case = TrimCase(
        m=4, n=3, untrimmed_vertices=9, trimmed_vertices=6,
        rank=4, reference_rank=4, same_shape=False,
    )
    assert not case.passed
    assert not VerificationReport(trim=[case]).passed


@pytest.mark.asyncio
async def test_strong_bound_violation_is_only_a_finding(
    monkeypatch: pytest.MonkeyPatch, caplog: pytest.LogCaptureFixture
) -> None:
    """A strong-bound violation logs a warning and leaves the run passing."""
    monkeypatch.setattr(verification, "_neumann_bounds", lambda rH, rK, rI: (True, False))
    caplog.set_level(logging.WARNING, logger="app.verification")

    assert neumann_check([parse_word("a")], [parse_word("b")]) == (True, False)
    report = await run_verification(2, 2, neumann_trials=5, seed=3, timeout=60)

    assert report.passed
    assert len(report.neumann) == 5
    assert not any(t.strong for t in report.neumann)
    findings = [
        r for r in caplog.records
        if r.levelno == logging.WARNING and r.getMessage().startswith("Finding:")
    ]
    assert len(findings) == 6
    assert report.summary().endswith("PASS")
