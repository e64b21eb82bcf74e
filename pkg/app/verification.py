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

"""Computational checks of the family rank formulas and the Neumann bounds."""

import asyncio
import logging
import random
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from functools import cache

from app.app_utils.common import _log_stage_complete
from app.app_utils.config import get_settings
from app.app_utils.typing import (
    AchievableCase,
    CorollaryCase,
    NeumannTrial,
    SweepCase,
    SweepReport,
    TrimCase,
    VerificationReport,
)
from app.errors import FamilySpecError, TrivialSubgroupError
from app.families import (
    FamilySpec,
    achievable_pair,
    corollary_pair,
    family_H,
    family_K,
    family_spec,
    max_intersection_rank,
    theorem_rank,
)
from app.pullback import intersection, pullback
from app.stallings_graph import (
    StallingsGraph,
    canonical_form,
    core_trim,
    rank,
    subgroup,
)
from app.word_algebra import DEFAULT_ALPHABET, Alphabet, Letter, Word

logger = logging.getLogger(__name__)


def _check_box(m_max: int, n_max: int) -> None:
    if m_max < 2 or n_max < 2:
        raise FamilySpecError(f"sweep bounds need m_max, n_max ≥ 2, got {m_max}, {n_max}")


def family_specs(m_max: int, n_max: int) -> list[FamilySpec]:
    """All valid specs in the box, in (m, n, k, ℓ) lexicographic order."""
    _check_box(m_max, n_max)
    return [
        family_spec(m, n, k, ell)
        for m in range(2, m_max + 1)
        for n in range(2, n_max + 1)
        for k in range(m - 1)
        for ell in range(n)
    ]


@cache
def _k_graph(n: int) -> StallingsGraph:
    return subgroup(family_K(n), DEFAULT_ALPHABET)


def theorem_case(spec: FamilySpec) -> SweepCase:
    gH = subgroup(family_H(spec), DEFAULT_ALPHABET)
    gK = _k_graph(spec.n)
    case = SweepCase(
        m=spec.m,
        n=spec.n,
        k=spec.k,
        ell=spec.ell,
        expected=theorem_rank(spec),
        computed=rank(intersection(gH, gK)),
        h_rank=rank(gH),
        k_rank=rank(gK),
    )
    if not case.passed:
        logger.error(
            "Family case m=%d n=%d k=%d l=%d: expected rank %d, computed %d "
            "(rank H=%d, rank K=%d)",
            case.m, case.n, case.k, case.ell,
            case.expected, case.computed, case.h_rank, case.k_rank,
        )
    return case


def _sweep_report(cases: list[SweepCase]) -> SweepReport:
    report = SweepReport(cases=cases)
    _log_stage_complete(
        "theorem_sweep", cases=len(cases), failures=len(report.failures)
    )
    return report


def verify_theorem_sweep(m_max: int, n_max: int, workers: int = 1) -> SweepReport:
    """Check the family rank formula on every case with m ≤ m_max, n ≤ n_max.

    Mismatches become failing report entries, never exceptions. With
    ``workers > 1`` cases run in a process pool; the report order is always
    (m, n, k, ℓ).
    """
    specs = family_specs(m_max, n_max)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cases = list(pool.map(theorem_case, specs, chunksize=16))
    else:
        cases = [theorem_case(spec) for spec in specs]
    return _sweep_report(cases)


def verify_corollary_sweep(m_max: int, n_max: int) -> list[CorollaryCase]:
    _check_box(m_max, n_max)
    cases = []
    for m in range(2, m_max + 1):
        for n in range(2, n_max + 1):
            H, K = corollary_pair(m, n)
            gH, gK = subgroup(H, DEFAULT_ALPHABET), subgroup(K, DEFAULT_ALPHABET)
            case = CorollaryCase(
                m=m,
                n=n,
                expected=max_intersection_rank(m, n),
                computed=rank(intersection(gH, gK)),
                h_rank=rank(gH),
                k_rank=rank(gK),
            )
            if not case.passed:
                logger.error("Corollary case m=%d n=%d failed: %s", m, n, case)
            cases.append(case)
    _log_stage_complete("corollary_sweep", cases=len(cases))
    return cases


def verify_achievable_sweep(m_max: int, n_max: int) -> list[AchievableCase]:
    """Every rank N in [0, (m−1)(n−1)+1] through :func:`achievable_pair`."""
    _check_box(m_max, n_max)
    cases = []
    for m in range(2, m_max + 1):
        for n in range(2, n_max + 1):
            for N in range(max_intersection_rank(m, n) + 1):
                H, K = achievable_pair(m, n, N)
                gH, gK = subgroup(H, DEFAULT_ALPHABET), subgroup(K, DEFAULT_ALPHABET)
                case = AchievableCase(
                    m=m,
                    n=n,
                    target=N,
                    computed=rank(intersection(gH, gK)),
                    h_rank=rank(gH),
                    k_rank=rank(gK),
                    extension=N <= 1,
                )
                if not case.passed:
                    logger.error("Achievable case m=%d n=%d N=%d failed: %s", m, n, N, case)
                cases.append(case)
    _log_stage_complete("achievable_sweep", cases=len(cases))
    return cases


def verify_trim_invariance(m: int, n: int) -> TrimCase:
    """Compare the ℓ = 0, k = m−2 intersection with the k = m−3, ℓ = n−1 one of rank m−1.

    The first graph is the second with trees hung on it, so trimming must
    give back the same graph up to vertex renaming, and the same rank.
    """
    if m < 3:
        raise FamilySpecError(f"tree-trimming comparison needs m ≥ 3, got m={m}")
    spec = family_spec(m, n, m - 2, 0)
    reference = family_spec(m - 1, n, m - 3, n - 1)
    untrimmed = pullback(subgroup(family_H(spec), DEFAULT_ALPHABET), _k_graph(n))
    trimmed = core_trim(untrimmed)
    expected = intersection(subgroup(family_H(reference), DEFAULT_ALPHABET), _k_graph(n))
    case = TrimCase(
        m=m,
        n=n,
        untrimmed_vertices=untrimmed.vertex_count,
        trimmed_vertices=trimmed.vertex_count,
        rank=rank(trimmed),
        reference_rank=rank(expected),
        same_shape=canonical_form(trimmed) == canonical_form(expected),
    )
    if not case.passed:
        logger.error("Tree-trimming comparison m=%d n=%d failed: %s", m, n, case)
    return case


def _neumann_bounds(rH: int, rK: int, rI: int) -> tuple[bool, bool]:
    return rI - 1 <= 2 * (rH - 1) * (rK - 1), rI - 1 <= (rH - 1) * (rK - 1)


def _neumann_trial(
    gensH: Sequence[Word], gensK: Sequence[Word], alphabet: Alphabet, trial: int = 0
) -> NeumannTrial:
    gH, gK = subgroup(gensH, alphabet), subgroup(gensK, alphabet)
    rH, rK = rank(gH), rank(gK)
    if rH == 0 or rK == 0:
        raise TrivialSubgroupError(
            f"Neumann bounds need nontrivial subgroups (ranks {rH} and {rK})"
        )
    rI = rank(intersection(gH, gK))
    weak, strong = _neumann_bounds(rH, rK, rI)
    if not weak:
        logger.error(
            "Weak Neumann bound violated in trial %d: ranks H=%d K=%d H∩K=%d, %s %s",
            trial, rH, rK, rI, list(gensH), list(gensK),
        )
    elif not strong:
        logger.warning(
            "Finding: strengthened Neumann bound exceeded in trial %d: "
            "ranks H=%d K=%d H∩K=%d, %s %s",
            trial, rH, rK, rI, list(gensH), list(gensK),
        )
    return NeumannTrial(
        trial=trial, h_rank=rH, k_rank=rK, intersection_rank=rI, weak=weak, strong=strong
    )


def neumann_check(
    gensH: Sequence[Word], gensK: Sequence[Word], alphabet: Alphabet = DEFAULT_ALPHABET
) -> tuple[bool, bool]:
    """Return ``(weak, strong)`` for the two Neumann rank bounds on H ∩ K.

    weak:   rank(H∩K) − 1 ≤ 2·(rank H − 1)·(rank K − 1)
    strong: rank(H∩K) − 1 ≤ (rank H − 1)·(rank K − 1)

    A strong-bound violation is logged as a finding, not raised.
    """
    result = _neumann_trial(gensH, gensK, alphabet)
    return result.weak, result.strong


def random_reduced_word(rng: random.Random, alphabet: Alphabet, max_length: int) -> Word:
    """Uniform length in [0, max_length], then a uniform reduced word of that length."""
    length = rng.randint(0, max_length)
    letters: list[Letter] = []
    while len(letters) < length:
        letter = Letter(rng.randrange(alphabet.rank), rng.choice((1, -1)))
        if letters and letters[-1] == letter.inverse():
            continue
        letters.append(letter)
    return Word(alphabet, tuple(letters))


def random_generators(
    rng: random.Random,
    alphabet: Alphabet = DEFAULT_ALPHABET,
    count: tuple[int, int] = (2, 5),
    max_length: int = 10,
) -> list[Word]:
    """Between ``count[0]`` and ``count[1]`` random nonidentity words."""
    gens = []
    for _ in range(rng.randint(*count)):
        w = random_reduced_word(rng, alphabet, max_length)
        while w.is_identity():
            w = random_reduced_word(rng, alphabet, max_length)
        gens.append(w)
    return gens


def run_neumann_trials(
    trials: int,
    seed: int = 0,
    alphabet: Alphabet = DEFAULT_ALPHABET,
    count: tuple[int, int] = (2, 5),
    max_length: int = 10,
) -> list[NeumannTrial]:
    """Check both Neumann bounds on ``trials`` random nontrivial pairs."""
    rng = random.Random(seed)
    results = []
    for trial in range(trials):
        gensH = random_generators(rng, alphabet, count, max_length)
        gensK = random_generators(rng, alphabet, count, max_length)
        results.append(_neumann_trial(gensH, gensK, alphabet, trial))
    _log_stage_complete(
        "neumann_trials",
        trials=trials,
        weak_violations=sum(not r.weak for r in results),
        strong_violations=sum(not r.strong for r in results),
    )
    return results


async def run_verification(
    m_max: int,
    n_max: int,
    *,
    corollary: bool = False,
    neumann_trials: int = 0,
    seed: int = 0,
    workers: int = 1,
    timeout: int | None = None,
) -> VerificationReport:
    """Run every requested check under one wall-clock limit.

    The limit defaults to ``STALLINGS_SWEEP_TIMEOUT_SECONDS``. On timeout the
    cases finished so far are returned with ``error`` set.
    """
    _check_box(m_max, n_max)
    limit = timeout if timeout is not None else get_settings().sweep_timeout_seconds
    report = VerificationReport()
    specs = family_specs(m_max, n_max)
    loop = asyncio.get_running_loop()
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        async with asyncio.timeout(limit):
            if pool is not None:
                report.theorem.cases.extend(
                    await asyncio.gather(
                        *(loop.run_in_executor(pool, theorem_case, s) for s in specs)
                    )
                )
            else:
                for spec in specs:
                    report.theorem.cases.append(
                        await asyncio.to_thread(theorem_case, spec)
                    )
            _log_stage_complete(
                "theorem_sweep",
                cases=len(report.theorem.cases),
                failures=len(report.theorem.failures),
            )
            if corollary:
                report.corollary = await asyncio.to_thread(
                    verify_corollary_sweep, m_max, n_max
                )
                report.achievable = await asyncio.to_thread(
                    verify_achievable_sweep, m_max, n_max
                )
                for m in range(3, m_max + 1):
                    for n in range(2, n_max + 1):
                        report.trim.append(
                            await asyncio.to_thread(verify_trim_invariance, m, n)
                        )
            if neumann_trials:
                report.neumann = await asyncio.to_thread(
                    run_neumann_trials, neumann_trials, seed
                )
    except TimeoutError:
        logger.error("Verification timed out after %d seconds", limit)
        report.error = f"Verification timed out after {limit} seconds"
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    _log_stage_complete("verification", passed=report.passed)
    return report

