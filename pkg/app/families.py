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

"""Explicit subgroup pairs of F(a, b) whose intersections have prescribed rank.

For ``m, n ≥ 2``, ``0 ≤ k ≤ m−2`` and ``0 ≤ ℓ ≤ n−1``::

    H(m, n, k, ℓ) = ⟨ bⁱab⁻ⁱ           for 0 ≤ i ≤ k,
                      bᵏ⁺¹aⁿ⁻ˡb⁻⁽ᵏ⁺¹⁾,
                      bⁱaⁿb⁻ⁱ          for k+2 ≤ i ≤ m−1 ⟩
    K(n)          = ⟨ aⁱba⁻ⁱ           for 0 ≤ i ≤ n−1 ⟩

have ranks m and n, and H ∩ K has rank k(n−1) + ℓ. Together with
:func:`corollary_pair` this realises every rank from 0 to (m−1)(n−1)+1.
"""

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from app.errors import FamilySpecError
from app.word_algebra import DEFAULT_ALPHABET, Word, conjugate

FAMILY_CONSTRAINT = "0 ≤ k ≤ m−2, 0 ≤ ℓ ≤ n−1"

_a = Word.generator(DEFAULT_ALPHABET, "a")
_b = Word.generator(DEFAULT_ALPHABET, "b")


class FamilySpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=2, description="rank of H")
    n: int = Field(ge=2, description="rank of K")
    k: int = Field(ge=0)
    ell: int = Field(ge=0)

    @model_validator(mode="after")
    def _check_ranges(self) -> "FamilySpec":
        if self.k > self.m - 2 or self.ell > self.n - 1:
            raise ValueError(
                f"family parameters must satisfy {FAMILY_CONSTRAINT} "
                f"(got m={self.m}, n={self.n}, k={self.k}, ℓ={self.ell})"
            )
        return self


def family_spec(m: int, n: int, k: int, ell: int) -> FamilySpec:
    """Validated :class:`FamilySpec`; raises :class:`FamilySpecError` on bad input."""
    try:
        return FamilySpec(m=m, n=n, k=k, ell=ell)
    except ValidationError as e:
        details = "; ".join(err["msg"] for err in e.errors())
        raise FamilySpecError(
            f"invalid family parameters ({FAMILY_CONSTRAINT}, m ≥ 2, n ≥ 2): {details}"
        ) from e


def family_H(spec: FamilySpec) -> list[Word]:
    m, n, k, ell = spec.m, spec.n, spec.k, spec.ell
    gens = [conjugate(_a, _b**i) for i in range(k + 1)]
    gens.append(conjugate(_a ** (n - ell), _b ** (k + 1)))
    gens.extend(conjugate(_a**n, _b**i) for i in range(k + 2, m))
    return gens


def family_K(n: int) -> list[Word]:
    if n < 2:
        raise FamilySpecError(f"K needs n ≥ 2, got n={n}")
    return [conjugate(_b, _a**i) for i in range(n)]


def theorem_rank(spec: FamilySpec) -> int:
    """Rank of H(m, n, k, ℓ) ∩ K(n): k(n−1) + ℓ."""
    return spec.k * (spec.n - 1) + spec.ell


def max_intersection_rank(m: int, n: int) -> int:
    return (m - 1) * (n - 1) + 1


def corollary_pair(m: int, n: int) -> tuple[list[Word], list[Word]]:
    """Subgroups of ranks m and n meeting in rank (m−1)(n−1)+1."""
    if m < 2 or n < 2:
        raise FamilySpecError(f"corollary pair needs m, n ≥ 2, got m={m}, n={n}")
    H = [conjugate(_a, _b**i) for i in range(m - 1)] + [_b ** (m - 1)]
    K = [conjugate(_b, _a**i) for i in range(n - 1)] + [_a ** (n - 1)]
    return H, K


def achievable_spec(m: int, n: int, N: int) -> FamilySpec | None:
    """The family parameters realising rank ``N``, or ``None`` for the top rank."""
    top = max_intersection_rank(m, n)
    if m < 2 or n < 2 or not 0 <= N <= top:
        raise FamilySpecError(
            f"N must lie in [0, (m−1)(n−1)+1] = [0, {top}] with m, n ≥ 2; "
            f"got m={m}, n={n}, N={N}"
        )
    if N == top:
        return None
    k = min(m - 2, N // (n - 1))
    return family_spec(m, n, k, N - k * (n - 1))


def achievable_pair(m: int, n: int, N: int) -> tuple[list[Word], list[Word]]:
    """Subgroups of ranks m and n whose intersection has rank N.

    N = 0 and N = 1 lie below the range 2 ≤ N the classical statement covers;
    the family construction still reaches them.
    """
    spec = achievable_spec(m, n, N)
    if spec is None:
        return corollary_pair(m, n)
    return family_H(spec), family_K(n)
