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

from .families import (
    FamilySpec,
    achievable_pair,
    corollary_pair,
    family_H,
    family_K,
    family_spec,
    theorem_rank,
)
from .pullback import PairVertex, intersection, intersection_rank, pullback
from .stallings_graph import (
    StallingsGraph,
    basis,
    bouquet,
    canonical_form,
    contains,
    core_trim,
    fold,
    rank,
    subgroup,
    to_dot,
)
from .verification import neumann_check, run_verification, verify_theorem_sweep
from .word_algebra import (
    DEFAULT_ALPHABET,
    Alphabet,
    Letter,
    Word,
    concat,
    conjugate,
    invert,
    parse_word,
    power,
    reduce,
    render,
)

__all__ = [
    "DEFAULT_ALPHABET",
    "Alphabet",
    "FamilySpec",
    "Letter",
    "PairVertex",
    "StallingsGraph",
    "Word",
    "achievable_pair",
    "basis",
    "bouquet",
    "canonical_form",
    "concat",
    "conjugate",
    "contains",
    "core_trim",
    "corollary_pair",
    "family_H",
    "family_K",
    "family_spec",
    "fold",
    "intersection",
    "intersection_rank",
    "invert",
    "neumann_check",
    "parse_word",
    "power",
    "pullback",
    "rank",
    "reduce",
    "render",
    "run_verification",
    "subgroup",
    "theorem_rank",
    "to_dot",
    "verify_theorem_sweep",
]
