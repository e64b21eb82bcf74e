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

"""Unit tests for the intersection construction."""

import random

import pytest

from app.errors import AlphabetMismatchError, GraphNotFoldedError, GraphSizeError
from app.families import family_H, family_K, family_spec
from app.pullback import (
    PairVertex,
    intersection,
    intersection_rank,
    pullback,
    pullback_with_pairs,
)
from app.stallings_graph import (
    StallingsGraph,
    basis,
    bouquet,
    canonical_form,
    contains,
    rank,
    subgroup,
)
from app.verification import random_generators, random_reduced_word
from app.word_algebra import DEFAULT_ALPHABET as AB
from app.word_algebra import Alphabet, parse_word


def _graph(*texts: str) -> StallingsGraph:
    return subgroup([parse_word(t) for t in texts], AB)


def test_disjoint_cyclic_subgroups() -> None:
    """⟨a⟩ ∩ ⟨b⟩ is trivial."""
    g = intersection(_graph("a"), _graph("b"))
    assert g.vertices == (0,)
    assert g.edges == ()
    assert rank(g) == 0


def test_cyclic_powers_meet_in_lcm() -> None:
    """⟨a²⟩ ∩ ⟨a³⟩ = ⟨a⁶⟩, a single 6-cycle."""
    g = intersection(_graph("a^2"), _graph("a^3"))
    assert g.vertex_count == 6
    assert g.edge_count == 6
    assert rank(g) == 1
    assert contains(g, parse_word("a^6"))
    assert not contains(g, parse_word("a^2"))
    assert intersection_rank([parse_word("a^2")], [parse_word("a^3")], AB) == 1


def test_self_intersection() -> None:
    """H ∩ H is H."""
    g = _graph("ab", "ba^2", "b^-3")
    assert canonical_form(intersection(g, g)) == canonical_form(g)


def test_full_group_is_neutral() -> None:
    """F ∩ K is K."""
    g = _graph("aba^-1", "b^2")
    assert canonical_form(intersection(_graph("a", "b"), g)) == canonical_form(g)


@pytest.mark.parametrize(
    ("params", "expected"),
    [((3, 3, 1, 2), 4), ((3, 3, 1, 1), 3), ((3, 4, 1, 1), 4), ((2, 2, 0, 1), 1)],
)
def test_family_intersections(params: tuple[int, int, int, int], expected: int) -> None:
    """H(m, n, k, ℓ) ∩ K(n) has rank k(n−1) + ℓ."""
    spec = family_spec(*params)
    gH, gK = subgroup(family_H(spec), AB), subgroup(family_K(spec.n), AB)
    assert rank(intersection(gH, gK)) == expected


def test_pairs_start_at_base() -> None:
    """Vertex 0 is the pair of base vertices."""
    gH, gK = _graph("a^2"), _graph("a^3")
    graph, pairs = pullback_with_pairs(gH, gK)
    assert pairs[0] == PairVertex(gH.base, gK.base)
    assert len(pairs) == graph.vertex_count
    assert len(set(pairs)) == len(pairs)


def test_pullback_keeps_hanging_trees() -> None:
    """The untrimmed graph can be larger than the core."""
    spec = family_spec(4, 3, 2, 0)
    gH, gK = subgroup(family_H(spec), AB), subgroup(family_K(3), AB)
    untrimmed = pullback(gH, gK)
    core = intersection(gH, gK)
    assert untrimmed.vertex_count > core.vertex_count
    assert rank(untrimmed) == rank(core) == 4


def test_alphabet_mismatch() -> None:
    """Both factors must be over the same alphabet."""
    abc = Alphabet.of("abc")
    with pytest.raises(AlphabetMismatchError):
        pullback(_graph("a"), subgroup([parse_word("c", abc)], abc))


def test_vertex_cap() -> None:
    """Outgrowing the cap names both factor sizes."""
    with pytest.raises(GraphSizeError, match="factors have 2 and 3 vertices"):
        pullback(_graph("a^2"), _graph("a^3"), max_vertices=2)


def test_requires_folded_factors() -> None:
    """Unfolded inputs are rejected."""
    with pytest.raises(GraphNotFoldedError):
        pullback(bouquet([parse_word("a")], AB), _graph("a"))


def test_intersection_basis_lies_in_both() -> None:
    """Every basis word of H ∩ K lies in H and in K."""
    gensH, gensK = [parse_word("a^2"), parse_word("b")], [parse_word("a^3"), parse_word("b")]
    gH, gK = subgroup(gensH, AB), subgroup(gensK, AB)
    words = basis(intersection(gH, gK))
    assert len(words) == rank(intersection(gH, gK))
    assert all(contains(gH, w) and contains(gK, w) for w in words)


def test_membership_matches_factors() -> None:
    """w ∈ H ∩ K exactly when w ∈ H and w ∈ K."""
    rng = random.Random(2)
    for _ in range(15):
        gH = subgroup(random_generators(rng, AB), AB)
        gK = subgroup(random_generators(rng, AB), AB)
        gI = intersection(gH, gK)
        for _ in range(100):
            w = random_reduced_word(rng, AB, 12)
            assert contains(gI, w) == (contains(gH, w) and contains(gK, w))


def test_symmetric_and_bounded() -> None:
    """Swapping factors keeps the rank; the size stays under |V_H|·|V_K|."""
    rng = random.Random(4)
    for _ in range(20):
        gH = subgroup(random_generators(rng, AB), AB)
        gK = subgroup(random_generators(rng, AB), AB)
        forward, backward = pullback(gH, gK), pullback(gK, gH)
        assert rank(forward) == rank(backward)
        assert forward.vertex_count <= gH.vertex_count * gK.vertex_count
