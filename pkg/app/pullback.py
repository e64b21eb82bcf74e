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

"""Intersections of subgroups via the based component of the labeled product."""

import logging
from collections import deque
from collections.abc import Sequence
from typing import NamedTuple

from app.app_utils.common import _log_stage_complete
from app.app_utils.config import get_settings
from app.errors import AlphabetMismatchError, GraphSizeError
from app.stallings_graph import (
    Edge,
    StallingsGraph,
    _require_folded,
    core_trim,
    rank,
    subgroup,
)
from app.word_algebra import Alphabet, Word

logger = logging.getLogger(__name__)


class PairVertex(NamedTuple):
    left: int
    right: int


def pullback_with_pairs(
    gH: StallingsGraph, gK: StallingsGraph, max_vertices: int | None = None
) -> tuple[StallingsGraph, tuple[PairVertex, ...]]:
    """Build the component of ``(base_H, base_K)`` in the product of two folded graphs.

    Product vertex ``i`` corresponds to ``pairs[i]``; ids follow breadth-first
    discovery order, so the base pair is vertex 0. The result is folded and has
    at most ``|V_H|·|V_K|`` vertices.

    Raises:
        AlphabetMismatchError: the factors are over different alphabets.
        GraphSizeError: the component outgrows ``max_vertices``.
    """
    _require_folded(gH, "pullback")
    _require_folded(gK, "pullback")
    if gH.alphabet != gK.alphabet:
        raise AlphabetMismatchError(
            f"cannot intersect subgroups of F({gH.alphabet}) and F({gK.alphabet})"
        )
    cap = max_vertices if max_vertices is not None else get_settings().max_graph_vertices

    start = PairVertex(gH.base, gK.base)
    ids = {start: 0}
    pairs = [start]
    edges: list[Edge] = []
    queue = deque([start])

    def visit(pair: PairVertex) -> int:
        if pair not in ids:
            if len(pairs) >= cap:
                raise GraphSizeError(
                    f"intersection graph exceeds the cap of {cap} vertices "
                    f"(factors have {gH.vertex_count} and {gK.vertex_count} vertices)"
                )
            ids[pair] = len(pairs)
            pairs.append(pair)
            queue.append(pair)
        return ids[pair]

    while queue:
        u, v = queue.popleft()
        here = ids[PairVertex(u, v)]
        for x in range(gH.alphabet.rank):
            u2, v2 = gH.successor(u, x), gK.successor(v, x)
            if u2 is not None and v2 is not None:
                edges.append(Edge(here, x, visit(PairVertex(u2, v2))))
            # incoming edges are recorded when their source is expanded
            u0, v0 = gH.predecessor(u, x), gK.predecessor(v, x)
            if u0 is not None and v0 is not None:
                visit(PairVertex(u0, v0))

    graph = StallingsGraph(gH.alphabet, tuple(range(len(pairs))), 0, tuple(edges), True)
    _log_stage_complete(
        "pullback",
        logging.DEBUG,
        left_vertices=gH.vertex_count,
        right_vertices=gK.vertex_count,
        vertices=graph.vertex_count,
        edges=graph.edge_count,
    )
    return graph, tuple(pairs)


def pullback(
    gH: StallingsGraph, gK: StallingsGraph, max_vertices: int | None = None
) -> StallingsGraph:
    """Untrimmed graph of H ∩ K; hanging trees are kept for rendering."""
    return pullback_with_pairs(gH, gK, max_vertices)[0]


def intersection(
    gH: StallingsGraph, gK: StallingsGraph, max_vertices: int | None = None
) -> StallingsGraph:
    """Core graph of H ∩ K."""
    return core_trim(pullback(gH, gK, max_vertices))


def intersection_rank(
    gensH: Sequence[Word], gensK: Sequence[Word], alphabet: Alphabet
) -> int:
    return rank(intersection(subgroup(gensH, alphabet), subgroup(gensK, alphabet)))

