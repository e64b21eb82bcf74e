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

"""Based, generator-labeled graphs representing subgroups of a free group.

Edges are stored once, in positive orientation: an edge ``(u, x, v)`` reads
``x`` from ``u`` to ``v`` and ``x⁻¹`` from ``v`` to ``u``. A folded graph has
at most one ``x``-edge leaving and at most one entering each vertex, so reading
a word from the base is deterministic.
"""

import logging
import random
from collections import Counter, deque
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from app.app_utils.common import _log_stage_complete
from app.app_utils.config import get_settings
from app.errors import (
    AlphabetMismatchError,
    GraphNotFoldedError,
    GraphSizeError,
    StallingsError,
)
from app.union_find import UnionFind
from app.word_algebra import Alphabet, Letter, Word, concat, invert

logger = logging.getLogger(__name__)

# one colour per generator, cycled for large alphabets
_DOT_COLORS = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta")


class Edge(NamedTuple):
    source: int
    label: int
    target: int


@dataclass(frozen=True)
class StallingsGraph:
    alphabet: Alphabet
    vertices: tuple[int, ...]
    base: int
    edges: tuple[Edge, ...]
    folded: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))
        object.__setattr__(self, "edges", tuple(sorted(Edge(*e) for e in self.edges)))
        known = set(self.vertices)
        if self.base not in known:
            raise StallingsError(f"base vertex {self.base} is not a vertex")
        for e in self.edges:
            if e.source not in known or e.target not in known:
                raise StallingsError(f"edge {e} has an endpoint outside the graph")
            if not 0 <= e.label < self.alphabet.rank:
                raise StallingsError(f"edge {e} has a label outside {self.alphabet}")
        if not self.is_connected():
            raise StallingsError(
                f"graph is not connected: some vertex is unreachable from base {self.base}"
            )

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _forward(self) -> dict[tuple[int, int], int]:
        return {(e.source, e.label): e.target for e in self.edges}

    @cached_property
    def _backward(self) -> dict[tuple[int, int], int]:
        return {(e.target, e.label): e.source for e in self.edges}

    def successor(self, v: int, label: int) -> int | None:
        """Target of the ``label``-edge leaving ``v`` (folded graphs only)."""
        return self._forward.get((v, label))

    def predecessor(self, v: int, label: int) -> int | None:
        """Source of the ``label``-edge entering ``v`` (folded graphs only)."""
        return self._backward.get((v, label))

    def is_connected(self) -> bool:
        neighbours: dict[int, list[int]] = {v: [] for v in self.vertices}
        for e in self.edges:
            neighbours[e.source].append(e.target)
            neighbours[e.target].append(e.source)
        seen = {self.base}
        stack = [self.base]
        while stack:
            for w in neighbours[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


def _check_vertex_cap(count: int, max_vertices: int | None, what: str) -> None:
    cap = max_vertices if max_vertices is not None else get_settings().max_graph_vertices
    if count > cap:
        raise GraphSizeError(f"{what} needs {count} vertices, above the cap of {cap}")


def _require_folded(g: StallingsGraph, operation: str) -> None:
    if not g.folded:
        raise GraphNotFoldedError(f"{operation} needs a folded graph; call fold() first")


def bouquet(
    generators: Sequence[Word], alphabet: Alphabet, max_vertices: int | None = None
) -> StallingsGraph:
    """One petal per nonidentity generator, all glued at base vertex 0."""
    for w in generators:
        if w.alphabet != alphabet:
            raise AlphabetMismatchError(
                f"generator {w} is over {w.alphabet}, expected {alphabet}"
            )
    _check_vertex_cap(
        1 + sum(max(len(w) - 1, 0) for w in generators), max_vertices, "bouquet"
    )
    vertices = [0]
    edges: list[Edge] = []
    for w in generators:
        prev = 0
        for i, letter in enumerate(w.letters):
            if i == len(w) - 1:
                nxt = 0
            else:
                nxt = len(vertices)
                vertices.append(nxt)
            if letter.sign > 0:
                edges.append(Edge(prev, letter.index, nxt))
            else:
                edges.append(Edge(nxt, letter.index, prev))
            prev = nxt
    return StallingsGraph(alphabet, tuple(vertices), 0, tuple(edges))


def fold(g: StallingsGraph, rng: random.Random | None = None) -> StallingsGraph:
    """Identify equally-labeled edges sharing a source or target until none remain.

    ``rng`` shuffles the order in which edges are processed; the folded result
    does not depend on it up to :func:`canonical_form`.
    """
    uf = UnionFind(g.vertices)
    # label -> far endpoint, keyed by current set leaders only
    outgoing: dict[int, dict[int, int]] = {v: {} for v in g.vertices}
    incoming: dict[int, dict[int, int]] = {v: {} for v in g.vertices}
    worklist = list(g.edges)
    if rng is not None:
        rng.shuffle(worklist)
    merges: deque[tuple[int, int]] = deque()

    def settle() -> None:
        while merges:
            joined = uf.union(*merges.popleft())
            if joined is None:
                continue
            leader, absorbed = joined
            for table in (outgoing, incoming):
                kept = table[leader]
                for label, far in table.pop(absorbed).items():
                    if label in kept:
                        merges.append((kept[label], far))
                    else:
                        kept[label] = far

    for edge in worklist:
        u, v = uf.find(edge.source), uf.find(edge.target)
        x = edge.label
        if x in outgoing[u]:
            merges.append((outgoing[u][x], v))
        elif x in incoming[v]:
            merges.append((incoming[v][x], u))
        else:
            outgoing[u][x] = v
            incoming[v][x] = u
        settle()

    leaders = uf.leaders()
    edges = [
        Edge(u, x, uf.find(far)) for u in leaders for x, far in outgoing[u].items()
    ]
    result = StallingsGraph(g.alphabet, tuple(leaders), uf.find(g.base), tuple(edges), True)
    _log_stage_complete(
        "fold",
        logging.DEBUG,
        vertices_in=g.vertex_count,
        vertices_out=result.vertex_count,
        edges_out=result.edge_count,
    )
    return result


def is_folded(g: StallingsGraph) -> bool:
    """Check the folding invariant directly on the edge set."""
    leaving = Counter((e.source, e.label) for e in g.edges)
    entering = Counter((e.target, e.label) for e in g.edges)
    return all(c == 1 for c in leaving.values()) and all(
        c == 1 for c in entering.values()
    )


def core_trim(g: StallingsGraph) -> StallingsGraph:
    """Delete hanging trees: non-base vertices of degree at most one, repeatedly."""
    degree: Counter[int] = Counter()
    incident: dict[int, list[int]] = {v: [] for v in g.vertices}
    for i, e in enumerate(g.edges):
        degree[e.source] += 1
        degree[e.target] += 1
        incident[e.source].append(i)
        if e.target != e.source:
            incident[e.target].append(i)

    dead_vertices: set[int] = set()
    dead_edges: set[int] = set()
    queue = [v for v in g.vertices if v != g.base and degree[v] <= 1]
    while queue:
        v = queue.pop()
        if v in dead_vertices:
            continue
        dead_vertices.add(v)
        for i in incident[v]:
            if i in dead_edges:
                continue
            dead_edges.add(i)
            e = g.edges[i]
            other = e.target if e.source == v else e.source
            degree[other] -= 1
            if other != g.base and other not in dead_vertices and degree[other] <= 1:
                queue.append(other)

    if not dead_vertices:
        return g
    return StallingsGraph(
        g.alphabet,
        tuple(v for v in g.vertices if v not in dead_vertices),
        g.base,
        tuple(e for i, e in enumerate(g.edges) if i not in dead_edges),
        g.folded,
    )


def rank(g: StallingsGraph) -> int:
    """Rank of the represented subgroup: E − V + 1 of the folded core."""
    core = core_trim(g if g.folded else fold(g))
    return core.edge_count - core.vertex_count + 1


def subgroup(
    generators: Sequence[Word], alphabet: Alphabet, max_vertices: int | None = None
) -> StallingsGraph:
    """The folded core graph of the subgroup generated by ``generators``."""
    return core_trim(fold(bouquet(generators, alphabet, max_vertices)))


def contains(g: StallingsGraph, w: Word) -> bool:
    """Whether ``w`` reads a closed path at the base of the folded graph ``g``."""
    _require_folded(g, "membership")
    if w.alphabet != g.alphabet:
        raise AlphabetMismatchError(f"word over {w.alphabet}, graph over {g.alphabet}")
    v = g.base
    for letter in w.letters:
        if letter.sign > 0:
            step = g.successor(v, letter.index)
        else:
            step = g.predecessor(v, letter.index)
        if step is None:
            return False
        v = step
    return v == g.base


def _spanning_tree(g: StallingsGraph) -> tuple[list[int], dict[int, tuple[int, Letter]]]:
    """Breadth-first tree from the base.

    Neighbours are visited by all forward letters in alphabet order, then all
    backward letters in alphabet order. Returns the visiting order and, for each
    non-base vertex, its parent and the letter read from parent to child.
    """
    parent: dict[int, tuple[int, Letter]] = {}
    order = [g.base]
    seen = {g.base}
    queue = deque(order)
    while queue:
        v = queue.popleft()
        steps = [(g.successor(v, x), Letter(x, 1)) for x in range(g.alphabet.rank)]
        steps += [(g.predecessor(v, x), Letter(x, -1)) for x in range(g.alphabet.rank)]
        for w, letter in steps:
            if w is not None and w not in seen:
                seen.add(w)
                parent[w] = (v, letter)
                order.append(w)
                queue.append(w)
    return order, parent


def basis(g: StallingsGraph) -> list[Word]:
    """Free basis read off the non-tree edges of the breadth-first spanning tree."""
    _require_folded(g, "basis extraction")
    order, parent = _spanning_tree(g)
    path: dict[int, Word] = {g.base: Word.identity(g.alphabet)}
    tree: set[Edge] = set()
    for v in order[1:]:
        p, letter = parent[v]
        path[v] = concat(path[p], Word(g.alphabet, (letter,)))
        tree.add(Edge(p, letter.index, v) if letter.sign > 0 else Edge(v, letter.index, p))
    return [
        concat(
            concat(path[e.source], Word(g.alphabet, (Letter(e.label, 1),))),
            invert(path[e.target]),
        )
        for e in g.edges
        if e not in tree
    ]


def canonical_form(g: StallingsGraph) -> StallingsGraph:
    """Renumber vertices 0..V−1 in breadth-first order from the base.

    Two folded core graphs represent the same subgroup exactly when their
    canonical forms compare equal.
    """
    _require_folded(g, "canonical_form")
    order, _ = _spanning_tree(g)
    rename = {v: i for i, v in enumerate(order)}
    return StallingsGraph(
        g.alphabet,
        tuple(range(len(order))),
        0,
        tuple(Edge(rename[e.source], e.label, rename[e.target]) for e in g.edges),
        True,
    )


def to_dot(
    g: StallingsGraph,
    name: str = "G",
    vertex_labels: Mapping[int, str] | None = None,
) -> str:
    """Graphviz DOT text; the base is a double circle, edges carry their generator."""
    labels = vertex_labels or {}
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    for v in g.vertices:
        shape = ", shape=doublecircle" if v == g.base else ""
        lines.append(f'  {v} [label="{labels.get(v, v)}"{shape}];')
    for e in g.edges:
        color = _DOT_COLORS[e.label % len(_DOT_COLORS)]
        lines.append(
            f'  {e.source} -> {e.target} '
            f'[label="{g.alphabet.names[e.label]}", color="{color}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
