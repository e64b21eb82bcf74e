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

from collections.abc import Iterable


class UnionFind:
    """Disjoint sets over integer ids; the smaller id always leads its set."""

    def __init__(self, ids: Iterable[int] = ()) -> None:
        self.parent: dict[int, int] = {i: i for i in ids}

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        # path compression
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> tuple[int, int] | None:
        """Merge the sets of ``i`` and ``j``.

        Returns ``(leader, absorbed)`` or ``None`` when already merged.
        """
        a, b = self.find(i), self.find(j)
        if a == b:
            return None
        leader, absorbed = (a, b) if a < b else (b, a)
        self.parent[absorbed] = leader
        return leader, absorbed

    def leaders(self) -> list[int]:
        return sorted(i for i in self.parent if self.parent[i] == i)
