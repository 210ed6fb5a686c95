"""Deterministic partitions on top of networkx's union-find."""

from __future__ import annotations

from typing import Hashable, Iterable

from networkx.utils import UnionFind as _NxUnionFind


class UnionFind:
    """Union-find whose classes come out in first-occurrence order.

    Each class lists its members in the order they were declared, so the
    first member is a stable representative.
    """

    def __init__(self, elements: Iterable[Hashable]):
        self.order = list(elements)
        self._uf = _NxUnionFind(self.order)

    def union(self, a: Hashable, b: Hashable) -> None:
        self._uf.union(a, b)

    def find(self, a: Hashable) -> Hashable:
        return self._uf[a]

    def classes(self) -> list[list[Hashable]]:
        groups: dict[Hashable, list] = {}
        for e in self.order:
            groups.setdefault(self._uf[e], []).append(e)
        return list(groups.values())
