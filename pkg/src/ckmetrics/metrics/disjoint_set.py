"""Union-find over ``0..n-1`` with union by rank and path compression."""

import numpy as np


class DisjointSet:

    def __init__(self, size: int):
        self.ranks = np.zeros(size, dtype=np.intp)
        self.parents = np.arange(size, dtype=np.intp)
        self.components = size

    def find(self, index: int) -> int:
        parents = self.parents
        root = index
        while root != parents[root]:
            root = parents[root]
        while parents[index] != root:
            parents[index], index = root, parents[index]
        return int(root)

    def merge(self, a: int, b: int) -> bool:
        """Join the sets holding ``a`` and ``b``; False when they were already joined."""
        a = self.find(a)
        b = self.find(b)
        if a == b:
            return False

        ranks = self.ranks
        parents = self.parents
        if ranks[a] < ranks[b]:
            parents[a] = b
        elif ranks[a] > ranks[b]:
            parents[b] = a
        else:
            parents[b] = a
            ranks[a] += 1
        self.components -= 1
        return True
