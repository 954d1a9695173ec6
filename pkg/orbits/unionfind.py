# orbits/unionfind.py

"""Union-find over a fixed finite index set, with deterministic block listing."""


class UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, i):
        root = self.parent[i]
        if self.parent[root] != root:
            root = self.parent[i] = self.find(root)
        return root

    def union(self, i, j):
        i, j = self.find(i), self.find(j)
        if i == j:
            return
        if self.rank[i] < self.rank[j]:
            i, j = j, i
        elif self.rank[i] == self.rank[j]:
            self.rank[i] += 1
        self.parent[j] = i

    def blocks(self):
        """Blocks as sorted index tuples, ordered by their smallest index."""
        grouped = {}
        for i in range(len(self.parent)):
            grouped.setdefault(self.find(i), []).append(i)
        return sorted((tuple(block) for block in grouped.values()), key=lambda block: block[0])

    def __len__(self):
        return sum(1 for i in range(len(self.parent)) if self.find(i) == i)


def find_orbits(generators, size, action):
    """Orbits of the group generated by ``generators`` acting on range(size) via action(g, i)."""
    uf = UnionFind(size)
    for g in generators:
        for i in range(size):
            uf.union(i, action(g, i))
    return uf.blocks()
