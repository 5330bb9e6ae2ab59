"""Commuting graphs and their connected components.

Vertices are the non-central elements of L, named by their base-q index
(coordinate 1 least significant).  Adjacency is never stored: the neighbours
of u are the non-central elements of ker(ad_u) other than u, which are
enumerated on demand from an RREF kernel basis.
"""
from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from .errors import CommutativeAlgebra, NotAComponent, NotAVertex, TooLarge
from .lie import LieAlgebra, adjoint_kernel, bracket, center
from .linalg import Subspace, Vector, coefficient_grid, contains, enumerate_array, span


class VertexIndexer:
    """Bijection between GF(q)^n and range(q**n) by base-q digits."""

    def __init__(self, q: int, n: int):
        self.q = q
        self.n = n
        self.size = q**n
        self.weights = q ** np.arange(n)

    def encode(self, v: Vector) -> int:
        return int(sum(int(c) * w for c, w in zip(v, self.weights.tolist())))

    def decode(self, index: int) -> Vector:
        return self.coords[index]

    def encode_array(self, vecs: np.ndarray) -> np.ndarray:
        return vecs @ self.weights

    @cached_property
    def coords(self) -> list[Vector]:
        grid = coefficient_grid(self.q, self.n)
        return [tuple(row) for row in grid.tolist()]


class UnionFind:
    """Disjoint sets over range(size): path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.weight = [1] * size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> int:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return rx
        if self.weight[rx] < self.weight[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.weight[rx] += self.weight[ry]
        return rx


@dataclass
class ComponentPartition:
    """Connected components, each a sorted tuple of vertex indices.

    Components are ordered by their smallest member, so two partitions of
    the same graph compare equal regardless of how they were computed.
    """

    components: list[tuple[int, ...]]
    labels: dict[int, int] = field(repr=False)

    @classmethod
    def from_union_find(cls, uf: UnionFind, vertices) -> ComponentPartition:
        groups: dict[int, list[int]] = {}
        for v in vertices:
            groups.setdefault(uf.find(v), []).append(v)
        comps = sorted(tuple(sorted(g)) for g in groups.values())
        labels = {v: cid for cid, comp in enumerate(comps) for v in comp}
        return cls(comps, labels)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other):
        if not isinstance(other, ComponentPartition):
            return NotImplemented
        return self.components == other.components

    @property
    def sizes(self) -> Counter:
        return Counter(len(c) for c in self.components)

    def size_multiset(self) -> list[tuple[int, int]]:
        """Sorted ``(size, count)`` pairs."""
        return sorted(self.sizes.items())

    def component_of(self, v: int) -> tuple[int, ...]:
        return self.components[self.labels[v]]


class CommutingGraph:
    """Gamma(L): vertices L minus Z(L), edges between distinct commuting elements."""

    def __init__(self, algebra: LieAlgebra):
        self.algebra = algebra
        self.field = algebra.field
        self.n = algebra.n
        self.center: Subspace = center(algebra)
        if self.center.dim == self.n:
            raise CommutativeAlgebra(f"{algebra} is abelian; its commuting graph has no vertices")
        self.indexer = VertexIndexer(self.field.q, self.n)
        central = np.zeros(self.indexer.size, dtype=bool)
        central[self.subspace_indices(self.center)] = True
        self.is_central = central
        self.vertex_count = self.indexer.size - self.field.q**self.center.dim
        self._kernels: dict[int, Subspace] = {}

    def __repr__(self):
        return f"CommutingGraph({self.algebra}, vertices={self.vertex_count})"

    # -- vertices --------------------------------------------------------
    def vertices(self) -> np.ndarray:
        return np.flatnonzero(~self.is_central)

    def is_vertex(self, index: int) -> bool:
        return 0 <= index < self.indexer.size and not self.is_central[index]

    def _require_vertex(self, u: int):
        if not self.is_vertex(u):
            raise NotAVertex(f"{u} is not a vertex of {self}")

    def encode(self, v: Vector) -> int:
        return self.indexer.encode(v)

    def decode(self, index: int) -> Vector:
        return self.indexer.decode(index)

    def subspace_indices(self, s: Subspace) -> np.ndarray:
        return self.indexer.encode_array(enumerate_array(s))

    # -- adjacency -------------------------------------------------------
    def centralizer(self, u: int) -> Subspace:
        """ker(ad_u) for the element with index ``u``."""
        K = self._kernels.get(u)
        if K is None:
            K = adjoint_kernel(self.algebra, self.decode(u))
            self._kernels[u] = K
        return K

    def neighbors(self, u: int) -> set[int]:
        self._require_vertex(u)
        idx = self.subspace_indices(self.centralizer(u))
        idx = idx[~self.is_central[idx]]
        out = set(idx.tolist())
        out.discard(u)
        return out

    def adjacent(self, u: int, v: int) -> bool:
        return u != v and contains(self.centralizer(u), self.decode(v))

    def is_clique(self, vertices) -> bool:
        """Whether all distinct pairs in ``vertices`` commute.

        Each member's centraliser must contain the span of the set, a subspace
        test per vertex rather than a test per pair.
        """
        vertices = list(vertices)
        S = span(self.field, self.n, [self.decode(v) for v in vertices])
        return all(all(contains(self.centralizer(u), b) for b in S.basis) for u in vertices)

    @cached_property
    def partition(self) -> ComponentPartition:
        return components(self)


def build_graph(L: LieAlgebra) -> CommutingGraph:
    return CommutingGraph(L)


def neighbors(g: CommutingGraph, u: int) -> set[int]:
    return g.neighbors(u)


def components(g: CommutingGraph) -> ComponentPartition:
    """Connected components from centraliser kernels.

    Every vertex u is joined with all non-central elements of ker(ad_u).
    Vertices whose centraliser equals one already processed are skipped: u
    lies in that kernel, so u and all its neighbours are already merged.
    """
    uf = UnionFind(g.indexer.size)
    central = g.is_central
    seen: set[tuple] = set()
    for u in g.vertices().tolist():
        K = adjoint_kernel(g.algebra, g.decode(u))
        if K.basis in seen:
            continue
        seen.add(K.basis)
        idx = g.subspace_indices(K)
        idx = idx[~central[idx]]
        root = u
        for v in idx.tolist():
            root = uf.union(root, v)
    return ComponentPartition.from_union_find(uf, g.vertices().tolist())


def components_naive(g: CommutingGraph, bound: int = 4096) -> ComponentPartition:
    """Oracle: test [u, v] = 0 for every pair of vertices."""
    if g.vertex_count > bound:
        raise TooLarge(f"{g.vertex_count} vertices exceeds the naive bound {bound}")
    verts = g.vertices().tolist()
    vecs = [g.decode(v) for v in verts]
    L = g.algebra
    uf = UnionFind(g.indexer.size)
    for a in range(len(verts)):
        x = vecs[a]
        for b in range(a + 1, len(verts)):
            if not any(bracket(L, x, vecs[b])):
                uf.union(verts[a], verts[b])
    return ComponentPartition.from_union_find(uf, verts)


def _require_component(g: CommutingGraph, comp) -> tuple[int, ...]:
    comp = tuple(sorted(int(v) for v in comp))
    if not comp or not all(g.is_vertex(v) for v in comp):
        raise NotAComponent("vertex list is empty or contains non-vertices")
    part = g.partition
    if part.component_of(comp[0]) != comp:
        raise NotAComponent("vertex list is not a connected component")
    return comp


def is_component_complete(g: CommutingGraph, comp) -> bool:
    comp = _require_component(g, comp)
    return g.is_clique(comp)


# -- exports ---------------------------------------------------------------

def write_edges_csv(g: CommutingGraph, path) -> int:
    """Write ``u_index,v_index`` rows with u < v; returns the edge count."""
    count = 0
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["u_index", "v_index"])
        for u in g.vertices().tolist():
            for v in sorted(x for x in g.neighbors(u) if x > u):
                w.writerow([u, v])
                count += 1
    return count


def write_labels_csv(g: CommutingGraph, path, partition: ComponentPartition | None = None):
    """Write ``vertex_index,component_id,coordinates`` rows, coordinates space separated."""
    part = partition or g.partition
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["vertex_index", "component_id", "coordinates"])
        for v in g.vertices().tolist():
            w.writerow([v, part.labels[v], " ".join(map(str, g.decode(v)))])
