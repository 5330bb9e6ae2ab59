"""Recognise the component shapes that occur in commuting graphs.

Three shapes are handled: complete graphs K_S, generalised windmills
W(K_S, U, t) (a core clique U, t blade cliques each joined to every core
vertex, no edges between blades) and unions of cliques that cover every edge
of a component.

The functions accept any graph object exposing ``neighbors(u) -> set`` and
``is_clique(vertices) -> bool``; :class:`~lcg.graph.CommutingGraph` answers
both through centraliser kernels and :class:`SimpleGraph` through an explicit
adjacency map.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, field
from itertools import combinations

from .errors import NotWindmill


@dataclass(frozen=True)
class Complete:
    size: int
    kind: str = field(default="complete", init=False)


@dataclass(frozen=True)
class Windmill:
    core_size: int
    blade_size: int
    blade_count: int
    kind: str = field(default="windmill", init=False)

    def __post_init__(self):
        if min(self.core_size, self.blade_size) < 1 or self.blade_count < 2:
            raise ValueError(f"invalid windmill parameters {self}")

    @property
    def size(self) -> int:
        return self.core_size + self.blade_size * self.blade_count


@dataclass(frozen=True)
class CliqueUnion:
    clique_sizes: tuple  # sorted (size, count) pairs over distinct cliques
    intersection_sizes: tuple  # sorted distinct sizes of pairwise intersections
    kind: str = field(default="clique_union", init=False)

    @classmethod
    def from_cliques(cls, cliques) -> CliqueUnion:
        distinct = _distinct(cliques)
        sizes = tuple(sorted(Counter(len(c) for c in distinct).items()))
        inter = tuple(sorted({len(a & b) for a, b in combinations(distinct, 2)}))
        return cls(sizes, inter)


ShapeSpec = Complete | Windmill | CliqueUnion


def shape_to_dict(spec) -> dict:
    d = asdict(spec)
    for key, val in d.items():
        if isinstance(val, tuple):
            d[key] = [list(x) if isinstance(x, tuple) else x for x in val]
    return d


@dataclass
class ShapeReport:
    matched: bool
    expected: dict
    detected: dict
    mismatch: str | None = None

    def to_dict(self) -> dict:
        return {
            "matched": self.matched,
            "expected": self.expected,
            "detected": self.detected,
            "mismatch": self.mismatch,
        }


@dataclass
class WindmillStructure:
    core: tuple
    blades: list  # list of sorted tuples, ordered by smallest member

    @property
    def uniform(self) -> bool:
        return len({len(b) for b in self.blades}) == 1

    def parameters(self) -> dict:
        sizes = sorted(len(b) for b in self.blades)
        return {
            "core_size": len(self.core),
            "blade_size": sizes[0] if self.uniform else None,
            "blade_sizes": sizes,
            "blade_count": len(self.blades),
        }


class SimpleGraph:
    """Undirected graph given by an explicit adjacency map."""

    def __init__(self, vertices=(), edges=()):
        self.adj: dict[int, set[int]] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                continue
            self.adj.setdefault(u, set()).add(v)
            self.adj.setdefault(v, set()).add(u)

    def vertices(self):
        return sorted(self.adj)

    def neighbors(self, u) -> set:
        return set(self.adj[u])

    def adjacent(self, u, v) -> bool:
        return v in self.adj[u]

    def is_clique(self, vertices) -> bool:
        vs = list(vertices)
        return all(len(self.adj[u] & set(vs)) == len(vs) - 1 for u in vs)


def windmill_graph(core_size: int, blade_size: int, blade_count: int) -> SimpleGraph:
    """W(K_S, K_U, t) with core vertices 0..core_size-1 followed by the blades."""
    core = list(range(core_size))
    blades = [
        list(range(core_size + b * blade_size, core_size + (b + 1) * blade_size))
        for b in range(blade_count)
    ]
    edges = list(combinations(core, 2))
    for blade in blades:
        edges += list(combinations(blade, 2))
        edges += [(c, x) for c in core for x in blade]
    return SimpleGraph(core + [x for b in blades for x in b], edges)


def _distinct(sets):
    seen, out = set(), []
    for s in sets:
        fs = frozenset(s)
        if fs not in seen:
            seen.add(fs)
            out.append(fs)
    return out


def check_complete(g, comp, expected_size: int) -> ShapeReport:
    comp = sorted(comp)
    expected = shape_to_dict(Complete(expected_size))
    complete = g.is_clique(comp)
    detected = {"kind": "complete" if complete else "not_complete", "size": len(comp)}
    if len(comp) != expected_size:
        return ShapeReport(False, expected, detected, f"size {len(comp)} != {expected_size}")
    if not complete:
        return ShapeReport(False, expected, detected, "component has a non-adjacent pair")
    return ShapeReport(True, expected, detected)


def detect_windmill(g, comp) -> WindmillStructure:
    """Split ``comp`` into its universal vertices and the blades around them.

    Raises :class:`NotWindmill` if there is no universal vertex, fewer than
    two blades, or some blade plus the core is not a clique.
    """
    members = set(int(v) for v in comp)
    nbrs = {u: g.neighbors(u) & members for u in members}
    core = sorted(u for u in members if len(nbrs[u]) == len(members) - 1)
    if not core:
        raise NotWindmill("no vertex is adjacent to every other vertex")
    rest = members.difference(core)
    # blades are the connected components of the subgraph induced on rest
    blades: list[list[int]] = []
    unvisited = set(rest)
    while unvisited:
        start = min(unvisited)
        unvisited.discard(start)
        stack, blade = [start], [start]
        while stack:
            u = stack.pop()
            for v in nbrs[u]:
                if v in unvisited:
                    unvisited.discard(v)
                    stack.append(v)
                    blade.append(v)
        blades.append(sorted(blade))
    if len(blades) < 2:
        raise NotWindmill(f"blade count {len(blades)}; a windmill needs at least 2")
    for blade in blades:
        if not g.is_clique(core + blade):
            raise NotWindmill(f"blade starting at {blade[0]} together with the core is not a clique")
    blades.sort()
    return WindmillStructure(tuple(core), [tuple(b) for b in blades])


def check_windmill(g, comp, expected: Windmill, core=None, blades=None) -> ShapeReport:
    """Match ``comp`` against W(K_S, U, t); optional ``core``/``blades`` must match as sets."""
    exp = shape_to_dict(expected)
    try:
        found = detect_windmill(g, comp)
    except NotWindmill as exc:
        return ShapeReport(False, exp, {"kind": "not_windmill", "reason": exc.reason}, exc.reason)
    det = {"kind": "windmill", **found.parameters()}
    if not found.uniform:
        return ShapeReport(False, exp, det, f"blade sizes differ: {det['blade_sizes']}")
    got = (len(found.core), len(found.blades[0]), len(found.blades))
    want = (expected.core_size, expected.blade_size, expected.blade_count)
    if got != want:
        return ShapeReport(False, exp, det, f"(core, blade, count) {got} != {want}")
    if core is not None and set(found.core) != set(core):
        return ShapeReport(False, exp, det, "core vertex set differs from prediction")
    if blades is not None and {frozenset(b) for b in found.blades} != {frozenset(b) for b in blades}:
        return ShapeReport(False, exp, det, "blade vertex sets differ from prediction")
    return ShapeReport(True, exp, det)


def check_clique_union(g, comp, cliques, expected: CliqueUnion | None = None) -> ShapeReport:
    """Whether ``cliques`` are cliques covering every vertex and every edge of ``comp``."""
    members = set(int(v) for v in comp)
    distinct = _distinct(cliques)
    spec = CliqueUnion.from_cliques(distinct)
    exp = shape_to_dict(expected or spec)
    det = shape_to_dict(spec)
    if set().union(*distinct) != members:
        return ShapeReport(False, exp, det, "cliques do not cover exactly the component")
    for i, c in enumerate(distinct):
        if not g.is_clique(sorted(c)):
            return ShapeReport(False, exp, det, f"listed set {i} (size {len(c)}) is not a clique")
    containing: dict[int, list[int]] = {v: [] for v in members}
    for i, c in enumerate(distinct):
        for v in c:
            containing[v].append(i)
    for u in sorted(members):
        covered = set().union(*(distinct[i] for i in containing[u]))
        missed = (g.neighbors(u) & members) - covered
        if missed:
            return ShapeReport(False, exp, det, f"edge ({u}, {min(missed)}) lies in no listed clique")
    if expected is not None and spec != expected:
        return ShapeReport(False, exp, det, "clique sizes or intersections differ from prediction")
    return ShapeReport(True, exp, det)


def check_shape(g, comp, spec, parts=None) -> ShapeReport:
    """Dispatch on the kind of ``spec``; ``parts`` carries predicted vertex sets."""
    if isinstance(spec, Complete):
        return check_complete(g, comp, spec.size)
    if isinstance(spec, Windmill):
        core, blades = parts if parts is not None else (None, None)
        return check_windmill(g, comp, spec, core, blades)
    if isinstance(spec, CliqueUnion):
        return check_clique_union(g, comp, parts, spec)
    raise TypeError(f"unknown shape {spec!r}")
