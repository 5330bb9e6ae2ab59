"""The solvable Lie algebras of dimension <= 4 and their commuting-graph predictions.

Each entry knows its structure constants, the side conditions on its
parameters, its center, the closed-form number of connected components over
GF(q), and an enumerator that writes every predicted component out as an
explicit set of vertex indices together with its expected shape.

Parameters are field-element indices (``alpha`` first, then ``beta``).
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .errors import ConditionViolated, UnsatisfiableOverFiniteField
from .field import FieldElement, FieldSpec, quadratic_has_root
from .graph import VertexIndexer
from .lie import LieAlgebra, lie_make
from .linalg import Subspace, enumerate_array, span
from .shapes import CliqueUnion, Complete, Windmill


@dataclass(frozen=True)
class AlgebraId:
    name: str
    params: tuple = ()

    def __str__(self):
        if not self.params:
            return self.name
        slots = CATALOG[self.name].slots if self.name in CATALOG else ("alpha", "beta")
        inner = ",".join(f"{s}={p}" for s, p in zip(slots, self.params))
        return f"{self.name}({inner})"

    def to_dict(self) -> dict:
        entry = CATALOG[self.name]
        return {"id": self.name, "params": dict(zip(entry.slots, self.params))}


@dataclass(frozen=True)
class PredictedComponent:
    family: str
    shape: Complete | Windmill | CliqueUnion
    vertices: frozenset
    parts: object = None  # cliques for CliqueUnion, (core, blades) for Windmill


@dataclass
class Prediction:
    algebra: AlgebraId
    field: FieldSpec
    n: int
    cc_count: int
    cc_formula: str
    center: Subspace
    components: list[PredictedComponent]

    @property
    def vertex_count(self) -> int:
        return self.field.q**self.n - self.field.q**self.center.dim

    @property
    def sizes(self) -> Counter:
        return Counter(len(c.vertices) for c in self.components)

    def size_multiset(self) -> list[tuple[int, int]]:
        return sorted(self.sizes.items())

    def families(self) -> list[tuple[str, str, int]]:
        """(family description, shape kind, multiplicity) in enumeration order."""
        counts = Counter(c.family for c in self.components)
        kinds = {c.family: c.shape.kind for c in self.components}
        order = list(dict.fromkeys(c.family for c in self.components))
        return [(f, kinds[f], counts[f]) for f in order]

    def partition_problems(self) -> list[str]:
        """Ways in which the predicted vertex sets fail to partition V_L."""
        problems = []
        if len(self.components) != self.cc_count:
            problems.append(f"{len(self.components)} enumerated components, closed form gives {self.cc_count}")
        seen: dict[frozenset, int] = {}
        for i, c in enumerate(self.components):
            if c.vertices in seen:
                problems.append(f"component {i} ({c.family}) repeats component {seen[c.vertices]}")
            else:
                seen[c.vertices] = i
        total = sum(len(c.vertices) for c in self.components)
        union = set().union(*(c.vertices for c in self.components)) if self.components else set()
        if total != len(union):
            problems.append(f"predicted components overlap ({total} listed, {len(union)} distinct)")
        if len(union) != self.vertex_count:
            problems.append(f"predicted components cover {len(union)} of {self.vertex_count} vertices")
        return problems


# -- entry table --------------------------------------------------------------

@dataclass(frozen=True)
class Entry:
    name: str
    label: str  # conventional name, e.g. N_{4,8,a}
    dim: int
    slots: tuple
    brackets_text: str
    conditions_text: str
    brackets: Callable  # (F, *params) -> [(i, j, coeffs)]
    condition: Callable  # (F, *params) -> None, raises ConditionViolated
    center: Callable  # (F, *params) -> [vectors]
    count: Callable  # (q, F, *params) -> (int, formula)
    predict: Callable  # (ctx, *params) -> [PredictedComponent]
    decomposes_as: Callable | None = field(default=None)  # (*params) -> (name, params, k) or None


CATALOG: dict[str, Entry] = {}


def _register(**kw):
    entry = Entry(**kw)
    CATALOG[entry.name] = entry
    return entry


def _v(F: FieldSpec, *coeffs) -> tuple:
    """Vector from integer constants or field-element indices wrapped in _E."""
    return tuple(c.i if isinstance(c, _E) else F.from_int(c) for c in coeffs)


@dataclass(frozen=True)
class _E:
    """Marks a value that is already a field-element index (not an integer)."""

    i: int


def _lin(F, terms, n):
    """sum of c * e_k for (c, k) in terms; c is a field-element index, k 1-based."""
    out = [0] * n
    for c, k in terms:
        out[k - 1] = F.add(out[k - 1], c)
    return tuple(out)


class _Ctx:
    """Helpers for writing component families as explicit vertex sets."""

    def __init__(self, F: FieldSpec, n: int, center_gens):
        self.F = F
        self.n = n
        self.q = F.q
        self.indexer = VertexIndexer(F.q, n)
        self.Z = span(F, n, center_gens)
        self._z = enumerate_array(self.Z)

    def e(self, k: int) -> tuple:
        return tuple(1 if j == k - 1 else 0 for j in range(self.n))

    def lin(self, *terms) -> tuple:
        """lin((c1, k1), (c2, k2), ...) = c1 e_k1 + c2 e_k2 + ..."""
        return _lin(self.F, terms, self.n)

    def punctured(self, gens, plus=None) -> frozenset:
        """(span(gens) minus 0) + plus, with ``plus`` defaulting to the center."""
        F = self.F
        S = enumerate_array(span(F, self.n, gens))[1:]
        Z = self._z if plus is None else enumerate_array(span(F, self.n, plus))
        sums = F.add_table[S[:, None, :], Z[None, :, :]].reshape(-1, self.n)
        return frozenset(self.indexer.encode_array(sums).tolist())

    def complete(self, family, gens, plus=None) -> PredictedComponent:
        verts = self.punctured(gens, plus)
        return PredictedComponent(family, Complete(len(verts)), verts)

    def mus(self, r: int):
        return itertools.product(range(self.q), repeat=r)


# dimension 2 and 3 ---------------------------------------------------------------

def _no_condition(F, *params):
    return None


def _one_step_count(q, d1):
    return q**d1 + 1


def _n2_predict(c: _Ctx):
    out = [c.complete("K<e1>#", [c.e(1)])]
    out += [c.complete("K<mu e1 + e2>#", [c.lin((m, 1), (1, 2))]) for (m,) in c.mus(1)]
    return out


_register(
    name="N2",
    label="N_2",
    dim=2,
    slots=(),
    brackets_text="[e1,e2]=e1",
    conditions_text="",
    brackets=lambda F: [(1, 2, _v(F, 1, 0))],
    condition=_no_condition,
    center=lambda F: [],
    count=lambda q, F: (q + 1, "q+1"),
    predict=_n2_predict,
)


def _plane_plus_lines_predict(c: _Ctx):
    out = [c.complete("K<e1,e2>#", [c.e(1), c.e(2)])]
    out += [
        c.complete("K<mu1 e1 + mu2 e2 + e3>#", [c.lin((a, 1), (b, 2), (1, 3))])
        for a, b in c.mus(2)
    ]
    return out


_register(
    name="N3_1",
    label="N_{3,1}",
    dim=3,
    slots=(),
    brackets_text="[e3,e1]=e1, [e3,e2]=e2",
    conditions_text="",
    brackets=lambda F: [(3, 1, _v(F, 1, 0, 0)), (3, 2, _v(F, 0, 1, 0))],
    condition=_no_condition,
    center=lambda F: [],
    count=lambda q, F: (q**2 + 1, "q^2+1"),
    predict=_plane_plus_lines_predict,
)


def _n32_predict(c: _Ctx, a):
    if a != 0:
        return _plane_plus_lines_predict(c)
    out = [c.complete("K<e2># + <e1-e2>", [c.e(2)])]
    out += [c.complete("K<e3 + mu e2># + <e1-e2>", [c.lin((1, 3), (m, 2))]) for (m,) in c.mus(1)]
    return out


_register(
    name="N3_2",
    label="N_{3,2,a}",
    dim=3,
    slots=("alpha",),
    brackets_text="[e3,e1]=e2, [e3,e2]=a e1+e2",
    conditions_text="",
    brackets=lambda F, a: [(3, 1, _v(F, 0, 1, 0)), (3, 2, _v(F, _E(a), 1, 0))],
    condition=_no_condition,
    center=lambda F, a: [_v(F, 1, -1, 0)] if a == 0 else [],
    count=lambda q, F, a: (q + 1, "q+1") if a == 0 else (q**2 + 1, "q^2+1"),
    predict=_n32_predict,
)


def _n33_predict(c: _Ctx, a):
    if a != 0:
        return _plane_plus_lines_predict(c)
    out = [c.complete("K<e1># + <e2>", [c.e(1)])]
    out += [c.complete("K<mu e1 + e3># + <e2>", [c.lin((m, 1), (1, 3))]) for (m,) in c.mus(1)]
    return out


_register(
    name="N3_3",
    label="N_{3,3,a}",
    dim=3,
    slots=("alpha",),
    brackets_text="[e3,e1]=e2, [e3,e2]=a e1",
    conditions_text="",
    brackets=lambda F, a: [(3, 1, _v(F, 0, 1, 0)), (3, 2, _v(F, _E(a), 0, 0))],
    condition=_no_condition,
    center=lambda F, a: [_v(F, 0, 1, 0)] if a == 0 else [],
    count=lambda q, F, a: (q + 1, "q+1") if a == 0 else (q**2 + 1, "q^2+1"),
    predict=_n33_predict,
)


# dimension 4 ----------------------------------------------------------------------

def _space_plus_lines_predict(c: _Ctx):
    """K<e1,e2,e3># and K<mu1 e1 + mu2 e2 + mu3 e3 + e4>#."""
    out = [c.complete("K<e1,e2,e3>#", [c.e(1), c.e(2), c.e(3)])]
    out += [
        c.complete("K<mu1 e1 + mu2 e2 + mu3 e3 + e4>#", [c.lin((a, 1), (b, 2), (d, 3), (1, 4))])
        for a, b, d in c.mus(3)
    ]
    return out


_register(
    name="N4_1",
    label="N_{4,1}",
    dim=4,
    slots=(),
    brackets_text="[e4,e1]=e1, [e4,e2]=e2, [e4,e3]=e3",
    conditions_text="",
    brackets=lambda F: [(4, 1, _v(F, 1, 0, 0, 0)), (4, 2, _v(F, 0, 1, 0, 0)), (4, 3, _v(F, 0, 0, 1, 0))],
    condition=_no_condition,
    center=lambda F: [],
    count=lambda q, F: (q**3 + 1, "q^3+1"),
    predict=_space_plus_lines_predict,
)


def _n42_predict(c: _Ctx, a):
    if a != 0:
        return _space_plus_lines_predict(c)
    out = [c.complete("K<e1,e3># + <e2-e3>", [c.e(1), c.e(3)])]
    out += [
        c.complete("K<mu1 e1 + mu3 e3 + e4># + <e2-e3>", [c.lin((m1, 1), (m3, 3), (1, 4))])
        for m1, m3 in c.mus(2)
    ]
    return out


_register(
    name="N4_2",
    label="N_{4,2,a}",
    dim=4,
    slots=("alpha",),
    brackets_text="[e4,e1]=e1, [e4,e2]=e3, [e4,e3]=-a e2+(a+1) e3",
    conditions_text="",
    brackets=lambda F, a: [
        (4, 1, _v(F, 1, 0, 0, 0)),
        (4, 2, _v(F, 0, 0, 1, 0)),
        (4, 3, _v(F, 0, _E(F.neg(a)), _E(F.add(a, 1)), 0)),
    ],
    condition=_no_condition,
    center=lambda F, a: [_v(F, 0, 1, -1, 0)] if a == 0 else [],
    count=lambda q, F, a: (q**2 + 1, "q^2+1") if a == 0 else (q**3 + 1, "q^3+1"),
    predict=_n42_predict,
    decomposes_as=lambda a: ("N3_1", (), 1) if a == 0 else None,
)


def _n43_predict(c: _Ctx):
    out = [c.complete("K<e3># + <e1,e2-e3>", [c.e(3)])]
    out += [c.complete("K<mu3 e3 + e4># + <e1,e2-e3>", [c.lin((m, 3), (1, 4))]) for (m,) in c.mus(1)]
    return out


_register(
    name="N4_3",
    label="N_{4,3}",
    dim=4,
    slots=(),
    brackets_text="[e4,e2]=e3, [e4,e3]=e3",
    conditions_text="",
    brackets=lambda F: [(4, 2, _v(F, 0, 0, 1, 0)), (4, 3, _v(F, 0, 0, 1, 0))],
    condition=_no_condition,
    center=lambda F: [_v(F, 1, 0, 0, 0), _v(F, 0, 1, -1, 0)],
    count=lambda q, F: (q + 1, "q+1"),
    predict=_n43_predict,
    decomposes_as=lambda: ("N2", (), 2),
)


def _n44_predict(c: _Ctx):
    out = [c.complete("K<e2># + <e1,e3>", [c.e(2)])]
    out += [c.complete("K<mu2 e2 + e4># + <e1,e3>", [c.lin((m, 2), (1, 4))]) for (m,) in c.mus(1)]
    return out


_register(
    name="N4_4",
    label="N_{4,4}",
    dim=4,
    slots=(),
    brackets_text="[e4,e2]=e3",
    conditions_text="",
    brackets=lambda F: [(4, 2, _v(F, 0, 0, 1, 0))],
    condition=_no_condition,
    center=lambda F: [_v(F, 1, 0, 0, 0), _v(F, 0, 0, 1, 0)],
    count=lambda q, F: (q + 1, "q+1"),
    predict=_n44_predict,
    decomposes_as=lambda: ("N3_3", (0,), 1),
)


def _n45_predict(c: _Ctx, a, b):
    if a != 0:
        return _space_plus_lines_predict(c)
    if b == 0:
        out = [c.complete("K<e1,e2># + <e2-e3>", [c.e(1), c.e(2)])]
        out += [
            c.complete("K<mu1 e1 + mu2 e2 + e4># + <e2-e3>", [c.lin((m1, 1), (m2, 2), (1, 4))])
            for m1, m2 in c.mus(2)
        ]
        return out
    out = [c.complete("K<e2,e3># + <b e1 + e2 - e3>", [c.e(2), c.e(3)])]
    out += [
        c.complete("K<mu2 e2 + mu3 e3 + e4># + <b e1 + e2 - e3>", [c.lin((m2, 2), (m3, 3), (1, 4))])
        for m2, m3 in c.mus(2)
    ]
    return out


def _one_step_4d_count(q, F, a, b):
    return (q**2 + 1, "q^2+1") if a == 0 else (q**3 + 1, "q^3+1")


_register(
    name="N4_5",
    label="N_{4,5,a,b}",
    dim=4,
    slots=("alpha", "beta"),
    brackets_text="[e4,e1]=e2, [e4,e2]=e3, [e4,e3]=a e1+b e2+e3",
    conditions_text="",
    brackets=lambda F, a, b: [
        (4, 1, _v(F, 0, 1, 0, 0)),
        (4, 2, _v(F, 0, 0, 1, 0)),
        (4, 3, _v(F, _E(a), _E(b), 1, 0)),
    ],
    condition=_no_condition,
    center=lambda F, a, b: [_v(F, _E(b), 1, -1, 0)] if a == 0 else [],
    count=_one_step_4d_count,
    predict=_n45_predict,
    decomposes_as=lambda a, b: ("N3_2", (b,), 1) if a == 0 else None,
)


def _n46_predict(c: _Ctx, a, b):
    if a != 0:
        return _space_plus_lines_predict(c)
    if b == 0:
        out = [c.complete("K<e1,e2># + <e3>", [c.e(1), c.e(2)])]
        out += [
            c.complete("K<mu1 e1 + mu2 e2 + e4># + <e3>", [c.lin((m1, 1), (m2, 2), (1, 4))])
            for m1, m2 in c.mus(2)
        ]
        return out
    out = [c.complete("K<e2,e3># + <b e1 - e3>", [c.e(2), c.e(3)])]
    out += [
        c.complete("K<mu2 e2 + mu3 e3 + e4># + <b e1 - e3>", [c.lin((m2, 2), (m3, 3), (1, 4))])
        for m2, m3 in c.mus(2)
    ]
    return out


_register(
    name="N4_6",
    label="N_{4,6,a,b}",
    dim=4,
    slots=("alpha", "beta"),
    brackets_text="[e4,e1]=e2, [e4,e2]=e3, [e4,e3]=a e1+b e2",
    conditions_text="",
    brackets=lambda F, a, b: [
        (4, 1, _v(F, 0, 1, 0, 0)),
        (4, 2, _v(F, 0, 0, 1, 0)),
        (4, 3, _v(F, _E(a), _E(b), 0, 0)),
    ],
    condition=_no_condition,
    center=lambda F, a, b: [_v(F, _E(F.neg(b)), 0, 1, 0)] if a == 0 else [],
    count=_one_step_4d_count,
    predict=_n46_predict,
    decomposes_as=lambda a, b: ("N3_3", (b,), 1) if a == 0 else None,
)


def _n47_predict(c: _Ctx):
    cliques = []
    for m1, m2, m3, m4 in c.mus(4):
        if (m1, m2, m3, m4) == (0, 0, 0, 0):
            continue
        cliques.append(c.punctured([c.lin((m1, 1), (m2, 2)), c.lin((m3, 3), (m4, 4))]))
    verts = frozenset().union(*cliques)
    shape = CliqueUnion.from_cliques(cliques)
    return [PredictedComponent("U K(<mu1 e1 + mu2 e2> + <mu3 e3 + mu4 e4>)#", shape, verts, tuple(cliques))]


_register(
    name="N4_7",
    label="N_{4,7}",
    dim=4,
    slots=(),
    brackets_text="[e1,e2]=e2, [e3,e4]=e4",
    conditions_text="",
    brackets=lambda F: [(1, 2, _v(F, 0, 1, 0, 0)), (3, 4, _v(F, 0, 0, 0, 1))],
    condition=_no_condition,
    center=lambda F: [],
    count=lambda q, F: (1, "1"),
    predict=_n47_predict,
)


def _n48_condition(F, a):
    one = FieldElement(F, 1)
    if quadratic_has_root(-one, -FieldElement(F, a)):
        raise ConditionViolated(f"T^2 - T - alpha has a root in {F} for alpha={a}")


def _n48_predict(c: _Ctx, a):
    F = c.F
    # rootlessness of T^2 - T - alpha forces alpha != 0
    assert a != 0
    out = [
        c.complete("K<e1,e2>#", [c.e(1), c.e(2)]),
        c.complete("K<e3,e4>#", [c.e(3), c.e(4)]),
    ]
    for m3, m4 in c.mus(2):
        r = F.div(m3, a)
        g1 = c.lin((1, 1), (m3, 3), (m4, 4))
        g2 = c.lin((1, 2), (F.sub(m4, r), 3), (r, 4))
        out.append(c.complete("K<e1 + mu3 e3 + mu4 e4, e2 + (mu4 - mu3/a) e3 + (mu3/a) e4>#", [g1, g2]))
    return out


_register(
    name="N4_8",
    label="N_{4,8,a}",
    dim=4,
    slots=("alpha",),
    brackets_text="[e4,e1]=e1+a e2, [e4,e2]=e1, [e3,e1]=e1, [e3,e2]=e2",
    conditions_text="T^2-T-a has no root in F",
    brackets=lambda F, a: [
        (4, 1, _v(F, 1, _E(a), 0, 0)),
        (4, 2, _v(F, 1, 0, 0, 0)),
        (3, 1, _v(F, 1, 0, 0, 0)),
        (3, 2, _v(F, 0, 1, 0, 0)),
    ],
    condition=_n48_condition,
    center=lambda F, a: [],
    count=lambda q, F, a: (q**2 + 2, "q^2+2"),
    predict=_n48_predict,
)


def _n49_condition(F, a):
    raise UnsatisfiableOverFiniteField(
        "N4_9 needs characteristic 2 and alpha not a square; squaring is onto in every "
        "finite field of characteristic 2, so no finite field qualifies"
    )


def _n49_predict(c: _Ctx, a):
    out = [
        c.complete("K<e1,e2>#", [c.e(1), c.e(2)]),
        c.complete("K<e3,e4>#", [c.e(3), c.e(4)]),
    ]
    F = c.F
    for m3, m4 in c.mus(2):
        g1 = c.lin((1, 1), (m3, 3), (m4, 4))
        g2 = c.lin((1, 2), (F.mul(a, m4), 3), (m3, 4))
        out.append(c.complete("K<e1 + mu3 e3 + mu4 e4, e2 + a mu4 e3 + mu3 e4>#", [g1, g2]))
    return out


_register(
    name="N4_9",
    label="N_{4,9,a}",
    dim=4,
    slots=("alpha",),
    brackets_text="[e4,e1]=e2, [e4,e2]=a e1, [e3,e1]=e1, [e3,e2]=e2",
    conditions_text="char F = 2, a not in F^2",
    brackets=lambda F, a: [
        (4, 1, _v(F, 0, 1, 0, 0)),
        (4, 2, _v(F, _E(a), 0, 0, 0)),
        (3, 1, _v(F, 1, 0, 0, 0)),
        (3, 2, _v(F, 0, 1, 0, 0)),
    ],
    condition=_n49_condition,
    center=lambda F, a: [],
    count=lambda q, F, a: (q**2 + 2, "q^2+2"),
    predict=_n49_predict,
)


def _n410_condition(F, a, b):
    if F.char != 2:
        raise ConditionViolated(f"N4_10 requires characteristic 2, {F} has characteristic {F.char}")
    if a == 0:
        raise ConditionViolated("N4_10 requires alpha != 0")
    if b == 1:
        raise ConditionViolated("N4_10 requires beta != 1")
    # alpha*beta is a square here because squaring is onto in characteristic 2


def _n410_predict(c: _Ctx, a, b):
    F = c.F
    g = F.sqrt_index(F.mul(a, b))
    assert g >= 0
    line = c.lin((g, 1), (1, 2))
    cliques = [c.punctured([c.e(1), c.e(2)])]
    for m1, m2 in c.mus(2):
        cliques.append(c.punctured([line, c.lin((m1, 1), (m2, 2), (g, 3), (a, 4))]))
    verts = frozenset().union(*cliques)
    out = [
        PredictedComponent(
            "K<e1,e2># U K(<g e1 + e2> + <mu1 e1 + mu2 e2 + g e3 + a e4>)#",
            CliqueUnion.from_cliques(cliques),
            verts,
            tuple(cliques),
        )
    ]
    out += [c.complete("K<mu1 e1 + mu2 e2 + e3>#", [c.lin((m1, 1), (m2, 2), (1, 3))]) for m1, m2 in c.mus(2)]
    for m1, m2, m3 in c.mus(3):
        if F.mul(a, F.mul(m3, m3)) == b:
            continue
        out.append(c.complete("K<mu1 e1 + mu2 e2 + mu3 e3 + e4># (a mu3^2 != b)", [c.lin((m1, 1), (m2, 2), (m3, 3), (1, 4))]))
    return out


_register(
    name="N4_10",
    label="N_{4,10,a,b}",
    dim=4,
    slots=("alpha", "beta"),
    brackets_text="[e4,e1]=e1, [e3,e1]=e2, [e3,e2]=a e1, [e4,e2]=b e2, [e4,e3]=(1+b) e3",
    conditions_text="char F = 2, a != 0, b != 1 (ab a square: g^2 = ab)",
    brackets=lambda F, a, b: [
        (4, 1, _v(F, 1, 0, 0, 0)),
        (3, 1, _v(F, 0, 1, 0, 0)),
        (3, 2, _v(F, _E(a), 0, 0, 0)),
        (4, 2, _v(F, 0, _E(b), 0, 0)),
        (4, 3, _v(F, 0, 0, _E(F.add(1, b)), 0)),
    ],
    condition=_n410_condition,
    center=lambda F, a, b: [],
    count=lambda q, F, a, b: (q**3 + 1, "q^3+1"),
    predict=_n410_predict,
)


def _windmill_predict(c: _Ctx):
    """W(K_{<e1># + <e2>}, <e2>#, q+1) plus K<mu1 e1 + mu2 e2 + mu3 e3 + e4>#."""
    q = c.q
    e2 = [c.e(2)]
    core = c.punctured(e2, plus=[])
    blades = []
    for m1, m3 in c.mus(2):
        if (m1, m3) == (0, 0):
            continue
        direction = c.lin((m1, 1), (m3, 3))
        # one blade per projective point (mu1 : mu3)
        first = next(x for x in (m1, m3) if x)
        if first != 1:
            continue
        blades.append(c.punctured([direction], plus=e2))
    verts = core.union(*blades)
    shape = Windmill(core_size=q - 1, blade_size=(q - 1) * q, blade_count=q + 1)
    out = [PredictedComponent("W(K_{<e1># + <e2>}, <e2>#, q+1)", shape, verts, (core, tuple(blades)))]
    out += [
        c.complete("K<mu1 e1 + mu2 e2 + mu3 e3 + e4>#", [c.lin((m1, 1), (m2, 2), (m3, 3), (1, 4))])
        for m1, m2, m3 in c.mus(3)
    ]
    return out


def _center_e2_predict(c: _Ctx):
    out = [c.complete("K<e4># + <e2>", [c.e(4)])]
    out += [c.complete("K<e3 + mu4 e4># + <e2>", [c.lin((1, 3), (m, 4))]) for (m,) in c.mus(1)]
    out += [
        c.complete("K<e1 + mu3 e3 + mu4 e4># + <e2>", [c.lin((1, 1), (m3, 3), (m4, 4))])
        for m3, m4 in c.mus(2)
    ]
    return out


def _n411_predict(c: _Ctx):
    return _center_e2_predict(c) if c.F.char == 2 else _windmill_predict(c)


_register(
    name="N4_11",
    label="N_{4,11}",
    dim=4,
    slots=(),
    brackets_text="[e4,e1]=e1, [e3,e1]=e2, [e4,e2]=2 e2, [e4,e3]=e3",
    conditions_text="",
    brackets=lambda F: [
        (4, 1, _v(F, 1, 0, 0, 0)),
        (3, 1, _v(F, 0, 1, 0, 0)),
        (4, 2, _v(F, 0, 2, 0, 0)),
        (4, 3, _v(F, 0, 0, 1, 0)),
    ],
    condition=_no_condition,
    center=lambda F: [_v(F, 0, 1, 0, 0)] if F.char == 2 else [],
    count=lambda q, F: (q**2 + q + 1, "q^2+q+1") if F.char == 2 else (q**3 + 1, "q^3+1"),
    predict=_n411_predict,
)


def _nonzero_alpha(F, a):
    if a == 0:
        raise ConditionViolated("alpha must be nonzero")


_register(
    name="N4_12",
    label="N_{4,12,a}",
    dim=4,
    slots=("alpha",),
    brackets_text="[e3,e1]=e2, [e4,e1]=e1+a e3, [e4,e2]=e2, [e4,e3]=e1",
    conditions_text="a != 0",
    brackets=lambda F, a: [
        (3, 1, _v(F, 0, 1, 0, 0)),
        (4, 1, _v(F, 1, 0, _E(a), 0)),
        (4, 2, _v(F, 0, 1, 0, 0)),
        (4, 3, _v(F, 1, 0, 0, 0)),
    ],
    condition=_nonzero_alpha,
    center=lambda F, a: [],
    count=lambda q, F, a: (q**3 + 1, "q^3+1"),
    predict=lambda c, a: _windmill_predict(c),
)

_register(
    name="N4_13",
    label="N_{4,13,a}",
    dim=4,
    slots=("alpha",),
    brackets_text="[e3,e1]=e2, [e4,e1]=a e3, [e4,e3]=e1",
    conditions_text="a != 0",
    brackets=lambda F, a: [
        (3, 1, _v(F, 0, 1, 0, 0)),
        (4, 1, _v(F, 0, 0, _E(a), 0)),
        (4, 3, _v(F, 1, 0, 0, 0)),
    ],
    condition=_nonzero_alpha,
    center=lambda F, a: [_v(F, 0, 1, 0, 0)],
    count=lambda q, F, a: (q**2 + q + 1, "q^2+q+1"),
    predict=lambda c, a: _center_e2_predict(c),
)


# -- public operations ---------------------------------------------------------

def parse_id(text: str, params=()) -> AlgebraId:
    name = text.strip().upper().replace("N_", "N").replace(",", "_").replace("{", "").replace("}", "")
    if name not in CATALOG:
        raise KeyError(f"unknown algebra {text!r}; known: {', '.join(CATALOG)}")
    return AlgebraId(name, tuple(params))


def _entry(aid: AlgebraId, F: FieldSpec) -> Entry:
    entry = CATALOG.get(aid.name)
    if entry is None:
        raise KeyError(f"unknown algebra {aid.name!r}")
    if len(aid.params) != len(entry.slots):
        raise ValueError(f"{aid.name} takes parameters {entry.slots}, got {aid.params}")
    for p in aid.params:
        if not 0 <= p < F.q:
            raise ValueError(f"parameter index {p} out of range for {F}")
    return entry


def check_admissible(aid: AlgebraId, F: FieldSpec):
    """Raise ConditionViolated / UnsatisfiableOverFiniteField if ``aid`` does not exist over F."""
    _entry(aid, F).condition(F, *aid.params)


def is_admissible(aid: AlgebraId, F: FieldSpec) -> bool:
    try:
        check_admissible(aid, F)
    except ConditionViolated:
        return False
    return True


def instantiate(aid: AlgebraId, F: FieldSpec) -> LieAlgebra:
    entry = _entry(aid, F)
    entry.condition(F, *aid.params)
    return lie_make(F, entry.dim, entry.brackets(F, *aid.params), name=str(aid))


def predicted_cc_count(aid: AlgebraId, q) -> int:
    """Closed-form component count; ``q`` is a cardinality or a FieldSpec."""
    if isinstance(q, FieldSpec):
        F = q
    else:
        from .field import make_field, prime_power

        pk = prime_power(int(q))
        if pk is None:
            raise ValueError(f"{q} is not a prime power")
        F = make_field(*pk)
    entry = _entry(aid, F)
    entry.condition(F, *aid.params)
    return entry.count(F.q, F, *aid.params)[0]


def predicted_center(aid: AlgebraId, F: FieldSpec) -> Subspace:
    entry = _entry(aid, F)
    entry.condition(F, *aid.params)
    return span(F, entry.dim, entry.center(F, *aid.params))


def predicted_components(aid: AlgebraId, F: FieldSpec) -> Prediction:
    entry = _entry(aid, F)
    entry.condition(F, *aid.params)
    gens = entry.center(F, *aid.params)
    ctx = _Ctx(F, entry.dim, gens)
    count, formula = entry.count(F.q, F, *aid.params)
    comps = entry.predict(ctx, *aid.params)
    return Prediction(aid, F, entry.dim, count, formula, ctx.Z, comps)


def admissible_params(name: str, F: FieldSpec) -> list[AlgebraId]:
    """Every parameter tuple (over all field elements) passing the side conditions."""
    entry = CATALOG[name]
    out = []
    for params in itertools.product(range(F.q), repeat=len(entry.slots)):
        aid = AlgebraId(name, params)
        if is_admissible(aid, F):
            out.append(aid)
    return out


def inadmissible_reason(name: str, F: FieldSpec) -> tuple[str, str] | None:
    """(status, reason) when no parameter choice of ``name`` exists over F, else None.

    Only reports entries with no admissible instance at all; single excluded
    parameter values (e.g. alpha = 0 for N4_12) are part of the row's definition.
    """
    entry = CATALOG[name]
    reason = None
    status = "condition_violated"
    for params in itertools.product(range(F.q), repeat=len(entry.slots)):
        try:
            entry.condition(F, *params)
            return None
        except UnsatisfiableOverFiniteField as exc:
            reason, status = exc.reason, "unsatisfiable_over_finite_field"
        except ConditionViolated as exc:
            reason = reason or exc.reason
    return status, reason


def unsatisfiable_branches(F: FieldSpec) -> list[tuple[str, str]]:
    """Component families whose side conditions no finite field meets, as (branch, reason).

    N4_9 is covered by :func:`inadmissible_reason`.  N4_10 splits on whether
    alpha*beta is a square; only the square branch can occur over GF(q), and
    the other branch (q^3 + q^2 + 1 components) is listed here.
    """
    return [
        (
            "N4_10 (alpha*beta not a square)",
            "squaring is onto in every finite field of characteristic 2, so alpha*beta is always a square",
        )
    ]


def decomposition(aid: AlgebraId) -> tuple[AlgebraId, int] | None:
    """(H, k) with ``aid`` isomorphic to H + F^k, for the decomposable rows."""
    entry = CATALOG[aid.name]
    if entry.decomposes_as is None:
        return None
    res = entry.decomposes_as(*aid.params)
    if res is None:
        return None
    name, params, k = res
    return AlgebraId(name, tuple(params)), k


def table_ids() -> list[str]:
    return list(CATALOG)


__all__ = [
    "AlgebraId",
    "CATALOG",
    "Entry",
    "Prediction",
    "PredictedComponent",
    "admissible_params",
    "check_admissible",
    "decomposition",
    "inadmissible_reason",
    "instantiate",
    "is_admissible",
    "parse_id",
    "predicted_cc_count",
    "predicted_center",
    "predicted_components",
    "table_ids",
    "unsatisfiable_branches",
]
