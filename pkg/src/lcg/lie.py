"""Lie algebras over GF(q) given by structure constants.

``[e_i, e_j] = sum_k c_ij^k e_k`` is stored only for the listed pairs
(1-based, normalised to i < j); every other bracket of basis vectors is
zero.  The Jacobi identity is checked on all basis triples when an algebra
is built, so a :class:`LieAlgebra` instance is always a genuine Lie algebra.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

from .errors import DimensionMismatch, FieldMismatch, IndexOutOfRange, JacobiViolation
from .field import FieldElement, FieldSpec, parse_field
from .linalg import Subspace, Vector, full_space, kernel, lin_comb, span, unit_vector


def _as_index(F: FieldSpec, c) -> int:
    if isinstance(c, FieldElement):
        if c.spec != F:
            raise FieldMismatch(f"coefficient from {c.spec} used in {F}")
        return c.value
    c = int(c)
    if not 0 <= c < F.q:
        raise ValueError(f"field-element index {c} out of range for {F}")
    return c


@dataclass(frozen=True)
class LieAlgebra:
    field: FieldSpec
    n: int
    brackets: tuple  # ((i, j), coeffs) with 1 <= i < j <= n, sorted by pair
    name: str = field(default="", compare=False)

    def __post_init__(self):
        F, n = self.field, self.n
        table = [[None] * n for _ in range(n)]
        for (i, j), coeffs in self.brackets:
            table[i - 1][j - 1] = coeffs
            table[j - 1][i - 1] = tuple(F.neg(c) for c in coeffs)
        # nonzero[i][j] lists (k, c_ij^k) with c != 0, 0-based, both orders
        nonzero = [
            [[(k, c) for k, c in enumerate(table[i][j]) if c] if table[i][j] else [] for j in range(n)]
            for i in range(n)
        ]
        object.__setattr__(self, "_nonzero", nonzero)

    def __str__(self):
        return self.name or f"LieAlgebra(dim {self.n} over {self.field})"

    @property
    def dim(self) -> int:
        return self.n

    def structure_constant(self, i: int, j: int) -> Vector:
        """[e_i, e_j] for 1-based i, j."""
        out = [0] * self.n
        for k, c in self._nonzero[i - 1][j - 1]:
            out[k] = c
        return tuple(out)

    def bracket(self, x: Vector, y: Vector) -> Vector:
        return bracket(self, x, y)

    def basis(self) -> list[Vector]:
        return [unit_vector(self.n, i) for i in range(self.n)]


def lie_make(field: FieldSpec, n: int, entries, name: str = "", check: bool = True) -> LieAlgebra:
    """Build and validate an algebra from ``(i, j, coeffs)`` triples.

    Pairs with i > j are accepted and stored as ``(j, i, -coeffs)``.
    ``coeffs`` may hold field-element indices or :class:`FieldElement` values.
    """
    F = field
    if n < 1:
        raise DimensionMismatch("dimension must be positive")
    table = {}
    for i, j, coeffs in entries:
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise IndexOutOfRange(f"bracket index pair ({i}, {j}) invalid for dimension {n}")
        if len(coeffs) != n:
            raise DimensionMismatch(f"[e{i}, e{j}] has {len(coeffs)} coefficients, expected {n}")
        cs = tuple(_as_index(F, c) for c in coeffs)
        if i > j:
            i, j, cs = j, i, tuple(F.neg(c) for c in cs)
        if (i, j) in table:
            raise ValueError(f"bracket [e{i}, e{j}] given twice")
        if any(cs):
            table[(i, j)] = cs
    L = LieAlgebra(F, n, tuple(sorted(table.items())), name)
    if check:
        check_jacobi(L)
    return L


def bracket(L: LieAlgebra, x: Vector, y: Vector) -> Vector:
    n = L.n
    if len(x) != n or len(y) != n:
        raise DimensionMismatch(f"vectors must have length {n}")
    F = L.field
    a, mu, ng = F._add, F._mul, F._neg
    out = [0] * n
    for (i, j), coeffs in L.brackets:
        i -= 1
        j -= 1
        s = a[mu[x[i]][y[j]]][ng[mu[x[j]][y[i]]]]
        if s:
            row = mu[s]
            for k, c in enumerate(coeffs):
                if c:
                    out[k] = a[out[k]][row[c]]
    return tuple(out)


def check_jacobi(L: LieAlgebra):
    """Raise :class:`JacobiViolation` for the first failing basis triple."""
    F, n = L.field, L.n
    E = L.basis()
    for i, j, k in combinations(range(n), 3):
        x, y, z = E[i], E[j], E[k]
        terms = (
            bracket(L, x, bracket(L, y, z)),
            bracket(L, y, bracket(L, z, x)),
            bracket(L, z, bracket(L, x, y)),
        )
        total = lin_comb(F, (1, 1, 1), terms, n)
        if any(total):
            raise JacobiViolation(i + 1, j + 1, k + 1, total)


def adjoint(L: LieAlgebra, u: Vector) -> list[list[int]]:
    """Matrix of x -> [u, x]; column j is [u, e_j]."""
    n = L.n
    F = L.field
    a, mu = F._add, F._mul
    m = [[0] * n for _ in range(n)]
    nz = L._nonzero
    for i, ui in enumerate(u):
        if not ui:
            continue
        row_u = mu[ui]
        for j in range(n):
            for k, c in nz[i][j]:
                m[k][j] = a[m[k][j]][row_u[c]]
    return m


def adjoint_kernel(L: LieAlgebra, u: Vector) -> Subspace:
    """Centraliser of ``u``: all x with [u, x] = 0."""
    return kernel(L.field, adjoint(L, u), L.n)


def center(L: LieAlgebra) -> Subspace:
    rows = []
    for e in L.basis():
        rows.extend(adjoint(L, e))
    return kernel(L.field, rows, L.n)


def is_abelian(L: LieAlgebra, s: Subspace) -> bool:
    """Whether the bracket vanishes on ``s``."""
    return all(not any(bracket(L, x, y)) for x, y in combinations(s.basis, 2))


def derived_algebra(L: LieAlgebra) -> Subspace:
    return span(L.field, L.n, [c for _, c in L.brackets])


def derived_series(L: LieAlgebra) -> list[Subspace]:
    """[L, L^1, L^2, ...] up to the first repeated term."""
    series = [full_space(L.field, L.n)]
    while True:
        b = series[-1].basis
        nxt = span(L.field, L.n, [bracket(L, x, y) for x, y in combinations(b, 2)])
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.dim == 0:
            return series


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L)[-1].dim == 0


def is_one_step_solvable(L: LieAlgebra) -> bool:
    return is_abelian(L, derived_algebra(L))


def direct_sum(L1: LieAlgebra, L2: LieAlgebra, name: str = "") -> LieAlgebra:
    if L1.field != L2.field:
        raise FieldMismatch(f"cannot sum algebras over {L1.field} and {L2.field}")
    n1, n = L1.n, L1.n + L2.n
    entries = [(i, j, c + (0,) * L2.n) for (i, j), c in L1.brackets]
    entries += [(i + n1, j + n1, (0,) * n1 + c) for (i, j), c in L2.brackets]
    return lie_make(L1.field, n, entries, name=name or f"{L1} + {L2}")


def abelian(field: FieldSpec, n: int) -> LieAlgebra:
    return lie_make(field, n, [], name=f"F^{n}")


# -- JSON algebra format ----------------------------------------------------

def algebra_from_dict(doc: dict) -> LieAlgebra:
    """Parse ``{"field": "p^k", "poly": [...], "dim": n, "brackets": [...]}``.

    Missing keys or wrongly typed values raise ``ValueError``.
    """
    try:
        F = parse_field(str(doc["field"]), doc.get("poly"))
        entries = [(b["i"], b["j"], b["coeffs"]) for b in doc.get("brackets", [])]
        n = int(doc["dim"])
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"malformed algebra document: {exc!r}") from exc
    return lie_make(F, n, entries, name=doc.get("name", ""))


def algebra_to_dict(L: LieAlgebra) -> dict:
    doc = {"field": L.field.label()}
    if L.field.k > 1:
        doc["poly"] = list(L.field.modulus)
    doc["dim"] = L.n
    doc["brackets"] = [{"i": i, "j": j, "coeffs": list(c)} for (i, j), c in L.brackets]
    if L.name:
        doc["name"] = L.name
    return doc


def load_algebra(path) -> LieAlgebra:
    return algebra_from_dict(json.loads(Path(path).read_text()))


__all__ = [
    "LieAlgebra",
    "lie_make",
    "bracket",
    "check_jacobi",
    "adjoint",
    "adjoint_kernel",
    "center",
    "is_abelian",
    "derived_algebra",
    "derived_series",
    "is_solvable",
    "is_one_step_solvable",
    "direct_sum",
    "abelian",
    "algebra_from_dict",
    "algebra_to_dict",
    "load_algebra",
]
