"""Exact linear algebra over GF(q).

Vectors are tuples of field-element indices and matrices are sequences of
rows.  Every function takes the :class:`~lcg.field.FieldSpec` explicitly.
Subspaces are kept as reduced row-echelon bases, which are unique, so two
:class:`Subspace` objects compare equal exactly when they are the same
subspace.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, FieldMismatch
from .field import FieldSpec

Vector = tuple  # tuple[int, ...] of element indices
Matrix = Sequence[Sequence[int]]


def zero_vector(n: int) -> Vector:
    return (0,) * n


def unit_vector(n: int, i: int) -> Vector:
    """e_i with 0-based ``i``."""
    return tuple(1 if j == i else 0 for j in range(n))


def vec_add(F: FieldSpec, x: Vector, y: Vector) -> Vector:
    a = F._add
    return tuple(a[s][t] for s, t in zip(x, y))


def vec_sub(F: FieldSpec, x: Vector, y: Vector) -> Vector:
    a, ng = F._add, F._neg
    return tuple(a[s][ng[t]] for s, t in zip(x, y))


def vec_scale(F: FieldSpec, c: int, x: Vector) -> Vector:
    m = F._mul[c]
    return tuple(m[s] for s in x)


def lin_comb(F: FieldSpec, coeffs: Iterable[int], vectors: Sequence[Vector], n: int) -> Vector:
    out = [0] * n
    a, mu = F._add, F._mul
    for c, v in zip(coeffs, vectors):
        if c:
            row = mu[c]
            for j, s in enumerate(v):
                if s:
                    out[j] = a[out[j]][row[s]]
    return tuple(out)


def mat_vec(F: FieldSpec, m: Matrix, v: Vector) -> Vector:
    a, mu = F._add, F._mul
    out = []
    for row in m:
        acc = 0
        for s, t in zip(row, v):
            if s and t:
                acc = a[acc][mu[s][t]]
        out.append(acc)
    return tuple(out)


def rref(F: FieldSpec, m: Matrix, ncols: int | None = None):
    """Reduced row-echelon form.

    Returns ``(rows, rank, pivots)`` where ``rows`` has the same shape as
    ``m`` (zero rows last) and ``pivots`` lists the pivot column of each of
    the first ``rank`` rows.
    """
    rows = [list(r) for r in m]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise DimensionMismatch("matrix rows have unequal lengths")
    a, mu, ng, iv = F._add, F._mul, F._neg, F._inv
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r]
        if piv[c] != 1:
            scale = mu[iv[piv[c]]]
            piv = rows[r] = [scale[x] for x in piv]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = mu[ng[rows[i][c]]]
                row = rows[i]
                rows[i] = [a[x][f[y]] if y else x for x, y in zip(row, piv)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in rows], r, pivots


def rank(F: FieldSpec, m: Matrix, ncols: int | None = None) -> int:
    return rref(F, m, ncols)[1]


@dataclass(frozen=True)
class Subspace:
    """Subspace of GF(q)^n stored as its RREF basis."""

    field: FieldSpec
    n: int
    basis: tuple  # tuple[Vector, ...] in RREF

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(b) if x) for b in self.basis)

    @property
    def size(self) -> int:
        return self.field.q**self.dim

    def contains(self, v: Vector) -> bool:
        return contains(self, v)

    __contains__ = contains

    def vectors(self) -> list[Vector]:
        return enumerate_subspace(self)

    def __le__(self, other: Subspace) -> bool:
        return all(contains(other, b) for b in self.basis)

    def __repr__(self):
        return f"Subspace({self.field}, n={self.n}, basis={list(self.basis)})"


def _check_vectors(n: int, vs: Sequence[Vector]):
    for v in vs:
        if len(v) != n:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {n}")


def span(F: FieldSpec, n: int, vectors: Iterable[Vector] = ()) -> Subspace:
    vs = [tuple(v) for v in vectors]
    _check_vectors(n, vs)
    if not vs:
        return Subspace(F, n, ())
    rows, r, _ = rref(F, vs, n)
    return Subspace(F, n, tuple(rows[:r]))


def zero_subspace(F: FieldSpec, n: int) -> Subspace:
    return Subspace(F, n, ())


def full_space(F: FieldSpec, n: int) -> Subspace:
    return Subspace(F, n, tuple(unit_vector(n, i) for i in range(n)))


def kernel(F: FieldSpec, m: Matrix, ncols: int | None = None) -> Subspace:
    """Null space {x : m x = 0}."""
    if ncols is None:
        if not m:
            raise DimensionMismatch("ncols is required for a matrix with no rows")
        ncols = len(m[0])
    if not m:
        return full_space(F, ncols)
    rows, r, pivots = rref(F, m, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    ng = F._neg
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for i, pc in enumerate(pivots):
            x[pc] = ng[rows[i][f]]
        basis.append(tuple(x))
    # the vectors above are already independent; rref puts them in canonical form
    return span(F, ncols, basis)


def _same_ambient(s1: Subspace, s2: Subspace):
    if s1.field != s2.field:
        raise FieldMismatch(f"subspaces over {s1.field} and {s2.field}")
    if s1.n != s2.n:
        raise DimensionMismatch(f"ambient dimensions {s1.n} and {s2.n} differ")


def contains(s: Subspace, v: Vector) -> bool:
    """Reduce ``v`` against the RREF basis and test for a zero residual."""
    if len(v) != s.n:
        raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {s.n}")
    F = s.field
    a, mu, ng = F._add, F._mul, F._neg
    res = list(v)
    for b, pc in zip(s.basis, s.pivots):
        c = res[pc]
        if c:
            f = mu[ng[c]]
            res = [a[x][f[y]] if y else x for x, y in zip(res, b)]
    return not any(res)


def annihilator(s: Subspace) -> Subspace:
    """{x : b . x = 0 for every basis vector b}; its annihilator is ``s`` again."""
    if not s.basis:
        return full_space(s.field, s.n)
    return kernel(s.field, s.basis, s.n)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """Common null space of the stacked annihilator constraints."""
    _same_ambient(s1, s2)
    constraints = annihilator(s1).basis + annihilator(s2).basis
    if not constraints:
        return full_space(s1.field, s1.n)
    return kernel(s1.field, constraints, s1.n)


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    _same_ambient(s1, s2)
    return span(s1.field, s1.n, s1.basis + s2.basis)


def coefficient_grid(q: int, d: int) -> np.ndarray:
    """All d-tuples over range(q) in base-q counting order, first entry fastest."""
    idx = np.arange(q**d)
    return (idx[:, None] // (q ** np.arange(d))) % q


def enumerate_array(s: Subspace) -> np.ndarray:
    """All q^dim vectors of ``s`` as a (q^dim, n) integer array.

    Row t is the combination whose coefficient on basis vector i is the i-th
    base-q digit of t.
    """
    F = s.field
    vecs = np.zeros((1, s.n), dtype=np.int64)
    add, mul = F.add_table, F.mul_table
    for b in s.basis:
        scaled = mul[:, np.asarray(b)]  # (q, n): c * b for every scalar c
        # new coefficient on the slow axis keeps earlier basis vectors fastest
        vecs = add[vecs[None, :, :], scaled[:, None, :]].reshape(-1, s.n)
    return vecs


def enumerate_subspace(s: Subspace) -> list[Vector]:
    return [tuple(int(x) for x in row) for row in enumerate_array(s)]
