"""Finite fields GF(p^k) with dense integer element indices.

An element of GF(p^k) is the polynomial c_0 + c_1 T + ... + c_{k-1} T^{k-1}
reduced modulo a monic irreducible polynomial of degree k.  Its *index* is
the base-p number with digit c_i at position i, so index 0 is zero, index 1
is one, and the prime subfield GF(p) occupies indices 0..p-1.

All arithmetic goes through q x q lookup tables built once per field.  The
tables are numpy arrays (for vectorised enumeration in the graph code) with
list copies for fast scalar access.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import (
    DegreeMismatch,
    FieldMismatch,
    NonPrimeP,
    NotASquare,
    ReducibleModulus,
    ZeroInverse,
)

__all__ = [
    "FieldSpec",
    "FieldElement",
    "make_field",
    "field_make",
    "parse_field",
    "elements",
    "add",
    "sub",
    "neg",
    "mul",
    "inv",
    "power",
    "is_square",
    "sqrt",
    "quadratic_has_root",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den over GF(p); coefficient lists are high degree first."""
    num = [c % p for c in num]
    inv_lead = pow(den[0], p - 2, p)
    while len(num) >= len(den):
        c = num[0] * inv_lead % p
        if c:
            for i, d in enumerate(den):
                num[i] = (num[i] - c * d) % p
        num.pop(0)
    while num and num[0] == 0:
        num.pop(0)
    return num


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    # trial division by every monic polynomial of degree 1..k//2
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not _poly_mod(list(modulus), [1, *tail], p):
                return False
    return True


def _default_modulus(p: int, k: int) -> tuple[int, ...]:
    # product() yields tails in lexicographic order, high coefficient first
    for tail in itertools.product(range(p), repeat=k):
        cand = (1, *tail)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError("an irreducible polynomial of every degree exists")


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(p^k) defined by ``modulus`` (monic, high degree first).

    Use :func:`make_field` rather than the constructor: it picks the default
    modulus and shares the lookup tables between equal specs.
    """

    p: int
    k: int = 1
    modulus: tuple[int, ...] = ()

    add_table: np.ndarray = field(init=False, repr=False, compare=False)
    mul_table: np.ndarray = field(init=False, repr=False, compare=False)
    neg_table: np.ndarray = field(init=False, repr=False, compare=False)
    inv_table: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p, k = self.p, self.k
        if not _is_prime(p):
            raise NonPrimeP(f"characteristic {p} is not prime")
        if k < 1:
            raise DegreeMismatch(f"extension degree must be >= 1, got {k}")
        modulus = tuple(int(c) % p for c in self.modulus)
        if k == 1:
            # any monic linear polynomial gives the same indexing of GF(p)
            if modulus and (len(modulus) != 2 or modulus[0] != 1):
                raise DegreeMismatch("a degree-1 modulus must be monic linear")
            modulus = ()
        else:
            if len(modulus) != k + 1:
                raise DegreeMismatch(f"modulus {self.modulus} does not have degree {k}")
            if modulus[0] != 1:
                raise DegreeMismatch(f"modulus {self.modulus} is not monic")
            if not _is_irreducible(modulus, p):
                raise ReducibleModulus(f"modulus {self.modulus} is reducible over GF({p})")
        object.__setattr__(self, "modulus", modulus)
        self._build_tables()

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        weights = p ** np.arange(k)
        digits = (np.arange(q)[:, None] // weights) % p  # (q, k), constant term first
        if k == 1:
            mul = np.outer(np.arange(p), np.arange(p)) % p
        else:
            # t^k = -(m_{k-1} t^{k-1} + ... + m_0)
            low = np.array(self.modulus[1:][::-1])  # m_0 .. m_{k-1}
            shifts = [digits]
            for _ in range(k - 1):
                cur = shifts[-1]
                top = cur[:, -1:]
                nxt = np.concatenate([np.zeros((q, 1), dtype=cur.dtype), cur[:, :-1]], axis=1)
                shifts.append((nxt - top * low) % p)
            shifts = np.stack(shifts)  # shifts[i, a] = digits of a * t^i
            prod = np.einsum("bi,iak->abk", digits, shifts) % p
            mul = prod @ weights
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        neg = np.argmin(add, axis=1)  # add[a, b] == 0 exactly once per row
        inv = np.zeros(q, dtype=np.int64)
        rows, cols = np.nonzero(mul == 1)
        inv[rows] = cols
        sq = np.full(q, -1, dtype=np.int64)
        squares = np.diagonal(mul)
        for b in range(q - 1, -1, -1):
            sq[squares[b]] = b  # smallest root wins
        for name, arr in (
            ("add_table", add),
            ("mul_table", mul),
            ("neg_table", neg),
            ("inv_table", inv),
        ):
            arr = np.ascontiguousarray(arr, dtype=np.int64)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        object.__setattr__(self, "_sqrt", sq.tolist())
        object.__setattr__(self, "_add", add.tolist())
        object.__setattr__(self, "_mul", mul.tolist())
        object.__setattr__(self, "_neg", neg.tolist())
        object.__setattr__(self, "_inv", inv.tolist())

    # -- basic facts -------------------------------------------------------
    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def char(self) -> int:
        return self.p

    def __str__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def label(self) -> str:
        """The ``p^k`` string used on the command line and in reports."""
        return f"{self.p}^{self.k}" if self.k > 1 else str(self.p)

    # -- scalar arithmetic on indices --------------------------------------
    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self._mul[result][a]
            a = self._mul[a][a]
            e >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under Z -> GF(p) -> GF(q)."""
        return n % self.p

    def sqrt_index(self, a: int) -> int:
        """Smallest index b with b*b == a, or -1 when a is not a square."""
        return self._sqrt[a]

    def coefficients(self, a: int) -> tuple[int, ...]:
        """Polynomial coefficients of ``a``, constant term first."""
        return tuple((a // self.p**i) % self.p for i in range(self.k))

    def element(self, a: int) -> FieldElement:
        if not 0 <= a < self.q:
            raise ValueError(f"index {a} out of range for {self}")
        return FieldElement(self, a)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, a) for a in range(self.q)]


@lru_cache(maxsize=None)
def _cached_field(p: int, k: int, modulus: tuple[int, ...]) -> FieldSpec:
    return FieldSpec(p, k, modulus)


def make_field(p: int, k: int = 1, modulus=None) -> FieldSpec:
    """Build GF(p^k).

    Without ``modulus`` the lexicographically smallest monic irreducible
    polynomial (coefficients compared from the top degree down) is used, so
    element indices are reproducible.

    >>> make_field(2, 2).modulus
    (1, 1, 1)
    """
    if not _is_prime(p):
        raise NonPrimeP(f"characteristic {p} is not prime")
    if k < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {k}")
    if modulus is None:
        modulus = _default_modulus(p, k) if k > 1 else ()
    return _cached_field(p, k, tuple(int(c) for c in modulus))


field_make = make_field

_FIELD_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_field(text: str, poly=None) -> FieldSpec:
    """Parse ``"p"`` or ``"p^k"``; ``poly`` is ``"c_k,...,c_0"`` or a sequence."""
    m = _FIELD_RE.match(str(text))
    if not m:
        raise ValueError(f"cannot parse field description {text!r}; expected p or p^k")
    p, k = int(m.group(1)), int(m.group(2) or 1)
    if m.group(2) is None and not _is_prime(p):
        # a bare prime power such as "9" means GF(3^2)
        pk = prime_power(p)
        if pk is not None:
            p, k = pk
    if isinstance(poly, str):
        poly = [int(c) for c in poly.split(",") if c.strip()]
    return make_field(p, k, poly)


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, k) with p**k == q, or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    return (p, k) if r == 1 else None


@dataclass(frozen=True)
class FieldElement:
    """A value in a :class:`FieldSpec`, with the usual arithmetic operators."""

    spec: FieldSpec
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatch(f"cannot combine {self.spec} and {other.spec}")
            return other.value
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.div(b, self.value))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return f"FieldElement({self.spec}, {self.value})"

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv(self.value))


def _same_field(a: FieldElement, b: FieldElement):
    if a.spec != b.spec:
        raise FieldMismatch(f"cannot combine {a.spec} and {b.spec}")


def elements(spec: FieldSpec) -> list[FieldElement]:
    return spec.elements()


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _same_field(a, b)
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _same_field(a, b)
    return a - b


def neg(a: FieldElement) -> FieldElement:
    return -a


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _same_field(a, b)
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e


def is_square(a: FieldElement) -> bool:
    return a.spec.sqrt_index(a.value) >= 0


def sqrt(a: FieldElement) -> FieldElement:
    """The square root with the smallest index."""
    r = a.spec.sqrt_index(a.value)
    if r < 0:
        raise NotASquare(f"{a.value} is not a square in {a.spec}")
    return FieldElement(a.spec, r)


def quadratic_has_root(a1: FieldElement, a0: FieldElement) -> bool:
    """Whether T^2 + a1*T + a0 has a root, by evaluating at every element."""
    _same_field(a1, a0)
    F = a1.spec
    for t in range(F.q):
        if F.add(F.add(F.mul(t, t), F.mul(a1.value, t)), a0.value) == 0:
            return True
    return False
