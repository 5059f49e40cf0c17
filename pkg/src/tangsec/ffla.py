"""Exact arithmetic over a prime field, monomial bases and dense elimination.

Matrices are plain ``numpy.int64`` arrays whose entries are residues in
``[0, p)``.  The modulus must stay below ``2**31`` so that every product of
two residues fits in a signed 64-bit word.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

DEFAULT_PRIME = 2_147_483_647
MAX_PRIME = 2**31 - 1


class DivisionByZero(ZeroDivisionError):
    """Inversion of zero in a prime field."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    k = 5
    while k * k <= n:
        if n % k == 0 or n % (k + 2) == 0:
            return False
        k += 6
    return True


def check_prime(p: int) -> int:
    if not (2 < p <= MAX_PRIME) or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime below 2**31, got {p}")
    return p


def inv_mod(x: int, p: int = DEFAULT_PRIME) -> int:
    x %= p
    if x == 0:
        raise DivisionByZero("0 has no inverse modulo %d" % p)
    return pow(x, p - 2, p)


@dataclass(frozen=True)
class FieldElement:
    """A residue class modulo the prime ``p``."""

    value: int
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        object.__setattr__(self, "value", int(self.value) % self.p)

    def _lift(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ValueError("field elements of different characteristic")
            return other.value
        return int(other)

    def __add__(self, other):
        return FieldElement(self.value + self._lift(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.value - self._lift(other), self.p)

    def __rsub__(self, other):
        return FieldElement(self._lift(other) - self.value, self.p)

    def __mul__(self, other):
        return FieldElement(self.value * self._lift(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def inv(self) -> "FieldElement":
        return FieldElement(inv_mod(self.value, self.p), self.p)

    def __truediv__(self, other):
        return self * FieldElement(self._lift(other), self.p).inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return FieldElement(pow(self.value, n, self.p), self.p)

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0


# --------------------------------------------------------------------------
# monomial bases


PLANE = "plane"
P1XP1 = "p1xp1"


@dataclass(frozen=True)
class MonomialBasis:
    """Ordered monomials of one (bi)degree.

    Plane exponents are ``(e0, e1, e2)``; biprojective exponents are
    ``(i0, i1, j0, j1)`` for ``x0^i0 x1^i1 y0^j0 y1^j1``.
    """

    kind: str
    degree: tuple[int, ...]
    exponents: tuple[tuple[int, ...], ...]
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.exponents)})

    def __len__(self):
        return len(self.exponents)

    def index(self, exponent) -> int:
        return self._index[tuple(exponent)]

    @property
    def array(self) -> np.ndarray:
        return _exponent_array(self)


@lru_cache(maxsize=None)
def _exponent_array(basis: MonomialBasis) -> np.ndarray:
    arr = np.array(basis.exponents, dtype=np.int64).reshape(len(basis), -1)
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=None)
def plane_basis(d: int) -> MonomialBasis:
    if d < 0:
        return MonomialBasis(PLANE, (d,), ())
    exps = tuple(
        (e0, e1, d - e0 - e1) for e0 in range(d, -1, -1) for e1 in range(d - e0, -1, -1)
    )
    return MonomialBasis(PLANE, (d,), exps)


@lru_cache(maxsize=None)
def biprojective_basis(a: int, b: int) -> MonomialBasis:
    if a < 0 or b < 0:
        return MonomialBasis(P1XP1, (a, b), ())
    exps = tuple(
        (i0, a - i0, j0, b - j0) for i0 in range(a, -1, -1) for j0 in range(b, -1, -1)
    )
    return MonomialBasis(P1XP1, (a, b), exps)


def monomial_basis(kind: str, degree) -> MonomialBasis:
    """Basis for ``Plane(d)`` (``degree=d``) or ``Biprojective(a, b)``."""
    if kind == PLANE:
        (d,) = _as_degree(kind, degree)
        return plane_basis(d)
    if kind == P1XP1:
        a, b = _as_degree(kind, degree)
        return biprojective_basis(a, b)
    raise ValueError(f"unknown ambient {kind!r}")


def _as_degree(kind, degree) -> tuple[int, ...]:
    if isinstance(degree, (int, np.integer)):
        degree = (int(degree),)
    degree = tuple(int(x) for x in degree)
    if len(degree) != (1 if kind == PLANE else 2):
        raise ValueError(f"degree {degree} does not fit ambient {kind}")
    return degree


def degree_of(exponent, kind: str) -> tuple[int, ...]:
    if kind == PLANE:
        return (sum(exponent),)
    return (exponent[0] + exponent[1], exponent[2] + exponent[3])


# --------------------------------------------------------------------------
# binomials and polynomials


@lru_cache(maxsize=None)
def binomial_table(n: int, p: int = DEFAULT_PRIME) -> np.ndarray:
    """``T[i, j] = C(i, j) mod p`` for ``0 <= i, j <= n``."""
    t = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i in range(n + 1):
        for j in range(i + 1):
            t[i, j] = math.comb(i, j) % p
    t.setflags(write=False)
    return t


# A polynomial is a dict {exponent tuple: residue}; zero terms are dropped.


def poly_clean(f: dict, p: int) -> dict:
    return {e: c % p for e, c in f.items() if c % p}


def poly_add(f: dict, g: dict, p: int = DEFAULT_PRIME) -> dict:
    out = dict(f)
    for e, c in g.items():
        out[e] = (out.get(e, 0) + c) % p
    return {e: c for e, c in out.items() if c}


def poly_scale(f: dict, c: int, p: int = DEFAULT_PRIME) -> dict:
    return poly_clean({e: v * c for e, v in f.items()}, p)


def poly_mul(f: dict, g: dict, p: int = DEFAULT_PRIME) -> dict:
    out: dict = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = (out.get(e, 0) + c1 * c2) % p
    return {e: c for e, c in out.items() if c}


def poly_pow(f: dict, n: int, p: int = DEFAULT_PRIME) -> dict:
    nvars = len(next(iter(f))) if f else 3
    out = {(0,) * nvars: 1}
    for _ in range(n):
        out = poly_mul(out, f, p)
    return out


def poly_degree(f: dict, kind: str) -> tuple[int, ...]:
    degs = {degree_of(e, kind) for e in f}
    if len(degs) != 1:
        raise ValueError("polynomial is zero or not (bi)homogeneous")
    return degs.pop()


def linear_form(coeffs, kind: str = PLANE, factor: int = 0) -> dict:
    """Linear form from coefficients.

    For ``kind == P1XP1`` the two coefficients live on the x-variables
    (``factor == 0``) or the y-variables (``factor == 1``).
    """
    if kind == PLANE:
        units = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    elif factor == 0:
        units = [(1, 0, 0, 0), (0, 1, 0, 0)]
    else:
        units = [(0, 0, 1, 0), (0, 0, 0, 1)]
    return {u: int(c) for u, c in zip(units, coeffs) if int(c)}


def poly_to_vector(f: dict, basis: MonomialBasis, p: int = DEFAULT_PRIME) -> np.ndarray:
    v = np.zeros(len(basis), dtype=np.int64)
    for e, c in f.items():
        v[basis.index(e)] = (v[basis.index(e)] + c) % p
    return v


def vector_to_poly(v, basis: MonomialBasis) -> dict:
    return {basis.exponents[i]: int(c) for i, c in enumerate(v) if c}


@dataclass(frozen=True)
class PolyVec:
    """Coefficient vector of a form relative to a fixed monomial basis."""

    basis: MonomialBasis
    coeffs: np.ndarray

    def __post_init__(self):
        if len(self.coeffs) != len(self.basis):
            raise ValueError("coefficient vector does not match basis size")

    @classmethod
    def from_poly(cls, f: dict, basis: MonomialBasis, p: int = DEFAULT_PRIME) -> "PolyVec":
        return cls(basis, poly_to_vector(f, basis, p))

    def to_poly(self) -> dict:
        return vector_to_poly(self.coeffs, self.basis)


# --------------------------------------------------------------------------
# dense elimination


def as_matrix(M, ncols: int | None = None, p: int = DEFAULT_PRIME) -> np.ndarray:
    A = np.asarray(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(0 if A.size == 0 else 1, -1) if ncols is None else A.reshape(-1, ncols)
    if A.size == 0 and ncols is not None:
        A = A.reshape(A.shape[0] if A.ndim == 2 and A.shape[1] == ncols else 0, ncols)
    return A % p


def _echelon(A: np.ndarray, p: int, reduced: bool) -> tuple[np.ndarray, list[int]]:
    R = A.copy()
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r, c:] = R[r, c:] * pow(int(R[r, c]), p - 2, p) % p
        rows = r + 1 + np.flatnonzero(R[r + 1 :, c])
        if reduced:
            rows = np.concatenate([np.flatnonzero(R[:r, c]), rows])
        if rows.size:
            R[rows, c:] = (R[rows, c:] - np.outer(R[rows, c], R[r, c:])) % p
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(M, p: int = DEFAULT_PRIME) -> int:
    """Rank over GF(p).

    Rows with a single nonzero entry are split off first: they pin their
    columns, so the rank is their column count plus the rank of the other
    rows with those columns deleted.  Fat points at coordinate points produce
    exactly such rows.
    """
    A = np.asarray(M, dtype=np.int64)
    if A.ndim != 2 or A.size == 0:
        return 0
    A = A % p
    nnz = np.count_nonzero(A, axis=1)
    unit = nnz == 1
    if unit.any():
        cols = np.unique(np.argmax(A[unit] != 0, axis=1))
        keep = np.ones(A.shape[1], dtype=bool)
        keep[cols] = False
        rest = A[(~unit) & (nnz > 0)][:, keep]
        return len(cols) + (_echelon(rest, p, False)[0].shape[0] if rest.size else 0)
    return _echelon(A[nnz > 0], p, False)[0].shape[0]


def rref(M, p: int = DEFAULT_PRIME, ncols: int | None = None) -> np.ndarray:
    """Reduced row-echelon form with zero rows removed."""
    A = np.asarray(M, dtype=np.int64)
    if A.ndim != 2:
        A = A.reshape(-1, ncols if ncols is not None else A.size)
    if A.shape[0] == 0:
        return np.zeros((0, A.shape[1]), dtype=np.int64)
    return _echelon(A % p, p, True)[0]


def rref_with_pivots(M, p: int = DEFAULT_PRIME) -> tuple[np.ndarray, list[int]]:
    A = np.asarray(M, dtype=np.int64) % p
    if A.shape[0] == 0:
        return A.reshape(0, A.shape[1]), []
    return _echelon(A, p, True)


def nullspace(M, ncols: int, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Rows spanning ``{x : M x = 0}``, returned in reduced echelon form."""
    A = np.asarray(M, dtype=np.int64).reshape(-1, ncols)
    R, pivots = rref_with_pivots(A, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    K = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        K[i, f] = 1
        for r, pc in enumerate(pivots):
            K[i, pc] = (-R[r, f]) % p
    return rref(K, p, ncols)


def matmul_mod(A, B, p: int = DEFAULT_PRIME) -> np.ndarray:
    """``A @ B mod p`` without int64 overflow (B is split into 16-bit halves)."""
    A = np.asarray(A, dtype=np.int64) % p
    B = np.asarray(B, dtype=np.int64) % p
    if A.shape[1] > 1 << 14:
        raise ValueError("inner dimension too large for split multiplication")
    hi, lo = B >> 16, B & 0xFFFF
    return ((A @ hi) % p * 65536 + (A @ lo)) % p
