"""Homogeneous ideals handled one degree piece at a time.

An ideal is a list of generators; its piece in a fixed (bi)degree is the span
of all monomial multiples of the generators landing there.  Sums,
intersections and colons of pieces are plain linear algebra, which is all the
bounded-degree checks in this package need.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ffla import (
    DEFAULT_PRIME,
    P1XP1,
    PLANE,
    MonomialBasis,
    degree_of,
    linear_form,
    matmul_mod,
    monomial_basis,
    nullspace,
    poly_add,
    poly_clean,
    poly_mul,
    poly_pow,
    poly_scale,
    rref,
)
from .schemes import (
    CrossJet,
    FatPoint,
    Jet,
    SchemeSpec,
    SimplePoint,
    ThreeTwoP1P1,
    ThreeTwoP2,
    cross,
    normalize_degree,
)


class BasisMismatch(ValueError):
    """Two subspaces live in different graded pieces."""


@dataclass(frozen=True)
class GeneratorIdeal:
    """An ideal given by (bi)homogeneous generators stored as exponent dictionaries."""

    ambient: str
    generators: tuple = ()
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        gens = []
        for g in self.generators:
            g = poly_clean(g, self.p)
            if not g:
                continue
            if len({degree_of(e, self.ambient) for e in g}) != 1:
                raise ValueError("generators must be (bi)homogeneous")
            gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    def __add__(self, other: "GeneratorIdeal") -> "GeneratorIdeal":
        if other.ambient != self.ambient:
            raise BasisMismatch("ideals in different ambients")
        return GeneratorIdeal(self.ambient, self.generators + other.generators, self.p)

    def __mul__(self, other: "GeneratorIdeal") -> "GeneratorIdeal":
        gens = [poly_mul(f, g, self.p) for f in self.generators for g in other.generators]
        return GeneratorIdeal(self.ambient, gens, self.p)

    def __pow__(self, n: int) -> "GeneratorIdeal":
        one = {(0,) * (3 if self.ambient == PLANE else 4): 1}
        out = GeneratorIdeal(self.ambient, (one,), self.p)
        for _ in range(n):
            out = out * self
        return out


def ideal(ambient: str, *gens, p: int = DEFAULT_PRIME) -> GeneratorIdeal:
    return GeneratorIdeal(ambient, gens, p)


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of a graded piece, kept as a reduced echelon matrix."""

    basis: MonomialBasis
    matrix: np.ndarray
    p: int = DEFAULT_PRIME

    @classmethod
    def span(cls, basis: MonomialBasis, rows, p: int = DEFAULT_PRIME) -> "SubspaceBasis":
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, len(basis))
        return cls(basis, rref(rows, p, len(basis)), p)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __eq__(self, other):
        return piece_equal(self, other)

    def __hash__(self):
        return hash((self.basis, self.matrix.tobytes()))


def full_piece(basis: MonomialBasis, p: int = DEFAULT_PRIME) -> SubspaceBasis:
    return SubspaceBasis(basis, np.eye(len(basis), dtype=np.int64), p)


def zero_piece(basis: MonomialBasis, p: int = DEFAULT_PRIME) -> SubspaceBasis:
    return SubspaceBasis(basis, np.zeros((0, len(basis)), dtype=np.int64), p)


def _check(A: SubspaceBasis, B: SubspaceBasis):
    if A.basis != B.basis:
        raise BasisMismatch(f"{A.basis.kind}{A.basis.degree} vs {B.basis.kind}{B.basis.degree}")


def _shift(degree, gdeg):
    return tuple(x - y for x, y in zip(degree, gdeg))


def multiplication_matrix(g: dict, source: MonomialBasis, target: MonomialBasis, p: int) -> np.ndarray:
    """Rows are ``g * mu`` for each monomial ``mu`` of ``source``, in ``target`` coordinates."""
    M = np.zeros((len(source), len(target)), dtype=np.int64)
    if not len(source):
        return M
    S = source.array
    for e, c in g.items():
        idx = [target.index(tuple(row)) for row in (S + np.array(e))]
        M[np.arange(len(source)), idx] = (M[np.arange(len(source)), idx] + c) % p
    return M


def ideal_degree_piece(I: GeneratorIdeal, degree) -> SubspaceBasis:
    degree = normalize_degree(I.ambient, degree)
    target = monomial_basis(I.ambient, degree)
    blocks = []
    for g in I.generators:
        rest = _shift(degree, degree_of(next(iter(g)), I.ambient))
        if min(rest) < 0:
            continue
        blocks.append(multiplication_matrix(g, monomial_basis(I.ambient, rest), target, I.p))
    if not blocks:
        return zero_piece(target, I.p)
    return SubspaceBasis.span(target, np.concatenate(blocks), I.p)


def piece_sum(A: SubspaceBasis, B: SubspaceBasis) -> SubspaceBasis:
    _check(A, B)
    return SubspaceBasis.span(A.basis, np.concatenate([A.matrix, B.matrix]), A.p)


def annihilator(A: SubspaceBasis) -> np.ndarray:
    """Functionals vanishing on ``A`` (plain dot product)."""
    return nullspace(A.matrix, len(A.basis), A.p)


def piece_intersect(A: SubspaceBasis, B: SubspaceBasis) -> SubspaceBasis:
    _check(A, B)
    n = len(A.basis)
    K = np.concatenate([annihilator(A), annihilator(B)])
    return SubspaceBasis(A.basis, nullspace(K, n, A.p), A.p)


def piece_equal(A: SubspaceBasis, B: SubspaceBasis) -> bool:
    _check(A, B)
    return A.matrix.shape == B.matrix.shape and bool(np.array_equal(A.matrix, B.matrix))


def piece_contains(A: SubspaceBasis, B: SubspaceBasis) -> bool:
    """True iff ``B`` is a subspace of ``A``."""
    _check(A, B)
    return piece_sum(A, B).dim == A.dim


def piece_multiply(g: dict, A: SubspaceBasis, ambient: str) -> SubspaceBasis:
    """The subspace ``g * A`` one degree piece higher."""
    gdeg = degree_of(next(iter(g)), ambient)
    target = monomial_basis(ambient, tuple(x + y for x, y in zip(A.basis.degree, gdeg)))
    if A.dim == 0:
        return zero_piece(target, A.p)
    M = multiplication_matrix(g, A.basis, target, A.p)
    return SubspaceBasis.span(target, matmul_mod(A.matrix, M, A.p), A.p)


def piece_colon(I: GeneratorIdeal, g: dict, degree) -> SubspaceBasis:
    """Forms ``f`` of the given degree with ``f g`` in ``I``."""
    degree = normalize_degree(I.ambient, degree)
    source = monomial_basis(I.ambient, degree)
    if min(degree) < 0:
        return zero_piece(source, I.p)
    g = poly_clean(g, I.p)
    if not g:
        raise ValueError("colon by the zero form")
    gdeg = degree_of(next(iter(g)), I.ambient)
    up = tuple(x + y for x, y in zip(degree, gdeg))
    K = annihilator(ideal_degree_piece(I, up))
    if K.shape[0] == 0:
        return full_piece(source, I.p)
    Mg = multiplication_matrix(g, source, monomial_basis(I.ambient, up), I.p)
    return SubspaceBasis(source, nullspace(matmul_mod(K, Mg.T, I.p), len(source), I.p), I.p)


def residue_piece(I: GeneratorIdeal, ell: dict, j: int, d: int) -> SubspaceBasis:
    """Degree-``d`` piece of ``I + ell^(j-1) (I : ell^j)``."""
    base = ideal_degree_piece(I, d)
    col = piece_colon(I, poly_pow(ell, j, I.p), d - j + 1)
    if j > 1:
        col = piece_multiply(poly_pow(ell, j - 1, I.p), col, I.ambient)
    return piece_sum(base, col)


def trace_piece(I: GeneratorIdeal, ell: dict, j: int, d: int) -> SubspaceBasis:
    """Degree-``d`` piece of ``(I : ell^(j-1)) + (ell)``; restricting to the line gives the trace."""
    col = piece_colon(I, poly_pow(ell, j - 1, I.p), d) if j > 1 else ideal_degree_piece(I, d)
    return piece_sum(col, ideal_degree_piece(ideal(I.ambient, ell, p=I.p), d))


# --------------------------------------------------------------------------
# ideals of scheme components


def line_form(P, Q, p: int = DEFAULT_PRIME) -> dict:
    """The linear form vanishing at the two points."""
    return linear_form(cross(P, Q, p))


def point_ideal_forms(P, p: int = DEFAULT_PRIME) -> tuple[dict, dict]:
    """Two independent linear forms through the plane point ``P``."""
    forms = []
    for k in range(3):
        e = [0, 0, 0]
        e[k] = 1
        c = cross(P, e, p)
        if any(c) and (not forms or any(cross(c, forms[0], p))):
            forms.append(c)
        if len(forms) == 2:
            break
    return linear_form(forms[0]), linear_form(forms[1])


def _other_line(P, ell_coeffs, p) -> dict:
    """A line through ``P`` different from the given one."""
    for k in range(3):
        e = [0, 0, 0]
        e[k] = 1
        c = cross(P, e, p)
        if any(c) and any(cross(c, ell_coeffs, p)):
            return linear_form(c)
    raise ValueError("no second line found")


def _det2(v, u, p):
    return (int(v[0]) * int(u[1]) - int(v[1]) * int(u[0])) % p


def direction_form(Y: ThreeTwoP1P1, p: int = DEFAULT_PRIME) -> dict:
    """The (1,1)-form whose square, with the cube of the point, cuts out ``Y``.

    With ``lam_i(x) = det(v_i, x)`` vanishing at the support and ``nu_i`` a
    form with ``nu_i(v_i) = 1`` this is
    ``lam2(u2) lam1 nu2 - lam1(u1) nu1 lam2``, the (1,1)-form through the
    support whose tangent line points along ``(u1, u2)``.
    """
    v1, v2 = Y.support.left, Y.support.right
    u1, u2 = Y.cosupport
    lam1 = linear_form((-v1[1], v1[0]), P1XP1, 0)
    lam2 = linear_form((-v2[1], v2[0]), P1XP1, 1)
    nu1 = linear_form((1, 0) if v1[0] else (0, 1), P1XP1, 0)
    nu2 = linear_form((1, 0) if v2[0] else (0, 1), P1XP1, 1)
    nu1 = poly_scale(nu1, pow(int(v1[0] or v1[1]), p - 2, p), p)
    nu2 = poly_scale(nu2, pow(int(v2[0] or v2[1]), p - 2, p), p)
    t1 = poly_scale(poly_mul(lam1, nu2, p), _det2(v2, u2, p), p)
    t2 = poly_scale(poly_mul(nu1, lam2, p), -_det2(v1, u1, p), p)
    return poly_add(t1, t2, p)


def bipoint_ideal(Y: ThreeTwoP1P1, p: int = DEFAULT_PRIME) -> GeneratorIdeal:
    v1, v2 = Y.support.left, Y.support.right
    lam1 = linear_form((-v1[1], v1[0]), P1XP1, 0)
    lam2 = linear_form((-v2[1], v2[0]), P1XP1, 1)
    return ideal(P1XP1, lam1, lam2, p=p)


def component_ideal(c, p: int = DEFAULT_PRIME) -> GeneratorIdeal:
    """Saturated generators of a single component's ideal."""
    if isinstance(c, ThreeTwoP1P1):
        D = direction_form(c, p)
        return bipoint_ideal(c, p) ** 3 + ideal(P1XP1, poly_mul(D, D, p), p=p)
    P = c.support.coords
    if isinstance(c, (FatPoint, SimplePoint)):
        m = c.m if isinstance(c, FatPoint) else 1
        return ideal(PLANE, *point_ideal_forms(P, p), p=p) ** m
    if isinstance(c, ThreeTwoP2):
        lm_coeffs = cross(P, c.direction.coords, p)
        lm = linear_form(lm_coeffs)
        lo = _other_line(P, lm_coeffs, p)
        gens = (poly_pow(lm, 2, p), poly_mul(lm, poly_pow(lo, 2, p), p), poly_pow(lo, 3, p))
        return ideal(PLANE, *gens, p=p)
    if isinstance(c, Jet):
        coeffs = cross(P, c.through.coords, p)
        return ideal(PLANE, linear_form(coeffs), poly_pow(_other_line(P, coeffs, p), c.m, p), p=p)
    if isinstance(c, CrossJet):
        l1 = line_form(P, c.dir1.coords, p)
        l2 = line_form(P, c.dir2.coords, p)
        return ideal(PLANE, poly_pow(l1, c.m1, p), poly_pow(l2, c.m2, p), p=p)
    raise TypeError(f"unknown component {c!r}")


def scheme_ideal_piece(X: SchemeSpec, degree, p: int = DEFAULT_PRIME) -> SubspaceBasis:
    """Degree piece of the scheme's ideal as the intersection of component pieces."""
    degree = normalize_degree(X.ambient, degree)
    out = full_piece(monomial_basis(X.ambient, degree), p)
    for c in X.components:
        out = piece_intersect(out, ideal_degree_piece(component_ideal(c, p), degree))
    return out
