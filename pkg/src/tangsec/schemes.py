"""Zero-dimensional schemes in the plane and in P1 x P1, and their condition rows.

Every component contributes a block of linear functionals on forms of a fixed
(bi)degree.  The rank of the stacked block is the Hilbert function of the
scheme in that degree; the kernel is the linear system of forms through it.

Plane functionals are Hasse derivatives at the support.  Writing
``f(P + x v + y w) = sum c_ij(f) x^i y^j`` for vectors ``v, w`` completing
``P`` to a basis, the coefficient ``c_ij`` is a linear functional in ``f`` and
each component is a set of such coefficients.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

from .ffla import (
    DEFAULT_PRIME,
    P1XP1,
    PLANE,
    MonomialBasis,
    binomial_table,
    inv_mod,
    monomial_basis,
    rank,
)


class AmbientMismatch(ValueError):
    """A component or degree does not belong to the scheme's ambient space."""


class DegenerateComponent(ValueError):
    """Auxiliary data of a component is not in general enough position."""


# --------------------------------------------------------------------------
# points


def _normalize(coords: Sequence[int], p: int) -> tuple[int, ...]:
    c = [int(x) % p for x in coords]
    for x in c:
        if x:
            s = inv_mod(x, p)
            return tuple(y * s % p for y in c)
    raise DegenerateComponent("the zero vector is not a projective point")


@dataclass(frozen=True)
class PlanePoint:
    coords: tuple[int, int, int]
    p: int = DEFAULT_PRIME

    @classmethod
    def make(cls, coords, p: int = DEFAULT_PRIME) -> "PlanePoint":
        if len(coords) != 3:
            raise ValueError("plane points have three coordinates")
        return cls(_normalize(coords, p), p)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


@dataclass(frozen=True)
class BiPoint:
    left: tuple[int, int]
    right: tuple[int, int]
    p: int = DEFAULT_PRIME

    @classmethod
    def make(cls, left, right, p: int = DEFAULT_PRIME) -> "BiPoint":
        if len(left) != 2 or len(right) != 2:
            raise ValueError("points of P1 have two coordinates")
        return cls(_normalize(left, p), _normalize(right, p), p)


Q1 = (0, 1, 0)
Q2 = (0, 0, 1)


def cross(u, v, p: int = DEFAULT_PRIME) -> tuple[int, int, int]:
    """Cross product mod p: the line through two points, or the meet of two lines."""
    u = [int(x) for x in u]
    v = [int(x) for x in v]
    return (
        (u[1] * v[2] - u[2] * v[1]) % p,
        (u[2] * v[0] - u[0] * v[2]) % p,
        (u[0] * v[1] - u[1] * v[0]) % p,
    )


def det3(u, v, w, p: int = DEFAULT_PRIME) -> int:
    return sum(int(a) * int(b) for a, b in zip(cross(u, v, p), w)) % p


def dot(u, v, p: int = DEFAULT_PRIME) -> int:
    return sum(int(a) * int(b) for a, b in zip(u, v)) % p


# --------------------------------------------------------------------------
# components


@dataclass(frozen=True)
class FatPoint:
    m: int
    support: PlanePoint
    ambient = PLANE

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("multiplicity must be at least 1")

    @property
    def length(self) -> int:
        return self.m * (self.m + 1) // 2


@dataclass(frozen=True)
class SimplePoint:
    support: PlanePoint
    ambient = PLANE
    length = 1


@dataclass(frozen=True)
class ThreeTwoP2:
    """Triple point at ``support`` meeting the double line towards ``direction``."""

    support: PlanePoint
    direction: PlanePoint
    ambient = PLANE
    length = 5

    def __post_init__(self):
        if self.direction == self.support:
            raise DegenerateComponent("direction must differ from support")


@dataclass(frozen=True)
class Jet:
    """Curvilinear scheme of length ``m`` on the line ``support`` v ``through``."""

    m: int
    support: PlanePoint
    through: PlanePoint
    ambient = PLANE

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("jet length must be at least 1")
        if self.through == self.support:
            raise DegenerateComponent("through point must differ from support")

    @property
    def length(self) -> int:
        return self.m


@dataclass(frozen=True)
class CrossJet:
    """Complete intersection ``(l1^m1, l2^m2)`` with ``l_i`` the line ``support`` v ``dir_i``."""

    m1: int
    m2: int
    support: PlanePoint
    dir1: PlanePoint
    dir2: PlanePoint
    ambient = PLANE

    def __post_init__(self):
        if self.m1 < 1 or self.m2 < 1:
            raise ValueError("cross-jet orders must be at least 1")
        if det3(self.support, self.dir1, self.dir2, self.support.p) == 0:
            raise DegenerateComponent("cross-jet lines coincide")

    @property
    def length(self) -> int:
        return self.m1 * self.m2


@dataclass(frozen=True)
class ThreeTwoP1P1:
    """The (3,2)-point of P1 x P1 at ``support`` with tangent direction ``cosupport``.

    ``cosupport`` holds two raw (unnormalized) vectors ``u1, u2``: the tangent
    vector at ``support`` is ``(u1, u2)``, so their relative scale matters.
    """

    support: BiPoint
    cosupport: tuple[tuple[int, int], tuple[int, int]]
    ambient = P1XP1
    length = 5

    def __post_init__(self):
        p = self.support.p
        u1, u2 = (tuple(int(x) % p for x in u) for u in self.cosupport)
        object.__setattr__(self, "cosupport", (u1, u2))
        if _det2(self.support.left, u1, p) == 0 and _det2(self.support.right, u2, p) == 0:
            raise DegenerateComponent("cosupport gives a zero tangent vector")


Component = Union[FatPoint, SimplePoint, ThreeTwoP2, Jet, CrossJet, ThreeTwoP1P1]


def _det2(v, u, p) -> int:
    return (int(v[0]) * int(u[1]) - int(v[1]) * int(u[0])) % p


def auxiliary_points(c: Component) -> tuple:
    if isinstance(c, ThreeTwoP2):
        return (c.direction,)
    if isinstance(c, Jet):
        return (c.through,)
    if isinstance(c, CrossJet):
        return (c.dir1, c.dir2)
    return ()


@dataclass(frozen=True)
class SchemeSpec:
    ambient: str
    components: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.ambient not in (PLANE, P1XP1):
            raise ValueError(f"unknown ambient {self.ambient!r}")
        seen = set()
        for c in self.components:
            if c.ambient != self.ambient:
                raise AmbientMismatch(f"{type(c).__name__} cannot live in {self.ambient}")
            if c.support in seen:
                raise ValueError("component supports must be pairwise distinct")
            seen.add(c.support)

    @property
    def length(self) -> int:
        return sum(c.length for c in self.components)

    def __add__(self, other: "SchemeSpec") -> "SchemeSpec":
        if other.ambient != self.ambient:
            raise AmbientMismatch("cannot add schemes in different ambients")
        return SchemeSpec(self.ambient, self.components + other.components)

    def summary(self) -> str:
        if not self.components:
            return "empty"
        counts: dict[str, int] = {}
        for c in self.components:
            key = _short_name(c)
            counts[key] = counts.get(key, 0) + 1
        return " + ".join(f"{n}*{k}" if n > 1 else k for k, n in counts.items())


def _short_name(c: Component) -> str:
    if isinstance(c, FatPoint):
        return f"fat{c.m}"
    if isinstance(c, SimplePoint):
        return "pt"
    if isinstance(c, ThreeTwoP2):
        return "32"
    if isinstance(c, Jet):
        return f"jet{c.m}"
    if isinstance(c, CrossJet):
        return f"crossjet{c.m1},{c.m2}"
    return "32bi"


# --------------------------------------------------------------------------
# condition rows in the plane


def _powers(base: int, n: int, p: int) -> np.ndarray:
    out = np.ones(n + 1, dtype=np.int64)
    for k in range(1, n + 1):
        out[k] = out[k - 1] * base % p
    return out


def hasse_rows(P, deltas: Iterable[tuple[int, int, int]], d: int, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Rows ``f -> D^(delta) f (P)`` with entry ``C(beta, delta) P^(beta - delta)`` at ``x^beta``."""
    deltas = list(deltas)
    basis = monomial_basis(PLANE, d)
    E = basis.array
    B = binomial_table(max([d, 0] + [max(t) for t in deltas]), p)
    pw = [_powers(int(P[k]) % p, d, p) for k in range(3)]
    rows = np.zeros((len(deltas), len(basis)), dtype=np.int64)
    for r, delta in enumerate(deltas):
        ok = np.all(E >= np.array(delta), axis=1)
        val = np.ones(int(ok.sum()), dtype=np.int64)
        for k in range(3):
            e = E[ok, k]
            val = val * B[e, delta[k]] % p * pw[k][e - delta[k]] % p
        rows[r, ok] = val
    return rows


def rows_fat_point(P: PlanePoint, m: int, d: int, p: int | None = None) -> np.ndarray:
    """All Hasse derivatives of order below ``m`` at ``P``: ``C(m+1, 2)`` rows.

    The coordinate where ``P`` is normalized to 1 is held fixed, which removes
    the Euler relation and leaves one row per local monomial.
    """
    p = P.p if p is None else p
    k = next(i for i in range(3) if P[i])
    o1, o2 = [i for i in range(3) if i != k]
    deltas = []
    for tot in range(m):
        for i in range(tot, -1, -1):
            delta = [0, 0, 0]
            delta[o1], delta[o2] = i, tot - i
            deltas.append(tuple(delta))
    return hasse_rows(P, deltas, d, p)


def _line_powers(P, v, w, d: int, I: int, J: int, p: int) -> list[np.ndarray]:
    """``T[k][e]`` = truncated coefficients of ``(P_k + x v_k + y w_k)^e``."""
    out = []
    for k in range(3):
        T = np.zeros((d + 1, I, J), dtype=np.int64)
        T[0, 0, 0] = 1
        a, b, c = int(P[k]) % p, int(v[k]) % p, int(w[k]) % p
        for e in range(1, d + 1):
            prev = T[e - 1]
            cur = prev * a % p
            if I > 1:
                cur[1:, :] = (cur[1:, :] + prev[:-1, :] * b) % p
            if J > 1:
                cur[:, 1:] = (cur[:, 1:] + prev[:, :-1] * c) % p
            T[e] = cur
        out.append(T)
    return out


def _truncated_product(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    N, I, J = A.shape
    C = np.zeros_like(A)
    for i1 in range(I):
        for j1 in range(J):
            a = A[:, i1, j1][:, None, None]
            C[:, i1:, j1:] = (C[:, i1:, j1:] + a * B[:, : I - i1, : J - j1] % p) % p
    return C


def directional_rows(P, v, w, pairs: Sequence[tuple[int, int]], d: int, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Rows ``f -> [x^i y^j] f(P + x v + y w)`` for each ``(i, j)`` in ``pairs``."""
    basis = monomial_basis(PLANE, d)
    if not pairs:
        return np.zeros((0, len(basis)), dtype=np.int64)
    if d < 0:
        return np.zeros((len(pairs), 0), dtype=np.int64)
    I = max(i for i, _ in pairs) + 1
    J = max(j for _, j in pairs) + 1
    T = _line_powers(P, v, w, d, I, J, p)
    E = basis.array
    R = _truncated_product(T[0][E[:, 0]], T[1][E[:, 1]], p)
    R = _truncated_product(R, T[2][E[:, 2]], p)
    return np.stack([R[:, i, j] for i, j in pairs]).astype(np.int64)


def complement_vector(P, w, p: int = DEFAULT_PRIME) -> tuple[int, int, int]:
    """A coordinate vector ``v`` with ``P, v, w`` spanning the space."""
    for k in range(3):
        e = [0, 0, 0]
        e[k] = 1
        if det3(P, e, w, p):
            return tuple(e)
    raise DegenerateComponent("support and direction coincide")


THREE_TWO_PAIRS = ((0, 0), (1, 0), (0, 1), (1, 1), (0, 2))


def rows_32_p2(Y: ThreeTwoP2, d: int, p: int | None = None, v=None) -> np.ndarray:
    """Functionals ``1, D_v, D_w, D_v D_w, D_w^(2)`` at the support, ``w`` along the scheme's line."""
    p = Y.support.p if p is None else p
    w = Y.direction.coords
    if v is None:
        v = complement_vector(Y.support, w, p)
    return directional_rows(Y.support, v, w, THREE_TWO_PAIRS, d, p)


def rows_jet(J: Jet, d: int, p: int | None = None) -> np.ndarray:
    p = J.support.p if p is None else p
    v = complement_vector(J.support, J.through, p)
    return directional_rows(J.support, v, J.through, [(0, j) for j in range(J.m)], d, p)


def rows_cross_jet(J: CrossJet, d: int, p: int | None = None) -> np.ndarray:
    """Mixed derivatives ``D_u^(i) D_w^(j)``, ``u`` along line 2 and ``w`` along line 1."""
    p = J.support.p if p is None else p
    pairs = [(i, j) for i in range(J.m1) for j in range(J.m2)]
    return directional_rows(J.support, J.dir2, J.dir1, pairs, d, p)


# --------------------------------------------------------------------------
# condition rows on P1 x P1


def binary_product(factors: Sequence[tuple[int, int]], p: int = DEFAULT_PRIME) -> np.ndarray:
    """Coefficients of a product of binary linear forms, indexed by descending x0-degree."""
    out = np.array([1], dtype=np.int64)
    for c0, c1 in factors:
        new = np.zeros(len(out) + 1, dtype=np.int64)
        new[:-1] = out * (int(c0) % p) % p
        new[1:] = (new[1:] + out * (int(c1) % p) % p) % p
        out = new
    return out


def _biform(xf, yf, p) -> np.ndarray:
    return np.outer(binary_product(xf, p), binary_product(yf, p)).reshape(-1) % p


def tangent_rows(Y: ThreeTwoP1P1, a: int, b: int, p: int | None = None) -> np.ndarray:
    """Coefficient vectors of the five forms spanning the affine tangent cone data.

    With ``l1 = v1.x``, ``l2 = v2.y`` and ``m1 = a u1.x``, ``m2 = b u2.y`` these are
    ``l1^a l2^b``, ``l1^a l2^(b-1) m2``, ``l1^(a-1) m1 l2^b`` and the two
    second-order combinations; summands with a negative exponent are dropped.
    The factors ``a, b`` on ``m`` make the span exactly the tangent data of
    the curve ``t -> (l1 + t u1.x)^a (l2 + t u2.y)^b``.
    """
    p = Y.support.p if p is None else p
    if a < 1 or b < 1:
        raise ValueError("bidegree entries must be at least 1")
    l1, l2 = Y.support.left, Y.support.right
    u1, u2 = Y.cosupport
    m1 = (a * u1[0] % p, a * u1[1] % p)
    m2 = (b * u2[0] % p, b * u2[1] % p)

    def F(nl1, nm1, nl2, nm2):
        return _biform([l1] * nl1 + [m1] * nm1, [l2] * nl2 + [m2] * nm2, p)

    rows = [F(a, 0, b, 0), F(a, 0, b - 1, 1), F(a - 1, 1, b, 0)]
    r4 = a * F(a - 1, 1, b - 1, 1) % p
    if a >= 2:
        r4 = (r4 + (a - 1) * F(a - 2, 2, b, 0)) % p
    r5 = b * F(a - 1, 1, b - 1, 1) % p
    if b >= 2:
        r5 = (r5 + (b - 1) * F(a, 0, b - 2, 2)) % p
    rows += [r4, r5]
    return np.stack(rows).astype(np.int64)


def apolar_weights(a: int, b: int, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Weights ``1 / (C(a, i0) C(b, j0))`` turning the plain dot product into the invariant pairing.

    With them, ``<f, g> = sum_alpha f_alpha g_alpha w_alpha`` satisfies
    ``<l1^a l2^b, g> = g(v1, v2)`` for all forms ``g`` of bidegree ``(a, b)``.
    """
    B = binomial_table(max(a, b), p)
    wx = np.array([inv_mod(int(B[a, i0]), p) for i0 in range(a, -1, -1)], dtype=np.int64)
    wy = np.array([inv_mod(int(B[b, j0]), p) for j0 in range(b, -1, -1)], dtype=np.int64)
    return np.outer(wx, wy).reshape(-1) % p


def apolar_pairing(f, g, a: int, b: int, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Pairing matrix ``<f_i, g_j>`` between two stacks of coefficient rows."""
    from .ffla import matmul_mod

    F = np.atleast_2d(np.asarray(f, dtype=np.int64)) * apolar_weights(a, b, p) % p
    G = np.atleast_2d(np.asarray(g, dtype=np.int64))
    return matmul_mod(F, G.T, p)


def rows_32_p1p1(Y: ThreeTwoP1P1, a: int, b: int, p: int | None = None) -> np.ndarray:
    """Condition rows of a (3,2)-point of P1 x P1 in bidegree ``(a, b)``.

    These are the tangent forms seen as functionals through the invariant
    pairing, i.e. the tangent rows multiplied by the apolar weights.
    """
    p = Y.support.p if p is None else p
    return tangent_rows(Y, a, b, p) * apolar_weights(a, b, p) % p


# --------------------------------------------------------------------------
# assembly


@dataclass(frozen=True)
class ConditionMatrix:
    basis: MonomialBasis
    matrix: np.ndarray
    p: int = DEFAULT_PRIME

    def rank(self) -> int:
        return rank(self.matrix, self.p)

    @property
    def dim_linsys(self) -> int:
        return len(self.basis) - self.rank()


def component_rows(c: Component, degree, p: int = DEFAULT_PRIME) -> np.ndarray:
    if isinstance(c, ThreeTwoP1P1):
        a, b = degree
        return rows_32_p1p1(c, a, b, p)
    (d,) = degree
    if isinstance(c, FatPoint):
        return rows_fat_point(c.support, c.m, d, p)
    if isinstance(c, SimplePoint):
        return rows_fat_point(c.support, 1, d, p)
    if isinstance(c, ThreeTwoP2):
        return rows_32_p2(c, d, p)
    if isinstance(c, Jet):
        return rows_jet(c, d, p)
    if isinstance(c, CrossJet):
        return rows_cross_jet(c, d, p)
    raise TypeError(f"unknown component {c!r}")


def normalize_degree(ambient: str, degree) -> tuple[int, ...]:
    if isinstance(degree, (int, np.integer)):
        degree = (int(degree),)
    degree = tuple(int(x) for x in degree)
    if len(degree) != (1 if ambient == PLANE else 2):
        raise AmbientMismatch(f"degree {degree} does not match ambient {ambient}")
    return degree


def condition_matrix(X: SchemeSpec, degree, p: int = DEFAULT_PRIME) -> ConditionMatrix:
    degree = normalize_degree(X.ambient, degree)
    basis = monomial_basis(X.ambient, degree)
    blocks = [component_rows(c, degree, p) for c in X.components]
    M = np.concatenate(blocks) if blocks else np.zeros((0, len(basis)), dtype=np.int64)
    return ConditionMatrix(basis, M, p)


def hilbert_function(X: SchemeSpec, degree, p: int = DEFAULT_PRIME) -> int:
    return condition_matrix(X, degree, p).rank()


# --------------------------------------------------------------------------
# random data


def random_vector(rng: np.random.Generator, n: int, p: int = DEFAULT_PRIME) -> tuple[int, ...]:
    while True:
        v = tuple(int(x) for x in rng.integers(0, p, size=n))
        if any(v):
            return v


def random_plane_point(rng, p: int = DEFAULT_PRIME) -> PlanePoint:
    return PlanePoint.make(random_vector(rng, 3, p), p)


def random_bipoint(rng, p: int = DEFAULT_PRIME) -> BiPoint:
    return BiPoint.make(random_vector(rng, 2, p), random_vector(rng, 2, p), p)


def random_32_p2(rng, p: int = DEFAULT_PRIME) -> ThreeTwoP2:
    P = random_plane_point(rng, p)
    while True:
        D = random_plane_point(rng, p)
        if D != P:
            return ThreeTwoP2(P, D)


def random_32_p1p1(rng, p: int = DEFAULT_PRIME) -> ThreeTwoP1P1:
    while True:
        try:
            return ThreeTwoP1P1(
                random_bipoint(rng, p), (random_vector(rng, 2, p), random_vector(rng, 2, p))
            )
        except DegenerateComponent:
            continue


# --------------------------------------------------------------------------
# JSON


def _point_from_json(raw, rng, p) -> PlanePoint:
    if raw == "rand":
        return random_plane_point(rng, p)
    return PlanePoint.make([int(x) for x in raw], p)


def _p1_from_json(raw, rng, p) -> tuple[int, int]:
    if raw == "rand":
        return random_vector(rng, 2, p)
    if len(raw) != 2:
        raise ValueError("points of P1 have two coordinates")
    return tuple(int(x) % p for x in raw)


def component_from_json(obj: dict, rng, p: int = DEFAULT_PRIME) -> Component:
    kind = obj.get("type")
    pt = lambda key: _point_from_json(obj[key], rng, p)  # noqa: E731
    if kind == "fat":
        m = int(obj.get("m", 1))
        return FatPoint(m, pt("support"))
    if kind in ("pt", "simple"):
        return SimplePoint(pt("support"))
    if kind == "32":
        return ThreeTwoP2(pt("support"), pt("direction"))
    if kind == "jet":
        return Jet(int(obj["m"]), pt("support"), pt("through"))
    if kind == "crossjet":
        return CrossJet(int(obj["m1"]), int(obj["m2"]), pt("support"), pt("dir1"), pt("dir2"))
    if kind == "32bi":
        sup = obj["support"]
        cos = obj["cosupport"]
        if sup == "rand":
            sup = ["rand", "rand"]
        if cos == "rand":
            cos = ["rand", "rand"]
        left, right = (_p1_from_json(x, rng, p) for x in sup)
        u1, u2 = (_p1_from_json(x, rng, p) for x in cos)
        return ThreeTwoP1P1(BiPoint.make(left, right, p), (u1, u2))
    raise ValueError(f"unknown component type {kind!r}")


def scheme_from_json(obj, rng=None, p: int = DEFAULT_PRIME) -> SchemeSpec:
    """Build a scheme from the JSON object form; ``"rand"`` draws seeded points."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "ambient" not in obj:
        raise ValueError("scheme JSON must be an object with an 'ambient' key")
    rng = np.random.default_rng(0) if rng is None else rng
    comps = [component_from_json(c, rng, p) for c in obj.get("components", [])]
    return SchemeSpec(obj["ambient"], comps)


def component_to_json(c: Component) -> dict:
    if isinstance(c, FatPoint):
        return {"type": "fat", "m": c.m, "support": list(c.support.coords)}
    if isinstance(c, SimplePoint):
        return {"type": "pt", "support": list(c.support.coords)}
    if isinstance(c, ThreeTwoP2):
        return {"type": "32", "support": list(c.support.coords), "direction": list(c.direction.coords)}
    if isinstance(c, Jet):
        return {"type": "jet", "m": c.m, "support": list(c.support.coords), "through": list(c.through.coords)}
    if isinstance(c, CrossJet):
        return {
            "type": "crossjet", "m1": c.m1, "m2": c.m2, "support": list(c.support.coords),
            "dir1": list(c.dir1.coords), "dir2": list(c.dir2.coords),
        }
    return {
        "type": "32bi",
        "support": [list(c.support.left), list(c.support.right)],
        "cosupport": [list(c.cosupport[0]), list(c.cosupport[1])],
    }


def scheme_to_json(X: SchemeSpec) -> dict:
    return {"ambient": X.ambient, "components": [component_to_json(c) for c in X.components]}
