"""From P1 x P1 to the plane.

The map ``phi([s0:s1], [t0:t1]) = [s0 t0 : s1 t0 : s0 t1]`` identifies forms of
bidegree ``(a, b)`` with plane forms of degree ``a + b`` having multiplicity
``a`` at ``Q1 = [0:1:0]`` and ``b`` at ``Q2 = [0:0:1]``.  A (3,2)-point of
P1 x P1 goes to a (3,2)-point of the plane whose line is the image of its
tangent direction, so linear systems on both sides have the same dimension.
"""

from __future__ import annotations

import math

import numpy as np

from .ffla import DEFAULT_PRIME, P1XP1, PLANE, inv_mod
from .schemes import (
    BiPoint,
    DegenerateComponent,
    FatPoint,
    PlanePoint,
    SchemeSpec,
    ThreeTwoP1P1,
    ThreeTwoP2,
    Q1,
    Q2,
    condition_matrix,
    random_32_p1p1,
)
from .verdict import Verdict

MAX_RETRIES = 100


class PhiUndefined(ValueError):
    """The point lies on the locus ``s0 t0 = 0`` where the map is not defined."""


def phi_vector(v1, v2, p: int = DEFAULT_PRIME) -> tuple[int, int, int]:
    return (v1[0] * v2[0] % p, v1[1] * v2[0] % p, v1[0] * v2[1] % p)


def phi_point(P: BiPoint) -> PlanePoint:
    p = P.p
    if P.left[0] % p == 0 or P.right[0] % p == 0:
        raise PhiUndefined(f"{P.left}, {P.right} lies on s0 t0 = 0")
    return PlanePoint.make(phi_vector(P.left, P.right, p), p)


def phi_differential(v1, v2, u1, u2, p: int = DEFAULT_PRIME) -> tuple[int, int, int]:
    """Derivative of ``phi`` at ``(v1, v2)`` applied to the tangent vector ``(u1, u2)``."""
    return (
        (u1[0] * v2[0] + v1[0] * u2[0]) % p,
        (u1[1] * v2[0] + v1[1] * u2[0]) % p,
        (u1[0] * v2[1] + v1[0] * u2[1]) % p,
    )


def push_component(Y: ThreeTwoP1P1) -> ThreeTwoP2:
    p = Y.support.p
    P = phi_point(Y.support)
    w = phi_differential(Y.support.left, Y.support.right, *Y.cosupport, p)
    try:
        D = PlanePoint.make(w, p)
        return ThreeTwoP2(P, D)
    except DegenerateComponent as exc:
        raise PhiUndefined("tangent direction is killed by the differential") from exc


def push_scheme(X: SchemeSpec, a: int, b: int) -> SchemeSpec:
    """``phi(X) + a Q1 + b Q2`` as a plane scheme, read in degree ``a + b``."""
    if X.ambient != P1XP1:
        raise ValueError("push_scheme expects a scheme on P1 x P1")
    p = X.components[0].support.p if X.components else DEFAULT_PRIME
    comps = [push_component(c) for c in X.components]
    if a > 0:
        comps.append(FatPoint(a, PlanePoint.make(Q1, p)))
    if b > 0:
        comps.append(FatPoint(b, PlanePoint.make(Q2, p)))
    try:
        return SchemeSpec(PLANE, comps)
    except ValueError as exc:
        raise PhiUndefined("two images coincide") from exc


def affine_change(Y: ThreeTwoP1P1, g1, g2) -> ThreeTwoP1P1:
    """Apply lower-triangular ``g1``, ``g2`` (fixing ``s0``, ``t0`` up to scale) to one component.

    The cosupport is rescaled together with the support so the component is
    the image of the original one.
    """
    p = Y.support.p

    def move(g, v, u):
        gv = [(g[i][0] * v[0] + g[i][1] * v[1]) % p for i in range(2)]
        gu = [(g[i][0] * u[0] + g[i][1] * u[1]) % p for i in range(2)]
        lead = gv[0] or gv[1]
        k = inv_mod(lead, p)
        return [x * k % p for x in gv], [x * k % p for x in gu]

    v1, u1 = move(g1, Y.support.left, Y.cosupport[0])
    v2, u2 = move(g2, Y.support.right, Y.cosupport[1])
    return ThreeTwoP1P1(BiPoint.make(v1, v2, p), (tuple(u1), tuple(u2)))


def induced_plane_change(g1, g2, p: int = DEFAULT_PRIME) -> np.ndarray:
    """The plane matrix ``G`` with ``phi(g1 v1, g2 v2) = G phi(v1, v2)``.

    Only defined for lower-triangular ``g1, g2``, which preserve ``s0`` and ``t0``.
    """
    if g1[0][1] % p or g2[0][1] % p:
        raise PhiUndefined("the change does not preserve the domain of phi")
    a, c, d = g1[0][0], g1[1][0], g1[1][1]
    e, f, h = g2[0][0], g2[1][0], g2[1][1]
    return np.array([[a * e, 0, 0], [c * e, d * e, 0], [a * f, 0, a * h]], dtype=object) % p


def random_transfer_source(a: int, b: int, s: int, rng, p: int = DEFAULT_PRIME) -> tuple[SchemeSpec, SchemeSpec]:
    """``s`` random (3,2)-points on P1 x P1 and their push to the plane."""
    for _ in range(MAX_RETRIES):
        try:
            X = SchemeSpec(P1XP1, [random_32_p1p1(rng, p) for _ in range(s)])
            return X, push_scheme(X, a, b)
        except (PhiUndefined, ValueError):
            continue
    raise PhiUndefined(f"no admissible sample in {MAX_RETRIES} attempts")


def transfer_row(a: int, b: int, s: int, seed: int, trial: int = 0, p: int = DEFAULT_PRIME) -> dict:
    rng = np.random.default_rng([seed, a, b, s, trial])
    X, Y = random_transfer_source(a, b, s, rng, p)
    hf_x = condition_matrix(X, (a, b), p).rank()
    hf_y = condition_matrix(Y, a + b, p).rank()
    dim_x = (a + 1) * (b + 1) - hf_x
    dim_y = math.comb(a + b + 2, 2) - hf_y
    offset = math.comb(a + 1, 2) + math.comb(b + 1, 2)
    return {
        "a": a, "b": b, "s": s, "seed": seed, "trial": trial,
        "hf_source": hf_x, "hf_target": hf_y, "dim_source": dim_x, "dim_target": dim_y,
        "ok": dim_x == dim_y and hf_x == hf_y - offset,
    }


def verify_transfer(a: int, b: int, s: int, trials: int = 3, seed: int = 0, p: int = DEFAULT_PRIME) -> Verdict:
    """Linear systems on both sides have equal dimension on every sampled instance.

    Equivalently ``HF_X(a, b) = HF_Y(a + b) - C(a+1, 2) - C(b+1, 2)``: the fat
    points at ``Q1, Q2`` add their own conditions on the plane side.
    """
    if a * b < 1 or s < 0:
        raise ValueError("need a, b >= 1 and s >= 0")
    return Verdict.from_rows([transfer_row(a, b, s, seed, t, p) for t in range(trials)])


def transfer_suite(count: int = 50, amax: int = 8, bmax: int = 8, seed: int = 0, p: int = DEFAULT_PRIME) -> Verdict:
    """``count`` seeded instances with random ``a <= amax``, ``b <= bmax`` and ``1 <= s <= s2``."""
    from .hilbert import critical_s

    rng = np.random.default_rng([seed, 5])
    rows = []
    for k in range(count):
        a = int(rng.integers(1, amax + 1))
        b = int(rng.integers(1, bmax + 1))
        s = int(rng.integers(1, critical_s(a, b)[1] + 1))
        rows.append(transfer_row(a, b, s, seed, k, p))
    return Verdict.from_rows(rows)
