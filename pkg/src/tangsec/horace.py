"""Residues and traces with respect to a line, and the checks built on them.

Residue and trace are rewrite rules on scheme components.  Each rule is a
local ideal computation done once by hand; ``verify_residue_example`` and the
tests replay them through :mod:`tangsec.idealcalc`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .ffla import DEFAULT_PRIME, PLANE, linear_form, nullspace, poly_pow, rank
from .idealcalc import (
    ideal,
    ideal_degree_piece,
    piece_colon,
    piece_equal,
    piece_intersect,
    residue_piece,
    scheme_ideal_piece,
    trace_piece,
)
from .schemes import (
    CrossJet,
    DegenerateComponent,
    FatPoint,
    Jet,
    PlanePoint,
    SchemeSpec,
    SimplePoint,
    ThreeTwoP2,
    condition_matrix,
    cross,
    dot,
    random_plane_point,
    random_vector,
)
from .verdict import Verdict


class NotVerticallyGraded(ValueError):
    """The component has no residue/trace rule for this line and exponent."""


@dataclass(frozen=True)
class LineRef:
    A: PlanePoint
    B: PlanePoint

    def __post_init__(self):
        if self.A == self.B:
            raise DegenerateComponent("a line needs two distinct points")

    @classmethod
    def through(cls, A, B, p: int = DEFAULT_PRIME) -> "LineRef":
        return cls(PlanePoint.make(A, p), PlanePoint.make(B, p))

    @classmethod
    def from_form(cls, coeffs, p: int = DEFAULT_PRIME) -> "LineRef":
        K = nullspace(np.array([coeffs], dtype=np.int64), 3, p)
        return cls(PlanePoint.make(K[0], p), PlanePoint.make(K[1], p))

    @property
    def p(self) -> int:
        return self.A.p

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return cross(self.A, self.B, self.p)

    @property
    def form(self) -> dict:
        return linear_form(self.coeffs)

    def contains(self, P) -> bool:
        return dot(self.coeffs, P, self.p) == 0

    def parameter(self, P) -> tuple[int, int]:
        """``(s, t)`` with ``P`` proportional to ``s A + t B``."""
        p = self.p
        A, B = self.A.coords, self.B.coords
        for i in range(3):
            for k in range(i + 1, 3):
                det = (A[i] * B[k] - A[k] * B[i]) % p
                if det:
                    s = (P[i] * B[k] - P[k] * B[i]) * pow(det, p - 2, p) % p
                    t = (A[i] * P[k] - A[k] * P[i]) * pow(det, p - 2, p) % p
                    return s, t
        raise DegenerateComponent("line points are dependent")

    def point(self, s: int, t: int) -> PlanePoint:
        p = self.p
        return PlanePoint.make([(s * a + t * b) % p for a, b in zip(self.A, self.B)], p)

    def other_point(self, P) -> PlanePoint:
        """A point of the line distinct from ``P``."""
        return self.A if self.A != P else self.B

    def random_point(self, rng) -> PlanePoint:
        s, t = random_vector(rng, 2, self.p)
        return self.point(s, t)


@dataclass(frozen=True)
class TraceScheme:
    line: LineRef
    entries: tuple = ()

    def __post_init__(self):
        seen = set()
        for P, n in self.entries:
            if n < 1 or not self.line.contains(P) or P in seen:
                raise ValueError("trace entries must be distinct points of the line with positive length")
            seen.add(P)

    @property
    def length(self) -> int:
        return sum(n for _, n in self.entries)

    def __add__(self, other: "TraceScheme") -> "TraceScheme":
        return TraceScheme(self.line, self.entries + other.entries)


# --------------------------------------------------------------------------
# rewrite rules


def _jvector(X: SchemeSpec, j) -> list[int]:
    if j is None:
        return [1] * len(X.components)
    if isinstance(j, int):
        return [j] * len(X.components)
    j = list(j)
    if len(j) != len(X.components):
        raise ValueError("one exponent per component is required")
    return j


def _as_jet(m1, m2, P, d1, d2):
    """``(l1^m1, l2^m2)`` in its simplest component type (``None`` if empty)."""
    if m1 == 0 or m2 == 0:
        return None
    if m1 == 1 and m2 == 1:
        return SimplePoint(P)
    if m1 == 1:
        return Jet(m2, P, d1)
    if m2 == 1:
        return Jet(m1, P, d2)
    return CrossJet(m1, m2, P, d1, d2)


def _third_line_residue(c: CrossJet, L: LineRef):
    """Residue of the (2,2)-jet by ``a l1 + b l2``: the 2-jet on ``a l1 - b l2``."""
    p = L.p
    l1 = cross(c.support, c.dir1, p)
    l2 = cross(c.support, c.dir2, p)
    Lc = L.coeffs
    for i in range(3):
        for k in range(i + 1, 3):
            det = (l1[i] * l2[k] - l1[k] * l2[i]) % p
            if det:
                alpha = (Lc[i] * l2[k] - Lc[k] * l2[i]) * pow(det, p - 2, p) % p
                beta = (l1[i] * Lc[k] - l1[k] * Lc[i]) * pow(det, p - 2, p) % p
                refl = [(alpha * x - beta * y) % p for x, y in zip(l1, l2)]
                return Jet(2, c.support, LineRef.from_form(refl, p).other_point(c.support))
    raise DegenerateComponent("cross-jet lines coincide")


def _rewrite(c, L: LineRef, j: int):
    """``(residue component or None, trace length or 0)`` of one component."""
    if j < 1:
        raise ValueError("exponents must be positive")
    if not isinstance(c.support, PlanePoint):
        raise NotVerticallyGraded("only plane components have residues by a line")
    if not L.contains(c.support):
        if j != 1:
            raise NotVerticallyGraded("components off the line only admit exponent 1")
        return c, 0
    P = c.support
    if isinstance(c, SimplePoint) or (isinstance(c, FatPoint) and c.m == 1):
        if j != 1:
            raise NotVerticallyGraded("a simple point only admits exponent 1")
        return None, 1
    if isinstance(c, FatPoint):
        if j != 1:
            raise NotVerticallyGraded("fat points are handled with exponent 1")
        return FatPoint(c.m - 1, P), c.m
    if isinstance(c, ThreeTwoP2):
        if L.contains(c.direction):
            # own line: layers (z2^3) then (z2^2)
            if j == 1:
                return Jet(2, P, c.direction), 3
            if j == 2:
                return Jet(3, P, c.direction), 2
            raise NotVerticallyGraded("a (3,2)-point has two layers along its own line")
        if j in (1, 2):
            return FatPoint(2, P), 2
        if j == 3:
            return CrossJet(2, 2, P, c.direction, L.other_point(P)), 1
        raise NotVerticallyGraded("a (3,2)-point has three layers along a transversal line")
    if isinstance(c, Jet):
        if L.contains(c.through):
            if j != 1:
                raise NotVerticallyGraded("a jet along the line only admits exponent 1")
            return None, c.m
        if j != 1:
            raise NotVerticallyGraded("a transversal jet only admits exponent 1")
        return (Jet(c.m - 1, P, c.through) if c.m > 1 else None), 1
    if isinstance(c, CrossJet):
        if L.contains(c.dir1):
            if j > c.m1:
                raise NotVerticallyGraded("exponent exceeds the cross-jet order")
            return _as_jet(c.m1 - 1, c.m2, P, c.dir1, c.dir2), c.m2
        if L.contains(c.dir2):
            if j > c.m2:
                raise NotVerticallyGraded("exponent exceeds the cross-jet order")
            return _as_jet(c.m1, c.m2 - 1, P, c.dir1, c.dir2), c.m1
        if (c.m1, c.m2) == (2, 2) and j == 1:
            return _third_line_residue(c, L), 2
        raise NotVerticallyGraded("only the (2,2)-jet has a rule for a third line")
    raise NotVerticallyGraded(f"no rule for {type(c).__name__}")


def residue_scheme(X: SchemeSpec, L: LineRef, j=None) -> SchemeSpec:
    if X.ambient != PLANE:
        raise NotVerticallyGraded("residues are defined for plane schemes")
    out = []
    for c, jc in zip(X.components, _jvector(X, j)):
        r, _ = _rewrite(c, L, jc)
        if r is not None:
            out.append(r)
    return SchemeSpec(PLANE, out)


def trace_scheme(X: SchemeSpec, L: LineRef, j=None) -> TraceScheme:
    if X.ambient != PLANE:
        raise NotVerticallyGraded("traces are defined for plane schemes")
    entries = []
    for c, jc in zip(X.components, _jvector(X, j)):
        _, n = _rewrite(c, L, jc)
        if n:
            entries.append((c.support, n))
    return TraceScheme(L, tuple(entries))


def trace_rows(T: TraceScheme, d: int) -> np.ndarray:
    """Vanishing conditions on binary forms ``sum_k c_k s^(d-k) t^k`` restricted to the line."""
    p = T.line.p
    rows = []
    for P, n in T.entries:
        s0, t0 = T.line.parameter(P)
        sig, tau = (0, 1) if s0 else (1, 0)
        for i in range(n):
            row = []
            for k in range(d + 1):
                val = 0
                for a in range(i + 1):
                    b = i - a
                    if a > d - k or b > k:
                        continue
                    val += (
                        math.comb(d - k, a) * pow(s0, d - k - a, p) * pow(sig, a, p)
                        * math.comb(k, b) * pow(t0, k - b, p) * pow(tau, b, p)
                    )
                row.append(val % p)
            rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(-1, d + 1)


def trace_rank(T: TraceScheme, d: int) -> int:
    if d < 0:
        return 0
    return rank(trace_rows(T, d), T.line.p)


def _dim(X: SchemeSpec, d: int, p: int) -> int:
    if d < 0:
        return 0
    return condition_matrix(X, d, p).dim_linsys


def _rank(X: SchemeSpec, d: int, p: int) -> int:
    if d < 0:
        return 0
    return condition_matrix(X, d, p).rank()


def is_fixed_component(X: SchemeSpec, L: LineRef, d: int, p: int = DEFAULT_PRIME) -> bool:
    """True iff every degree-``d`` form through ``X`` is divisible by the form of ``L``."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    return _dim(X, d, p) == _dim(residue_scheme(X, L), d - 1, p)


def fixed_component_by_count(X: SchemeSpec, L: LineRef, d: int) -> bool:
    """The counting shortcut: the trace on ``L`` is longer than ``d``."""
    return trace_scheme(X, L).length > d


@dataclass(frozen=True)
class HoraceStep:
    degree: int
    trace_length: int
    trace_rank: int
    residue_length: int
    residue_rank: int
    residue_dim: int
    trace_ok: bool
    residue_ok: bool
    part: int | None

    @property
    def conclusion(self) -> bool:
        return self.part is not None


def horace_step_check(
    X: SchemeSpec, Ytilde: SchemeSpec, L: LineRef, j=None, d: int = 1, p: int = DEFAULT_PRIME
) -> HoraceStep:
    """Check the two hypotheses of the differential Horace lemma.

    Part 1 (both independent) certifies that the scheme imposes independent
    conditions in degree ``d``; part 2 (both systems empty) certifies that
    its linear system is empty.
    """
    tr = trace_scheme(X, L) + trace_scheme(Ytilde, L, j)
    res = residue_scheme(X, L) + residue_scheme(Ytilde, L, j)
    t_rank = trace_rank(tr, d)
    r_rank = _rank(res, d - 1, p)
    r_dim = _dim(res, d - 1, p)
    trace_ok = t_rank == tr.length
    residue_ok = r_rank == res.length
    if trace_ok and residue_ok:
        part = 1
    elif t_rank == d + 1 and r_dim == 0:
        part = 2
    else:
        part = None
    return HoraceStep(d, tr.length, t_rank, res.length, r_rank, r_dim, trace_ok, residue_ok, part)


# --------------------------------------------------------------------------
# lemma checks


def verify_degeneration(samples: int = 10, dmax: int = 6, seed: int = 0, p: int = DEFAULT_PRIME) -> Verdict:
    """Two simple 2-jets on a line colliding into the (2,2)-jet.

    For random nonzero ``lam`` the union of ``(z2^2, z1 + lam z0)`` and
    ``(z2^2, z1 - lam z0)`` is cut out by ``(z2^2, z1^2 - lam^2 z0^2)``; at
    ``lam = 0`` this is ``(z1^2, z2^2)``, the (2,2)-jet at ``[1:0:0]``.
    """
    rng = np.random.default_rng([seed, 8])
    z0, z1, z2 = (linear_form(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    sq = lambda f: poly_pow(f, 2, p)  # noqa: E731
    rows = []
    limit = ideal(PLANE, sq(z1), sq(z2), p=p)
    cj = SchemeSpec(PLANE, [CrossJet(2, 2, PlanePoint.make((1, 0, 0), p), PlanePoint.make((0, 0, 1), p),
                                     PlanePoint.make((0, 1, 0), p))])
    for _ in range(samples):
        lam = int(rng.integers(1, p))
        plus = ideal(PLANE, sq(z2), {(0, 1, 0): 1, (1, 0, 0): lam}, p=p)
        minus = ideal(PLANE, sq(z2), {(0, 1, 0): 1, (1, 0, 0): -lam}, p=p)
        family = lambda t: ideal(PLANE, sq(z2), {(0, 2, 0): 1, (2, 0, 0): -t * t}, p=p)  # noqa: E731
        for d in range(dmax + 1):
            inter = piece_intersect(ideal_degree_piece(plus, d), ideal_degree_piece(minus, d))
            fam = ideal_degree_piece(family(lam), d)
            at0 = ideal_degree_piece(family(0), d)
            rows.append({
                "lambda": lam,
                "degree": d,
                "dim": fam.dim,
                "intersection": piece_equal(inter, fam),
                "flat": fam.dim == at0.dim,
                "limit": piece_equal(at0, ideal_degree_piece(limit, d))
                and piece_equal(at0, scheme_ideal_piece(cj, d, p)),
            })
    for r in rows:
        r["ok"] = r["intersection"] and r["flat"] and r["limit"]
    return Verdict.from_rows(rows)


def verify_colon_identities(instances: int = 20, dmax: int = 6, seed: int = 0, p: int = DEFAULT_PRIME) -> Verdict:
    """``(l1^2, l2^2) : l1 = (l1, l2^2)`` and ``(l1^2, l2^2) : (a l1 + b l2) = (l1^2, a l1 - b l2)``."""
    rng = np.random.default_rng([seed, 7])
    rows = []
    for k in range(instances):
        while True:
            c1, c2 = random_vector(rng, 3, p), random_vector(rng, 3, p)
            if any(cross(c1, c2, p)):
                break
        alpha, beta = (int(x) for x in rng.integers(1, p, size=2))
        l1, l2 = linear_form(c1), linear_form(c2)
        I = ideal(PLANE, poly_pow(l1, 2, p), poly_pow(l2, 2, p), p=p)
        g = linear_form([(alpha * x + beta * y) % p for x, y in zip(c1, c2)])
        h = linear_form([(alpha * x - beta * y) % p for x, y in zip(c1, c2)])
        first = ideal(PLANE, l1, poly_pow(l2, 2, p), p=p)
        second = ideal(PLANE, poly_pow(l1, 2, p), h, p=p)
        ok1 = all(piece_equal(piece_colon(I, l1, d), ideal_degree_piece(first, d)) for d in range(dmax + 1))
        ok2 = all(piece_equal(piece_colon(I, g, d), ideal_degree_piece(second, d)) for d in range(dmax + 1))
        rows.append({"instance": k, "own_line": ok1, "third_line": ok2, "ok": ok1 and ok2})
    return Verdict.from_rows(rows)


def _example_setup(p):
    P = PlanePoint.make((1, 0, 0), p)
    D = PlanePoint.make((0, 0, 1), p)
    z1, z2 = linear_form((0, 1, 0)), linear_form((0, 0, 1))
    J = ideal(PLANE, poly_pow(z1, 2, p), {(0, 1, 2): 1}, poly_pow(z2, 3, p), p=p)
    return P, D, z1, z2, J


def verify_residue_example(dmax: int = 6, p: int = DEFAULT_PRIME) -> Verdict:
    """Residues and traces of ``(z1^2, z1 z2^2, z2^3)`` at ``[1:0:0]``.

    The scheme is the (3,2)-point with line ``z1 = 0``.  Each identity is
    checked twice for every degree up to ``dmax``: once by colon ideals and
    once through the rewrite rules.
    """
    P, D, z1, z2, J = _example_setup(p)
    Y = SchemeSpec(PLANE, [ThreeTwoP2(P, D)])
    own = LineRef.from_form((0, 1, 0), p)
    trans = LineRef.from_form((0, 0, 1), p)
    I = lambda *g: ideal(PLANE, *g, p=p)  # noqa: E731
    pw = lambda f, n: poly_pow(f, n, p)  # noqa: E731
    fat2 = I(pw(z1, 2), {(0, 1, 1): 1}, pw(z2, 2))
    cases = [
        ("residue", own, z1, z2, 1, "(z1,z2^2)", I(z1, pw(z2, 2)), None),
        ("trace", own, z1, z2, 1, "(z2^3)", I(z1, pw(z2, 3)), 3),
        ("residue", own, z1, z2, 2, "(z1,z2^3)", I(z1, pw(z2, 3)), None),
        ("trace", own, z1, z2, 2, "(z2^2)", I(z1, pw(z2, 2)), 2),
        ("residue", trans, z2, z1, 1, "(z1^2,z1z2,z2^2)", fat2, None),
        ("trace", trans, z2, z1, 1, "(z1^2)", I(z2, pw(z1, 2)), 2),
        ("residue", trans, z2, z1, 2, "(z1^2,z1z2,z2^2)", fat2, None),
        ("trace", trans, z2, z1, 2, "(z1^2)", I(z2, pw(z1, 2)), 2),
        ("residue", trans, z2, z1, 3, "(z1^2,z2^2)", I(pw(z1, 2), pw(z2, 2)), None),
        ("trace", trans, z2, z1, 3, "(z1)", I(z2, z1), 1),
    ]
    rows = []
    base_ok = all(piece_equal(ideal_degree_piece(J, d), scheme_ideal_piece(Y, d, p)) for d in range(dmax + 1))
    rows.append({"identity": "scheme ideal", "kind": "setup", "j": 0, "colon": base_ok, "rewrite": base_ok, "ok": base_ok})
    for kind, L, ell, other, j, name, target, length in cases:
        if kind == "residue":
            colon_ok = all(piece_equal(residue_piece(J, ell, j, d), ideal_degree_piece(target, d)) for d in range(dmax + 1))
            R = residue_scheme(Y, L, [j])
            rew_ok = all(piece_equal(scheme_ideal_piece(R, d, p), ideal_degree_piece(target, d)) for d in range(dmax + 1))
            rew_ok = rew_ok and all(
                condition_matrix(R, d, p).dim_linsys == ideal_degree_piece(target, d).dim for d in range(dmax + 1)
            )
        else:
            colon_ok = all(piece_equal(trace_piece(J, ell, j, d), ideal_degree_piece(target, d)) for d in range(dmax + 1))
            T = trace_scheme(Y, L, [j])
            rew_ok = T.length == length and len(T.entries) == 1
            if rew_ok:
                Tideal = I(ell, pw(other, T.entries[0][1]))
                rew_ok = all(
                    piece_equal(trace_piece(J, ell, j, d), ideal_degree_piece(Tideal, d)) for d in range(dmax + 1)
                )
        line = "own" if L is own else "transversal"
        rows.append({"identity": name, "kind": f"{kind} {line}", "j": j, "colon": colon_ok, "rewrite": rew_ok,
                     "ok": colon_ok and rew_ok})
    return Verdict.from_rows(rows)


def verify_collinear_lemma(
    X: SchemeSpec, L: LineRef, s: int, d: int, trials: int = 3, seed: int = 0, p: int = DEFAULT_PRIME
) -> Verdict:
    """Adding general points of ``L`` one at a time.

    (1) If ``dim L_d(X + (s-1) pts) > dim L_{d-1}(Res_L X)`` then
    ``dim L_d(X + s pts) = dim L_d(X) - s``.
    (2) If ``dim L_{d-1}(Res_L X) = 0`` and ``dim L_d(X) <= s`` then
    ``L_d(X + s pts)`` is empty.
    """
    if s < 1:
        raise ValueError("s must be positive")
    rows = []
    dim_x = _dim(X, d, p)
    dim_res = _dim(residue_scheme(X, L), d - 1, p)
    taken = {c.support for c in X.components}
    for trial in range(trials):
        rng = np.random.default_rng([seed, s, d, trial])
        pts = []
        while len(pts) < s:
            Q = L.random_point(rng)
            if Q not in taken and Q not in pts:
                pts.append(Q)
        with_pts = lambda k: X + SchemeSpec(PLANE, [SimplePoint(Q) for Q in pts[:k]])  # noqa: E731
        dim_s1 = _dim(with_pts(s - 1), d, p)
        dim_s = _dim(with_pts(s), d, p)
        hyp1 = dim_s1 > dim_res
        hyp2 = dim_res == 0 and dim_x <= s
        ok1 = (not hyp1) or dim_s == dim_x - s
        ok2 = (not hyp2) or dim_s == 0
        rows.append({
            "trial": trial, "dim_X": dim_x, "dim_res": dim_res, "dim_s_minus_1": dim_s1, "dim_s": dim_s,
            "case1": hyp1, "case2": hyp2, "ok": ok1 and ok2,
        })
    return Verdict.from_rows(rows)


def random_point_on_line(L: LineRef, rng, avoid: Sequence = ()) -> PlanePoint:
    while True:
        Q = L.random_point(rng)
        if Q not in avoid:
            return Q


def random_point_off_line(L: LineRef, rng, p: int = DEFAULT_PRIME) -> PlanePoint:
    while True:
        Q = random_plane_point(rng, p)
        if not L.contains(Q):
            return Q


def collinear_suite(trials: int = 3, seed: int = 0, p: int = DEFAULT_PRIME) -> Verdict:
    """A handful of instances covering both implications of the collinear-points lemma."""
    rng = np.random.default_rng([seed, 9])
    L = LineRef(random_plane_point(rng, p), random_plane_point(rng, p))
    fat = FatPoint(2, random_point_off_line(L, rng, p))
    y = ThreeTwoP2(random_point_off_line(L, rng, p), random_plane_point(rng, p))
    cases = [
        ("double point", SchemeSpec(PLANE, [fat]), 2, 2),
        ("empty", SchemeSpec(PLANE), 2, 1),
        ("double point, emptying", SchemeSpec(PLANE, [fat]), 3, 2),
    ]
    cases += [("(3,2)-point and double point", SchemeSpec(PLANE, [y, fat]), s, 4) for s in range(1, 6)]
    rows = []
    for name, X, s, d in cases:
        for r in verify_collinear_lemma(X, L, s, d, trials, seed, p).rows:
            rows.append({"case": name, "s": s, "degree": d, **r})
    return Verdict.from_rows(rows)


def horace_step_suite(seed: int = 0, p: int = DEFAULT_PRIME) -> Verdict:
    """Horace steps with known outcomes, each compared with a direct rank computation.

    When the step certifies independence (part 1) or emptiness (part 2), the
    scheme obtained by moving the components on ``L`` to general position
    must satisfy the same property in degree ``d``.
    """
    rng = np.random.default_rng([seed, 10])
    L = LineRef(random_plane_point(rng, p), random_plane_point(rng, p))
    on = lambda: random_point_on_line(L, rng)  # noqa: E731
    off = lambda: random_point_off_line(L, rng, p)  # noqa: E731
    P = on()
    cases = [
        ("(3,2)-point along the line", SchemeSpec(PLANE), SchemeSpec(PLANE, [ThreeTwoP2(P, L.other_point(P))]), [1], 2, 1),
        ("double point off the line", SchemeSpec(PLANE, [FatPoint(2, off())]), SchemeSpec(PLANE), [], 2, 1),
        ("too many points on the line", SchemeSpec(PLANE), SchemeSpec(PLANE, [SimplePoint(on()) for _ in range(4)]),
         [1] * 4, 2, None),
        ("transversal (3,2)-point, second layer", SchemeSpec(PLANE, [FatPoint(2, off())]),
         SchemeSpec(PLANE, [ThreeTwoP2(on(), off())]), [2], 4, 1),
        ("line forced, system empty", SchemeSpec(PLANE, [FatPoint(2, off())]),
         SchemeSpec(PLANE, [SimplePoint(on()) for _ in range(4)]), [1] * 4, 2, 2),
    ]
    rows = []
    for name, X, Yt, j, d, expected_part in cases:
        step = horace_step_check(X, Yt, L, j, d, p)
        moved = SchemeSpec(PLANE, [_generic_copy(c, rng, p) for c in Yt.components])
        Z = X + moved
        r = _rank(Z, d, p)
        if step.part == 1:
            direct = r == Z.length
        elif step.part == 2:
            direct = _dim(Z, d, p) == 0
        else:
            direct = True
        rows.append({
            "case": name, "degree": d, "trace_ok": step.trace_ok, "residue_ok": step.residue_ok,
            "part": step.part, "expected_part": expected_part, "direct": direct,
            "ok": step.part == expected_part and direct,
        })
    return Verdict.from_rows(rows)


def _generic_copy(c, rng, p):
    """The same component type at a random support with random auxiliary points."""
    P = random_plane_point(rng, p)
    if isinstance(c, FatPoint):
        return FatPoint(c.m, P)
    if isinstance(c, SimplePoint):
        return SimplePoint(P)
    if isinstance(c, ThreeTwoP2):
        return ThreeTwoP2(P, random_plane_point(rng, p))
    if isinstance(c, Jet):
        return Jet(c.m, P, random_plane_point(rng, p))
    if isinstance(c, CrossJet):
        return CrossJet(c.m1, c.m2, P, random_plane_point(rng, p), random_plane_point(rng, p))
    raise TypeError(f"no generic copy for {type(c).__name__}")
