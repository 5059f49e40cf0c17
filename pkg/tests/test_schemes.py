import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tangsec.ffla import DEFAULT_PRIME, matmul_mod, plane_basis, rank, rref
from tangsec.idealcalc import component_ideal, ideal_degree_piece, scheme_ideal_piece
from tangsec.schemes import (
    AmbientMismatch,
    BiPoint,
    CrossJet,
    DegenerateComponent,
    FatPoint,
    Jet,
    PlanePoint,
    SchemeSpec,
    SimplePoint,
    ThreeTwoP1P1,
    ThreeTwoP2,
    condition_matrix,
    directional_rows,
    hasse_rows,
    random_32_p1p1,
    random_32_p2,
    random_plane_point,
    rows_32_p1p1,
    rows_32_p2,
    rows_cross_jet,
    rows_fat_point,
    rows_jet,
    scheme_from_json,
    scheme_to_json,
    tangent_rows,
)

p = DEFAULT_PRIME
seeds = st.integers(0, 2**32 - 1)


def pt(*c):
    return PlanePoint.make(c)


def oracle_rank(c, d):
    return len(plane_basis(d)) - ideal_degree_piece(component_ideal(c), d).dim


def test_point_normalization():
    assert pt(2, 4, 6) == pt(1, 2, 3)
    assert pt(0, 5, 0).coords == (0, 1, 0)
    with pytest.raises(DegenerateComponent):
        pt(0, 0, 0)
    assert BiPoint.make((3, 6), (0, 2)) == BiPoint.make((1, 2), (0, 1))


def test_fat_point_rows(rng):
    P = random_plane_point(rng)
    assert rows_fat_point(P, 1, 3).shape == (1, 10)
    assert rank(rows_fat_point(P, 2, 1)) == 3
    R = rows_fat_point(P, 3, 4)
    assert R.shape[0] == 6 and rank(R) == 6 == oracle_rank(FatPoint(3, P), 4)


def test_evaluation_row():
    P = pt(1, 2, 3)
    row = rows_fat_point(P, 1, 2)[0]
    # x0^2, x0x1, x0x2, x1^2, x1x2, x2^2 at (1, 2, 3)
    assert row.tolist() == [1, 2, 3, 4, 6, 9]


@given(seeds, st.integers(1, 4), st.integers(0, 6))
def test_fat_rows_match_directional(seed, m, d):
    rng = np.random.default_rng(seed)
    P = random_plane_point(rng)
    k = next(i for i in range(3) if P[i])
    e = [tuple(int(i == j) for j in range(3)) for i in range(3) if i != k]
    pairs = [(i, t - i) for t in range(m) for i in range(t, -1, -1)]
    D = directional_rows(P, e[0], e[1], pairs, d)
    assert np.array_equal(rref(D), rref(rows_fat_point(P, m, d)))


def test_hasse_rows_entries():
    # D^(0,1,0) of x0^a x1^b x2^c at P is b * P^(beta - delta)
    P = pt(1, 2, 3)
    row = hasse_rows(P, [(0, 1, 0)], 2)[0]
    assert row.tolist() == [0, 1, 0, 4, 3, 0]


def test_32_ranks(rng):
    Y = random_32_p2(rng)
    assert rank(rows_32_p2(Y, 1)) == 3 == oracle_rank(Y, 1)
    for d in range(2, 7):
        assert rank(rows_32_p2(Y, d)) == 5
    assert oracle_rank(Y, 6) == 5


@given(seeds, st.integers(0, p - 1), st.integers(2, 6))
def test_32_span_independent_of_v(seed, c, d):
    rng = np.random.default_rng(seed)
    Y = random_32_p2(rng)
    v = random_plane_point(rng).coords
    w = Y.direction.coords
    v2 = tuple((a + c * b) % p for a, b in zip(v, w))
    a = rref(rows_32_p2(Y, d, v=v))
    b = rref(rows_32_p2(Y, d, v=v2))
    if rank(np.array([Y.support.coords, v, w])) == 3:
        assert np.array_equal(a, b)


def test_jet_rows(rng):
    P, Q = random_plane_point(rng), random_plane_point(rng)
    assert rows_jet(Jet(1, P, Q), 3).shape[0] == 1
    assert rank(rows_jet(Jet(2, P, Q), 1)) == 2
    assert rank(rows_jet(Jet(3, P, Q), 2)) == 3 == oracle_rank(Jet(3, P, Q), 2)


def test_cross_jet_rows(rng):
    P, A, B = (random_plane_point(rng) for _ in range(3))
    assert rows_cross_jet(CrossJet(1, 1, P, A, B), 2).shape[0] == 1
    J = CrossJet(2, 2, P, A, B)
    assert rank(rows_cross_jet(J, 2)) == 4 == oracle_rank(J, 2)
    assert rank(rows_cross_jet(J, 1)) == 3 == oracle_rank(J, 1)


def test_32_p1p1_ranks(rng):
    assert rank(rows_32_p1p1(random_32_p1p1(rng), 1, 1)) == 4
    assert rank(rows_32_p1p1(random_32_p1p1(rng), 2, 2)) == 5
    for a, b in [(1, 2), (2, 1), (3, 4), (5, 2)]:
        assert rank(rows_32_p1p1(random_32_p1p1(rng), a, b)) == 5


def test_32_p1p1_homogeneous(rng):
    Y = random_32_p1p1(rng)
    # rescaling the support together with the cosupport is the same scheme
    c = 12345
    v1 = [c * x % p for x in Y.support.left]
    u1 = [c * x % p for x in Y.cosupport[0]]
    Z = ThreeTwoP1P1(BiPoint(tuple(v1), Y.support.right), (tuple(u1), Y.cosupport[1]))
    assert np.array_equal(rref(tangent_rows(Y, 3, 2)), rref(tangent_rows(Z, 3, 2)))


def test_tangent_rows_standard_position():
    # at ([1:0],[1:0]) the five forms are x0^a y0^b, x0^a y0^(b-1) y1, ...
    Y = ThreeTwoP1P1(BiPoint.make((1, 0), (1, 0)), ((0, 1), (0, 1)))
    R = tangent_rows(Y, 2, 2)
    # basis order: x0^2y0^2, x0^2y0y1, x0^2y1^2, x0x1y0^2, ...
    assert R[0].tolist() == [1, 0, 0, 0, 0, 0, 0, 0, 0]
    assert R[1].tolist() == [0, 2, 0, 0, 0, 0, 0, 0, 0]
    assert R[2].tolist() == [0, 0, 0, 2, 0, 0, 0, 0, 0]


def test_condition_matrix_examples(rng):
    X = SchemeSpec("plane")
    cm = condition_matrix(X, 3)
    assert cm.rank() == 0 and cm.dim_linsys == 10
    X = SchemeSpec("plane", [FatPoint(2, pt(0, 1, 0)), FatPoint(2, pt(0, 0, 1)), random_32_p2(rng)])
    cm = condition_matrix(X, 4)
    assert cm.rank() == 11 and cm.dim_linsys == 4
    X = SchemeSpec("plane", [FatPoint(2, random_plane_point(rng)) for _ in range(5)])
    cm = condition_matrix(X, 4)
    assert cm.rank() == 14 and cm.dim_linsys == 1
    assert len(cm.basis) - scheme_ideal_piece(X, 4).dim == 14


def test_ambient_checks(rng):
    with pytest.raises(AmbientMismatch):
        SchemeSpec("plane", [random_32_p1p1(rng)])
    with pytest.raises(AmbientMismatch):
        condition_matrix(SchemeSpec("plane"), (2, 2))
    with pytest.raises(ValueError):
        P = random_plane_point(rng)
        SchemeSpec("plane", [FatPoint(1, P), FatPoint(2, P)])
    with pytest.raises(DegenerateComponent):
        CrossJet(2, 2, pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0))


def random_scheme(rng, k):
    comps = []
    while len(comps) < k:
        r = int(rng.integers(0, 5))
        P = random_plane_point(rng)
        Q, R = random_plane_point(rng), random_plane_point(rng)
        comps.append([
            FatPoint(int(rng.integers(1, 4)), P), SimplePoint(P), ThreeTwoP2(P, Q),
            Jet(int(rng.integers(1, 5)), P, Q), CrossJet(int(rng.integers(1, 4)), int(rng.integers(1, 4)), P, Q, R),
        ][r])
    return SchemeSpec("plane", comps)


@given(seeds, st.integers(1, 3), st.integers(0, 5))
def test_rank_monotone_in_degree(seed, k, d):
    X = random_scheme(np.random.default_rng(seed), k)
    r0, r1 = condition_matrix(X, d).rank(), condition_matrix(X, d + 1).rank()
    assert r0 <= r1 <= X.length


@given(seeds, st.integers(1, 3), st.integers(1, 5))
def test_rank_projective_invariance(seed, k, d):
    rng = np.random.default_rng(seed)
    X = random_scheme(rng, k)
    while True:
        G = rng.integers(0, p, size=(3, 3))
        if rank(G) == 3:
            break
    move = lambda P: PlanePoint.make(matmul_mod(G, np.array(P.coords).reshape(3, 1)).reshape(3))  # noqa: E731
    comps = []
    for c in X.components:
        if isinstance(c, FatPoint):
            comps.append(FatPoint(c.m, move(c.support)))
        elif isinstance(c, SimplePoint):
            comps.append(SimplePoint(move(c.support)))
        elif isinstance(c, ThreeTwoP2):
            comps.append(ThreeTwoP2(move(c.support), move(c.direction)))
        elif isinstance(c, Jet):
            comps.append(Jet(c.m, move(c.support), move(c.through)))
        else:
            comps.append(CrossJet(c.m1, c.m2, move(c.support), move(c.dir1), move(c.dir2)))
    assert condition_matrix(X, d).rank() == condition_matrix(SchemeSpec("plane", comps), d).rank()


@given(seeds, st.integers(1, 3), st.integers(0, 6))
def test_oracle_equivalence(seed, k, d):
    X = random_scheme(np.random.default_rng(seed), k)
    assert condition_matrix(X, d).dim_linsys == scheme_ideal_piece(X, d).dim


@given(seeds, st.integers(1, 4), st.integers(1, 4))
def test_oracle_equivalence_p1p1(seed, a, b):
    rng = np.random.default_rng(seed)
    X = SchemeSpec("p1xp1", [random_32_p1p1(rng) for _ in range(2)])
    assert condition_matrix(X, (a, b)).dim_linsys == scheme_ideal_piece(X, (a, b)).dim


def test_json_roundtrip(rng):
    X = random_scheme(rng, 3) + SchemeSpec("plane")
    assert scheme_from_json(scheme_to_json(X)) == X
    Z = SchemeSpec("p1xp1", [random_32_p1p1(rng)])
    assert scheme_from_json(scheme_to_json(Z)) == Z


def test_json_rand_is_seeded():
    obj = {"ambient": "plane", "components": [{"type": "32", "support": "rand", "direction": "rand"}]}
    a = scheme_from_json(obj, np.random.default_rng(5))
    b = scheme_from_json(obj, np.random.default_rng(5))
    assert a == b
    bi = {"ambient": "p1xp1", "components": [{"type": "32bi", "support": ["rand", [1, 2]], "cosupport": "rand"}]}
    Y = scheme_from_json(bi, np.random.default_rng(1)).components[0]
    assert Y.support.right == (1, 2)


def test_json_errors():
    with pytest.raises(ValueError):
        scheme_from_json({"ambient": "plane", "components": [{"type": "nope"}]})
    with pytest.raises(ValueError):
        scheme_from_json([1, 2])


def test_lengths():
    P, Q, R = pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)
    assert FatPoint(3, P).length == 6
    assert ThreeTwoP2(P, Q).length == 5
    assert Jet(4, P, Q).length == 4
    assert CrossJet(2, 3, P, Q, R).length == 6
    assert math.comb(4, 2) == FatPoint(3, P).length
