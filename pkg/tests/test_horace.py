import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tangsec.horace import (
    LineRef,
    NotVerticallyGraded,
    TraceScheme,
    collinear_suite,
    fixed_component_by_count,
    horace_step_check,
    horace_step_suite,
    is_fixed_component,
    random_point_off_line,
    random_point_on_line,
    residue_scheme,
    trace_rank,
    trace_scheme,
    verify_collinear_lemma,
    verify_colon_identities,
    verify_degeneration,
    verify_residue_example,
)
from tangsec.idealcalc import component_ideal, ideal_degree_piece, piece_colon, piece_equal, scheme_ideal_piece
from tangsec.ffla import poly_pow
from tangsec.schemes import (
    CrossJet,
    FatPoint,
    Jet,
    PlanePoint,
    SchemeSpec,
    SimplePoint,
    ThreeTwoP2,
    condition_matrix,
    random_32_p1p1,
    random_plane_point,
)

seeds = st.integers(0, 2**32 - 1)


def pt(*c):
    return PlanePoint.make(c)


def setup(rng):
    L = LineRef(random_plane_point(rng), random_plane_point(rng))
    return L, (lambda: random_point_on_line(L, rng)), (lambda: random_point_off_line(L, rng))


def test_line_ref(rng):
    L, on, off = setup(rng)
    assert L.contains(L.A) and L.contains(L.B)
    Q = on()
    assert L.point(*L.parameter(Q)) == Q
    M = LineRef.from_form(L.coeffs)
    assert M.contains(L.A) and M.contains(L.B)


def test_example_rewrites():
    P, D = pt(1, 0, 0), pt(0, 0, 1)
    own = LineRef.from_form((0, 1, 0))
    trans = LineRef.from_form((0, 0, 1))
    X = SchemeSpec("plane", [ThreeTwoP2(P, D)])
    r = residue_scheme(X, own, [1]).components[0]
    assert isinstance(r, Jet) and r.m == 2 and own.contains(r.through)
    assert trace_scheme(X, own, [1]).length == 3
    assert trace_scheme(X, own, [2]).length == 2
    r3 = residue_scheme(X, trans, [3]).components[0]
    assert isinstance(r3, CrossJet) and (r3.m1, r3.m2) == (2, 2)
    assert trace_scheme(X, trans, [3]).length == 1
    for j in (1, 2):
        r = residue_scheme(X, trans, [j]).components[0]
        assert isinstance(r, FatPoint) and r.m == 2
    with pytest.raises(NotVerticallyGraded):
        residue_scheme(X, own, [3])


def test_simple_point_on_line(rng):
    L, on, _ = setup(rng)
    X = SchemeSpec("plane", [SimplePoint(on())])
    assert residue_scheme(X, L).components == ()
    assert trace_scheme(X, L).length == 1


def test_off_line_components_pass_through(rng):
    L, _, off = setup(rng)
    X = SchemeSpec("plane", [FatPoint(2, off())])
    assert residue_scheme(X, L) == X
    assert trace_scheme(X, L).length == 0
    with pytest.raises(NotVerticallyGraded):
        residue_scheme(X, L, [2])


def test_biprojective_has_no_rules(rng):
    L, _, _ = setup(rng)
    with pytest.raises(NotVerticallyGraded):
        residue_scheme(SchemeSpec("p1xp1", [random_32_p1p1(rng)]), L)


def component_cases(rng, L, on, off):
    """Components with support on L, their exponent, all with a rewrite rule."""
    P = on()
    other = off()
    yield FatPoint(3, P), 1
    yield SimplePoint(P), 1
    yield ThreeTwoP2(P, L.other_point(P)), 1
    yield ThreeTwoP2(P, L.other_point(P)), 2
    for j in (1, 2, 3):
        yield ThreeTwoP2(P, other), j
    yield Jet(3, P, L.other_point(P)), 1
    yield Jet(3, P, other), 1
    yield CrossJet(2, 3, P, L.other_point(P), other), 1
    yield CrossJet(3, 2, P, L.other_point(P), other), 2
    yield CrossJet(2, 3, P, other, L.other_point(P)), 1
    yield CrossJet(2, 2, P, other, off()), 1


@given(seeds)
def test_length_bookkeeping(seed):
    rng = np.random.default_rng(seed)
    L, on, off = setup(rng)
    for c, j in component_cases(rng, L, on, off):
        X = SchemeSpec("plane", [c])
        assert c.length == residue_scheme(X, L, [j]).length + trace_scheme(X, L, [j]).length


@given(seeds)
def test_rewrites_match_colon_ideals(seed):
    # residue ideal I + l^(j-1)(I : l^j), computed directly, against the rewrite
    from tangsec.idealcalc import residue_piece

    rng = np.random.default_rng(seed)
    L, on, off = setup(rng)
    for c, j in component_cases(rng, L, on, off):
        X = SchemeSpec("plane", [c])
        R = residue_scheme(X, L, [j])
        I = component_ideal(c)
        for d in range(5):
            assert piece_equal(residue_piece(I, L.form, j, d), scheme_ideal_piece(R, d))


@given(seeds, st.integers(1, 3), st.integers(1, 5))
def test_castelnuovo_inequality(seed, k, d):
    rng = np.random.default_rng(seed)
    L, on, off = setup(rng)
    comps = [FatPoint(2, on())] + [ThreeTwoP2(on(), off()) for _ in range(k - 1)] + [FatPoint(2, off())]
    X = SchemeSpec("plane", comps)
    dim = condition_matrix(X, d).dim_linsys
    res = residue_scheme(X, L)
    res_dim = condition_matrix(res, d - 1).dim_linsys if d >= 1 else 0
    assert dim <= res_dim + max(0, d + 1 - trace_scheme(X, L).length)


def test_trace_rank_examples(rng):
    L, on, _ = setup(rng)
    assert trace_rank(TraceScheme(L, ((on(), 1),)), 0) == 1
    assert trace_rank(TraceScheme(L, tuple((on(), 1) for _ in range(3))), 1) == 2
    T = TraceScheme(L, ((on(), 3), (on(), 2), (on(), 2)))
    assert trace_rank(T, 6) == 7
    assert trace_rank(T, 5) == 6


@given(seeds, st.lists(st.integers(1, 4), min_size=1, max_size=4), st.integers(0, 9))
def test_trace_rank_formula(seed, lengths, d):
    rng = np.random.default_rng(seed)
    L, on, _ = setup(rng)
    pts = []
    while len(pts) < len(lengths):
        Q = on()
        if Q not in pts:
            pts.append(Q)
    T = TraceScheme(L, tuple(zip(pts, lengths)))
    assert trace_rank(T, d) == min(sum(lengths), d + 1)


def test_fixed_component_examples(rng):
    L, on, off = setup(rng)
    for d in range(1, 5):
        pts = SchemeSpec("plane", [SimplePoint(on()) for _ in range(d + 1)])
        assert is_fixed_component(pts, L, d)
        assert fixed_component_by_count(pts, L, d)
        X = SchemeSpec("plane", [SimplePoint(off())])
        assert not is_fixed_component(X, L, d)


def test_fixed_component_lines_through_q1(rng):
    # directions of the (3,2)-points pushed through Q1: every line Q1 P_i is fixed
    a = 4
    Q1, Q2 = pt(0, 1, 0), pt(0, 0, 1)
    P = random_plane_point(rng)
    L = LineRef(Q1, P)
    comps = [FatPoint(a, Q1), FatPoint(2, Q2), ThreeTwoP2(P, Q1)]
    X = SchemeSpec("plane", comps + [ThreeTwoP2(random_plane_point(rng), Q1) for _ in range(2)])
    assert is_fixed_component(X, L, a + 2)


@given(seeds, st.integers(0, 4), st.integers(1, 4))
def test_count_and_rank_tests_agree_generically(seed, extra, d):
    rng = np.random.default_rng(seed)
    L, on, off = setup(rng)
    X = SchemeSpec("plane", [SimplePoint(on()) for _ in range(d + extra)] + [FatPoint(2, off())])
    if fixed_component_by_count(X, L, d):
        assert is_fixed_component(X, L, d)


def test_horace_step_examples(rng):
    L, on, off = setup(rng)
    P = on()
    Yt = SchemeSpec("plane", [ThreeTwoP2(P, L.other_point(P))])
    step = horace_step_check(SchemeSpec("plane"), Yt, L, [1], 2)
    assert step.trace_ok and step.residue_ok and step.conclusion and step.part == 1
    assert condition_matrix(Yt, 2).rank() == 5
    step = horace_step_check(SchemeSpec("plane", [FatPoint(2, off())]), SchemeSpec("plane"), L, [], 2)
    assert step.conclusion
    crowded = SchemeSpec("plane", [SimplePoint(on()) for _ in range(4)])
    step = horace_step_check(SchemeSpec("plane"), crowded, L, None, 2)
    assert not step.trace_ok and not step.conclusion


def test_horace_step_suite():
    assert horace_step_suite().passed


def test_collinear_examples(rng):
    L, _, off = setup(rng)
    assert verify_collinear_lemma(SchemeSpec("plane", [FatPoint(2, off())]), L, 2, 2, trials=2)
    assert verify_collinear_lemma(SchemeSpec("plane"), L, 2, 1, trials=2)
    v = verify_collinear_lemma(SchemeSpec("plane", [FatPoint(2, off())]), L, 3, 2, trials=2)
    assert v and all(r["case2"] and r["dim_s"] == 0 for r in v.rows)
    assert collinear_suite(trials=2).passed


def test_residue_example():
    v = verify_residue_example(dmax=6)
    assert v.passed
    assert len(v.rows) == 11


def test_colon_and_degeneration():
    assert verify_colon_identities(instances=3, dmax=4)
    v = verify_degeneration(samples=2, dmax=2)
    assert v.passed
    assert all(r["dim"] == 0 for r in v.rows if r["degree"] == 1)


def test_third_line_residue_matches_colon(rng):
    P, A, B = (random_plane_point(rng) for _ in range(3))
    c = CrossJet(2, 2, P, A, B)
    L = LineRef(P, random_plane_point(rng))
    R = residue_scheme(SchemeSpec("plane", [c]), L)
    for d in range(5):
        assert piece_equal(piece_colon(component_ideal(c), L.form, d), scheme_ideal_piece(R, d))
