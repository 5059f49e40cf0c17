import math

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from tangsec.hilbert import (
    AS_EXPECTED,
    SUPERABUNDANT,
    check_b1,
    check_b2,
    check_main_plane,
    check_small_cases,
    critical_s,
    linsys_dim,
    plane_dim,
    plane_scheme,
)
from tangsec.schemes import FatPoint, SchemeSpec, random_32_p2, random_plane_point


def test_critical_s():
    assert critical_s(2, 2) == (1, 2)
    assert critical_s(4, 4) == (5, 5)
    assert critical_s(3, 3) == (3, 4)


def test_linsys_examples(rng):
    rep = linsys_dim(SchemeSpec("plane"), 2)
    assert rep.dim_linsys == 6 and rep.status == AS_EXPECTED
    assert plane_dim(4, 1, 1).dim_linsys == 5
    X = SchemeSpec("plane", [FatPoint(2, random_plane_point(rng)) for _ in range(5)])
    rep = linsys_dim(X, 4)
    assert (rep.dim_linsys, rep.expected_dim, rep.status) == (1, 0, SUPERABUNDANT)
    assert rep.virtual_dim == 0 and rep.length == 15


def test_check_b1_values():
    v = check_b1(9)
    assert v
    got = {(r["a"], r["s"]): r["dim"] for r in v.rows}
    assert got[(2, 1)] == 1 and got[(4, 2)] == 0 and got[(9, 4)] == 0


def test_check_b2_values():
    v = check_b2(5)
    assert v
    got = {(r["a"], r["s"]): r["dim"] for r in v.rows}
    assert got[(2, 1)] == 4 and got[(3, 2)] == 2


def test_b2_a15():
    assert plane_dim(15, 2, 9).dim_linsys == 3


def test_small_cases():
    v = check_small_cases()
    assert v
    got = {(r["a"], r["b"], r["s"]): r["dim"] for r in v.rows}
    assert got == {(3, 3, 3): 1, (3, 3, 4): 0, (5, 3, 4): 4, (5, 3, 5): 0, (4, 4, 5): 0}
    assert all(r["hf"] + r["dim"] == math.comb(r["a"] + r["b"] + 2, 2) for r in v.rows)


def test_main_plane_small():
    v = check_main_plane(4, 4)
    assert v
    row = next(r for r in v.rows if (r["a"], r["b"], r["s"]) == (3, 3, 4))
    assert row["dim"] == 0 and row["computed_hf"] == 16
    row = next(r for r in v.rows if (r["a"], r["b"], r["s"]) == (2, 2, 1))
    assert row["dim"] == 4 and row["computed_hf"] == 5


def test_main_plane_instance():
    assert plane_dim(6, 4, 7).dim_linsys == 0


@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 1000))
def test_dim_at_least_expected(a, b, seed):
    rng = np.random.default_rng(seed)
    for s in range(0, critical_s(a, b)[1] + 1):
        rep = linsys_dim(plane_scheme(a, b, s, rng), a + b)
        assert rep.dim_linsys >= max(0, rep.virtual_dim)


@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 1000))
def test_adding_components_never_grows(a, b, seed):
    rng = np.random.default_rng(seed)
    X = plane_scheme(a, b, 1, rng)
    d = a + b
    prev = linsys_dim(X, d).dim_linsys
    for _ in range(3):
        X = X + SchemeSpec("plane", [random_32_p2(rng)])
        cur = linsys_dim(X, d).dim_linsys
        assert cur <= prev
        prev = cur


@given(st.integers(2, 6), st.integers(1, 6))
def test_every_intermediate_s_as_expected(a, b):
    s1, s2 = critical_s(a, b)
    for s in range(1, s2 + 1):
        assert plane_dim(a, b, s, seed=a * 10 + b).status == AS_EXPECTED
