import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tangsec.ffla import (
    DEFAULT_PRIME,
    DivisionByZero,
    FieldElement,
    biprojective_basis,
    is_prime,
    matmul_mod,
    monomial_basis,
    nullspace,
    plane_basis,
    poly_mul,
    poly_pow,
    poly_to_vector,
    rank,
    rref,
    vector_to_poly,
)

p = DEFAULT_PRIME
residues = st.integers(min_value=0, max_value=p - 1)
nonzero = st.integers(min_value=1, max_value=p - 1)


def matrices(max_rows=6, max_cols=7, small=False):
    hi = 3 if small else p - 1
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    ).map(lambda rows: np.array(rows, dtype=np.int64))


def test_field_basics():
    assert FieldElement(1) + FieldElement(p - 1) == FieldElement(0)
    x = FieldElement(7)
    assert x * x.inv() == FieldElement(1)
    with pytest.raises(DivisionByZero):
        FieldElement(0).inv()
    assert FieldElement(3) / 3 == FieldElement(1)
    assert FieldElement(2) ** -1 * 2 == FieldElement(1)


@given(residues, residues, residues)
def test_field_axioms(a, b, c):
    x, y, z = FieldElement(a), FieldElement(b), FieldElement(c)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == FieldElement(0)


@given(nonzero)
def test_inverse(a):
    assert FieldElement(a) * FieldElement(a).inv() == FieldElement(1)


def test_is_prime():
    assert is_prime(DEFAULT_PRIME)
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_plane_basis_order():
    assert plane_basis(1).exponents == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert plane_basis(2).exponents == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    for d in range(8):
        assert len(plane_basis(d)) == math.comb(d + 2, 2)


def test_biprojective_basis():
    assert len(monomial_basis("p1xp1", (1, 1))) == 4
    assert len(monomial_basis("p1xp1", (2, 3))) == 12
    assert biprojective_basis(1, 1).exponents == ((1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1))


def test_basis_index_roundtrip():
    B = plane_basis(4)
    assert [B.index(e) for e in B.exponents] == list(range(len(B)))


def test_rank_small():
    assert rank(np.eye(3, dtype=np.int64)) == 3
    assert rank(np.zeros((4, 5), dtype=np.int64)) == 0
    assert rank(np.zeros((0, 5), dtype=np.int64)) == 0
    assert rank([[1, 2], [2, 4]]) == 1


def test_rank_unit_row_prepass():
    # unit rows pin columns; the rest is eliminated on the remaining columns
    M = np.array([[0, 5, 0], [0, 3, 0], [1, 1, 1], [2, 9, 2]], dtype=np.int64)
    assert rank(M) == 2
    M = np.array([[0, 5, 0], [1, 0, 0], [1, 1, 1]], dtype=np.int64)
    assert rank(M) == 3


@given(matrices())
def test_rank_transpose(M):
    assert rank(M) == rank(M.T)


@given(matrices(small=True), st.randoms(use_true_random=False))
def test_rank_row_operations(M, r):
    perm = list(range(M.shape[0]))
    r.shuffle(perm)
    scales = np.array([r.randint(1, p - 1) for _ in perm], dtype=np.int64)
    N = (M[perm] * scales[:, None]) % p
    assert rank(N) == rank(M)
    assert 0 <= rank(M) <= min(M.shape)


@given(matrices())
def test_rref_idempotent(M):
    R = rref(M)
    assert np.array_equal(rref(R), R)
    assert R.shape[0] == rank(M)


@given(matrices(max_rows=4), st.integers(0, 2**32 - 1))
def test_rref_canonical(M, seed):
    # a second generating set from random invertible row operations
    rng = np.random.default_rng(seed)
    n = M.shape[0]
    while True:
        G = rng.integers(0, p, size=(n, n))
        if rank(G) == n:
            break
    assert np.array_equal(rref(matmul_mod(G, M)), rref(M))


def test_rref_identity():
    I = np.eye(4, dtype=np.int64)
    assert np.array_equal(rref(I), I)


@given(matrices(small=True))
def test_nullspace(M):
    K = nullspace(M, M.shape[1])
    assert K.shape[0] == M.shape[1] - rank(M)
    if K.size:
        assert not matmul_mod(M, K.T).any()


def test_matmul_mod_matches_python():
    rng = np.random.default_rng(3)
    A = rng.integers(0, p, size=(5, 40))
    B = rng.integers(0, p, size=(40, 6))
    want = [[sum(int(A[i, k]) * int(B[k, j]) for k in range(40)) % p for j in range(6)] for i in range(5)]
    assert matmul_mod(A, B).tolist() == want


def test_polynomials():
    x, y = {(1, 0, 0): 1}, {(0, 1, 0): 1}
    f = poly_pow({**x, **y}, 2)
    assert f == {(2, 0, 0): 1, (1, 1, 0): 2, (0, 2, 0): 1}
    v = poly_to_vector(poly_mul(f, x), plane_basis(3))
    assert vector_to_poly(v, plane_basis(3)) == {(3, 0, 0): 1, (2, 1, 0): 2, (1, 2, 0): 1}
