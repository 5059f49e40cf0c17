"""Terracini ranks for secant varieties of tangential varieties of SV_{a,b}.

The affine tangent cone of the tangential variety at a general point is
spanned by five forms of bidegree ``(a, b)``.  Stacking them for ``s`` random
points and taking the rank gives the affine dimension of the ``s``-th secant
variety.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .ffla import DEFAULT_PRIME, P1XP1, matmul_mod, monomial_basis, nullspace, rank
from .hilbert import critical_s
from .idealcalc import (
    SubspaceBasis,
    bipoint_ideal,
    component_ideal,
    ideal_degree_piece,
    piece_contains,
    piece_equal,
)
from .schemes import apolar_weights, random_32_p1p1, tangent_rows
from .verdict import Verdict


@dataclass(frozen=True)
class DefectReport:
    a: int
    b: int
    s: int
    expected_hf: int
    computed_hf: int
    defect: int
    trials: int
    seed: int

    @property
    def secant_dim(self) -> int:
        return self.computed_hf - 1

    def as_dict(self) -> dict:
        return asdict(self)


def expected_hf(a: int, b: int, s: int) -> int:
    return min((a + 1) * (b + 1), 5 * s)


def expected_dim_secant(a: int, b: int, s: int) -> int:
    if min(a, b, s) < 1:
        raise ValueError("a, b, s must be positive")
    return expected_hf(a, b, s) - 1


def terracini_matrix(a: int, b: int, s: int, rng, p: int = DEFAULT_PRIME) -> np.ndarray:
    return np.concatenate([tangent_rows(random_32_p1p1(rng, p), a, b, p) for _ in range(s)])


def secant_rank(a: int, b: int, s: int, trials: int = 3, seed: int = 0, p: int = DEFAULT_PRIME) -> DefectReport:
    """Best Terracini rank over seeded samples; stops early once the expected value is met."""
    if min(a, b, s) < 1:
        raise ValueError("a, b, s must be positive")
    if trials < 1:
        raise ValueError("trials must be positive")
    expected = expected_hf(a, b, s)
    best = 0
    for t in range(trials):
        rng = np.random.default_rng([seed, a, b, s, t])
        best = max(best, rank(terracini_matrix(a, b, s, rng, p), p))
        if best == expected:
            break
    return DefectReport(a, b, s, expected, best, expected - best, trials, seed)


def table_cells(amax: int, bmax: int) -> list[tuple[int, int, int]]:
    """All ``(a, b, s)`` with ``1 <= b <= a``, ``a <= amax``, ``b <= bmax``, ``ab > 1``, ``1 <= s <= s2``."""
    if amax < 1 or bmax < 1:
        raise ValueError("amax and bmax must be positive")
    cells = []
    for a in range(1, amax + 1):
        for b in range(1, min(a, bmax) + 1):
            if a * b > 1:
                cells.extend((a, b, s) for s in range(1, critical_s(a, b)[1] + 1))
    return cells


def defect_table(amax: int, bmax: int, trials: int = 3, seed: int = 0, p: int = DEFAULT_PRIME) -> list[DefectReport]:
    return [secant_rank(a, b, s, trials, seed, p) for a, b, s in table_cells(amax, bmax)]


def apolarity_row(a: int, b: int, seed: int, trial: int, p: int = DEFAULT_PRIME) -> dict:
    rng = np.random.default_rng([seed, a, b, trial, 11])
    Y = random_32_p1p1(rng, p)
    basis = monomial_basis(P1XP1, (a, b))
    W = tangent_rows(Y, a, b, p)
    weighted = W * apolar_weights(a, b, p) % p
    w_perp = SubspaceBasis(basis, nullspace(weighted, len(basis), p), p)
    piece = ideal_degree_piece(component_ideal(Y, p), (a, b))
    cube = ideal_degree_piece(bipoint_ideal(Y, p) ** 3, (a, b))
    square = ideal_degree_piece(bipoint_ideal(Y, p) ** 2, (a, b))
    pairing = matmul_mod(weighted, piece.matrix.T, p) if piece.dim else np.zeros((5, 0), dtype=np.int64)
    row = {
        "a": a, "b": b, "trial": trial, "seed": seed,
        "dim": piece.dim,
        "dim_ok": piece.dim == len(basis) - 5,
        "pairing_zero": not pairing.any(),
        "cube_inside": piece_contains(w_perp, cube),
        "inside_square": piece_contains(square, w_perp),
        "equal": piece_equal(piece, w_perp),
    }
    row["ok"] = all(row[k] for k in ("dim_ok", "pairing_zero", "cube_inside", "inside_square", "equal"))
    return row


def verify_tangent_apolarity(a: int, b: int, trials: int = 5, seed: int = 0, p: int = DEFAULT_PRIME) -> Verdict:
    """The perp of the tangent forms is the ``(a, b)`` piece of the cube of the point plus ``D^2``.

    Also checks the sandwich between the cube and the square of the point's ideal.
    """
    if a * b <= 1:
        raise ValueError("requires ab > 1")
    return Verdict.from_rows([apolarity_row(a, b, seed, t, p) for t in range(trials)])
