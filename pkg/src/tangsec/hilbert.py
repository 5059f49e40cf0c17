"""Linear systems of plane curves through the schemes ``a Q1 + b Q2 + s (3,2)-points``.

Each check compares a computed dimension with a closed formula over seeded
random supports and directions.  A random specialization can only make the
linear system larger, so a match at one sample certifies the generic value.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .ffla import DEFAULT_PRIME, PLANE
from .schemes import (
    FatPoint,
    PlanePoint,
    Q1,
    Q2,
    SchemeSpec,
    condition_matrix,
    normalize_degree,
    random_32_p2,
)
from .verdict import Verdict

AS_EXPECTED = "as_expected"
SUPERABUNDANT = "superabundant_anomaly"
DEFICIENT = "deficient_candidate"


@dataclass(frozen=True)
class LinSysReport:
    degree: tuple
    scheme: str
    basis_size: int
    length: int
    rank: int
    dim_linsys: int
    virtual_dim: int
    expected_dim: int
    status: str

    def as_dict(self) -> dict:
        d = asdict(self)
        d["degree"] = ",".join(str(x) for x in self.degree)
        return d


def linsys_dim(X: SchemeSpec, degree, p: int = DEFAULT_PRIME) -> LinSysReport:
    degree = normalize_degree(X.ambient, degree)
    cm = condition_matrix(X, degree, p)
    n = len(cm.basis)
    r = cm.rank()
    dim = n - r
    virtual = n - X.length
    expected = max(0, virtual)
    if dim == expected:
        status = AS_EXPECTED
    elif dim > expected:
        status = SUPERABUNDANT
    else:
        status = DEFICIENT
    return LinSysReport(degree, X.summary(), n, X.length, r, dim, virtual, expected, status)


def critical_s(a: int, b: int) -> tuple[int, int]:
    """Largest subabundant and smallest superabundant number of (3,2)-points."""
    if a < 1 or b < 1:
        raise ValueError("a, b must be positive")
    n = (a + 1) * (b + 1)
    return n // 5, -(-n // 5)


def plane_scheme(a: int, b: int, s: int, rng, p: int = DEFAULT_PRIME) -> SchemeSpec:
    comps = [FatPoint(a, PlanePoint.make(Q1, p))] if a else []
    if b:
        comps.append(FatPoint(b, PlanePoint.make(Q2, p)))
    while len(comps) < (a > 0) + (b > 0) + s:
        Y = random_32_p2(rng, p)
        if Y.support not in {c.support for c in comps}:
            comps.append(Y)
    return SchemeSpec(PLANE, comps)


def plane_dim(a: int, b: int, s: int, degree: int | None = None, trials: int = 3, seed: int = 0,
              p: int = DEFAULT_PRIME) -> LinSysReport:
    """Smallest linear-system dimension over seeded samples of ``a Q1 + b Q2 + s`` (3,2)-points."""
    degree = a + b if degree is None else degree
    best = None
    for t in range(trials):
        rng = np.random.default_rng([seed, a, b, s, t, degree])
        rep = linsys_dim(plane_scheme(a, b, s, rng, p), degree, p)
        if best is None or rep.dim_linsys < best.dim_linsys:
            best = rep
        if best.dim_linsys == best.expected_dim:
            break
    return best


def _plane_row(a, b, s, degree, expected, trials, seed, p) -> dict:
    rep = plane_dim(a, b, s, degree, trials, seed, p)
    return {
        "a": a, "b": b, "s": s, "degree": degree, "expected_dim": expected,
        "dim": rep.dim_linsys, "rank": rep.rank, "status": rep.status, "ok": rep.dim_linsys == expected,
    }


def check_b1(amax: int = 30, trials: int = 3, seed: int = 0, p: int = DEFAULT_PRIME) -> Verdict:
    """``dim L_{a+1}(X_{a,1;s}) = max(0, 2(a+1) - 5s)``."""
    if amax < 2:
        raise ValueError("amax must be at least 2")
    rows = [
        _plane_row(a, 1, s, a + 1, max(0, 2 * (a + 1) - 5 * s), trials, seed, p)
        for a in range(2, amax + 1)
        for s in range(1, critical_s(a, 1)[1] + 1)
    ]
    return Verdict.from_rows(rows)


def check_b2(amax: int = 20, trials: int = 3, seed: int = 0, p: int = DEFAULT_PRIME) -> Verdict:
    """``max(0, 9 - 5s)`` for ``a = 2`` and ``max(0, 3(a+1) - 5s)`` for ``3 <= a <= amax``."""
    if amax < 2:
        raise ValueError("amax must be at least 2")
    rows = [_plane_row(2, 2, s, 4, max(0, 9 - 5 * s), trials, seed, p) for s in range(1, critical_s(2, 2)[1] + 1)]
    rows += [
        _plane_row(a, 2, s, a + 2, max(0, 3 * (a + 1) - 5 * s), trials, seed, p)
        for a in range(3, amax + 1)
        for s in range(1, critical_s(a, 2)[1] + 1)
    ]
    return Verdict.from_rows(rows)


SMALL_CASES = ((3, 3, (3, 4)), (5, 3, (4, 5)), (4, 4, (5,)))


def check_small_cases(trials: int = 3, seed: int = 0, p: int = DEFAULT_PRIME) -> Verdict:
    """The three cases handled separately: ``(3,3)``, ``(5,3)`` and ``(4,4)``."""
    rows = []
    for a, b, svals in SMALL_CASES:
        n = (a + 1) * (b + 1)
        for s in svals:
            row = _plane_row(a, b, s, a + b, max(0, n - 5 * s), trials, seed, p)
            row["hf"] = math.comb(a + b + 2, 2) - row["dim"]
            rows.append(row)
    return Verdict.from_rows(rows)


def check_main_plane(amax: int = 10, bmax: int = 10, trials: int = 3, seed: int = 0,
                     p: int = DEFAULT_PRIME) -> Verdict:
    """Plane dimensions against ``max(0, (a+1)(b+1) - 5s)`` and Terracini ranks against ``min((a+1)(b+1), 5s)``."""
    from .secant import secant_rank, table_cells

    rows = []
    for a, b, s in table_cells(amax, bmax):
        n = (a + 1) * (b + 1)
        row = _plane_row(a, b, s, a + b, max(0, n - 5 * s), trials, seed, p)
        rep = secant_rank(a, b, s, trials, seed, p)
        row["expected_hf"] = rep.expected_hf
        row["computed_hf"] = rep.computed_hf
        row["agree"] = n - row["dim"] == rep.computed_hf
        row["ok"] = row["ok"] and rep.defect == 0 and row["agree"]
        rows.append(row)
    return Verdict.from_rows(rows)
