"""Dense complex linear algebra core.

Inner products follow the convention of being conjugate-linear in the
FIRST argument and linear in the second.  Many linear algebra libraries
use the opposite convention; everything downstream relies on this one.

All randomness is generated by numpy's PCG64 generator seeded from a
64-bit integer, so fixtures are reproducible run to run.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "as_vector",
    "inner",
    "norm",
    "polarization_inner",
    "polarization_r",
    "orthonormalize",
    "rank",
    "random_unitary",
    "random_vector",
    "subseed",
]


@dataclass(frozen=True)
class Tolerance:
    """Numerical thresholds used throughout the package.

    eps_rank decides numerical rank (relative to the largest column
    norm), eps_eq decides equality of subspaces/operators, eps_prob
    decides truth-value classification.
    """

    eps_rank: float = 1e-9
    eps_eq: float = 1e-8
    eps_prob: float = 1e-10

    def __post_init__(self) -> None:
        if not (0.0 < self.eps_rank < self.eps_eq < 1.0):
            raise ValueError("need 0 < eps_rank < eps_eq < 1")


DEFAULT_TOL = Tolerance()


def as_vector(x) -> np.ndarray:
    """Coerce to a finite 1-d complex array."""
    v = np.asarray(x, dtype=complex)
    if v.ndim != 1:
        v = v.reshape(-1)
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    return v


def inner(x, y) -> complex:
    """Complex inner product, conjugate-linear in the first argument."""
    xv, yv = as_vector(x), as_vector(y)
    if xv.shape[0] != yv.shape[0]:
        raise DimensionMismatch(f"dims {xv.shape[0]} != {yv.shape[0]}")
    return complex(np.vdot(xv, yv))


def norm(x) -> float:
    return float(np.linalg.norm(as_vector(x)))


def polarization_r(x, y) -> float:
    """Real part of the inner product recovered from norms alone."""
    xv, yv = as_vector(x), as_vector(y)
    if xv.shape[0] != yv.shape[0]:
        raise DimensionMismatch(f"dims {xv.shape[0]} != {yv.shape[0]}")
    return 0.25 * (
        np.linalg.norm(xv + yv) ** 2 - np.linalg.norm(xv - yv) ** 2
    )


def polarization_inner(x, y) -> complex:
    """Inner product via the polarization identity R(x, y) - i R(x, iy).

    Mathematically equal to ``inner`` for every sesquilinear form that
    is conjugate-linear in the first slot; exposed so the identity can
    be tested against the direct computation.
    """
    yv = as_vector(y)
    return complex(polarization_r(x, yv) - 1j * polarization_r(x, 1j * yv))


def _mgs(columns, eps_rank: float, ref_scale: float | None = None):
    """Modified Gram-Schmidt with a single re-orthogonalization pass.

    Returns (Q, order) where Q has orthonormal columns spanning the
    input columns and order[k] is the input index chosen at step k.
    Pivoting selects the remaining column of largest norm, which makes
    the result deterministic and rank decisions stable.

    The rank threshold is eps_rank relative to the largest column norm,
    or to ``ref_scale`` when the caller knows the natural scale of the
    input (needed when all columns may legitimately be noise).
    """
    work = [as_vector(c).copy() for c in columns]
    n = len(work)
    if n == 0:
        return np.zeros((0, 0), dtype=complex), []
    d = work[0].shape[0]
    for w in work:
        if w.shape[0] != d:
            raise DimensionMismatch("columns must share a dimension")
    ref = ref_scale if ref_scale is not None else max(
        float(np.linalg.norm(w)) for w in work
    )
    if ref == 0.0:
        return np.zeros((d, 0), dtype=complex), []
    qs: list[np.ndarray] = []
    order: list[int] = []
    used = [False] * n
    for _ in range(n):
        best, best_norm = -1, -1.0
        for k in range(n):
            if used[k]:
                continue
            nrm = float(np.linalg.norm(work[k]))
            if nrm > best_norm:
                best, best_norm = k, nrm
        if best < 0 or best_norm <= eps_rank * ref:
            break
        used[best] = True
        v = work[best]
        for _ in range(2):
            for q in qs:
                v = v - q * np.vdot(q, v)
        nrm = float(np.linalg.norm(v))
        if nrm <= eps_rank * ref:
            continue
        q = v / nrm
        qs.append(q)
        order.append(best)
        for k in range(n):
            if not used[k]:
                work[k] = work[k] - q * np.vdot(q, work[k])
    if not qs:
        return np.zeros((d, 0), dtype=complex), []
    return np.column_stack(qs), order


def orthonormalize(
    vectors, tol: Tolerance = DEFAULT_TOL, ref_scale: float | None = None
) -> np.ndarray:
    """Orthonormal basis (d x k matrix) for the span of the given vectors.

    Accepts a sequence of 1-d arrays or a d x n matrix whose columns are
    the vectors.  k is the numerical rank under ``tol.eps_rank``,
    measured against the largest column norm or against ``ref_scale``
    when given.  An empty input yields a d x 0 matrix.
    """
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        cols = [vectors[:, k] for k in range(vectors.shape[1])]
        if not cols:
            return np.zeros((vectors.shape[0], 0), dtype=complex)
    else:
        cols = list(vectors)
    q, _ = _mgs(cols, tol.eps_rank, ref_scale)
    return q


def rank(m, tol: Tolerance = DEFAULT_TOL) -> int:
    """Numerical rank: the number of columns orthonormalize retains."""
    mat = np.asarray(m, dtype=complex)
    if mat.ndim == 1:
        mat = mat.reshape(-1, 1)
    return orthonormalize(mat, tol).shape[1]


def random_unitary(d: int, seed: int) -> np.ndarray:
    """Deterministic pseudo-random d x d unitary for a given seed.

    A complex Gaussian matrix is orthonormalized column by column; the
    phase of each basis column is then fixed so that the diagonal of
    the triangular factor is real and positive.  This pins the result
    uniquely (and close to Haar-distributed) per seed.
    """
    if d < 1:
        raise DimensionMismatch("d must be >= 1")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, order = _mgs([g[:, k] for k in range(d)], eps_rank=1e-12)
    if q.shape[1] != d:  # pragma: no cover - zero-probability event
        raise ArithmeticError("random Gaussian matrix was numerically singular")
    for k in range(d):
        r = np.vdot(q[:, k], g[:, order[k]])
        q[:, k] = q[:, k] * (np.conj(r) / abs(r))
    return q


def random_vector(d: int, seed: int) -> np.ndarray:
    """Deterministic complex Gaussian vector in C^d."""
    rng = np.random.default_rng(seed)
    return rng.standard_normal(d) + 1j * rng.standard_normal(d)


def subseed(base: int, name: str, index: int) -> int:
    """Derive a per-trial seed: base XOR crc32(name) XOR index.

    Every piece of randomness in the CLI flows from one user seed
    through this function, so runs are reproducible and trials are
    decorrelated across commands.
    """
    return (int(base) ^ zlib.crc32(name.encode("utf-8")) ^ int(index)) & 0xFFFFFFFFFFFFFFFF
