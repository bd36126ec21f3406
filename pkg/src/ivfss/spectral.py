"""Singular values through the eigenvalues of the Gram matrix.

The eigenvalues come from a cyclic Jacobi iteration written out in plain
Python. Matrices here are small (tens of rows at most), so no linear algebra
library is needed, and the rotation sequence is fully deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core import ValueMatrix
from .errors import NoConvergence, NonSymmetric

SYMMETRY_TOL = 1e-12
EIGEN_TOL = 1e-12
MAX_SWEEPS = 100
NEGATIVE_CLAMP = 1e-10


@dataclass(frozen=True)
class SingularSpectrum:
    """Singular values in descending order, zero-padded to the row count."""

    values: tuple[float, ...]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, k):
        return self.values[k]


def _entries(m) -> list[list[float]]:
    if isinstance(m, ValueMatrix):
        return m.tolist()
    return [list(map(float, row)) for row in m]


def gram(m: ValueMatrix | Sequence[Sequence[float]]) -> list[list[float]]:
    """The smaller of ``M Mᵀ`` and ``Mᵀ M``.

    Both share the same nonzero eigenvalues; picking the smaller side keeps
    the Jacobi iteration cheap for tall tables such as 16 objects x 4
    parameters.
    """
    vecs = _gram_vectors(_entries(m))
    k = len(vecs)
    g = [[0.0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            s = math.fsum(x * y for x, y in zip(vecs[i], vecs[j]))
            g[i][j] = g[j][i] = s
    return g


def _off_norm(a: list[list[float]]) -> float:
    n = len(a)
    return math.sqrt(2.0 * math.fsum(a[p][q] * a[p][q] for p in range(n) for q in range(p + 1, n)))


def symmetric_eigenvalues(g: Sequence[Sequence[float]], tol: float = EIGEN_TOL) -> list[float]:
    """All eigenvalues of a real symmetric matrix, largest first.

    Cyclic Jacobi: sweep over every upper off-diagonal pair ``(p, q)`` in row
    order, annihilating it with a plane rotation, until the off-diagonal
    Frobenius norm drops to ``tol`` or below.

    Raises
    ------
    NonSymmetric
        If ``g`` is not square or ``|g[i][j] - g[j][i]| > 1e-12`` somewhere.
    NoConvergence
        If ``MAX_SWEEPS`` sweeps do not reach ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = [list(map(float, row)) for row in g]
    n = len(a)
    for i, row in enumerate(a):
        if len(row) != n:
            raise NonSymmetric(f"matrix is not square: row {i} has {len(row)} entries, expected {n}")
    for i in range(n):
        for j in range(i + 1, n):
            if abs(a[i][j] - a[j][i]) > SYMMETRY_TOL:
                raise NonSymmetric(f"entries ({i},{j}) and ({j},{i}) differ: {a[i][j]!r} vs {a[j][i]!r}")
            a[j][i] = a[i][j]

    for sweep in range(MAX_SWEEPS + 1):
        if _off_norm(a) <= tol:
            return sorted((a[i][i] for i in range(n)), reverse=True)
        if sweep == MAX_SWEEPS:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                app, aqq = a[p][p], a[q][q]
                # negligible next to both diagonals: rotation would be a no-op in floating point
                if sweep > 3 and abs(app) + 100.0 * abs(apq) == abs(app) and abs(aqq) + 100.0 * abs(apq) == abs(aqq):
                    a[p][q] = a[q][p] = 0.0
                    continue
                theta = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = a[p][k] = c * akp - s * akq
                    a[k][q] = a[q][k] = s * akp + c * akq
                a[p][p] = app - t * apq
                a[q][q] = aqq + t * apq
                a[p][q] = a[q][p] = 0.0
    raise NoConvergence(f"Jacobi iteration did not converge within {MAX_SWEEPS} sweeps")


def _gram_vectors(a: list[list[float]]) -> list[list[float]]:
    """Rows of ``a`` if it is wide, columns if it is tall (the smaller Gram side)."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if rows <= cols:
        return [list(row) for row in a]
    return [[a[i][j] for i in range(rows)] for j in range(cols)]


def _implicit_jacobi(vecs: list[list[float]], tol: float = EIGEN_TOL) -> list[float]:
    """Eigenvalues of the Gram matrix of ``vecs`` without forming it.

    Same cyclic sweep as :func:`symmetric_eigenvalues`, but each rotation is
    computed from the 2x2 Gram block of vectors ``p`` and ``q`` and applied to
    the vectors themselves. Sweeps stop once every pair is orthogonal to
    working precision (which also brings the off-diagonal Frobenius norm of
    the implicit Gram matrix under ``tol``); the squared vector norms are
    then the eigenvalues. Working on the vectors keeps small
    singular values accurate to roughly machine epsilon times the largest one,
    whereas square roots of explicitly computed eigenvalues near zero can be
    off by about ``sqrt(eps)``.
    """
    k = len(vecs)
    eps = 2.0 ** -52

    def dot(x, y):
        return math.fsum(a * b for a, b in zip(x, y))

    # couplings below this are noise relative to the whole matrix; without the
    # floor a vector heading to zero keeps getting rotated forever
    floor = eps * eps * math.fsum(dot(v, v) for v in vecs)

    for _ in range(MAX_SWEEPS):
        rotated = False
        for p in range(k - 1):
            for q in range(p + 1, k):
                vp, vq = vecs[p], vecs[q]
                apq = dot(vp, vq)
                app = dot(vp, vp)
                aqq = dot(vq, vq)
                # orthogonal to working precision; the next sweep would change nothing
                if abs(apq) <= eps * math.sqrt(app * aqq) or abs(apq) <= floor:
                    continue
                rotated = True
                theta = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                vecs[p] = [c * x - s * y for x, y in zip(vp, vq)]
                vecs[q] = [s * x + c * y for x, y in zip(vp, vq)]
        if not rotated:
            off = math.sqrt(2.0 * math.fsum(dot(vecs[p], vecs[q]) ** 2 for p in range(k) for q in range(p + 1, k)))
            if off > tol:
                break
            return [dot(v, v) for v in vecs]
    raise NoConvergence(f"Jacobi iteration did not converge within {MAX_SWEEPS} sweeps")


def singular_values(m: ValueMatrix | Sequence[Sequence[float]]) -> SingularSpectrum:
    """Singular values of ``m``, descending, padded with zeros to its row count.

    Computed by cyclic Jacobi on the smaller Gram matrix, applied implicitly
    to the rows or columns of ``m`` (see :func:`_implicit_jacobi`).
    """
    a = _entries(m)
    rows = len(a)
    # work at unit scale so the convergence floor cannot underflow
    scale = max((abs(x) for row in a for x in row), default=0.0)
    if scale == 0.0:
        return SingularSpectrum((0.0,) * rows)
    eig = _implicit_jacobi(_gram_vectors([[x / scale for x in row] for row in a]))
    values = []
    for lam in eig:
        if lam < 0.0:
            if lam < -NEGATIVE_CLAMP:
                raise NoConvergence(f"Gram matrix has eigenvalue {lam!r} below -{NEGATIVE_CLAMP}")
            lam = 0.0
        values.append(scale * math.sqrt(lam))
    values.sort(reverse=True)
    values.extend([0.0] * (rows - len(values)))
    return SingularSpectrum(tuple(values))


def nuclear_sum(s: SingularSpectrum | Sequence[float]) -> float:
    """Sum of singular values (the nuclear norm)."""
    return math.fsum(s)
