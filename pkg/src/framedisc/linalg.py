"""Dense complex Hermitian linear algebra kernel.

Rank-one operators, Hermitian eigensystems, operator and Schatten norms,
and projection predicates. Everything here is a pure function of its
arguments; matrices are plain complex128 ndarrays validated (and lightly
symmetrized) on entry.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EigensolverError, InvalidParameterError

# Absolute tolerance for accepting a matrix as Hermitian; rounding noise
# from sums of rank-one operators sits well below this.
HERMITIAN_ATOL = 1e-12


def as_vector(v) -> np.ndarray:
    """Validate and return a finite complex vector."""
    v = np.asarray(v, dtype=np.complex128)
    if v.ndim != 1 or v.size < 1:
        raise InvalidParameterError(f"expected a 1-d vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise InvalidParameterError("vector has non-finite entries")
    return v


def as_hermitian(m, atol: float = HERMITIAN_ATOL) -> np.ndarray:
    """Validate a square matrix as Hermitian and return (M + M*)/2.

    Deviation from self-adjointness beyond ``atol`` (absolute, entrywise)
    is rejected rather than silently absorbed.
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise InvalidParameterError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidParameterError("matrix has non-finite entries")
    dev = np.max(np.abs(m - m.conj().T))
    if dev > atol:
        raise InvalidParameterError(
            f"matrix is not Hermitian: max deviation {dev:.3e} exceeds {atol:.1e}"
        )
    return (m + m.conj().T) / 2.0


def rank_one(v) -> np.ndarray:
    """The rank-one operator u -> <u,v> v as a matrix: M[i][j] = v[i] conj(v[j])."""
    v = as_vector(v)
    return np.outer(v, v.conj())


@dataclass(frozen=True)
class Eigensystem:
    """Full eigensystem of a Hermitian matrix.

    eigenvalues are real and ascending; eigenvectors[:, t] is the unit
    eigenvector for eigenvalues[t], with a deterministic phase convention
    (first entry of modulus > 1e-12 is real nonnegative).
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.size


def _normalize_phases(vecs: np.ndarray) -> np.ndarray:
    vecs = vecs.copy()
    for t in range(vecs.shape[1]):
        col = vecs[:, t]
        nz = np.flatnonzero(np.abs(col) > 1e-12)
        if nz.size:
            pivot = col[nz[0]]
            vecs[:, t] = col * (pivot.conjugate() / abs(pivot))
    return vecs


def eigensystem(h) -> Eigensystem:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix."""
    h = as_hermitian(h)
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        off = h - np.diag(np.diag(h))
        raise EigensolverError(
            f"eigensolver failed to converge: {exc}",
            residual=float(np.linalg.norm(off)),
        ) from exc
    return Eigensystem(eigenvalues=w, eigenvectors=_normalize_phases(v))


def eigenvalues(h) -> np.ndarray:
    """Eigenvalues only (ascending)."""
    h = as_hermitian(h)
    try:
        return np.linalg.eigvalsh(h)
    except np.linalg.LinAlgError as exc:
        off = h - np.diag(np.diag(h))
        raise EigensolverError(
            f"eigensolver failed to converge: {exc}",
            residual=float(np.linalg.norm(off)),
        ) from exc


def opnorm(h) -> float:
    """Operator norm of a Hermitian matrix: max(|lambda_min|, |lambda_max|)."""
    w = eigenvalues(h)
    return float(max(abs(w[0]), abs(w[-1])))


def schatten_norm(h, p) -> float:
    """Schatten p-norm (sum |lambda|^p)^(1/p); p = inf gives the operator norm."""
    if p != np.inf and p < 1:
        raise InvalidParameterError(f"Schatten norm requires p >= 1, got {p}")
    w = eigenvalues(h)
    if p == np.inf:
        return float(max(abs(w[0]), abs(w[-1])))
    return float(np.sum(np.abs(w) ** p) ** (1.0 / p))


def is_projection(p, tol: float) -> bool:
    """True iff ||P^2 - P||_F <= tol and ||P - P*||_F <= tol.

    Accepts arbitrary square input; the Hermitian check is part of the
    predicate, not a precondition.
    """
    if tol <= 0:
        raise InvalidParameterError(f"tolerance must be positive, got {tol}")
    p = np.asarray(p, dtype=np.complex128)
    if p.ndim != 2 or p.shape[0] != p.shape[1]:
        raise InvalidParameterError(f"expected a square matrix, got shape {p.shape}")
    herm_dev = np.linalg.norm(p - p.conj().T)
    idem_dev = np.linalg.norm(p @ p - p)
    return bool(herm_dev <= tol and idem_dev <= tol)


def diagonal_delta(p) -> float:
    """Largest diagonal entry (real part) of a Hermitian matrix."""
    p = as_hermitian(p, atol=np.inf)  # shape/finiteness checks only
    return float(np.max(np.real(np.diag(p))))
