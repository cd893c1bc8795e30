"""Dense Hermitian eigendecomposition with a fixed ordering and phase convention."""

import numpy as np

from .errors import InvalidInputError

HERMITIAN_TOL = 1e-10


def is_hermitian(h, tol=HERMITIAN_TOL):
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        return False
    return np.max(np.abs(h - h.conj().T)) <= tol * max(1.0, np.max(np.abs(h)))


def fix_phase(u):
    """Rotate each column so its largest-magnitude component is real positive.

    Eigenvectors are phase-ambiguous; this convention makes decompositions
    deterministic across runs.
    """
    u = np.array(u, copy=True)
    for j in range(u.shape[1]):
        col = u[:, j]
        k = int(np.argmax(np.abs(col)))
        piv = col[k]
        if np.abs(piv) > 0:
            u[:, j] = col * (np.conj(piv) / np.abs(piv))
    return u


def hermitian_eig(h):
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues, eigenvectors) with real eigenvalues sorted in
    descending order, unit-norm eigenvectors as matrix columns, and column
    phases fixed by `fix_phase`.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise InvalidInputError("hermitian_eig requires a square matrix")
    if not np.all(np.isfinite(h)):
        raise InvalidInputError("hermitian_eig requires finite entries")
    if np.max(np.abs(h - h.conj().T)) > HERMITIAN_TOL * max(1.0, np.max(np.abs(h))):
        raise InvalidInputError("matrix is not Hermitian within tolerance")
    w, u = np.linalg.eigh((h + h.conj().T) / 2.0)
    order = np.argsort(w)[::-1]
    return w[order], fix_phase(u[:, order])


def dominant_eigvec(h):
    """Unit-norm eigenvector of the largest eigenvalue, phase-fixed."""
    w, u = hermitian_eig(h)
    return u[:, 0]
