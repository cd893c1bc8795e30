"""Array-model generators and dense-matrix validation helpers."""

import numpy as np

from .errors import InvalidInputError


def check_matrix(a, name="matrix"):
    """Validate a dense matrix: 2-D, nonempty, all entries finite.

    Returns the input as a contiguous ndarray (complex or float preserved).
    """
    a = np.asarray(a)
    if a.ndim != 2:
        raise InvalidInputError(f"{name} must be 2-D, got ndim={a.ndim}")
    if a.shape[0] < 1 or a.shape[1] < 1:
        raise InvalidInputError(f"{name} must have at least one row and column")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(np.asarray(a).imag)):
        raise InvalidInputError(f"{name} contains non-finite entries")
    return np.ascontiguousarray(a)


def ula_steering(theta, m):
    """Steering vector of an M-sensor half-wavelength uniform linear array.

    Component k (0-based) is exp(-j * k * pi * sin(theta)).
    """
    if m < 1:
        raise InvalidInputError("sensor count must be >= 1")
    if not np.isfinite(theta):
        raise InvalidInputError("steering angle must be finite")
    k = np.arange(m)
    return np.exp(-1j * k * np.pi * np.sin(theta))


def fourier_dictionary(m, p):
    """M x P dictionary whose column k has entries exp(j*nu_k*i), nu_k = 2*pi*(k-1)/P.

    Column 1 (k=1) is the all-ones vector.  For P = M this is the unnormalized
    DFT matrix, which is invertible.
    """
    if m < 1 or p < 1:
        raise InvalidInputError("dictionary dimensions must be >= 1")
    rows = np.arange(m)[:, None]
    nu = 2.0 * np.pi * np.arange(p)[None, :] / p
    return np.exp(1j * rows * nu)
