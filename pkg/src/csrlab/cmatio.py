"""Text serialization for dense complex matrices (`cmat v1`).

Format: a header line ``cmat <rows> <cols>`` followed by one line per row,
each entry written as ``re+imj`` (17 significant digits, no spaces inside an
entry), entries separated by whitespace.  Round-trips bit-exactly.
"""

import io

import numpy as np

from .errors import InvalidInputError
from .matrices import check_matrix


def dumps_cmat(a):
    a = check_matrix(np.asarray(a, dtype=complex), "cmat matrix")
    out = io.StringIO()
    out.write(f"cmat {a.shape[0]} {a.shape[1]}\n")
    for row in a:
        out.write(" ".join(f"{z.real:.17g}{z.imag:+.17g}j" for z in row))
        out.write("\n")
    return out.getvalue()


def loads_cmat(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InvalidInputError("empty cmat input")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "cmat":
        raise InvalidInputError(f"bad cmat header: {lines[0]!r}")
    try:
        rows, cols = int(header[1]), int(header[2])
    except ValueError as exc:
        raise InvalidInputError(f"bad cmat header: {lines[0]!r}") from exc
    if rows < 1 or cols < 1:
        raise InvalidInputError("cmat dimensions must be positive")
    if len(lines) - 1 != rows:
        raise InvalidInputError(f"expected {rows} rows, found {len(lines) - 1}")
    data = np.empty((rows, cols), dtype=complex)
    for i, line in enumerate(lines[1:]):
        toks = line.split()
        if len(toks) != cols:
            raise InvalidInputError(f"row {i}: expected {cols} entries, found {len(toks)}")
        try:
            data[i] = [complex(t) for t in toks]
        except ValueError as exc:
            raise InvalidInputError(f"row {i}: unparsable entry") from exc
    return check_matrix(data, "cmat matrix")


def save_cmat(path, a):
    with open(path, "w") as fh:
        fh.write(dumps_cmat(a))


def load_cmat(path):
    with open(path) as fh:
        return loads_cmat(fh.read())
