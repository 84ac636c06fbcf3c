"""Matrix document I/O.

A matrix file is a JSON object with integer fields ``rows`` and ``cols``
and ``data``, a flat row-major list of ``[real, imag]`` pairs.  Floats
are serialized with full round-trip precision, so write-then-read is
exact; NaN and infinities are rejected in both directions.
"""

import json
import math

import numpy as np

from .errors import MatrixFileError
from .linalg import as_matrix


def _reject_constant(token):
    raise MatrixFileError(f"non-finite number in matrix file: {token}")


def loads_matrix(text: str) -> np.ndarray:
    """Parse a matrix document from a JSON string."""
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MatrixFileError("matrix document must be a JSON object")
    try:
        rows = doc["rows"]
        cols = doc["cols"]
        data = doc["data"]
    except KeyError as exc:
        raise MatrixFileError(f"missing field {exc}") from exc
    if not isinstance(rows, int) or not isinstance(cols, int):
        raise MatrixFileError("rows and cols must be integers")
    if rows < 1 or cols < 1:
        raise MatrixFileError("rows and cols must be positive")
    if not isinstance(data, list) or len(data) != rows * cols:
        raise MatrixFileError(
            f"data must hold rows*cols = {rows * cols} entries"
        )
    values = np.empty(rows * cols, dtype=np.complex128)
    for k, entry in enumerate(data):
        if (not isinstance(entry, list) or len(entry) != 2
                or not all(isinstance(c, (int, float)) for c in entry)):
            raise MatrixFileError(
                f"data[{k}] must be a [real, imag] pair of numbers"
            )
        re, im = float(entry[0]), float(entry[1])
        if not (math.isfinite(re) and math.isfinite(im)):
            raise MatrixFileError(f"data[{k}] is not finite")
        values[k] = complex(re, im)
    return values.reshape(rows, cols)


def dumps_matrix(m) -> str:
    """Serialize a matrix to a JSON document string."""
    m = as_matrix(m)
    rows, cols = m.shape
    flat = m.reshape(-1)
    data = [[float(z.real), float(z.imag)] for z in flat]
    return json.dumps({"rows": rows, "cols": cols, "data": data},
                      allow_nan=False)


def read_matrix(path) -> np.ndarray:
    """Read a matrix document from a file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MatrixFileError(f"cannot read {path}: {exc}") from exc
    return loads_matrix(text)


def write_matrix(path, m) -> None:
    """Write a matrix document to a file."""
    text = dumps_matrix(m)
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
            fh.write("\n")
    except OSError as exc:
        raise MatrixFileError(f"cannot write {path}: {exc}") from exc
