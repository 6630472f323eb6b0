"""JSON matrix files: explicit dimension, optional subsystem split, [re, im] entries.

Example:

    {
      "dim": 2,
      "entries": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]
    }

Serialization is canonical (fixed key order, one entry pair per line), so
re-encoding a decoded file is byte-stable and diffs stay readable.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .bipartite import BipartiteDims
from .errors import MatrixFileError


def encode(a: np.ndarray, dims: BipartiteDims | tuple[int, int] | None = None) -> str:
    a = np.asarray(a, dtype=complex)
    d = a.shape[0]
    lines = ['{', f'  "dim": {d},']
    if dims is not None:
        dims = BipartiteDims.of(dims)
        lines.append(f'  "dims": [{dims.m}, {dims.n}],')
    lines.append('  "entries": [')
    for i in range(d):
        row = ", ".join(
            f"[{json.dumps(a[i, j].real)}, {json.dumps(a[i, j].imag)}]" for j in range(d)
        )
        comma = "," if i < d - 1 else ""
        lines.append(f"    [{row}]{comma}")
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def decode(text: str) -> tuple[np.ndarray, BipartiteDims | None]:
    """Parse a matrix file; raises MatrixFileError with the offset on bad input."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixFileError(
            f"invalid JSON at byte offset {e.pos}: {e.msg}", offset=e.pos
        ) from e
    if not isinstance(doc, dict):
        raise MatrixFileError("top-level value must be an object")
    try:
        d = doc["dim"]
        entries = doc["entries"]
    except KeyError as e:
        raise MatrixFileError(f"missing required key {e.args[0]!r}") from e
    if not isinstance(d, int) or d < 1:
        raise MatrixFileError(f"dim must be a positive integer, got {d!r}")
    try:
        arr = np.array(entries, dtype=float)
    except (TypeError, ValueError) as e:
        raise MatrixFileError(f"entries are not numeric pairs: {e}") from e
    if arr.shape != (d, d, 2):
        raise MatrixFileError(
            f"entries must be a {d}x{d} array of [re, im] pairs, got shape {arr.shape}"
        )
    if not np.all(np.isfinite(arr)):
        raise MatrixFileError("entries contain non-finite numbers")
    matrix = arr[..., 0] + 1j * arr[..., 1]
    dims = None
    if "dims" in doc and doc["dims"] is not None:
        raw = doc["dims"]
        if (
            not isinstance(raw, list)
            or len(raw) != 2
            or not all(isinstance(x, int) for x in raw)
        ):
            raise MatrixFileError(f"dims must be a pair of integers, got {raw!r}")
        if raw[0] * raw[1] != d:
            raise MatrixFileError(f"dims {raw} do not factor dim {d}")
        dims = BipartiteDims(raw[0], raw[1])
    return matrix, dims


def load(path: str) -> tuple[np.ndarray, BipartiteDims | None]:
    with open(path, "r", encoding="utf-8") as fh:
        return decode(fh.read())


def save(path: str, a: np.ndarray, dims: BipartiteDims | tuple[int, int] | None = None) -> None:
    text = encode(a, dims)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def format_float(x: float) -> str:
    """Stable 12-digit rendering used in reports and CSV output.

    Fixed point with 12 decimals in the everyday range, scientific
    notation with a lowercase exponent outside it.
    """
    if x == 0.0:
        return "0.000000000000"
    if not math.isfinite(x):
        return repr(x)
    ax = abs(x)
    if 1e-4 <= ax < 1e16:
        return f"{x:.12f}"
    return f"{x:.12e}"
