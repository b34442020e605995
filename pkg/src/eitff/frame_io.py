"""JSON file formats for matrices, frames, and symmetry certificates.

Matrices serialize as row-major [re, im] pairs; real-tagged matrices
must carry literal zero imaginary parts.  Floats go through Python's
shortest round-trip repr, so writing and re-reading a file reproduces
every binary64 entry bit-exactly.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import FormatError
from .frames import FusionFrame
from .linalg import FieldTag, Mat

_FIELD_BY_CODE = {"R": FieldTag.REAL, "C": FieldTag.COMPLEX}


def matrix_to_payload(m: Mat) -> dict:
    data = [[float(z.real), float(z.imag)] for z in m.array.reshape(-1)]
    return {
        "field": m.field.value,
        "rows": m.rows,
        "cols": m.cols,
        "data": data,
    }


def matrix_from_payload(obj) -> Mat:
    if not isinstance(obj, dict):
        raise FormatError("matrix payload must be an object")
    for key in ("field", "rows", "cols", "data"):
        if key not in obj:
            raise FormatError(f"matrix payload missing key {key!r}")
    field = _FIELD_BY_CODE.get(obj["field"])
    if field is None:
        raise FormatError(f"unknown field code {obj['field']!r}")
    rows, cols = obj["rows"], obj["cols"]
    if not (isinstance(rows, int) and isinstance(cols, int) and rows >= 1 and cols >= 1):
        raise FormatError(f"bad dimensions rows={rows!r}, cols={cols!r}")
    data = obj["data"]
    if not isinstance(data, list) or len(data) != rows * cols:
        raise FormatError(
            f"data length {len(data) if isinstance(data, list) else '?'} "
            f"does not match {rows}x{cols}"
        )
    entries = np.empty(rows * cols, dtype=np.complex128)
    for pos, pair in enumerate(data):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
        ):
            raise FormatError(f"entry {pos} is not a [re, im] pair")
        re, im = float(pair[0]), float(pair[1])
        if not (np.isfinite(re) and np.isfinite(im)):
            raise FormatError(f"entry {pos} is not finite")
        if field is FieldTag.REAL and im != 0.0:
            raise FormatError(f"entry {pos} of a real matrix has im={im}")
        entries[pos] = complex(re, im)
    return Mat(field, entries.reshape(rows, cols))


def frame_to_payload(frame: FusionFrame, metadata: dict | None = None) -> dict:
    return {
        "field": frame.field.value,
        "d": frame.d,
        "r": frame.r,
        "n": frame.n,
        "isometries": [matrix_to_payload(phi) for phi in frame.isometries],
        "metadata": dict(metadata or {}),
    }


def frame_from_payload(obj) -> tuple[FusionFrame, dict]:
    if not isinstance(obj, dict):
        raise FormatError("frame payload must be an object")
    for key in ("field", "d", "r", "n", "isometries", "metadata"):
        if key not in obj:
            raise FormatError(f"frame payload missing key {key!r}")
    field = _FIELD_BY_CODE.get(obj["field"])
    if field is None:
        raise FormatError(f"unknown field code {obj['field']!r}")
    d, r, n = obj["d"], obj["r"], obj["n"]
    for name, value in (("d", d), ("r", r), ("n", n)):
        if not isinstance(value, int) or value < 1:
            raise FormatError(f"bad frame dimension {name}={value!r}")
    payloads = obj["isometries"]
    if not isinstance(payloads, list) or len(payloads) != n:
        raise FormatError(f"expected {n} isometries")
    isometries = []
    for pos, payload in enumerate(payloads):
        m = matrix_from_payload(payload)
        if m.shape != (d, r):
            raise FormatError(f"isometry {pos + 1} has shape {m.shape}, want ({d}, {r})")
        if m.field is not field:
            raise FormatError(f"isometry {pos + 1} field differs from frame field")
        isometries.append(m)
    metadata = obj["metadata"]
    if not isinstance(metadata, dict):
        raise FormatError("metadata must be an object")
    return FusionFrame(field, d, r, n, tuple(isometries)), metadata


def dump_frame(frame: FusionFrame, fp, metadata: dict | None = None) -> None:
    json.dump(frame_to_payload(frame, metadata), fp, indent=1)
    fp.write("\n")


def save_frame(frame: FusionFrame, path: str, metadata: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        dump_frame(frame, fp, metadata)


def load_frame(path: str) -> tuple[FusionFrame, dict]:
    with open(path, "r", encoding="utf-8") as fp:
        try:
            obj = json.load(fp)
        except json.JSONDecodeError as exc:
            raise FormatError(f"not valid JSON: {exc}") from exc
    return frame_from_payload(obj)


def certificate_to_payload(sigma_one_line: str, upsilon: Mat, residual: float) -> dict:
    return {
        "perm": sigma_one_line,
        "upsilon": matrix_to_payload(upsilon),
        "residual": float(residual),
    }


def certificate_from_payload(obj) -> tuple[str, Mat, float]:
    if not isinstance(obj, dict):
        raise FormatError("certificate payload must be an object")
    for key in ("perm", "upsilon", "residual"):
        if key not in obj:
            raise FormatError(f"certificate payload missing key {key!r}")
    if not isinstance(obj["perm"], str):
        raise FormatError("perm must be a one-line notation string")
    upsilon = matrix_from_payload(obj["upsilon"])
    residual = obj["residual"]
    if not isinstance(residual, (int, float)) or isinstance(residual, bool):
        raise FormatError("residual must be a number")
    return obj["perm"], upsilon, float(residual)


def save_certificate(path: str, sigma_one_line: str, upsilon: Mat, residual: float) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        json.dump(certificate_to_payload(sigma_one_line, upsilon, residual), fp, indent=1)
        fp.write("\n")


def load_certificate(path: str) -> tuple[str, Mat, float]:
    with open(path, "r", encoding="utf-8") as fp:
        try:
            obj = json.load(fp)
        except json.JSONDecodeError as exc:
            raise FormatError(f"not valid JSON: {exc}") from exc
    return certificate_from_payload(obj)
