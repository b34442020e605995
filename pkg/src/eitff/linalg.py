"""Field-tagged dense matrices and the decompositions built on them.

Everything downstream manipulates `Mat`: an immutable dense matrix tagged
as real or complex.  Real matrices ride inside the complex128 carrier with
a hard zero-imaginary invariant, so a single arithmetic kernel serves both
fields.  The SVD is the one decomposition primitive; polar factors and
null spaces are derived from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    DomainError,
    InvalidInputError,
    NumericError,
    ShapeError,
    SingularMatrixError,
)

DEFAULT_TOL = 1e-10


class FieldTag(Enum):
    REAL = "R"
    COMPLEX = "C"


def join_fields(a: FieldTag, b: FieldTag) -> FieldTag:
    """Smallest field containing both operands (real promotes to complex)."""
    if a is FieldTag.COMPLEX or b is FieldTag.COMPLEX:
        return FieldTag.COMPLEX
    return FieldTag.REAL


@dataclass(frozen=True, eq=False)
class Mat:
    """Immutable dense matrix over R or C.

    Entries are stored as complex128 regardless of the field tag; a
    real-tagged matrix must have every imaginary part exactly zero and
    the constructor rejects anything else.  All entries must be finite.
    """

    field: FieldTag
    array: np.ndarray

    def __post_init__(self):
        arr = np.array(self.array, dtype=np.complex128)
        if arr.ndim != 2:
            raise ShapeError(f"matrix must be 2-d, got ndim={arr.ndim}")
        if not np.all(np.isfinite(arr)):
            raise InvalidInputError("matrix entries must be finite")
        if self.field is FieldTag.REAL:
            if np.any(arr.imag != 0.0):
                raise InvalidInputError(
                    "real-tagged matrix has a nonzero imaginary part"
                )
            arr = arr.real.astype(np.complex128)
        arr.setflags(write=False)
        object.__setattr__(self, "array", arr)

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.array.shape

    def working(self) -> np.ndarray:
        """Entries in the field's natural dtype (float64 when real).

        Returns a contiguous array: the strided `.real` view would push
        matmul off the fast BLAS path.
        """
        if self.field is FieldTag.REAL:
            return np.ascontiguousarray(self.array.real)
        return self.array

    @classmethod
    def from_real(cls, array) -> "Mat":
        return cls(FieldTag.REAL, array)

    @classmethod
    def from_complex(cls, array) -> "Mat":
        return cls(FieldTag.COMPLEX, array)

    @classmethod
    def identity(cls, n: int, field: FieldTag = FieldTag.REAL) -> "Mat":
        return cls(field, np.eye(n))

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldTag = FieldTag.REAL) -> "Mat":
        return cls(field, np.zeros((rows, cols)))

    def __matmul__(self, other: "Mat") -> "Mat":
        return matmul(self, other)

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Mat(join_fields(self.field, other.field), self.array + other.array)

    def __sub__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {other.shape} from {self.shape}")
        return Mat(join_fields(self.field, other.field), self.array - other.array)

    def __neg__(self) -> "Mat":
        return Mat(self.field, -self.array)

    def __mul__(self, scalar) -> "Mat":
        field = self.field
        if isinstance(scalar, complex) and scalar.imag != 0.0:
            field = FieldTag.COMPLEX
        return Mat(field, scalar * self.array)

    __rmul__ = __mul__


def max_abs(values) -> float:
    """Largest entrywise magnitude; zero for an empty array."""
    arr = values.array if isinstance(values, Mat) else np.asarray(values)
    if arr.size == 0:
        return 0.0
    return float(np.max(np.abs(arr)))


def matmul(a: Mat, b: Mat) -> Mat:
    """Matrix product; real operands stay real, otherwise complex."""
    if a.cols != b.rows:
        raise ShapeError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}"
        )
    field = join_fields(a.field, b.field)
    if field is FieldTag.REAL:
        return Mat(field, a.working() @ b.working())
    return Mat(field, a.array @ b.array)


def adjoint(a: Mat) -> Mat:
    """Conjugate transpose."""
    return Mat(a.field, a.array.conj().T)


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product, (a.rows*b.rows) x (a.cols*b.cols)."""
    field = join_fields(a.field, b.field)
    if field is FieldTag.REAL:
        return Mat(field, np.kron(a.working(), b.working()))
    return Mat(field, np.kron(a.array, b.array))


def svd(a: Mat) -> tuple[Mat, np.ndarray, Mat]:
    """Thin SVD: a = U diag(s) V* with orthonormal columns in U and V.

    Singular values come back nonincreasing.  Real input yields real
    factors.
    """
    try:
        u, s, vh = np.linalg.svd(a.working(), full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"SVD failed to converge on {a.shape} input") from exc
    return Mat(a.field, u), s, Mat(a.field, vh.conj().T)


def polar_unitary(a: Mat) -> Mat:
    """Unitary polar factor U V* of an invertible square matrix."""
    if a.rows != a.cols:
        raise ShapeError(f"polar factor needs a square matrix, got {a.shape}")
    u, s, v = svd(a)
    if s[0] == 0.0 or s[-1] <= 1e-10 * s[0]:
        raise SingularMatrixError(
            f"matrix is numerically singular (s_min/s_max = {s[-1]}/{s[0]})"
        )
    return Mat(a.field, u.array @ v.array.conj().T)


def nullspace(a: Mat, tol: float) -> Mat:
    """Orthonormal basis of the numerical null space.

    A column x is kept when its singular value is at most tol * s_max,
    i.e. ||a x|| <= tol ||a|| ||x||.  May legitimately have zero columns.
    """
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    u, s, vh = np.linalg.svd(a.working(), full_matrices=True)
    smax = float(s[0]) if s.size else 0.0
    padded = np.zeros(a.cols)
    padded[: s.size] = s
    keep = padded <= tol * smax
    return Mat(a.field, vh.conj().T[:, keep])


def vstack(*mats: Mat) -> Mat:
    field = FieldTag.REAL
    for m in mats:
        field = join_fields(field, m.field)
    return Mat(field, np.vstack([m.array for m in mats]))


def hstack(*mats: Mat) -> Mat:
    field = FieldTag.REAL
    for m in mats:
        field = join_fields(field, m.field)
    return Mat(field, np.hstack([m.array for m in mats]))


def block_diag(*mats: Mat) -> Mat:
    field = FieldTag.REAL
    for m in mats:
        field = join_fields(field, m.field)
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = np.zeros((rows, cols), dtype=np.complex128)
    i = j = 0
    for m in mats:
        out[i : i + m.rows, j : j + m.cols] = m.array
        i += m.rows
        j += m.cols
    return Mat(field, out)
