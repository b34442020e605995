import numpy as np
import pytest

from eitff.frames import FusionFrame, build_eitff
from eitff.linalg import FieldTag, Mat


@pytest.fixture
def example_frame():
    """The 4-subspace real code in dimension 4 with r = 2."""
    return build_eitff(FieldTag.REAL, 2, 4)


@pytest.fixture
def complex_etf_frame():
    """The 4-vector equiangular tight frame in C^2 (r = 1)."""
    return build_eitff(FieldTag.COMPLEX, 1, 4)


def random_subspace_frame(field, d, r, n, seed=0):
    """n random r-dimensional subspaces of F^d as orthonormal columns."""
    rng = np.random.default_rng(seed)
    isos = []
    for _ in range(n):
        raw = rng.standard_normal((d, r))
        if field is FieldTag.COMPLEX:
            raw = raw + 1j * rng.standard_normal((d, r))
        q, _ = np.linalg.qr(raw)
        isos.append(Mat(field, q[:, :r]))
    return FusionFrame(field, d, r, n, tuple(isos))


def random_orthogonal(d, seed=0):
    rng = np.random.default_rng(seed)
    q, _ = np.linalg.qr(rng.standard_normal((d, d)))
    return q


def random_unitary(d, seed=0):
    rng = np.random.default_rng(seed)
    q, _ = np.linalg.qr(rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d)))
    return q
