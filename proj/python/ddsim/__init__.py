"""Real similarity to diagonally dominant matrices.

Results come back as dicts with the same keys as the ``ddsim`` CLI JSON;
matrix-valued entries are converted to numpy arrays.
"""

import numpy as np

from . import _ddsim
from ._ddsim import (  # noqa: F401
    ClusterAmbiguity,
    DdsimError,
    DimensionMismatch,
    IllConditionedJordan,
    InvalidMatrix,
    NotAchievable,
    NumericallySingular,
    ParseError,
    PreconditionViolated,
    SingularInput,
    SingularTransform,
    classify,
    classify_2x2,
    comparison_matrix,
    eigen_structure,
    gershgorin_discs,
    gershgorin_svg,
    grid_search_2x2,
    is_diag_dominant,
    is_h_matrix,
    is_hurwitz,
    is_m_matrix,
    is_metzler,
    is_z_matrix,
    lemma3_feasible,
    lemma3_strict_feasible,
    params_to_matrix,
    random_similarity_search,
    similarity_residual,
)

_MATRIX_KEYS = ("P", "B", "J", "K", "witness")


def _arrays(doc):
    for key in _MATRIX_KEYS:
        value = doc.get(key)
        if isinstance(value, dict):
            doc[key] = np.asarray(value["re"]) + 1j * np.asarray(value["im"])
        elif value is not None:
            doc[key] = np.asarray(value, dtype=float)
    if "d" in doc:
        doc["d"] = np.asarray(doc["d"], dtype=float)
    return doc


def _float_matrix(a):
    return np.asarray(a, dtype=float)


def real_jordan_form(a, cluster_tol=1e-7):
    return _arrays(_ddsim.real_jordan_form(_float_matrix(a), cluster_tol))


def build_real_dd_transform(a, target="strict", tol=1e-9, margin=0.5):
    return _arrays(_ddsim.build_real_dd_transform(_float_matrix(a), target, tol, margin))


def build_complex_dd_transform(a, tol=1e-9, margin=0.5):
    return _arrays(_ddsim.build_complex_dd_transform(_float_matrix(a), tol, margin))


def metzler_hurwitz_scaling(a, tol=1e-9):
    return _arrays(_ddsim.metzler_hurwitz_scaling(_float_matrix(a), tol))


def h_matrix_scaling(a, tol=1e-9):
    return _arrays(_ddsim.h_matrix_scaling(_float_matrix(a), tol))


def random_similarity_search(a, trials, seed=0, strict=False):
    return _arrays(_ddsim.random_similarity_search(_float_matrix(a), trials, seed, strict))
