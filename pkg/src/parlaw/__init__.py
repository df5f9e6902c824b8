"""Measures of faces and diagonals of parallelotopes and the generalized parallelogram law."""

from .combinatorics import (
    DiagonalLabel,
    FaceLabel,
    count_diagonals,
    count_faces,
    diagonal_labels,
    face_labels,
    k_subsets,
)
from .errors import (
    DegenerateGenerators,
    DimensionMismatch,
    EmptyFamily,
    ExhaustedRetries,
    InputError,
    InvalidRange,
    LabelOutOfRange,
    ModeMismatch,
    ParlawError,
)
from .exterior import EXACT, FLOAT, GramMatrix, Vector, determinant, dot, gram, k_measure_sq
from .harness import InstanceSpec, SweepSummary, random_generators, sweep
from .parallelotope import (
    Generators,
    VerificationReport,
    diag_mean_sq,
    diagonal_measure_sq,
    diagonal_vector,
    expansion_identity_gap,
    face_mean_sq,
    face_measure_sq,
    verify,
    verify_all,
)

__version__ = "0.1.0"
