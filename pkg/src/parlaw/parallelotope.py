"""Face and diagonal measures of a parallelotope and the mean-square ratio check.

All measures are handled as squares; roots only appear in rendered output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from . import combinatorics as cb
from .combinatorics import DiagonalLabel, FaceLabel
from .errors import DegenerateGenerators, DimensionMismatch, LabelOutOfRange, ModeMismatch
from .exterior import (
    EXACT,
    FLOAT,
    Mode,
    Scalar,
    Vector,
    _bareiss,
    _pivoted_det,
    dot,
    format_scalar,
    is_dependent,
    k_measure_sq,
)

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Generators:
    """N linearly independent vectors of R^n spanning the parallelotope.

    Independence is checked once here; everything downstream assumes it.
    """

    vectors: tuple

    def __post_init__(self):
        vs = tuple(self.vectors)
        object.__setattr__(self, "vectors", vs)
        if not vs:
            raise DegenerateGenerators("no generators given")
        modes = {v.mode for v in vs}
        if len(modes) > 1:
            raise ModeMismatch("generators mix exact and float vectors")
        if len({len(v) for v in vs}) > 1:
            raise DimensionMismatch("generators have different lengths")
        if len(vs) > len(vs[0]):
            raise DegenerateGenerators(f"{len(vs)} vectors in R^{len(vs[0])} are necessarily dependent")
        if is_dependent(vs):
            raise DegenerateGenerators("generators are linearly dependent")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], mode: Mode | None = None) -> "Generators":
        rows = [list(r) for r in rows]
        if mode is None:
            mode = FLOAT if any(isinstance(x, float) for r in rows for x in r) else EXACT
        return cls(tuple(Vector(r, mode) for r in rows))

    @property
    def N(self) -> int:
        return len(self.vectors)

    @property
    def n(self) -> int:
        return len(self.vectors[0])

    @property
    def mode(self) -> Mode:
        return self.vectors[0].mode

    def __getitem__(self, i) -> Vector:
        return self.vectors[i]

    def rows(self) -> list:
        return [list(v.coords) for v in self.vectors]

    def to_mode(self, mode: Mode) -> "Generators":
        return Generators(tuple(v.to_mode(mode) for v in self.vectors))

    def permuted(self, order: Sequence[int]) -> "Generators":
        return Generators(tuple(self.vectors[i] for i in order))

    def scaled(self, lam) -> "Generators":
        return Generators(tuple(v.scale(lam) for v in self.vectors))


def _zero(mode: Mode) -> Scalar:
    return Fraction(0) if mode == EXACT else 0.0


def _check_indices(g: Generators, idx: Iterable[int]) -> None:
    for i in idx:
        if not 0 <= i < g.N:
            raise LabelOutOfRange(f"index {i} outside 0..{g.N - 1}")


def diagonal_vector(g: Generators, d: DiagonalLabel) -> Vector:
    """Signed sum of part1 generators minus part2 generators."""
    _check_indices(g, d.t)
    v = g[d.part1[0]]
    for i in d.part1[1:]:
        v = v + g[i]
    for i in d.part2:
        v = v - g[i]
    return v


def face_measure_sq(g: Generators, f: FaceLabel) -> Scalar:
    # translated copies are congruent, so the translation bits play no part
    _check_indices(g, f.subset)
    return k_measure_sq([g[i] for i in f.subset])


def diagonal_measure_sq(g: Generators, d: DiagonalLabel) -> Scalar:
    _check_indices(g, d.t)
    others = [g[i] for i in range(g.N) if i not in d.t]
    return k_measure_sq([diagonal_vector(g, d)] + others)


# Bulk sums work on the Gram matrix of the generators instead of on vectors.
# In exact mode every generator is written as b_i / L with integer b_i, so each
# squared k-volume is det(integer minor) / L^(2k) and sums stay in integers
# until one final division.


def _gram_table(g: Generators):
    cached = g.__dict__.get("_table")
    if cached is not None:
        return cached
    if g.mode == EXACT:
        lcm = math.lcm(*(v._den for v in g.vectors))
        b = [[a * (lcm // v._den) for a in v._nums] for v in g.vectors]
        table = ([[sum(x * y for x, y in zip(b[p], b[q])) for q in range(g.N)] for p in range(g.N)], lcm * lcm)
    else:
        c = [v.coords for v in g.vectors]
        table = ([[sum(x * y for x, y in zip(c[p], c[q])) for q in range(g.N)] for p in range(g.N)], None)
    object.__setattr__(g, "_table", table)
    return table


def _minor_det(G, idx, exact: bool):
    a = [[G[i][j] for j in idx] for i in idx]
    return _bareiss(a) if exact else _pivoted_det(a)


def _diagonal_det(G, plus, minus, others, exact: bool):
    # Gram of {sum(plus) - sum(minus)} + others, read off the generator Gram
    row = list(G[plus[0]])
    for i in plus[1:]:
        row = [x + y for x, y in zip(row, G[i])]
    for i in minus:
        row = [x - y for x, y in zip(row, G[i])]
    vv = sum(row[i] for i in plus) - sum(row[i] for i in minus)
    head = [vv] + [row[j] for j in others]
    a = [head] + [[head[r + 1]] + [G[i][j] for j in others] for r, i in enumerate(others)]
    return _bareiss(a) if exact else _pivoted_det(a)


def _memo(fn):
    # sums depend only on the immutable generators and k
    def wrapper(g: Generators, k: int) -> Scalar:
        cache = g.__dict__.setdefault("_sums", {})
        key = (fn.__name__, k)
        if key not in cache:
            cache[key] = fn(g, k)
        return cache[key]

    wrapper.__name__, wrapper.__doc__ = fn.__name__, fn.__doc__
    return wrapper


def _finish(total, scale, k: int) -> Scalar:
    return Fraction(total, scale ** k) if scale is not None else total


@_memo
def face_sq_sum(g: Generators, k: int) -> Scalar:
    """Sum of squared measures over all 2^(N-k) C(N,k) labelled faces."""
    G, scale = _gram_table(g)
    exact = scale is not None
    total = 0 if exact else 0.0
    last_subset, last = None, None
    for f in cb.face_labels(g.N, k):
        if f.subset != last_subset:
            last_subset = f.subset
            last = _minor_det(G, f.subset, exact)
        total += last
    return _finish(total, scale, k)


@_memo
def subset_sq_sum(g: Generators, k: int) -> Scalar:
    """Sum of squared k-volumes over the C(N,k) generator subsets (one per face class)."""
    G, scale = _gram_table(g)
    exact = scale is not None
    total = 0 if exact else 0.0
    for s in cb.k_subsets(g.N, k):
        total += _minor_det(G, s, exact)
    return _finish(total, scale, k)


@_memo
def diag_sq_sum(g: Generators, k: int) -> Scalar:
    """Sum of squared measures over all 2^(N-k) C(N, N-k+1) diagonals."""
    G, scale = _gram_table(g)
    exact = scale is not None
    total = 0 if exact else 0.0
    for d in cb.diagonal_labels(g.N, k):
        others = [i for i in range(g.N) if i not in d.t]
        total += _diagonal_det(G, d.part1, d.part2, others, exact)
    return _finish(total, scale, k)


def face_mean_sq(g: Generators, k: int, fast: bool = False) -> Scalar:
    """Mean squared measure of the k-faces.

    With ``fast=True`` the translation multiplicity is cancelled in closed form
    instead of being enumerated; both paths agree exactly in exact mode.
    """
    if fast:
        cb.check_k(g.N, k)
        return subset_sq_sum(g, k) / math.comb(g.N, k)
    return face_sq_sum(g, k) / cb.count_faces(g.N, k)


def diag_mean_sq(g: Generators, k: int) -> Scalar:
    return diag_sq_sum(g, k) / cb.count_diagonals(g.N, k)


def expansion_identity_gap(g: Generators, k: int) -> Scalar:
    """``sum over diagonals of m^2  -  2^(N-k) * k * sum over k-subsets of m^2``.

    Zero whenever each squared subset volume occurs 2^(N-k) * k times once the
    diagonal vectors are expanded bilinearly.
    """
    return diag_sq_sum(g, k) - 2 ** (g.N - k) * k * subset_sq_sum(g, k)


def codim_one_identity_sides(g: Generators) -> tuple:
    """Both sides of the k = N-1 identity, built straight from the vectors.

    Left: sum over i<j of the squared (N-1)-volumes of (a_i + a_j) and (a_i - a_j)
    wedged with the other N-2 generators.  Right: 2(N-1) times the sum of squared
    (N-1)-volumes with one generator left out.
    """
    N = g.N
    if N < 2:
        raise cb.InvalidRange("needs at least two generators")
    lhs = _zero(g.mode)
    for i, j in combinations(range(N), 2):
        rest = [g[m] for m in range(N) if m not in (i, j)]
        lhs += k_measure_sq([g[i] + g[j]] + rest) + k_measure_sq([g[i] - g[j]] + rest)
    rhs = _zero(g.mode)
    for m in range(N):
        rhs += k_measure_sq([g[x] for x in range(N) if x != m])
    return lhs, 2 * (N - 1) * rhs


def signed_sum_identity_sides(g: Generators) -> tuple:
    """Both sides of ``sum_eps |a_1 +- a_2 ... +- a_N|^2 = 2^(N-1) sum |a_i|^2``.

    N=2 is the parallelogram law, N=3 its four-diagonal analogue.
    """
    lhs = _zero(g.mode)
    for signs in product((1, -1), repeat=g.N - 1):
        v = g[0]
        for s, w in zip(signs, g.vectors[1:]):
            v = v + w if s > 0 else v - w
        lhs += dot(v, v)
    rhs = _zero(g.mode)
    for w in g.vectors:
        rhs += dot(w, w)
    return lhs, 2 ** (g.N - 1) * rhs


@dataclass(frozen=True)
class VerificationReport:
    N: int
    n: int
    k: int
    face_count: int
    diagonal_count: int
    face_sq_sum: Scalar
    diag_sq_sum: Scalar
    face_mean_sq: Scalar
    diag_mean_sq: Scalar
    ratio_sq: Scalar
    expected: int
    residual: Scalar
    mode: str
    tolerance: float = field(default=DEFAULT_TOL)

    @property
    def passed(self) -> bool:
        if self.mode == EXACT:
            return self.residual == 0
        return self.residual <= self.tolerance * self.expected

    @property
    def ratio(self) -> float:
        return math.sqrt(self.ratio_sq)

    def as_dict(self) -> dict:
        """Flat record with scalars rendered losslessly as strings."""
        out = {}
        for name in (
            "N", "n", "k", "mode", "face_count", "diagonal_count", "face_sq_sum",
            "diag_sq_sum", "face_mean_sq", "diag_mean_sq", "ratio_sq", "expected", "residual",
        ):
            val = getattr(self, name)
            out[name] = format_scalar(val) if isinstance(val, (Fraction, float)) else val
        out["ratio"] = format(self.ratio, ".17g")
        out["passed"] = self.passed
        return out


def verify(g: Generators, k: int, tol: float = DEFAULT_TOL) -> VerificationReport:
    """Compare the diagonal/face mean-square ratio with N - k + 1."""
    cb.check_k(g.N, k)
    fc, dc = cb.count_faces(g.N, k), cb.count_diagonals(g.N, k)
    fs, ds = face_sq_sum(g, k), diag_sq_sum(g, k)
    fm, dm = fs / fc, ds / dc
    ratio_sq = dm / fm
    expected = g.N - k + 1
    return VerificationReport(
        N=g.N, n=g.n, k=k, face_count=fc, diagonal_count=dc,
        face_sq_sum=fs, diag_sq_sum=ds, face_mean_sq=fm, diag_mean_sq=dm,
        ratio_sq=ratio_sq, expected=expected, residual=abs(ratio_sq - expected),
        mode=g.mode, tolerance=tol,
    )


def verify_all(g: Generators, tol: float = DEFAULT_TOL) -> list:
    if g.N < 2:
        raise cb.InvalidRange("verify_all needs N >= 2")
    return [verify(g, k, tol) for k in range(1, g.N)]
