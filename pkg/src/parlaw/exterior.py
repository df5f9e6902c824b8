"""Scalars, vectors, Gram matrices and squared wedge norms.

Two arithmetic modes are supported:

* ``"exact"`` -- values are :class:`fractions.Fraction` (always reduced, positive
  denominator).  Internally an exact vector is kept as integer numerators over a
  common denominator so that Gram matrices and determinants can be evaluated
  with integer-only fraction-free (Bareiss) elimination.
* ``"float"`` -- values are Python floats; determinants use Gaussian
  elimination with partial pivoting.

A single computation never mixes the two modes.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Literal, Sequence, Union

from .errors import DimensionMismatch, EmptyFamily, ModeMismatch

Mode = Literal["exact", "float"]
Scalar = Union[Fraction, float]

EXACT: Mode = "exact"
FLOAT: Mode = "float"
MODES = (EXACT, FLOAT)

# det(G) / prod(diag(G)) at or below this flags a float family as dependent
DEPENDENCE_THRESHOLD = 1e-12


def check_mode(mode: str) -> Mode:
    if mode not in MODES:
        raise ValueError(f"unknown arithmetic mode {mode!r}; expected one of {MODES}")
    return mode  # type: ignore[return-value]


def to_scalar(x, mode: Mode) -> Scalar:
    """Convert ``x`` (int, Fraction, float or numeric string) into ``mode``.

    Strings may be integers, decimals (``"0.25"``) or ratios (``"3/4"``).  In
    exact mode decimal strings are read literally, so ``"0.1"`` is ``1/10``.
    """
    check_mode(mode)
    if isinstance(x, bool):
        raise TypeError("booleans are not numeric inputs")
    if mode == EXACT:
        if isinstance(x, (Rational, float, str)):
            return Fraction(x.strip() if isinstance(x, str) else x)
        raise TypeError(f"cannot read {x!r} as an exact scalar")
    if isinstance(x, str):
        return float(Fraction(x.strip()))
    if isinstance(x, (Rational, float)):
        return float(x)
    raise TypeError(f"cannot read {x!r} as a float scalar")


def mode_of(x) -> Mode:
    if isinstance(x, float):
        return FLOAT
    if isinstance(x, Rational) and not isinstance(x, bool):
        return EXACT
    raise TypeError(f"{x!r} is not a scalar")


def format_scalar(x: Scalar) -> str:
    """Lossless text: reduced ``p/q`` (or ``p``) for exact, 17 significant digits for float."""
    if isinstance(x, float):
        return format(x, ".17g")
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Vector:
    """Immutable coordinate vector in one arithmetic mode.

    >>> Vector([1, 2]) + Vector(["1/2", 0])
    Vector(['3/2', '2'], mode='exact')
    """

    __slots__ = ("mode", "_coords", "_nums", "_den")

    def __init__(self, coords: Iterable, mode: Mode | None = None):
        coords = list(coords)
        if not coords:
            raise DimensionMismatch("a vector needs at least one coordinate")
        if mode is None:
            mode = FLOAT if any(isinstance(c, float) for c in coords) else EXACT
        check_mode(mode)
        self.mode = mode
        if mode == EXACT:
            fracs = [to_scalar(c, EXACT) for c in coords]
            den = math.lcm(*(f.denominator for f in fracs))
            self._nums = tuple(f.numerator * (den // f.denominator) for f in fracs)
            self._den = den
            self._coords = None
        else:
            self._coords = tuple(to_scalar(c, FLOAT) for c in coords)
            self._nums = None
            self._den = None

    @classmethod
    def _from_ints(cls, nums: Sequence[int], den: int) -> "Vector":
        g = math.gcd(den, *nums)
        v = object.__new__(cls)
        v.mode = EXACT
        v._nums = tuple(a // g for a in nums)
        v._den = den // g
        v._coords = None
        return v

    @classmethod
    def _from_floats(cls, coords: Sequence[float]) -> "Vector":
        v = object.__new__(cls)
        v.mode = FLOAT
        v._coords = tuple(coords)
        v._nums = None
        v._den = None
        return v

    @property
    def coords(self) -> tuple:
        if self._coords is None:
            self._coords = tuple(Fraction(a, self._den) for a in self._nums)
        return self._coords

    def __len__(self) -> int:
        return len(self._nums) if self.mode == EXACT else len(self._coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        if self.mode != other.mode:
            return False
        if self.mode == EXACT:
            return self._nums == other._nums and self._den == other._den
        return self._coords == other._coords

    def __hash__(self) -> int:
        return hash((self.mode, self._nums, self._den) if self.mode == EXACT else (self.mode, self._coords))

    def __repr__(self) -> str:
        return f"Vector({[format_scalar(c) for c in self.coords]}, mode={self.mode!r})"

    def _check(self, other: "Vector") -> None:
        if self.mode != other.mode:
            raise ModeMismatch(f"cannot combine {self.mode} and {other.mode} vectors")
        if len(self) != len(other):
            raise DimensionMismatch(f"lengths differ: {len(self)} vs {len(other)}")

    def __add__(self, other: "Vector") -> "Vector":
        self._check(other)
        if self.mode == EXACT:
            den = math.lcm(self._den, other._den)
            p, q = den // self._den, den // other._den
            return Vector._from_ints([a * p + b * q for a, b in zip(self._nums, other._nums)], den)
        return Vector._from_floats([a + b for a, b in zip(self._coords, other._coords)])

    def __neg__(self) -> "Vector":
        if self.mode == EXACT:
            return Vector._from_ints([-a for a in self._nums], self._den)
        return Vector._from_floats([-a for a in self._coords])

    def __sub__(self, other: "Vector") -> "Vector":
        return self + (-other)

    def scale(self, lam) -> "Vector":
        lam = to_scalar(lam, self.mode)
        if self.mode == EXACT:
            return Vector._from_ints([a * lam.numerator for a in self._nums], self._den * lam.denominator)
        return Vector._from_floats([a * lam for a in self._coords])

    def to_mode(self, mode: Mode) -> "Vector":
        if mode == self.mode:
            return self
        return Vector(self.coords, mode=mode)


def _check_family(vs: Sequence[Vector]) -> None:
    if not vs:
        return
    first = vs[0]
    for v in vs[1:]:
        first._check(v)


def dot(u: Vector, v: Vector) -> Scalar:
    """Euclidean inner product."""
    u._check(v)
    if u.mode == EXACT:
        return Fraction(sum(a * b for a, b in zip(u._nums, v._nums)), u._den * v._den)
    return sum(a * b for a, b in zip(u._coords, v._coords))


class GramMatrix:
    """Square matrix of scalars, normally the pairwise inner products of a family.

    Exact matrices are stored as integer rows plus one positive divisor per row
    (``entries[p][q] == rows[p][q] / divisors[p]``), the form the fraction-free
    determinant works on.
    """

    __slots__ = ("mode", "_rows", "_divisors", "_entries")

    def __init__(self, entries: Sequence[Sequence], mode: Mode | None = None):
        entries = [list(r) for r in entries]
        m = len(entries)
        if any(len(r) != m for r in entries):
            raise DimensionMismatch("matrix must be square")
        if mode is None:
            flat = [x for r in entries for x in r]
            mode = FLOAT if any(isinstance(x, float) for x in flat) else EXACT
        self.mode = check_mode(mode)
        if self.mode == EXACT:
            rows, divs = [], []
            for r in entries:
                fr = [to_scalar(x, EXACT) for x in r]
                d = math.lcm(1, *(f.denominator for f in fr))
                rows.append(tuple(f.numerator * (d // f.denominator) for f in fr))
                divs.append(d)
            self._rows, self._divisors, self._entries = tuple(rows), tuple(divs), None
        else:
            self._entries = tuple(tuple(to_scalar(x, FLOAT) for x in r) for r in entries)
            self._rows = self._divisors = None

    @classmethod
    def _from_int_rows(cls, rows, divisors) -> "GramMatrix":
        g = object.__new__(cls)
        g.mode = EXACT
        g._rows, g._divisors, g._entries = tuple(map(tuple, rows)), tuple(divisors), None
        return g

    @property
    def size(self) -> int:
        return len(self._rows) if self.mode == EXACT else len(self._entries)

    @property
    def entries(self) -> tuple:
        if self._entries is None:
            self._entries = tuple(
                tuple(Fraction(a, d) for a in row) for row, d in zip(self._rows, self._divisors)
            )
        return self._entries

    def __getitem__(self, pq):
        p, q = pq
        return self.entries[p][q]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GramMatrix):
            return NotImplemented
        return self.mode == other.mode and self.entries == other.entries

    def __repr__(self) -> str:
        body = [[format_scalar(x) for x in r] for r in self.entries]
        return f"GramMatrix({body}, mode={self.mode!r})"

    def is_symmetric(self) -> bool:
        e = self.entries
        return all(e[p][q] == e[q][p] for p in range(self.size) for q in range(p))

    def principal(self, m: int) -> "GramMatrix":
        """Leading m x m block."""
        if self.mode == EXACT:
            return GramMatrix._from_int_rows([r[:m] for r in self._rows[:m]], self._divisors[:m])
        return GramMatrix([r[:m] for r in self._entries[:m]], FLOAT)

    def leading_minors(self) -> list:
        return [determinant(self.principal(m)) for m in range(1, self.size + 1)]


def gram(vs: Sequence[Vector]) -> GramMatrix:
    """Gram matrix ``[<v_p, v_q>]``; the empty family gives the 0x0 matrix."""
    vs = list(vs)
    _check_family(vs)
    if not vs:
        return GramMatrix._from_int_rows([], [])
    m = len(vs)
    if vs[0].mode == EXACT:
        nums = [v._nums for v in vs]
        g = [[0] * m for _ in range(m)]
        for p in range(m):
            for q in range(p, m):
                g[p][q] = g[q][p] = sum(a * b for a, b in zip(nums[p], nums[q]))
        # entries[p][q] = g[p][q] / (d_p d_q); bring row p to a single divisor d_p * L
        dens = [v._den for v in vs]
        lcm = math.lcm(*dens)
        rows = [[g[p][q] * (lcm // dens[q]) for q in range(m)] for p in range(m)]
        return GramMatrix._from_int_rows(rows, [d * lcm for d in dens])
    cs = [v._coords for v in vs]
    e = [[0.0] * m for _ in range(m)]
    for p in range(m):
        for q in range(p, m):
            e[p][q] = e[q][p] = sum(a * b for a, b in zip(cs[p], cs[q]))
    return GramMatrix(e, FLOAT)


def _bareiss(a: list[list[int]]) -> int:
    # fraction-free elimination; every division below is exact
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _pivoted_det(e: Sequence[Sequence[float]]) -> float:
    a = [list(r) for r in e]
    n = len(a)
    det = 1.0
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(a[i][k]))
        if a[p][k] == 0.0:
            return 0.0
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        akk = a[k][k]
        det *= akk
        for i in range(k + 1, n):
            f = a[i][k] / akk
            if f:
                ri, rk = a[i], a[k]
                for j in range(k + 1, n):
                    ri[j] -= f * rk[j]
    return det


def determinant(m: GramMatrix) -> Scalar:
    """det(M); the 0x0 matrix has determinant 1."""
    if m.mode == EXACT:
        num = _bareiss([list(r) for r in m._rows])
        return Fraction(num, math.prod(m._divisors))
    return _pivoted_det(m._entries)


def k_measure_sq(vs: Sequence[Vector]) -> Scalar:
    """Squared k-volume ``|v_1 ^ ... ^ v_k|^2`` of the parallelotope spanned by ``vs``."""
    vs = list(vs)
    if not vs:
        raise EmptyFamily("k_measure_sq needs at least one vector; use determinant(gram([])) for the empty wedge")
    return determinant(gram(vs))


def dependence_ratio(g: GramMatrix) -> Scalar:
    """Scale-invariant ``det(G) / prod(G[i][i])``; 0 when any diagonal entry vanishes."""
    diag = [g[i, i] for i in range(g.size)]
    if any(d == 0 for d in diag):
        return Fraction(0) if g.mode == EXACT else 0.0
    return determinant(g) / math.prod(diag)


def is_dependent(vs: Sequence[Vector], threshold: float = DEPENDENCE_THRESHOLD) -> bool:
    vs = list(vs)
    g = gram(vs)
    if g.mode == EXACT:
        return determinant(g) == 0
    return dependence_ratio(g) <= threshold
