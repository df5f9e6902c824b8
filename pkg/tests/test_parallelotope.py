from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from parlaw.combinatorics import DiagonalLabel, FaceLabel, count_diagonals, count_faces, diagonal_labels, face_labels
from parlaw.errors import DegenerateGenerators, InvalidRange, LabelOutOfRange, ModeMismatch
from parlaw.exterior import Vector
from parlaw.parallelotope import (
    Generators,
    codim_one_identity_sides,
    diag_mean_sq,
    diag_sq_sum,
    diagonal_measure_sq,
    diagonal_vector,
    expansion_identity_gap,
    face_mean_sq,
    face_measure_sq,
    face_sq_sum,
    signed_sum_identity_sides,
    subset_sq_sum,
    verify,
    verify_all,
)

from conftest import small_rationals, wedge_sq_oracle

SQUARE = Generators.from_rows([[1, 0], [1, 1]])


@st.composite
def generators(draw, min_N=2, max_N=5):
    N = draw(st.integers(min_N, max_N))
    n = draw(st.integers(N, N + 2))
    rows = [draw(st.lists(small_rationals, min_size=n, max_size=n)) for _ in range(N)]
    assume(wedge_sq_oracle(rows) != 0)
    return Generators.from_rows(rows)


@st.composite
def generators_and_k(draw, **kw):
    g = draw(generators(**kw))
    return g, draw(st.integers(1, g.N - 1))


def oracle_means(rows, k):
    """Mean squared face and diagonal measures straight from the definitions."""
    N = len(rows)
    rows = [[Fraction(x) for x in r] for r in rows]
    faces = []
    for s in combinations(range(N), k):
        faces += [wedge_sq_oracle([rows[i] for i in s])] * 2 ** (N - k)
    diags = []
    for t in combinations(range(N), N - k + 1):
        rest = [rows[i] for i in range(N) if i not in t]
        for signs in product((1, -1), repeat=len(t) - 1):
            v = [rows[t[0]][j] + sum(s * rows[i][j] for s, i in zip(signs, t[1:])) for j in range(len(rows[0]))]
            diags.append(wedge_sq_oracle([v] + rest))
    return sum(faces) / len(faces), sum(diags) / len(diags), len(faces), len(diags)


def rotation(n, steps=None):
    """Rational orthogonal matrix: Givens rotations by the 3-4-5 angle in adjacent planes."""
    c, s = Fraction(3, 5), Fraction(4, 5)
    q = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for p in range(n - 1):
        givens = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        givens[p][p] = givens[p + 1][p + 1] = c
        givens[p][p + 1], givens[p + 1][p] = -s, s
        q = [[sum(q[i][m] * givens[m][j] for m in range(n)) for j in range(n)] for i in range(n)]
    return q


def rotate(g, q):
    return [[sum(q[i][j] * x for j, x in enumerate(r)) for i in range(len(q))] for r in g.rows()]


def test_generators_validation():
    with pytest.raises(DegenerateGenerators):
        Generators.from_rows([[1, 0], [2, 0]])
    with pytest.raises(DegenerateGenerators):
        Generators.from_rows([[1, 0], [0, 1], [1, 1]])
    with pytest.raises(DegenerateGenerators):
        Generators.from_rows([[1.0, 0.0], [1.0, 1e-9]])
    with pytest.raises(ModeMismatch):
        Generators((Vector([1, 0]), Vector([0.0, 1.0])))
    g = Generators.from_rows([[1, 0, 0], [0, 2, 0]])
    assert (g.N, g.n, g.mode) == (2, 3, "exact")


def test_diagonal_vector_examples():
    axes = Generators.from_rows([[1, 0], [0, 1]])
    assert diagonal_vector(axes, DiagonalLabel((0, 1), (0, 1), ())) == Vector([1, 1])
    assert diagonal_vector(axes, DiagonalLabel((0, 1), (0,), (1,))) == Vector([1, -1])
    g = Generators.from_rows([[1, 2], [3, 5]])
    assert diagonal_vector(g, DiagonalLabel((0, 1), (0,), (1,))) == Vector([-2, -3])
    with pytest.raises(LabelOutOfRange):
        diagonal_vector(g, DiagonalLabel((0, 2), (0,), (2,)))


def test_face_measure_examples(unit_axes):
    axes = Generators.from_rows(unit_axes(2))
    assert face_measure_sq(axes, FaceLabel((0,), (1,))) == 1
    assert face_measure_sq(SQUARE, FaceLabel((0, 1), ())) == 1
    g = Generators.from_rows([[1, 2, 0], [3, 1, 1], [0, 1, 4]])
    assert face_measure_sq(g, FaceLabel((0, 2), (0,))) == face_measure_sq(g, FaceLabel((0, 2), (1,)))
    with pytest.raises(LabelOutOfRange):
        face_measure_sq(g, FaceLabel((0, 5), (0,)))


def test_diagonal_measure_examples(unit_axes):
    assert diagonal_measure_sq(SQUARE, DiagonalLabel((0, 1), (0, 1), ())) == 5
    assert diagonal_measure_sq(SQUARE, DiagonalLabel((0, 1), (0,), (1,))) == 1
    axes3 = Generators.from_rows(unit_axes(3))
    assert diagonal_measure_sq(axes3, DiagonalLabel((0, 1), (0,), (1,))) == 2


def test_mean_examples(unit_axes):
    assert face_mean_sq(SQUARE, 1) == Fraction(3, 2)
    assert diag_mean_sq(SQUARE, 1) == 3
    assert face_mean_sq(SQUARE.scaled(2), 1) == 6
    assert diag_mean_sq(Generators.from_rows(unit_axes(2)), 1) == 2
    assert diag_mean_sq(Generators.from_rows(unit_axes(3)), 2) == 2
    for N in range(2, 7):
        axes = Generators.from_rows(unit_axes(N, N + 1))
        for k in range(1, N):
            assert face_mean_sq(axes, k) == 1
            assert expansion_identity_gap(axes, k) == 0
    with pytest.raises(InvalidRange):
        face_mean_sq(SQUARE, 2)
    with pytest.raises(InvalidRange):
        diag_mean_sq(SQUARE, 0)


def test_expansion_gap_example():
    assert diag_sq_sum(SQUARE, 1) == 6
    assert 2 * 1 * subset_sq_sum(SQUARE, 1) == 6
    assert expansion_identity_gap(SQUARE, 1) == 0


@pytest.mark.parametrize("rows,k,expected", [
    ([[1, 0], [1, 1]], 1, 2),
    ([[1, 2, 0], [0, 1, 3], [2, 0, 1]], 2, 2),
    ([[1, 2, 0], [0, 1, 3], [2, 0, 1]], 1, 3),
    ([[1, 0, 2, 0, 1], [0, 3, 1, 1, 0], [2, 1, 0, 0, 1], [1, 1, 1, 2, 0], [0, 2, 0, 1, 3]], 3, 3),
])
def test_verify_examples(rows, k, expected):
    r = verify(Generators.from_rows(rows), k)
    assert r.ratio_sq == expected == r.expected
    assert r.residual == 0 and r.passed


def test_verify_all():
    assert len(verify_all(SQUARE)) == 1
    g = Generators.from_rows([[1, 0, 0, 1], [0, 2, 1, 0], [1, 1, 3, 0], [0, 0, 1, 1]])
    reports = verify_all(g)
    assert [r.k for r in reports] == [1, 2, 3]
    assert [r.expected for r in reports] == [4, 3, 2]
    assert all(r.ratio_sq == r.expected for r in reports)
    with pytest.raises(InvalidRange):
        verify(g, 4)


@given(generators_and_k(max_N=4))
def test_means_match_definitional_oracle(gk):
    g, k = gk
    face_oracle, diag_oracle, nf, nd = oracle_means(g.rows(), k)
    assert (nf, nd) == (count_faces(g.N, k), count_diagonals(g.N, k))
    assert face_mean_sq(g, k) == face_oracle
    assert diag_mean_sq(g, k) == diag_oracle


@given(generators_and_k())
def test_bulk_sums_match_per_label_route(gk):
    g, k = gk
    assert face_sq_sum(g, k) == sum(face_measure_sq(g, f) for f in face_labels(g.N, k))
    assert diag_sq_sum(g, k) == sum(diagonal_measure_sq(g, d) for d in diagonal_labels(g.N, k))
    assert face_mean_sq(g, k) == face_mean_sq(g, k, fast=True)


@given(generators_and_k(max_N=6))
def test_exact_identity_and_expansion(gk):
    g, k = gk
    assert diag_mean_sq(g, k) == (g.N - k + 1) * face_mean_sq(g, k)
    assert expansion_identity_gap(g, k) == 0
    r = verify(g, k)
    assert r.residual == 0
    assert (r.face_count, r.diagonal_count) == (count_faces(g.N, k), count_diagonals(g.N, k))


@given(generators_and_k(), st.data())
def test_permutation_invariance(gk, data):
    g, k = gk
    order = data.draw(st.permutations(range(g.N)))
    h = g.permuted(order)
    assert face_mean_sq(h, k) == face_mean_sq(g, k)
    assert diag_mean_sq(h, k) == diag_mean_sq(g, k)
    assert verify(h, k).ratio_sq == verify(g, k).ratio_sq


@given(generators_and_k(), small_rationals.filter(bool))
def test_scale_covariance(gk, lam):
    g, k = gk
    h = g.scaled(lam)
    assert face_mean_sq(h, k) == lam ** (2 * k) * face_mean_sq(g, k)
    assert diag_mean_sq(h, k) == lam ** (2 * k) * diag_mean_sq(g, k)
    assert verify(h, k).ratio_sq == verify(g, k).ratio_sq


@given(generators_and_k())
def test_rotation_invariance(gk):
    g, k = gk
    rot = rotate(g, rotation(g.n))
    exact = Generators.from_rows(rot)
    assert face_mean_sq(exact, k) == face_mean_sq(g, k)
    assert diag_mean_sq(exact, k) == diag_mean_sq(g, k)
    floats = Generators.from_rows(rot, "float")
    r = verify(floats, k)
    assert abs(r.ratio_sq - verify(g.to_mode("float"), k).ratio_sq) <= 1e-9 * r.expected


@given(generators(max_N=6))
def test_codim_one_sides(g):
    lhs, rhs = codim_one_identity_sides(g)
    assert lhs == rhs
    assert lhs == diag_sq_sum(g, g.N - 1)


@given(generators(min_N=2, max_N=3))
def test_signed_sum_sides(g):
    lhs, rhs = signed_sum_identity_sides(g)
    assert lhs == rhs == diag_sq_sum(g, 1)


def test_report_fields():
    r = verify(SQUARE, 1)
    d = r.as_dict()
    assert d["face_mean_sq"] == "3/2" and d["ratio_sq"] == "2" and d["residual"] == "0"
    assert d["ratio"] == "1.4142135623730951"
    f = verify(SQUARE.to_mode("float"), 1)
    assert f.mode == "float" and f.passed and f.residual <= 1e-9 * 2


def test_float_failure_flagged():
    r = verify(SQUARE.to_mode("float"), 1, tol=-1.0)
    assert not r.passed
