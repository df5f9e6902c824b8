from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# Lines collected by test_acceptance.py, echoed in the terminal summary.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def perm_sign(p):
    sign, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(m):
    """Determinant by full permutation expansion; independent of any elimination."""
    n = len(m)
    total = Fraction(0)
    for p in permutations(range(n)):
        term = Fraction(perm_sign(p))
        for i in range(n):
            term *= m[i][p[i]]
        total += term
    return total


def gram_oracle(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    return [[sum(a * b for a, b in zip(u, v)) for v in rows] for u in rows]


def wedge_sq_oracle(rows):
    return leibniz_det(gram_oracle(rows))


small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def rational_rows(draw, m=None, n=None, max_m=4, max_n=5):
    n = draw(st.integers(1, max_n)) if n is None else n
    m = draw(st.integers(1, min(max_m, n))) if m is None else m
    return [draw(st.lists(small_rationals, min_size=n, max_size=n)) for _ in range(m)]


@pytest.fixture
def unit_axes():
    def make(N, n=None):
        n = n or N
        return [[1 if i == j else 0 for j in range(n)] for i in range(N)]
    return make
