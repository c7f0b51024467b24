from fractions import Fraction
from itertools import combinations

import pytest

from hecke_ribbon.qpoly import (
    QPoly,
    det_bareiss,
    q_binomial,
    q_factorial,
    q_factorial_quotient,
    q_int,
    q_multinomial,
)


def brute_q_binomial(n, k):
    """Independent oracle: sum q^(inversions) over 0/1 words with k ones,
    an inversion being a (1, 0) pair in that order."""
    total = QPoly()
    for ones in combinations(range(n), k):
        word = [1 if i in ones else 0 for i in range(n)]
        inv = sum(
            1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j]
        )
        total = total + QPoly.q(inv)
    return total


def test_arithmetic():
    p = QPoly.of((1, 2)) * QPoly.of((0, 1)) + 3
    assert p.coeffs == (3, 1, 2)
    assert (p - p).coeffs == ()
    assert str(QPoly.of((1, 0, -2))) == "1 - 2*q^2"
    assert QPoly.of((0, 1))(5) == 5


def test_exact_division():
    a = QPoly.of((1, 1)) * QPoly.of((2, 0, 3))
    assert a.exact_div(QPoly.of((1, 1))) == QPoly.of((2, 0, 3))
    with pytest.raises(ArithmeticError):
        QPoly.of((1, 1, 1)).exact_div(QPoly.of((1, 2)))


def test_q_basics():
    assert q_int(3).coeffs == (1, 1, 1)
    assert q_factorial(3) == q_int(1) * q_int(2) * q_int(3)
    assert q_factorial_quotient(5, 2) == q_int(3) * q_int(4) * q_int(5)
    assert q_factorial_quotient(3, -1) == QPoly()


def test_q_binomial_against_word_oracle():
    for n in range(7):
        for k in range(n + 1):
            assert q_binomial(n, k) == brute_q_binomial(n, k), (n, k)


def test_q_multinomial():
    assert q_multinomial(4, (4,)) == QPoly.of(1)
    assert q_multinomial(3, (1, 1, 1)) == q_factorial(3)
    # specializing q to 1 recovers the plain multinomial coefficient
    assert q_multinomial(8, (3, 4, 1))(1) == 280


def test_bareiss_determinant_matches_fraction_elimination():
    import random

    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(1, 4)
        rows = [
            [QPoly.of(tuple(rng.randint(-2, 2) for _ in range(2))) for _ in range(n)]
            for _ in range(n)
        ]
        got = det_bareiss(rows)
        # oracle: evaluate at several integers and compare with Fraction
        # Gaussian elimination of the numeric matrices
        for x in (0, 1, 2, 3, 5):
            numeric = [[Fraction(e(x)) for e in row] for row in rows]
            assert got(x) == _det_fraction(numeric)


def _det_fraction(m):
    n = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] * inv
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    assert det.denominator == 1
    return det.numerator if det.denominator == 1 else det
