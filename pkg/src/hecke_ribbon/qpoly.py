"""Exact univariate polynomials in q and the standard q-analogs.

Coefficients are Python integers, so every computation here is exact.
The q-analogs provided are the q-integer [k], the q-factorial [k]!, and
q-binomial/multinomial coefficients, built by the Pascal recurrence so
that no division is ever needed.  A fraction-free (Bareiss) determinant
over Z[q] supports the determinant formula for q-ribbon numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class QPoly:
    """A polynomial in q with integer coefficients, ascending powers."""

    coeffs: tuple[int, ...] = ()

    @staticmethod
    def of(value) -> "QPoly":
        if isinstance(value, QPoly):
            return value
        if isinstance(value, int):
            return QPoly(_trim((value,)))
        return QPoly(_trim(value))

    @staticmethod
    def q(power: int = 1, coeff: int = 1) -> "QPoly":
        return QPoly(_trim((0,) * power + (coeff,)))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __add__(self, other) -> "QPoly":
        other = QPoly.of(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(_trim(out))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "QPoly":
        return self + (-QPoly.of(other))

    def __rsub__(self, other) -> "QPoly":
        return QPoly.of(other) - self

    def __mul__(self, other) -> "QPoly":
        other = QPoly.of(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPoly(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QPoly":
        result = QPoly.of(1)
        for _ in range(exponent):
            result = result * self
        return result

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Divide exactly, raising ArithmeticError on a nonzero remainder."""
        other = QPoly.of(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return QPoly()
        rem = list(self.coeffs)
        div = other.coeffs
        dd = len(div) - 1
        lead = div[-1]
        out = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            if c % lead:
                raise ArithmeticError("inexact polynomial division")
            f = c // lead
            out[k - dd] = f
            for i, dv in enumerate(div):
                rem[k - dd + i] -= f * dv
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return QPoly(_trim(out))

    def __call__(self, value: int) -> int:
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if power == 0:
                pieces.append(str(c))
            else:
                head = "" if c == 1 else "-" if c == -1 else f"{c}*"
                q = "q" if power == 1 else f"q^{power}"
                pieces.append(f"{head}{q}")
        text = " + ".join(pieces)
        return text.replace("+ -", "- ")


ZERO = QPoly()
ONE = QPoly((1,))


def q_int(k: int) -> QPoly:
    """[k] = 1 + q + ... + q^(k-1)."""
    return QPoly((1,) * k)


@lru_cache(maxsize=None)
def q_factorial(k: int) -> QPoly:
    if k <= 1:
        return ONE
    return q_factorial(k - 1) * q_int(k)


def q_factorial_quotient(n: int, m: int) -> QPoly:
    """[n]! / [m]! as the product [m+1][m+2]...[n]; zero when m < 0."""
    if m < 0:
        return ZERO
    result = ONE
    for j in range(m + 1, n + 1):
        result = result * q_int(j)
    return result


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k - 1) + QPoly.q(k) * q_binomial(n - 1, k)


def q_multinomial(n: int, parts: tuple[int, ...]) -> QPoly:
    """The q-multinomial coefficient of a composition of n."""
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    result = ONE
    rest = n
    for p in parts:
        result = result * q_binomial(rest, p)
        rest -= p
    return result


def det_bareiss(rows: list[list[QPoly]]) -> QPoly:
    """Fraction-free determinant of a square matrix over Z[q]."""
    n = len(rows)
    if n == 0:
        return ONE
    m = [[QPoly.of(entry) for entry in row] for row in rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = ZERO
        prev = m[k][k]
    return m[n - 1][n - 1] if sign == 1 else -m[n - 1][n - 1]
