"""The type A polynomial model: Demazure operators on exact polynomials.

The isobaric divided difference pi_i sends f to
(x_i f - x_{i+1} s_i(f)) / (x_i - x_{i+1}); the numerator is always
divisible and the division is performed synthetically along the
x_i-degree, aborting on any nonzero remainder.  The bar operator is
pi_i - 1.  Collecting the images of the staircase-like monomial of a
composition under all bar operators rebuilds the row-separated tableau
module and, started from a suitable bar word, the ribbon module; both
identifications are certified matrix-by-matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import groups, modules
from .shapes import (
    Parts,
    Shape,
    composition,
    descent_band,
    parts_descents,
    split_rows,
)

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class Poly:
    """A sparse multivariate polynomial with integer coefficients; terms
    map exponent vectors of a fixed length to coefficients."""

    n: int
    terms: tuple[tuple[Monomial, int], ...]

    @staticmethod
    def from_dict(n: int, d: dict[Monomial, int]) -> "Poly":
        return Poly(n, tuple(sorted((m, c) for m, c in d.items() if c)))

    @staticmethod
    def monomial(n: int, expo: Monomial, coeff: int = 1) -> "Poly":
        return Poly.from_dict(n, {tuple(expo): coeff})

    @staticmethod
    def one(n: int) -> "Poly":
        return Poly.monomial(n, (0,) * n)

    def to_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "Poly") -> "Poly":
        out = self.to_dict()
        for m, c in other.terms:
            out[m] = out.get(m, 0) + c
        return Poly.from_dict(self.n, out)

    def __neg__(self) -> "Poly":
        return Poly(self.n, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(self.n, tuple((m, c * other) for m, c in self.terms)) if other else Poly(self.n, ())
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                key = tuple(a + b for a, b in zip(m1, m2))
                out[key] = out.get(key, 0) + c1 * c2
        return Poly.from_dict(self.n, out)

    __rmul__ = __mul__

    def times_variable(self, i: int, power: int = 1) -> "Poly":
        """Multiply by x_i (1-indexed)."""
        return Poly(
            self.n,
            tuple(
                (m[: i - 1] + (m[i - 1] + power,) + m[i:], c) for m, c in self.terms
            ),
        )

    def swap_variables(self, i: int) -> "Poly":
        """Exchange x_i and x_{i+1} (1-indexed)."""
        out = []
        for m, c in self.terms:
            mm = list(m)
            mm[i - 1], mm[i] = mm[i], mm[i - 1]
            out.append((tuple(mm), c))
        return Poly(self.n, tuple(sorted(out)))

    def permute(self, w: groups.GroupElement) -> "Poly":
        """The variable substitution x_i -> x_{w(i)}."""
        out = []
        for m, c in self.terms:
            mm = [0] * self.n
            for i, e in enumerate(m):
                mm[w.window[i] - 1] = e
            out.append((tuple(mm), c))
        return Poly(self.n, tuple(sorted(out)))

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    bits = []
    for m, c in sorted(f.terms, reverse=True):
        factors = [
            f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e
        ]
        body = "*".join(factors) if factors else "1"
        if c == 1 and factors:
            bits.append(body)
        elif c == -1 and factors:
            bits.append(f"-{body}")
        else:
            bits.append(f"{c}*{body}" if factors else str(c))
    text = " + ".join(bits)
    return text.replace("+ -", "- ")


def parse_poly(text: str, n: int) -> Poly:
    """Parse "x1^2*x2 - 2*x3" style polynomial text."""
    text = text.replace("-", "+-").replace(" ", "")
    out: dict[Monomial, int] = {}
    for chunk in text.split("+"):
        if not chunk:
            continue
        coeff = 1
        if chunk.startswith("-"):
            coeff = -1
            chunk = chunk[1:]
        expo = [0] * n
        for factor in chunk.split("*"):
            if not factor:
                continue
            if factor.startswith("x"):
                var, _, power = factor[1:].partition("^")
                expo[int(var) - 1] += int(power) if power else 1
            else:
                coeff *= int(factor)
        key = tuple(expo)
        out[key] = out.get(key, 0) + coeff
    return Poly.from_dict(n, out)


# ---------------------------------------------------------------------------
# operators


def _divide_by_difference(f: Poly, i: int) -> Poly:
    """Exact division by x_i - x_{i+1}, synthetically along the x_i-degree."""
    by_degree: dict[int, dict[Monomial, int]] = {}
    for m, c in f.terms:
        d = m[i - 1]
        key = m[: i - 1] + (0,) + m[i:]
        level = by_degree.setdefault(d, {})
        level[key] = level.get(key, 0) + c
    if not by_degree:
        return Poly(f.n, ())
    top = max(by_degree)
    quotient: dict[Monomial, int] = {}
    carry: dict[Monomial, int] = {}
    for d in range(top, 0, -1):
        level = dict(by_degree.get(d, {}))
        for m, c in carry.items():
            level[m] = level.get(m, 0) + c
        carry = {}
        for m, c in level.items():
            if not c:
                continue
            out_key = m[: i - 1] + (d - 1,) + m[i:]
            quotient[out_key] = quotient.get(out_key, 0) + c
            shifted = m[:i] + (m[i] + 1,) + m[i + 1 :]
            carry[shifted] = carry.get(shifted, 0) + c
    remainder = dict(by_degree.get(0, {}))
    for m, c in carry.items():
        remainder[m] = remainder.get(m, 0) + c
    if any(remainder.values()):
        raise ArithmeticError("inexact division by the variable difference")
    return Poly.from_dict(f.n, quotient)


def demazure(i: int, f: Poly) -> Poly:
    """pi_i(f) = (x_i f - x_{i+1} s_i(f)) / (x_i - x_{i+1})."""
    if not 1 <= i <= f.n - 1:
        raise ValueError(f"operator index {i} out of range for {f.n} variables")
    numerator = f.times_variable(i) - f.swap_variables(i).times_variable(i + 1)
    return _divide_by_difference(numerator, i)


def demazure_bar(i: int, f: Poly) -> Poly:
    return demazure(i, f) - f


def apply_bar_word(word, f: Poly) -> Poly:
    """Apply the bar operators right to left: word (i1, ..., ik) acts as
    the operator of s_{i1} ... s_{ik}."""
    for i in reversed(tuple(word)):
        f = demazure_bar(i, f)
    return f


def x_alpha(alpha: Shape | Parts) -> Poly:
    """The product over descents d of x_1 ... x_d, in |alpha| variables."""
    parts = alpha.parts if isinstance(alpha, Shape) else tuple(alpha)
    n = sum(parts)
    expo = [0] * n
    for d in parts_descents(parts):
        for i in range(d):
            expo[i] += 1
    return Poly.monomial(n, tuple(expo))


# ---------------------------------------------------------------------------
# triangularity


def sorted_exponents(m: Monomial) -> tuple[int, ...]:
    return tuple(sorted((e for e in m if e), reverse=True))


def strictly_smaller(m: Monomial, reference: Monomial) -> bool:
    """The partial order: compare sorted nonzero exponents lexicographically."""
    return sorted_exponents(m) < sorted_exponents(reference)


@lru_cache(maxsize=None)
def _bar_images(alpha: Parts) -> dict[tuple[int, ...], Poly]:
    """pi-bar_w applied to x_alpha for every w with D(w) <= D(alpha),
    computed along the weak order."""
    n = sum(alpha)
    base = x_alpha(alpha)
    reps = groups.min_coset_reps("A", composition(alpha))
    by_length: dict[int, list[groups.GroupElement]] = {}
    for w in reps:
        by_length.setdefault(groups.length(w), []).append(w)
    images: dict[tuple[int, ...], Poly] = {}
    gens = groups.generators("A", n)
    for ell in sorted(by_length):
        for w in by_length[ell]:
            if ell == 0:
                images[w.window] = base
                continue
            i = min(groups.descents(groups.inverse(w)))
            prev = groups.multiply(gens[i], w)
            images[w.window] = demazure_bar(i, images[prev.window])
    return images


def triangularity_check(alpha: Shape | Parts) -> list[str]:
    """Certify that each bar image of x_alpha is the permuted monomial
    plus strictly smaller terms in the sorted-exponent order."""
    parts = alpha.parts if isinstance(alpha, Shape) else tuple(alpha)
    base = x_alpha(parts)
    reference = base.terms[0][0]
    violations = []
    for window, poly in _bar_images(parts).items():
        w = groups.GroupElement("A", window)
        lead = base.permute(w).terms[0][0]
        seen_lead = False
        for m, c in poly.terms:
            if m == lead:
                seen_lead = c == 1
            elif not strictly_smaller(m, reference):
                violations.append(f"w={','.join(map(str, window))}: stray monomial {m}")
        if not seen_lead:
            violations.append(f"w={','.join(map(str, window))}: missing unit leading term")
    return violations


# ---------------------------------------------------------------------------
# certified polynomial modules


def _express_in_basis(poly: Poly, leads: dict[Monomial, int], basis: list[Poly]):
    """Write poly over the triangular basis by peeling leading monomials
    (the ones whose sorted exponents match the reference block)."""
    coeffs: dict[int, int] = {}
    current = poly
    while True:
        hits = [(m, c) for m, c in current.terms if m in leads]
        if not hits:
            break
        for m, c in hits:
            j = leads[m]
            coeffs[j] = coeffs.get(j, 0) + c
            current = current - c * basis[j]
    if current:
        raise modules.CertificationError("polynomial does not lie in the module span")
    return coeffs


def build_polynomial_module(shape: Shape, model: str | None = None):
    """Rebuild a tableau module inside the polynomial ring.

    With model "M" (the default for a single ribbon alpha) the cyclic
    module generated by x_alpha has the bar images over
    {w : D(w) <= D(alpha)} as a basis and is certified to match the
    row-separated module of alpha.  With model "P" (the default for a
    generalized ribbon) the submodule generated from the bar word of the
    band minimum is certified against the ribbon module of the shape.
    Returns (module, certified_against) and raises on failure.
    """
    if shape.kind != "A":
        raise ValueError("the polynomial model is type A only")
    if model is None:
        model = "M" if shape.is_single else "P"
    gamma = __dot_parts(shape)
    if model == "M":
        if not shape.is_single:
            raise ValueError("the row-separated model needs a single ribbon")
        lower: frozenset[int] = frozenset()
        target = modules.build_m(composition(gamma))
        label = split_rows(composition(gamma))
    elif model == "P":
        lower, _ = descent_band(shape)
        target = modules.build_p(shape)
        label = shape
    else:
        raise ValueError(f"unknown model {model!r}")
    n = sum(gamma)
    all_images = _bar_images(gamma)
    words = [
        w
        for w in groups.min_coset_reps("A", composition(gamma))
        if lower <= groups.descents(w)
    ]
    words.sort(key=lambda w: w.window)
    basis = [all_images[w.window] for w in words]
    base = x_alpha(gamma)
    leads: dict[Monomial, int] = {}
    for j, w in enumerate(words):
        lead = base.permute(w).terms[0][0]
        if lead in leads:
            raise modules.CertificationError("leading monomials collide")
        leads[lead] = j
    index_of = {w.window: j for j, w in enumerate(words)}
    gens = {}
    for i in range(1, n):
        cols = []
        for j, poly in enumerate(basis):
            coeffs = _express_in_basis(demazure_bar(i, poly), leads, basis)
            cols.append(tuple(sorted(coeffs.items())))
        gens[i] = tuple(cols)
    built = modules.HeckeModule("A", n, tuple(words), gens, None)
    # certify equality with the tableau module under the reading-word map
    target_index = {t.entries: j for j, t in enumerate(target.basis)}
    if len(target_index) != len(words):
        raise modules.CertificationError("polynomial and tableau bases differ in size")
    relabel = {}
    for j, w in enumerate(words):
        if w.window not in target_index:
            raise modules.CertificationError(f"word {w.window} is not a tableau word")
        relabel[j] = target_index[w.window]
    for i in range(1, n):
        for j in range(len(words)):
            mapped = tuple(sorted((relabel[r], v) for r, v in gens[i][j]))
            if mapped != target.gens[i][relabel[j]]:
                raise modules.CertificationError(
                    f"polynomial action differs at generator {i}, basis {j}"
                )
    return built, label


def __dot_parts(shape: Shape) -> Parts:
    parts: Parts = ()
    for comp in shape.components:
        parts = parts + comp
    return parts
