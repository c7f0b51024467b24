"""Quasisymmetric and noncommutative symmetric functions with B/D analogues.

Elements are sparse sums of basis labels (M/F on the quasisymmetric
side, h/s on the noncommutative side) indexed by compositions, or by
pseudo-compositions in types B and D, with coefficients in Z[q].

The products implemented are the shifted-shuffle product of fundamentals
(type A quasisymmetric side), the two-term gluing rule of ribbon
functions on the noncommutative side (including the right action of the
type A space on the B and D spaces), and the concatenation rule in the h
bases.  Coproducts: reading-order cuts for F, deconcatenations for M,
the multiplicative rule for h, and monotone box splittings for s; in
types B and D these are one-sided comodule maps whose right factor is
the type A space.  Everything else (duality pairing, antipode, skew
elements, characteristics, q-ribbon numbers, truncated realizations as
honest power series) is built on top of these.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from . import groups, linalg, modules, tableaux
from .qpoly import ONE, QPoly, det_bareiss, q_factorial, q_factorial_quotient, q_multinomial
from .shapes import (
    Parts,
    Shape,
    ShapeError,
    bracket_set,
    composition,
    decompositions,
    descent_band,
    glue_parts,
    parts_descents,
    parts_from_descents,
    positions,
    ribbon_shape,
    split_rows,
    transpose,
)

SPACE_KIND = {
    "QSym": "A",
    "NSym": "A",
    "QSymB": "B",
    "NSymB": "B",
    "QSymD": "D",
    "NSymD": "D",
}
QSYM_SIDE = ("QSym", "QSymB", "QSymD")
NSYM_SIDE = ("NSym", "NSymB", "NSymD")
BASES = {"M": QSYM_SIDE, "F": QSYM_SIDE, "h": NSYM_SIDE, "s": NSYM_SIDE}


def _check_key(space: str, parts: Parts) -> Parts:
    kind = SPACE_KIND[space]
    ribbon_shape(parts, kind)  # validates
    if space in ("QSymD", "NSymD") and sum(parts) < 2:
        raise ShapeError(f"type D series live in degrees >= 2, got {parts}")
    return tuple(parts)


@dataclass
class SeriesElement:
    """A sparse Z[q]-combination of basis labels in one graded space."""

    space: str
    basis: str
    terms: dict[Parts, QPoly] = field(default_factory=dict)

    def __post_init__(self):
        if self.space not in SPACE_KIND or self.space not in BASES.get(self.basis, ()):
            raise ValueError(f"no basis {self.basis!r} in space {self.space!r}")
        self.terms = {
            tuple(k): QPoly.of(v) for k, v in self.terms.items() if QPoly.of(v)
        }

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SeriesElement)
            and self.space == other.space
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __add__(self, other: "SeriesElement") -> "SeriesElement":
        if (self.space, self.basis) != (other.space, other.basis):
            raise ValueError("cannot add elements in different bases")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, QPoly()) + v
        return SeriesElement(self.space, self.basis, out)

    def __sub__(self, other: "SeriesElement") -> "SeriesElement":
        return self + other.scale(-1)

    def scale(self, c) -> "SeriesElement":
        c = QPoly.of(c)
        return SeriesElement(self.space, self.basis, {k: v * c for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def specialize_q(self, value: int) -> "SeriesElement":
        return SeriesElement(
            self.space, self.basis, {k: QPoly.of(v(value)) for k, v in self.terms.items()}
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms):
            c = self.terms[k]
            label = f"{self.basis}[{','.join(map(str, k))}]"
            text = str(c)
            bits.append(label if text == "1" else f"({text})*{label}")
        return " + ".join(bits)


def element(space: str, basis: str, parts, coeff=1) -> SeriesElement:
    parts = _check_key(space, tuple(parts))
    return SeriesElement(space, basis, {parts: QPoly.of(coeff)})


def unit(space: str, basis: str) -> SeriesElement:
    kind = SPACE_KIND[space]
    return element(space, basis, () if kind == "A" else (0,))


# ---------------------------------------------------------------------------
# basis conversions: triangular sums over the refinement order


@lru_cache(maxsize=None)
def _conversion(parts: Parts, kind: str, frm: str, to: str) -> tuple[tuple[Parts, int], ...]:
    n = sum(parts)
    dset = parts_descents(parts)
    out = []
    if (frm, to) in (("F", "M"), ("M", "F")):
        free = sorted(set(positions(kind, n)) - dset)
        for mask in range(1 << len(free)):
            extra = frozenset(free[i] for i in range(len(free)) if mask >> i & 1)
            sign = 1 if frm == "F" else (-1) ** len(extra)
            out.append((parts_from_descents(dset | extra, n, kind), sign))
    elif (frm, to) in (("h", "s"), ("s", "h")):
        sub = sorted(dset)
        for mask in range(1 << len(sub)):
            kept = frozenset(sub[i] for i in range(len(sub)) if mask >> i & 1)
            sign = 1 if frm == "h" else (-1) ** (len(sub) - len(kept))
            out.append((parts_from_descents(kept, n, kind), sign))
    else:
        raise ValueError(f"no conversion from {frm} to {to}")
    return tuple(out)


def convert(elem: SeriesElement, target: str) -> SeriesElement:
    """Exact triangular change of basis within one space."""
    if target == elem.basis:
        return SeriesElement(elem.space, elem.basis, dict(elem.terms))
    if BASES[target] is not BASES[elem.basis]:
        raise ValueError(f"no conversion from {elem.basis} to {target}")
    kind = SPACE_KIND[elem.space]
    out: dict[Parts, QPoly] = {}
    for parts, coeff in elem.terms.items():
        for other, sign in _conversion(parts, kind, elem.basis, target):
            out[other] = out.get(other, QPoly()) + coeff * sign
    return SeriesElement(elem.space, target, out)


# ---------------------------------------------------------------------------
# products


@lru_cache(maxsize=None)
def _shuffle_f(a: Parts, b: Parts) -> tuple[tuple[Parts, int], ...]:
    """F_a F_b as a sum of F's, by shuffling descent-class representatives."""
    m, n = sum(a), sum(b)
    u = groups.class_minimum("A", m, parts_descents(a)).window
    v = [x + m for x in groups.class_minimum("A", n, parts_descents(b)).window]
    acc: dict[Parts, int] = {}
    for spots in combinations(range(m + n), m):
        word = [0] * (m + n)
        ui = iter(u)
        vi = iter(v)
        spot_set = set(spots)
        for i in range(m + n):
            word[i] = next(ui) if i in spot_set else next(vi)
        w = groups.GroupElement("A", tuple(word))
        key = parts_from_descents(groups.descents(w), m + n, "A")
        acc[key] = acc.get(key, 0) + 1
    return tuple(sorted(acc.items()))


def qsym_product(f: SeriesElement, g: SeriesElement) -> SeriesElement:
    """The shifted-shuffle product of type A quasisymmetric functions."""
    if f.space != "QSym" or g.space != "QSym":
        raise ValueError("the internal product is available in the type A space only")
    ff, gg = convert(f, "F"), convert(g, "F")
    out: dict[Parts, QPoly] = {}
    for a, ca in ff.terms.items():
        for b, cb in gg.terms.items():
            for key, mult in _shuffle_f(a, b):
                out[key] = out.get(key, QPoly()) + ca * cb * mult
    return SeriesElement("QSym", "F", out)


def nsym_product(f: SeriesElement, g: SeriesElement) -> SeriesElement:
    """Two-term gluing rule in the s bases, concatenation in the h bases.

    Supported spaces: NSym x NSym, and the right NSym-action on NSymB
    and NSymD.
    """
    if g.space != "NSym" or f.space not in NSYM_SIDE:
        raise ValueError("products need an NSym right factor and an NSym-side left factor")
    basis = f.basis
    gg = convert(g, basis)
    out: dict[Parts, QPoly] = {}
    for a, ca in f.terms.items():
        for b, cb in gg.terms.items():
            c = ca * cb
            if not b:
                keys = [a]
            elif not a:
                keys = [b]
            elif basis == "h":
                keys = [a + b]
            else:
                keys = [glue_parts(a, b, "dot"), glue_parts(a, b, "triangle")]
            for key in keys:
                out[key] = out.get(key, QPoly()) + c
    return SeriesElement(f.space, basis, out)


# ---------------------------------------------------------------------------
# coproducts and comodule maps


def coproduct_spaces(space: str) -> tuple[str, str]:
    return (space, "QSym" if space in QSYM_SIDE else "NSym")


def schur_coproduct(shape: Shape) -> dict[tuple[Parts, Parts], QPoly]:
    """Coproduct of the ribbon function of a generalized type A shape,
    as a sum over monotone box splittings expanded over bracket sets."""
    out: dict[tuple[Parts, Parts], QPoly] = {}
    for dec in decompositions(shape):
        for left in bracket_set(dec.beta):
            for right in bracket_set(dec.gamma):
                key = (left.parts, right.parts)
                out[key] = out.get(key, QPoly()) + 1
    return out


def _cut_parts(parts: Parts, kind: str, i: int) -> tuple[Parts, Parts]:
    n = sum(parts)
    dset = parts_descents(parts)
    left = parts_from_descents({d for d in dset if d < i}, i, kind)
    right = parts_from_descents({d - i for d in dset if d > i}, n - i, "A")
    return left, right


def coproduct(elem: SeriesElement) -> tuple[tuple[Parts, Parts, QPoly], ...]:
    """Tensor expansion of the coproduct (or one-sided comodule map).

    Terms are (left label, right label, coefficient); the left factor
    lives in the element's own space and the right factor in the type A
    space with the same basis letter.
    """
    space, basis = elem.space, elem.basis
    kind = SPACE_KIND[space]
    acc: dict[tuple[Parts, Parts], QPoly] = {}

    def add(left: Parts, right: Parts, c: QPoly) -> None:
        acc[(left, right)] = acc.get((left, right), QPoly()) + c

    for parts, coeff in elem.terms.items():
        n = sum(parts)
        if basis == "F":
            start = 2 if kind == "D" else 0
            for i in range(start, n + 1):
                left, right = _cut_parts(parts, kind, i)
                add(left, right, coeff)
        elif basis == "M":
            ell = len(parts)
            if kind == "A":
                valid = range(ell + 1)
            elif kind == "B":
                valid = range(0 if parts[0] > 0 else 1, ell + 1)
            else:
                k = next(j for j in range(1, ell + 1) if sum(parts[:j]) >= 2)
                valid = range(k, ell + 1)
            for i in valid:
                left = parts[:i] if (kind == "A" or i > 0) else (0,)
                if kind != "A" and not left:
                    left = (0,)
                add(left, parts[i:], coeff)
        elif basis == "h":
            if space != "NSym":
                raise ValueError(f"no coproduct on the {space} side in basis h")
            for left, right, mult in _h_splits(parts):
                add(left, right, coeff * mult)
        elif basis == "s":
            if space != "NSym":
                raise ValueError(f"no coproduct on the {space} side in basis s")
            for (left, right), mult in schur_coproduct(composition(parts)).items():
                add(left, right, coeff * mult)
    return tuple((l, r, c) for (l, r), c in sorted(acc.items()) if c)


@lru_cache(maxsize=None)
def _h_splits(parts: Parts) -> tuple[tuple[Parts, Parts, int], ...]:
    splits: dict[tuple[Parts, Parts], int] = {((), ()): 1}
    for p in parts:
        nxt: dict[tuple[Parts, Parts], int] = {}
        for (left, right), mult in splits.items():
            for c in range(p + 1):
                key = (left + ((c,) if c else ()), right + ((p - c,) if p - c else ()))
                nxt[key] = nxt.get(key, 0) + mult
        splits = nxt
    return tuple((l, r, m) for (l, r), m in sorted(splits.items()))


# ---------------------------------------------------------------------------
# duality pairing, antipode, skew elements


def pairing(f: SeriesElement, g: SeriesElement) -> QPoly:
    """The bilinear pairing with <h_a, M_b> = delta, in matching types."""
    if f.space in NSYM_SIDE and g.space in QSYM_SIDE:
        nsym, qsym = f, g
    elif f.space in QSYM_SIDE and g.space in NSYM_SIDE:
        nsym, qsym = g, f
    else:
        raise ValueError("pairing needs one element on each side of the duality")
    if SPACE_KIND[nsym.space] != SPACE_KIND[qsym.space]:
        raise ValueError("pairing needs matching types")
    hh = convert(nsym, "h")
    mm = convert(qsym, "M")
    out = QPoly()
    for parts, c in hh.terms.items():
        other = mm.terms.get(parts)
        if other:
            out = out + c * other
    return out


def antipode(elem: SeriesElement) -> SeriesElement:
    """S(F_a) = (-1)^{|a|} F_{a^t} and S(s_a) = (-1)^{|a|} s_{a^t},
    extended to the M and h bases by conversion."""
    if SPACE_KIND[elem.space] != "A":
        raise ValueError("the antipode is available in the type A spaces only")
    basis = elem.basis
    work = convert(elem, "F" if elem.space == "QSym" else "s")
    out: dict[Parts, QPoly] = {}
    for parts, c in work.terms.items():
        key = transpose(composition(parts)).parts
        sign = (-1) ** sum(parts)
        out[key] = out.get(key, QPoly()) + c * sign
    return convert(SeriesElement(work.space, work.basis, out), basis)


def skew(a: SeriesElement, f: SeriesElement, side: str = "right") -> SeriesElement:
    """Skew a by the dual element f: a/f pairs f with the right tensor
    factor of the coproduct, f\\a with the left factor."""
    lspace, rspace = coproduct_spaces(a.space)
    out: dict[Parts, QPoly] = {}
    if side == "right":
        result_space = lspace
        for left, right, c in coproduct(a):
            val = pairing(f, element(rspace, a.basis, right))
            if val:
                out[left] = out.get(left, QPoly()) + c * val
    elif side == "left":
        result_space = rspace
        for left, right, c in coproduct(a):
            val = pairing(f, element(lspace, a.basis, left))
            if val:
                out[right] = out.get(right, QPoly()) + c * val
    else:
        raise ValueError(f"unknown side {side!r}")
    return SeriesElement(result_space, a.basis, out)


# ---------------------------------------------------------------------------
# characteristics


_QSYM_OF_KIND = {"A": "QSym", "B": "QSymB", "D": "QSymD"}
_NSYM_OF_KIND = {"A": "NSym", "B": "NSymB", "D": "NSymD"}


def quasisymmetric_characteristic(module, graded: bool = False) -> SeriesElement:
    """Sum of fundamentals over the one-dimensional composition factors of
    a tableau module; with ``graded``, weight each factor by q to the
    length above a cyclic generator."""
    space = _QSYM_OF_KIND[module.kind]
    out: dict[Parts, QPoly] = {}
    if not graded:
        for t in module.basis:
            key = parts_from_descents(tableaux.tableau_descents(t), module.n, module.kind)
            out[key] = out.get(key, QPoly()) + 1
        return SeriesElement(space, "F", out)
    lengths = [groups.length(tableaux.reading_word(t)) for t in module.basis]
    base = min(lengths)
    generator = lengths.index(base)
    modules.length_filtration(module, generator)  # certifies cyclicity and layers
    for t, ell in zip(module.basis, lengths):
        key = parts_from_descents(tableaux.tableau_descents(t), module.n, module.kind)
        out[key] = out.get(key, QPoly()) + QPoly.q(ell - base)
    return SeriesElement(space, "F", out)


def graded_characteristic_direct(shape: Shape) -> SeriesElement:
    """The graded characteristic computed straight from the descent band."""
    lower, upper = descent_band(shape)
    words = groups.band_elements(shape.kind, shape.size, lower, upper)
    base = min(groups.length(w) for w in words)
    out: dict[Parts, QPoly] = {}
    for w in words:
        key = parts_from_descents(groups.descents(groups.inverse(w)), shape.size, shape.kind)
        out[key] = out.get(key, QPoly()) + QPoly.q(groups.length(w) - base)
    return SeriesElement(_QSYM_OF_KIND[shape.kind], "F", out)


def noncommutative_characteristic(labels, kind: str) -> SeriesElement:
    """Sum of ribbon functions over a multiset of projective labels."""
    out: dict[Parts, QPoly] = {}
    for label in labels:
        parts = label.parts if isinstance(label, Shape) else tuple(label)
        out[parts] = out.get(parts, QPoly()) + 1
    return SeriesElement(_NSYM_OF_KIND[kind], "s", out)


# ---------------------------------------------------------------------------
# q-ribbon numbers and the exact identities


def q_ribbon(parts: Parts, method: str = "det") -> QPoly:
    """The inversion generating function of a type A descent class."""
    n = sum(parts)
    if method == "brute":
        dset = parts_descents(parts)
        out = QPoly()
        for w in groups.descent_buckets("A", n).get(dset, ()):
            out = out + QPoly.q(groups.inv_count(w))
        return out
    if method == "ie":
        dset = parts_descents(parts)
        out = QPoly()
        sub = sorted(dset)
        for mask in range(1 << len(sub)):
            kept = frozenset(sub[i] for i in range(len(sub)) if mask >> i & 1)
            beta = parts_from_descents(kept, n, "A")
            sign = (-1) ** (len(sub) - len(kept))
            out = out + sign * q_multinomial(n, beta)
        return out
    if method == "det":
        sigma = [0]
        for p in parts:
            sigma.append(sigma[-1] + p)
        ell = len(parts)
        rows = [
            [q_factorial_quotient(n, sigma[j + 1] - sigma[i]) for j in range(ell)]
            for i in range(ell)
        ]
        det = det_bareiss(rows)
        divisor = q_factorial(n) ** (ell - 1)
        return det.exact_div(divisor)
    raise ValueError(f"unknown method {method!r}")


def band_product_identity(shape: Shape):
    """Two exact routes to the q-weighted sum of fundamentals over the
    descent band of a generalized type A ribbon: directly, and through
    minimal coset representatives times block descent classes."""
    if shape.kind != "A":
        raise ShapeError("the band identity is stated for type A shapes")
    n = shape.size
    lower, upper = descent_band(shape)
    lhs: dict[Parts, QPoly] = {}
    for w in groups.band_elements("A", n, lower, upper):
        key = parts_from_descents(groups.descents(groups.inverse(w)), n, "A")
        lhs[key] = lhs.get(key, QPoly()) + QPoly.q(groups.inv_count(w))
    sizes = tuple(sum(c) for c in shape.components)
    reps = groups.min_coset_reps("A", composition(sizes))
    classes = [
        groups.descent_class("A", composition(comp)).elements for comp in shape.components
    ]
    rhs: dict[Parts, QPoly] = {}
    for combo in _tuples(classes):
        block = []
        offset = 0
        weight = 0
        for u in combo:
            block.extend(x + offset for x in u.window)
            offset += u.n
            weight += groups.inv_count(u)
        embedded = groups.GroupElement("A", tuple(block))
        for z in reps:
            w = groups.multiply(z, embedded)
            key = parts_from_descents(groups.descents(groups.inverse(w)), n, "A")
            rhs[key] = rhs.get(key, QPoly()) + QPoly.q(weight + groups.inv_count(z))
    return (
        SeriesElement("QSym", "F", lhs),
        SeriesElement("QSym", "F", rhs),
    )


def _tuples(pools):
    if not pools:
        yield ()
        return
    for head in pools[0]:
        for rest in _tuples(pools[1:]):
            yield (head,) + rest


def ribbon_sum_identity(beta: Parts, gamma: Parts) -> tuple[QPoly, QPoly]:
    """Interval sum of q-ribbon numbers against the product form.

    Requires D(beta) <= D(gamma).  The left side sums r_alpha(q) over the
    interval; the right side is the q-multinomial of the junction sizes
    times the q-ribbon numbers of the blocks of gamma between junctions.
    """
    n = sum(beta)
    db, dg = parts_descents(beta), parts_descents(gamma)
    if sum(gamma) != n or not db <= dg:
        raise ValueError("need compositions of one size with D(beta) <= D(gamma)")
    free = sorted(dg - db)
    lhs = QPoly()
    for mask in range(1 << len(free)):
        extra = frozenset(free[i] for i in range(len(free)) if mask >> i & 1)
        lhs = lhs + q_ribbon(parts_from_descents(db | extra, n, "A"), "ie")
    sizes = parts_from_descents(frozenset(free), n, "A")
    rhs = q_multinomial(n, sizes)
    cuts = [0] + free + [n]
    for a, b in zip(cuts, cuts[1:]):
        block = parts_from_descents(frozenset(d - a for d in dg if a < d < b), b - a, "A")
        rhs = rhs * q_ribbon(block, "ie")
    return lhs, rhs


# ---------------------------------------------------------------------------
# truncated realizations


@dataclass
class TruncatedNCSeries:
    """A finite noncommutative series: words over a window of variable
    indices with integer coefficients."""

    window: tuple[int, ...]
    terms: dict[tuple[int, ...], int]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedNCSeries)
            and self.window == other.window
            and {k: v for k, v in self.terms.items() if v}
            == {k: v for k, v in other.terms.items() if v}
        )

    def __add__(self, other: "TruncatedNCSeries") -> "TruncatedNCSeries":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TruncatedNCSeries(self.window, {k: v for k, v in out.items() if v})

    def __mul__(self, other: "TruncatedNCSeries") -> "TruncatedNCSeries":
        out: dict[tuple[int, ...], int] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                key = a + b
                out[key] = out.get(key, 0) + ca * cb
        return TruncatedNCSeries(self.window, {k: v for k, v in out.items() if v})


def _int_coeff(c: QPoly) -> int:
    if c.degree > 0:
        raise ValueError("truncated evaluation needs constant coefficients")
    return c.coeffs[0] if c.coeffs else 0


def evaluate_noncommutative(elem: SeriesElement, window) -> TruncatedNCSeries:
    """Evaluate an NSym-side element as a sum over semistandard tableaux
    with entries in the window."""
    if elem.space not in NSYM_SIDE:
        raise ValueError("noncommutative evaluation applies to the NSym side")
    window = tuple(sorted(set(window)))
    kind = SPACE_KIND[elem.space]
    out: dict[tuple[int, ...], int] = {}
    for parts, coeff in elem.terms.items():
        c = _int_coeff(coeff)
        shape = ribbon_shape(parts, kind)
        if elem.basis == "h":
            shape = split_rows(shape)
        for t in tableaux.semistandard_tableaux(shape, window):
            out[t.entries] = out.get(t.entries, 0) + c
    return TruncatedNCSeries(window, {k: v for k, v in out.items() if v})


def evaluate_commutative(elem: SeriesElement, window) -> dict[tuple[int, ...], int]:
    """Evaluate a QSym-side element from the index-sequence definitions;
    keys are exponent vectors over the sorted window."""
    if elem.space not in QSYM_SIDE:
        raise ValueError("commutative evaluation applies to the QSym side")
    window = tuple(sorted(set(window)))
    kind = SPACE_KIND[elem.space]
    if kind == "B" and any(v < 0 for v in window):
        raise ValueError("the type B variable window starts at 0")
    pos = {v: i for i, v in enumerate(window)}
    out: dict[tuple[int, ...], int] = {}
    for parts, coeff in elem.terms.items():
        c = _int_coeff(coeff)
        n = sum(parts)
        dset = parts_descents(parts)
        exact = elem.basis == "M"
        for word in combinations_with_replacement(window, n):
            if not _word_matches(word, dset, kind, exact):
                continue
            expo = [0] * len(window)
            for v in word:
                expo[pos[v]] += 1
            key = tuple(expo)
            out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def _word_matches(word, dset, kind: str, exact: bool) -> bool:
    n = len(word)
    if kind == "A":
        boundary = None
    elif kind == "B":
        boundary = 0
    else:
        if n < 2:
            return False
        boundary = -word[1]
    if boundary is not None:
        if boundary > word[0]:
            return False
        strict0 = boundary < word[0]
        if exact and strict0 != (0 in dset):
            return False
        if not exact and 0 in dset and not strict0:
            return False
    for j in range(1, n):
        strict = word[j - 1] < word[j]
        if exact and strict != (j in dset):
            return False
        if not exact and j in dset and not strict:
            return False
    return True


def truncation_independent(series_list) -> bool:
    """Exact rank test: are the truncated series linearly independent?"""
    words = sorted({w for s in series_list for w in s.terms})
    index = {w: i for i, w in enumerate(words)}
    rows = []
    for s in series_list:
        row = [Fraction(0)] * len(words)
        for w, c in s.terms.items():
            row[index[w]] = Fraction(c)
        rows.append(row)
    return linalg.rank(rows) == len(series_list)


# ---------------------------------------------------------------------------
# JSON


def series_to_json(elem: SeriesElement) -> dict:
    return {
        "space": elem.space,
        "basis": elem.basis,
        "terms": [
            {"shape": "[" + ",".join(map(str, k)) + "]", "coeff": list(v.coeffs)}
            for k, v in sorted(elem.terms.items())
        ],
    }


def series_from_json(data: dict) -> SeriesElement:
    terms = {}
    for item in data["terms"]:
        inner = item["shape"].strip()[1:-1]
        parts = tuple(int(x) for x in inner.split(",")) if inner else ()
        terms[parts] = QPoly.of(tuple(item["coeff"]))
    return SeriesElement(data["space"], data["basis"], terms)
