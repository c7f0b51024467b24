"""Symmetric groups and signed permutation groups of types A, B, D.

Elements are stored in one-line (window) notation w(1), ..., w(n).  In
type B the window is any signing of a permutation of 1..n; in type D the
number of negative entries is even.  Descents are computed from the
window exactly as displayed in the definitions: position i is a descent
when w(i) > w(i+1), with the boundary value w(0) = 0 in type B and
w(0) = -w(2) in type D.  Lengths are inv, inv+neg+nsp, and inv+nsp for
types A, B, D respectively.

Enumeration is by direct product (permutation times sign vector) under a
configurable resource guard; descent classes and their length extremes
are found by scanning.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

from .shapes import Shape, descent_set, parts_from_descents, positions

DEFAULT_GROUP_LIMIT = 50_000
DEFAULT_TABLEAU_LIMIT = 100_000

_limit_override: dict[str, int | None] = {"group": None, "tableau": None}


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed the configured resource guard."""


def _env_limit() -> int | None:
    raw = os.environ.get("HECKE_RIBBON_MAX_ENUM")
    return int(raw) if raw else None


def group_limit() -> int:
    return _limit_override["group"] or _env_limit() or DEFAULT_GROUP_LIMIT


def tableau_limit() -> int:
    return _limit_override["tableau"] or _env_limit() or DEFAULT_TABLEAU_LIMIT


def set_limits(group: int | None = None, tableau: int | None = None) -> None:
    _limit_override["group"] = group
    _limit_override["tableau"] = tableau


def guard(count: int, what: str, limit: int) -> None:
    if count > limit:
        raise ResourceLimitError(f"{what} count {count} exceeds the guard {limit}")


@dataclass(frozen=True)
class GroupElement:
    """A permutation or signed permutation in one-line notation."""

    kind: str
    window: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, j: int) -> int:
        """Image of a signed index, with w(-j) = -w(j)."""
        if j > 0:
            return self.window[j - 1]
        if j < 0:
            return -self.window[-j - 1]
        raise ValueError("signed indices are nonzero")

    def __str__(self) -> str:
        return ",".join(map(str, self.window))


def validate(w: GroupElement) -> GroupElement:
    n = w.n
    if sorted(abs(v) for v in w.window) != list(range(1, n + 1)):
        raise ValueError(f"not a window on 1..{n}: {w.window}")
    if w.kind == "A" and any(v < 0 for v in w.window):
        raise ValueError("type A windows are unsigned")
    if w.kind == "D":
        if n < 2:
            raise ValueError("type D needs n >= 2")
        if sum(1 for v in w.window if v < 0) % 2:
            raise ValueError("type D windows have an even number of signs")
    return w


def identity(kind: str, n: int) -> GroupElement:
    return GroupElement(kind, tuple(range(1, n + 1)))


def generator(kind: str, n: int, i: int) -> GroupElement:
    """The Coxeter generator s_i acting on windows of size n."""
    w = list(range(1, n + 1))
    if i == 0:
        if kind == "B":
            w[0] = -1
        elif kind == "D":
            w[0], w[1] = -2, -1
        else:
            raise ValueError("type A generators are s_1 .. s_{n-1}")
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return GroupElement(kind, tuple(w))


def generators(kind: str, n: int) -> dict[int, GroupElement]:
    return {i: generator(kind, n, i) for i in positions(kind, n)}


def multiply(u: GroupElement, v: GroupElement) -> GroupElement:
    """Composition of maps, (u v)(i) = u(v(i))."""
    if u.kind != v.kind or u.n != v.n:
        raise ValueError("mismatched kinds or sizes")
    return GroupElement(u.kind, tuple(u(v(i)) for i in range(1, u.n + 1)))


def inverse(w: GroupElement) -> GroupElement:
    out = [0] * w.n
    for pos, v in enumerate(w.window, start=1):
        if v > 0:
            out[v - 1] = pos
        else:
            out[-v - 1] = -pos
    return GroupElement(w.kind, tuple(out))


def descents(w: GroupElement) -> frozenset[int]:
    win = w.window
    out = {i for i in range(1, w.n) if win[i - 1] > win[i]}
    if w.kind == "B" and w.n and win[0] < 0:
        out.add(0)
    if w.kind == "D" and -win[1] > win[0]:
        out.add(0)
    return frozenset(out)


def inv_count(w: GroupElement) -> int:
    win = w.window
    return sum(1 for i in range(w.n) for j in range(i + 1, w.n) if win[i] > win[j])


def neg_count(w: GroupElement) -> int:
    return sum(1 for v in w.window if v < 0)


def nsp_count(w: GroupElement) -> int:
    win = w.window
    return sum(1 for i in range(w.n) for j in range(i + 1, w.n) if win[i] + win[j] < 0)


def length_stats(w: GroupElement) -> tuple[int, int, int, int]:
    """(inv, neg, nsp, length) with length assembled per kind."""
    inv = inv_count(w)
    if w.kind == "A":
        return inv, 0, 0, inv
    neg, nsp = neg_count(w), nsp_count(w)
    if w.kind == "B":
        return inv, neg, nsp, inv + neg + nsp
    return inv, neg, nsp, inv + nsp


def length(w: GroupElement) -> int:
    return length_stats(w)[3]


def group_order(kind: str, n: int) -> int:
    if kind == "A":
        return factorial(n)
    if kind == "B":
        return 2**n * factorial(n)
    return 2 ** (n - 1) * factorial(n)


@lru_cache(maxsize=None)
def _enumerate(kind: str, n: int) -> tuple[GroupElement, ...]:
    out = []
    if kind == "A":
        for p in permutations(range(1, n + 1)):
            out.append(GroupElement("A", p))
        return tuple(out)
    for p in permutations(range(1, n + 1)):
        for k in range(n + 1):
            if kind == "D" and k % 2:
                continue
            for signs in combinations(range(n), k):
                w = list(p)
                for i in signs:
                    w[i] = -w[i]
                out.append(GroupElement(kind, tuple(w)))
    out.sort(key=lambda g: g.window)
    return tuple(out)


def enumerate_group(kind: str, n: int) -> tuple[GroupElement, ...]:
    """Every element exactly once, sorted by window; rank 0 is the
    trivial group in types A and B."""
    if kind == "D" and n < 2:
        raise ValueError("type D needs n >= 2")
    if n < 0:
        raise ValueError(f"invalid rank {n}")
    guard(group_order(kind, n), f"group {kind}_{n}", group_limit())
    return _enumerate(kind, n)


@lru_cache(maxsize=None)
def _descent_buckets(kind: str, n: int):
    buckets: dict[frozenset[int], list[GroupElement]] = {}
    for w in _enumerate(kind, n):
        buckets.setdefault(descents(w), []).append(w)
    return {d: tuple(ws) for d, ws in buckets.items()}


def descent_buckets(kind: str, n: int) -> dict[frozenset[int], tuple[GroupElement, ...]]:
    enumerate_group(kind, n)
    return _descent_buckets(kind, n)


@dataclass(frozen=True)
class DescentClass:
    """All group elements with a prescribed descent set, with the unique
    length-minimal and length-maximal elements."""

    kind: str
    shape: Shape
    elements: tuple[GroupElement, ...]
    minimum: GroupElement
    maximum: GroupElement


def descent_class(kind: str, shape: Shape) -> DescentClass:
    if shape.kind != kind:
        raise ValueError(f"shape kind {shape.kind} does not match {kind}")
    buckets = descent_buckets(kind, shape.size)
    elements = buckets.get(descent_set(shape), ())
    if not elements:
        raise ValueError(f"empty descent class for {shape}")
    by_len = sorted(elements, key=length)
    w0, w1 = by_len[0], by_len[-1]
    if len(by_len) > 1:
        if length(by_len[1]) == length(w0) or length(by_len[-2]) == length(w1):
            raise AssertionError(f"length extremes of {shape} are not unique")
    return DescentClass(kind, shape, elements, w0, w1)


def min_coset_reps(kind: str, shape: Shape) -> tuple[GroupElement, ...]:
    """All w with D(w) contained in D(shape), sorted by window."""
    target = descent_set(shape)
    buckets = descent_buckets(kind, shape.size)
    out = [w for d, ws in buckets.items() if d <= target for w in ws]
    out.sort(key=lambda g: g.window)
    return tuple(out)


def band_elements(kind: str, n: int, lower: frozenset[int], upper: frozenset[int]):
    """All w with lower <= D(w) <= upper, sorted by window."""
    buckets = descent_buckets(kind, n)
    out = [w for d, ws in buckets.items() if lower <= d <= upper for w in ws]
    out.sort(key=lambda g: g.window)
    return tuple(out)


def parabolic_longest_A(n: int, dset) -> GroupElement:
    """Longest element of the type A parabolic generated by a descent set,
    i.e. the minimum of the descent class: reverse each run of descents."""
    window = list(range(1, n + 1))
    run: list[int] = []
    for i in sorted(dset) + [None]:
        if run and (i is None or i != run[-1] + 1):
            a, b = run[0], run[-1] + 1
            window[a - 1 : b] = window[a - 1 : b][::-1]
            run = []
        if i is not None:
            run.append(i)
    return GroupElement("A", tuple(window))


def class_minimum(kind: str, n: int, dset) -> GroupElement:
    """The length-minimal element with the given descent set."""
    if kind == "A":
        return parabolic_longest_A(n, dset)
    shape = Shape(kind, (parts_from_descents(frozenset(dset), n, kind),))
    return descent_class(kind, shape).minimum


@lru_cache(maxsize=None)
def longest_element(kind: str, n: int) -> GroupElement:
    return max(enumerate_group(kind, n), key=length)


@lru_cache(maxsize=None)
def diagram_automorphism(kind: str, n: int) -> dict[int, int]:
    """The index map i -> j with w0 s_i w0 = s_j."""
    w0 = longest_element(kind, n)
    gens = generators(kind, n)
    table = {}
    for i, s in gens.items():
        conj = multiply(multiply(w0, s), inverse(w0))
        matches = [j for j, t in gens.items() if t == conj]
        if len(matches) != 1:
            raise AssertionError(f"conjugation by w0 does not permute generators ({kind}, {n})")
        table[i] = matches[0]
    return table


def reduced_word(w: GroupElement) -> tuple[int, ...]:
    """A reduced word i_1, ..., i_k with w = s_{i_1} ... s_{i_k}."""
    word = []
    cur = w
    gens = generators(w.kind, w.n)
    while True:
        left = descents(inverse(cur))
        if not left:
            break
        i = min(left)
        word.append(i)
        cur = multiply(gens[i], cur)
    if cur != identity(w.kind, w.n):
        raise AssertionError("descent peeling failed to reach the identity")
    return tuple(word)
