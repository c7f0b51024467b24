"""Compositions, pseudo-compositions, and generalized ribbon shapes.

A composition (a sequence of positive integers) indexes type A objects
through its descent set of proper partial sums, which identifies the
compositions of n with the subsets of {1, ..., n-1}.  A
pseudo-composition, whose first part may be zero, plays the same role in
types B and D with descent sets inside {0, ..., n-1}; its diagram
carries an extra 0-box.  A generalized shape is a disjoint union of such
ribbons, each strictly northeast of the previous one.

Diagram conventions: rows are indexed bottom to top, columns left to
right, and the reading order of the boxes runs bottom row to top row,
left to right within each row.  The 0-box sits to the left of the bottom
row when the first part is positive, and below the leftmost column when
the first part is zero; it is never part of the reading order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian

Parts = tuple[int, ...]

KINDS = ("A", "B", "D")


class ShapeError(ValueError):
    """Raised for malformed shapes or invalid shape arguments."""


def _check_ribbon(parts: Parts) -> None:
    if not parts or any(p < 1 for p in parts):
        raise ShapeError(f"not a composition: {parts}")


def _check_pseudo(parts: Parts) -> None:
    if not parts or parts[0] < 0 or any(p < 1 for p in parts[1:]):
        raise ShapeError(f"not a pseudo-composition: {parts}")


@dataclass(frozen=True)
class Shape:
    """A (pseudo-)composition, or a disjoint union of them, with a type tag.

    ``components`` lists the connected ribbons from southwest to
    northeast.  In kinds B and D the first component is a
    pseudo-composition; the others are compositions.  The empty type A
    shape is ``Shape("A", ())`` and the empty type B shape is the bare
    0-box ``Shape("B", ((0,),))``.
    """

    kind: str
    components: tuple[Parts, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ShapeError(f"unknown kind {self.kind!r}")
        comps = self.components
        if self.kind == "A":
            for c in comps:
                _check_ribbon(c)
        else:
            if not comps:
                raise ShapeError("kinds B and D need a leading pseudo-composition")
            _check_pseudo(comps[0])
            for c in comps[1:]:
                _check_ribbon(c)
            if self.kind == "D" and self.size < 2:
                raise ShapeError("kind D shapes have size at least 2")

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self.components)

    @property
    def is_single(self) -> bool:
        return len(self.components) <= 1

    @property
    def parts(self) -> Parts:
        if len(self.components) == 1:
            return self.components[0]
        if self.kind == "A" and not self.components:
            return ()
        raise ShapeError(f"{self} is not a single ribbon")

    def __str__(self) -> str:
        return format_shape(self)


def composition(parts) -> Shape:
    parts = tuple(parts)
    return Shape("A", (parts,) if parts else ())


def pseudo_composition(parts, kind: str = "B") -> Shape:
    return Shape(kind, (tuple(parts) or (0,),))


def ribbon_shape(parts, kind: str = "A") -> Shape:
    return composition(parts) if kind == "A" else pseudo_composition(parts, kind)


def generalized(components, kind: str = "A") -> Shape:
    return Shape(kind, tuple(tuple(c) for c in components))


def positions(kind: str, n: int) -> range:
    """Generator index range: [1, n-1] in type A, [0, n-1] in types B, D."""
    return range(1, n) if kind == "A" else range(0, n)


# ---------------------------------------------------------------------------
# descent sets and the bijection with shapes


def parts_descents(parts: Parts) -> frozenset[int]:
    total, out = 0, []
    for p in parts[:-1]:
        total += p
        out.append(total)
    return frozenset(out)


def descent_set(shape: Shape) -> frozenset[int]:
    """Proper partial sums of a single (pseudo-)composition."""
    return parts_descents(shape.parts)


def parts_from_descents(dset, n: int, kind: str) -> Parts:
    dset = sorted(dset)
    lo = 1 if kind == "A" else 0
    for d in dset:
        if d < lo or d >= n:
            raise ShapeError(f"descent {d} out of range for size {n}, kind {kind}")
    if kind == "A":
        if not n:
            return ()
    elif n == 0:
        return (0,)
    # a type B/D descent at 0 shows up as a leading zero part
    cuts = [0] + dset + [n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def from_descents(dset, n: int, kind: str) -> Shape:
    """Inverse of descent_set for a fixed size; exact round-trip."""
    return ribbon_shape(parts_from_descents(dset, n, kind), kind)


def descent_key(shape: Shape):
    """Sort key: the descent indicator vector, coarsest shapes first."""
    n = shape.size
    d = descent_set(shape)
    return tuple(1 if i in d else 0 for i in positions(shape.kind, n))


def complement(shape: Shape) -> Shape:
    n = shape.size
    full = set(positions(shape.kind, n))
    return from_descents(full - descent_set(shape), n, shape.kind)


def reverse(shape: Shape) -> Shape:
    if shape.kind != "A":
        raise ShapeError("reverse is defined for type A compositions")
    return composition(shape.parts[::-1])


def transpose(shape: Shape) -> Shape:
    """reverse(complement), the diagonal reflection of the ribbon diagram."""
    return reverse(complement(shape))


def refined_by(a: Shape, b: Shape) -> bool:
    """True when b refines a, i.e. D(a) is contained in D(b)."""
    if a.kind != b.kind or a.size != b.size:
        return False
    return descent_set(a) <= descent_set(b)


def coarsenings(shape: Shape) -> tuple[Shape, ...]:
    """All shapes whose descent set is contained in D(shape)."""
    d = sorted(descent_set(shape))
    out = []
    for mask in range(1 << len(d)):
        sub = {d[i] for i in range(len(d)) if mask >> i & 1}
        out.append(from_descents(sub, shape.size, shape.kind))
    return tuple(sorted(out, key=descent_key))


def refinements(shape: Shape) -> tuple[Shape, ...]:
    """All shapes whose descent set contains D(shape)."""
    d = descent_set(shape)
    free = sorted(set(positions(shape.kind, shape.size)) - d)
    out = []
    for mask in range(1 << len(free)):
        extra = {free[i] for i in range(len(free)) if mask >> i & 1}
        out.append(from_descents(d | extra, shape.size, shape.kind))
    return tuple(sorted(out, key=descent_key))


def enumerate_shapes(n: int, kind: str) -> tuple[Shape, ...]:
    """All single-ribbon shapes of size n, smallest descent sets first."""
    pos = list(positions(kind, n))
    out = []
    for mask in range(1 << len(pos)):
        dset = {pos[i] for i in range(len(pos)) if mask >> i & 1}
        out.append(from_descents(dset, n, kind))
    return tuple(sorted(out, key=descent_key))


# ---------------------------------------------------------------------------
# gluing and bracket sets


def glue_parts(a: Parts, b: Parts, mode: str) -> Parts:
    if mode == "dot":
        return a + b
    if mode == "triangle":
        if not a:
            return b
        if not b:
            return a
        return a[:-1] + (a[-1] + b[0],) + b[1:]
    raise ShapeError(f"unknown glue mode {mode!r}")


def glue(a: Shape, b: Shape, mode: str) -> Shape:
    """Glue two shapes, joining the last component of a with the first of b."""
    if b.kind != "A":
        raise ShapeError("the right gluing factor must be a type A shape")
    if not b.components:
        return a
    if a.kind == "A" and not a.components:
        return b
    joined = glue_parts(a.components[-1], b.components[0], mode)
    return Shape(a.kind, a.components[:-1] + (joined,) + b.components[1:])


@lru_cache(maxsize=None)
def bracket_set(shape: Shape) -> tuple[Shape, ...]:
    """The 2^(k-1) single ribbons obtained by gluing the k components."""
    comps = shape.components
    if not comps:
        return (shape,)
    ribbons = [comps[0]]
    for comp in comps[1:]:
        ribbons = [glue_parts(r, comp, mode) for r in ribbons for mode in ("dot", "triangle")]
    out = tuple(sorted((ribbon_shape(r, shape.kind) for r in ribbons), key=descent_key))
    if len(set(out)) != len(out):
        raise ShapeError(f"bracket set of {shape} has a collision")
    return out


def triangle_glue(shape: Shape) -> Shape:
    """The single ribbon obtained by near-concatenating all components."""
    comps = shape.components
    if not comps:
        return shape
    parts = comps[0]
    for comp in comps[1:]:
        parts = glue_parts(parts, comp, "triangle")
    return ribbon_shape(parts, shape.kind)


def dot_glue(shape: Shape) -> Shape:
    comps = shape.components
    if not comps:
        return shape
    parts = comps[0]
    for comp in comps[1:]:
        parts = glue_parts(parts, comp, "dot")
    return ribbon_shape(parts, shape.kind)


def descent_band(shape: Shape) -> tuple[frozenset[int], frozenset[int]]:
    """Descent sets (D0, D1) of the triangle and dot gluings.

    Reading words of standard tableaux of the shape are exactly the group
    elements w with D0 <= D(w) <= D1.
    """
    return descent_set(triangle_glue(shape)), descent_set(dot_glue(shape))


def split_rows(shape: Shape) -> Shape:
    """The generalized shape whose components are the single rows of a ribbon."""
    parts = shape.parts
    if shape.kind == "A":
        return Shape("A", tuple((p,) for p in parts))
    return Shape(shape.kind, tuple((p,) for p in parts))


# ---------------------------------------------------------------------------
# diagrams


class Diagram:
    """Box coordinates of a shape, in reading order.

    Attributes: ``boxes`` (list of (row, col)), ``zero_box`` (coordinate
    or None), ``component_of`` (component index per box), neighbor index
    tables ``left_of``/``below`` (box index, None, or "zero" for
    left_of), and ``above_zero`` (index of the box sitting on top of the
    0-box, if any).
    """

    def __init__(self, shape: Shape):
        self.shape = shape
        boxes: list[tuple[int, int]] = []
        comp_of: list[int] = []
        zero_box = None
        row_off = col_off = 0
        for ci, parts in enumerate(shape.components):
            coords, zb = _ribbon_coords(parts, shape.kind if ci == 0 else "A")
            coords = [(r + row_off, c + col_off) for r, c in coords]
            if zb is not None:
                zero_box = (zb[0] + row_off, zb[1] + col_off)
            boxes.extend(coords)
            comp_of.extend([ci] * len(coords))
            cells = coords + ([zero_box] if zb is not None else [])
            if cells:
                row_off = max(r for r, _ in cells) + 1
                col_off = max(c for _, c in cells) + 1
        self.boxes = tuple(boxes)
        self.zero_box = zero_box
        self.component_of = tuple(comp_of)
        index = {coord: i for i, coord in enumerate(boxes)}
        self.index = index
        self.left_of = tuple(
            index.get((r, c - 1), "zero" if zero_box == (r, c - 1) else None)
            for r, c in boxes
        )
        self.below = tuple(index.get((r - 1, c)) for r, c in boxes)
        self.above_zero = None
        if zero_box is not None:
            self.above_zero = index.get((zero_box[0] + 1, zero_box[1]))

    @property
    def n(self) -> int:
        return len(self.boxes)

    def rows(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for i, (r, _) in enumerate(self.boxes):
            out.setdefault(r, []).append(i)
        return [out[r] for r in sorted(out)]

    def columns(self, include_zero: bool = False) -> list[list]:
        out: dict[int, list] = {}
        for i, (r, c) in enumerate(self.boxes):
            out.setdefault(c, []).append((r, i))
        if include_zero and self.zero_box is not None:
            out.setdefault(self.zero_box[1], []).append((self.zero_box[0], "zero"))
        return [[i for _, i in sorted(out[c])] for c in sorted(out)]


def _ribbon_coords(parts: Parts, kind: str):
    """Coordinates of one (pseudo-)ribbon, plus its 0-box coordinate."""
    if kind == "A":
        rows = parts
        zero = None
        first_row = 1
    else:
        if parts[0] == 0:
            rows = parts[1:]
            zero = (0, 1)
        else:
            rows = parts
            zero = (1, 0)
        first_row = 1
    coords = []
    col = 1
    for i, p in enumerate(rows):
        coords.extend((first_row + i, col + j) for j in range(p))
        col = col + p - 1
    return coords, zero


@lru_cache(maxsize=None)
def diagram(shape: Shape) -> Diagram:
    return Diagram(shape)


# ---------------------------------------------------------------------------
# monotone two-colorings (disjoint-union decompositions)


@dataclass(frozen=True)
class Decomposition:
    """A monotone splitting of a shape into an upper-left part beta and
    a lower-right part gamma, recorded box by box in reading order."""

    beta: Shape
    gamma: Shape
    assignment: tuple[str, ...]


def _extract_components(coords: list[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    remaining = set(coords)
    comps = []
    while remaining:
        seed = min(remaining)
        stack, comp = [seed], set()
        remaining.discard(seed)
        while stack:
            r, c = stack.pop()
            comp.add((r, c))
            for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if nb in remaining:
                    remaining.discard(nb)
                    stack.append(nb)
        comps.append(sorted(comp))
    comps.sort(key=lambda comp: comp[0][0])
    return comps


def _component_parts(comp: list[tuple[int, int]]) -> Parts:
    rows: dict[int, list[int]] = {}
    for r, c in comp:
        rows.setdefault(r, []).append(c)
    parts = []
    prev_end = None
    for r in sorted(rows):
        cols = sorted(rows[r])
        if cols != list(range(cols[0], cols[-1] + 1)):
            raise ShapeError("picked boxes do not form a ribbon row")
        if prev_end is not None and cols[0] != prev_end:
            raise ShapeError("picked boxes do not overlap like a ribbon")
        parts.append(len(cols))
        prev_end = cols[-1]
    return tuple(parts)


def subshape_of_boxes(shape: Shape, picked: list[int], with_zero: bool = False):
    """The generalized shape formed by a subset of boxes, and the order in
    which those boxes are visited by the subshape's own reading order."""
    diag = diagram(shape)
    coords = [diag.boxes[i] for i in picked]
    comps = _extract_components(coords)
    parts_list = [_component_parts(c) for c in comps]
    kind = shape.kind
    if with_zero and kind != "A":
        zb = diag.zero_box
        first = comps[0] if comps else []
        if comps and (zb[0] + 1, zb[1]) == first[0]:
            parts_list[0] = (0,) + parts_list[0]
        elif comps and (zb[0], zb[1] + 1) == first[0]:
            pass  # a positive-start pseudo-composition keeps its parts
        else:
            parts_list = [(0,)] + parts_list
        sub_kind = kind if kind != "D" or sum(map(sum, parts_list)) >= 2 else "B"
        sub = Shape(sub_kind, tuple(parts_list))
    else:
        sub = Shape("A", tuple(parts_list))
    order = [diag.index[coord] for comp in comps for coord in sorted(comp)]
    return sub, order


def decompositions(shape: Shape) -> tuple[Decomposition, ...]:
    """All monotone beta/gamma fillings of the boxes of the shape.

    Along every row (left to right) and every column (top to bottom) the
    labels weakly increase, with beta < gamma.  In kinds B and D the
    0-box is not assignable: it counts as a beta cell in the monotonicity
    check and is attached to the beta factor, which is therefore a
    pseudo-shape while gamma is a type A shape.
    """
    diag = diagram(shape)
    n = diag.n
    out = []
    for assignment in cartesian("bg", repeat=n):
        ok = True
        for i in range(n):
            left = diag.left_of[i]
            if left == "zero":
                pass  # the 0-box counts as beta, never above/right of anything
            elif left is not None and assignment[left] > assignment[i]:
                ok = False
                break
            b = diag.below[i]
            if b is not None and assignment[i] > assignment[b]:
                ok = False
                break
        if not ok:
            continue
        if diag.above_zero is not None and assignment[diag.above_zero] == "g":
            continue  # a gamma cell may not sit on top of the 0-box
        beta_boxes = [i for i in range(n) if assignment[i] == "b"]
        gamma_boxes = [i for i in range(n) if assignment[i] == "g"]
        beta, _ = subshape_of_boxes(shape, beta_boxes, with_zero=shape.kind != "A")
        gamma, _ = subshape_of_boxes(shape, gamma_boxes)
        out.append(Decomposition(beta, gamma, assignment))
    out.sort(key=lambda d: d.assignment)
    return tuple(out)


def enumerate_generalized(n: int, kind: str, max_components: int) -> list[Shape]:
    """All generalized shapes of size n with at most the given number of
    components; in kinds B and D the leading component may have size 0."""
    out = []
    for k in range(1, max_components + 1):
        first_sizes = range(n + 1) if kind != "A" else range(1, n + 1)
        for first in first_sizes:
            rest = n - first
            for sizes in _compositions_of(rest, k - 1):
                if kind == "A":
                    pools = [[c.parts for c in enumerate_shapes(first, "A")]]
                else:
                    pools = [[c.parts for c in enumerate_shapes(first, "B")]]
                pools += [[c.parts for c in enumerate_shapes(s, "A")] for s in sizes]
                for combo in cartesian(*pools):
                    if kind == "D" and n < 2:
                        continue
                    out.append(Shape(kind, combo))
    seen = set()
    unique = []
    for s in out:
        if s not in seen:
            seen.add(s)
            unique.append(s)
    return unique


def _compositions_of(n: int, k: int) -> list[tuple[int, ...]]:
    if k == 0:
        return [()] if n == 0 else []
    if n < k:
        return []
    out = []
    for first in range(1, n - k + 2):
        out.extend((first,) + rest for rest in _compositions_of(n - first, k - 1))
    return out


# ---------------------------------------------------------------------------
# text syntax: "[2,3,1]" and "[2]+[2,2]+[3,2]"


def format_shape(shape: Shape) -> str:
    if shape.kind == "A" and not shape.components:
        return "[]"
    return "+".join("[" + ",".join(map(str, c)) + "]" for c in shape.components)


def parse_shape(text: str, kind: str = "A") -> Shape:
    text = text.strip()
    comps = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not (chunk.startswith("[") and chunk.endswith("]")):
            raise ShapeError(f"malformed shape literal {chunk!r}")
        inner = chunk[1:-1].strip()
        comps.append(tuple(int(p) for p in inner.split(",")) if inner else ())
    if comps == [()]:
        return Shape("A", ()) if kind == "A" else pseudo_composition((), kind)
    return Shape(kind, tuple(comps))
