"""Standard and semistandard tableaux on (generalized) ribbon shapes.

A tableau stores its entries in reading order (bottom row to top row,
left to right), so the entry tuple of a standard tableau IS its reading
word.  Validity is checked against the diagram: rows increase left to
right, columns increase top to bottom, with the extra 0-box of types B
and D participating in the comparisons (value 0 in type B; value -w(2)
in type D, where w(2) is the second letter of the reading word).

Standard tableaux of a shape are in bijection, via reading words, with
the group elements whose descent set lies in the band between the
triangle-gluing and dot-gluing descent sets of the shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import groups
from .shapes import (
    Shape,
    ShapeError,
    complement,
    descent_band,
    diagram,
    glue,
    subshape_of_boxes,
    transpose,
)


@dataclass(frozen=True)
class Tableau:
    """A shape together with one entry per box, in reading order."""

    shape: Shape
    entries: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return format_tableau(self)


def reading_word(t: Tableau) -> groups.GroupElement:
    return groups.GroupElement(t.shape.kind, t.entries)


def zero_value(t: Tableau) -> int | None:
    """The comparison value of the extra 0-box, if the shape has one."""
    if t.shape.kind == "B":
        return 0
    if t.shape.kind == "D":
        return -t.entries[1]
    return None


def is_semistandard(shape: Shape, entries: tuple[int, ...]) -> bool:
    return _filling_ok(shape, entries, strict_rows=False)


def is_standard(shape: Shape, entries: tuple[int, ...]) -> bool:
    n = shape.size
    if len(entries) != n:
        return False
    if sorted(abs(e) for e in entries) != list(range(1, n + 1)):
        return False
    if shape.kind == "A" and any(e < 0 for e in entries):
        return False
    if shape.kind == "D" and sum(1 for e in entries if e < 0) % 2:
        return False
    return _filling_ok(shape, entries, strict_rows=True)


def _filling_ok(shape: Shape, entries: tuple[int, ...], strict_rows: bool) -> bool:
    diag = diagram(shape)
    if len(entries) != diag.n:
        return False
    if shape.kind == "D":
        zval = -entries[1]
    elif shape.kind == "B":
        zval = 0
    else:
        zval = None
    for i, v in enumerate(entries):
        left = diag.left_of[i]
        if left == "zero":
            if v < zval or (strict_rows and v == zval):
                return False
        elif left is not None:
            lv = entries[left]
            if lv > v or (strict_rows and lv == v):
                return False
        b = diag.below[i]
        if b is not None and entries[b] <= v:  # columns are strict downward
            return False
    if diag.above_zero is not None and entries[diag.above_zero] >= zval:
        return False
    return True


def tableau_from_word(shape: Shape, w: groups.GroupElement) -> Tableau | None:
    """The standard tableau of the shape with the given reading word, or
    None when the word's descent set leaves the admissible band."""
    if w.kind != shape.kind or w.n != shape.size:
        raise ShapeError("word does not match the shape")
    lower, upper = descent_band(shape)
    if not lower <= groups.descents(w) <= upper:
        return None
    t = Tableau(shape, w.window)
    if not is_standard(shape, t.entries):
        raise AssertionError(f"band word {w} is not a standard filling of {shape}")
    return t


def standard_tableaux(shape: Shape) -> tuple[Tableau, ...]:
    """All standard tableaux, in reading-word lexicographic order."""
    lower, upper = descent_band(shape)
    words = groups.band_elements(shape.kind, shape.size, lower, upper)
    groups.guard(len(words), f"standard tableaux of {shape}", groups.tableau_limit())
    out = tuple(Tableau(shape, w.window) for w in words)
    return out


def tableau_descents(t: Tableau) -> frozenset[int]:
    """Descents of the tableau; equal to the descents of w(t)^{-1}."""
    kind = t.shape.kind
    if kind == "D":
        return groups.descents(groups.inverse(reading_word(t)))
    diag = diagram(t.shape)
    row_of = {v: diag.boxes[i][0] for i, v in enumerate(t.entries)}
    out = set()
    if kind == "B" and -1 in row_of:
        out.add(0)
    n = t.n
    for i in range(1, n):
        if i in row_of and i + 1 in row_of:
            if row_of[i] > row_of[i + 1]:
                out.add(i)
        elif -i in row_of and -(i + 1) in row_of:
            if row_of[-i] < row_of[-(i + 1)]:
                out.add(i)
        elif i in row_of and -(i + 1) in row_of:
            out.add(i)
    return frozenset(out)


def apply_generator(t: Tableau, i: int) -> Tableau:
    """The entrywise action of the Coxeter generator s_i on a filling.

    Type A swaps the values i and i+1.  Type B negates the value with
    absolute value 1 when i = 0, and otherwise swaps the absolute values
    i and i+1 leaving the signs in place.  Type D at i = 0 swaps the
    absolute values 1 and 2 and negates both signs.
    """
    kind = t.shape.kind
    entries = list(t.entries)
    if i == 0:
        if kind == "B":
            p = _position_of_abs(entries, 1)
            entries[p] = -entries[p]
        elif kind == "D":
            p = _position_of_abs(entries, 1)
            q = _position_of_abs(entries, 2)
            sp = 1 if entries[p] > 0 else -1
            sq = 1 if entries[q] > 0 else -1
            entries[p] = -sp * 2
            entries[q] = -sq * 1
        else:
            raise ValueError("type A has no generator 0")
    elif kind == "A":
        p, q = entries.index(i), entries.index(i + 1)
        entries[p], entries[q] = entries[q], entries[p]
    else:
        p = _position_of_abs(entries, i)
        q = _position_of_abs(entries, i + 1)
        sp = 1 if entries[p] > 0 else -1
        sq = 1 if entries[q] > 0 else -1
        entries[p] = sp * (i + 1)
        entries[q] = sq * i
    return Tableau(t.shape, tuple(entries))


def _position_of_abs(entries, k: int) -> int:
    for p, v in enumerate(entries):
        if abs(v) == k:
            return p
    raise ValueError(f"no entry with absolute value {k}")


# ---------------------------------------------------------------------------
# canonical fillings


def tau0(shape: Shape) -> Tableau:
    """The standard tableau whose reading word is the descent-class minimum."""
    if not shape.is_single:
        raise ShapeError("canonical fillings are defined on single ribbons")
    kind = shape.kind
    if kind == "A":
        return _fill_columns(shape, list(range(1, shape.size + 1)))
    if kind == "B":
        return _tau0_signed(shape)
    return _tau0_type_d(shape)


def tau1(shape: Shape) -> Tableau:
    """The standard tableau whose reading word is the descent-class maximum."""
    if not shape.is_single:
        raise ShapeError("canonical fillings are defined on single ribbons")
    kind = shape.kind
    if kind == "A":
        return _fill_rows_topdown(shape, list(range(1, shape.size + 1)))
    if kind == "B":
        return _tau1_signed(shape)
    return _tau1_type_d(shape)


def _assign(shape: Shape, values: dict[int, int]) -> Tableau:
    n = diagram(shape).n
    return Tableau(shape, tuple(values[i] for i in range(n)))


def _fill_columns(shape: Shape, numbers: list[int]) -> Tableau:
    values, it = {}, iter(numbers)
    for col in diagram(shape).columns():
        for i in sorted(col, key=lambda b: -diagram(shape).boxes[b][0]):
            values[i] = next(it)
    return _assign(shape, values)


def _fill_rows_topdown(shape: Shape, numbers: list[int]) -> Tableau:
    values, it = {}, iter(numbers)
    for row in reversed(diagram(shape).rows()):
        for i in row:
            values[i] = next(it)
    return _assign(shape, values)


def _column_boxes(shape: Shape):
    """Box indices per column, columns left to right, including the 0-box
    column; each column lists boxes top to bottom."""
    diag = diagram(shape)
    cols: dict[int, list[tuple[int, int]]] = {}
    for i, (r, c) in enumerate(diag.boxes):
        cols.setdefault(c, []).append((r, i))
    if diag.zero_box is not None:
        cols.setdefault(diag.zero_box[1], [])
    return [sorted(cols[c], key=lambda x: -x[0]) for c in sorted(cols)]


def _row_boxes(shape: Shape):
    """Box indices per row, rows bottom to top, including the 0-box row;
    each row lists boxes left to right."""
    diag = diagram(shape)
    rows: dict[int, list[tuple[int, int]]] = {}
    for i, (r, c) in enumerate(diag.boxes):
        rows.setdefault(r, []).append((c, i))
    if diag.zero_box is not None:
        rows.setdefault(diag.zero_box[0], [])
    return [sorted(rows[r]) for r in sorted(rows)]


def _tau0_signed(shape: Shape) -> Tableau:
    cols = _column_boxes(shape)
    values = {}
    c = len(cols[0])
    for k, (_, i) in enumerate(sorted(cols[0], key=lambda x: x[0])):  # bottom to top
        values[i] = -(k + 1)
    nxt = c + 1
    for col in cols[1:]:
        for _, i in col:  # top to bottom
            values[i] = nxt
            nxt += 1
    return _assign(shape, values)


def _tau1_signed(shape: Shape) -> Tableau:
    rows = _row_boxes(shape)
    values = {}
    r = len(rows[0])
    for k, (_, i) in enumerate(rows[0]):  # left to right
        values[i] = k + 1
    nxt = r + 1
    for row in rows[1:]:
        for _, i in reversed(row):  # right to left
            values[i] = -nxt
            nxt += 1
    return _assign(shape, values)


def _tau0_type_d(shape: Shape) -> Tableau:
    cols = _column_boxes(shape)
    c1 = len(cols[0])
    if c1 != 1:
        base = _tau0_signed(Shape("B", shape.components))
        entries = _fix_sign_parity(base.entries)
        return Tableau(shape, entries)
    c2 = len(cols[1])
    values = {}
    seq = [-1] + list(range(2, c2 + 1))
    for (_, i), v in zip(cols[1], seq):  # top to bottom
        values[i] = v
    values[cols[0][0][1]] = -(c2 + 1)
    nxt = c2 + 2
    for col in cols[2:]:
        for _, i in col:
            values[i] = nxt
            nxt += 1
    return _assign(shape, values)


def _tau1_type_d(shape: Shape) -> Tableau:
    rows = _row_boxes(shape)
    r1 = len(rows[0])
    if r1 != 1:
        base = _tau1_signed(Shape("B", shape.components))
        entries = _fix_sign_parity(base.entries)
        return Tableau(shape, entries)
    r2 = len(rows[1])
    n = shape.size
    values = {}
    seq = [(-1) ** n * 1] + [-v for v in range(2, r2 + 1)]
    for (_, i), v in zip([x for x in reversed(rows[1])], seq):  # right to left
        values[i] = v
    values[rows[0][0][1]] = r2 + 1
    nxt = r2 + 2
    for row in rows[2:]:
        for _, i in reversed(row):
            values[i] = -nxt
            nxt += 1
    return _assign(shape, values)


def _fix_sign_parity(entries: tuple[int, ...]) -> tuple[int, ...]:
    """Negate the entry of absolute value 1 if the sign count is odd."""
    if sum(1 for e in entries if e < 0) % 2 == 0:
        return entries
    out = list(entries)
    p = _position_of_abs(out, 1)
    out[p] = -out[p]
    return tuple(out)


# ---------------------------------------------------------------------------
# symmetry maps


def theta_map(t: Tableau) -> Tableau:
    """Transpose in type A; diagonal reflection plus negation in type B;
    the same with a sign-parity fix in type D."""
    if not t.shape.is_single:
        raise ShapeError("symmetry maps are defined on single ribbons")
    kind = t.shape.kind
    if kind == "A":
        return _transpose_a(t)
    new_shape = complement(t.shape)
    diag = diagram(t.shape)
    image = {(c, r): -t.entries[i] for i, (r, c) in enumerate(diag.boxes)}
    new_diag = diagram(new_shape)
    if set(image) != set(new_diag.boxes):
        raise AssertionError("diagonal reflection does not match the complement diagram")
    entries = tuple(image[coord] for coord in new_diag.boxes)
    if kind == "D":
        entries = _fix_sign_parity(entries)
    return Tableau(new_shape, entries)


def _transpose_a(t: Tableau) -> Tableau:
    new_shape = transpose(t.shape)
    diag = diagram(t.shape)
    if not diag.boxes:
        return Tableau(new_shape, ())
    rmax = max(r for r, _ in diag.boxes)
    cmax = max(c for _, c in diag.boxes)
    image = {(cmax + 1 - c, rmax + 1 - r): t.entries[i] for i, (r, c) in enumerate(diag.boxes)}
    new_diag = diagram(new_shape)
    if set(image) != set(new_diag.boxes):
        raise AssertionError("antidiagonal reflection does not match the transpose diagram")
    return Tableau(new_shape, tuple(image[coord] for coord in new_diag.boxes))


# ---------------------------------------------------------------------------
# gluing and splitting


def glue_tableaux(t: Tableau, u: Tableau) -> Tableau:
    """The unique semistandard gluing; concatenation of reading words.

    The shapes are joined by near-concatenation when the last letter of
    w(t) is at most the first letter of w(u), and stacked apart
    otherwise.  A bare 0-box left factor compares through the value 0.
    """
    if u.shape.kind != "A":
        raise ShapeError("the right gluing factor must be a type A tableau")
    if not u.entries:
        return t
    last = t.entries[-1] if t.entries else 0
    mode = "dot" if last > u.entries[0] else "triangle"
    new_shape = glue(t.shape, u.shape, mode)
    out = Tableau(new_shape, t.entries + u.entries)
    if not is_semistandard(new_shape, out.entries):
        raise AssertionError("glued filling is not semistandard")
    return out


def split_tableau(t: Tableau, m: int) -> tuple[Tableau, Tableau]:
    """Split a type A standard tableau into the entries <= m and the rest
    (shifted down by m), each on its own generalized shape."""
    if t.shape.kind != "A":
        raise ShapeError("splitting is defined for type A tableaux")
    if not 0 <= m <= t.n:
        raise ValueError(f"split point {m} out of range")
    low = [i for i, v in enumerate(t.entries) if v <= m]
    high = [i for i, v in enumerate(t.entries) if v > m]
    lshape, lorder = subshape_of_boxes(t.shape, low)
    hshape, horder = subshape_of_boxes(t.shape, high)
    left = Tableau(lshape, tuple(t.entries[i] for i in lorder))
    right = Tableau(hshape, tuple(t.entries[i] - m for i in horder))
    return left, right


# ---------------------------------------------------------------------------
# semistandard enumeration


def semistandard_tableaux(shape: Shape, alphabet, max_count: int | None = None):
    """All fillings over the alphabet satisfying the type-specific row and
    column conditions (weak rows, strict columns, 0-box included)."""
    diag = diagram(shape)
    letters = sorted(set(alphabet))
    limit = max_count if max_count is not None else groups.tableau_limit()
    kind = shape.kind
    n = diag.n
    out: list[Tableau] = []
    entries: list[int] = []

    def zero_ok() -> bool:
        zval = 0 if kind == "B" else -entries[1]
        i = diag.above_zero
        if i is not None and i < len(entries) and entries[i] >= zval:
            return False
        for j in range(n):
            if diag.left_of[j] == "zero" and j < len(entries) and entries[j] < zval:
                return False
        return True

    def place(i: int) -> None:
        if i == n:
            if kind == "A" or zero_ok():
                groups.guard(len(out) + 1, f"semistandard tableaux of {shape}", limit)
                out.append(Tableau(shape, tuple(entries)))
            return
        left = diag.left_of[i]
        b = diag.below[i]
        for v in letters:
            if left not in (None, "zero") and entries[left] > v:
                continue
            if b is not None and entries[b] <= v:
                continue
            entries.append(v)
            # in type D every zero-box comparison can shift with entry 2,
            # so prune only on settled constraints and recheck at the leaf
            if kind == "D" and len(entries) >= 2 and not zero_ok():
                entries.pop()
                continue
            if kind == "B" and not zero_ok():
                entries.pop()
                continue
            place(i + 1)
            entries.pop()

    place(0)
    out.sort(key=lambda t: t.entries)
    return tuple(out)


# ---------------------------------------------------------------------------
# text format: rows top to bottom, "/" separated, 0-box shown as "0*"


def format_tableau(t: Tableau) -> str:
    diag = diagram(t.shape)
    cells: dict[int, list[tuple[int, str]]] = {}
    for i, (r, c) in enumerate(diag.boxes):
        cells.setdefault(r, []).append((c, str(t.entries[i])))
    if diag.zero_box is not None:
        zr, zc = diag.zero_box
        cells.setdefault(zr, []).append((zc, "0*"))
    rows = []
    for r in sorted(cells, reverse=True):
        rows.append(",".join(text for _, text in sorted(cells[r])))
    return "/".join(rows)


def parse_tableau(text: str, shape: Shape) -> Tableau:
    diag = diagram(shape)
    rows = [chunk.split(",") if chunk else [] for chunk in text.split("/")]
    cells: dict[int, list[tuple[int, str]]] = {}
    for i, (r, c) in enumerate(diag.boxes):
        cells.setdefault(r, []).append((c, i))
    if diag.zero_box is not None:
        zr, zc = diag.zero_box
        cells.setdefault(zr, []).append((zc, -1))
    ordered_rows = [sorted(cells[r]) for r in sorted(cells, reverse=True)]
    if len(rows) != len(ordered_rows):
        raise ShapeError(f"tableau text has {len(rows)} rows, shape needs {len(ordered_rows)}")
    values: dict[int, int] = {}
    for texts, boxes in zip(rows, ordered_rows):
        if len(texts) != len(boxes):
            raise ShapeError("tableau text row length does not match the shape")
        for text_cell, (_, idx) in zip(texts, boxes):
            if idx == -1:
                if text_cell.strip() != "0*":
                    raise ShapeError("the 0-box must be written as 0*")
            else:
                values[idx] = int(text_cell)
    return Tableau(shape, tuple(values[i] for i in range(diag.n)))
