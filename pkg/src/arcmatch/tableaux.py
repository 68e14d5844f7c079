"""Standard Young tableaux and oscillating tableaux.

The standard tableau here supports the row-insertion machinery in both
directions: insert bumps an entry down the rows, extract reverses a bump
starting from a chosen corner and reports the entry pushed out at the
top.  Oscillating tableaux are walks on Young diagrams changing by one
square per step.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Iterator, Sequence

Shape = tuple[int, ...]


def _check_shape(shape: Sequence[int]) -> Shape:
    shape = tuple(shape)
    for k, part in enumerate(shape):
        if part < 1:
            raise ValueError(f"row {k + 1} has non-positive length {part}")
        if k and part > shape[k - 1]:
            raise ValueError("row lengths must be weakly decreasing")
    return shape


class StandardTableau:
    """Rows strictly increasing left to right, columns strictly increasing
    top to bottom, with all entries distinct."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[int]] = ()):
        rows = tuple(tuple(row) for row in rows)
        seen = set()
        for r, row in enumerate(rows):
            if not row:
                raise ValueError(f"row {r + 1} is empty")
            if r and len(row) > len(rows[r - 1]):
                raise ValueError("row lengths must be weakly decreasing")
            for c, v in enumerate(row):
                if v in seen:
                    raise ValueError(f"duplicate entry {v}")
                seen.add(v)
                if c and row[c - 1] >= v:
                    raise ValueError(f"row {r + 1} is not increasing")
                if r and rows[r - 1][c] >= v:
                    raise ValueError(f"column {c + 1} is not increasing")
        self.rows = rows

    @property
    def shape(self) -> Shape:
        return tuple(len(row) for row in self.rows)

    def entries(self) -> frozenset[int]:
        return frozenset(v for row in self.rows for v in row)

    def insert(self, value: int) -> "StandardTableau":
        """Row-insert: the value bumps the smallest larger entry to the
        next row, and so on until something lands at the end of a row."""
        rows = [list(row) for row in self.rows]
        v = value
        for row in rows:
            k = bisect_right(row, v)
            if k == len(row):
                row.append(v)
                return StandardTableau(rows)
            row[k], v = v, row[k]
        rows.append([v])
        return StandardTableau(rows)

    def extract(self, row_index: int) -> tuple["StandardTableau", int]:
        """Reverse a row insertion ending at the last cell of the given
        row: that cell's entry bumps back up through the rows and the
        entry ejected from row 0 is returned."""
        if not 0 <= row_index < len(self.rows):
            raise ValueError(f"no row {row_index}")
        if (row_index + 1 < len(self.rows)
                and len(self.rows[row_index + 1]) == len(self.rows[row_index])):
            raise ValueError(f"row {row_index} does not end in a corner")
        rows = [list(row) for row in self.rows]
        v = rows[row_index].pop()
        if not rows[row_index]:
            del rows[row_index]
        for r in range(row_index - 1, -1, -1):
            row = rows[r]
            k = bisect_left(row, v) - 1
            row[k], v = v, row[k]
        return StandardTableau(rows), v

    def place(self, row_index: int, value: int) -> "StandardTableau":
        """Append a value at the end of a row (row_index may extend the
        tableau by one new row)."""
        if not 0 <= row_index <= len(self.rows):
            raise ValueError(f"cannot place into row {row_index}")
        rows = [list(row) for row in self.rows]
        if row_index == len(rows):
            rows.append([value])
        else:
            rows[row_index].append(value)
        return StandardTableau(rows)

    def remove_entry(self, value: int) -> tuple["StandardTableau", int]:
        """Remove an entry sitting in a corner cell; returns the smaller
        tableau and the row it was removed from."""
        for r, row in enumerate(self.rows):
            if row and row[-1] == value:
                if r + 1 < len(self.rows) and len(self.rows[r + 1]) == len(row):
                    raise ValueError(f"entry {value} is not in a corner")
                rows = [list(x) for x in self.rows]
                rows[r].pop()
                if not rows[r]:
                    del rows[r]
                return StandardTableau(rows), r
        raise ValueError(f"entry {value} is not in a corner")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"StandardTableau({[list(r) for r in self.rows]!r})"


class OscillatingTableau:
    """A sequence of shapes starting and ending empty, consecutive shapes
    differing by exactly one square."""

    __slots__ = ("shapes",)

    def __init__(self, shapes: Sequence[Sequence[int]]):
        shapes = tuple(_check_shape(s) for s in shapes)
        if not shapes or shapes[0] or shapes[-1]:
            raise ValueError("shape sequence must start and end empty")
        for k in range(1, len(shapes)):
            if abs(sum(shapes[k]) - sum(shapes[k - 1])) != 1:
                raise ValueError(
                    f"step {k}: shapes must differ by one square")
            if not _one_square_apart(shapes[k - 1], shapes[k]):
                raise ValueError(
                    f"step {k}: shapes must differ in one row only")
        self.shapes = shapes

    @property
    def length(self) -> int:
        return len(self.shapes) - 1

    def is_restricted(self) -> bool:
        """At most two rows, second row at most 1, and a shape (k, 1) is
        never followed by (k + 1, 1)."""
        for s in self.shapes:
            if len(s) > 2 or (len(s) == 2 and s[1] != 1):
                return False
        for prev, cur in zip(self.shapes, self.shapes[1:]):
            if (len(prev) == 2 and len(cur) == 2
                    and cur[0] == prev[0] + 1):
                return False
        return True

    @classmethod
    def from_text(cls, text: str) -> "OscillatingTableau":
        shapes = []
        for part in text.split(";"):
            part = part.strip()
            if not (part.startswith("[") and part.endswith("]")):
                raise ValueError(f"bad shape {part!r}")
            inner = part[1:-1].strip()
            shapes.append(
                tuple(int(x) for x in inner.split(",")) if inner else ())
        return cls(shapes)

    def text(self) -> str:
        return ";".join(
            "[" + ",".join(str(p) for p in s) + "]" for s in self.shapes)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, OscillatingTableau)
                and self.shapes == other.shapes)

    def __hash__(self) -> int:
        return hash(self.shapes)

    def __repr__(self) -> str:
        return f"OscillatingTableau.from_text({self.text()!r})"


def _one_square_apart(a: Shape, b: Shape) -> bool:
    if sum(a) > sum(b):
        a, b = b, a
    if len(a) > len(b):
        return False
    diff = 0
    for k, part in enumerate(b):
        gap = part - (a[k] if k < len(a) else 0)
        if gap not in (0, 1):
            return False
        diff += gap
    return diff == 1


def changed_row(a: Shape, b: Shape) -> int:
    """The row index where two adjacent shapes differ."""
    if len(a) < len(b):
        a = a + (0,) * (len(b) - len(a))
    else:
        b = b + (0,) * (len(a) - len(b))
    for k, (pa, pb) in enumerate(zip(a, b)):
        if pa != pb:
            return k
    raise ValueError("shapes are identical")


def enumerate_oscillating_tableaux(length: int) -> Iterator[OscillatingTableau]:
    """All oscillating tableaux with the given number of steps."""
    if length < 0 or length % 2:
        raise ValueError("length must be even and non-negative")

    def rec(shapes: list[Shape], left: int) -> Iterator[OscillatingTableau]:
        cur = shapes[-1]
        if sum(cur) > left:
            return
        if left == 0:
            yield OscillatingTableau(shapes)
            return
        grown = []
        for k in range(len(cur)):
            if k == 0 or cur[k] < cur[k - 1]:
                grown.append(cur[:k] + (cur[k] + 1,) + cur[k + 1:])
        grown.append(cur + (1,))
        for s in grown:
            shapes.append(s)
            yield from rec(shapes, left - 1)
            shapes.pop()
        for k in range(len(cur)):
            if k == len(cur) - 1 or cur[k] > cur[k + 1]:
                s = cur[:k] + (cur[k] - 1,) + cur[k + 1:]
                if s and s[-1] == 0:
                    s = s[:-1]
                shapes.append(s)
                yield from rec(shapes, left - 1)
                shapes.pop()

    return rec([()], length)
