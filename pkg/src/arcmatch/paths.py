"""Lattice objects: Schroeder paths, plane walks, and two-to-one paths.

Three step-sequence classes, each validating its own geometry on
construction, plus brute-force enumerators used by the bijection tests.
"""

from __future__ import annotations

from typing import Iterator


class SchroederPath:
    """A path from (0, 0) to (2k, 0) with steps U = (1, 1), D = (1, -1),
    H = (2, 0), never dipping below the x axis."""

    __slots__ = ("steps",)

    def __init__(self, steps: str):
        height = 0
        for pos, ch in enumerate(steps, start=1):
            if ch == "U":
                height += 1
            elif ch == "D":
                height -= 1
            elif ch != "H":
                raise ValueError(f"step {pos}: {ch!r} is not U, D, or H")
            if height < 0:
                raise ValueError(f"step {pos}: path dips below the axis")
        if height != 0:
            raise ValueError("path does not return to the axis")
        self.steps = steps

    @property
    def semilength(self) -> int:
        return (len(self.steps) + self.steps.count("H")) // 2

    def peaks(self) -> list[tuple[int, int]]:
        """(position, summit height) for each UD factor, 1-based position
        of the U step."""
        out = []
        height = 0
        for pos, ch in enumerate(self.steps, start=1):
            if ch == "U":
                height += 1
                if pos < len(self.steps) and self.steps[pos] == "D":
                    out.append((pos, height))
            elif ch == "D":
                height -= 1
        return out

    def has_low_peak(self) -> bool:
        """A low peak is a UD factor whose summit sits at height 1."""
        return any(h == 1 for _, h in self.peaks())

    def first_return(self):
        """Split off the leading arch.

        Returns ("H", rest) when the path starts with a level step, or
        ("U", inner, rest) when it starts with U, where inner is the part
        strictly between that U and its matching D.  Empty paths have no
        arch and raise ValueError.
        """
        if not self.steps:
            raise ValueError("empty path has no first arch")
        if self.steps[0] == "H":
            return ("H", SchroederPath(self.steps[1:]))
        height = 0
        for pos, ch in enumerate(self.steps):
            if ch == "U":
                height += 1
            elif ch == "D":
                height -= 1
            if height == 0:
                return ("U", SchroederPath(self.steps[1:pos]),
                        SchroederPath(self.steps[pos + 1:]))
        raise AssertionError("unreachable: path validated as balanced")

    def base_segments(self) -> list["SchroederPath"]:
        """Split at every ground-level UD factor; the factors themselves
        are dropped.  The segments carry no low peaks of their own."""
        cuts = []
        height = 0
        for pos, ch in enumerate(self.steps):
            if ch == "U":
                height += 1
                if (height == 1 and pos + 1 < len(self.steps)
                        and self.steps[pos + 1] == "D"):
                    cuts.append(pos)
            elif ch == "D":
                height -= 1
        segments = []
        start = 0
        for cut in cuts:
            segments.append(SchroederPath(self.steps[start:cut]))
            start = cut + 2
        segments.append(SchroederPath(self.steps[start:]))
        return segments

    def __str__(self) -> str:
        return self.steps

    def __repr__(self) -> str:
        return f"SchroederPath({self.steps!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SchroederPath) and self.steps == other.steps

    def __hash__(self) -> int:
        return hash((SchroederPath, self.steps))


class LatticeWalk:
    """A walk with unit steps E, W, N, S from the origin back to the
    origin, staying in the wedge x >= y >= 0, where every N step is
    followed by zero or more W steps and then exactly one S step."""

    __slots__ = ("steps",)

    def __init__(self, steps: str):
        x = y = 0
        for pos, ch in enumerate(steps, start=1):
            if ch == "E":
                x += 1
            elif ch == "W":
                x -= 1
            elif ch == "N":
                y += 1
            elif ch == "S":
                y -= 1
            else:
                raise ValueError(f"step {pos}: {ch!r} is not E, W, N, or S")
            if not x >= y >= 0:
                raise ValueError(f"step {pos}: walk leaves the wedge x >= y >= 0")
        if (x, y) != (0, 0):
            raise ValueError("walk does not return to the origin")
        k = 0
        while k < len(steps):
            if steps[k] == "N":
                k += 1
                while k < len(steps) and steps[k] == "W":
                    k += 1
                if k >= len(steps) or steps[k] != "S":
                    raise ValueError(
                        f"step {k + 1}: N step not resolved by W* then S")
            k += 1
        self.steps = steps

    @property
    def length(self) -> int:
        return len(self.steps)

    def points(self) -> list[tuple[int, int]]:
        """All visited points, origin first."""
        out = [(0, 0)]
        x = y = 0
        for ch in self.steps:
            dx, dy = {"E": (1, 0), "W": (-1, 0), "N": (0, 1), "S": (0, -1)}[ch]
            x += dx
            y += dy
            out.append((x, y))
        return out

    def __str__(self) -> str:
        return self.steps

    def __repr__(self) -> str:
        return f"LatticeWalk({self.steps!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LatticeWalk) and self.steps == other.steps

    def __hash__(self) -> int:
        return hash((LatticeWalk, self.steps))


class LatticePath:
    """A path with unit steps E and N, twice as many E as N, where every
    prefix has at least twice as many E steps as N steps."""

    __slots__ = ("steps",)

    def __init__(self, steps: str):
        e = n = 0
        for pos, ch in enumerate(steps, start=1):
            if ch == "E":
                e += 1
            elif ch == "N":
                n += 1
            else:
                raise ValueError(f"step {pos}: {ch!r} is not E or N")
            if e < 2 * n:
                raise ValueError(f"step {pos}: prefix breaks e >= 2 n")
        if e != 2 * n:
            raise ValueError("path does not end on the line e = 2 n")
        self.steps = steps

    def __str__(self) -> str:
        return self.steps

    def __repr__(self) -> str:
        return f"LatticePath({self.steps!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LatticePath) and self.steps == other.steps

    def __hash__(self) -> int:
        return hash((LatticePath, self.steps))


def enumerate_schroeder_paths(semilength: int) -> Iterator[SchroederPath]:
    """All Schroeder paths of the given semilength, lexicographic in
    D < H < U at each choice point."""
    if semilength < 0:
        raise ValueError("semilength must be non-negative")

    # budget counts the semilength still to spend: U and H cost 1, D was
    # paid for by its U, and any height is recoverable with free D steps
    def rec(prefix: list[str], height: int, budget: int) -> Iterator[str]:
        if budget == 0 and height == 0:
            yield "".join(prefix)
        if height > 0:
            prefix.append("D")
            yield from rec(prefix, height - 1, budget)
            prefix.pop()
        if budget >= 1:
            prefix.append("H")
            yield from rec(prefix, height, budget - 1)
            prefix.pop()
            prefix.append("U")
            yield from rec(prefix, height + 1, budget - 1)
            prefix.pop()

    return (SchroederPath(steps) for steps in rec([], 0, semilength))


def enumerate_walks(n: int) -> Iterator[LatticeWalk]:
    """All wedge walks of length 2n, lexicographic in E < N < S < W."""
    if n < 0:
        raise ValueError("n must be non-negative")

    # in_block marks an N step still waiting for its W* S resolution
    def rec(prefix: list[str], x: int, y: int, left: int,
            in_block: bool) -> Iterator[str]:
        if left == 0:
            if x == 0 and y == 0:
                yield "".join(prefix)
            return
        if x + y > left:
            return
        moves = (("S", 0, -1), ("W", -1, 0)) if in_block else (
            ("E", 1, 0), ("N", 0, 1), ("W", -1, 0))
        for ch, dx, dy in sorted(moves):
            nx, ny = x + dx, y + dy
            if not nx >= ny >= 0:
                continue
            prefix.append(ch)
            still = ch == "N" or (in_block and ch == "W")
            yield from rec(prefix, nx, ny, left - 1, still)
            prefix.pop()

    return (LatticeWalk(steps) for steps in rec([], 0, 0, 2 * n, False))


def enumerate_lattice_paths(n: int) -> Iterator[LatticePath]:
    """All two-to-one paths with 2n east and n north steps."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def rec(prefix: list[str], e: int, nn: int) -> Iterator[str]:
        if e == 2 * n and nn == n:
            yield "".join(prefix)
            return
        if e < 2 * n:
            prefix.append("E")
            yield from rec(prefix, e + 1, nn)
            prefix.pop()
        if nn < n and e >= 2 * (nn + 1):
            prefix.append("N")
            yield from rec(prefix, e, nn + 1)
            prefix.pop()

    return (LatticePath(steps) for steps in rec([], 0, 0))
