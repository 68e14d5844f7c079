"""Bijections between matchings and lattice objects.

Four maps with inverses:

  * Schroeder paths without low peaks <-> matchings avoiding 12312 and
    121323 (peaks correspond to crossings);
  * oscillating tableaux <-> all matchings, restricting to tableaux with
    at most two rows and short second row <-> 12312-avoiders;
  * restricted oscillating tableaux <-> wedge walks;
  * wedge walks <-> lattice paths with two east steps per north step.

Each function validates its input and raises ValueError when a value is
outside the domain of the map.
"""

from __future__ import annotations

from .decompositions import (DecompositionDouble, decompose_double,
                             recompose_double)
from .matchings import Matching
from .paths import LatticePath, LatticeWalk, SchroederPath
from .tableaux import OscillatingTableau, StandardTableau, changed_row

__all__ = [
    "schroeder_to_matching",
    "matching_to_schroeder",
    "tableau_to_matching",
    "matching_to_tableau",
    "tableau_to_walk",
    "walk_to_tableau",
    "walk_to_path",
    "path_to_walk",
]

_EMPTY_MATCHING = Matching(())


def schroeder_to_matching(path: SchroederPath) -> Matching:
    """Fold a low-peak-free Schroeder path into a matching avoiding 12312
    and 121323.

    A leading level step becomes a final arc crossing nothing; a leading
    arch U P' D with k ground-level UD factors inside P' becomes a final
    arc crossed k + 1 times, the stretches of P' between those factors
    turning into the components nested under the crossing arcs.
    """
    if path.has_low_peak():
        raise ValueError(f"path {path} has a peak at height 1")
    return _pack(path)


def _pack(path: SchroederPath) -> Matching:
    if not path.steps:
        return _EMPTY_MATCHING
    head = path.first_return()
    if head[0] == "H":
        rest = head[1]
        d = DecompositionDouble(
            m=0, thetas=(_EMPTY_MATCHING,), beta=_pack(rest))
        return recompose_double(d)
    _, inner, rest = head
    segments = inner.base_segments()
    d = DecompositionDouble(
        m=len(segments) - 1,
        thetas=tuple(_pack(segment) for segment in segments),
        beta=_pack(rest))
    return recompose_double(d)


def matching_to_schroeder(m: Matching) -> SchroederPath:
    """Inverse of schroeder_to_matching; raises ValueError when the
    matching contains 12312 or 121323."""
    return SchroederPath(_unpack(m))


def _unpack(m: Matching) -> str:
    if m.n == 0:
        return ""
    d = decompose_double(m)
    if d.m == 0 and d.thetas[0].n == 0:
        return "H" + _unpack(d.beta)
    inner = "UD".join(_unpack(theta) for theta in d.thetas)
    return "U" + inner + "D" + _unpack(d.beta)


def tableau_to_matching(osc: OscillatingTableau) -> Matching:
    """Read an oscillating tableau as a matching.

    Walking along the shape sequence with a growing standard tableau:
    an added square records its position as a new entry, a removed
    square reverse-bumps the tableau and the ejected entry is the
    opener matched with the current position.
    """
    tab = StandardTableau()
    edges = []
    shapes = osc.shapes
    for i in range(1, len(shapes)):
        row = changed_row(shapes[i - 1], shapes[i])
        if sum(shapes[i]) > sum(shapes[i - 1]):
            tab = tab.place(row, i)
        else:
            tab, opener = tab.extract(row)
            edges.append((opener, i))
    return Matching(edges)


def matching_to_tableau(m: Matching) -> OscillatingTableau:
    """Inverse of tableau_to_matching.

    Scans positions from 2n down to 1, row-inserting the opener when the
    position closes an arc and deleting the entry when it opens one; the
    shapes appear in reverse order.
    """
    opener_of = {j: i for i, j in m.edges}
    openers = {i for i, _ in m.edges}
    tab = StandardTableau()
    shapes = [()]
    for pos in range(2 * m.n, 0, -1):
        if pos in opener_of:
            tab = tab.insert(opener_of[pos])
        else:
            assert pos in openers
            tab, _ = tab.remove_entry(pos)
        shapes.append(tab.shape)
    shapes.reverse()
    return OscillatingTableau(shapes)


def tableau_to_walk(osc: OscillatingTableau) -> LatticeWalk:
    """Read a restricted oscillating tableau as a wedge walk: the first
    row length is x, the second row length is y."""
    steps = []
    x = y = 0
    for shape in osc.shapes[1:]:
        if len(shape) > 2 or (len(shape) == 2 and shape[1] != 1):
            raise ValueError(
                f"shape {shape} is not a row with at most one extra square")
        nx = shape[0] if shape else 0
        ny = shape[1] if len(shape) == 2 else 0
        if (nx - x, ny - y) == (1, 0):
            steps.append("E")
        elif (nx - x, ny - y) == (-1, 0):
            steps.append("W")
        elif (nx - x, ny - y) == (0, 1):
            steps.append("N")
        elif (nx - x, ny - y) == (0, -1):
            steps.append("S")
        else:
            raise ValueError(f"shapes step from ({x}, {y}) to ({nx}, {ny})")
        x, y = nx, ny
    return LatticeWalk("".join(steps))


def walk_to_tableau(walk: LatticeWalk) -> OscillatingTableau:
    """Inverse of tableau_to_walk."""
    shapes: list[tuple[int, ...]] = [()]
    for x, y in walk.points()[1:]:
        if y == 0:
            shapes.append((x,) if x else ())
        else:
            shapes.append((x, y))
    return OscillatingTableau(shapes)


def walk_to_path(walk: LatticeWalk) -> LatticePath:
    """Rewrite a wedge walk as a two-to-one lattice path: E becomes EE,
    W becomes N, N becomes EN, S becomes E."""
    out = []
    for ch in walk.steps:
        out.append({"E": "EE", "W": "N", "N": "EN", "S": "E"}[ch])
    return LatticePath("".join(out))


def path_to_walk(path: LatticePath) -> LatticeWalk:
    """Inverse of walk_to_path.

    Pair up the east steps in order.  An adjacent pair came from an E
    step of the walk; a split pair came from an N ... S, consuming the
    north step right after the pair's first member; leftover north steps
    were W steps.
    """
    steps = path.steps
    e_positions = [k for k, ch in enumerate(steps) if ch == "E"]
    tokens = []
    consumed = set()
    for k in range(0, len(e_positions), 2):
        e1, e2 = e_positions[k], e_positions[k + 1]
        if e2 == e1 + 1:
            tokens.append((e1, "E"))
        else:
            if steps[e1 + 1] != "N":
                raise ValueError("split east pair not followed by a north step")
            tokens.append((e1, "N"))
            consumed.add(e1 + 1)
            tokens.append((e2, "S"))
    for k, ch in enumerate(steps):
        if ch == "N" and k not in consumed:
            tokens.append((k, "W"))
    tokens.sort()
    return LatticeWalk("".join(ch for _, ch in tokens))
