"""Structural decompositions of pattern-avoiding matchings.

Both decompositions pivot on the arc E = (j, 2n) that closes at the last
node.  The arcs crossing E turn out to have consecutive closers j+1..j+m,
and cutting the ground set at well-chosen points splits the matching into
smaller components of the same avoidance class.  Each decomposition has an
exact inverse, so the component tuples are in bijection with the matchings
they came from.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matchings import (
    Edge,
    Matching,
    PATTERN_121323,
    PATTERN_12312,
    edges_cross,
)

__all__ = [
    "Decomposition12312",
    "DecompositionDouble",
    "induced_matching",
    "decompose_12312",
    "recompose_12312",
    "decompose_double",
    "recompose_double",
    "critical_window_ok",
    "quasi_crossers_ok",
]


def induced_matching(m: Matching, nodes: tuple[int, ...]) -> Matching:
    """Restrict to a set of nodes and renumber them 1..2k.

    The node set must be closed under taking partners.
    """
    chosen = frozenset(nodes)
    rank = {x: r for r, x in enumerate(sorted(chosen), start=1)}
    edges = []
    for i, j in m.edges:
        inside = (i in chosen) + (j in chosen)
        if inside == 1:
            raise ValueError(f"edge ({i}, {j}) straddles the node set")
        if inside == 2:
            edges.append((rank[i], rank[j]))
    if 2 * len(edges) != len(chosen):
        raise ValueError("node set contains nodes outside the matching")
    return Matching(edges)


def _last_edge(m: Matching) -> Edge:
    for e in m.edges:
        if e[1] == 2 * m.n:
            return e
    raise ValueError("matching is empty")


def _crossers_of_last(m: Matching) -> tuple[Edge, list[Edge]]:
    last = _last_edge(m)
    crossers = [e for e in m.edges if e is not last and edges_cross(e, last)]
    crossers.sort(key=lambda e: e[1])
    return last, crossers


@dataclass(frozen=True)
class Decomposition12312:
    """Split of a nonempty 12312-avoiding matching.

    m counts the arcs crossing the final arc (j, 2n); cut_points are the
    nodes v_1 <= ... <= v_m closing the nested components theta_1..theta_m;
    alpha sits between v_m and j, beta between j+m and 2n-1.
    """

    m: int
    j: int
    cut_points: tuple[int, ...]
    thetas: tuple[Matching, ...]
    alpha: Matching
    beta: Matching

    def size(self) -> int:
        return 1 + sum(t.n for t in self.thetas) + self.alpha.n + self.beta.n


@dataclass(frozen=True)
class DecompositionDouble:
    """Split of a nonempty matching avoiding both 12312 and 121323.

    Stronger avoidance forces each arc crossing the final arc to cross
    nothing else, so the components theta_1..theta_m fill the open gaps
    between consecutive crosser openers and beta follows the crosser
    closers.
    """

    m: int
    thetas: tuple[Matching, ...]
    beta: Matching

    def size(self) -> int:
        return 1 + self.m + sum(t.n for t in self.thetas) + self.beta.n


def decompose_12312(m: Matching) -> Decomposition12312:
    """Break a nonempty 12312-avoiding matching at its final arc.

    With E = (j, 2n) and x_1 > ... > x_m the openers of the arcs crossing
    E (their closers are forced to be j+1, ..., j+m in that order), the cut
    point v_r is the largest closer among arcs other than E crossing the
    arc that closes at j + m + 1 - r, or that arc's opener if nothing
    crosses it.  theta_r lives on (v_{r-1}, v_r] plus its closer, alpha on
    (v_m, j), beta on (j + m, 2n).
    """
    try:
        return _split_12312(m)
    except ValueError:
        # diagnose only on failure so the matcher stays off the hot path
        if m.contains(PATTERN_12312):
            raise ValueError(
                "matching contains 12312, so no final-arc split exists"
            ) from None
        raise


def _split_12312(m: Matching) -> Decomposition12312:
    last, crossers = _crossers_of_last(m)
    j = last[0]
    two_n = 2 * m.n
    mm = len(crossers)
    for k, e in enumerate(crossers, start=1):
        if e[1] != j + k:
            raise ValueError(
                f"arc {e} crossing ({j}, {two_n}) closes at {e[1]}, "
                f"not {j + k}: matching is not 12312-avoiding")
    cut_points = []
    prev = 0
    thetas = []
    for r in range(1, mm + 1):
        anchor = crossers[mm - r]
        v = anchor[0]
        for e in m.edges:
            if e is not last and e is not anchor and edges_cross(e, anchor):
                if e[1] > v:
                    v = e[1]
        cut_points.append(v)
        nodes = tuple(x for x in range(prev + 1, v + 1)) + (anchor[1],)
        thetas.append(induced_matching(m, nodes))
        prev = v
    alpha = induced_matching(m, tuple(range(prev + 1, j)))
    beta = induced_matching(m, tuple(range(j + mm + 1, two_n)))
    return Decomposition12312(
        m=mm, j=j, cut_points=tuple(cut_points),
        thetas=tuple(thetas), alpha=alpha, beta=beta)


def recompose_12312(d: Decomposition12312) -> Matching:
    """Inverse of decompose_12312: rebuild the matching from components."""
    if d.m != len(d.thetas) or d.m != len(d.cut_points):
        raise ValueError(
            f"need {d.m} components and cut points, got "
            f"{len(d.thetas)} and {len(d.cut_points)}")
    prev = 0
    for r, theta in enumerate(d.thetas, start=1):
        if theta.n == 0:
            raise ValueError(f"component {r} is empty but must hold an arc")
        expected = prev + 2 * theta.n - 1
        if d.cut_points[r - 1] != expected:
            raise ValueError(
                f"cut point {d.cut_points[r - 1]} does not match component "
                f"sizes (expected {expected})")
        prev = expected
    j = prev + 2 * d.alpha.n + 1
    if d.j != j:
        raise ValueError(f"stored opener {d.j} inconsistent with sizes ({j})")
    two_n = j + d.m + 1 + 2 * d.beta.n
    # the arc of theta_r closing its local segment is stretched to close at
    # j + m + 1 - r instead, which makes it cross the final arc (j, 2n)
    edges: list[Edge] = []
    offset = 0
    for r, theta in enumerate(d.thetas, start=1):
        size = 2 * theta.n
        for u, w in theta.edges:
            a = offset + u
            b = offset + w if w != size else j + d.m + 1 - r
            edges.append((a, b))
        offset += size - 1
    for u, w in d.alpha.edges:
        edges.append((prev + u, prev + w))
    for u, w in d.beta.edges:
        edges.append((j + d.m + u, j + d.m + w))
    edges.append((j, two_n))
    return Matching(edges)


def decompose_double(m: Matching) -> DecompositionDouble:
    """Break a nonempty matching avoiding 12312 and 121323 at its final arc.

    Avoiding both patterns forces every arc crossing E = (j, 2n) to be a
    lone crosser; the cut point v_s is simply the opener of the arc
    closing at j + m + 1 - s, theta_s fills the open interval between
    consecutive cut points, and beta follows node j + m.
    """
    try:
        return _split_double(m)
    except ValueError:
        if m.contains(PATTERN_12312):
            raise ValueError(
                "matching contains 12312, so no final-arc split exists"
            ) from None
        if m.contains(PATTERN_121323):
            raise ValueError(
                "matching contains 121323, so no final-arc split exists"
            ) from None
        raise


def _split_double(m: Matching) -> DecompositionDouble:
    last, crossers = _crossers_of_last(m)
    j = last[0]
    two_n = 2 * m.n
    mm = len(crossers)
    for k, e in enumerate(crossers, start=1):
        if e[1] != j + k:
            raise ValueError(
                f"arc {e} crossing ({j}, {two_n}) closes at {e[1]}, "
                f"not {j + k}: matching is not 12312-avoiding")
        for f in m.edges:
            if f is not last and f is not e and edges_cross(e, f):
                raise ValueError(
                    f"arcs {e} and {f} cross while both entangled with "
                    f"({j}, {two_n}): matching contains 121323")
    cut_points = [0]
    for s in range(1, mm + 1):
        cut_points.append(crossers[mm - s][0])
    cut_points.append(j)
    thetas = []
    for s in range(1, mm + 2):
        nodes = tuple(range(cut_points[s - 1] + 1, cut_points[s]))
        thetas.append(induced_matching(m, nodes))
    beta = induced_matching(m, tuple(range(j + mm + 1, two_n)))
    return DecompositionDouble(m=mm, thetas=tuple(thetas), beta=beta)


def recompose_double(d: DecompositionDouble) -> Matching:
    """Inverse of decompose_double."""
    if len(d.thetas) != d.m + 1:
        raise ValueError(
            f"need {d.m + 1} components for {d.m} crossing arcs, "
            f"got {len(d.thetas)}")
    edges: list[Edge] = []
    cuts = [0]
    for theta in d.thetas:
        cuts.append(cuts[-1] + 2 * theta.n + 1)
    j = cuts[-1]
    for s, theta in enumerate(d.thetas, start=1):
        base = cuts[s - 1]
        for u, w in theta.edges:
            edges.append((base + u, base + w))
        if s <= d.m:
            edges.append((cuts[s], j + d.m + 1 - s))
    two_n = j + d.m + 1 + 2 * d.beta.n
    for u, w in d.beta.edges:
        edges.append((j + d.m + u, j + d.m + w))
    edges.append((j, two_n))
    return Matching(edges)


def critical_window_ok(m: Matching) -> bool:
    """Structural fact about nonempty 12312-avoiding matchings.

    Let E close at 2n and let (x, y) be its crossing arc with the largest
    closer.  Then every node strictly between j and y is a closer, the
    arcs closing there are pairwise noncrossing, and their openers lie
    strictly between x and j.  Vacuously true when nothing crosses E.
    """
    last, crossers = _crossers_of_last(m)
    j = last[0]
    if not crossers:
        return True
    x, y = crossers[-1]
    between = []
    for e in m.edges:
        if j < e[0] < y:
            return False
        if j < e[1] < y:
            between.append(e)
    for a in range(len(between)):
        for b in range(a + 1, len(between)):
            if edges_cross(between[a], between[b]):
                return False
    return all(x < e[0] < j for e in between)


def quasi_crossers_ok(m: Matching) -> bool:
    """Structural fact about nonempty 12312-avoiding matchings.

    The arcs crossing the final arc E have consecutive closers right
    after j, and no other arc crosses two of them.
    """
    last, crossers = _crossers_of_last(m)
    j = last[0]
    for k, e in enumerate(crossers, start=1):
        if e[1] != j + k:
            return False
    for f in m.edges:
        if f is last:
            continue
        hits = sum(1 for e in crossers if e is not f and edges_cross(f, e))
        if f in crossers and hits > 0:
            return False
        if hits > 1:
            return False
    return True
