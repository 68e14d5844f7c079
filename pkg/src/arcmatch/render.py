"""ASCII arc diagrams.

Nodes sit on a baseline in order; each arc is drawn as a horizontal span
with dot corners, lifted high enough to clear every arc it overlaps, and
taller arcs drop vertical legs through the rows below.  Output is
deterministic: same matching, same bytes.
"""

from __future__ import annotations

from .matchings import Matching


def render_arc_diagram(m: Matching, max_width: int = 240) -> str:
    """Monospaced diagram with a label row and a node-index row."""
    if m.n == 0:
        return "(empty matching)"
    word = m.word
    two_n = 2 * m.n
    labels = [str(a) for a in word]
    indices = [str(k) for k in range(1, two_n + 1)]
    cell = max(max(len(s) for s in labels),
               max(len(s) for s in indices)) + 2
    width = (two_n - 1) * cell + max(len(labels[-1]), len(indices[-1]))
    if width > max_width:
        raise ValueError(
            f"diagram needs {width} columns (limit {max_width}); "
            f"use the comma word form instead")

    def col(node: int) -> int:
        return (node - 1) * cell

    # smaller arcs first so every arc clears the ones nested below it
    heights: dict[tuple[int, int], int] = {}
    for e in sorted(m.edges, key=lambda e: (e[1] - e[0], e[0])):
        h = 1
        for f, hf in heights.items():
            if not (e[1] < f[0] or f[1] < e[0]):
                h = max(h, hf + 1)
        heights[e] = h

    lines = []
    for h in range(max(heights.values()), 0, -1):
        row = [" "] * width
        for (i, j), he in heights.items():
            if he == h:
                row[col(i)] = "."
                row[col(j)] = "."
                for c in range(col(i) + 1, col(j)):
                    row[c] = "-"
        for (i, j), he in heights.items():
            if he > h:
                row[col(i)] = "|"
                row[col(j)] = "|"
        lines.append("".join(row).rstrip())
    for texts in (labels, indices):
        row = [" "] * width
        for node, s in enumerate(texts, start=1):
            for k, ch in enumerate(s):
                row[col(node) + k] = ch
        lines.append("".join(row).rstrip())
    return "\n".join(lines)
