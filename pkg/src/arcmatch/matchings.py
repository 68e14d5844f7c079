"""Perfect matchings on [2n] in canonical word form.

A matching pairs the nodes 1..2n; each pair (i, j) with i < j is an arc
drawn above the number line, i its opener and j its closer.  The canonical
word labels the arcs 1, 2, ... in the order their openers appear, so
"123123" is the matching whose three arcs mutually cross and "1122" is two
arcs side by side.  A pattern is a word in the same normal form whose
letters may also occur just once; a matching contains a pattern when some
subsequence of its word is order-isomorphic to it.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class WordError(ValueError):
    """A matching or pattern word failed validation."""


def parse_labels(text: str) -> tuple[int, ...]:
    """Parse a word given as digits ("1212") or comma-separated ("1,2,1,2")."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        labels = []
        for pos, part in enumerate(text.split(","), start=1):
            part = part.strip()
            if not part.isdigit():
                raise WordError(f"position {pos}: {part!r} is not a label")
            labels.append(int(part))
        return tuple(labels)
    labels = []
    for pos, ch in enumerate(text, start=1):
        if not ch.isdigit() or ch == "0":
            raise WordError(f"position {pos}: {ch!r} is not a digit 1-9")
        labels.append(int(ch))
    return tuple(labels)


def format_word(labels: Iterable[int]) -> str:
    """Digit form for labels up to 9, comma-separated beyond that."""
    labels = tuple(labels)
    if labels and max(labels) > 9:
        return ",".join(str(a) for a in labels)
    return "".join(str(a) for a in labels)


def _check_word(word: Sequence[int], *, complete: bool) -> None:
    # canonical normal form: first occurrences are 1, 2, 3, ... in order,
    # every label occurs once or twice (exactly twice when complete)
    count: dict[int, int] = {}
    where: dict[int, int] = {}
    next_new = 1
    for pos, a in enumerate(word, start=1):
        if a < 1:
            raise WordError(f"position {pos}: label {a} is not positive")
        c = count.get(a, 0)
        if c == 0:
            if a != next_new:
                raise WordError(
                    f"position {pos}: first occurrence of {a} out of order "
                    f"(expected {next_new})")
            next_new += 1
            where[a] = pos
        elif c == 2:
            raise WordError(f"position {pos}: label {a} occurs more than twice")
        count[a] = c + 1
    if complete:
        for a, c in count.items():
            if c != 2:
                raise WordError(
                    f"position {where[a]}: label {a} occurs only once")


class Pattern:
    """A pattern word, letters occurring once or twice, in normal form."""

    __slots__ = ("word", "letter_count", "_plan")

    def __init__(self, word: Iterable[int]):
        word = tuple(int(a) for a in word)
        _check_word(word, complete=False)
        self.word = word
        self.letter_count = max(word) if word else 0
        # per letter: its slots in the pattern, plus the positions of
        # smaller letters before/after each slot (the order constraints the
        # matcher has to re-check when this letter gets bound)
        plan = []
        for letter in range(1, self.letter_count + 1):
            entries = []
            for pi, a in enumerate(word):
                if a == letter:
                    earlier = tuple(q for q in range(pi) if word[q] < letter)
                    later = tuple(q for q in range(pi + 1, len(word))
                                  if word[q] < letter)
                    entries.append((pi, earlier, later))
            plan.append(tuple(entries))
        self._plan = tuple(plan)

    @classmethod
    def from_text(cls, text: str) -> "Pattern":
        return cls(parse_labels(text))

    def __str__(self) -> str:
        return format_word(self.word)

    def __repr__(self) -> str:
        return f"Pattern({format_word(self.word)!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Pattern) and self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)


PATTERN_12312 = Pattern((1, 2, 3, 1, 2))
PATTERN_121323 = Pattern((1, 2, 1, 3, 2, 3))


def word_contains(word: Sequence[int], pattern: Pattern) -> bool:
    """Does the matching word contain the pattern as an order-isomorphic
    subsequence?

    Backtracks over bindings of pattern letters to word letters (equal
    pattern letters must use both slots of one word letter); order
    constraints are checked incrementally from the pattern's precomputed
    plan.
    """
    pword = pattern.word
    if not pword:
        return True
    wlen = len(word)
    if wlen < len(pword):
        return False
    n = wlen // 2
    letters = pattern.letter_count
    if letters > n:
        return False
    first = [0] * (n + 1)
    second = [0] * (n + 1)
    for i, a in enumerate(word):
        if first[a]:
            second[a] = i + 1
        else:
            first[a] = i + 1
    ppos = [0] * len(pword)
    plan = pattern._plan

    def bind(letter: int, lo: int) -> bool:
        entries = plan[letter - 1]
        hi = n - (letters - letter)
        for x in range(lo, hi + 1):
            if len(entries) == 1:
                cands = ((first[x],), (second[x],))
            else:
                cands = ((first[x], second[x]),)
            for cand in cands:
                ok = True
                for (pi, earlier, later), p in zip(entries, cand):
                    for q in earlier:
                        if ppos[q] >= p:
                            ok = False
                            break
                    if ok:
                        for q in later:
                            if ppos[q] <= p:
                                ok = False
                                break
                    if not ok:
                        break
                    ppos[pi] = p
                if ok and (letter == letters or bind(letter + 1, x + 1)):
                    return True
        return False

    return bind(1, 1)


def insert_word(word: Sequence[int], s: int, t: int) -> tuple[int, ...]:
    """Insert a new arc opening at position s and closing at position t.

    Position s is the gap just after node s, so valid positions run from 1
    to 2n.  The result is renormalized to canonical form.
    """
    length = len(word)
    if not 1 <= s <= t <= length:
        raise ValueError(
            f"insertion positions must satisfy 1 <= s <= t <= {length}, "
            f"got ({s}, {t})")
    grown = list(word[:s]) + [0] + list(word[s:t]) + [0] + list(word[t:])
    relabel: dict[int, int] = {}
    out = []
    for a in grown:
        if a not in relabel:
            relabel[a] = len(relabel) + 1
        out.append(relabel[a])
    return tuple(out)


def _edges_of_word(word: Sequence[int]) -> tuple[Edge, ...]:
    opener: dict[int, int] = {}
    edges = []
    for pos, a in enumerate(word, start=1):
        if a in opener:
            edges.append((opener.pop(a), pos))
        else:
            opener[a] = pos
    edges.sort()
    return tuple(edges)


def edges_cross(e: Edge, f: Edge) -> bool:
    """Two arcs cross when they interleave: i < a < j < b either way round."""
    i, j = e
    a, b = f
    return i < a < j < b or a < i < b < j


class Matching:
    """An immutable perfect matching on [2n].

    Edges are kept sorted by opener, so the arc at index k carries the
    canonical label k + 1.
    """

    __slots__ = ("edges", "_word")

    def __init__(self, edges: Iterable[Edge] = (), *, _trusted: bool = False):
        if _trusted:
            self.edges = tuple(edges)
        else:
            self.edges = tuple(sorted((int(i), int(j)) for i, j in edges))
            self._check()
        self._word = None

    def _check(self) -> None:
        seen = set()
        for i, j in self.edges:
            if not i < j:
                raise ValueError(f"edge ({i}, {j}) is not an opener/closer pair")
            seen.add(i)
            seen.add(j)
        if seen and (len(seen) != 2 * len(self.edges)
                     or min(seen) != 1 or max(seen) != 2 * len(self.edges)):
            raise ValueError("edges do not cover 1..2n exactly once")

    @classmethod
    def from_word(cls, word: str | Iterable[int]) -> "Matching":
        labels = parse_labels(word) if isinstance(word, str) else tuple(word)
        _check_word(labels, complete=True)
        m = cls(_edges_of_word(labels), _trusted=True)
        m._word = labels
        return m

    @property
    def n(self) -> int:
        return len(self.edges)

    @property
    def word(self) -> tuple[int, ...]:
        if self._word is None:
            labels = [0] * (2 * len(self.edges))
            for k, (i, j) in enumerate(self.edges, start=1):
                labels[i - 1] = k
                labels[j - 1] = k
            self._word = tuple(labels)
        return self._word

    def word_text(self) -> str:
        return format_word(self.word)

    def __str__(self) -> str:
        return self.word_text()

    def __repr__(self) -> str:
        return f"Matching.from_word({self.word_text()!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matching) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)

    def contains(self, pattern: Pattern) -> bool:
        return word_contains(self.word, pattern)

    def avoids(self, *patterns: Pattern) -> bool:
        return not any(self.contains(p) for p in patterns)

    def crossing_count(self) -> int:
        edges = self.edges
        total = 0
        for a in range(len(edges)):
            j = edges[a][1]
            for b in range(a + 1, len(edges)):
                i2, j2 = edges[b]
                if i2 < j < j2:
                    total += 1
        return total

    def critical_edge(self) -> Edge | None:
        """The crossing edge of E = (j, 2n) whose closer is rightmost,
        or None when nothing crosses E.  Undefined on the empty matching."""
        if not self.edges:
            raise ValueError("the empty matching has no closing edge")
        last = self._edge_closing(2 * self.n)
        best = None
        for e in self.edges:
            if e is not last and edges_cross(e, last):
                if best is None or e[1] > best[1]:
                    best = e
        return best

    def _edge_closing(self, node: int) -> Edge:
        for e in self.edges:
            if e[1] == node:
                return e
        raise ValueError(f"node {node} is not a closer")

    def insert_edge(self, s: int, t: int) -> "Matching":
        """New matching with an extra arc opened at position s and closed at
        position t (positions are gaps after nodes, 1-based)."""
        word = insert_word(self.word, s, t)
        m = Matching(_edges_of_word(word), _trusted=True)
        m._word = word
        return m

    def delete_edge(self, label: int) -> "Matching":
        """Remove the arc with the given canonical label and renumber."""
        if not 1 <= label <= self.n:
            raise ValueError(f"no arc labeled {label}")
        keep = [e for k, e in enumerate(self.edges, start=1) if k != label]
        nodes = sorted(x for e in keep for x in e)
        rank = {x: r for r, x in enumerate(nodes, start=1)}
        return Matching((rank[i], rank[j]) for i, j in keep)

    def active_sites(self, pattern: Pattern) -> list[int]:
        """Positions where a new last-opening edge can start safely.

        A position s qualifies if it lies at or after the final opener (so
        the inserted edge opens after every existing edge) and some closer
        position t >= s makes the enlarged matching still avoid the
        pattern.  Growing matchings one last-opening edge at a time is
        what makes every larger avoider reachable exactly once: removing
        the last-opening edge is the inverse step.  The empty matching has
        no positions at all, hence no active sites.
        """
        word = self.word
        length = len(word)
        if not length:
            return []
        seen: set[int] = set()
        last_opener = 1
        for pos, letter in enumerate(word, start=1):
            if letter not in seen:
                seen.add(letter)
                last_opener = pos
        sites = []
        for s in range(last_opener, length + 1):
            for t in range(s, length + 1):
                if not word_contains(insert_word(word, s, t), pattern):
                    sites.append(s)
                    break
        return sites


def enumerate_matchings(n: int) -> Iterator[Matching]:
    """All perfect matchings on [2n]: the smallest unmatched node is paired
    with each larger unmatched node in turn, so the stream is deterministic."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def rec(unmatched: tuple[int, ...], acc: list[Edge]) -> Iterator[Matching]:
        if not unmatched:
            yield Matching(tuple(acc), _trusted=True)
            return
        i = unmatched[0]
        for k in range(1, len(unmatched)):
            acc.append((i, unmatched[k]))
            yield from rec(unmatched[1:k] + unmatched[k + 1:], acc)
            acc.pop()

    return rec(tuple(range(1, 2 * n + 1)), [])


def avoiders(n: int, patterns: Iterable[Pattern]) -> Iterator[Matching]:
    """The matchings on [2n] avoiding every given pattern."""
    patterns = tuple(patterns)
    stream = enumerate_matchings(n)
    return (m for m in stream if m.avoids(*patterns))
