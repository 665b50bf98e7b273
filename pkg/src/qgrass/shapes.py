"""Partitions, Le diagrams, and the dictionary between index sets and Young diagrams.

Boxes are 1-based ``(row, column)`` pairs, rows counted from the top and
columns from the left.  Tuples compare lexicographically, which is exactly
the box order used throughout the package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

Box = tuple[int, int]
IndexSet = tuple[int, ...]


class InvalidInput(ValueError):
    """Raised when user-supplied data violates a structural invariant."""


def index_set(values: Iterable[int], m: int | None = None, n: int | None = None) -> IndexSet:
    """Normalise ``values`` into a sorted tuple, checking size and range when given."""
    out = tuple(sorted(values))
    if len(set(out)) != len(out):
        raise InvalidInput(f"repeated entries in index set {list(values)}")
    if m is not None and len(out) != m:
        raise InvalidInput(f"index set {list(out)} must have {m} elements")
    if n is not None and out and (out[0] < 1 or out[-1] > n):
        raise InvalidInput(f"index set {list(out)} must lie in 1..{n}")
    return out


def all_index_sets(m: int, n: int) -> list[IndexSet]:
    """All m-subsets of 1..n in lexicographic order."""
    return list(combinations(range(1, n + 1), m))


def componentwise_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p <= 0 for p in parts):
            raise InvalidInput(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidInput(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def trimmed(cls, parts: Iterable[int]) -> Partition:
        return cls(tuple(p for p in parts if p))

    @property
    def rows(self) -> int:
        return len(self.parts)

    @property
    def cols(self) -> int:
        return self.parts[0] if self.parts else 0

    def __len__(self) -> int:
        return len(self.parts)

    def row_length(self, i: int) -> int:
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, box: Box) -> bool:
        i, j = box
        return 1 <= i <= self.rows and 1 <= j <= self.row_length(i)

    def boxes(self) -> list[Box]:
        return [(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def size(self) -> int:
        return sum(self.parts)

    def fits(self, rows: int, cols: int) -> bool:
        return self.rows <= rows and self.cols <= cols


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """Every partition fitting a rows x cols rectangle, the empty one first."""
    out: list[Partition] = []

    def grow(prefix: list[int], bound: int):
        out.append(Partition(tuple(prefix)))
        if len(prefix) == rows:
            return
        for p in range(1, bound + 1):
            prefix.append(p)
            grow(prefix, p)
            prefix.pop()

    grow([], cols)
    return sorted(out, key=lambda p: (p.size(), p.parts))


def _check_boxes(shape: Partition, black: Iterable[Box]) -> frozenset[Box]:
    boxes = frozenset((int(i), int(j)) for i, j in black)
    outside = sorted(b for b in boxes if not shape.contains(b))
    if outside:
        raise InvalidInput(f"boxes {outside} lie outside the shape {shape.parts}")
    return boxes


def _le_ok_at(box: Box, black: frozenset[Box]) -> bool:
    i, j = box
    return all((i, k) in black for k in range(1, j)) or all((k, j) in black for k in range(1, i))


def validate_le(shape: Partition, black: Iterable[Box]) -> bool:
    """True iff every black box has an all-black row to its left or column above it."""
    blk = _check_boxes(shape, black)
    return all(_le_ok_at(b, blk) for b in blk)


@dataclass(frozen=True)
class LeDiagram:
    shape: Partition
    black: frozenset[Box] = field(default_factory=frozenset)

    def __post_init__(self):
        blk = _check_boxes(self.shape, self.black)
        object.__setattr__(self, "black", blk)
        bad = sorted(b for b in blk if not _le_ok_at(b, blk))
        if bad:
            raise InvalidInput(f"Le condition fails at black boxes {bad}")

    def is_white(self, box: Box) -> bool:
        return self.shape.contains(box) and box not in self.black

    @property
    def white(self) -> list[Box]:
        return [b for b in self.shape.boxes() if b not in self.black]

    def sort_key(self):
        return (len(self.black), sorted(self.black))


def enumerate_le_diagrams(shape: Partition) -> list[LeDiagram]:
    """All Le diagrams on ``shape``, by number of black boxes then by sorted black list.

    Boxes are coloured in lexicographic order; the Le test at a box only
    looks at earlier boxes, so each partial colouring extends cleanly.
    """
    boxes = shape.boxes()
    found: list[frozenset[Box]] = []
    black: set[Box] = set()

    def walk(k: int):
        if k == len(boxes):
            found.append(frozenset(black))
            return
        walk(k + 1)
        box = boxes[k]
        i, j = box
        if all((i, c) in black for c in range(1, j)) or all((r, j) in black for r in range(1, i)):
            black.add(box)
            walk(k + 1)
            black.discard(box)

    walk(0)
    found.sort(key=lambda s: (len(s), sorted(s)))
    return [LeDiagram(shape, s) for s in found]


def gamma_to_partition(m: int, n: int, gamma: Sequence[int]) -> Partition:
    gamma = index_set(gamma, m, n)
    return Partition.trimmed(n - m - (g - i) for i, g in enumerate(gamma, 1))


def partition_to_gamma(m: int, n: int, shape: Partition) -> IndexSet:
    """Label the south-east border of the shape from the north-east corner; keep vertical steps."""
    if not shape.fits(m, n - m):
        raise InvalidInput(f"shape {shape.parts} does not fit a {m}x{n - m} box")
    row, col, gamma = 0, n - m, []
    for step in range(1, n + 1):
        if row < m and col == shape.row_length(row + 1):
            gamma.append(step)
            row += 1
        else:
            col -= 1
    return tuple(gamma)


def complement(gamma: Sequence[int], n: int) -> IndexSet:
    s = set(gamma)
    return tuple(a for a in range(1, n + 1) if a not in s)


def ladder(m: int, n: int, gamma: Sequence[int]) -> list[Box]:
    """Boxes (i, j) with j beyond gamma_{m+1-i} and j not in gamma."""
    gamma = index_set(gamma, m, n)
    gs = set(gamma)
    return [(i, j) for i in range(1, m + 1) for j in range(gamma[m - i] + 1, n + 1) if j not in gs]


def ladder_box_bijection(m: int, n: int, gamma: Sequence[int]) -> dict[Box, Box]:
    """Map each ladder box (i, a_j) to the Young-diagram box (m+1-i, n-m+1-j)."""
    gamma = index_set(gamma, m, n)
    pos = {a: j for j, a in enumerate(complement(gamma, n), 1)}
    return {(i, a): (m + 1 - i, n - m + 1 - pos[a]) for i, a in ladder(m, n, gamma)}


def enumerate_hprime_keys(m: int, n: int) -> list[tuple[IndexSet, LeDiagram]]:
    """Pairs (gamma, diagram) over all m-subsets gamma, excluding the irrelevant ideal."""
    if not 1 <= m < n:
        raise InvalidInput(f"need 1 <= m < n, got m={m}, n={n}")
    return [
        (gamma, d)
        for gamma in all_index_sets(m, n)
        for d in enumerate_le_diagrams(gamma_to_partition(m, n, gamma))
    ]


def diagram_to_json(m: int, n: int, gamma: Sequence[int], diagram: LeDiagram) -> dict:
    return {
        "m": m,
        "n": n,
        "gamma": list(gamma),
        "black": [list(b) for b in sorted(diagram.black)],
    }


def diagram_from_json(data: dict | str) -> tuple[int, int, IndexSet, LeDiagram]:
    """Parse a keyed diagram, checking that gamma fits (m, n) and the Le condition."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"malformed JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidInput("a keyed diagram must be a JSON object")
    missing = [k for k in ("m", "n", "gamma", "black") if k not in data]
    if missing:
        raise InvalidInput(f"keyed diagram is missing fields {missing}")
    m, n = data["m"], data["n"]
    if not (isinstance(m, int) and isinstance(n, int) and 1 <= m < n):
        raise InvalidInput(f"need integers 1 <= m < n, got m={m!r}, n={n!r}")
    gamma = index_set(data["gamma"], m, n)
    shape = gamma_to_partition(m, n, gamma)
    try:
        black = [tuple(b) for b in data["black"]]
    except TypeError as exc:
        raise InvalidInput("black must be a list of [row, column] pairs") from exc
    if any(len(b) != 2 or not all(isinstance(x, int) for x in b) for b in black):
        raise InvalidInput("black must be a list of [row, column] pairs")
    return m, n, gamma, LeDiagram(shape, frozenset(black))

