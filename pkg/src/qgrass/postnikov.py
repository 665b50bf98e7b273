"""Weighted planar graphs built from Le diagrams, their paths, and disjoint path systems.

Vertices are tagged tuples: ``("b", i, j)`` for the white box (i, j),
``("r", i)`` for the source attached to row i and ``("c", j)`` for the sink
below column j.  Every edge points west (horizontal) or south (vertical),
which is why the graph has no directed cycles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterator, Sequence

from qgrass.shapes import Box, InvalidInput, LeDiagram
from qgrass.torus import QuantumTorus, TorusElement

Vertex = Hashable
Path = tuple[Vertex, ...]

HORIZONTAL = "h"
VERTICAL = "v"
GAMMA_TURN = "Γ"
BOTTOM_TURN = "⊥"


def row_vertex(i: int) -> Vertex:
    return ("r", i)


def col_vertex(j: int) -> Vertex:
    return ("c", j)


def box_vertex(box: Box) -> Vertex:
    return ("b", box[0], box[1])


def vertex_name(v: Vertex) -> str:
    return "_".join(str(x) for x in v)


@dataclass(frozen=True)
class PostnikovGraph:
    diagram: LeDiagram
    torus: QuantumTorus
    succ: dict  # vertex -> successors, horizontal first
    kind: dict  # (u, v) -> HORIZONTAL | VERTICAL
    weight: dict  # (u, v) -> TorusElement
    sources: tuple  # vertex for each row, in row order
    sinks: tuple  # vertex for each column, in column order

    @property
    def rows(self) -> int:
        return len(self.sources)

    @property
    def cols(self) -> int:
        return len(self.sinks)

    def vertices(self) -> list[Vertex]:
        boxes = [box_vertex(b) for b in self.diagram.white]
        return list(self.sources) + boxes + list(self.sinks)

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        return [(u, v) for u in self.vertices() for v in self.succ.get(u, ())]

    def source(self, i: int) -> Vertex:
        if not 1 <= i <= self.rows:
            raise InvalidInput(f"row {i} is outside 1..{self.rows}")
        return self.sources[i - 1]

    def sink(self, j: int) -> Vertex:
        if not 1 <= j <= self.cols:
            raise InvalidInput(f"column {j} is outside 1..{self.cols}")
        return self.sinks[j - 1]

    def relabeled(self, sources: Sequence[Vertex], sinks: Sequence[Vertex]) -> PostnikovGraph:
        """Same graph with the boundary vertices renamed, row by row and column by column."""
        ren = dict(zip(self.sources, sources))
        ren.update(zip(self.sinks, sinks))

        def r(v):
            return ren.get(v, v)

        return PostnikovGraph(
            self.diagram,
            self.torus,
            {r(u): [r(v) for v in vs] for u, vs in self.succ.items()},
            {(r(u), r(v)): k for (u, v), k in self.kind.items()},
            {(r(u), r(v)): w for (u, v), w in self.weight.items()},
            tuple(sources),
            tuple(sinks),
        )


def build_graph(diagram: LeDiagram) -> PostnikovGraph:
    torus = QuantumTorus.of(diagram)
    shape = diagram.shape
    succ: dict[Vertex, list[Vertex]] = {}
    kind: dict[tuple[Vertex, Vertex], str] = {}
    weight: dict[tuple[Vertex, Vertex], TorusElement] = {}

    def add(u, v, k, w):
        succ.setdefault(u, []).append(v)
        kind[(u, v)] = k
        weight[(u, v)] = w

    white = set(diagram.white)
    for i in range(1, shape.rows + 1):
        row = [j for j in range(1, shape.row_length(i) + 1) if (i, j) in white]
        if row:
            add(row_vertex(i), box_vertex((i, row[-1])), HORIZONTAL, torus.gen((i, row[-1])))
    for i, j in diagram.white:
        left = [k for k in range(1, j) if (i, k) in white]
        if left:
            w = torus.word(((i, j), -1), ((i, left[-1]), 1))
            add(box_vertex((i, j)), box_vertex((i, left[-1])), HORIZONTAL, w)
        below = [k for k in range(i + 1, shape.rows + 1) if (k, j) in white]
        target = box_vertex((below[0], j)) if below else col_vertex(j)
        add(box_vertex((i, j)), target, VERTICAL, torus.one())
    return PostnikovGraph(
        diagram,
        torus,
        succ,
        kind,
        weight,
        tuple(row_vertex(i) for i in range(1, shape.rows + 1)),
        tuple(col_vertex(j) for j in range(1, shape.cols + 1)),
    )


def topological_order(g: PostnikovGraph) -> list[Vertex]:
    """Kahn's algorithm; raises if a directed cycle is present."""
    indeg = {v: 0 for v in g.vertices()}
    for _, v in g.edges():
        indeg[v] += 1
    queue = deque(v for v, d in indeg.items() if d == 0)
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in g.succ.get(u, ()):
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    if len(order) != len(indeg):
        raise RuntimeError("graph has a directed cycle")
    return order


def iter_paths(g: PostnikovGraph, start: Vertex, targets, blocked=frozenset()) -> Iterator[Path]:
    """Depth-first enumeration of paths from ``start`` into ``targets`` avoiding ``blocked``."""
    if start in blocked:
        return
    stack = [start]

    def walk(u):
        if u in targets:
            yield tuple(stack)
            return
        for v in g.succ.get(u, ()):
            if v not in blocked:
                stack.append(v)
                yield from walk(v)
                stack.pop()

    yield from walk(start)


def all_paths(g: PostnikovGraph, start: Vertex, end: Vertex) -> list[Path]:
    return list(iter_paths(g, start, {end}))


def enumerate_paths(g: PostnikovGraph, i: int, j: int) -> list[Path]:
    """All paths from the row-i source to the column-j sink."""
    return all_paths(g, g.source(i), g.sink(j))


def path_edges(p: Path) -> list[tuple[Vertex, Vertex]]:
    return list(zip(p, p[1:]))


def path_weight(g: PostnikovGraph, p: Path) -> TorusElement:
    out = g.torus.one()
    for e in path_edges(p):
        out = out * g.weight[e]
    return out


def turns(g: PostnikovGraph, p: Path) -> list[tuple[str, Box]]:
    """Corners of a path: horizontal-then-vertical is a Γ turn, vertical-then-horizontal a ⊥ turn."""
    out = []
    for a, v, b in zip(p, p[1:], p[2:]):
        k_in, k_out = g.kind[(a, v)], g.kind[(v, b)]
        if k_in == HORIZONTAL and k_out == VERTICAL:
            out.append((GAMMA_TURN, (v[1], v[2])))
        elif k_in == VERTICAL and k_out == HORIZONTAL:
            out.append((BOTTOM_TURN, (v[1], v[2])))
    return out


def turn_weight(g: PostnikovGraph, p: Path) -> TorusElement:
    """Alternating product of the corner generators, Γ corners to the power 1 and ⊥ corners to -1."""
    return g.torus.word(*((box, 1 if k == GAMMA_TURN else -1) for k, box in turns(g, p)))


@dataclass(frozen=True)
class PathSystem:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    paths: tuple[Path, ...]
    permutation: tuple[int, ...]  # permutation[s] = 1-based position in cols of path s's sink
    disjoint: bool

    def vertex_lists(self) -> list[list[str]]:
        return [[vertex_name(v) for v in p] for p in self.paths]


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])


def system_permutation(s: PathSystem) -> tuple[tuple[int, ...], int]:
    return s.permutation, inversions(s.permutation)


def _check_pair(g: PostnikovGraph, rows: Sequence[int], cols: Sequence[int]):
    rows, cols = tuple(sorted(rows)), tuple(sorted(cols))
    if len(rows) != len(cols):
        raise InvalidInput(f"row set {list(rows)} and column set {list(cols)} differ in size")
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise InvalidInput("row and column sets must not repeat entries")
    for i in rows:
        g.source(i)
    for j in cols:
        g.sink(j)
    return rows, cols


def _make_system(g, rows, cols, paths, disjoint) -> PathSystem:
    sink_pos = {g.sink(j): k for k, j in enumerate(cols, 1)}
    return PathSystem(rows, cols, tuple(paths), tuple(sink_pos[p[-1]] for p in paths), disjoint)


def max_disjoint_paths(g: PostnikovGraph, starts: Sequence[Vertex], ends: Sequence[Vertex]) -> list[Path]:
    """A largest family of vertex-disjoint paths from ``starts`` to ``ends``.

    Unit-capacity max flow on the split graph (each vertex becomes an
    in-node and an out-node joined by a capacity-one arc), augmented by
    breadth-first search.  Sources and sinks are matched in any order.
    """
    src, snk = object(), object()
    cap: dict = {}

    def arc(u, v):
        cap[(u, v)] = cap.get((u, v), 0) + 1
        cap.setdefault((v, u), 0)

    adj: dict = {}
    for v in g.vertices():
        arc((v, 0), (v, 1))
    for u, v in g.edges():
        arc((u, 1), (v, 0))
    for s in starts:
        arc(src, (s, 0))
    for t in ends:
        arc((t, 1), snk)
    for u, v in cap:
        adj.setdefault(u, []).append(v)

    flow = 0
    while True:
        parent = {src: None}
        queue = deque([src])
        while queue and snk not in parent:
            u = queue.popleft()
            for v in adj.get(u, ()):
                if v not in parent and cap[(u, v)] > 0:
                    parent[v] = u
                    queue.append(v)
        if snk not in parent:
            break
        v = snk
        while parent[v] is not None:
            u = parent[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1

    used = {(u, v) for u, v in g.edges() if cap[((u, 1), (v, 0))] == 0}
    end_set = set(ends)
    paths = []
    for s in starts:
        if cap.get((src, (s, 0))) != 0:
            continue
        p, u = [s], s
        while u not in end_set:
            u = next(v for v in g.succ.get(u, ()) if (u, v) in used)
            p.append(u)
        paths.append(tuple(p))
    assert len(paths) == flow
    return paths


def find_disjoint_system(g: PostnikovGraph, rows: Sequence[int], cols: Sequence[int]) -> PathSystem | None:
    rows, cols = _check_pair(g, rows, cols)
    paths = max_disjoint_paths(g, [g.source(i) for i in rows], [g.sink(j) for j in cols])
    if len(paths) < len(rows):
        return None
    return _make_system(g, rows, cols, paths, True)


def exists_disjoint_system(g: PostnikovGraph, rows: Sequence[int], cols: Sequence[int]) -> bool:
    return find_disjoint_system(g, rows, cols) is not None


def enumerate_systems(
    g: PostnikovGraph, rows: Sequence[int], cols: Sequence[int], disjoint_only: bool = True
) -> list[PathSystem]:
    """Path systems from the given rows to the given columns, by backtracking.

    With ``disjoint_only`` the vertices already used by earlier paths are
    blocked; otherwise every bijective choice of paths is produced.
    """
    rows, cols = _check_pair(g, rows, cols)
    sink_of = {g.sink(j): j for j in cols}
    out: list[PathSystem] = []
    chosen: list[Path] = []

    def rec(s: int, free_sinks: frozenset, occupied: frozenset):
        if s == len(rows):
            paths = tuple(chosen)
            flat = [v for p in paths for v in p]
            out.append(_make_system(g, rows, cols, paths, len(flat) == len(set(flat))))
            return
        blocked = occupied if disjoint_only else frozenset()
        for p in iter_paths(g, g.source(rows[s]), free_sinks, blocked):
            chosen.append(p)
            rec(s + 1, free_sinks - {p[-1]}, occupied | set(p))
            chosen.pop()

    rec(0, frozenset(sink_of), frozenset())
    return out


def enumerate_disjoint_systems(g: PostnikovGraph, rows: Sequence[int], cols: Sequence[int]) -> list[PathSystem]:
    return enumerate_systems(g, rows, cols, disjoint_only=True)


def system_weight(g: PostnikovGraph, s: PathSystem) -> TorusElement:
    out = g.torus.one()
    for p in s.paths:
        out = out * path_weight(g, p)
    return out


def to_dot(g: PostnikovGraph) -> str:
    lines = ["digraph Post {", "  rankdir=LR;"]
    for v in g.vertices():
        shape = "box" if v[0] == "b" else "circle"
        lines.append(f'  "{vertex_name(v)}" [shape={shape}];')
    for u, v in g.edges():
        if g.kind[(u, v)] == HORIZONTAL:
            lines.append(f'  "{vertex_name(u)}" -> "{vertex_name(v)}" [label="{g.weight[(u, v)]}"];')
        else:
            lines.append(f'  "{vertex_name(u)}" -> "{vertex_name(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
