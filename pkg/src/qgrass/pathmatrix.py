"""Path matrices over quantum tori, their pseudo minors, and the restoration recursion."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from qgrass.laurent import neg_q_power
from qgrass.postnikov import (
    PostnikovGraph,
    build_graph,
    enumerate_disjoint_systems,
    enumerate_paths,
    exists_disjoint_system,
    inversions,
    system_weight,
    path_weight,
)
from qgrass.shapes import InvalidInput, LeDiagram
from qgrass.torus import QuantumTorus, TorusElement


@dataclass(frozen=True)
class TorusMatrix:
    torus: QuantumTorus
    rows: int
    cols: int
    entries: dict

    def __getitem__(self, ij: tuple[int, int]) -> TorusElement:
        i, j = ij
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise InvalidInput(f"entry ({i},{j}) is outside a {self.rows}x{self.cols} matrix")
        return self.entries[(i, j)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TorusMatrix):
            return NotImplemented
        return (self.torus, self.rows, self.cols) == (other.torus, other.rows, other.cols) and all(
            self.entries[k] == other.entries[k] for k in self.entries
        )

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries.values())

    def to_rows(self) -> list[list[str]]:
        return [[str(self.entries[(i, j)]) for j in range(1, self.cols + 1)] for i in range(1, self.rows + 1)]


def _graph(diagram_or_graph) -> PostnikovGraph:
    return diagram_or_graph if isinstance(diagram_or_graph, PostnikovGraph) else build_graph(diagram_or_graph)


def path_matrix(diagram: LeDiagram | PostnikovGraph) -> TorusMatrix:
    """Entry (i, j) is the total weight of all paths from row i to column j."""
    g = _graph(diagram)
    entries = {}
    for i in range(1, g.rows + 1):
        for j in range(1, g.cols + 1):
            total = g.torus.zero()
            for p in enumerate_paths(g, i, j):
                total = total + path_weight(g, p)
            entries[(i, j)] = total
    return TorusMatrix(g.torus, g.rows, g.cols, entries)


def _check_minor(M: TorusMatrix, rows: Sequence[int], cols: Sequence[int]):
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise InvalidInput(f"row set {list(rows)} and column set {list(cols)} differ in size")
    if list(rows) != sorted(set(rows)) or list(cols) != sorted(set(cols)):
        raise InvalidInput("row and column indices must be strictly increasing")
    for i in rows:
        if not 1 <= i <= M.rows:
            raise InvalidInput(f"row {i} is outside 1..{M.rows}")
    for j in cols:
        if not 1 <= j <= M.cols:
            raise InvalidInput(f"column {j} is outside 1..{M.cols}")
    return rows, cols


def path_matrix_minor(M: TorusMatrix, rows: Sequence[int], cols: Sequence[int]) -> TorusElement:
    """Sum over permutations s of (-q)^inv(s) M[i_1, j_s(1)] ... M[i_t, j_s(t)]."""
    rows, cols = _check_minor(M, rows, cols)
    total = M.torus.zero()
    for perm in permutations(range(len(rows))):
        term = M.torus.one() * neg_q_power(inversions(perm))
        for a, b in enumerate(perm):
            term = term * M[rows[a], cols[b]]
            if term.is_zero():
                break
        total = total + term
    return total


def path_matrix_minor_by_columns(M: TorusMatrix, rows: Sequence[int], cols: Sequence[int]) -> TorusElement:
    """Sum over permutations s of (-q)^inv(s) M[i_s(1), j_1] ... M[i_s(t), j_t]."""
    rows, cols = _check_minor(M, rows, cols)
    total = M.torus.zero()
    for perm in permutations(range(len(rows))):
        term = M.torus.one() * neg_q_power(inversions(perm))
        for b, a in enumerate(perm):
            term = term * M[rows[a], cols[b]]
            if term.is_zero():
                break
        total = total + term
    return total


def lgv_rhs(diagram: LeDiagram | PostnikovGraph, rows: Sequence[int], cols: Sequence[int]) -> TorusElement:
    """Signed total weight of the vertex-disjoint path systems from ``rows`` to ``cols``."""
    g = _graph(diagram)
    systems = enumerate_disjoint_systems(g, rows, cols)
    total = g.torus.zero()
    if not systems:
        return total
    perms = {s.permutation for s in systems}
    if len(perms) != 1:
        raise AssertionError(f"disjoint systems carry different permutations {sorted(perms)}")
    for s in systems:
        total = total + system_weight(g, s)
    return total * neg_q_power(inversions(systems[0].permutation))


def restore_entries(diagram: LeDiagram) -> TorusMatrix:
    """Run the box-by-box restoration sweep starting from the torus generators.

    Start with ``chi[i,j] = t[i,j]`` on white boxes and 0 on black ones.  At
    each white box (a, b), visited in lexicographic order, every entry strictly
    north-west of it gains ``chi[i,b] t[a,b]^-1 t[a,j]``.
    """
    torus = QuantumTorus.of(diagram)
    shape = diagram.shape
    rows, cols = shape.rows, shape.cols
    chi = {
        (i, j): torus.gen((i, j)) if diagram.is_white((i, j)) else torus.zero()
        for i in range(1, rows + 1)
        for j in range(1, cols + 1)
    }
    for a, b in shape.boxes():
        if not diagram.is_white((a, b)):
            continue
        inv = torus.gen((a, b), -1)
        for i in range(1, a):
            for j in range(1, b):
                if diagram.is_white((a, j)) and not chi[(i, b)].is_zero():
                    chi[(i, j)] = chi[(i, j)] + chi[(i, b)] * inv * torus.gen((a, j))
    return TorusMatrix(torus, rows, cols, chi)


def minor_vanishes(diagram: LeDiagram | PostnikovGraph, rows: Sequence[int], cols: Sequence[int]) -> bool:
    return path_matrix_minor(path_matrix(diagram), rows, cols).is_zero()


def minor_vanishes_by_flow(diagram: LeDiagram | PostnikovGraph, rows: Sequence[int], cols: Sequence[int]) -> bool:
    return not exists_disjoint_system(_graph(diagram), rows, cols)
