from __future__ import annotations

import random
from itertools import combinations

import pytest

from qgrass.laurent import LaurentInt
from qgrass.postnikov import (
    BOTTOM_TURN,
    GAMMA_TURN,
    HORIZONTAL,
    VERTICAL,
    all_paths,
    box_vertex,
    build_graph,
    col_vertex,
    enumerate_disjoint_systems,
    enumerate_paths,
    enumerate_systems,
    exists_disjoint_system,
    find_disjoint_system,
    path_weight,
    row_vertex,
    system_permutation,
    system_weight,
    to_dot,
    topological_order,
    turn_weight,
    turns,
)
from qgrass.shapes import InvalidInput, LeDiagram, Partition, enumerate_le_diagrams, partitions_in_box

q = LaurentInt.q(1)


def box_diagrams(rows, cols):
    for shape in partitions_in_box(rows, cols):
        yield from enumerate_le_diagrams(shape)


def sample_4x4(count=40, seed=3):
    rng = random.Random(seed)
    shapes = [s for s in partitions_in_box(4, 4) if s.size() >= 6]
    out = []
    for _ in range(count):
        out.append(rng.choice(enumerate_le_diagrams(rng.choice(shapes))))
    return out


def test_all_black_graph_has_no_edges():
    shape = Partition((3, 2))
    g = build_graph(LeDiagram(shape, frozenset(shape.boxes())))
    assert g.edges() == []
    assert g.vertices() == [row_vertex(1), row_vertex(2), col_vertex(1), col_vertex(2), col_vertex(3)]


def test_row_exit_edge():
    g = build_graph(LeDiagram(Partition((3, 2, 1))))
    assert g.succ[row_vertex(1)] == [box_vertex((1, 3))]
    assert g.weight[(row_vertex(1), box_vertex((1, 3)))] == g.torus.gen((1, 3))


def test_edge_weights_follow_construction():
    for d in sample_4x4():
        g = build_graph(d)
        for u, v in g.edges():
            w, kind = g.weight[(u, v)], g.kind[(u, v)]
            if kind == VERTICAL:
                assert w == g.torus.one()
                assert u[0] == "b" and (v[0] == "c" or v[2] == u[2])
            elif u[0] == "r":
                assert w == g.torus.gen((v[1], v[2]))
            else:
                assert w == g.torus.word(((u[1], u[2]), -1), ((v[1], v[2]), 1))


def test_example_path_lists(hook_diagram):
    g = build_graph(hook_diagram)
    assert len(enumerate_paths(g, 2, 1)) == 2
    (hook,) = enumerate_paths(g, 3, 1)
    assert hook == (row_vertex(3), box_vertex((3, 3)), box_vertex((3, 2)), box_vertex((3, 1)),
                    box_vertex((4, 1)), col_vertex(1))
    assert enumerate_paths(g, 4, 2) == []


def test_example_path_weight(hook_diagram):
    g = build_graph(hook_diagram)
    p = (row_vertex(2), box_vertex((2, 3)), box_vertex((3, 3)), box_vertex((3, 2)), box_vertex((3, 1)),
         box_vertex((4, 1)), col_vertex(1))
    t = g.torus
    assert path_weight(g, p) == t.word(((2, 3), 1), ((3, 3), -1), ((3, 1), 1))
    assert path_weight(g, (box_vertex((3, 1)), box_vertex((4, 1)), col_vertex(1))) == t.one()
    assert path_weight(g, (row_vertex(3), box_vertex((3, 3)), box_vertex((3, 2)))) == t.gen((3, 2))


def test_example_turns(hook_diagram):
    g = build_graph(hook_diagram)
    p = (row_vertex(2), box_vertex((2, 3)), box_vertex((3, 3)), box_vertex((3, 2)), col_vertex(2))
    assert turns(g, p) == [(GAMMA_TURN, (2, 3)), (BOTTOM_TURN, (3, 3)), (GAMMA_TURN, (3, 2))]
    assert turns(g, (row_vertex(1), box_vertex((1, 4)), col_vertex(4))) == [(GAMMA_TURN, (1, 4))]


def test_example_disjoint_systems(hook_diagram):
    g = build_graph(hook_diagram)
    assert exists_disjoint_system(g, (1, 4), (1, 4))
    assert not exists_disjoint_system(g, (2, 3), (1, 2))
    assert exists_disjoint_system(g, (), ())
    (s,) = enumerate_disjoint_systems(g, (1, 4), (1, 4))
    assert system_permutation(s) == ((2, 1), 1)
    assert system_weight(g, s) == g.torus.word(((1, 4), 1), ((4, 1), 1))
    assert enumerate_disjoint_systems(g, (2, 3), (1, 2)) == []
    assert find_disjoint_system(g, (2, 3), (1, 2)) is None


def test_size_mismatch_rejected(hook_diagram):
    g = build_graph(hook_diagram)
    with pytest.raises(InvalidInput):
        exists_disjoint_system(g, (1, 2), (1,))
    with pytest.raises(InvalidInput):
        enumerate_disjoint_systems(g, (1,), ())


def test_identity_system_has_no_inversions():
    g = build_graph(LeDiagram(Partition((2, 2))))
    for s in enumerate_disjoint_systems(g, (1, 2), (1, 2)):
        assert system_permutation(s) == ((1, 2), 0)


def test_graphs_are_acyclic_and_planar():
    for d in list(box_diagrams(3, 3)) + sample_4x4():
        g = build_graph(d)
        assert len(topological_order(g)) == len(g.vertices())
        # boundary vertices sit just past the end of their row or column
        col_len = {j: sum(1 for p in d.shape.parts if p >= j) for j in range(1, g.cols + 1)}
        vertical, horizontal = [], []
        for u, v in g.edges():
            if g.kind[(u, v)] == VERTICAL:
                vertical.append((u[2], u[1], col_len[u[2]] + 1 if v[0] == "c" else v[1]))
            else:
                horizontal.append((v[1], v[2], d.shape.row_length(v[1]) + 1 if u[0] == "r" else u[2]))
        for j, i1, i2 in vertical:
            for i, j1, j2 in horizontal:
                assert not (i1 < i < i2 and j1 < j < j2), "edges cross away from a vertex"


def test_internal_horizontal_paths():
    for d in sample_4x4():
        g = build_graph(d)
        for i, j2 in d.white:
            for i_, j1 in d.white:
                if i_ == i and j1 < j2:
                    for p in all_paths(g, box_vertex((i, j2)), box_vertex((i, j1))):
                        if all(g.kind[e] == HORIZONTAL for e in zip(p, p[1:])):
                            assert path_weight(g, p) == g.torus.word(((i, j2), -1), ((i, j1), 1))


def _cols(g, e):
    u, v = e
    return (None if u[0] == "r" else u[2]), v[2]


def _expected_exponent(g, e, f):
    """Exponent c with w(f) w(e) = q^c w(e) w(f) from the case table, or None when not covered."""
    c1e, c2e = _cols(g, e)
    c1f, c2f = _cols(g, f)
    ce, cf = {c1e, c2e} - {None}, {c1f, c2f} - {None}
    same_row = e[1][1] == f[1][1]
    shared = len(ce & cf)
    if shared == 0:
        return 0
    if shared == 2:
        return 2
    if (c1e is not None and c1e == c1f) or c2e == c2f:
        return 1
    if not same_row and (c1e == c2f or (c1f is not None and c2e == c1f)):
        return -1
    if same_row and c2f == c1e:
        return -1
    return None


def test_horizontal_edge_commutation_table():
    checked = 0
    for d in sample_4x4(60):
        g = build_graph(d)
        hor = [e for e in g.edges() if g.kind[e] == HORIZONTAL]
        for e in hor:
            for f in hor:
                if e == f or f[1][1] > e[1][1]:
                    continue
                c = _expected_exponent(g, e, f)
                if c is None:
                    continue
                we, wf = g.weight[e], g.weight[f]
                assert wf * we == (we * wf) * LaurentInt.q(c), (d, e, f, c)
                checked += 1
    assert checked > 500


def _every_path(g):
    paths = []
    for start in g.vertices():
        stack = [(start,)]
        while stack:
            p = stack.pop()
            if len(p) > 1:
                paths.append(p)
            for v in g.succ.get(p[-1], ()):
                stack.append(p + (v,))
    return paths


def test_concatenated_path_commutation():
    diagrams = list(box_diagrams(3, 3))[::7] + sample_4x4(10)
    for d in diagrams:
        g = build_graph(d)
        paths = _every_path(g)
        ending = {}
        for p in paths:
            ending.setdefault(p[-1], []).append(p)
        for L in paths:
            for K in ending.get(L[0], ()):
                wk, wl = path_weight(g, K), path_weight(g, L)
                k_h = any(g.kind[e] == HORIZONTAL for e in zip(K, K[1:]))
                l_h = any(g.kind[e] == HORIZONTAL for e in zip(L, L[1:]))
                if k_h and l_h:
                    assert wk * wl == (wl * wk) * LaurentInt.q(-1)
                else:
                    assert wk * wl == wl * wk


def _adjacent_paths_meet(s) -> bool:
    return any(set(a) & set(b) for a, b in zip(s.paths, s.paths[1:]))


def test_overlapping_systems_need_not_overlap_in_adjacent_paths():
    # On rectangles two consecutive paths of an overlapping system always meet.
    # On the staircase-like shape (3,3,2) the sink of column 3 sits between the
    # row-2 and row-3 sources, so the middle path can slip out untouched.
    g = build_graph(LeDiagram(Partition((3, 3, 2))))
    systems = [s for s in enumerate_systems(g, (1, 2, 3), (1, 2, 3), disjoint_only=False) if not s.disjoint]
    loose = [s for s in systems if not _adjacent_paths_meet(s)]
    assert loose
    p1, p2, p3 = loose[0].paths
    assert set(p1) & set(p3) and not set(p1) & set(p2) and not set(p2) & set(p3)


def test_exhaustive_path_and_system_properties():
    for d in box_diagrams(3, 3):
        g = build_graph(d)
        for i in range(1, g.rows + 1):
            for j in range(1, g.cols + 1):
                for p in enumerate_paths(g, i, j):
                    kinds = [k for k, _ in turns(g, p)]
                    assert len(kinds) % 2 == 1
                    assert kinds == [GAMMA_TURN if s % 2 == 0 else BOTTOM_TURN for s in range(len(kinds))]
                    assert path_weight(g, p) == turn_weight(g, p)
        for t in range(0, min(g.rows, g.cols) + 1):
            for I in combinations(range(1, g.rows + 1), t):
                for J in combinations(range(1, g.cols + 1), t):
                    disjoint = enumerate_disjoint_systems(g, I, J)
                    assert bool(disjoint) == exists_disjoint_system(g, I, J)
                    assert len({s.permutation for s in disjoint}) <= 1
                    footprints = {frozenset((k, b) for p in s.paths for k, b in turns(g, p)) for s in disjoint}
                    assert len(footprints) == len(disjoint)
                    if len(set(d.shape.parts)) == 1:
                        for s in enumerate_systems(g, I, J, disjoint_only=False):
                            if not s.disjoint:
                                assert _adjacent_paths_meet(s)
                    assert {s.paths for s in disjoint} == {
                        s.paths for s in enumerate_systems(g, I, J, disjoint_only=False) if s.disjoint
                    }


def test_dot_export(hook_diagram):
    dot = to_dot(build_graph(hook_diagram))
    assert dot.startswith("digraph Post {")
    assert '"r_1" -> "b_1_4" [label="1*q^0 * t[1,4]"];' in dot
    assert '"b_4_1" -> "c_1";' in dot
    assert '"b_1_2" -> "b_1_1" [label="1*q^1 * t[1,1]t[1,2]^-1"];' in dot
