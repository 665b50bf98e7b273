"""Exhaustive consistency suites shared by the command line and the test-suite.

Each suite takes the grassmannian parameters (m, n).  Suites about Le
diagrams range over every partition fitting the m x (n-m) box, which is the
same family of shapes that indexes H-primes for (m, n).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from qgrass.pathmatrix import (
    lgv_rhs,
    path_matrix,
    path_matrix_minor,
    path_matrix_minor_by_columns,
    restore_entries,
)
from qgrass.positroid import (
    all_keys,
    hprime_poset,
    is_grassmann_necklace,
    is_matroid,
    is_separating,
    key_necklace,
    member,
    member_by_rows_and_columns,
    necklace_leq,
    plucker_set,
    polynormal_sequence,
    positroid_bases,
    zero_ideal_key,
)
from qgrass.postnikov import build_graph, enumerate_disjoint_systems, exists_disjoint_system
from qgrass.qmatrix import LAPLACE_MODES, QMatrixAlgebra, ore_identity_holds, plucker_relation_lhs
from qgrass.shapes import InvalidInput, all_index_sets, enumerate_le_diagrams, partitions_in_box


@dataclass
class SuiteResult:
    suite: str
    m: int
    n: int
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, what) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(what)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "m": self.m,
            "n": self.n,
            "passed": self.passed,
            "failed": self.failed,
            "failures": self.failures,
        }


def box_diagrams(rows: int, cols: int):
    for shape in partitions_in_box(rows, cols):
        yield from enumerate_le_diagrams(shape)


def index_pairs(rows: int, cols: int, max_size: int | None = None) -> Iterator[tuple[tuple, tuple]]:
    top = min(rows, cols) if max_size is None else min(rows, cols, max_size)
    for t in range(top + 1):
        for I in combinations(range(1, rows + 1), t):
            for J in combinations(range(1, cols + 1), t):
                yield I, J


def _describe(d) -> str:
    return f"shape={list(d.shape.parts)} black={sorted(d.black)}"


def suite_lgv(m: int, n: int) -> SuiteResult:
    """Minor identities on path matrices, and vanishing against flow and enumeration."""
    res = SuiteResult("lgv", m, n)
    for d in box_diagrams(m, n - m):
        g = build_graph(d)
        M = path_matrix(g)
        for I, J in index_pairs(g.rows, g.cols):
            minor = path_matrix_minor(M, I, J)
            tag = f"{_describe(d)} I={list(I)} J={list(J)}"
            res.record(minor == lgv_rhs(g, I, J), f"lgv {tag}")
            res.record(minor == path_matrix_minor_by_columns(M, I, J), f"column form {tag}")
            flow = exists_disjoint_system(g, I, J)
            res.record(minor.is_zero() == (not flow), f"vanishing {tag}")
            res.record(bool(enumerate_disjoint_systems(g, I, J)) == flow, f"flow vs enumeration {tag}")
    return res


def suite_restore(m: int, n: int) -> SuiteResult:
    res = SuiteResult("restore", m, n)
    for d in box_diagrams(m, n - m):
        res.record(restore_entries(d) == path_matrix(d), _describe(d))
    return res


def suite_laplace(m: int, n: int) -> SuiteResult:
    """Every Laplace mode against the defining sum, for minors of size at most 3."""
    res = SuiteResult("laplace", m, n)
    rows, cols = m, n - m
    for shape in partitions_in_box(rows, cols):
        alg = QMatrixAlgebra(rows, cols, shape)
        for I, J in index_pairs(rows, cols, 3):
            if not I:
                continue
            ref = alg.minor(I, J)
            for mode in LAPLACE_MODES:
                res.record(alg.laplace_expand(I, J, mode) == ref, f"{mode} shape={list(shape.parts)} {I}|{J}")
    return res


def plucker_instances(m: int, n: int) -> Iterator[tuple[tuple, tuple, tuple]]:
    cols = range(1, n + 1)
    for s1 in range(m + 1):
        for s2 in range(m + 1):
            k = 2 * m - s1 - s2
            if k <= m or k > n:
                continue
            for J1 in combinations(cols, s1):
                for J2 in combinations(cols, s2):
                    for K in combinations(cols, k):
                        yield J1, J2, K


def suite_plucker(m: int, n: int, sample: int | None = None, seed: int = 0) -> SuiteResult:
    res = SuiteResult("plucker", m, n)
    instances = list(plucker_instances(m, n))
    if sample is not None and sample < len(instances):
        instances = random.Random(seed).sample(instances, sample)
    for J1, J2, K in instances:
        res.record(plucker_relation_lhs(m, n, J1, J2, K).is_zero(), f"J1={list(J1)} J2={list(J2)} K={list(K)}")
    return res


def suite_ore(m: int, n: int, max_d: int = 5) -> SuiteResult:
    res = SuiteResult("ore", m, n)
    rows, cols = m, n - m
    for i, j, k, l in (
        (i, j, k, l)
        for i in range(1, rows + 1)
        for j in range(1, cols + 1)
        for k in range(i + 1, rows + 1)
        for l in range(j + 1, cols + 1)
    ):
        for d in range(1, max_d + 1):
            res.record(ore_identity_holds(i, j, k, l, d), f"({i},{j}) ({k},{l}) d={d}")
    return res


def suite_necklace(m: int, n: int) -> SuiteResult:
    """Necklace axiom, union-of-blocks identity, and the two separating clauses."""
    res = SuiteResult("necklace", m, n)
    keys = all_keys(m, n)
    for key in keys:
        tag = key.to_json()
        neck = key_necklace(key)
        res.record(is_grassmann_necklace(neck, n), f"axiom {tag}")
        res.record(set(polynormal_sequence(key)) == plucker_set(key), f"union {tag}")
        res.record(is_separating(key, keys), f"separating {tag}")
    return res


def suite_matroid(m: int, n: int) -> SuiteResult:
    res = SuiteResult("matroid", m, n)
    for key in all_keys(m, n):
        res.record(is_matroid(positroid_bases(key)), key.to_json())
    return res


def suite_poset(m: int, n: int) -> SuiteResult:
    """Necklace order against inclusion, labelling agreement, injectivity, and the bottom."""
    res = SuiteResult("poset", m, n)
    keys = all_keys(m, n)
    psets = [plucker_set(k) for k in keys]
    necks = [key_necklace(k) for k in keys]
    for a in range(len(keys)):
        for b in range(len(keys)):
            res.record(
                necklace_leq(necks[a], necks[b], n) == (psets[a] <= psets[b]),
                f"order {keys[a].to_json()} {keys[b].to_json()}",
            )
    for key in keys:
        for alpha in all_index_sets(m, n):
            res.record(member(key, alpha) == member_by_rows_and_columns(key, alpha), f"labels {key.to_json()} {alpha}")
    res.record(len(set(psets)) == len(keys), "distinct keys give distinct Plucker sets")
    by_neck, by_incl = hprime_poset(m, n, "necklace"), hprime_poset(m, n, "inclusion")
    res.record(by_neck.relation == by_incl.relation, "necklace poset equals inclusion poset")
    res.record(by_neck.hasse_edges == by_incl.hasse_edges, "Hasse diagrams agree")
    bottoms = by_neck.bottoms()
    res.record(
        len(bottoms) == 1 and by_neck.nodes[bottoms[0]] == zero_ideal_key(m, n) and not psets[bottoms[0]],
        "unique bottom is the zero ideal",
    )
    return res


SUITES: dict[str, Callable[[int, int], SuiteResult]] = {
    "lgv": suite_lgv,
    "restore": suite_restore,
    "laplace": suite_laplace,
    "plucker": suite_plucker,
    "ore": suite_ore,
    "necklace": suite_necklace,
    "matroid": suite_matroid,
    "poset": suite_poset,
}


def run_suite(name: str, m: int, n: int) -> SuiteResult:
    if name not in SUITES:
        raise InvalidInput(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if not 1 <= m < n:
        raise InvalidInput(f"need 1 <= m < n, got m={m}, n={n}")
    return SUITES[name](m, n)
