"""Plucker sets, positroids, Grassmann necklaces and the containment poset of H-primes.

An H-prime of the quantum grassmannian of m-planes in n-space is keyed
either by a pair ``(gamma, diagram)``, where ``diagram`` is a Le diagram on
the Young diagram of ``gamma``, or by the irrelevant ideal.  Everything here
is decided by path existence in the graph of the diagram, so no
noncommutative arithmetic is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import networkx as nx

from qgrass.postnikov import PostnikovGraph, build_graph, exists_disjoint_system, max_disjoint_paths
from qgrass.shapes import (
    IndexSet,
    InvalidInput,
    LeDiagram,
    all_index_sets,
    complement,
    componentwise_leq,
    diagram_from_json,
    diagram_to_json,
    enumerate_hprime_keys,
    enumerate_le_diagrams,
    gamma_to_partition,
    index_set,
)


class ConsistencyError(RuntimeError):
    """An internal invariant failed; this points at a bug or at corrupted input."""


@dataclass(frozen=True)
class HPrimeKey:
    m: int
    n: int
    gamma: IndexSet | None
    diagram: LeDiagram | None = None

    def __post_init__(self):
        if self.gamma is None:
            return
        shape = gamma_to_partition(self.m, self.n, self.gamma)
        if self.diagram.shape != shape:
            raise InvalidInput(f"diagram shape {self.diagram.shape.parts} does not match gamma {list(self.gamma)}")

    @classmethod
    def irrelevant(cls, m: int, n: int) -> HPrimeKey:
        return cls(m, n, None, None)

    @property
    def is_irrelevant(self) -> bool:
        return self.gamma is None

    def to_json(self) -> dict:
        if self.is_irrelevant:
            return {"m": self.m, "n": self.n, "irrelevant": True}
        return diagram_to_json(self.m, self.n, self.gamma, self.diagram)


def all_keys(m: int, n: int, include_irrelevant: bool = False) -> list[HPrimeKey]:
    keys = [HPrimeKey(m, n, g, d) for g, d in enumerate_hprime_keys(m, n)]
    if include_irrelevant:
        keys.append(HPrimeKey.irrelevant(m, n))
    return keys


def zero_ideal_key(m: int, n: int) -> HPrimeKey:
    gamma = tuple(range(1, m + 1))
    return HPrimeKey(m, n, gamma, LeDiagram(gamma_to_partition(m, n, gamma)))


@lru_cache(maxsize=4096)
def _graph(diagram: LeDiagram) -> PostnikovGraph:
    return build_graph(diagram)


def alpha_decompose(gamma: Sequence[int], alpha: Sequence[int]) -> tuple[IndexSet, IndexSet]:
    """Split alpha against gamma into (removed from gamma, added to gamma), both ascending."""
    gamma, alpha = tuple(gamma), tuple(alpha)
    if len(gamma) != len(alpha) or not componentwise_leq(gamma, alpha):
        raise InvalidInput(f"{list(alpha)} is not componentwise above {list(gamma)}")
    if alpha == gamma:
        raise InvalidInput("alpha must differ from gamma")
    removed = tuple(sorted(set(gamma) - set(alpha)))
    added = tuple(sorted(set(alpha) - set(gamma)))
    if len(removed) != len(added) or not all(a > r for r, a in zip(removed, added)):
        raise ConsistencyError(f"pairing of {removed} with {added} is not increasing")
    return removed, added


def _matrix_labels(m: int, n: int, gamma: IndexSet, removed, added) -> tuple[list[int], list[int]]:
    pos_gamma = {g: i for i, g in enumerate(gamma, 1)}
    pos_comp = {a: j for j, a in enumerate(complement(gamma, n), 1)}
    rows = sorted(pos_gamma[g] for g in removed)
    cols = sorted(n - m + 1 - pos_comp[a] for a in added)
    return rows, cols


def member_by_rows_and_columns(key: HPrimeKey, alpha: Sequence[int]) -> bool:
    """Membership read off the graph with its boundary labelled by matrix rows and columns."""
    alpha = _prepare(key, alpha)
    if isinstance(alpha, bool):
        return alpha
    removed, added = alpha_decompose(key.gamma, alpha)
    rows, cols = _matrix_labels(key.m, key.n, key.gamma, removed, added)
    return not exists_disjoint_system(_graph(key.diagram), rows, cols)


@lru_cache(maxsize=4096)
def relabeled_graph(m: int, n: int, gamma: IndexSet, diagram: LeDiagram) -> PostnikovGraph:
    """The graph with row i renamed to gamma_i and column j renamed to a_{n-m+1-j}."""
    g = _graph(diagram)
    comp = complement(gamma, n)
    sources = [("gamma", gamma[i - 1]) for i in range(1, g.rows + 1)]
    sinks = [("a", comp[n - m - j]) for j in range(1, g.cols + 1)]
    return g.relabeled(sources, sinks)


def _prepare(key: HPrimeKey, alpha: Sequence[int]):
    alpha = index_set(alpha, key.m, key.n)
    if key.is_irrelevant:
        return True
    if not componentwise_leq(key.gamma, alpha):
        return True
    if alpha == key.gamma:
        return False
    return alpha


def relabeled_witness(key: HPrimeKey, alpha: Sequence[int]):
    """A disjoint path family in the relabelled graph certifying non-membership, or None."""
    alpha = _prepare(key, alpha)
    if isinstance(alpha, bool):
        return None if alpha else []
    removed, added = alpha_decompose(key.gamma, alpha)
    g = relabeled_graph(key.m, key.n, key.gamma, key.diagram)
    starts = [("gamma", x) for x in removed]
    ends = [("a", x) for x in added]
    present = set(g.sources) | set(g.sinks)
    missing = [v for v in starts + ends if v not in present]
    if missing:
        raise ConsistencyError(f"boundary labels {missing} are absent from the graph")
    paths = max_disjoint_paths(g, starts, ends)
    return paths if len(paths) == len(starts) else None


def member(key: HPrimeKey, alpha: Sequence[int]) -> bool:
    """Whether the Plucker coordinate [alpha] lies in the H-prime keyed by ``key``."""
    return relabeled_witness(key, alpha) is None


@lru_cache(maxsize=8192)
def plucker_set(key: HPrimeKey) -> frozenset[IndexSet]:
    return frozenset(a for a in all_index_sets(key.m, key.n) if member(key, a))


def below_gamma_set(key: HPrimeKey) -> frozenset[IndexSet]:
    """The coordinates that are not componentwise above gamma."""
    return frozenset(a for a in all_index_sets(key.m, key.n) if not componentwise_leq(key.gamma, a))


def positroid_bases(key: HPrimeKey) -> frozenset[IndexSet]:
    return frozenset(all_index_sets(key.m, key.n)) - plucker_set(key)


def is_matroid(bases: Iterable[Sequence[int]]) -> bool:
    """Basis exchange: for I, J bases and i in I some j in J makes (I - i) + j a basis."""
    bases = {frozenset(b) for b in bases}
    if not bases:
        raise InvalidInput("a matroid needs at least one basis")
    if len({len(b) for b in bases}) != 1:
        raise InvalidInput("bases must all have the same size")
    for I in bases:
        for J in bases:
            for i in I:
                rest = I - {i}
                if not any(rest | {j} in bases for j in J):
                    return False
    return True


def _shifted(i: int, n: int, A: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted((x - i) % n for x in A))


def i_leq(i: int, A: Sequence[int], B: Sequence[int], n: int) -> bool:
    """The cyclic order starting at i: compare sorted shifted sets componentwise."""
    return componentwise_leq(_shifted(i, n, A), _shifted(i, n, B))


Necklace = tuple[IndexSet, ...]


def necklace(pset: Iterable[Sequence[int]], m: int, n: int) -> Necklace:
    """For each i, the basis of the complement that is below every other basis in the i-order."""
    pset = {tuple(a) for a in pset}
    bases = [a for a in all_index_sets(m, n) if a not in pset]
    if not bases:
        raise ConsistencyError("the Plucker set contains every coordinate; no necklace exists")
    out = []
    for i in range(1, n + 1):
        smallest = min(bases, key=lambda a: _shifted(i, n, a))
        if not all(i_leq(i, smallest, b, n) for b in bases):
            raise ConsistencyError(f"no global minimum for the {i}-order among {len(bases)} bases")
        out.append(smallest)
    return tuple(out)


def is_grassmann_necklace(neck: Sequence[Sequence[int]], n: int) -> bool:
    if len(neck) != n:
        return False
    for i in range(1, n + 1):
        cur, nxt = set(neck[i - 1]), set(neck[i % n])
        if i in cur:
            base = cur - {i}
            if not (base <= nxt and len(nxt - base) == 1):
                return False
        elif cur != nxt:
            return False
    return True


def necklace_leq(small: Necklace, big: Necklace, n: int) -> bool:
    return all(i_leq(i, small[i - 1], big[i - 1], n) for i in range(1, n + 1))


def key_necklace(key: HPrimeKey) -> Necklace:
    return necklace(plucker_set(key), key.m, key.n)


@dataclass
class HPrimePoset:
    nodes: list[HPrimeKey]
    relation: set[tuple[int, int]]  # (a, b): nodes[a] strictly below nodes[b]
    hasse_edges: list[tuple[int, int]]

    def to_json(self) -> dict:
        return {"nodes": [k.to_json() for k in self.nodes], "hasse_edges": [list(e) for e in self.hasse_edges]}

    def to_dot(self) -> str:
        lines = ["digraph HPrimes {", "  rankdir=BT;"]
        for idx, k in enumerate(self.nodes):
            if k.is_irrelevant:
                label = "irrelevant"
            else:
                label = "".join(map(str, k.gamma)) + " " + ",".join(f"{i}{j}" for i, j in sorted(k.diagram.black))
            lines.append(f'  n{idx} [label="{label.strip()}"];')
        for a, b in self.hasse_edges:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def bottoms(self) -> list[int]:
        below = {b for _, b in self.relation}
        return [i for i in range(len(self.nodes)) if i not in below]


def hprime_poset(m: int, n: int, by: str = "necklace") -> HPrimePoset:
    """All H-primes ordered by inclusion, decided by necklaces or by Plucker sets."""
    keys = all_keys(m, n)
    if by == "necklace":
        necks = [key_necklace(k) for k in keys]

        def leq(a, b):
            return necklace_leq(necks[a], necks[b], n)
    elif by == "inclusion":
        psets = [plucker_set(k) for k in keys]

        def leq(a, b):
            return psets[a] <= psets[b]
    else:
        raise InvalidInput(f"unknown poset construction {by!r}")
    top = len(keys)
    relation = {(a, b) for a in range(top) for b in range(top) if a != b and leq(a, b)}
    relation |= {(a, top) for a in range(top)}
    graph = nx.DiGraph()
    graph.add_nodes_from(range(top + 1))
    graph.add_edges_from(relation)
    hasse = sorted(nx.transitive_reduction(graph).edges())
    return HPrimePoset(keys + [HPrimeKey.irrelevant(m, n)], relation, hasse)


def separating_set(key: HPrimeKey) -> Necklace:
    return key_necklace(key)


def is_separating(key: HPrimeKey, others: Iterable[HPrimeKey]) -> bool:
    """No generator lies in the key's Plucker set, and every H-prime not inside it meets one."""
    entries = separating_set(key)
    mine = plucker_set(key)
    if any(e in mine for e in entries):
        return False
    for other in others:
        theirs = plucker_set(other)
        if not theirs <= mine and not any(e in theirs for e in entries):
            return False
    return True


def polynormal_sequence(key: HPrimeKey, dedupe: bool = False) -> list[IndexSet]:
    """Concatenate, for i = 1..n, the coordinates not above the i-th necklace entry in the i-order.

    Each block is listed in a linear extension of the i-order (smallest first).
    """
    neck = key_necklace(key)
    n = key.n
    out: list[IndexSet] = []
    for i in range(1, n + 1):
        block = [J for J in all_index_sets(key.m, n) if not i_leq(i, neck[i - 1], J, n)]
        block.sort(key=lambda J: (sum(_shifted(i, n, J)), _shifted(i, n, J)))
        out.extend(block)
    if dedupe:
        seen: set = set()
        out = [J for J in out if not (J in seen or seen.add(J))]
    return out


def pset_to_json(pset: Iterable[Sequence[int]]) -> list[list[int]]:
    return [list(a) for a in sorted(tuple(sorted(a)) for a in pset)]


def hprime_count(m: int, n: int) -> int:
    """Number of H-primes, including the irrelevant ideal."""
    return 1 + sum(len(enumerate_le_diagrams(gamma_to_partition(m, n, g))) for g in all_index_sets(m, n))


def pset_from_json(data, m: int, n: int) -> frozenset[IndexSet]:
    if not isinstance(data, list):
        raise InvalidInput("a Plucker set must be a JSON array of index arrays")
    return frozenset(index_set(a, m, n) for a in data)


def necklace_from_json(data, m: int, n: int) -> Necklace:
    if not isinstance(data, list) or len(data) != n:
        raise InvalidInput(f"a necklace must be a JSON array of {n} index arrays")
    neck = tuple(index_set(a, m, n) for a in data)
    if not is_grassmann_necklace(neck, n):
        raise InvalidInput("the entries do not form a Grassmann necklace")
    return neck


def key_from_json(data: dict) -> HPrimeKey:
    if isinstance(data, dict) and data.get("irrelevant"):
        return HPrimeKey.irrelevant(data["m"], data["n"])
    m, n, gamma, diagram = diagram_from_json(data)
    return HPrimeKey(m, n, gamma, diagram)


def poset_from_json(data: dict) -> tuple[list[HPrimeKey], list[tuple[int, int]]]:
    if not isinstance(data, dict) or "nodes" not in data or "hasse_edges" not in data:
        raise InvalidInput("a poset must be an object with nodes and hasse_edges")
    nodes = [key_from_json(k) for k in data["nodes"]]
    edges = [(int(a), int(b)) for a, b in data["hasse_edges"]]
    if any(not (0 <= a < len(nodes) and 0 <= b < len(nodes)) for a, b in edges):
        raise InvalidInput("Hasse edge refers to a missing node")
    return nodes, edges
