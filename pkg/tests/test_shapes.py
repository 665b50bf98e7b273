from __future__ import annotations

from itertools import chain, combinations

import pytest

from qgrass.shapes import (
    InvalidInput,
    LeDiagram,
    Partition,
    all_index_sets,
    complement,
    diagram_from_json,
    diagram_to_json,
    enumerate_hprime_keys,
    enumerate_le_diagrams,
    gamma_to_partition,
    ladder,
    ladder_box_bijection,
    partition_to_gamma,
    partitions_in_box,
    validate_le,
)


def subsets(items):
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def test_validate_le_examples():
    assert validate_le(Partition((4, 3, 1)), {(1, 3), (2, 1), (2, 2)})
    assert validate_le(Partition((3, 2)), set())
    assert not validate_le(Partition((2, 2)), {(2, 2)})


def test_validate_le_rejects_outside_boxes():
    with pytest.raises(InvalidInput):
        validate_le(Partition((2, 1)), {(2, 2)})


def test_le_diagram_constructor_enforces_condition():
    with pytest.raises(InvalidInput):
        LeDiagram(Partition((2, 2)), frozenset({(2, 2)}))


def test_partition_rejects_bad_parts():
    with pytest.raises(InvalidInput):
        Partition((1, 2))
    with pytest.raises(InvalidInput):
        Partition((2, 0))


@pytest.mark.parametrize(
    "m,n,gamma,parts",
    [(3, 6, (1, 3, 5), (3, 2, 1)), (4, 8, (1, 3, 4, 7), (4, 3, 3, 1)), (2, 4, (3, 4), ()), (3, 7, (5, 6, 7), ())],
)
def test_gamma_to_partition(m, n, gamma, parts):
    assert gamma_to_partition(m, n, gamma).parts == parts
    assert partition_to_gamma(m, n, Partition(parts)) == gamma


def test_gamma_partition_round_trip():
    for n in range(2, 9):
        for m in range(1, min(n, 5)):
            for gamma in all_index_sets(m, n):
                shape = gamma_to_partition(m, n, gamma)
                assert partition_to_gamma(m, n, shape) == gamma
            for shape in partitions_in_box(m, n - m):
                assert gamma_to_partition(m, n, partition_to_gamma(m, n, shape)) == shape


def test_complement_count_formula_agrees():
    for m, n in [(2, 5), (3, 6), (4, 8)]:
        for gamma in all_index_sets(m, n):
            lam = gamma_to_partition(m, n, gamma)
            for i, g in enumerate(gamma, 1):
                gaps = sum(1 for a in range(1, g) if a not in gamma)
                assert lam.row_length(i) == n - m - gaps


def test_ladder_of_worked_example():
    boxes = ladder(4, 8, (1, 3, 4, 7))
    assert boxes == [(1, 8), (2, 5), (2, 6), (2, 8), (3, 5), (3, 6), (3, 8), (4, 2), (4, 5), (4, 6), (4, 8)]
    bij = ladder_box_bijection(4, 8, (1, 3, 4, 7))
    assert bij[(4, 2)] == (1, 4) and bij[(4, 8)] == (1, 1) and bij[(1, 8)] == (4, 1)
    assert sorted(bij.values()) == Partition((4, 3, 3, 1)).boxes()


def test_ladder_of_smallest_gamma_is_full_grid():
    assert ladder(2, 5, (1, 2)) == [(i, j) for i in (1, 2) for j in (3, 4, 5)]


def test_ladder_bijection_is_invertible():
    for m, n in [(2, 5), (3, 6)]:
        for gamma in all_index_sets(m, n):
            bij = ladder_box_bijection(m, n, gamma)
            inverse = {v: k for k, v in bij.items()}
            assert len(inverse) == len(bij)
            assert sorted(bij.values()) == gamma_to_partition(m, n, gamma).boxes()
            comp = complement(gamma, n)
            for (i, a), (r, c) in bij.items():
                assert inverse[(r, c)] == (i, a)
                assert a == comp[n - m - c]


def test_enumerate_small_shapes():
    assert [d.black for d in enumerate_le_diagrams(Partition(()))] == [frozenset()]
    assert [sorted(d.black) for d in enumerate_le_diagrams(Partition((1,)))] == [[], [(1, 1)]]


def test_enumeration_matches_brute_force():
    for shape in partitions_in_box(3, 3):
        boxes = shape.boxes()
        brute = {frozenset(s) for s in subsets(boxes) if validate_le(shape, s)}
        found = enumerate_le_diagrams(shape)
        assert {d.black for d in found} == brute
        assert len(found) == len(brute)


def test_enumeration_order():
    found = enumerate_le_diagrams(Partition((2, 2)))
    keys = [(len(d.black), sorted(d.black)) for d in found]
    assert keys == sorted(keys)
    assert found[0].black == frozenset()
    assert found[-1].black == frozenset(Partition((2, 2)).boxes())


def test_hprime_keys():
    keys = enumerate_hprime_keys(1, 2)
    assert [(g, sorted(d.black)) for g, d in keys] == [((1,), []), ((1,), [(1, 1)]), ((2,), [])]
    keys24 = enumerate_hprime_keys(2, 4)
    assert len(keys24) == sum(len(enumerate_le_diagrams(gamma_to_partition(2, 4, g))) for g in all_index_sets(2, 4))
    assert len({(g, d.black) for g, d in keys24}) == len(keys24)


def test_json_round_trip():
    for gamma, d in enumerate_hprime_keys(2, 4):
        data = diagram_to_json(2, 4, gamma, d)
        assert diagram_from_json(data) == (2, 4, gamma, d)


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"m":2,"n":4,"gamma":[1,2]}',
        '{"m":2,"n":4,"gamma":[1,5],"black":[]}',
        '{"m":2,"n":4,"gamma":[1,2],"black":[[2,2]]}',
        '{"m":2,"n":4,"gamma":[1,2],"black":[[3,1]]}',
        '{"m":4,"n":2,"gamma":[1,2],"black":[]}',
    ],
)
def test_json_rejects_bad_input(text):
    with pytest.raises(InvalidInput):
        diagram_from_json(text)
