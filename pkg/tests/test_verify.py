from __future__ import annotations

import pytest

from qgrass.shapes import InvalidInput
from qgrass.verify import SUITES, plucker_instances, run_suite, suite_plucker


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_pass_on_small_cases(name):
    res = run_suite(name, 2, 4)
    assert res.ok and res.passed > 0 and res.failures == []
    assert res.to_json()["suite"] == name


def test_plucker_instances_sizes():
    for J1, J2, K in plucker_instances(2, 4):
        assert len(J1) + len(J2) + len(K) == 4 and len(K) > 2
    sample = suite_plucker(3, 6, sample=40, seed=3)
    assert sample.ok and sample.passed == 40


def test_failures_are_recorded_and_capped():
    res = run_suite("ore", 2, 4)
    for k in range(30):
        res.record(False, k)
    assert not res.ok and res.failed == 30 and len(res.failures) == 20


def test_bad_suite_arguments():
    with pytest.raises(InvalidInput):
        run_suite("nope", 2, 4)
    with pytest.raises(InvalidInput):
        run_suite("lgv", 4, 4)
