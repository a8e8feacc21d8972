"""Acceptance battery: one test per criterion, each delegating to heisrep.suite."""

from __future__ import annotations

import json

import pytest

from heisrep import suite

RESULTS: dict = {}

CRITERIA = [
    (1, "heisenberg-oracle"),
    (2, "separating-curves"),
    (3, "kernel-pair-genus-6"),
    (4, "rho1k-kernel"),
    (5, "duality"),
    (6, "augmentation"),
    (7, "suprataut"),
    (8, "iota-faithful"),
    (9, "annihilator"),
    (10, "infinite-order"),
    (11, "npoint-formula"),
    (12, "burau-gassner"),
    (13, "substitutions"),
    (14, "subgroup-action"),
]


@pytest.mark.parametrize("number,cid", CRITERIA, ids=[f"{n:02d}-{c}" for n, c in CRITERIA])
def test_criterion(number, cid):
    (res,) = suite.run_suite({cid})
    RESULTS[number] = res
    line = f"{res.status.upper()} {number:2d} {cid} ({res.seconds:.2f}s)"
    print(line)
    assert res.passed, line + "\n" + json.dumps(res.witness, indent=1, default=str)[:3000]


def test_every_criterion_has_one_check():
    assert [c for _, c in CRITERIA] == list(suite.CHECKS)
