"""Acceptance suite: one test per criterion, each run on every applicable built-in symmetry.

A summary with one PASS/FAIL line per criterion is printed at the end of the session.
"""
from functools import lru_cache

import pytest

from hecke_rea import suite

from conftest import ACCEPTANCE

BUILTINS = [("standard", 2), ("standard", 3), ("superflip", 1, 1), ("superflip", 2, 1),
            ("superflip", 2, 0), ("superflip", 0, 2)]


@lru_cache(maxsize=None)
def symmetry(spec):
    return suite.build_symmetry(spec)


@pytest.mark.parametrize("num", sorted(suite.CRITERIA))
def test_criterion(num):
    title = suite.CRITERIA[num][0]
    failed, ran = [], 0
    for spec in BUILTINS:
        rep = suite.run_criterion(num, suite.Config(spec), symmetry(spec))
        ran += sum(c.status != "skip" for c in rep.checks)
        failed += [f"{spec}: {c.name} [{c.witness}]" for c in rep.checks if c.status == "fail"]
    status = "PASS" if not failed and ran else "FAIL"
    ACCEPTANCE[num] = (status, title, "" if not failed else f" ({'; '.join(failed)})")
    print(f"criterion {num} {status}: {title}")
    assert ran, "no applicable checks"
    assert not failed, failed
