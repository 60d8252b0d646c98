"""The acceptance gate: one test per exit criterion, at its stated bound.

Each test prints its pass/fail line (visible with ``pytest -s`` or in the
``ramseykit selftest`` table, which runs the same functions).
"""

import pytest

from ramseykit.acceptance import ALL_CRITERIA, run_criterion

_IDS = [ident for ident, _, _ in ALL_CRITERIA]


@pytest.mark.parametrize("ident", _IDS)
def test_criterion(ident):
    result = run_criterion(ident, seed=0)
    status = "PASS" if result.passed else "FAIL"
    print(f"{status} {result.ident} ({result.seconds:.2f}s): {result.detail}")
    assert result.passed, f"{result.ident}: {result.detail}"
