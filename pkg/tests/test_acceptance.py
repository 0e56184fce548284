"""End-to-end acceptance run: every criterion of the verification suite must
pass, and one PASS/FAIL line per criterion is printed to the terminal."""

import pytest

from jacsyz.suite import CRITERIA, run_suite

_results = None


def _get_results():
    global _results
    if _results is None:
        _results = {r.name: r for r in run_suite(seed=0)}
    return _results


@pytest.mark.parametrize("name", [name for name, _ in CRITERIA])
def test_criterion(name, capsys):
    r = _get_results()[name]
    status = "PASS" if r.passed else "FAIL"
    with capsys.disabled():
        print(f"\n[acceptance] {status} {r.name:18s} {r.seconds:7.2f}s  "
              f"{r.doc}")
    assert r.passed, f"{r.name}: {r.detail}"
