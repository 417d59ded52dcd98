from __future__ import annotations

import pytest

from defosc.scheme import parse_scheme, q_oscillator
from defosc.verify import SUITE_NAMES, VerifyCase, run_all, run_suite


def test_suite_names():
    assert SUITE_NAMES == ("series", "spectrum", "coherent", "calculus")


def test_unknown_suite_rejected():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("everything")


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_each_suite_passes_and_is_sorted(name):
    rep = run_suite(name)
    assert rep.suite == name
    assert rep.passed
    names = [c.name for c in rep.cases]
    assert names == sorted(names)
    assert len(names) == len(set(names))


def test_case_fields_are_informative():
    rep = run_suite("spectrum")
    for c in rep.cases:
        assert c.statement  # every case states the identity it checks
        assert isinstance(c.max_residual, float)
        assert isinstance(c.tolerance, float)
        assert c.max_residual <= c.tolerance


def test_case_passed_boundary():
    assert VerifyCase("x", "s", 1e-12, 1e-12).passed
    assert not VerifyCase("x", "s", 1.1e-12, 1e-12).passed


def test_run_all_covers_every_suite():
    reports = run_all()
    assert tuple(r.suite for r in reports) == SUITE_NAMES
    assert all(r.passed for r in reports)


def test_focus_scheme_adds_cases():
    base = run_suite("spectrum")
    focused = run_suite("spectrum", q_oscillator(2.0))
    assert focused.passed
    extra = {c.name for c in focused.cases} - {c.name for c in base.cases}
    assert extra  # the focused scheme contributes its own checks


def test_focus_tsallis_widens_grid():
    focused = run_suite("series", parse_scheme("tsallis:q=1.75"))
    assert focused.passed
