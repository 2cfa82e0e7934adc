import pytest

from batres.params_transforms import PhysicalParams
from batres.verify import SUITES, Check, run_suite, run_suites


@pytest.mark.parametrize("name", list(SUITES))
def test_suite_passes(name):
    failed = [(c.name, c.error, c.tolerance) for c in run_suite(name) if not c.passed]
    assert failed == []


def test_suites_pass_for_other_parameters():
    p = PhysicalParams(0.5, 2.0, 1.0)
    for name in ("transforms", "semigroup", "hyperbolic"):
        assert all(c.passed for c in run_suite(name, p))


def test_tolerance_override():
    checks = run_suite("semigroup", tolerance=1e-30)
    assert all(c.tolerance == 1e-30 for c in checks)


def test_parallel_run_keeps_order():
    names = ["semigroup", "transforms", "quadrature"]
    assert [n for n, _ in run_suites(names, workers=3)] == names


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nothing")


def test_check_passed_property():
    assert Check("a", 1e-9, 1e-8).passed and not Check("b", 1.0, 0.5).passed
