import pytest

from affine_cells.verify import SUITES, VerifyConfig, run_suite
from conftest import ACCEPTANCE_LINES

BY_CRITERION = {suite.criterion: suite.name for suite in SUITES.values()}


def test_every_criterion_has_a_suite():
    assert sorted(BY_CRITERION) == list(range(1, 14))


@pytest.mark.parametrize("criterion", sorted(BY_CRITERION))
def test_acceptance_criterion(criterion, kl_cache_dir):
    name = BY_CRITERION[criterion]
    (report,) = run_suite(name, VerifyConfig(cache_dir=kl_cache_dir))
    failed = [check for check in report.checks if not check.passed]
    status = "PASS" if report.passed else "FAIL"
    budget = f" / budget {report.budget:.0f}s" if report.budget is not None else ""
    line = f"{status} criterion {criterion:2d} {name} ({report.seconds:.1f}s{budget})"
    for check in failed:
        line += f"\n       failed check: {check.name}: {check.detail}"
    if not report.within_budget:
        line += "\n       runtime exceeds budget"
    ACCEPTANCE_LINES[criterion] = line
    print(line)
    assert report.passed, line
