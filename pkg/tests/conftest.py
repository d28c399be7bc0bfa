import re

# One human-readable line per acceptance criterion, printed as each
# test in test_acceptance.py finishes.
_ACCEPTANCE = re.compile(r"test_acceptance\.py::test_c(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = _ACCEPTANCE.search(report.nodeid)
    if not m:
        return
    if report.passed:
        status = "PASS"
    elif report.skipped:
        status = "SKIP"
    else:
        status = "FAIL"
    number = int(m.group(1))
    name = m.group(2)
    print(f"\nACCEPTANCE C{number} {name} ... {status}")
