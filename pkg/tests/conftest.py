import pytest

from localdeg.canon import iso_classes_by_order


@pytest.fixture(scope="session")
def small_graphs():
    """One representative of every isomorphism class with 1 <= n <= 7."""
    return [G for n, reps in iso_classes_by_order(7) if n for G in reps]


@pytest.fixture(scope="session")
def catalog():
    from localdeg.families import default_catalog

    return [(str(spec), spec.build()) for spec in default_catalog()]


# criterion number -> (passed, summary), filled in by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, summary = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {summary}")
