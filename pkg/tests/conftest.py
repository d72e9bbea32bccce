from __future__ import annotations

import itertools

import pytest

from mathieu.builtins import builtin_algebra


def span_oracle(n: int, rows, ncols: int) -> frozenset:
    """All Z/n-combinations of the rows, by enumeration."""
    out = set()
    for coeffs in itertools.product(range(n), repeat=len(rows)):
        out.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % n for j in range(ncols)))
    if not rows:
        out.add((0,) * ncols)
    return frozenset(out)


@pytest.fixture(scope="session")
def ut2():
    return builtin_algebra("ut2_f2")


@pytest.fixture(scope="session")
def m2f3():
    return builtin_algebra("matrix2_f3")


@pytest.fixture(scope="session")
def z12():
    return builtin_algebra("zn12")


@pytest.fixture(scope="session")
def f2xf2():
    return builtin_algebra("prod:f2,f2")


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
