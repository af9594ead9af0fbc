"""Acceptance criteria 1-8, one printed PASS/FAIL line each.

Run under pytest (``pytest -v -s tests/test_acceptance.py`` shows the detail
lines too) or directly as a script.
"""

import sys

import pytest

from signpoly.checks import SUITES

# (number, suite, runtime limit in seconds or None when no limit is set)
CRITERIA = [
    (1, "bijection", 10),
    (2, "counts", 60),
    (3, "vertices", None),
    (4, "decomposition", 60),
    (5, "facets", 300),
    (6, "lattice", 120),
    (7, "lattice-points", 30),
    (8, "transport", 30),
]


def summary_lines(number, result, limit):
    in_time = limit is None or result.seconds < limit
    verdict = "PASS" if result.passed and in_time else "FAIL"
    bound = f"< {limit}s" if limit is not None else "no limit"
    lines = [f"criterion {number} [{result.name}]: {verdict} ({result.seconds:.1f}s, {bound})"]
    for c in result.checks:
        tag = "info" if c.informational else ("ok" if c.passed else "FAILED")
        lines.append(f"    {tag:6} {c.label}: {c.detail}")
    return lines


@pytest.mark.parametrize("number,suite,limit", CRITERIA, ids=[f"criterion_{n}_{s}" for n, s, _ in CRITERIA])
def test_criterion(number, suite, limit, capsys):
    result = SUITES[suite]()
    lines = summary_lines(number, result, limit)
    with capsys.disabled():
        print()
        print(lines[0])
    print("\n".join(lines[1:]))
    failed = [c.label for c in result.checks if not c.passed and not c.informational]
    assert not failed, f"criterion {number} failed checks: {failed}"
    if limit is not None:
        assert result.seconds < limit, f"criterion {number} took {result.seconds:.1f}s (limit {limit}s)"


def main() -> int:
    ok = True
    for number, suite, limit in CRITERIA:
        result = SUITES[suite]()
        lines = summary_lines(number, result, limit)
        print("\n".join(lines), flush=True)
        ok &= lines[0].split(": ")[1].startswith("PASS")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
