import sys
from fractions import Fraction
from itertools import product


def brute_partitions(a, b, c):
    """Every a x b array with entries in [0, c] that decreases along rows and columns."""
    out = []
    for flat in product(range(c + 1), repeat=a * b):
        h = [flat[i * b:(i + 1) * b] for i in range(a)]
        if all(h[i][j] >= h[i][j + 1] for i in range(a) for j in range(b - 1)) and all(
            h[i][j] >= h[i + 1][j] for i in range(a - 1) for j in range(b)
        ):
            out.append(h)
    return out


def brute_prob(a, b, c, x, y):
    """Containment probability straight from the face picture: the top face of
    cell (i, j) at height h has bottom vertex (j + a - i, h + a - i)."""
    pps = brute_partitions(a, b, c)
    hits = sum(
        any(h[i - 1][j - 1] == y - a + i for i in range(1, a + 1) for j in range(1, b + 1) if j - i == x - a)
        for h in pps
    )
    return Fraction(hits, len(pps))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
