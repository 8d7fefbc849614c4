import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list[str] = []


def log_uniform_pairs(n, seed, lo=1e-3, hi=1e3):
    rng = np.random.default_rng(seed)
    a = np.exp(rng.uniform(np.log(lo), np.log(hi), n))
    b = np.exp(rng.uniform(np.log(lo), np.log(hi), n))
    keep = a != b
    return [(float(x), float(y)) for x, y in zip(a[keep], b[keep])]


@pytest.fixture
def report():
    def _report(number, title, ok, detail=""):
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  ({detail})"
        ACCEPTANCE_LINES.append(line)
        return ok

    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
