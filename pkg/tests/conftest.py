"""Independent oracles shared by the test modules.

Nothing here calls into the code under test except for the Partition type
and the partition generator, so the oracles can be used to check it.
"""

from collections import deque
from functools import lru_cache

import pytest

from lcores.partition import Partition, partitions

# lines collected by test_acceptance.py and printed at the end of the session
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def hooks_by_cells(parts):
    """Hook lengths computed from an explicit set of cells."""
    cells = {(i, j) for i, p in enumerate(parts, 1) for j in range(1, p + 1)}
    out = {}
    for i, j in cells:
        arm = leg = 0
        while (i, j + arm + 1) in cells:
            arm += 1
        while (i + leg + 1, j) in cells:
            leg += 1
        out[(i, j)] = arm + leg + 1
    return out


def brute_is_core(parts, ell):
    return all(h % ell for h in hooks_by_cells(parts).values())


@lru_cache(maxsize=None)
def brute_cores(ell, max_size):
    """All ell-cores of size at most max_size, by filtering every partition."""
    return frozenset(
        lam for n in range(max_size + 1) for lam in partitions(n) if brute_is_core(lam, ell)
    )


def core_counts_gf(ell, max_size):
    """Coefficients of prod_n (1 - q^(ell n))^ell / (1 - q^n) up to q^max_size."""
    coeffs = [1] + [0] * max_size
    for n in range(1, max_size + 1):
        # divide by (1 - q^n)
        for m in range(n, max_size + 1):
            coeffs[m] += coeffs[m - n]
        step = ell * n
        if step <= max_size:
            for _ in range(ell):
                for m in range(max_size, step - 1, -1):
                    coeffs[m] -= coeffs[m - step]
    return coeffs


def bfs_oracle(ell, max_boxes, move):
    """Graph distance from the empty partition; ``move(i, lam)`` gives the neighbour."""
    start = Partition()
    dist = {start: 0}
    queue = deque([start])
    while queue:
        lam = queue.popleft()
        for i in range(ell):
            nxt = move(i, lam)
            if sum(nxt) <= max_boxes and nxt not in dist:
                dist[nxt] = dist[lam] + 1
                queue.append(nxt)
    return dist


@pytest.fixture(scope="session")
def cores40():
    """Every ell-core with at most 40 boxes for ell in 3, 4, 5."""
    from lcores.affine import cores_up_to

    return {ell: cores_up_to(ell, 40) for ell in (3, 4, 5)}
