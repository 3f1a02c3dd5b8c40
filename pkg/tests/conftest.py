import itertools

import pytest

from bottkit.rootsys import build_diagram
from bottkit.vanishing import ABConfig

ACCEPTANCE_LINES: list[str] = []


def ab_configurations(rank, require_a=True):
    """Every (sigma, cfg) on ``rank`` simple roots.

    Each root is labelled: outside sigma and not in A, in A, in sigma but not
    in B, in B.
    """
    for labels in itertools.product(range(4), repeat=rank):
        if require_a and 1 not in labels:
            continue
        sigma = frozenset(i for i, l in enumerate(labels) if l >= 2)
        cfg = ABConfig({i for i, l in enumerate(labels) if l == 1},
                       {i for i, l in enumerate(labels) if l == 3})
        yield sigma, cfg


def all_subsets(items):
    items = list(items)
    for k in range(len(items) + 1):
        yield from itertools.combinations(items, k)


@pytest.fixture(scope="session")
def diagram():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = build_diagram(name)
        return cache[name]

    return get


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
