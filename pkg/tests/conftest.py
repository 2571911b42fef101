import itertools
import random
from pathlib import Path

import pytest

from addcount import CnfFormula, Store
from addcount.dd import Add

ACCEPTANCE_KEY = pytest.StashKey[list]()

DATA = Path(__file__).parent / "data"
CORPUS = Path(__file__).parent.parent / "src" / "addcount" / "corpus"

# Products and sums of these stay exact in double precision.
DYADIC = (0.0, 0.5, 1.0, 1.5, 2.0, 3.0)


def random_formula(rng, vars_range=(5, 12), clauses_range=(5, 30), width_range=(1, 4)):
    n = rng.randint(*vars_range)
    m = rng.randint(*clauses_range)
    clauses = []
    for _ in range(m):
        w = rng.randint(width_range[0], min(width_range[1], n))
        vs = rng.sample(range(1, n + 1), w)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return CnfFormula(n, tuple(clauses))


def add_from_table(store, variables, table):
    """ADD for ``table``; bit ``k`` of an index is the value of ``variables[k]``.

    Built by Shannon expansion straight through the unique table, without
    product or sum, so it is independent of the operations under test.
    """
    variables = list(variables)
    bit = {v: k for k, v in enumerate(variables)}
    ordered = sorted(variables, key=store.rank)

    def build(k, offset):
        if k == len(ordered):
            return store.constant(table[offset]).root
        v = ordered[k]
        lo = build(k + 1, offset)
        hi = build(k + 1, offset + (1 << bit[v]))
        return store._mk(v, lo, hi)

    return Add(store, build(0, 0)), variables


def truth_table(fn, variables):
    out = []
    for idx in range(2 ** len(variables)):
        tau = {v for k, v in enumerate(variables) if idx >> k & 1}
        out.append(fn(tau))
    return out


def assignments(variables):
    variables = list(variables)
    for bits in itertools.product((0, 1), repeat=len(variables)):
        yield {v for v, b in zip(variables, bits) if b}


def random_add(store, variables, rng, values=DYADIC):
    table = [rng.choice(values) for _ in range(2 ** len(variables))]
    add, ordered = add_from_table(store, variables, table)
    return add, ordered, table


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def store4():
    return Store(4)


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
