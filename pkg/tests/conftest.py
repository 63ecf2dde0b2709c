from itertools import combinations
from pathlib import Path

import pytest

from hassebuild import (
    ConceptLattice,
    divisor,
    fixture_fig1a,
    fixture_fig1b,
    fixture_fig2,
    partition,
    powerset,
    random_context,
)

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def brute_hasse(items, leq):
    """Transitive reduction over plain Python values, independent of the package."""
    items = list(items)
    out = set()
    for x in items:
        for y in items:
            if x == y or not leq(x, y):
                continue
            if not any(z != x and z != y and leq(x, z) and leq(z, y) for z in items):
                out.add((x, y))
    return out


def brute_width(items, leq):
    """Largest antichain by enumerating subsets, largest first."""
    items = list(items)
    for k in range(len(items), 0, -1):
        for combo in combinations(items, k):
            if all(not leq(a, b) and not leq(b, a) for a, b in combinations(combo, 2)):
                return k
    return 0


def named_edges(L, H):
    return {(L.name(x), L.name(y)) for x, y in H}


def criterion4_instances(n_contexts=50):
    """The fuzz instance list: fixtures, families and random contexts."""
    out = [
        ("fig1a", fixture_fig1a()),
        ("fig1b", fixture_fig1b()),
        ("fig2", fixture_fig2()),
    ]
    for k in range(6):
        out.append((f"powerset({k})", powerset(k)))
        out.append((f"powerset({k},reversed)", powerset(k, "reversed")))
    out += [("divisor(360)", divisor(360)), ("divisor(2310)", divisor(2310)), ("partition(4)", partition(4))]
    for seed in range(n_contexts):
        n_obj = 1 + seed % 12
        n_attr = 1 + (seed * 7) % 8
        density = (0.3, 0.5, 0.7)[seed % 3]
        ctx = random_context(n_obj, n_attr, density, seed)
        out.append((f"context#{seed}({n_obj}x{n_attr})", ConceptLattice(ctx)))
    return out


@pytest.fixture
def fig1a():
    return fixture_fig1a()


@pytest.fixture
def fig1b():
    return fixture_fig1b()


@pytest.fixture
def fig2():
    return fixture_fig2()
