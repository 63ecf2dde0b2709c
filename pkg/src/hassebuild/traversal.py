"""Reverse topological sorts: larger elements first, top first, bottom last."""

from __future__ import annotations

import heapq
import random
from itertools import groupby

from .errors import InvalidRankKey, NotAPermutation
from .lattice import Lattice


def verify_reverse_topo(L: Lattice, order) -> bool:
    """True iff no element is below an element listed after it."""
    order = list(order)
    if len(order) != L.size or set(order) != set(L.elements()):
        raise NotAPermutation(f"expected a permutation of {L.size} elements")
    for i, xi in enumerate(order):
        for xj in order[i + 1:]:
            if L.leq(xi, xj):
                return False
    return True


class ReverseTopoStream:
    """Heap-backed iterator yielding elements by ascending ``key``.

    ``key`` must be strictly monotone against the order (``x < y`` implies
    ``key(y) < key(x)``).  With ``verify=True`` each popped element is checked
    against all previously popped ones and :class:`InvalidRankKey` is raised
    on the first violation.
    """

    def __init__(self, L: Lattice, key, verify: bool = False):
        self.L = L
        self.verify = verify
        self._heap = [(key(x), L.name(x), x) for x in L.elements()]
        heapq.heapify(self._heap)
        self._seen = []

    def __iter__(self):
        return self

    def __next__(self) -> int:
        if not self._heap:
            raise StopIteration
        _, _, x = heapq.heappop(self._heap)
        if self.verify:
            for p in self._seen:
                if self.L.leq(p, x):
                    raise InvalidRankKey(
                        f"{self.L.name(x)} popped after {self.L.name(p)} although {self.L.name(p)} <= {self.L.name(x)}"
                    )
            self._seen.append(x)
        return x


def _above_count_order(L: Lattice, rng: random.Random | None = None) -> list[int]:
    keyed = sorted(L.elements(), key=lambda x: (L.above_count(x), L.name(x)))
    if rng is None:
        return keyed
    out = []
    for _, group in groupby(keyed, key=L.above_count):
        group = list(group)
        rng.shuffle(group)
        out.extend(group)
    return out


def reverse_topo_sort(L: Lattice, strategy: str = "above-count", key=None, seed: int | None = None,
                      verify: bool = False) -> list[int]:
    """Order the elements of ``L`` so that ``x_i <= x_j`` implies ``j <= i``.

    ``above-count`` sorts by the number of strictly larger elements, ties
    broken by name.  ``rank-key`` streams through a heap keyed by ``key``.
    ``random`` shuffles the above-count ties with ``random.Random(seed)``.
    """
    if strategy == "above-count":
        order = _above_count_order(L)
    elif strategy == "rank-key":
        if key is None:
            raise ValueError("rank-key strategy needs a key function")
        order = list(ReverseTopoStream(L, key, verify=verify))
    elif strategy == "random":
        order = _above_count_order(L, random.Random(seed))
    else:
        raise ValueError(f"unknown sort strategy {strategy!r}")
    if verify and strategy != "rank-key" and not verify_reverse_topo(L, order):
        raise InvalidRankKey(f"{strategy} produced an invalid order")  # pragma: no cover
    return order


def random_linear_extension(L: Lattice, seed: int) -> list[int]:
    """Reverse topological sort picking a uniformly random maximal element
    of the remaining elements at every step."""
    rng = random.Random(seed)
    above = {x: {y for y in L.elements() if y != x and L.leq(x, y)} for x in L.elements()}
    pending = {x: len(above[x]) for x in L.elements()}
    below = {x: [] for x in L.elements()}
    for x, ups in above.items():
        for y in ups:
            below[y].append(x)
    ready = sorted(x for x, c in pending.items() if c == 0)
    order = []
    while ready:
        x = ready.pop(rng.randrange(len(ready)))
        order.append(x)
        for y in below[x]:
            pending[y] -= 1
            if pending[y] == 0:
                ready.append(y)
    return order
