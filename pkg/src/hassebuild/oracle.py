"""Brute-force ground truth and structural analyses.

Everything here is deliberately naive (quadratic or cubic in the lattice
size) and uses only ``leq``/``join``/``meet``; it is the reference the fast
algorithms are checked against.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations

from .diagram import HasseDiagram
from .lattice import ExplicitLattice, Lattice, ValidationReport, iter_bits


def upper_cover(L: Lattice, x: int) -> set[int]:
    if isinstance(L, ExplicitLattice):
        strict = L.up[x] & ~(1 << x)
        return {y for y in iter_bits(strict) if strict & L.down[y] == 1 << y}
    above = [y for y in L.elements() if y != x and L.leq(x, y)]
    return {y for y in above if not any(z != y and L.leq(z, y) for z in above)}


def lower_cover(L: Lattice, y: int) -> set[int]:
    if isinstance(L, ExplicitLattice):
        strict = L.down[y] & ~(1 << y)
        return {x for x in iter_bits(strict) if strict & L.up[x] == 1 << x}
    below = [x for x in L.elements() if x != y and L.leq(x, y)]
    return {x for x in below if not any(z != x and L.leq(x, z) for z in below)}


def oracle_hasse(L: Lattice) -> HasseDiagram:
    """All pairs ``x < y`` with nothing strictly in between."""
    diagram = HasseDiagram(L)
    for x in L.elements():
        for y in sorted(upper_cover(L, x)):
            diagram.add(x, y)
    return diagram


def strict_order_rows(L: Lattice) -> list[int]:
    """Bitset of elements strictly above each element."""
    rows = []
    for x in L.elements():
        row = 0
        for y in L.elements():
            if y != x and L.leq(x, y):
                row |= 1 << y
        rows.append(row)
    return rows


def _max_matching(adj: list[list[int]], n_right: int) -> int:
    """Hopcroft-Karp on a bipartite graph given as left adjacency lists."""
    n_left = len(adj)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    INF = float("inf")
    matched = 0
    while True:
        dist = [INF] * n_left
        queue = deque()
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not found:
            return matched
        it = [0] * n_left
        for root in range(n_left):
            if match_l[root] != -1:
                continue
            # iterative DFS along the BFS layering
            stack = [root]
            path_found = False
            while stack:
                u = stack[-1]
                if it[u] == len(adj[u]):
                    dist[u] = INF
                    stack.pop()
                    continue
                v = adj[u][it[u]]
                it[u] += 1
                w = match_r[v]
                if w == -1:
                    path_found = True
                    break
                if dist[w] == dist[u] + 1:
                    stack.append(w)
            if path_found:
                # stack holds the left vertices of the augmenting path
                for u in stack:
                    v = adj[u][it[u] - 1]
                    match_l[u] = v
                    match_r[v] = u
                matched += 1


def width(L: Lattice) -> int:
    """Maximum antichain size, via Dilworth: n minus a maximum matching in
    the strict-order bipartite graph (a minimum chain cover)."""
    rows = strict_order_rows(L)
    adj = [list(iter_bits(r)) for r in rows]
    return L.size - _max_matching(adj, L.size)


def max_antichain_exhaustive(L: Lattice) -> set[int]:
    """Largest antichain by branch and bound; intended for small lattices."""
    n = L.size
    rows = strict_order_rows(L)
    comparable = [rows[x] for x in range(n)]
    for x in range(n):
        for y in iter_bits(rows[x]):
            comparable[y] |= 1 << x
    full = (1 << n) - 1
    incomparable = [full & ~comparable[x] & ~(1 << x) for x in range(n)]
    best = [0, 0]

    def grow(chosen, size, candidates):
        if candidates == 0:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + candidates.bit_count() <= best[0]:
            return
        low = candidates & -candidates
        v = low.bit_length() - 1
        grow(chosen | low, size + 1, candidates & incomparable[v])
        grow(chosen, size, candidates & ~low)

    grow(0, 0, full)
    return set(iter_bits(best[1]))


def distributivity_witness(L: Lattice):
    """First triple (x, y, z) in index order with x∧(y∨z) ≠ (x∧y)∨(x∧z)."""
    n = L.size
    for x in range(n):
        for y in range(n):
            for z in range(y + 1, n):
                if L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)):
                    return x, y, z
    return None


def is_distributive(L: Lattice) -> bool:
    return distributivity_witness(L) is None


def meet_irreducibles(L: Lattice, diagram: HasseDiagram | None = None) -> list[int]:
    """Elements with exactly one upper cover (so never the top)."""
    if diagram is None:
        return [x for x in L.elements() if len(upper_cover(L, x)) == 1]
    return [x for x in L.elements() if len(diagram.uc(x)) == 1]


def check_paper_laws(L: Lattice, emb=None, samples: int = 10_000, seed: int = 0, exhaustive_limit: int = 64) -> ValidationReport:
    """Run the cover-pair, cover-existence and join-morphism law suites.

    * two distinct lower covers of ``y`` join to ``y``;
    * whenever ``x < y`` some upper cover of ``x`` lies below ``y`` and some
      lower cover of ``y`` lies above ``x``;
    * with an embedding ``f``: ``f(meet(Y)) <= meet(f(Y))`` in the codomain.

    Exhaustive up to ``exhaustive_limit`` elements, sampled above.
    """
    report = ValidationReport()
    nm = L.name
    n = L.size
    rng = random.Random(seed)
    exhaustive = n <= exhaustive_limit
    uc_cache, lc_cache = {}, {}

    def uc(x):
        if x not in uc_cache:
            uc_cache[x] = upper_cover(L, x)
        return uc_cache[x]

    def lc(y):
        if y not in lc_cache:
            lc_cache[y] = lower_cover(L, y)
        return lc_cache[y]

    if exhaustive:
        pool = list(range(n))
        upper_pairs = lower_pairs = [(x, y) for x in pool for y in pool if x != y and L.leq(x, y)]
    else:
        # cover computation is quadratic per element: sample from a small pool
        pool = [rng.randrange(n) for _ in range(64)]
        per = max(1, samples // (2 * len(pool)))
        upper_pairs = [(x, rng.randrange(n)) for x in pool for _ in range(per)]
        lower_pairs = [(rng.randrange(n), y) for y in pool for _ in range(per)]
        upper_pairs = [(x, y) for x, y in upper_pairs if x != y and L.leq(x, y)]
        lower_pairs = [(x, y) for x, y in lower_pairs if x != y and L.leq(x, y)]

    for y in pool:
        for x1, x2 in combinations(sorted(lc(y)), 2):
            if L.join(x1, x2) != y:
                report.fail("twoprecs", nm(x1), nm(x2), nm(y))
    for x, y in upper_pairs:
        if not any(L.leq(z, y) for z in uc(x)):
            report.fail("covers-upper", nm(x), nm(y))
    for x, y in lower_pairs:
        if not any(L.leq(x, z) for z in lc(y)):
            report.fail("covers-lower", nm(x), nm(y))

    if emb is not None:
        C = emb.codomain
        subsets = []
        if exhaustive:
            subsets.extend((x,) for x in range(n))
            subsets.extend(combinations(range(n), 2))
        for _ in range(1000 if exhaustive else samples):
            k = rng.randint(0, min(n, 6))
            subsets.append(tuple(rng.sample(range(n), k)))
        for Y in subsets:
            lhs = emb(L.meet_all(Y))
            rhs = C.meet_all(emb(y) for y in Y)
            if not C.leq(lhs, rhs):
                report.fail("joinmorph", *(nm(y) for y in Y))
    return report
