"""Concrete lattices: the small named fixtures and parameterised families."""

from __future__ import annotations

from math import gcd
from string import ascii_lowercase

from .errors import ParameterTooLarge
from .lattice import ExplicitLattice, Lattice

FIG1A_COVERS = [("1", "top"), ("2", "top"), ("3", "top"), ("bot", "1"), ("bot", "2"), ("bot", "3")]
FIG1B_COVERS = [
    ("1", "top"), ("2", "top"), ("3", "top"),
    ("4", "1"), ("4", "2"), ("bot", "4"), ("bot", "3"),
]
FIG2_COVERS = [
    ("1", "top"), ("2", "top"), ("4", "1"), ("4", "2"),
    ("3", "2"), ("bot", "4"), ("bot", "3"),
]

# the solid-line join-semilattices of the two-panel figure, before a bottom is added
FIG1A_SEMILATTICE = (["top", "1", "2", "3"], [("1", "top"), ("2", "top"), ("3", "top")])
FIG1B_SEMILATTICE = (
    ["top", "1", "2", "3", "4"],
    [("1", "top"), ("2", "top"), ("3", "top"), ("4", "1"), ("4", "2")],
)


def fixture_fig1a() -> ExplicitLattice:
    """M3: top, three pairwise incomparable atoms, bot."""
    return ExplicitLattice.from_pairs(["top", "1", "2", "3", "bot"], FIG1A_COVERS)


def fixture_fig1b() -> ExplicitLattice:
    return ExplicitLattice.from_pairs(["top", "1", "2", "3", "4", "bot"], FIG1B_COVERS)


def fixture_fig2() -> ExplicitLattice:
    """The six-element distributive lattice used for the second example run."""
    return ExplicitLattice.from_pairs(["top", "1", "2", "3", "4", "bot"], FIG2_COVERS)


class Chain(Lattice):
    family = "chain"

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("a chain needs at least one element")
        self.parameter = n
        self.size = n
        self.top = n - 1
        self.bottom = 0

    def leq(self, x, y):
        return x <= y

    def join(self, x, y):
        return max(x, y)

    def meet(self, x, y):
        return min(x, y)

    def above_count(self, x):
        return self.size - 1 - x


def _set_name(mask: int, attrs) -> str:
    return "{" + ",".join(attrs[i] for i in range(len(attrs)) if mask >> i & 1) + "}"


def default_attribute_names(k: int) -> list[str]:
    if k <= len(ascii_lowercase):
        return list(ascii_lowercase[:k])
    return [f"a{i}" for i in range(k)]


class PowersetLattice(Lattice):
    """All subsets of ``k`` attributes; element index = subset bitmask.

    ``reversed=True`` orders by reverse inclusion, so join is intersection,
    top is the empty set and bottom the full set.  This is the codomain used
    by the intent and meet-irreducible embeddings.
    """

    family = "powerset"
    distributive_by_construction = True

    def __init__(self, k: int, reversed: bool = False, attributes=None):
        self.parameter = k
        self.k = k
        self.reversed = reversed
        self.attributes = list(attributes) if attributes is not None else default_attribute_names(k)
        if len(self.attributes) != k:
            raise ValueError("attribute name count must equal k")
        self.size = 1 << k
        self.full = self.size - 1
        self.top, self.bottom = (0, self.full) if reversed else (self.full, 0)

    def leq(self, x, y):
        if self.reversed:
            return y & ~x == 0
        return x & ~y == 0

    def join(self, x, y):
        return x & y if self.reversed else x | y

    def meet(self, x, y):
        return x | y if self.reversed else x & y

    def name(self, x):
        return _set_name(x, self.attributes)

    def index(self, name):
        body = name.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise KeyError(name)
        lookup = {a: i for i, a in enumerate(self.attributes)}
        mask = 0
        for token in filter(None, body[1:-1].split(",")):
            mask |= 1 << lookup[token]
        return mask

    def above_count(self, x):
        ones = x.bit_count()
        return (1 << ones) - 1 if self.reversed else (1 << (self.k - ones)) - 1


def powerset(k: int, orientation: str = "standard") -> PowersetLattice:
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > 20:
        raise ParameterTooLarge(f"powerset({k}) exceeds the 2^20 element limit")
    if orientation not in ("standard", "reversed"):
        raise ValueError(f"unknown orientation {orientation!r}")
    return PowersetLattice(k, reversed=orientation == "reversed")


class DivisorLattice(Lattice):
    """Divisors of ``N`` ordered by divisibility (join = lcm, meet = gcd)."""

    family = "divisor"

    def __init__(self, N: int):
        self.parameter = N
        small = [d for d in range(1, int(N**0.5) + 1) if N % d == 0]
        self.values = sorted(set(small + [N // d for d in small]))
        self._pos = {v: i for i, v in enumerate(self.values)}
        self.size = len(self.values)
        self.top = self.size - 1
        self.bottom = 0
        self.distributive_by_construction = True

    def leq(self, x, y):
        return self.values[y] % self.values[x] == 0

    def join(self, x, y):
        a, b = self.values[x], self.values[y]
        return self._pos[a // gcd(a, b) * b]

    def meet(self, x, y):
        return self._pos[gcd(self.values[x], self.values[y])]

    def name(self, x):
        return str(self.values[x])

    def index(self, name):
        return self._pos[int(name)]


def divisor(N: int) -> DivisorLattice:
    if N < 1:
        raise ValueError("N must be positive")
    if N > 10**6:
        raise ParameterTooLarge(f"divisor({N}) exceeds 10^6")
    return DivisorLattice(N)


def _set_partitions(k: int):
    """Restricted growth strings of length ``k`` in lexicographic order."""
    if k == 0:
        yield ()
        return
    rgs = [0] * k

    def rec(i, top):
        if i == k:
            yield tuple(rgs)
            return
        for label in range(top + 2):
            rgs[i] = label
            yield from rec(i + 1, max(top, label))

    rgs[0] = 0
    yield from rec(1, 0)


def _canonical(labels) -> tuple:
    relabel = {}
    return tuple(relabel.setdefault(lab, len(relabel)) for lab in labels)


class PartitionLattice(Lattice):
    """Partitions of ``{1..k}`` under refinement: finer is lower."""

    family = "partition"

    def __init__(self, k: int):
        self.parameter = k
        self.k = k
        self.blocks = list(_set_partitions(k))
        self._pos = {p: i for i, p in enumerate(self.blocks)}
        self.size = len(self.blocks)
        self.top = self._pos[(0,) * k]
        self.bottom = self._pos[tuple(range(k))]

    def leq(self, x, y):
        p, q = self.blocks[x], self.blocks[y]
        image = {}
        for a, b in zip(p, q):
            if image.setdefault(a, b) != b:
                return False
        return True

    def join(self, x, y):
        p, q = self.blocks[x], self.blocks[y]
        parent = list(range(self.k))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        first = {}
        for labels in (p, q):
            first.clear()
            for i, lab in enumerate(labels):
                j = first.setdefault(lab, i)
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
        return self._pos[_canonical(find(i) for i in range(self.k))]

    def meet(self, x, y):
        p, q = self.blocks[x], self.blocks[y]
        return self._pos[_canonical(zip(p, q))]

    def name(self, x):
        groups = {}
        for i, lab in enumerate(self.blocks[x]):
            groups.setdefault(lab, []).append(str(i + 1))
        return "|".join("".join(g) for g in groups.values()) or "-"


def partition(k: int) -> PartitionLattice:
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > 6:
        raise ParameterTooLarge(f"partition({k}) exceeds k=6")
    return PartitionLattice(k)


def chain(n: int) -> Chain:
    return Chain(n)
