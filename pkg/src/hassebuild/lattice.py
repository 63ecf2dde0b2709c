"""Finite lattices as an abstract data type.

Elements are dense integer indices ``0 .. size-1``; names only appear at I/O
boundaries.  Every concrete lattice answers ``leq``, ``join`` and ``meet`` and
knows its ``top`` and ``bottom``.  Explicit lattices keep one up-set and one
down-set bitset (a Python int) per element.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .errors import InputNotJoinSemilattice, LatticeValidationError


@dataclass
class ValidationReport:
    """Outcome of a validation pass; ``ok`` iff ``failures`` is empty."""

    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, law, *witness):
        self.failures.append((law, tuple(witness)))

    def merge(self, other: "ValidationReport") -> "ValidationReport":
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)
        return self

    def __bool__(self):
        return self.ok


@dataclass
class OpCounters:
    leq_calls: int = 0
    join_calls: int = 0
    meet_calls: int = 0
    f_calls: int = 0

    def reset(self):
        self.leq_calls = self.join_calls = self.meet_calls = self.f_calls = 0

    def as_dict(self) -> dict:
        return {
            "leq": self.leq_calls,
            "join": self.join_calls,
            "meet": self.meet_calls,
            "f": self.f_calls,
        }


def iter_bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Lattice:
    """Abstract finite lattice.

    Subclasses set ``size``, ``top`` and ``bottom`` and implement ``leq``,
    ``join``, ``meet`` and ``name``.
    """

    size: int
    top: int
    bottom: int
    distributive_by_construction = False

    def leq(self, x: int, y: int) -> bool:
        raise NotImplementedError

    def join(self, x: int, y: int) -> int:
        raise NotImplementedError

    def meet(self, x: int, y: int) -> int:
        raise NotImplementedError

    def name(self, x: int) -> str:
        return str(x)

    def index(self, name: str) -> int:
        lookup = getattr(self, "_name_index", None)
        if lookup is None:
            lookup = {self.name(x): x for x in self.elements()}
            self._name_index = lookup
        return lookup[name]

    @property
    def names(self) -> list[str]:
        return [self.name(x) for x in self.elements()]

    def elements(self) -> range:
        return range(self.size)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def above_count(self, x: int) -> int:
        """Number of elements strictly above ``x``."""
        return sum(1 for z in self.elements() if z != x and self.leq(x, z))

    def join_all(self, xs) -> int:
        acc = self.bottom
        for x in xs:
            acc = self.join(acc, x)
        return acc

    def meet_all(self, xs) -> int:
        acc = self.top
        for x in xs:
            acc = self.meet(acc, x)
        return acc

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"<{type(self).__name__} size={self.size}>"


class CountingLattice(Lattice):
    """Delegates to ``inner`` and tallies every order/join/meet call."""

    def __init__(self, inner: Lattice, counters: OpCounters | None = None):
        self.inner = inner
        self.counters = counters if counters is not None else OpCounters()
        self.size = inner.size
        self.top = inner.top
        self.bottom = inner.bottom
        self.distributive_by_construction = inner.distributive_by_construction

    def leq(self, x, y):
        self.counters.leq_calls += 1
        return self.inner.leq(x, y)

    def join(self, x, y):
        self.counters.join_calls += 1
        return self.inner.join(x, y)

    def meet(self, x, y):
        self.counters.meet_calls += 1
        return self.inner.meet(x, y)

    def name(self, x):
        return self.inner.name(x)

    def index(self, name):
        return self.inner.index(name)

    def above_count(self, x):
        return self.inner.above_count(x)


def unwrap(lattice: Lattice) -> Lattice:
    while isinstance(lattice, CountingLattice):
        lattice = lattice.inner
    return lattice


# -- explicit carriers -------------------------------------------------------


def _closure_rows(n: int, pairs) -> list[int]:
    up = [1 << i for i in range(n)]
    for lo, hi in pairs:
        up[lo] |= 1 << hi
    for k in range(n):
        bit, row = 1 << k, up[k]
        for i in range(n):
            if up[i] & bit:
                up[i] |= row
    return up


def _transpose(rows: list[int]) -> list[int]:
    n = len(rows)
    cols = [0] * n
    for i, row in enumerate(rows):
        bit = 1 << i
        for j in iter_bits(row):
            cols[j] |= bit
    return cols


def _minimal_in(mask: int, down: list[int]) -> list[int]:
    return [z for z in iter_bits(mask) if mask & down[z] == 1 << z]


class ExplicitJoinSemilattice:
    """Finite poset with joins, stored as up/down bitset rows.

    ``bottom`` is ``None`` when the poset has no least element.
    """

    def __init__(self, names: list[str], up: list[int]):
        self._names = list(names)
        self._name_index = {nm: i for i, nm in enumerate(self._names)}
        self.size = len(self._names)
        self.up = up
        self.down = _transpose(up)
        self._by_up = {row: i for i, row in enumerate(up)}
        full = (1 << self.size) - 1
        self.top = next((i for i, row in enumerate(self.down) if row == full), None)
        self.bottom = next((i for i, row in enumerate(up) if row == full), None)

    @classmethod
    def from_pairs(cls, names, pairs) -> "ExplicitJoinSemilattice":
        report = _validate_relation(names, pairs)
        if not report.ok:
            raise LatticeValidationError(report)
        index = {nm: i for i, nm in enumerate(names)}
        up = _closure_rows(len(names), [(index[a], index[b]) for a, b in pairs])
        report = _check_antisymmetry(names, up)
        if not report.ok:
            raise LatticeValidationError(report)
        sl = cls(names, up)
        for x, y in combinations(range(sl.size), 2):
            if sl.up[x] & sl.up[y] not in sl._by_up:
                raise InputNotJoinSemilattice(
                    f"pair ({names[x]}, {names[y]}) has no unique least upper bound",
                    witness=(names[x], names[y]),
                )
        return sl

    def elements(self):
        return range(self.size)

    def name(self, x):
        return self._names[x]

    def index(self, name):
        return self._name_index[name]

    @property
    def names(self):
        return list(self._names)

    def leq(self, x, y):
        return bool(self.up[x] >> y & 1)

    def join(self, x, y):
        return self._by_up[self.up[x] & self.up[y]]


def meet_via_join(sl, xs) -> int:
    """Meet of ``xs`` as the join of all their common lower bounds.

    ``sl`` needs ``elements``, ``leq``, ``join`` and a ``bottom``; the bottom
    keeps the set of common lower bounds nonempty.
    """
    xs = list(xs)
    acc = sl.bottom
    for y in sl.elements():
        if all(sl.leq(y, x) for x in xs):
            acc = sl.join(acc, y)
    return acc


class ExplicitLattice(Lattice):
    """Lattice given by its full order as bitset rows.

    ``join(x, y)`` is the element whose up-set equals ``up(x) & up(y)``: in a
    lattice the up-set of the least upper bound is exactly the set of common
    upper bounds.  Meets are the dual lookup on down-sets.
    """

    def __init__(self, names: list[str], up: list[int]):
        if not names:
            raise LatticeValidationError(ValidationReport([("empty", ())]))
        self._names = list(names)
        self._name_index = {nm: i for i, nm in enumerate(self._names)}
        self.size = len(self._names)
        self.up = list(up)
        self.down = _transpose(self.up)
        self._by_up = {row: i for i, row in enumerate(self.up)}
        self._by_down = {row: i for i, row in enumerate(self.down)}
        full = (1 << self.size) - 1
        self.top = self._by_down[full]
        self.bottom = self._by_up[full]

    @classmethod
    def from_pairs(cls, names, pairs) -> "ExplicitLattice":
        """Build from ``[lower, upper]`` name pairs, closing the relation."""
        report = validate_lattice(names, pairs)
        if not report.ok:
            raise LatticeValidationError(report)
        index = {nm: i for i, nm in enumerate(names)}
        return cls(names, _closure_rows(len(names), [(index[a], index[b]) for a, b in pairs]))

    @classmethod
    def from_lattice(cls, lattice: Lattice) -> "ExplicitLattice":
        up = []
        for x in lattice.elements():
            row = 0
            for y in lattice.elements():
                if lattice.leq(x, y):
                    row |= 1 << y
            up.append(row)
        return cls(lattice.names, up)

    def name(self, x):
        return self._names[x]

    def index(self, name):
        return self._name_index[name]

    @property
    def names(self):
        return list(self._names)

    def leq(self, x, y):
        return bool(self.up[x] >> y & 1)

    def join(self, x, y):
        return self._by_up[self.up[x] & self.up[y]]

    def meet(self, x, y):
        return self._by_down[self.down[x] & self.down[y]]

    def above_count(self, x):
        return self.up[x].bit_count() - 1


def _validate_relation(names, pairs) -> ValidationReport:
    report = ValidationReport()
    seen = set()
    for nm in names:
        if nm in seen:
            report.fail("duplicate-name", nm)
        seen.add(nm)
    for pair in pairs:
        if len(pair) != 2:
            report.fail("malformed-pair", *pair)
            continue
        for nm in pair:
            if nm not in seen:
                report.fail("undeclared-element", nm)
    if not names:
        report.fail("empty")
    return report


def _check_antisymmetry(names, up) -> ValidationReport:
    report = ValidationReport()
    for i in range(len(up)):
        for j in iter_bits(up[i] & ~(1 << i)):
            if up[j] >> i & 1:
                report.fail("cycle", names[i], names[j])
                return report
    return report


def validate_lattice(names, pairs) -> ValidationReport:
    """Check that the reflexive-transitive closure of ``pairs`` is a lattice.

    Failures name the first cycle, or the first pair lacking a unique least
    upper bound / greatest lower bound (0 or several minimal candidates).
    """
    report = _validate_relation(names, pairs)
    if not report.ok:
        return report
    n = len(names)
    index = {nm: i for i, nm in enumerate(names)}
    up = _closure_rows(n, [(index[a], index[b]) for a, b in pairs])
    report.merge(_check_antisymmetry(names, up))
    if not report.ok:
        return report
    down = _transpose(up)
    by_up = {row: i for i, row in enumerate(up)}
    by_down = {row: i for i, row in enumerate(down)}
    lub_bad = glb_bad = False
    for x, y in combinations(range(n), 2):
        if not lub_bad and (up[x] & up[y]) not in by_up:
            k = len(_minimal_in(up[x] & up[y], down))
            report.fail("no-unique-lub", names[x], names[y])
            report.notes.append(f"({names[x]}, {names[y]}) has {k} minimal upper bounds")
            lub_bad = True
        if not glb_bad and (down[x] & down[y]) not in by_down:
            k = len(_minimal_in(down[x] & down[y], up))
            report.fail("no-unique-glb", names[x], names[y])
            report.notes.append(f"({names[x]}, {names[y]}) has {k} maximal lower bounds")
            glb_bad = True
        if lub_bad and glb_bad:
            break
    return report


def complete_with_bottom(names, pairs, bottom_name="bot") -> ExplicitLattice:
    """Turn a finite join-semilattice into a lattice.

    A synthetic ``bottom_name`` element is added below everything when the
    input has no least element; meets are then derived with
    :func:`meet_via_join`.
    """
    sl = ExplicitJoinSemilattice.from_pairs(names, pairs)
    if sl.bottom is None:
        if bottom_name in sl._name_index:
            raise InputNotJoinSemilattice(f"synthetic bottom name {bottom_name!r} already used")
        n = sl.size
        up = list(sl.up) + [(1 << (n + 1)) - 1]
        sl = ExplicitJoinSemilattice(sl.names + [bottom_name], up)
    # meets via common lower bounds; the bitset lookup in ExplicitLattice must agree
    lattice = ExplicitLattice(sl.names, sl.up)
    for x, y in combinations(sl.elements(), 2):
        m = meet_via_join(sl, (x, y))
        if m != lattice.meet(x, y):  # pragma: no cover - guards the lookup construction
            raise AssertionError(f"meet mismatch at ({sl.name(x)}, {sl.name(y)})")
    return lattice


# -- axiom checks ------------------------------------------------------------


def check_axioms(lattice: Lattice, samples: int = 10_000, seed: int = 0, exhaustive_limit: int = 64) -> ValidationReport:
    """Check partial-order and lattice laws.

    Exhaustive over all pairs and triples when ``size <= exhaustive_limit``;
    otherwise ``samples`` random triples drawn with ``seed``.
    """
    L = lattice
    n = L.size
    report = ValidationReport()
    nm = L.name

    if n <= exhaustive_limit:
        triples = ((x, y, z) for x in range(n) for y in range(n) for z in range(n))
        pairs = [(x, y) for x in range(n) for y in range(n)]
    else:
        rng = random.Random(seed)
        triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples)]
        pairs = [(x, y) for x, y, _ in triples]

    for x in (range(n) if n <= exhaustive_limit else {p[0] for p in pairs}):
        if not L.leq(x, x):
            report.fail("reflexivity", nm(x))
        if not L.leq(x, L.top):
            report.fail("top", nm(x))
        if not L.leq(L.bottom, x):
            report.fail("bottom", nm(x))
        if L.join(x, x) != x or L.meet(x, x) != x:
            report.fail("idempotence", nm(x))

    for x, y in pairs:
        le = L.leq(x, y)
        j, m = L.join(x, y), L.meet(x, y)
        if x != y and le and L.leq(y, x):
            report.fail("antisymmetry", nm(x), nm(y))
        if j != L.join(y, x):
            report.fail("join-commutativity", nm(x), nm(y))
        if m != L.meet(y, x):
            report.fail("meet-commutativity", nm(x), nm(y))
        if not (L.leq(x, j) and L.leq(y, j)):
            report.fail("join-upper-bound", nm(x), nm(y))
        if not (L.leq(m, x) and L.leq(m, y)):
            report.fail("meet-lower-bound", nm(x), nm(y))
        if L.meet(x, j) != x or L.join(x, m) != x:
            report.fail("absorption", nm(x), nm(y))
        if le != (j == y) or le != (m == x):
            report.fail("order-consistency", nm(x), nm(y))
        if len(report.failures) > 20:
            return report

    for x, y, z in triples:
        if L.leq(x, y) and L.leq(y, z) and not L.leq(x, z):
            report.fail("transitivity", nm(x), nm(y), nm(z))
        j = L.join(x, y)
        if L.leq(x, z) and L.leq(y, z) and not L.leq(j, z):
            report.fail("join-least", nm(x), nm(y), nm(z))
        m = L.meet(x, y)
        if L.leq(z, x) and L.leq(z, y) and not L.leq(z, m):
            report.fail("meet-greatest", nm(x), nm(y), nm(z))
        if L.join(j, z) != L.join(x, L.join(y, z)):
            report.fail("join-associativity", nm(x), nm(y), nm(z))
        if L.meet(m, z) != L.meet(x, L.meet(y, z)):
            report.fail("meet-associativity", nm(x), nm(y), nm(z))
        if len(report.failures) > 20:
            break
    return report
