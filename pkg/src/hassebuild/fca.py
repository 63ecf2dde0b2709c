"""Formal contexts, closed attribute sets and concept lattices.

Intents are attribute bitmasks: bit ``i`` is the ``i``-th attribute column.
Concept lattices are ordered by reverse inclusion of intents, so the join
of two concepts is the intersection of their intents and the top concept
carries the smallest intent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import ParameterTooLarge, UnknownAttribute
from .lattice import Lattice, iter_bits
from .zoo import PowersetLattice

MAX_ATTRIBUTES = 30


@dataclass(frozen=True)
class FormalContext:
    objects: tuple
    attributes: tuple
    rows: tuple  # one attribute bitmask per object
    _attr_index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "attributes", tuple(self.attributes))
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("duplicate object name")
        if len(set(self.attributes)) != len(self.attributes):
            raise ValueError("duplicate attribute name")
        if len(self.rows) != len(self.objects):
            raise ValueError("one incidence row per object required")
        limit = 1 << len(self.attributes)
        if any(r < 0 or r >= limit for r in self.rows):
            raise ValueError("incidence row refers to a missing attribute column")
        object.__setattr__(self, "_attr_index", {a: i for i, a in enumerate(self.attributes)})

    @classmethod
    def from_matrix(cls, objects, attributes, matrix) -> "FormalContext":
        rows = []
        for line in matrix:
            if len(line) != len(attributes):
                raise ValueError("incidence row length does not match attribute count")
            rows.append(sum(1 << j for j, v in enumerate(line) if v))
        return cls(tuple(objects), tuple(attributes), tuple(rows))

    @property
    def full(self) -> int:
        return (1 << len(self.attributes)) - 1

    def incidence(self, g: int, m: int) -> bool:
        return bool(self.rows[g] >> m & 1)

    def mask(self, attrs) -> int:
        """Bitmask for an iterable of attribute names, or a mask passed through."""
        if isinstance(attrs, int):
            if attrs < 0 or attrs > self.full:
                raise UnknownAttribute(attrs)
            return attrs
        m = 0
        for a in attrs:
            try:
                m |= 1 << self._attr_index[a]
            except KeyError:
                raise UnknownAttribute(a) from None
        return m

    def attribute_names(self, mask: int) -> list[str]:
        return [self.attributes[i] for i in iter_bits(mask)]

    def extent(self, mask: int) -> int:
        """Objects (as a bitmask) having every attribute of ``mask``."""
        out = 0
        for g, row in enumerate(self.rows):
            if row & mask == mask:
                out |= 1 << g
        return out


def closure_mask(ctx: FormalContext, mask: int) -> int:
    common = ctx.full
    for row in ctx.rows:
        if row & mask == mask:
            common &= row
    return common


def closure(ctx: FormalContext, attrs) -> int:
    """Attributes shared by every object that has all of ``attrs``.

    With no such object the intersection is vacuous and every attribute is
    returned.
    """
    return closure_mask(ctx, ctx.mask(attrs))


def enumerate_intents(ctx: FormalContext) -> list[int]:
    """All closed attribute sets in lectic order (NextClosure).

    Attribute ``i`` is the ``i``-th column; a set is lectically smaller when
    the first attribute where the two sets differ belongs to the other one.
    """
    m = len(ctx.attributes)
    if m > MAX_ATTRIBUTES:
        raise ParameterTooLarge(f"{m} attributes exceeds the limit of {MAX_ATTRIBUTES}")
    full = ctx.full
    current = closure_mask(ctx, 0)
    intents = [current]
    while current != full:
        for i in range(m - 1, -1, -1):
            bit = 1 << i
            if current & bit:
                continue
            prefix = bit - 1
            candidate = closure_mask(ctx, (current & prefix) | bit)
            if candidate & prefix == current & prefix:
                current = candidate
                break
        intents.append(current)
    return intents


class ConceptLattice(Lattice):
    """Intents ordered by reverse inclusion: join = ∩, meet = closure(∪)."""

    def __init__(self, ctx: FormalContext, intents=None):
        self.context = ctx
        self.intents = list(enumerate_intents(ctx) if intents is None else intents)
        self._pos = {m: i for i, m in enumerate(self.intents)}
        if len(self._pos) != len(self.intents):
            raise ValueError("duplicate intent")
        self.size = len(self.intents)
        self.top = self._pos[closure_mask(ctx, 0)]
        self.bottom = self._pos[ctx.full]
        self._meets = {}

    def leq(self, x, y):
        iy = self.intents[y]
        return self.intents[x] & iy == iy

    def join(self, x, y):
        return self._pos[self.intents[x] & self.intents[y]]

    def meet(self, x, y):
        key = self.intents[x] | self.intents[y]
        hit = self._meets.get(key)
        if hit is None:
            hit = self._meets[key] = self._pos[closure_mask(self.context, key)]
        return hit

    def name(self, x):
        return "{" + ",".join(self.context.attribute_names(self.intents[x])) + "}"

    def intent_size(self, x) -> int:
        return self.intents[x].bit_count()

    def above_count(self, x):
        ix = self.intents[x]
        return sum(1 for m in self.intents if m != ix and ix & m == m)


def concept_lattice(ctx: FormalContext) -> ConceptLattice:
    return ConceptLattice(ctx)


def powerset_intent_embedding(cl: ConceptLattice):
    """Identity map of intents into the reversed powerset of the attributes."""
    from .algorithms import Embedding

    codomain = PowersetLattice(len(cl.context.attributes), reversed=True, attributes=cl.context.attributes)
    return Embedding(codomain, list(cl.intents), kind="powerset")


def random_context(n_objects: int, n_attributes: int, density: float = 0.5, seed: int = 0) -> FormalContext:
    rng = random.Random(seed)
    rows = []
    for _ in range(n_objects):
        rows.append(sum(1 << j for j in range(n_attributes) if rng.random() < density))
    return FormalContext(
        tuple(f"g{i + 1}" for i in range(n_objects)),
        tuple(f"m{j + 1}" for j in range(n_attributes)),
        tuple(rows),
    )
