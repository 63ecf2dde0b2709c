"""Borders: the working set of the traversal algorithms.

A set ``B`` is a border for ``x`` when no member of ``B`` is below ``x`` and
every upper cover of ``x`` is above some member of ``B``.  The joins
``x ∨ y`` for ``y`` in such a border contain all upper covers of ``x``, and
the upper covers are exactly the minimal ones among those joins.
"""

from __future__ import annotations

from .diagram import HasseDiagram
from .lattice import Lattice


class Border:
    """Insertion-ordered set of elements with O(1) membership and removal."""

    __slots__ = ("_items",)

    def __init__(self, items=()):
        self._items = dict.fromkeys(items)

    def add(self, x: int):
        self._items[x] = None

    def discard(self, x: int):
        self._items.pop(x, None)

    def copy(self) -> "Border":
        b = Border()
        b._items = dict(self._items)
        return b

    def __contains__(self, x):
        return x in self._items

    def __iter__(self):
        return iter(self._items)

    def __len__(self):
        return len(self._items)

    def __eq__(self, other):
        if isinstance(other, Border):
            return self._items.keys() == other._items.keys()
        return set(self._items) == set(other)

    def __repr__(self):
        return f"Border({list(self._items)!r})"


def _cover_source(L: Lattice, uc_oracle):
    if uc_oracle is None:
        from .oracle import upper_cover

        return lambda x: upper_cover(L, x)
    if isinstance(uc_oracle, HasseDiagram):
        return uc_oracle.uc
    return uc_oracle


def is_border(L: Lattice, B, x: int, uc_oracle=None) -> bool:
    """Check both border clauses for ``B`` and ``x``.

    ``uc_oracle`` supplies upper covers: a callable, a completed
    :class:`HasseDiagram`, or ``None`` for brute force.
    """
    if any(L.leq(y, x) for y in B):
        return False
    covers = _cover_source(L, uc_oracle)(x)
    return all(any(L.leq(y, z) for y in B) for z in covers)


def is_proper(L: Lattice, B) -> bool:
    """True iff the members of ``B`` are pairwise incomparable."""
    items = list(B)
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            if L.leq(a, b) or L.leq(b, a):
                return False
    return True


def standard_step(B, x: int, cover) -> Border:
    """``B ∪ {x} − cover`` as a new border; ``B`` is left untouched."""
    out = B.copy() if isinstance(B, Border) else Border(B)
    out.add(x)
    for z in cover:
        out.discard(z)
    return out


def candidates(L: Lattice, x: int, B) -> list[int]:
    """Distinct joins ``x ∨ y`` for ``y`` in ``B``, in border order."""
    return list(dict.fromkeys(L.join(x, y) for y in B))


def minimals(L: Lattice, S) -> list[int]:
    """Members of ``S`` with no strictly smaller member of ``S``."""
    items = list(S)
    out = []
    for s in items:
        for t in items:
            if t != s and L.leq(t, s):
                break
        else:
            out.append(s)
    return out


def cover_from_border(L: Lattice, x: int, B) -> set[int]:
    return set(minimals(L, candidates(L, x, B)))
