from __future__ import annotations


class HasseDiagram:
    """Cover edges ``(lower, upper)`` of a lattice, in insertion order.

    ``uc(x)`` and ``lc(y)`` are the projections onto upper and lower covers.
    Two diagrams compare equal when their edge sets are equal.
    """

    def __init__(self, lattice, edges=()):
        self.lattice = lattice
        self._edges = []
        self._set = set()
        self._uc = {}
        self._lc = {}
        for x, z in edges:
            self.add(x, z)

    def add(self, lower: int, upper: int):
        if (lower, upper) in self._set:
            return
        self._set.add((lower, upper))
        self._edges.append((lower, upper))
        self._uc.setdefault(lower, []).append(upper)
        self._lc.setdefault(upper, []).append(lower)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return list(self._edges)

    @property
    def edge_set(self) -> frozenset:
        return frozenset(self._set)

    def uc(self, x: int) -> set[int]:
        return set(self._uc.get(x, ()))

    def lc(self, y: int) -> set[int]:
        return set(self._lc.get(y, ()))

    def named_edges(self) -> list[tuple[str, str]]:
        """Edges as name pairs, sorted lexicographically by (lower, upper)."""
        nm = self.lattice.name
        return sorted((nm(x), nm(z)) for x, z in self._edges)

    def __contains__(self, edge):
        return edge in self._set

    def __len__(self):
        return len(self._edges)

    def __iter__(self):
        return iter(self._edges)

    def __eq__(self, other):
        if isinstance(other, HasseDiagram):
            return self._set == other._set
        return NotImplemented

    def __repr__(self):
        return f"HasseDiagram({self.named_edges()!r})"
