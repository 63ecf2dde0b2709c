"""Hasse diagram construction by border traversal.

``generalized_border`` finds the upper covers of each element as the minimal
joins with the current border.  ``generalized_ipred`` replaces the minimality
filter by a single comparison in a distributive lattice that the input embeds
into, keeping per element the meet of the images of the lower covers found
so far.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .border import Border, candidates, minimals
from .diagram import HasseDiagram
from .errors import EmbeddingInvalid, InvalidOrder
from .lattice import CountingLattice, Lattice, OpCounters, ValidationReport
from .oracle import distributivity_witness, meet_irreducibles, oracle_hasse
from .traversal import verify_reverse_topo
from .zoo import PowersetLattice


class Embedding:
    """Map ``f`` from a lattice into ``codomain``; ``image[x]`` is ``f(x)``."""

    def __init__(self, codomain: Lattice, image, kind: str = "custom"):
        self.codomain = codomain
        self.image = list(image)
        self.kind = kind

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __len__(self):
        return len(self.image)

    def __repr__(self):
        return f"<Embedding {self.kind} into {self.codomain!r}>"


class _CountingEmbedding(Embedding):
    def __init__(self, inner: Embedding, counters: OpCounters, codomain_counters: OpCounters):
        super().__init__(CountingLattice(inner.codomain, codomain_counters), inner.image, inner.kind)
        self.counters = counters

    def __call__(self, x):
        self.counters.f_calls += 1
        return self.image[x]


def identity_embedding(L: Lattice) -> Embedding:
    return Embedding(L, range(L.size), kind="identity")


def label_embedding(L: Lattice, codomain: Lattice, mapping=None) -> Embedding:
    """Map each element to the codomain element with the same name, or via
    an explicit ``{name: name}`` mapping."""
    mapping = mapping or {}
    return Embedding(codomain, [codomain.index(mapping.get(L.name(x), L.name(x))) for x in L.elements()], kind="label")


def meet_irreducible_embedding(L: Lattice, diagram: HasseDiagram | None = None) -> Embedding:
    """``f(x)`` = the meet-irreducibles above ``x``, in the reversed powerset
    over the meet-irreducibles (where join is intersection)."""
    irr = meet_irreducibles(L, diagram)
    codomain = PowersetLattice(len(irr), reversed=True, attributes=[L.name(m) for m in irr])
    image = []
    for x in L.elements():
        mask = 0
        for i, m in enumerate(irr):
            if L.leq(x, m):
                mask |= 1 << i
        image.append(mask)
    return Embedding(codomain, image, kind="meet-irreducible")


def validate_embedding(emb: Embedding, L: Lattice, samples: int = 10_000, seed: int = 0,
                       exhaustive_limit: int = 64) -> ValidationReport:
    """Check that ``emb`` is an injective join-homomorphism preserving the
    bottom into a distributive codomain.

    Meet preservation is not required; where it fails the first witness is
    recorded in ``notes`` only.
    """
    C = emb.codomain
    report = ValidationReport()
    nm = L.name
    n = L.size
    if len(emb) != n:
        report.fail("domain-size", n, len(emb))
        return report

    seen = {}
    for x in L.elements():
        fx = emb(x)
        if fx in seen:
            report.fail("injectivity", nm(seen[fx]), nm(x))
            break
        seen[fx] = x

    if n <= exhaustive_limit:
        pairs = [(x, y) for x in range(n) for y in range(x + 1, n)]
    else:
        rng = random.Random(seed)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(samples)]
    meet_note = None
    for x, y in pairs:
        if emb(L.join(x, y)) != C.join(emb(x), emb(y)):
            report.fail("join-preservation", nm(x), nm(y))
            break
        if meet_note is None and emb(L.meet(x, y)) != C.meet(emb(x), emb(y)):
            meet_note = f"meet not preserved at ({nm(x)}, {nm(y)})"
    if meet_note:
        report.notes.append(meet_note)

    if emb(L.bottom) != C.bottom:
        report.fail("bottom-preservation", nm(L.bottom))

    if C.distributive_by_construction:
        report.notes.append(f"codomain {type(C).__name__} is distributive by construction")
    elif C.size <= exhaustive_limit:
        witness = distributivity_witness(C)
        if witness is not None:
            report.fail("codomain-distributivity", *(C.name(v) for v in witness))
    else:
        rng = random.Random(seed + 1)
        for _ in range(samples):
            a, b, c = rng.randrange(C.size), rng.randrange(C.size), rng.randrange(C.size)
            if C.meet(a, C.join(b, c)) != C.join(C.meet(a, b), C.meet(a, c)):
                report.fail("codomain-distributivity", C.name(a), C.name(b), C.name(c))
                break
        report.notes.append("codomain distributivity sampled")
    return report


def slow_cover_test(L: Lattice, x: int, z: int, Y) -> bool:
    """Cover test valid in any lattice: ``meet(x ∨ y for y in Y) >= z``.

    ``Y`` holds the lower covers of ``z`` met before ``x`` in the traversal;
    the empty meet is the top.
    """
    acc = L.top
    for y in Y:
        acc = L.meet(acc, L.join(x, y))
    return L.leq(z, acc)


def distributive_cover_test(L: Lattice, x: int, z: int, meet_y: int) -> bool:
    """Cover test for distributive lattices: ``x ∨ meet_y >= z``."""
    return L.leq(z, L.join(x, meet_y))


def _check_order(L: Lattice, order, verify: bool) -> list[int]:
    order = list(order)
    if len(order) != L.size or set(order) != set(L.elements()):
        raise InvalidOrder("order is not a permutation of the lattice")
    if verify and not verify_reverse_topo(L, order):
        raise InvalidOrder("order is not a reverse topological sort")
    return order


def generalized_border(L: Lattice, order, counters: OpCounters | None = None, verify_order: bool = False,
                       observer=None) -> HasseDiagram:
    """Hasse diagram of ``L`` from a reverse topological ``order``.

    ``observer(x, border, candidates, cover)`` is called before the border is
    advanced, with the border that was used for ``x``.
    """
    order = _check_order(L, order, verify_order)
    H = HasseDiagram(L)
    if counters is not None:
        L = CountingLattice(L, counters)
    B = Border()
    for x in order:
        cands = candidates(L, x, B)
        cover = minimals(L, cands)
        for z in cover:
            H.add(x, z)
        if observer is not None:
            observer(x, B, cands, cover)
        for z in cover:
            B.discard(z)
        B.add(x)
    return H


@dataclass
class TraceRecord:
    """State at the end of processing ``element``."""

    element: int
    border: list
    candidates: list
    added: list
    lc: dict = field(default_factory=dict)


def generalized_ipred(L: Lattice, order, emb: Embedding, counters: OpCounters | None = None, trace=None,
                      unchecked: bool = False, verify_order: bool = False, codomain_counters: OpCounters | None = None,
                      check_lc: bool = False, observer=None) -> HasseDiagram:
    """Hasse diagram of ``L`` using an embedding into a distributive lattice.

    A candidate ``z = x ∨ y`` (``y`` in the border) is a cover of ``x`` iff
    ``f(x) ∨ LC[z] >= f(z)``, where ``LC[z]`` is the codomain meet of the
    images of the lower covers of ``z`` found so far (top when none).

    ``trace`` receives a :class:`TraceRecord` per element.  Operations on the
    codomain are tallied into ``codomain_counters`` (default: ``counters``).
    ``observer(x, border, candidates)`` sees the border used for ``x``.
    """
    if not unchecked:
        report = validate_embedding(emb, L)
        if not report.ok:
            raise EmbeddingInvalid(report)
    order = _check_order(L, order, verify_order)
    H = HasseDiagram(L)
    f = emb
    if counters is not None:
        L = CountingLattice(L, counters)
        f = _CountingEmbedding(emb, counters, codomain_counters if codomain_counters is not None else counters)
    C = f.codomain

    LC = {}
    B = Border()
    for x in order:
        LC[x] = C.top
        fx = f(x)
        cands = candidates(L, x, B)
        if observer is not None:
            observer(x, B.copy(), cands)
        added = []
        for z in cands:
            if C.leq(f(z), C.join(fx, LC[z])):
                H.add(x, z)
                LC[z] = C.meet(LC[z], fx)
                B.discard(z)
                added.append(z)
        B.add(x)
        if check_lc:
            _assert_lc(H, LC, emb)
        if trace is not None:
            trace(TraceRecord(x, list(B), cands, added, dict(LC)))
    return H


def _assert_lc(H: HasseDiagram, LC: dict, emb: Embedding):
    C = emb.codomain
    for z, value in LC.items():
        expected = C.meet_all(emb(y) for y in H.lc(z))
        if value != expected:
            raise AssertionError(f"LC[{H.lattice.name(z)}] drifted from the meet of its lower covers")


def build_diagram(L: Lattice, algorithm: str, order=None, emb: Embedding | None = None, **kwargs) -> HasseDiagram:
    """Dispatch on ``border`` / ``ipred`` / ``oracle``."""
    if algorithm == "oracle":
        return oracle_hasse(L)
    from .traversal import reverse_topo_sort

    if order is None:
        order = reverse_topo_sort(L)
    if algorithm == "border":
        return generalized_border(L, order, **kwargs)
    if algorithm == "ipred":
        if emb is None:
            emb = meet_irreducible_embedding(L)
        return generalized_ipred(L, order, emb, **kwargs)
    raise ValueError(f"unknown algorithm {algorithm!r}")
