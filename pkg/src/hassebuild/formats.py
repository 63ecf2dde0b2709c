"""Readers and writers for every on-disk format.

Lattice JSON::

    {"elements": [...], "order": "covers" | "leq", "pairs": [[lower, upper], ...]}

Burmeister CXT: ``B``, blank line, object count, attribute count, blank
line, object names, attribute names, then one row of ``.``/``X`` per object.

Transactions: one object per line, whitespace separated item tokens.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .diagram import HasseDiagram
from .errors import InputSyntaxError
from .fca import FormalContext
from .lattice import ExplicitLattice, Lattice


# -- lattice JSON ------------------------------------------------------------


def parse_lattice_json(text: str) -> ExplicitLattice:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputSyntaxError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise InputSyntaxError("top level must be an object")
    for key in ("elements", "order", "pairs"):
        if key not in doc:
            raise InputSyntaxError(f"missing key {key!r}")
    elements, order, pairs = doc["elements"], doc["order"], doc["pairs"]
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise InputSyntaxError("'elements' must be a list of strings")
    if order not in ("covers", "leq"):
        raise InputSyntaxError(f"'order' must be 'covers' or 'leq', got {order!r}")
    if not isinstance(pairs, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(v, str) for v in p) for p in pairs
    ):
        raise InputSyntaxError("'pairs' must be a list of [lower, upper] string pairs")
    # covers and leq inputs are both closed reflexively and transitively
    return ExplicitLattice.from_pairs(elements, [tuple(p) for p in pairs])


def emit_lattice_json(L: Lattice, diagram: HasseDiagram | None = None) -> str:
    """Canonical document: elements in index order, cover pairs sorted by
    (lower index, upper index)."""
    if diagram is None:
        from .oracle import oracle_hasse

        diagram = oracle_hasse(L)
    lines = ["{", f'  "elements": {json.dumps(L.names)},', '  "order": "covers",']
    pairs = sorted(diagram.edges)
    if not pairs:
        lines.append('  "pairs": []')
    else:
        lines.append('  "pairs": [')
        body = [f"    {json.dumps([L.name(x), L.name(y)])}" for x, y in pairs]
        lines.append(",\n".join(body))
        lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- formal contexts ---------------------------------------------------------


def parse_cxt(text: str) -> FormalContext:
    lines = [ln.rstrip("\r") for ln in text.split("\n")]
    while lines and lines[-1] == "":
        lines.pop()

    def line(i):
        if i >= len(lines):
            raise InputSyntaxError("unexpected end of file", i + 1)
        return lines[i]

    if line(0) != "B":
        raise InputSyntaxError("first line must be 'B'", 1, 1)
    if line(1) != "":
        raise InputSyntaxError("second line must be blank", 2, 1)
    counts = []
    for i in (2, 3):
        try:
            value = int(line(i))
        except ValueError:
            raise InputSyntaxError(f"expected a count, got {line(i)!r}", i + 1, 1) from None
        if value < 0:
            raise InputSyntaxError("counts must be non-negative", i + 1, 1)
        counts.append(value)
    n_obj, n_attr = counts
    if line(4) != "":
        raise InputSyntaxError("blank line expected after the counts", 5, 1)
    pos = 5
    objects = [line(pos + i) for i in range(n_obj)]
    pos += n_obj
    attributes = [line(pos + i) for i in range(n_attr)]
    pos += n_attr
    for names, start in ((objects, 5), (attributes, 5 + n_obj)):
        seen = set()
        for i, nm in enumerate(names):
            if nm in seen:
                raise InputSyntaxError(f"duplicate name {nm!r}", start + i + 1, 1)
            seen.add(nm)
    rows = []
    for g in range(n_obj):
        row_text = line(pos + g)
        if len(row_text) != n_attr:
            raise InputSyntaxError(
                f"row has {len(row_text)} cells, expected {n_attr}", pos + g + 1, min(len(row_text), n_attr) + 1
            )
        mask = 0
        for j, ch in enumerate(row_text):
            if ch == "X":
                mask |= 1 << j
            elif ch != ".":
                raise InputSyntaxError(f"illegal character {ch!r}", pos + g + 1, j + 1)
        rows.append(mask)
    if len(lines) > pos + n_obj:
        raise InputSyntaxError("trailing content after the incidence rows", pos + n_obj + 1, 1)
    return FormalContext(tuple(objects), tuple(attributes), tuple(rows))


def emit_cxt(ctx: FormalContext) -> str:
    out = ["B", "", str(len(ctx.objects)), str(len(ctx.attributes)), ""]
    out.extend(ctx.objects)
    out.extend(ctx.attributes)
    width = len(ctx.attributes)
    for row in ctx.rows:
        out.append("".join("X" if row >> j & 1 else "." for j in range(width)))
    return "\n".join(out) + "\n"


def parse_transactions(text: str) -> FormalContext:
    """One transaction per line; objects are named by 1-based line number
    and the attribute universe is the sorted set of distinct tokens."""
    transactions = [ln.split() for ln in text.splitlines()]
    universe = sorted({tok for items in transactions for tok in items})
    index = {tok: j for j, tok in enumerate(universe)}
    rows = [sum({1 << index[tok] for tok in items}) for items in transactions]
    return FormalContext(tuple(str(i + 1) for i in range(len(rows))), tuple(universe), tuple(rows))


# -- diagram output ----------------------------------------------------------


def _dot_quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(H: HasseDiagram) -> str:
    """Edges point from lower to upper element, sorted by name pair."""
    lines = ["digraph hasse {"]
    lines.extend(f"{_dot_quote(lo)} -> {_dot_quote(up)};" for lo, up in H.named_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_edges_json(H: HasseDiagram) -> str:
    return json.dumps([list(e) for e in H.named_edges()]) + "\n"


def _members(L: Lattice, items) -> str:
    return "{" + ",".join(L.name(x) for x in sorted(items)) + "}"


def emit_trace(records, L: Lattice, codomain: Lattice) -> str:
    """One line per processed element: border after the step, candidates,
    covers found, and the LC value of every element ('-' before it is
    reached).  Members are listed in element index order."""
    lines = []
    for r in records:
        lc = " ".join(
            f"{L.name(z)}={codomain.name(r.lc[z]) if z in r.lc else '-'}" for z in L.elements()
        )
        lines.append(
            f"{L.name(r.element)} | B={_members(L, r.border)} | cand={_members(L, r.candidates)}"
            f" | add={_members(L, r.added)} | LC: {lc}"
        )
    return "\n".join(lines) + "\n"


@dataclass
class RunStats:
    algorithm: str
    n: int
    width: int | None
    edges: int
    ops: dict = field(default_factory=dict)
    codomain_ops: dict = field(default_factory=dict)
    max_border: int = 0
    wall_ms: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)


def emit_stats(stats) -> str:
    if isinstance(stats, RunStats):
        stats = stats.to_dict()
    return json.dumps(stats, indent=2, sort_keys=True) + "\n"
