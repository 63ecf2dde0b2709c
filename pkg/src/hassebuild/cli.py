"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 embedding rejected.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import formats
from .algorithms import (
    generalized_border,
    generalized_ipred,
    identity_embedding,
    meet_irreducible_embedding,
)
from .errors import EmbeddingInvalid, HasseError, InputNotJoinSemilattice, InputSyntaxError, LatticeValidationError
from .fca import ConceptLattice, powerset_intent_embedding, random_context
from .lattice import OpCounters
from .oracle import distributivity_witness, oracle_hasse, width
from .traversal import reverse_topo_sort
from .zoo import divisor, partition, powerset

EXIT_USAGE, EXIT_INPUT, EXIT_EMBEDDING = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hassebuild", description="Hasse diagrams of finite lattices by border traversal.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fmt_choices = ["lattice-json", "cxt", "transactions"]
    d = sub.add_parser("diagram", help="compute the Hasse diagram of a lattice")
    d.add_argument("--algo", choices=["border", "ipred", "oracle"], default="ipred")
    d.add_argument("--input", required=True)
    d.add_argument("--format", choices=fmt_choices)
    d.add_argument("--embedding", choices=["identity", "powerset", "meet-irreducible"])
    d.add_argument("--sort", default="above-count", help="above-count | random:SEED | key:intent-size")
    d.add_argument("--out", choices=["dot", "json"], default="dot")
    d.add_argument("--stats")
    d.add_argument("--trace")
    d.add_argument("--unchecked", action="store_true", help="skip embedding validation")

    c = sub.add_parser("check", help="validate a lattice file")
    c.add_argument("--input", required=True)
    c.add_argument("--format", choices=fmt_choices)
    c.add_argument("--distributive", action="store_true")

    k = sub.add_parser("concepts", help="write the concept lattice of a context as lattice JSON")
    k.add_argument("--input", required=True)
    k.add_argument("--format", choices=["cxt", "transactions"])
    k.add_argument("--out", required=True)

    b = sub.add_parser("bench", help="run both algorithms on generated lattices")
    b.add_argument("--suite", required=True, help="comma separated: powerset:K, divisor:N, partition:K, "
                   "random-context:OBJSxATTRS:DENSITY:SEED")
    b.add_argument("--repeat", type=int, default=1)
    b.add_argument("--stats")
    return parser


def _infer_format(path: str, given: str | None) -> str:
    if given:
        return given
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        return "lattice-json"
    if suffix == ".cxt":
        return "cxt"
    return "transactions"


def load_lattice(path: str, fmt: str):
    """Return ``(lattice, is_concept_lattice)``."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if fmt == "lattice-json":
        return formats.parse_lattice_json(text)
    ctx = formats.parse_cxt(text) if fmt == "cxt" else formats.parse_transactions(text)
    return ConceptLattice(ctx)


def _embedding(L, name: str | None):
    if name is None:
        name = "powerset" if isinstance(L, ConceptLattice) else "meet-irreducible"
    if name == "powerset":
        if not isinstance(L, ConceptLattice):
            raise UsageError("--embedding powerset needs a cxt or transactions input")
        return powerset_intent_embedding(L)
    if name == "identity":
        return identity_embedding(L)
    return meet_irreducible_embedding(L)


def _order(L, spec: str, emb):
    if spec == "above-count":
        return reverse_topo_sort(L)
    if spec.startswith("random:"):
        try:
            seed = int(spec.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad seed in --sort {spec}") from None
        return reverse_topo_sort(L, "random", seed=seed)
    if spec == "key:intent-size":
        if isinstance(L, ConceptLattice):
            key = L.intent_size
        elif emb is not None and emb.kind in ("powerset", "meet-irreducible"):
            key = lambda x: emb(x).bit_count()  # noqa: E731
        else:
            raise UsageError("key:intent-size needs a concept lattice or a set-valued embedding")
        return reverse_topo_sort(L, "rank-key", key=key)
    raise UsageError(f"unknown --sort {spec!r}")


def run_algorithm(L, algo: str, order, emb, unchecked=False, trace=None, with_width=True) -> tuple:
    """Run one algorithm with counters; returns ``(diagram, RunStats)``."""
    counters, codomain_counters = OpCounters(), OpCounters()
    max_border = [1 if L.size else 0]

    def watch(x, border, *rest):
        max_border[0] = max(max_border[0], len(border))

    start = time.perf_counter()
    if algo == "border":
        H = generalized_border(L, order, counters=counters, observer=watch)
    elif algo == "ipred":
        H = generalized_ipred(L, order, emb, counters=counters, codomain_counters=codomain_counters,
                              trace=trace, unchecked=unchecked, observer=watch)
    else:
        H = oracle_hasse(L)
        max_border[0] = 0
    wall = (time.perf_counter() - start) * 1000.0
    stats = formats.RunStats(
        algorithm=algo,
        n=L.size,
        width=width(L) if with_width else None,
        edges=len(H),
        ops=counters.as_dict(),
        codomain_ops=codomain_counters.as_dict(),
        max_border=max_border[0],
        wall_ms=round(wall, 3),
    )
    return H, stats


def _cmd_diagram(args) -> int:
    L = load_lattice(args.input, _infer_format(args.input, args.format))
    if args.trace and args.algo != "ipred":
        raise UsageError("--trace is only available with --algo ipred")
    emb = _embedding(L, args.embedding) if args.algo == "ipred" or args.sort == "key:intent-size" else None
    order = _order(L, args.sort, emb)
    records = [] if args.trace else None
    H, stats = run_algorithm(L, args.algo, order, emb, unchecked=args.unchecked,
                             trace=records.append if records is not None else None,
                             with_width=bool(args.stats))
    out = formats.emit_dot(H) if args.out == "dot" else formats.emit_edges_json(H)
    sys.stdout.write(out)
    if args.stats:
        Path(args.stats).write_text(formats.emit_stats(stats))
    if args.trace:
        Path(args.trace).write_text(formats.emit_trace(records, L, emb.codomain))
    return 0


def _cmd_check(args) -> int:
    L = load_lattice(args.input, _infer_format(args.input, args.format))
    lines = ["valid: true", f"elements: {L.size}", f"width: {width(L)}"]
    if args.distributive:
        witness = distributivity_witness(L)
        if witness is None:
            lines.append("distributive: true")
        else:
            lines.append("distributive: false (witness: " + ", ".join(L.name(v) for v in witness) + ")")
    print("\n".join(lines))
    return 0


def _cmd_concepts(args) -> int:
    fmt = _infer_format(args.input, args.format)
    if fmt == "lattice-json":
        raise UsageError("concepts needs a cxt or transactions input")
    L = load_lattice(args.input, fmt)
    H = generalized_ipred(L, reverse_topo_sort(L), powerset_intent_embedding(L))
    Path(args.out).write_text(formats.emit_lattice_json(L, H))
    return 0


def parse_suite_item(item: str):
    """``(label, lattice, embedding)`` for one bench suite entry."""
    parts = item.strip().split(":")
    try:
        if parts[0] == "powerset" and len(parts) == 2:
            L = powerset(int(parts[1]))
            return item, L, identity_embedding(L)
        if parts[0] == "divisor" and len(parts) == 2:
            L = divisor(int(parts[1]))
            return item, L, identity_embedding(L)
        if parts[0] == "partition" and len(parts) == 2:
            L = partition(int(parts[1]))
            return item, L, meet_irreducible_embedding(L)
        if parts[0] == "random-context" and len(parts) == 4:
            objs, attrs = (int(v) for v in parts[1].lower().split("x"))
            ctx = random_context(objs, attrs, float(parts[2]), int(parts[3]))
            L = ConceptLattice(ctx)
            return item, L, powerset_intent_embedding(L)
    except ValueError as exc:
        if isinstance(exc, HasseError):
            raise
        raise UsageError(f"bad suite entry {item!r}") from None
    raise UsageError(f"bad suite entry {item!r}")


def _cmd_bench(args) -> int:
    if args.repeat < 1:
        raise UsageError("--repeat must be at least 1")
    results = []
    for item in filter(None, args.suite.split(",")):
        label, L, emb = parse_suite_item(item)
        w = width(L)
        order = reverse_topo_sort(L)
        for algo in ("border", "ipred"):
            runs = [run_algorithm(L, algo, order, emb, with_width=False)[1] for _ in range(args.repeat)]
            best = min(runs, key=lambda s: s.wall_ms)
            best.width = w
            entry = best.to_dict()
            entry["instance"] = label
            entry["wall_ms_all"] = [s.wall_ms for s in runs]
            results.append(entry)
    doc = {"suite": args.suite, "repeat": args.repeat, "results": results}
    text = formats.emit_stats(doc)
    if args.stats:
        Path(args.stats).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


COMMANDS = {"diagram": _cmd_diagram, "check": _cmd_check, "concepts": _cmd_concepts, "bench": _cmd_bench}


def cli_main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"hassebuild: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EmbeddingInvalid as exc:
        print(f"hassebuild: {exc}", file=sys.stderr)
        return EXIT_EMBEDDING
    except (InputSyntaxError, LatticeValidationError, InputNotJoinSemilattice, ValueError) as exc:
        print(f"hassebuild: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(cli_main())
