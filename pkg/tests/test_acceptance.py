"""Acceptance criteria, one test per criterion.

Each test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line (visible in
``pytest -v`` output without ``-s``) before asserting.
"""

import json
import time
from contextlib import contextmanager

import pytest

from conftest import DATA, GOLDEN, criterion4_instances, named_edges
from hassebuild import (
    ConceptLattice,
    OpCounters,
    check_paper_laws,
    cover_from_border,
    distributivity_witness,
    fixture_fig1a,
    fixture_fig1b,
    fixture_fig2,
    generalized_border,
    generalized_ipred,
    identity_embedding,
    is_border,
    is_distributive,
    is_proper,
    label_embedding,
    meet_irreducible_embedding,
    oracle_hasse,
    partition,
    powerset,
    powerset_intent_embedding,
    random_linear_extension,
    reverse_topo_sort,
    validate_embedding,
    width,
)
from hassebuild.cli import cli_main
from hassebuild.formats import emit_cxt, emit_lattice_json, emit_trace, parse_cxt, parse_lattice_json


@contextmanager
def criterion(capsys, number, title):
    detail = []
    try:
        yield detail
    except BaseException as exc:
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} FAIL {title}: {exc or type(exc).__name__}".rstrip())
        raise
    with capsys.disabled():
        print(f"\nACCEPTANCE {number} PASS {title}" + (f" ({'; '.join(detail)})" if detail else ""))


def trace_of(L, emb, **kw):
    records = []
    generalized_ipred(L, reverse_topo_sort(L), emb, trace=records.append, **kw)
    return emit_trace(records, L, emb.codomain)


def embedding_for(L):
    """A validated embedding for the fuzz: intents for concept lattices,
    the identity for distributive lattices, meet-irreducibles otherwise."""
    if isinstance(L, ConceptLattice):
        emb = powerset_intent_embedding(L)
    elif L.size <= 64 and is_distributive(L):
        emb = identity_embedding(L)
    else:
        emb = meet_irreducible_embedding(L)
    report = validate_embedding(emb, L)
    assert report.ok, report.failures
    return emb


def fuzz_orders(L, count=20):
    half = count // 2
    orders = [reverse_topo_sort(L, "random", seed=s) for s in range(half)]
    orders += [random_linear_extension(L, s) for s in range(count - half)]
    return orders


def test_criterion_1_fig1a_label_trace(capsys):
    with criterion(capsys, 1, "Fig1a label-embedding golden trace"):
        fig1a, fig1b = fixture_fig1a(), fixture_fig1b()
        got = trace_of(fig1a, label_embedding(fig1a, fig1b), unchecked=True)
        assert got == (GOLDEN / "fig1a_into_fig1b.trace").read_text(), "trace differs from golden"


def test_criterion_2_fig2_identity_trace(capsys):
    with criterion(capsys, 2, "Fig2 identity golden trace"):
        fig2 = fixture_fig2()
        got = trace_of(fig2, identity_embedding(fig2)).splitlines()
        golden = (GOLDEN / "fig2_identity.trace").read_text().splitlines()
        assert len(got) == len(golden)
        for row, (a, b) in enumerate(zip(got, golden)):
            assert a == b, f"row {row}: got {a!r}, golden {b!r}"


def test_criterion_3_counterexample(capsys):
    with criterion(capsys, 3, "nondistributive counterexample") as detail:
        L = fixture_fig1a()
        order = reverse_topo_sort(L)
        full = oracle_hasse(L)
        H = generalized_ipred(L, order, identity_embedding(L), unchecked=True)
        assert len(H) == 5
        assert named_edges(L, full) - named_edges(L, H) == {("3", "top")}
        H2 = generalized_ipred(L, order, meet_irreducible_embedding(L))
        assert H2 == full and len(H2) == 6
        detail.append("identity: 5 edges, meet-irreducible: 6 edges")


SWEEP = {}


def sweep_results():
    """Runs criterion 4 once; criteria 5 and 6 read the recorded checks."""
    if SWEEP:
        return SWEEP
    start = time.perf_counter()
    mismatches, border_violations, bound_violations = [], [], []
    runs = 0
    for name, L in criterion4_instances():
        ref = oracle_hasse(L)
        emb = embedding_for(L)
        w = width(L)
        n = L.size
        for order in fuzz_orders(L):
            steps = []

            def observe(x, B, cands, cover):
                steps.append((x, list(B)))

            bc = OpCounters()
            Hb = generalized_border(L, order, counters=bc, observer=observe)
            ic, cc = OpCounters(), OpCounters()
            Hi = generalized_ipred(L, order, emb, counters=ic, codomain_counters=cc, unchecked=True)
            runs += 1
            if not (Hb == Hi == ref):
                mismatches.append(name)
            for x, B in steps:
                if not (is_border(L, B, x, ref) and is_proper(L, B) and len(B) <= w):
                    border_violations.append((name, L.name(x)))
                    break
            if ic.join_calls > n * w:
                bound_violations.append((name, "candidate joins", ic.join_calls, n * w))
            if ic.join_calls + cc.join_calls > n * w + 2 * len(ref):
                bound_violations.append((name, "total joins", ic.join_calls + cc.join_calls, n * w + 2 * len(ref)))
            if bc.leq_calls > n * w * w:
                bound_violations.append((name, "border comparisons", bc.leq_calls, n * w * w))
    SWEEP.update(
        runs=runs,
        seconds=time.perf_counter() - start,
        mismatches=mismatches,
        border_violations=border_violations,
        bound_violations=bound_violations,
    )
    return SWEEP


def test_criterion_4_oracle_fuzz(capsys):
    with criterion(capsys, 4, "Border = iPred = oracle fuzz") as detail:
        result = sweep_results()
        assert not result["mismatches"], f"disagreement on {result['mismatches'][:5]}"
        assert result["seconds"] < 60, f"took {result['seconds']:.1f}s"
        detail.append(f"{result['runs']} runs in {result['seconds']:.1f}s")


def test_criterion_5_border_theory(capsys):
    with criterion(capsys, 5, "border, antichain and width along every sweep"):
        result = sweep_results()
        assert not result["border_violations"], result["border_violations"][:5]


def test_criterion_6_complexity_bounds(capsys):
    with criterion(capsys, 6, "instrumented complexity bounds") as detail:
        result = sweep_results()
        assert not result["bound_violations"], result["bound_violations"][:5]
        P = powerset(8)
        order = reverse_topo_sort(P)
        ic, cc, bc = OpCounters(), OpCounters(), OpCounters()
        generalized_ipred(P, order, identity_embedding(P), counters=ic, codomain_counters=cc)
        generalized_border(P, order, counters=bc)
        ipred_joins = ic.join_calls + cc.join_calls
        border_work = bc.join_calls + bc.leq_calls
        assert ipred_joins < border_work, (ipred_joins, border_work)
        detail.append(f"powerset(8): iPred joins {ipred_joins} < Border joins+comparisons {border_work}")


def law_instances():
    out = list(criterion4_instances())
    out += [("powerset(8)", powerset(8)), ("partition(6)", partition(6))]
    return out


def test_criterion_7_law_suite(capsys):
    with criterion(capsys, 7, "law suite") as detail:
        failures = []
        sampled = 0
        for name, L in law_instances():
            emb = embedding_for(L)
            report = check_paper_laws(L, emb, samples=10_000)
            if not report.ok:
                failures.append((name, report.failures[0]))
            if L.size > 64:
                sampled += 1
            ref = oracle_hasse(L)

            def observe(x, B, cands, cover):
                if cover_from_border(L, x, B) != ref.uc(x):
                    failures.append((name, "useborder", L.name(x)))
                if not all(L.lt(x, L.join(x, y)) for y in B):
                    failures.append((name, "easy", L.name(x)))

            generalized_border(L, reverse_topo_sort(L), observer=observe)
        assert not failures, failures[:5]
        fig1a = fixture_fig1a()
        witness = distributivity_witness(fig1a)
        assert witness is not None
        assert is_distributive(fixture_fig2())
        for k in range(6):
            assert is_distributive(powerset(k)) and is_distributive(powerset(k, "reversed"))
        detail.append(f"{len(law_instances())} instances, {sampled} sampled")
        detail.append("fig1a witness " + ", ".join(fig1a.name(v) for v in witness))


def test_criterion_8_scale(capsys, tmp_path):
    with criterion(capsys, 8, "powerset(10) through the CLI") as detail:
        k = 10
        attrs = [f"m{j}" for j in range(k)]
        rows = ["".join("." if i == j else "X" for j in range(k)) for i in range(k)]
        text = "\n".join(["B", "", str(k), str(k), "", *(f"g{i}" for i in range(k)), *attrs, *rows]) + "\n"
        path = tmp_path / "contranominal10.cxt"
        path.write_text(text)
        capsys.readouterr()
        start = time.perf_counter()
        code = cli_main(["diagram", "--algo", "ipred", "--input", str(path), "--out", "json"])
        seconds = time.perf_counter() - start
        out = capsys.readouterr().out
        assert code == 0
        edges = json.loads(out)
        assert len(edges) == 5120, len(edges)

        def attrs_of(name):
            return set(filter(None, name.strip("{}").split(",")))

        # lower intent = upper intent plus exactly one attribute
        assert all(attrs_of(lo) > attrs_of(up) and len(attrs_of(lo) - attrs_of(up)) == 1 for lo, up in edges)
        assert seconds < 30, f"{seconds:.1f}s"
        detail.append(f"5120 edges in {seconds:.1f}s")


def test_criterion_9_formats_and_exit_codes(capsys, tmp_path):
    with criterion(capsys, 9, "format round trips and exit codes"):
        for name in ("fig1a.json", "fig2.json"):
            text = (DATA / name).read_text()
            assert emit_lattice_json(parse_lattice_json(text)) == text, name
        cxt = (DATA / "contranominal3.cxt").read_text()
        assert emit_cxt(parse_cxt(cxt)) == cxt
        bad_json = tmp_path / "bad.json"
        bad_json.write_text('{"elements": ["a"], "order": "covers", "pairs": [["a", "zz"]]}')
        bad_cxt = tmp_path / "bad.cxt"
        bad_cxt.write_text("B\n\n1\n1\n\ng\nm\n?\n")
        cases = [
            (["diagram"], 1),
            (["diagram", "--input", str(DATA / "fig2.json"), "--sort", "nope"], 1),
            (["check", "--input", str(DATA / "bowtie.json")], 2),
            (["check", "--input", str(bad_json)], 2),
            (["diagram", "--input", str(bad_cxt)], 2),
            (["diagram", "--input", str(DATA / "fig1a.json"), "--embedding", "identity"], 3),
            (["diagram", "--input", str(DATA / "fig1a.json"), "--embedding", "identity", "--unchecked"], 0),
        ]
        for argv, expected in cases:
            assert cli_main(argv) == expected, argv
        capsys.readouterr()
