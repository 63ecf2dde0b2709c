import json

import pytest

from conftest import DATA, GOLDEN
from hassebuild import (
    ConceptLattice,
    ExplicitLattice,
    HasseDiagram,
    InputSyntaxError,
    LatticeValidationError,
    chain,
    closure,
    enumerate_intents,
    fixture_fig2,
    generalized_ipred,
    identity_embedding,
    label_embedding,
    oracle_hasse,
    powerset,
    random_context,
    reverse_topo_sort,
)
from hassebuild.formats import (
    RunStats,
    emit_cxt,
    emit_dot,
    emit_edges_json,
    emit_lattice_json,
    emit_stats,
    emit_trace,
    parse_cxt,
    parse_lattice_json,
    parse_transactions,
)

FIG1A_DOT = """digraph hasse {
"1" -> "top";
"2" -> "top";
"3" -> "top";
"bot" -> "1";
"bot" -> "2";
"bot" -> "3";
}
"""


class TestLatticeJson:
    @pytest.mark.parametrize("name", ["fig1a.json", "fig2.json"])
    def test_round_trip_bytes(self, name):
        text = (DATA / name).read_text()
        assert emit_lattice_json(parse_lattice_json(text)) == text

    def test_fig2_equals_fixture(self):
        L = parse_lattice_json((DATA / "fig2.json").read_text())
        ref = fixture_fig2()
        assert L.names == ref.names and L.up == ref.up

    def test_leq_order(self):
        doc = {"elements": ["t", "m", "b"], "order": "leq", "pairs": [["b", "m"], ["m", "t"], ["b", "t"]]}
        L = parse_lattice_json(json.dumps(doc))
        assert L.size == 3 and len(oracle_hasse(L)) == 2

    def test_single(self):
        L = parse_lattice_json('{"elements":["x"],"order":"covers","pairs":[]}')
        assert L.size == 1
        text = emit_lattice_json(L)
        assert '"pairs": []' in text
        assert emit_lattice_json(parse_lattice_json(text)) == text

    def test_bowtie(self):
        with pytest.raises(LatticeValidationError) as info:
            parse_lattice_json((DATA / "bowtie.json").read_text())
        assert "('a', 'b')" in str(info.value) or "a, b" in str(info.value)

    def test_syntax_position(self):
        with pytest.raises(InputSyntaxError) as info:
            parse_lattice_json('{\n  "elements": [\n  ,]\n}')
        assert info.value.line == 3

    @pytest.mark.parametrize("text", [
        "[]",
        '{"elements": ["a"], "pairs": []}',
        '{"elements": ["a"], "order": "lt", "pairs": []}',
        '{"elements": [1], "order": "covers", "pairs": []}',
        '{"elements": ["a"], "order": "covers", "pairs": [["a"]]}',
    ])
    def test_malformed(self, text):
        with pytest.raises(InputSyntaxError):
            parse_lattice_json(text)

    def test_random_round_trip(self):
        for seed in range(5):
            cl = ConceptLattice(random_context(8, 5, 0.5, seed))
            text = emit_lattice_json(cl)
            L = parse_lattice_json(text)
            assert L.names == cl.names
            assert emit_lattice_json(L) == text


class TestCxt:
    def test_round_trip_bytes(self):
        text = (DATA / "contranominal3.cxt").read_text()
        assert emit_cxt(parse_cxt(text)) == text

    def test_contranominal_is_boolean(self):
        ctx = parse_cxt((DATA / "contranominal3.cxt").read_text())
        assert ctx.attributes == ("a", "b", "c")
        assert ctx.rows == (0b110, 0b101, 0b011)
        assert len(enumerate_intents(ctx)) == 8

    def test_crlf_and_missing_final_newline(self):
        text = (DATA / "contranominal3.cxt").read_text()
        assert parse_cxt(text.replace("\n", "\r\n")) == parse_cxt(text)
        assert parse_cxt(text.rstrip("\n")) == parse_cxt(text)

    def test_empty_context(self):
        text = "B\n\n0\n2\n\na\nb\n"
        ctx = parse_cxt(text)
        assert ctx.objects == () and ctx.attributes == ("a", "b")
        assert emit_cxt(ctx) == text

    @pytest.mark.parametrize("text,line", [
        ("A\n\n1\n1\n\ng\nm\nX\n", 1),
        ("B\nx\n1\n1\n\ng\nm\nX\n", 2),
        ("B\n\none\n1\n\ng\nm\nX\n", 3),
        ("B\n\n1\n1\n\ng\nm\nXX\n", 8),
        ("B\n\n1\n1\n\ng\nm\nx\n", 8),
        ("B\n\n2\n1\n\ng\ng\nm\nX\n.\n", 7),
        ("B\n\n1\n1\n\ng\nm\nX\nextra\n", 9),
        ("B\n\n2\n1\n\ng\nh\nm\nX\n", 10),
    ])
    def test_errors(self, text, line):
        with pytest.raises(InputSyntaxError) as info:
            parse_cxt(text)
        assert info.value.line == line

    def test_illegal_character_column(self):
        with pytest.raises(InputSyntaxError) as info:
            parse_cxt("B\n\n1\n3\n\ng\na\nb\nc\nX.?\n")
        assert (info.value.line, info.value.column) == (10, 3)


class TestTransactions:
    def test_abc(self):
        ctx = parse_transactions((DATA / "abc.txt").read_text())
        assert ctx.objects == ("1", "2", "3")
        assert ctx.attributes == ("a", "b", "c")
        assert ctx.attribute_names(closure(ctx, ["a"])) == ["a", "b"]

    def test_empty(self):
        ctx = parse_transactions("")
        assert ctx.objects == ()
        assert ConceptLattice(ctx).size == 1


class TestEmitters:
    def test_dot_fig1a(self, fig1a):
        assert emit_dot(oracle_hasse(fig1a)) == FIG1A_DOT

    def test_dot_empty(self):
        assert emit_dot(oracle_hasse(chain(1))) == "digraph hasse {\n}\n"

    def test_dot_quoting(self):
        L = ExplicitLattice.from_pairs(['a"b', "c"], [('a"b', "c")])
        assert '"a\\"b" -> "c";' in emit_dot(oracle_hasse(L))

    def test_edges_json(self, fig1a):
        doc = json.loads(emit_edges_json(oracle_hasse(fig1a)))
        assert doc == sorted(doc)
        assert doc[0] == ["1", "top"] and len(doc) == 6

    def test_trace_golden(self, fig1a, fig1b):
        records = []
        generalized_ipred(fig1a, reverse_topo_sort(fig1a), label_embedding(fig1a, fig1b),
                          trace=records.append, unchecked=True)
        assert emit_trace(records, fig1a, fig1b) == (GOLDEN / "fig1a_into_fig1b.trace").read_text()

    def test_stats(self):
        stats = RunStats("ipred", 4, 2, 4, {"leq": 1, "join": 2, "meet": 0, "f": 3}, {}, 2, 0.5)
        doc = json.loads(emit_stats(stats))
        assert doc["algorithm"] == "ipred" and doc["ops"]["f"] == 3 and doc["max_border"] == 2

    def test_deterministic(self):
        P = powerset(4)
        a = emit_dot(generalized_ipred(P, reverse_topo_sort(P, "random", seed=1), identity_embedding(P)))
        b = emit_dot(generalized_ipred(P, reverse_topo_sort(P, "random", seed=2), identity_embedding(P)))
        assert a == b == emit_dot(HasseDiagram(P, oracle_hasse(P).edges))

