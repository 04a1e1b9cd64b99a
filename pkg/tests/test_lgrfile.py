import pytest

from labelled_spaces import ParseError
from labelled_spaces import fixtures
from labelled_spaces.lgrfile import format_graph_file, load_graph_file, parse_graph_file


def fset(*items):
    return frozenset(items)


LOOPS4_TEXT = """\
# four vertices, one letter
vertices 1 2 3 4
edge e1: 2 a 1
edge e2: 1 a 2
edge e3: 1 a 3
edge e4: 1 a 4
family explicit {}{1}{1 2 3 4}{1 2 4}{1 3}{2 3 4}{2 4}{3}
"""


class TestParsing:
    def test_loops4_document(self):
        g, fam = parse_graph_file(LOOPS4_TEXT)
        assert g.vertices == ("1", "2", "3", "4")
        assert len(g.edges) == 4
        assert len(fam.sets) == 8

    def test_auto_edge_ids(self):
        g, _ = parse_graph_file(
            "vertices u v\nedge u a v\nedge v a u\nfamily powerset\n"
        )
        assert [e.eid for e in g.edges] == ["e1", "e2"]

    def test_powerset_directive(self, single_loop):
        g, fam = parse_graph_file("vertices v\nedge e1: v a v\nfamily powerset\n")
        assert fam.sets == single_loop[1].sets

    def test_closure_directive(self, loops4):
        text = (
            "vertices 1 2 3 4\nedge 2 a 1\nedge 1 a 2\nedge 1 a 3\nedge 1 a 4\n"
            "family closure {1}\n"
        )
        _, fam = parse_graph_file(text)
        assert fset("2", "3", "4") in fam

    def test_comments_and_blanks_ignored(self):
        text = "\n# hi\nvertices u\n\n# there\nfamily powerset\n"
        g, _ = parse_graph_file(text)
        assert g.vertices == ("u",)


class TestParseErrors:
    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("vertices u u\nfamily powerset\n", "duplicate vertex"),
            ("edge u a v\nvertices u v\nfamily powerset\n", "before vertices"),
            ("vertices u\nedge u a w\nfamily powerset\n", "unknown vertex"),
            ("vertices u\nedge x: u a u\nedge x: u a u\nfamily powerset\n", "duplicate edge"),
            ("vertices u\nfamily powerset\nfamily powerset\n", "duplicate family"),
            ("vertices u\nbogus line\nfamily powerset\n", "unknown directive"),
            ("vertices u\n", "missing family"),
            ("family powerset\n", "missing vertices"),
            ("vertices u\nedge u a u\nfamily explicit {w}\n", "unknown vertices"),
            ("vertices u\nedge u a u\nfamily guess\n", "unknown family kind"),
        ],
    )
    def test_malformed_documents(self, text, fragment):
        with pytest.raises(ParseError) as info:
            parse_graph_file(text)
        assert fragment in str(info.value)

    def test_line_numbers_reported(self):
        with pytest.raises(ParseError) as info:
            parse_graph_file("vertices u\nedge u a w\nfamily powerset\n")
        assert "line 2" in str(info.value)


class TestRoundTrip:
    @pytest.mark.parametrize(
        "name,kind",
        [
            ("loops4", "explicit"),
            ("loops4_powerset", "powerset"),
            ("chain7", "explicit"),
            ("twins2", "powerset"),
            ("twins3", "powerset"),
            ("single_loop", "powerset"),
        ],
    )
    def test_shipped_fixtures_are_byte_stable(self, name, kind):
        path = fixtures.path(name)
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
        g, fam = parse_graph_file(text)
        assert format_graph_file(g, fam, family_kind=kind) == text

    def test_fixture_files_match_builders(self):
        for name, builder in [
            ("loops4", fixtures.loops4),
            ("chain7", lambda: fixtures.chain7(10)),
            ("twins2", fixtures.twins2),
            ("twins3", fixtures.twins3),
        ]:
            g, fam = load_graph_file(fixtures.path(name))
            g2, fam2 = builder()
            assert g == g2
            assert fam.sets == fam2.sets
