import pytest

from chordal_grundy import DimacsParseError, from_edges, parse_dimacs, write_dimacs
from chordal_grundy.generators import complete, generate, path


def test_parse_path():
    assert parse_dimacs("p edge 3 2\ne 1 2\ne 2 3") == path(3)


def test_parse_tolerates_duplicate_and_reversed_edges():
    assert parse_dimacs(b"c a comment\np edge 2 1\ne 1 2\ne 2 1\n") == complete(2)


def test_parse_missing_problem_line():
    with pytest.raises(DimacsParseError, match="missing problem line"):
        parse_dimacs("e 1 2")


def test_parse_missing_problem_line_in_empty_file():
    with pytest.raises(DimacsParseError, match="missing problem line"):
        parse_dimacs("c nothing here\n")


@pytest.mark.parametrize(
    "text, line",
    [
        ("p edge 3 1\ne 1 4", 2),
        ("p edge 3 1\ne 0 1", 2),
        ("p edge 3 1\nc ok\ne 1 x", 3),
        ("p edge 3\n", 1),
        ("p edge 3 1\nq 1 2", 2),
        ("p edge 3 1\ne 2 2", 2),
        ("p edge 3 1\np edge 3 1", 2),
    ],
)
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(DimacsParseError) as info:
        parse_dimacs(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_write_single_edge():
    text = write_dimacs(complete(2))
    assert "p edge 2 1" in text.splitlines()
    assert "e 1 2" in text.splitlines()


def test_write_edgeless():
    lines = write_dimacs(from_edges(3, [])).splitlines()
    assert lines == ["p edge 3 0"]


def test_edges_written_once_low_id_first():
    text = write_dimacs(generate("complete:n=4"))
    edge_lines = [line for line in text.splitlines() if line.startswith("e ")]
    assert len(edge_lines) == 6
    assert all(int(a) < int(b) for _, a, b in (line.split() for line in edge_lines))


@pytest.mark.parametrize("seed", range(100))
def test_round_trip_random(seed):
    family = ["ktree:n=15,k=3", "gnp:n=12,p=0.4", "pktree:n=10,k=2,q=0.6", "split:s=4,c=4,p=0.5"][seed % 4]
    g = generate(family, seed)
    assert parse_dimacs(write_dimacs(g)) == g
