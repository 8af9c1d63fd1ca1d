import io

import networkx as nx
import pytest

from conftest import complete_graph, cycle_graph, petersen_graph
from hamcheck.checker.corpus import enumerate_labeled, random_graphs
from hamcheck.core.graph import Graph
from hamcheck.core.graph6 import (
    Graph6Error,
    iter_graph6_lines,
    parse_graph6,
    read_graph6_file,
    to_graph6_string,
    write_graph6,
)


def test_named_records():
    assert parse_graph6("?") == Graph(0, [])
    assert parse_graph6("@") == Graph(1, [frozenset()])
    assert parse_graph6("Bw") == complete_graph(3)
    assert to_graph6_string(complete_graph(3)) == "Bw"
    assert parse_graph6("D~{") == complete_graph(5)
    assert write_graph6(parse_graph6(b"D~{\n")) == b"D~{"


def test_header_and_newline_tolerated():
    assert parse_graph6(b">>graph6<<Bw\r\n") == complete_graph(3)


def test_petersen_matches_networkx():
    expected = nx.to_graph6_bytes(nx.petersen_graph(), header=False).strip()
    assert write_graph6(petersen_graph()) == expected
    assert parse_graph6(expected) == petersen_graph()


def test_every_labeled_graph_agrees_with_networkx():
    for n in range(1, 6):
        for g in enumerate_labeled(n):
            expected = nx.to_graph6_bytes(g.to_networkx(), header=False).strip()
            assert write_graph6(g) == expected
            assert parse_graph6(expected) == g


def test_atlas_round_trips_byte_exact():
    # every graph up to seven vertices, one per isomorphism class
    for nx_graph in nx.graph_atlas_g():
        record = nx.to_graph6_bytes(nx_graph, header=False).strip()
        assert write_graph6(parse_graph6(record)) == record


@pytest.mark.slow
def test_connected_order_eight_round_trips_byte_exact():
    for g in random_graphs(2000, [8], [0.2, 0.35, 0.5, 0.8], seed=23, graph_filter=lambda g: g.is_connected()):
        record = nx.to_graph6_bytes(g.to_networkx(), header=False).strip()
        assert write_graph6(parse_graph6(record)) == record


def test_long_form_header():
    g = cycle_graph(63)
    record = write_graph6(g)
    assert record[:4] == b"~??~"
    assert parse_graph6(record) == g
    assert write_graph6(Graph(300, [frozenset()] * 300))[:4] == b"~?Ck"


@pytest.mark.parametrize(
    "record, message",
    [
        (b"", "Empty record"),
        (b"~?", "Truncated long-form header"),
        (b"D~", "Truncated record"),
        (b"Bww", "Trailing garbage"),
        (b"B ", "out of range"),
        (b"B@", "padding"),
        ("Bé", "Non-ASCII"),
    ],
)
def test_malformed_records_rejected(record, message):
    with pytest.raises(Graph6Error, match=message):
        parse_graph6(record)


def test_line_numbers_in_stream_errors():
    lines = io.StringIO(">>graph6<<Bw\n\nB@\n")
    stream = iter_graph6_lines(lines, source="corpus.g6")
    number, record, g = next(stream)
    assert (number, record, g) == (1, b"Bw", complete_graph(3))
    with pytest.raises(Graph6Error) as excinfo:
        next(stream)
    assert excinfo.value.line == 3
    assert str(excinfo.value).startswith("corpus.g6:3:")


def test_read_file(tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_bytes(b"Bw\nD~{\n\n")
    graphs = [g for _, _, g in read_graph6_file(path)]
    assert graphs == [complete_graph(3), complete_graph(5)]
