from pathlib import Path

import pytest

from freeprod.errors import ParseError
from freeprod.formats import (dump_catspec, dump_operad, ecategory_from_doc, ecategory_to_doc, load_catspec,
                              load_ecat_document, load_module, load_operad, load_ring, load_sesqui, load_vgraph,
                              parse_catspec, parse_module, parse_operad, parse_ring, parse_vgraph,
                              vgraph_to_fingraph)
from freeprod.multitensor import operads_equal, validate_E_category
from freeprod.sesqui import validate_sesqui

DATA = Path(__file__).resolve().parent.parent / "data"


def test_catspec_round_trip():
    inv = load_catspec(DATA / "involution.catspec")
    assert len(inv.hom("*", "*", 4)) == 2
    again = parse_catspec(dump_catspec(inv))
    assert again.graph.edges == inv.graph.edges and len(again.hom("*", "*", 4)) == 2


def test_walking_arrow_catspec():
    A = load_catspec(DATA / "walking_arrow.catspec")
    assert len(A.hom("0", "1", 3)) == 1 and A.name == "walking_arrow"


@pytest.mark.parametrize("text,line", [
    ("obj a\nobj a\n", 2),
    ("obj a\ngen f: a -> b\n", 2),
    ("obj a\ngen f: a -> a\nrel f;g = f\n", 3),
    ("obj a\n\n# comment\nwhat is this\n", 4),
])
def test_catspec_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as err:
        parse_catspec(text, "x.catspec")
    assert err.value.line == line
    assert f"x.catspec:{line}:" in str(err.value)


def test_vgraph_files():
    X = load_vgraph(DATA / "arrow.vgraph")
    assert X.hom("a", "b") == ("x",) and X.hom("b", "a") == ()
    assert list(vgraph_to_fingraph(load_vgraph(DATA / "loop.vgraph")).edges) == [("l", "s", "s")]


@pytest.mark.parametrize("text,line", [
    ("obj a\nhom a c = {x}\n", 2),
    ("obj a\nhom a a = x\n", 2),
    ("obj a\nhom a a = {x, x}\n", 2),
    ("obj a\nhom a a = {x}\nhom a a = {y}\n", 3),
])
def test_vgraph_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_vgraph(text)
    assert err.value.line == line


def test_edge_label_reuse_is_rejected():
    with pytest.raises(ParseError):
        parse_vgraph("obj a\nobj b\nhom a b = {x}\nhom b a = {x}\n")


def test_ring_and_modules():
    R = load_ring(DATA / "f2.ring")
    assert R.validate().ok and len(R.elements) == 2
    assert len(load_module(DATA / "m.mod", R).carrier) == 2
    assert len(load_module(DATA / "n.mod", R).carrier) == 4
    K = load_module(DATA / "klein.mod", R)
    assert K.validate().ok and len(K.carrier) == 4


def test_non_ring_is_rejected():
    text = "elements 0 1\nzero 0\none 1\nadd\n0 1\n1 0\nmul\n0 0\n0 0\n"
    with pytest.raises(ParseError, match="not a commutative ring"):
        parse_ring(text)


def test_short_table_is_rejected():
    with pytest.raises(ParseError, match="rows"):
        parse_ring("elements 0 1\nzero 0\none 1\nadd\n0 1\nmul\n0 0\n0 1\n")


def test_bad_rank_is_rejected():
    R = load_ring(DATA / "f2.ring")
    with pytest.raises(ParseError) as err:
        parse_module("rank two\n", R)
    assert err.value.line == 1


def test_operad_files():
    T = load_operad(DATA / "terminal.operad")
    assert T.validate().ok
    two = load_operad(DATA / "two_monoids.operad")
    assert [len(two.elements(n)) for n in range(4)] == [1, 1, 2, 6]
    assert two.validate().ok
    again = parse_operad(dump_operad(two))
    assert again.validate().ok
    assert operads_equal(again, two)
    assert operads_equal(parse_operad(dump_operad(T)), T)


@pytest.mark.parametrize("text,line", [
    ("unit u\narity 1: u\narity 2: m\nsub m(u) = m\n", 4),
    ("unit u\narity 1: u\narity 2: m\nsub m(u,u,u) = m\n", 4),
    ("unit u\narity 1: u\nsub u(q) = u\n", 3),
    ("unit u\narity 1: u\narity 2: m(\n", 3),
    ("unit u\narity 1: u\nsub u = u\n", 3),
])
def test_operad_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_operad(text)
    assert err.value.line == line


def test_ecat_documents():
    doc = load_ecat_document(DATA / "two_monoids_ecat.json")
    A = doc["category"]
    assert validate_E_category(A).ok
    back = ecategory_from_doc(ecategory_to_doc(A), doc["operad"])
    assert back.table == A.table
    co = load_ecat_document(DATA / "coeq.json")
    assert {"source", "target", "f", "g"} <= set(co)


def test_invalid_json_reports_line():
    from freeprod.formats import parse_ecat_document
    with pytest.raises(ParseError) as err:
        parse_ecat_document('{\n "operad": \n}\n')
    assert err.value.line == 3


def test_sesqui_document():
    S = load_sesqui(DATA / "walking_2cell.json")
    assert validate_sesqui(S).ok


def test_missing_file_is_a_parse_error():
    with pytest.raises(ParseError, match="cannot read"):
        load_catspec(DATA / "nope.catspec")
