import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ctxlab.catalog import YU_OH_RAYS, catalog, cyclic_logic
from ctxlab.coloring import chromatic_number
from ctxlab.dsl import parse_logic, parse_values, same_logic, serialize_logic
from ctxlab.errors import (
    DimensionMismatch,
    DuplicateDeclaration,
    LogicSyntaxError,
    ParseError,
    UnknownDirective,
)
from ctxlab.export import export_json, to_jsonable
from ctxlab.polytope import PolytopeHRep
from ctxlab.states import enumerate_states


def test_single_context(triangle):
    b = parse_logic("context a b c")
    assert b.hypergraph == triangle.hypergraph
    assert b.realization is None


def _yu_oh_document(yu_oh):
    H = yu_oh.hypergraph
    lines = ["# caption rays only", "dim 3"]
    for name, vec in YU_OH_RAYS.items():
        lines.append(f"vertex {name} [{' '.join(map(str, vec))}]")
    for ci in range(H.n_contexts):
        lines.append("context " + " ".join(H.context_names(ci)))
    return "\n".join(lines)


def test_yu_oh_caption_document(yu_oh):
    text = _yu_oh_document(yu_oh)
    assert sum(line.startswith("vertex") for line in text.splitlines()) == 13
    assert sum(line.startswith("context") for line in text.splitlines()) == 16
    b = parse_logic(text)
    assert b.hypergraph == yu_oh.hypergraph
    assert len(b.realization.rays) == 13
    assert b.hypergraph.n_vertices == 25


def test_dimension_mismatch_position():
    with pytest.raises(DimensionMismatch) as info:
        parse_logic("dim 3\nvertex a [1 0]")
    assert info.value.line == 2
    assert info.value.column == 10


def test_serialize_triangle(triangle):
    assert len(serialize_logic(triangle).splitlines()) == 3


def test_serialize_pentagon(pentagon):
    lines = serialize_logic(pentagon).splitlines()
    assert sum(line.startswith("context ") for line in lines) == 5
    assert lines[-1] == "cycle 1 3 5 7 9"


def test_round_trip(bundle):
    text = serialize_logic(bundle)
    back = parse_logic(text, name=bundle.name)
    assert same_logic(back, bundle)
    assert serialize_logic(back) == text


@pytest.mark.parametrize("m", [3, 5, 8])
def test_round_trip_cycles(m):
    b = cyclic_logic(m)
    assert same_logic(parse_logic(serialize_logic(b)), b)


def test_comments_and_blank_lines(triangle):
    b = parse_logic("# demo\n\ncontext a b c   # the only one\n   \n")
    assert b.hypergraph == triangle.hypergraph


def test_rational_entries_exact():
    b = parse_logic("vertex a [1/3 0]\nvertex b [0 2/7]\ncontext a b")
    assert b.realization.rays["a"] == (1, 0)
    assert parse_values("x 1/3")["x"] == Fraction(1, 3)


def test_strict_mode():
    parse_logic("context a b")
    with pytest.raises(LogicSyntaxError) as info:
        parse_logic("vertex a\ncontext a b", strict=True)
    assert (info.value.line, info.value.column) == (2, 11)


@pytest.mark.parametrize(
    "text, exc, line, col",
    [
        ("context a b\ncolour a 1", UnknownDirective, 2, 1),
        ("context a b\ncontext b a", DuplicateDeclaration, 2, 9),
        ("vertex a\nvertex a\ncontext a b", DuplicateDeclaration, 2, 8),
        ("dim 3\ndim 3\ncontext a b c", DuplicateDeclaration, 2, 1),
        ("dim 2\ncontext a b c", DimensionMismatch, 1, 5),
        ("vertex a [1 0 0]\nvertex b [1 0]\ncontext a b c", DimensionMismatch, 2, 10),
        ("vertex a [1 x 0]\ncontext a b c", LogicSyntaxError, 1, 13),
        ("vertex a [1 2/0 0]\ncontext a b c", LogicSyntaxError, 1, 13),
        ("vertex a [0 0 0]\ncontext a b c", LogicSyntaxError, 1, 10),
        ("vertex a [1 0 0\ncontext a b c", LogicSyntaxError, 1, 16),
        ("context a a b", LogicSyntaxError, 1, 11),
        ("context a", LogicSyntaxError, 1, 1),
        ("dim x\ncontext a b", LogicSyntaxError, 1, 5),
        ("vertex z\ncontext a b", LogicSyntaxError, 1, 8),
        ("context a b\ncycle q", LogicSyntaxError, 2, 1),
        ("[ a b", LogicSyntaxError, 1, 1),
    ],
)
def test_errors_carry_positions(text, exc, line, col):
    with pytest.raises(exc) as info:
        parse_logic(text)
    assert (info.value.line, info.value.column) == (line, col)
    assert f"line {line}" in str(info.value)


def test_parse_values_errors():
    with pytest.raises(DuplicateDeclaration):
        parse_values("a 1\na 0")
    with pytest.raises(LogicSyntaxError):
        parse_values("a 1 2")


alphabet = st.sampled_from(list("abc 0123/-[]#\n\t") + ["dim ", "vertex ", "context ", "cycle "])


@settings(max_examples=300, deadline=None)
@given(st.lists(alphabet, max_size=40).map("".join))
def test_fuzz_never_crashes(text):
    try:
        parse_logic(text)
    except ParseError as exc:
        assert exc.line >= 0 and exc.column >= 0
    except Exception as exc:  # library errors from the hypergraph builder are fine
        from ctxlab.errors import CtxlabError

        assert isinstance(exc, CtxlabError)


@settings(max_examples=200, deadline=None)
@given(st.text(max_size=60))
def test_fuzz_unicode_never_crashes(text):
    from ctxlab.errors import CtxlabError

    try:
        parse_logic(text)
    except CtxlabError:
        pass


def test_json_chromatic(yu_oh):
    doc = json.loads(export_json(chromatic_number(yu_oh.hypergraph), yu_oh.hypergraph))
    assert doc["chromatic_number"] == 4
    assert doc["exhausted"] == [3]
    assert doc["witness"]["k"] == 4
    assert set(doc["witness"]["assignment"]) == set(yu_oh.hypergraph.names)


def test_json_states(pentagon):
    doc = json.loads(export_json(enumerate_states(pentagon.hypergraph)))
    assert len(doc) == 11
    assert ["2", "4", "6", "8", "10"] in doc


def test_json_empty_facets():
    doc = json.loads(export_json(PolytopeHRep([], [], 0, 2)))
    assert doc["facets"] == [] and doc["equalities"] == []


def test_json_fraction_is_string():
    assert to_jsonable(Fraction(1, 3)) == "1/3"
    assert to_jsonable([Fraction(2, 1)]) == ["2"]
