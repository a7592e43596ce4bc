import json

import pytest
from hypothesis import given, strategies as st

from intcayley.group import ConnectionSet, Element, generator_class, get_group
from intcayley.setlang import (
    ARITY,
    EvaluationError,
    Primitive,
    SetExpr,
    SetFormatError,
    SetSyntaxError,
    UnknownPrimitiveError,
    evaluate,
    format_expr,
    from_json,
    parse,
    parse_set,
    to_json,
)
from intcayley.spectrum import corollary_sets, random_symmetric_set


class TestParse:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_dense_family(self, n):
        S = parse_set("cyclic(2,0) - identity + coset(2) + coset(1) + coset(3)", n)
        assert S == corollary_sets(n)["a2-coset2"]

    def test_two_elements(self):
        expr = parse("elem(0,2) + elem(1,2)")
        assert expr.terms == (("+", Primitive("elem", (0, 2))), ("+", Primitive("elem", (1, 2))))
        assert set(evaluate(expr, 2)) == {Element(2, 0, 2), Element(2, 1, 2)}

    @pytest.mark.parametrize("n", range(1, 6))
    def test_generator_class_family(self, n):
        assert parse_set("genclass(0,2) + coset(1) + coset(3)", n) == corollary_sets(n)["b2-class"]

    def test_whitespace_and_negative_args(self):
        assert parse_set("  elem( -1 , 0 )+elem(1,0)", 3) == ConnectionSet.from_pairs(3, [(5, 0), (1, 0)])

    def test_identity_with_parens(self):
        assert parse("cyclic(1,0) - identity()") == parse("cyclic(1,0) - identity")

    @pytest.mark.parametrize(
        "text, offset, expected",
        [
            ("coset(1", 7, {")"}),
            ("elem(1 2)", 7, {","}),
            ("coset(1) coset(2)", 9, {"+", "-", "end of input"}),
            ("", 0, {"primitive name"}),
            ("coset(x)", 6, {"integer", "-"}),
            ("coset(1) + ", 11, {"primitive name"}),
        ],
    )
    def test_syntax_errors(self, text, offset, expected):
        with pytest.raises(SetSyntaxError) as info:
            parse(text)
        assert info.value.offset == offset
        assert info.value.expected == expected

    def test_bad_character(self):
        with pytest.raises(SetSyntaxError) as info:
            parse("coset(1) * coset(2)")
        assert info.value.offset == 9

    def test_unknown_primitive(self):
        with pytest.raises(UnknownPrimitiveError) as info:
            parse("coset(1) + foo(1)")
        assert info.value.offset == 11 and "coset" in info.value.expected


class TestEvaluate:
    def test_cyclic_minus_identity(self):
        assert parse_set("cyclic(1,0) - identity", 2) == ConnectionSet.from_pairs(2, [(1, 0), (2, 0), (3, 0)])

    def test_coset(self):
        assert parse_set("coset(1)", 2) == ConnectionSet.from_pairs(2, [(r, 1) for r in range(4)])

    def test_genclass(self):
        assert parse_set("genclass(2,0)", 3) == ConnectionSet.from_pairs(3, [(2, 0), (4, 0)])

    def test_differences_after_unions(self):
        assert parse_set("cyclic(1,0) - identity + elem(0,0)", 2) == parse_set("cyclic(1,0) - identity", 2)

    def test_identity_must_be_removed(self):
        with pytest.raises(EvaluationError):
            parse_set("cyclic(1,0)", 2)

    def test_empty_rejected(self):
        with pytest.raises(EvaluationError):
            parse_set("elem(1,0) - elem(1,0)", 2)

    def test_difference_of_absent_term_is_noop(self):
        assert parse_set("coset(1) - coset(3)", 2) == parse_set("coset(1)", 2)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_primitives_match_group_constructions(self, n):
        G = get_group(n)
        for x in G.elements:
            if x.is_identity:
                continue
            r, j = x.r, x.j
            assert set(parse_set(f"genclass({r},{j})", n)) == generator_class(x)
            assert set(parse_set(f"class({r},{j})", n)) == G.class_of[x].members
            assert set(parse_set(f"cyclic({r},{j}) - identity", n)) == G.cyclic_subgroup(x) - {G.identity}
        for j in (1, 2, 3):
            assert set(parse_set(f"evencoset({j}) + oddcoset({j})", n)) == G.coset(j)
            assert all(x.r % 2 == 0 for x in parse_set(f"evencoset({j})", n))

    @given(st.integers(1, 4), st.lists(st.tuples(st.integers(0, 7), st.integers(1, 3)), min_size=1, max_size=5))
    def test_union_monotone(self, n, pairs):
        text = " + ".join(f"elem({r},{j})" for r, j in pairs)
        big = parse_set(text + " + coset(2)", n)
        assert set(parse_set(text, n)) <= set(big)


primitive = st.sampled_from(sorted(ARITY)).flatmap(
    lambda name: st.tuples(st.just(name), st.lists(st.integers(-9, 9), min_size=ARITY[name], max_size=ARITY[name]))
).map(lambda t: Primitive(t[0], tuple(t[1])))
exprs = st.tuples(primitive, st.lists(st.tuples(st.sampled_from("+-"), primitive), max_size=5)).map(
    lambda t: SetExpr((("+", t[0]),) + tuple(t[1]))
)


class TestPrettyPrint:
    @given(exprs)
    def test_round_trip(self, expr):
        assert parse(format_expr(expr)) == expr


class TestJson:
    def test_canonical(self):
        assert to_json(ConnectionSet.from_pairs(2, [(0, 2)])) == '{"n":2,"elements":[[0,2]]}'
        assert to_json(ConnectionSet.from_pairs(2, [(1, 3), (3, 0), (0, 1)])) == '{"n":2,"elements":[[3,0],[0,1],[1,3]]}'

    @given(st.integers(1, 6), st.randoms(use_true_random=False))
    def test_round_trip(self, n, r):
        S = random_symmetric_set(n, r)
        assert from_json(to_json(S)) == S

    @pytest.mark.parametrize(
        "text",
        [
            '{"n": 2, "elements": [[5, 1]]}',
            '{"n": 2, "elements": [[0, 0]]}',
            '{"n": 2, "elements": [[1, 0], [1, 0]]}',
            '{"n": 0, "elements": []}',
            '{"n": 2}',
            '{"n": 2, "elements": [[1, true]]}',
            '{"n": 2, "elements": [[1, 0]], "x": 1}',
            "[1, 2]",
            "{not json",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(SetFormatError):
            from_json(text)

    def test_out_of_range_message(self):
        with pytest.raises(SetFormatError, match="out of range"):
            from_json(json.dumps({"n": 2, "elements": [[5, 1]]}))
