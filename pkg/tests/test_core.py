from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyface import (
    AffineMapQ,
    CoordLayout,
    DimensionMismatchError,
    InvalidPairError,
    InvalidPermutationError,
    InvalidVertexError,
    LinearForm,
    ParseError,
    Permutation,
    Vertex01,
    VertexSet,
    lop_vertex_to_perm,
    pair_index,
    perm_to_lop_vertex,
    perm_to_sequence,
    sequence_to_perm,
    vertex_from_coords,
)


class TestPairIndex:
    def test_first_pair(self):
        assert pair_index(1, 2, 4) == 0

    def test_last_pair(self):
        assert pair_index(3, 4, 4) == 5

    def test_equal_indices_rejected(self):
        with pytest.raises(InvalidPairError):
            pair_index(2, 2, 4)

    def test_reversed_rejected(self):
        with pytest.raises(InvalidPairError):
            pair_index(3, 2, 4)

    def test_out_of_range_rejected(self):
        with pytest.raises(InvalidPairError):
            pair_index(1, 5, 4)

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 8, 12])
    def test_enumerates_bijectively(self, m):
        indices = [
            pair_index(i, j, m)
            for i in range(1, m + 1)
            for j in range(i + 1, m + 1)
        ]
        assert sorted(indices) == list(range(m * (m - 1) // 2))
        # lexicographic order of pairs is index order
        assert indices == sorted(indices)


class TestCoordLayout:
    def test_bqp_dimension_and_labels(self):
        layout = CoordLayout.bqp(3)
        assert layout.dim == 6
        assert layout.labels == (
            "x(1,1)", "x(2,2)", "x(3,3)", "x(1,2)", "x(1,3)", "x(2,3)",
        )

    def test_lop_dimension_and_labels(self):
        layout = CoordLayout.lop(4)
        assert layout.dim == 6
        assert layout.labels[0] == "y(1,2)"
        assert layout.labels[-1] == "y(3,4)"

    def test_label_lookup_is_bijective(self):
        layout = CoordLayout.lop(5)
        for k, label in enumerate(layout.labels):
            assert layout.index_of(label) == k

    def test_header_round_trip(self):
        layout = CoordLayout.stable(4)
        assert CoordLayout.from_header(layout.header()) == layout

    def test_bad_header(self):
        with pytest.raises(ParseError):
            CoordLayout.from_header("layout cube 3")

    def test_unknown_kind(self):
        with pytest.raises(Exception):
            CoordLayout("cube", 3)


class TestVertex01:
    def test_string_round_trip(self):
        v = Vertex01.from_string("0110")
        assert v.to_string() == "0110"
        assert v.bits == (0, 1, 1, 0)
        assert v.bit(0) == 0 and v.bit(1) == 1

    def test_empty_vertex(self):
        v = Vertex01.from_string("")
        assert v.dim == 0 and v.to_string() == ""

    def test_bad_character(self):
        with pytest.raises(ParseError):
            Vertex01.from_string("012")

    def test_word_out_of_range(self):
        with pytest.raises(InvalidVertexError):
            Vertex01(2, 4)

    def test_order_is_lexicographic(self):
        strings = ["000", "001", "011", "100", "110", "111"]
        verts = [Vertex01.from_string(s) for s in strings]
        assert sorted(verts, reverse=True) == verts[::-1]
        assert sorted(v.to_string() for v in verts) == strings

    @given(st.lists(st.integers(0, 1), min_size=0, max_size=24))
    def test_bits_round_trip(self, bits):
        v = Vertex01.from_bits(bits)
        assert list(v.bits) == bits


class TestVertexSet:
    def test_dedup_and_sort(self):
        layout = CoordLayout.lop(3)
        verts = [Vertex01.from_string(s) for s in ("110", "000", "110", "001")]
        vs = VertexSet(layout, verts)
        assert [v.to_string() for v in vs] == ["000", "001", "110"]
        assert len(vs) == 3
        assert Vertex01.from_string("110") in vs
        assert Vertex01.from_string("111") not in vs

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            VertexSet(CoordLayout.lop(3), [Vertex01.from_string("01")])

    def test_text_round_trip(self):
        layout = CoordLayout.lop(3)
        vs = VertexSet(layout, [Vertex01.from_string(s) for s in ("110", "000")])
        text = vs.to_text()
        assert text.splitlines()[0] == "layout lop 3"
        assert VertexSet.from_text(text) == vs

    def test_json_round_trip(self):
        layout = CoordLayout.bqp(2)
        vs = VertexSet(layout, [Vertex01.from_string("111")])
        assert VertexSet.from_json(vs.to_json()) == vs

    def test_bad_vertex_length_in_file(self):
        with pytest.raises(ParseError):
            VertexSet.from_text("layout lop 3\n01\n")


class TestPermutation:
    def test_reversal_sequence(self):
        p = sequence_to_perm("654321")
        assert p.position(6) == 1
        assert p.position(1) == 6

    def test_identity(self):
        assert sequence_to_perm("123") == Permutation.identity(3)

    def test_positions_from_sequence(self):
        assert sequence_to_perm("4132").pi == (2, 4, 3, 1)

    def test_sequence_round_trip_examples(self):
        for s in ("654321", "123", "4132", "165432"):
            assert perm_to_sequence(sequence_to_perm(s)) == s

    @given(st.permutations(list(range(1, 8))))
    def test_sequence_round_trip(self, seq):
        p = sequence_to_perm(seq)
        assert list(p.sequence()) == list(seq)

    def test_repeated_element_rejected(self):
        with pytest.raises(ParseError):
            sequence_to_perm("1223")

    def test_out_of_range_rejected(self):
        with pytest.raises(ParseError):
            sequence_to_perm("125")

    def test_bad_positions_rejected(self):
        with pytest.raises(InvalidPermutationError):
            Permutation((1, 1, 3))

    def test_spaced_sequence(self):
        p = sequence_to_perm("10 1 2 3 4 5 6 7 8 9")
        assert p.position(10) == 1


class TestPermToLopVertex:
    def test_identity_all_ones(self):
        assert perm_to_lop_vertex(Permutation.identity(3)).to_string() == "111"

    def test_reversal_all_zeros(self):
        assert perm_to_lop_vertex(sequence_to_perm("321")).to_string() == "000"

    def test_six_element_sequence(self):
        v = perm_to_lop_vertex(sequence_to_perm("165432"))
        assert v.bit(pair_index(1, 2, 6)) == 1
        assert v.bit(pair_index(3, 4, 6)) == 0
        assert v.bit(pair_index(5, 6, 6)) == 0

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_injective(self, m):
        from itertools import permutations

        words = {
            perm_to_lop_vertex(sequence_to_perm(seq)).word
            for seq in permutations(range(1, m + 1))
        }
        import math

        assert len(words) == math.factorial(m)

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_vertex_to_perm_round_trip(self, m):
        from itertools import permutations

        for seq in permutations(range(1, m + 1)):
            p = sequence_to_perm(seq)
            v = perm_to_lop_vertex(p)
            assert lop_vertex_to_perm(v, m) == p

    def test_non_order_word_rejected(self):
        with pytest.raises(InvalidVertexError):
            lop_vertex_to_perm(Vertex01.from_string("101"), 3)


class TestLinearForm:
    def test_evaluate(self):
        f = LinearForm((1, 1, -1), "<=", 1)
        assert f.evaluate(Vertex01.from_string("111")) == 1
        assert f.evaluate(Vertex01.from_string("100")) == 1
        assert f.evaluate(Vertex01.from_string("001")) == -1

    def test_relations(self):
        f = LinearForm((1,), ">=", 1)
        assert not f.satisfied_by(Vertex01.from_string("0"))
        assert f.satisfied_by(Vertex01.from_string("1"))

    def test_parse_render_round_trip(self):
        f = LinearForm((0, 1, 1, 0, -1, 0), "=", 0)
        assert LinearForm.parse(f.render()) == f

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            LinearForm.parse("1 0 == 0")
        with pytest.raises(ParseError):
            LinearForm.parse("<=")

    def test_describe_uses_labels(self):
        layout = CoordLayout.lop(3)
        f = LinearForm((1, -1, 2), "<=", 1)
        assert f.describe(layout) == "y(1,2) - y(1,3) + 2*y(2,3) <= 1"

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            LinearForm((1, 0), "<=", 0).evaluate(Vertex01.from_string("111"))

    def test_evaluate_coords_exact(self):
        f = LinearForm((2, -3), "=", 0)
        assert f.evaluate_coords((Fraction(3, 2), Fraction(1))) == 0


class TestAffineMapQ:
    def test_apply_with_offset(self):
        m = AffineMapQ(
            ((Fraction(1), Fraction(1)),),
            (Fraction(-1),),
        )
        assert m.apply((Fraction(1), Fraction(2))) == (Fraction(2),)

    def test_linear_zero_offset(self):
        m = AffineMapQ.linear([[1, 0], [0, 1]])
        assert m.apply_vertex(Vertex01.from_string("10")) == (1, 0)

    def test_dimension_mismatch(self):
        m = AffineMapQ.linear([[1, 0]])
        with pytest.raises(DimensionMismatchError):
            m.apply((1,))


class TestVertexFromCoords:
    def test_integral_coords(self):
        layout = CoordLayout.stable(3)
        v = vertex_from_coords(layout, (Fraction(1), Fraction(0), Fraction(1)))
        assert v.to_string() == "101"

    def test_fractional_coords_rejected(self):
        with pytest.raises(InvalidVertexError):
            vertex_from_coords(CoordLayout.stable(1), (Fraction(1, 2),))
