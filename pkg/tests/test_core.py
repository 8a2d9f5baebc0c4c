import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from boundedones.core import (
    AllZero,
    CodeBook,
    CodeTree,
    DanglingSuffix,
    EmptyInput,
    InvalidWeight,
    LabelCountMismatch,
    NegativeWeight,
    NoMatch,
    SymbolMismatch,
    UnknownSymbol,
    average_cost,
    decode,
    encode,
    kraft_sum,
    ones_count,
    parse_distribution,
    validate_distribution,
)

SMALL = CodeBook(("00", "01", "1"))
EXAMPLE1 = CodeBook(("0000", "11", "001", "0001", "010", "011", "100"))


def test_validate_passes_through():
    d = validate_distribution([1, 2, 3])
    assert d.weights == (1, 2, 3)
    assert d.exact


@pytest.mark.parametrize(
    "weights, exc",
    [
        ([], EmptyInput),
        ([1, -1], NegativeWeight),
        ([0, 0], AllZero),
        ([1, float("nan")], InvalidWeight),
        ([1, float("inf")], InvalidWeight),
        ([True, 1], InvalidWeight),
        (["3"], InvalidWeight),
    ],
)
def test_validate_rejects(weights, exc):
    with pytest.raises(exc):
        validate_distribution(weights)


def test_label_count_mismatch():
    with pytest.raises(LabelCountMismatch):
        validate_distribution([1, 2], ["a"])


def test_float_weights_switch_mode():
    d = validate_distribution([1, 2.5])
    assert not d.exact
    assert d.weights == (1.0, 2.5)


@pytest.mark.parametrize("word, expected", [("0000", 0), ("11", 2), ("100", 1), ("", 0)])
def test_ones_count(word, expected):
    assert ones_count(word) == expected


def test_ones_count_rejects_non_binary():
    with pytest.raises(ValueError):
        ones_count("012")


def test_average_cost():
    book = CodeBook(("0", "10", "11"))
    cost = average_cost(book, validate_distribution([5, 3, 2]))
    assert cost.raw == 5 * 1 + 3 * 2 + 2 * 2 == 15
    assert cost.normalized == Fraction(3, 2)

    assert average_cost(CodeBook(("",)), validate_distribution([7])).raw == 0
    two = average_cost(CodeBook(("0", "1")), validate_distribution([1, 1]))
    assert (two.raw, two.normalized) == (2, 1)


def test_average_cost_symbol_mismatch():
    with pytest.raises(SymbolMismatch):
        average_cost(SMALL, validate_distribution([1, 2]))


@given(
    st.lists(st.integers(0, 50), min_size=3, max_size=3).filter(any),
    st.integers(1, 20),
)
def test_average_cost_is_linear(weights, c):
    book = SMALL
    base = average_cost(book, validate_distribution(weights))
    scaled = average_cost(book, validate_distribution([c * w for w in weights]))
    assert scaled.raw == c * base.raw
    assert scaled.normalized == base.normalized


def test_kraft_sum():
    assert kraft_sum([1, 2, 2]) == (1, True)
    assert kraft_sum([4, 2, 3, 4, 3, 3, 3]) == (Fraction(7, 8), False)
    assert kraft_sum([1]) == (Fraction(1, 2), False)


def test_encode_examples():
    assert encode(SMALL, [0, 2]) == "001"
    assert encode(SMALL, []) == ""
    assert encode(EXAMPLE1, [1, 6]) == "11100"


def test_encode_unknown_symbol():
    with pytest.raises(UnknownSymbol):
        encode(SMALL, [3])


def test_decode_examples():
    assert decode(SMALL, "001") == [0, 2]
    assert decode(SMALL, "") == []
    with pytest.raises(DanglingSuffix) as info:
        decode(SMALL, "0")
    assert info.value.offset == 1


def test_decode_no_match():
    book = CodeBook(("00", "01"))
    with pytest.raises(NoMatch) as info:
        decode(book, "001")
    assert info.value.offset == 2


def test_single_symbol_code():
    book = CodeBook(("",))
    assert encode(book, [0, 0]) == ""
    assert decode(book, "") == []


codebooks = st.sampled_from([SMALL, EXAMPLE1, CodeBook(("0", "10", "110", "111"))])


@given(codebooks, st.data())
def test_decode_inverts_encode(book, data):
    msg = data.draw(st.lists(st.integers(0, book.n - 1), max_size=40))
    assert decode(book, encode(book, msg)) == msg


def test_prefix_and_alphabetic_checks():
    assert SMALL.is_prefix_free() and SMALL.is_alphabetic()
    assert EXAMPLE1.is_prefix_free() and not EXAMPLE1.is_alphabetic()
    assert not CodeBook(("0", "01")).is_prefix_free()
    assert not CodeBook(("1", "1")).is_prefix_free()


def test_codebook_json_round_trip():
    dist = validate_distribution([5, 3, 2], ["a", "b", "c"])
    book = CodeBook(("0", "10", "11"), "alphabetic", 2, dist.labels)
    data = book.to_dict(dist)
    assert data["entries"][1] == {"symbol": 1, "label": "b", "codeword": "10", "length": 2, "ones": 1}
    assert data["raw_cost"] == 15 and data["normalized_cost"] == 1.5
    assert CodeBook.from_dict(data) == book


def test_code_tree_from_codewords():
    tree = CodeTree.from_codewords(EXAMPLE1.codewords)
    assert tree.codewords() == EXAMPLE1.codewords
    assert not tree.is_full()
    assert tree.max_right_edges() == 2
    assert [s for s, _ in tree.leaves()] == [0, 3, 2, 4, 5, 6, 1]
    assert CodeTree.from_codewords(SMALL.codewords).is_full()
    with pytest.raises(ValueError):
        CodeTree.from_codewords(["0", "01"])


def test_parse_distribution_plain_and_labelled():
    d, forced = parse_distribution("5\n3\n\n2\n")
    assert d.weights == (5, 3, 2) and d.labels is None and not forced
    d, _ = parse_distribution("a\t1\nb\t2\n")
    assert d.labels == ("a", "b")


def test_parse_distribution_scales_decimals():
    d, forced = parse_distribution("0.5\n0.25\n0.125\n")
    assert d.weights == (500, 250, 125) and d.exact and not forced


def test_parse_distribution_too_many_decimals_uses_floats():
    d, forced = parse_distribution("0.1234567891\n1\n")
    assert forced and not d.exact
    assert math.isclose(d.weights[0], 0.1234567891)


def test_parse_distribution_errors():
    with pytest.raises(EmptyInput):
        parse_distribution("\n# nothing\n")
    with pytest.raises(InvalidWeight):
        parse_distribution("abc\n")
