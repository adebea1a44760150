from fractions import Fraction

import pytest

from qrecur.algebra import BIPOLY, RATFUN, L, LaurentPoly, M, Q, q, ratfun, to_text
from qrecur.exceptions import DomainError, ParseError, ZeroOperandError
from qrecur.ore import OreOp, normalize
from qrecur.util import (
    laurent_from_json,
    laurent_to_json,
    normalized_from_json,
    operator_from_json,
    operator_to_json,
    parse_bipoly,
    parse_charpoly,
    parse_laurent,
    parse_ratfun,
    parse_ratfun3,
)

# Test vectors
A31 = "(L-1)*(L+M^6)"
OUT5_B0 = "q^-1*Q^2*(q^2-Q)/(q^3-Q^2)"


def test_parse_charpoly():
    assert parse_charpoly(A31) == (L - 1) * (L + M ** 6)


def test_parse_implicit_multiplication():
    assert parse_bipoly("2q^2Q") == 2 * q ** 2 * Q
    assert parse_bipoly("(q-Q)(q+Q)") == q ** 2 - Q ** 2
    assert parse_bipoly("-q^2 + 3") == 3 - q ** 2


def test_parse_negative_exponents():
    assert parse_ratfun(OUT5_B0) == ratfun(Q ** 2 * (q ** 2 - Q), q * (q ** 3 - Q ** 2))
    assert parse_ratfun("q^(-2)") == parse_ratfun("1/q^2")


def test_parse_rational_coefficient():
    assert parse_ratfun("(1/2)*q") == RATFUN(q) / 2


def test_parse_ratfun3():
    value = parse_ratfun3("Q*(1-Kv/Q)")
    assert value == parse_ratfun3("Q - Kv")


def test_parse_laurent():
    assert parse_laurent("q + q^3 - q^4") == LaurentPoly({1: 1, 3: 1, 4: -1})
    assert parse_laurent("q^-2 - q^-1 + 1") == LaurentPoly({-2: 1, -1: -1, 0: 1})
    assert parse_laurent("(q^2-1)/(q-1)") == LaurentPoly({0: 1, 1: 1})
    assert parse_laurent("(1/2)*q") == LaurentPoly({1: Fraction(1, 2)})


def test_parse_laurent_rejects_fraction():
    with pytest.raises(DomainError):
        parse_laurent("1/(1-q)")


def test_parse_bipoly_rejects_fraction():
    with pytest.raises(DomainError):
        parse_bipoly("q/Q")


@pytest.mark.parametrize(
    "text,position",
    [
        ("q +* Q", 3),
        ("(q - Q", 6),
        ("q ^ Q", 4),
        ("q + x", 4),
        ("", 0),
        ("q Q)", 3),
    ],
)
def test_parse_error_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_ratfun(text)
    assert info.value.position == position
    assert info.value.text == text


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        parse_charpoly("L + q")


def test_parse_division_by_zero():
    with pytest.raises(ZeroOperandError):
        parse_ratfun("q/(Q-Q)")


def test_text_roundtrip():
    for text in ["q^2*Q - 2*Q + 1", "-q^3 + q*Q^2 - 7"]:
        assert to_text(parse_bipoly(text)) == text


def test_laurent_json():
    p = LaurentPoly({-1: 2, 3: Fraction(-1, 3)})
    data = laurent_to_json(p)
    assert data == {"-1": 2, "3": "-1/3"}
    assert list(data) == ["-1", "3"]
    assert laurent_from_json(data) == p


def test_operator_json():
    P = OreOp([ratfun(-Q, q - 1), 0, ratfun(1, Q)])
    data = operator_to_json(P)
    assert data == {
        "var": "E",
        "coeffs": [
            {"e": 0, "num": "-Q", "den": "q - 1"},
            {"e": 2, "num": "1", "den": "Q"},
        ],
    }
    assert operator_from_json(data) == P


def test_normalized_json():
    P = normalize(OreOp([-Q, 1]))
    assert operator_to_json(P)["coeffs"] == [
        {"e": 0, "num": "-Q", "den": "1"},
        {"e": 1, "num": "1", "den": "1"},
    ]
    assert normalized_from_json(operator_to_json(P)) == P


def test_operator_json_rejects_other_documents():
    with pytest.raises(DomainError):
        operator_from_json({"var": "L", "coeffs": []})
