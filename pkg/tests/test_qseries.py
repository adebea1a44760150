import pytest

from qrecur.algebra import RATFUN3, LaurentPoly, Kv3, specialize3, q3
from qrecur.exceptions import DomainError, UnknownKnotError
from qrecur.qseries import (
    FIG8,
    JONES_CACHE_SIZE,
    TREFOIL,
    Summand,
    colored_jones,
    cyclotomic_S,
    jones_fig8,
    jones_trefoil,
    qpochhammer,
    resolve_summand,
    summand_value,
    _summed,
    term_ratios,
)
from qrecur.util import parse_laurent, parse_ratfun3

# Test vectors
J31_2 = "q + q^3 - q^4"
J31_3 = "q^2 + q^5 - q^7 + q^8 - q^9 - q^10 + q^11"
J41_2 = "q^2 - q + 1 - q^-1 + q^-2"
J41_3 = (
    "q^6 - q^5 - q^4 + 2q^3 - q^2 - q + 3"
    " - q^-1 - q^-2 + 2q^-3 - q^-4 - q^-5 + q^-6"
)
FIG8_RATIO_K = "(q*Q*Kv - 1)*(Q - q*Kv)/(q*Q*Kv)"


@pytest.mark.parametrize(
    "knot,n,expected",
    [
        ("3_1", 1, "1"),
        ("3_1", 2, J31_2),
        ("3_1", 3, J31_3),
        ("4_1", 1, "1"),
        ("4_1", 2, J41_2),
        ("4_1", 3, J41_3),
    ],
)
def test_colored_jones_values(knot, n, expected):
    assert colored_jones(knot, n) == parse_laurent(expected)


def test_aliases():
    assert jones_trefoil(4) == colored_jones("trefoil", 4) == colored_jones("3_1", 4)
    assert jones_fig8(4) == colored_jones("fig8", 4) == colored_jones("4_1", 4)
    assert resolve_summand(FIG8) is FIG8


def test_jones_text():
    assert colored_jones("3_1", 2).to_text() == J31_2


def test_unknown_knot():
    with pytest.raises(UnknownKnotError):
        colored_jones("5_2", 2)
    with pytest.raises(KeyError):
        term_ratios("5_2")


def test_color_must_be_positive():
    with pytest.raises(DomainError):
        colored_jones("3_1", 0)


def test_normalization_at_q_equals_one():
    for n in range(1, 21):
        assert colored_jones("3_1", n).evaluate(1) == 1
        assert colored_jones("4_1", n).evaluate(1) == 1


def test_fig8_is_amphicheiral():
    for n in range(1, 21):
        assert colored_jones("4_1", n).is_palindromic()


def test_integer_coefficients():
    for n in range(1, 21):
        assert colored_jones("3_1", n).has_integer_coefficients()
        assert colored_jones("4_1", n).has_integer_coefficients()


def test_value_cache_is_bounded():
    colored_jones("3_1", 5)
    info = _summed.cache_info()
    assert info.maxsize == JONES_CACHE_SIZE
    assert info.currsize <= JONES_CACHE_SIZE


def test_direct_and_incremental_sums_agree():
    for n in range(1, 9):
        for summand in (TREFOIL, FIG8):
            direct = LaurentPoly()
            for k in range(summand.support_bound(n)):
                direct = direct + summand_value(summand, n, k)
            assert colored_jones(summand, n) == direct


def test_support_bound():
    assert TREFOIL.support_bound(1) == 1
    assert TREFOIL.support_bound(5) == 5
    assert not summand_value(TREFOIL, 5, 5)


#
# cyclotomic form of the figure-eight summand
#


def test_cyclotomic_example():
    assert cyclotomic_S(2, 1) == parse_laurent("q^2 - q - q^-1 + q^-2")
    assert cyclotomic_S(5, 0) == LaurentPoly({0: 1})


def test_cyclotomic_matches_pochhammer_form():
    for n in range(1, 21):
        for k in range(n + 1):
            assert summand_value(FIG8, n, k) == cyclotomic_S(n, k)


def test_cyclotomic_domain():
    with pytest.raises(DomainError):
        cyclotomic_S(0, 1)


#
# q-Pochhammer symbols
#


def test_qpochhammer():
    q = LaurentPoly.monomial(1)
    assert qpochhammer(q, 0) == LaurentPoly({0: 1})
    assert qpochhammer(q, 2) == parse_laurent("(1 - q)*(1 - q^2)")
    assert not qpochhammer(q, 2, -1)
    assert qpochhammer(LaurentPoly.monomial(-1), 2, -1) == parse_laurent(
        "(1 - q^-1)*(1 - q^-2)"
    )


def test_qpochhammer_negative_length():
    with pytest.raises(DomainError):
        qpochhammer(1, -1)


#
# summands
#


def test_summand_rejects_half_integral_exponent():
    with pytest.raises(DomainError):
        Summand(k_lin=1)
    with pytest.raises(DomainError):
        Summand(sign=2)
    with pytest.raises(DomainError):
        Summand(factors=[(0, 1, 0)])


def test_summand_without_compact_support():
    summand = Summand(factors=[(1, 0, 1)])
    assert summand.support_bound(3) is None
    with pytest.raises(DomainError):
        colored_jones(summand, 3)


#
# shift ratios
#


def test_fig8_k_ratio():
    assert term_ratios("4_1").ratio_k == parse_ratfun3(FIG8_RATIO_K)


def test_trefoil_k_ratio():
    fig8 = term_ratios("4_1").ratio_k
    assert term_ratios("3_1").ratio_k == fig8 * RATFUN3(-q3 ** 2 * Kv3)


def test_ratios_are_compatible():
    assert term_ratios("3_1").is_compatible()
    assert term_ratios("4_1").is_compatible()


def test_product_term_ratios():
    term = term_ratios(Summand(n_quad=1, n_lin=-1, factors=[(0, 0, 1)]))
    assert term.ratio_n == parse_ratfun3("Q")
    with pytest.raises(DomainError):
        term.boundary_value()


@pytest.mark.parametrize("knot", ["3_1", "4_1"])
def test_ratios_match_values(knot):
    term = term_ratios(knot)
    for n in range(1, 11):
        for k in range(n + 1):
            value = term.value(n, k)
            num, den = term.ratio_k.numer, term.ratio_k.denom
            assert specialize3(num, n, k) * value == specialize3(den, n, k) * term.value(n, k + 1)
            num, den = term.ratio_n.numer, term.ratio_n.denom
            assert specialize3(num, n, k) * value == specialize3(den, n, k) * term.value(n + 1, k)


def test_boundary_value():
    assert term_ratios("3_1").boundary_value() == RATFUN3.one
    assert term_ratios("4_1").base == LaurentPoly({0: 1})
