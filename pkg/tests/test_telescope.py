import random

import pytest

from qrecur.algebra import KV_INDEX, RATFUN, RATFUN3, TRIPOLY, Q, q, ratfun, scale_fraction
from qrecur.exceptions import DomainError, OrderBoundExceeded
from qrecur.models import FIG8_KNOT, TREFOIL_KNOT
from qrecur.ore import act
from qrecur.qseries import Summand, term_ratios
from qrecur.telescope import (
    boundary_inhom,
    find_recursion,
    gosper_form,
    qgosper,
    qzeilberger,
    shift_candidates,
    verify_certificate,
)

qp, Qp, Kp = TRIPOLY.gens

# Test vectors: the published first-order trefoil relation and the
# second-order figure-eight relation, scaled to a unit leading coefficient
TREFOIL_TRAILING = ratfun(q ** 2 * Q ** 3 * (1 - Q), 1 - q * Q)
TREFOIL_INHOM = ratfun(Q * (q * Q ** 2 - 1), q * Q - 1)
FIG8_INHOM = ratfun((1 + q * Q) * (q ** 3 * Q ** 2 - 1), q * Q * (q ** 2 * Q - 1))


@pytest.fixture(scope="module")
def trefoil():
    return term_ratios("3_1")


@pytest.fixture(scope="module")
def fig8():
    return term_ratios("4_1")


@pytest.fixture(scope="module")
def trefoil_result(trefoil):
    return qzeilberger(trefoil, 1)


@pytest.fixture(scope="module")
def fig8_result(fig8):
    return qzeilberger(fig8, 2)


#
# q-Gosper
#


def test_shift_candidates():
    assert shift_candidates(1 - qp ** 2 * Kp, 1 - Kp) == [2]
    assert shift_candidates(1 - Kp, 1 - qp ** 2 * Kp) == []
    assert shift_candidates(1 - Kp, TRIPOLY.one) == []


def test_shift_candidates_with_parameters():
    a = (1 - qp ** 3 * Qp * Kp) * (1 + Kp) * (Qp - qp * Kp)
    b = (1 - Qp * Kp) * (1 - qp * Qp * Kp) * (Qp + qp ** 2 * Kp)
    assert shift_candidates(a, b) == [2, 3]
    assert shift_candidates(1 - Qp * Kp, 1 - qp * Kp) == []


def test_gosper_form():
    r = RATFUN3(1 - qp ** 2 * Kp) / RATFUN3(1 - Kp)
    a, b, c = gosper_form(r)
    c3 = RATFUN3(c)
    assert RATFUN3(a) / RATFUN3(b) * scale_fraction(c3, KV_INDEX, 1) / c3 == r
    assert a in (TRIPOLY.one, -TRIPOLY.one)


def test_qgosper_geometric():
    result = qgosper(RATFUN3(qp))
    assert result.exists
    assert result.certificate == RATFUN3.one / RATFUN3(qp - 1)


def test_qgosper_summable():
    # q^k (q; q)_k = G(k+1) - G(k) with G(k) = -(q; q)_k / q
    result = qgosper(RATFUN3(qp * (1 - qp * Kp)))
    assert result.exists
    assert result.certificate == -RATFUN3.one / RATFUN3(qp * Kp)


def test_qgosper_not_summable():
    result = qgosper(RATFUN3.one / RATFUN3(1 - qp * Kp))
    assert not result.exists
    assert result.certificate is None


def test_qgosper_zero_ratio():
    with pytest.raises(DomainError):
        qgosper(RATFUN3.zero)


def summable_term(rng):
    """
    Build t = G(k+1) - G(k) for G = R h with R rational in Kv and h
    q-hypergeometric; return the k-ratio of t.
    """
    a, b = rng.sample([1, 2, 3], 2)
    c, d, f = rng.randint(0, 2), rng.randint(0, 1), rng.randint(0, 1)
    s, e = rng.choice([1, -1]), rng.choice([1, -1, 2])
    rho = RATFUN3(1 - qp ** a * Kp) / RATFUN3(1 - qp ** b * Qp ** d * Kp)
    R = RATFUN3(qp ** c + s * Kp) / RATFUN3(Qp ** f + e * Kp)
    t = rho * scale_fraction(R, KV_INDEX, 1) - R
    return rho * scale_fraction(t, KV_INDEX, 1) / t


def test_qgosper_random_summable():
    rng = random.Random(11)
    for _ in range(6):
        ratio = summable_term(rng)
        result = qgosper(ratio)
        assert result.exists
        C = result.certificate
        assert ratio * scale_fraction(C, KV_INDEX, 1) - C == RATFUN3.one


#
# q-Zeilberger
#


def test_trefoil_first_order(trefoil_result):
    assert trefoil_result is not None
    assert trefoil_result.order == 1
    operator = trefoil_result.operator
    lc = operator.leading_coefficient
    assert operator.degree == 1
    assert operator.coeff(0) / lc == TREFOIL_TRAILING
    assert trefoil_result.inhom / lc == TREFOIL_INHOM


def test_fig8_needs_second_order(fig8, fig8_result):
    assert qzeilberger(fig8, 1) is None
    assert fig8_result.order == 2
    lc = fig8_result.operator.leading_coefficient
    assert fig8_result.operator.degree == 2
    assert fig8_result.inhom / lc == FIG8_INHOM


def test_certificate_identity(trefoil, fig8, trefoil_result, fig8_result):
    for term, result in [(trefoil, trefoil_result), (fig8, fig8_result)]:
        assert verify_certificate(term, result.operator, result.certificate)
        assert not verify_certificate(
            term, result.operator, result.certificate * 2
        )


def test_qzeilberger_order_domain(trefoil):
    with pytest.raises(DomainError):
        qzeilberger(trefoil, 0)


#
# boundary terms
#


def test_boundary_inhom_zero(trefoil):
    assert boundary_inhom(trefoil, RATFUN3.zero) == RATFUN.zero


def test_boundary_inhom_vanishing_certificate(trefoil):
    assert boundary_inhom(trefoil, RATFUN3(1 - Kp)) == RATFUN.zero


def test_boundary_inhom_pole(trefoil):
    with pytest.raises(DomainError):
        boundary_inhom(trefoil, RATFUN3.one / RATFUN3(1 - Kp))


def test_boundary_inhom_matches_result(trefoil, trefoil_result):
    assert boundary_inhom(trefoil, trefoil_result.certificate) == trefoil_result.inhom


#
# recursions
#


def test_trefoil_recursion():
    result = find_recursion("3_1", max_order=4)
    assert result.order == 1
    assert result.recursion.degree == 2
    assert result.recursion == TREFOIL_KNOT.reference_forward


def test_fig8_recursion():
    result = find_recursion(FIG8_KNOT.term(), max_order=4)
    assert result.order == 2
    assert result.recursion.degree == 3
    assert result.recursion == FIG8_KNOT.reference_forward


def test_recursion_without_homogenization():
    assert find_recursion("3_1", homogenize=False).recursion is None


def test_homogeneous_relation_for_product_term():
    # J(n) = q^(n(n-1)/2): the telescoper has certificate zero
    term = term_ratios(Summand(n_quad=1, n_lin=-1, factors=[(0, 0, 1)]))
    result = find_recursion(term)
    assert not result.certificate
    assert not result.inhom
    assert str(result.recursion) == "E - Q"


@pytest.mark.parametrize("knot", [TREFOIL_KNOT, FIG8_KNOT])
def test_recursion_annihilates(knot):
    recursion = knot.reference_forward
    for n in range(1, 31):
        assert not act(recursion, knot.jones, n)


def test_order_bound_exceeded():
    with pytest.raises(OrderBoundExceeded):
        find_recursion("4_1", max_order=1)
    with pytest.raises(DomainError):
        find_recursion("4_1", max_order=0)
