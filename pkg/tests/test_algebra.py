from fractions import Fraction
import random

import pytest

from qrecur.algebra import (
    BIPOLY,
    RATFUN,
    UNIPOLY,
    LaurentPoly,
    Q,
    content_and_primitive,
    eval_laurent,
    eval_q_at_1,
    q,
    q_power,
    ratfun,
    ratfun_arith,
    to_text,
)
from qrecur.exceptions import DomainError, ZeroOperandError

Qe = UNIPOLY.gens[0]
SEEDS = range(25)


def random_bipoly(rng, terms=4, degree=3):
    return BIPOLY.from_dict(
        dict(
            ((rng.randint(0, degree), rng.randint(0, degree)), rng.randint(-5, 5))
            for _ in range(terms)
        )
    )


def random_laurent(rng, terms=4):
    return LaurentPoly(
        dict(
            (rng.randint(-4, 4), Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
            for _ in range(terms)
        )
    )


#
# RatFun
#


def test_like_denominator_addition():
    a = ratfun(Q, q - 1)
    assert ratfun_arith(a, a, "add") == ratfun(2 * Q, q - 1)


def test_reduced_on_construction():
    value = ratfun(q ** 2 - Q ** 2, q - Q)
    assert value.numer == q + Q
    assert value.denom == 1


def test_self_division():
    a = ratfun(q ** 2 - Q, q ** 3 - Q ** 2)
    assert ratfun_arith(a, a, "div") == RATFUN.one


def test_division_by_zero():
    with pytest.raises(ZeroOperandError):
        ratfun_arith(RATFUN.one, RATFUN.zero, "div")
    with pytest.raises(ZeroDivisionError):
        ratfun(q, 0)


def test_unknown_operation():
    with pytest.raises(ValueError):
        ratfun_arith(RATFUN.one, RATFUN.one, "pow")


def test_canonical_representative():
    rng = random.Random(7)
    for _ in range(20):
        num, den, k = (random_bipoly(rng) for _ in range(3))
        if not den or not k:
            continue
        assert ratfun(num * k, den * k) == ratfun(num, den)


def test_q_power():
    assert q_power(ratfun(q ** 3, 1)) == 3
    assert q_power(ratfun(1, q ** 2)) == -2
    assert q_power(ratfun(-q, 1)) is None
    assert q_power(ratfun(Q, 1)) is None


#
# content and primitive parts
#


def test_content_integer_gcd():
    assert content_and_primitive(6 * q ** 2 * Q - 4 * q * Q ** 2) == (
        2,
        3 * q ** 2 * Q - 2 * q * Q ** 2,
    )


def test_content_already_primitive():
    assert content_and_primitive(q - Q) == (1, q - Q)


def test_content_carries_sign():
    assert content_and_primitive(-5 * Q) == (-5, Q)


def test_content_zero():
    with pytest.raises(ZeroOperandError):
        content_and_primitive(BIPOLY.zero)


def test_content_roundtrip():
    rng = random.Random(11)
    for _ in range(50):
        p = random_bipoly(rng) * rng.randint(1, 9)
        if not p:
            continue
        content, primitive = content_and_primitive(p)
        assert content * primitive == p
        assert primitive.content() == 1
        assert primitive.LC > 0


#
# evaluation at q = 1
#


def test_eval_q_at_1():
    assert eval_q_at_1(q ** 3 - Q ** 2) == 1 - Qe ** 2
    assert eval_q_at_1((q - 1) * Q) == 0
    assert eval_q_at_1(q ** 2 + q * Q + Q) == 1 + 2 * Qe


@pytest.mark.parametrize("seed", SEEDS)
def test_eval_q_at_1_homomorphism(seed):
    rng = random.Random(seed)
    a, b = random_bipoly(rng), random_bipoly(rng)
    assert eval_q_at_1(a * b) == eval_q_at_1(a) * eval_q_at_1(b)
    assert eval_q_at_1(a + b) == eval_q_at_1(a) + eval_q_at_1(b)


#
# Laurent polynomials
#


def test_eval_laurent():
    assert eval_laurent(LaurentPoly({1: 1, -1: 1}), 2) == Fraction(5, 2)
    assert eval_laurent(LaurentPoly({1: 1, 3: 1, 4: -1}), 1) == 1


def test_eval_laurent_at_zero():
    assert eval_laurent(LaurentPoly({0: 3, 2: 1}), 0) == 3
    with pytest.raises(DomainError):
        eval_laurent(LaurentPoly({-1: 1}), 0)


def test_laurent_canonical():
    assert LaurentPoly({2: 1, 3: 0}) == LaurentPoly({2: 1})
    assert LaurentPoly({0: 0}) == LaurentPoly()
    assert not LaurentPoly({5: 0})
    assert LaurentPoly({-2: 1}).valuation == -2
    assert LaurentPoly({-2: 1, 4: 3}).degree == 4


def test_laurent_text():
    assert LaurentPoly({1: 1, 3: 1, 4: -1}).to_text() == "q + q^3 - q^4"
    assert LaurentPoly({-1: -1, 0: 1}).to_text() == "-q^-1 + 1"
    assert LaurentPoly({1: Fraction(1, 2)}).to_text() == "(1/2)*q"
    assert LaurentPoly().to_text() == "0"


def test_laurent_substitute_and_symmetry():
    p = LaurentPoly({1: 1, -1: 1})
    assert p.is_palindromic()
    assert not LaurentPoly({1: 1}).is_palindromic()
    assert p.substitute_power(2) == LaurentPoly({2: 1, -2: 1})
    assert p.substitute_power(0) == LaurentPoly({0: 2})


@pytest.mark.parametrize("seed", SEEDS)
def test_laurent_ring_axioms(seed):
    rng = random.Random(seed)
    a, b, c = (random_laurent(rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == LaurentPoly()
    assert a - b == -(b - a)
    assert a ** 2 == a * a


@pytest.mark.parametrize("seed", SEEDS)
def test_bipoly_ring_axioms(seed):
    rng = random.Random(seed)
    a, b, c = (random_bipoly(rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == BIPOLY.zero


def test_to_text():
    assert to_text(q ** 2 * Q - 2 * Q + 1) == "q^2*Q - 2*Q + 1"
    assert to_text(ratfun(Q, q - 1)) == "(Q)/(q - 1)"
