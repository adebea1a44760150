"""
qrecur.ajverify
~~~~~~~~~~~~~~~

This module compares the q = 1 evaluation of a computed recursion with
the stored A-polynomial of a knot and assembles the verdict on the AJ
conjecture: ``A(L, M) = eps A_q(L, M^2)`` up to factors rational in M.

:copyright: (c) 2018 Andrew Grant Spencer
:license: BSD, see LICENSE for more details.
"""

from fractions import Fraction
from functools import reduce
import logging

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .algebra import (
    BIPOLY,
    CHARPOLY,
    LAURENT_FIELD,
    RATFUN,
    L,
    eval_q_at_1,
)
from .exceptions import DomainError, ZeroOperandError
from .models import (
    AjVerdict,
    Annihilation,
    Order1Certificate,
    OrderExclusion,
    get_knot,
)
from .ore import OreOp, act, normalize
from .telescope import DEFAULT_MAX_ORDER, find_recursion

logger = logging.getLogger(__name__)

DEFAULT_TABLE_SIZE = 40
DEFAULT_DEG_Q = 8
DEFAULT_DEG_SMALL_Q = 16
DEFAULT_ANNIHILATION_RANGE = 30

#: Fewest values :func:`no_order1_annihilator` accepts at the default degree.
MIN_TABLE_SIZE = 2 * (DEFAULT_DEG_Q + 1) + 4

#: Points q = q0 at which the first-order system is tried numerically.
SPECIALIZATIONS = (Fraction(2), Fraction(3), Fraction(5, 2))

_LAURENT_DOMAIN = LAURENT_FIELD.to_domain()
_qL = LAURENT_FIELD.gens[0]


def _fix_sign(p):
    return -p if p.LC < 0 else p


def characteristic_poly(P):
    """
    Evaluate a normalized operator at q = 1 and rename E -> L, Q -> M^2.

    The integer content is removed and the leading coefficient made
    positive.

    :param P: The operator.
    :type P: :class:`qrecur.ore.NormalizedOp`
    :rtype: CharPoly
    """
    terms = {}
    for k, b in enumerate(P.coeffs):
        for (j,), c in eval_q_at_1(b).items():
            terms[(k, 2 * j)] = c
    poly = CHARPOLY.from_dict(terms)
    if not poly:
        raise DomainError("the operator vanishes at q = 1")
    return _fix_sign(poly.primitive()[1])


def _essential_form(p):
    low = min(m[0] for m in p.itermonoms())
    p = CHARPOLY.from_dict(dict(((i - low, j), c) for (i, j), c in p.items()))

    coeffs = {}
    for (i, j), c in p.items():
        coeffs.setdefault(i, {})[(0, j)] = c
    g = reduce(
        lambda a, b: a.gcd(b),
        [CHARPOLY.from_dict(terms) for terms in coeffs.values()],
    )
    return _fix_sign(p.exquo(g))


def essential_equality(p1, p2):
    """
    Decide whether two characteristic polynomials agree up to a factor
    rational in M and a power of L.

    Both sides are brought to a form primitive over Z[M] and free of L
    content, which is unique up to sign. A `ZeroOperandError` is raised
    for zero input.

    :rtype: bool
    """
    if not p1 or not p2:
        raise ZeroOperandError("essential equality of a zero polynomial")
    return _essential_form(p1) == _essential_form(p2)


def lemma31_check(P):
    """
    Does E - 1 divide the evaluation of `P` at q = 1, Q = 1?

    :rtype: bool
    """
    return sum(sum(b.values()) for b in P.coeffs) == 0


def _laurent_to_field(p):
    value = LAURENT_FIELD.zero
    for e, c in p.terms.items():
        value += LAURENT_FIELD(c.numerator) / c.denominator * _qL ** e
    return value


def _field_to_ratfun(f):
    def lift(p):
        return BIPOLY.from_dict(dict(((e, 0), c) for (e,), c in p.items()))

    return RATFUN.new(lift(f.numer), lift(f.denom))


def no_order1_annihilator(values, deg_Q=DEFAULT_DEG_Q, deg_q=DEFAULT_DEG_SMALL_Q):
    """
    Look for ``a(q, q^n) J(n+1) + b(q, q^n) J(n) = 0`` on a value table,
    with a and b polynomials in Q of degree at most `deg_Q` over Q(q).

    A full column rank at some rational point q = q0 certifies that the
    system has no nonzero solution over Q(q); otherwise the nullspace is
    computed exactly and a first-order operator is recovered from it.

    A `DomainError` is raised if the table has fewer than
    ``2 (deg_Q + 1) + 4`` values.

    :param values: J(1), ..., J(N) as LaurentPoly.
    :type values: sequence
    :param deg_Q: (optional) The Q-degree bound.
    :type deg_Q: int
    :param deg_q: (optional) The q-degree bound, recorded only; the
        coefficients range over all of Q(q).
    :type deg_q: int
    :rtype: :class:`qrecur.models.Order1Certificate`
    """
    values = list(values)
    size = len(values)
    unknowns = 2 * (deg_Q + 1)
    if size < unknowns + 4:
        raise DomainError(
            "{0} values cannot decide {1} unknowns".format(size, unknowns)
        )

    # row n: sum_j a_j q^(nj) J(n+1) + sum_j b_j q^(nj) J(n)
    def row(n, convert, power):
        return [convert(values[n]) * power(n * j) for j in range(deg_Q + 1)] + [
            convert(values[n - 1]) * power(n * j) for j in range(deg_Q + 1)
        ]

    for q0 in SPECIALIZATIONS:
        rows = [
            [QQ(v.numerator, v.denominator) for v in row(
                n, lambda p: p.evaluate(q0), lambda e: q0 ** e)]
            for n in range(1, size)
        ]
        rank = DomainMatrix(rows, (size - 1, unknowns), QQ).rank()
        logger.debug("first-order system at q=%s has rank %d", q0, rank)
        if rank == unknowns:
            return Order1Certificate(deg_Q, deg_q, size, 0, q0, None)

    rows = [row(n, _laurent_to_field, lambda e: _qL ** e) for n in range(1, size)]
    basis = (
        DomainMatrix(rows, (size - 1, unknowns), _LAURENT_DOMAIN)
        .nullspace()
        .to_dense()
        .rep.to_list()
    )
    if not basis:
        return Order1Certificate(deg_Q, deg_q, size, 0, None, None)

    Qgen = RATFUN.gens[1]
    vector = [_field_to_ratfun(v) for v in basis[0]]
    a = sum((c * Qgen ** j for j, c in enumerate(vector[: deg_Q + 1])), RATFUN.zero)
    b = sum((c * Qgen ** j for j, c in enumerate(vector[deg_Q + 1:])), RATFUN.zero)
    operator = normalize(OreOp([b, a]))
    logger.info("first-order annihilator found: %s", operator)
    return Order1Certificate(deg_Q, deg_q, size, len(basis), None, operator)


def check_annihilation(P, knot, n_max=DEFAULT_ANNIHILATION_RANGE):
    """
    Apply `P` to the colored Jones values of `knot` for
    n = 1..n_max - deg P, in exact Laurent arithmetic.

    :param P: The operator.
    :type P: :class:`qrecur.ore.NormalizedOp`
    :param knot: A registered knot name or :class:`qrecur.models.Knot`.
    :param n_max: (optional) The largest index of a value used.
    :type n_max: int
    :rtype: :class:`qrecur.models.Annihilation`
    """
    if n_max < P.degree + 1:
        raise DomainError("n_max must exceed the order of the operator")
    knot = get_knot(knot)
    for n in range(1, n_max - P.degree + 1):
        if act(P, knot.jones, n):
            return Annihilation(False, n)
    return Annihilation(True, None)


def order_exclusion_data(a_polynomial):
    """
    Divide an A-polynomial by L - 1 and record the quotient and its
    degree in L.

    :rtype: :class:`qrecur.models.OrderExclusion`
    """
    divisor = L - 1
    quotient, remainder = a_polynomial.div(divisor)
    degree = max(m[0] for m in quotient.itermonoms()) if quotient else -1
    return OrderExclusion(divisor, quotient, degree, not remainder)


def compare_with_reference(P, knot):
    """
    Is `P` the published recursion of `knot`, in forward form and up to
    the unit convention of :func:`qrecur.ore.normalize`?
    """
    return normalize(P) == get_knot(knot).reference_forward


def aj_verdict(
    knot,
    max_order=DEFAULT_MAX_ORDER,
    table_size=DEFAULT_TABLE_SIZE,
    deg_Q=DEFAULT_DEG_Q,
    deg_q=DEFAULT_DEG_SMALL_Q,
    n_max=DEFAULT_ANNIHILATION_RANGE,
):
    """
    Run the whole pipeline for a registered knot: find and homogenize the
    recursion, check it on the value table, evaluate it at q = 1 and
    compare with the stored A-polynomial.

    An `UnknownKnotError` is raised for unregistered names; errors of the
    individual steps propagate.

    :rtype: :class:`qrecur.models.AjVerdict`
    """
    knot = get_knot(knot)
    result = find_recursion(knot.term(), max_order)
    P = result.recursion

    char_poly = characteristic_poly(P)
    a_polynomial = knot.a_polynomial
    values = [knot.jones(n) for n in range(1, table_size + 1)]

    verdict = AjVerdict(
        knot=knot.name,
        order=P.degree,
        operator=P,
        char_poly=char_poly,
        a_polynomial=a_polynomial,
        essentially_equal=essential_equality(char_poly, a_polynomial),
        lemma31_ok=lemma31_check(P),
        annihilation=check_annihilation(P, knot, n_max),
        no_order1_certificate=no_order1_annihilator(values, deg_Q, deg_q),
        order_exclusion=order_exclusion_data(a_polynomial),
        reference_match=compare_with_reference(P, knot),
    )
    logger.info(
        "%s: order %d, essentially equal: %s",
        knot.name, verdict.order, verdict.essentially_equal,
    )
    return verdict


def verdict_passes(verdict):
    """The checks that decide the command line exit status."""
    return bool(
        verdict.essentially_equal
        and verdict.lemma31_ok
        and verdict.annihilation.ok
        and verdict.no_order1_certificate.nullspace_dimension == 0
    )
