"""
qrecur.qseries
~~~~~~~~~~~~~~

This module contains q-Pochhammer symbols, proper q-hypergeometric
summands and the exact colored Jones values of the trefoil and the
figure-eight knot.

A summand is described declaratively by :class:`Summand`; exact values,
the finite summation over k and the symbolic shift ratios are all derived
from that one description.

:copyright: (c) 2018 Andrew Grant Spencer
:license: BSD, see LICENSE for more details.
"""

from collections import namedtuple
from functools import lru_cache
import logging

from .algebra import (
    KV_INDEX,
    Q_INDEX,
    RATFUN3,
    LaurentPoly,
    Kv3,
    Q3,
    q3,
    scale_fraction,
)
from .exceptions import DomainError, UnknownKnotError

logger = logging.getLogger(__name__)

_ONE = LaurentPoly({0: 1})

#: Colored Jones values kept per process, across all summands.
JONES_CACHE_SIZE = 256


#: The factor ``(q^(u + v n); q^s)_k`` of a summand.
PochhammerFactor = namedtuple("PochhammerFactor", ["q_exp", "n_exp", "step"])

_SummandBase = namedtuple(
    "Summand",
    ["sign", "k_quad", "k_lin", "nk", "n_quad", "n_lin", "factors"],
)


class Summand(_SummandBase):
    """
    A proper q-hypergeometric summand

    ``F(n, k) = sign^k q^e(n, k) prod (q^(u + v n); q^s)_k``

    with ``e(n, k) = (k_quad k^2 + k_lin k)/2 + nk n k + (n_quad n^2 + n_lin n)/2``.

    Both half-sums must be integral for every n and k, so
    ``k_quad + k_lin`` and ``n_quad + n_lin`` have to be even; a
    `DomainError` is raised otherwise.
    """

    __slots__ = ()

    def __new__(cls, sign=1, k_quad=0, k_lin=0, nk=0, n_quad=0, n_lin=0,
                factors=()):
        if sign not in (1, -1):
            raise DomainError("sign must be 1 or -1")
        if (k_quad + k_lin) % 2 or (n_quad + n_lin) % 2:
            raise DomainError("the q-exponent must be integral")
        factors = tuple(PochhammerFactor(*f) for f in factors)
        if any(f.step == 0 for f in factors):
            raise DomainError("a Pochhammer step must be nonzero")
        return super(Summand, cls).__new__(
            cls, sign, k_quad, k_lin, nk, n_quad, n_lin, factors
        )

    def exponent(self, n, k):
        return (
            (self.k_quad * k * k + self.k_lin * k) // 2
            + self.nk * n * k
            + (self.n_quad * n * n + self.n_lin * n) // 2
        )

    def support_bound(self, n):
        """
        The least k with F(n, k') = 0 for every k' >= k, or None when the
        summand has no compact support at `n`.
        """
        bound = None
        for f in self.factors:
            offset = f.q_exp + f.n_exp * n
            if offset % f.step == 0 and -offset // f.step >= 0:
                vanish = -offset // f.step + 1
                bound = vanish if bound is None else min(bound, vanish)
        return bound


#: The summand of the left-handed trefoil,
#: ``(-1)^k q^(k(k+3)/2) q^(nk) (q^(-n-1); q^-1)_k (q^(1-n); q)_k``.
TREFOIL = Summand(
    sign=-1, k_quad=1, k_lin=3, nk=1,
    factors=[(-1, -1, -1), (1, -1, 1)],
)

#: The summand of the figure-eight knot, ``q^(nk) (q^(-n-1); q^-1)_k (q^(1-n); q)_k``.
FIG8 = Summand(nk=1, factors=[(-1, -1, -1), (1, -1, 1)])

SUMMANDS = {
    "trefoil": TREFOIL,
    "3_1": TREFOIL,
    "fig8": FIG8,
    "4_1": FIG8,
}


def resolve_summand(knot):
    """
    Return the summand of `knot`, given by name or as a :class:`Summand`.

    An `UnknownKnotError` is raised if the name is not registered.
    """
    if isinstance(knot, Summand):
        return knot
    try:
        return SUMMANDS[knot]
    except (KeyError, TypeError):
        raise UnknownKnotError(knot)


def qpochhammer(a, k, step=1):
    """
    The q-Pochhammer symbol ``(a; q^step)_k = (1 - a)(1 - a q^step)...``.

    :param a: The base point, usually a monomial.
    :type a: LaurentPoly or int
    :param k: The number of factors.
    :type k: int
    :param step: (optional) 1 for ``(a; q)_k``, -1 for ``(a; q^-1)_k``.
    :type step: int
    :rtype: LaurentPoly
    """
    if k < 0:
        raise DomainError("k must be nonnegative")
    a = LaurentPoly.coerce(a)
    result = _ONE
    for i in range(k):
        result = result * (_ONE - a * LaurentPoly.monomial(step * i))
    return result


def summand_value(summand, n, k):
    """Evaluate ``F(n, k)`` directly from its product formula."""
    summand = resolve_summand(summand)
    value = LaurentPoly.monomial(
        summand.exponent(n, k), summand.sign ** k
    )
    for f in summand.factors:
        value = value * qpochhammer(
            LaurentPoly.monomial(f.q_exp + f.n_exp * n), k, f.step
        )
    return value


@lru_cache(maxsize=JONES_CACHE_SIZE)
def _summed(summand, n):
    bound = summand.support_bound(n)
    if bound is None:
        raise DomainError("the summand has no compact support at n={0}".format(n))

    term = LaurentPoly.monomial(summand.exponent(n, 0))
    total = LaurentPoly()
    for k in range(bound):
        total = total + term
        step = (summand.k_quad * (2 * k + 1) + summand.k_lin) // 2 + summand.nk * n
        term = term * LaurentPoly.monomial(step, summand.sign)
        for f in summand.factors:
            term = term * (
                _ONE - LaurentPoly.monomial(f.q_exp + f.n_exp * n + f.step * k)
            )
    return total


def colored_jones(knot, n):
    """
    Return the colored Jones value J(n) as the finite sum of the summand
    over its support.

    :param knot: A knot name (``"3_1"``, ``"4_1"``, ``"trefoil"``,
        ``"fig8"``) or a :class:`Summand`.
    :param n: The color, n >= 1.
    :type n: int
    :rtype: LaurentPoly
    """
    if n < 1:
        raise DomainError("the color n must be at least 1")
    summand = resolve_summand(knot)
    logger.debug("summing %s at n=%d", summand, n)
    return _summed(summand, n)


def jones_trefoil(n):
    return colored_jones(TREFOIL, n)


def jones_fig8(n):
    return colored_jones(FIG8, n)


def cyclotomic_S(n, k):
    """
    The cyclotomic form ``prod_{j=1..k} (q^n + q^-n - q^j - q^-j)`` of the
    figure-eight summand.
    """
    if n < 1 or k < 0:
        raise DomainError("S(n, k) needs n >= 1 and k >= 0")
    mono = LaurentPoly.monomial
    result = _ONE
    for j in range(1, k + 1):
        result = result * (mono(n) + mono(-n) - mono(j) - mono(-j))
    return result


def _qpoch_ratio(x, m, s):
    """``(x q^(m s); q^s)_k / (x; q^s)_k`` with Kv standing for q^k."""
    ratio = RATFUN3.one
    if m >= 0:
        for j in range(m):
            shifted = x * q3 ** (s * j)
            ratio *= (1 - shifted * Kv3 ** s) / (1 - shifted)
    else:
        for j in range(1, -m + 1):
            shifted = x * q3 ** (-s * j)
            ratio *= (1 - shifted) / (1 - shifted * Kv3 ** s)
    return ratio


class QHyperTerm(object):
    """
    Initialize a :class:`QHyperTerm <QHyperTerm>` object: a summand with
    its shift ratios ``F(n+1, k)/F(n, k)`` and ``F(n, k+1)/F(n, k)`` as
    reduced elements of Q(q, Q, Kv), Q standing for q^n and Kv for q^k.

    :param summand: The declarative summand.
    :type summand: Summand
    :param ratio_n: The n-shift ratio.
    :param ratio_k: The k-shift ratio.
    """

    __slots__ = ("summand", "ratio_n", "ratio_k")

    def __init__(self, summand, ratio_n, ratio_k):
        self.summand = summand
        self.ratio_n = RATFUN3(ratio_n)
        self.ratio_k = RATFUN3(ratio_k)

    @property
    def base(self):
        return summand_value(self.summand, 0, 0)

    def support_bound(self, n):
        return self.summand.support_bound(n)

    def value(self, n, k):
        return summand_value(self.summand, n, k)

    def sum(self, n):
        return colored_jones(self.summand, n)

    def boundary_value(self):
        """
        ``F(n, 0)`` as an element of Q(q, Q, Kv); a `DomainError` is raised
        when it is not rational in q and Q.
        """
        s = self.summand
        if s.n_quad:
            raise DomainError("F(n, 0) is not rational in q and Q")
        return RATFUN3(Q3 ** (s.n_lin // 2))

    def is_compatible(self):
        """
        Check ``ratio_n(n, k+1) ratio_k(n, k) = ratio_k(n+1, k) ratio_n(n, k)``
        as an identity of rational functions.
        """
        lhs = scale_fraction(self.ratio_n, KV_INDEX, 1) * self.ratio_k
        rhs = scale_fraction(self.ratio_k, Q_INDEX, 1) * self.ratio_n
        return lhs == rhs

    def __repr__(self):
        return "<QHyperTerm: {0}>".format(self.summand)


def term_ratios(knot):
    """
    Derive the reduced shift ratios of a summand symbolically from its
    Pochhammer structure.

    A `DomainError` is raised when a factor's n-exponent is not a multiple
    of its step, since the n-ratio is then not rational in q^k.

    :param knot: A knot name or a :class:`Summand`.
    :rtype: QHyperTerm
    """
    s = resolve_summand(knot)

    ratio_k = RATFUN3(s.sign) * q3 ** ((s.k_quad + s.k_lin) // 2)
    ratio_k *= Kv3 ** s.k_quad * Q3 ** s.nk
    ratio_n = q3 ** ((s.n_quad + s.n_lin) // 2) * Q3 ** s.n_quad * Kv3 ** s.nk

    for f in s.factors:
        x = q3 ** f.q_exp * Q3 ** f.n_exp
        ratio_k *= 1 - x * Kv3 ** f.step
        if f.n_exp % f.step:
            raise DomainError(
                "factor {0} has no rational n-ratio".format(tuple(f))
            )
        ratio_n *= _qpoch_ratio(x, f.n_exp // f.step, f.step)

    return QHyperTerm(s, ratio_n, ratio_k)
