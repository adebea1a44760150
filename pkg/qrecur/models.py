"""
qrecur.models
~~~~~~~~~~~~~

This module contains the knot registry and the result records returned by
qrecur's pipelines.

:copyright: (c) 2018 Andrew Grant Spencer
:license: BSD, see LICENSE for more details.
"""

from collections import namedtuple

from .exceptions import UnknownKnotError
from .ore import OreOp, normalize
from .qseries import FIG8, TREFOIL, colored_jones, term_ratios
from .util import parse_charpoly, parse_ratfun

#: The outcome of a q-Gosper run; ``certificate`` is the rational R with
#: antidifference ``G(k) = R t(k)``, or None.
GosperCertificate = namedtuple("GosperCertificate", ["exists", "certificate"])

#: A creative telescoping relation ``operator J(n) = inhom``, with the
#: certificate ``G = certificate F``; ``recursion`` is the normalized
#: homogeneous operator once derived.
TelescopeResult = namedtuple(
    "TelescopeResult",
    ["operator", "certificate", "inhom", "order", "recursion"],
)

#: The first index at which an operator fails to annihilate, or None.
Annihilation = namedtuple("Annihilation", ["ok", "first_failure"])

#: The bounded exclusion of first-order annihilators.
Order1Certificate = namedtuple(
    "Order1Certificate",
    [
        "deg_Q",
        "deg_q",
        "table_size",
        "nullspace_dimension",
        "specialization",
        "operator",
    ],
)

#: Divisibility data for the factorization of an A-polynomial in L.
OrderExclusion = namedtuple(
    "OrderExclusion", ["divisor", "quotient", "quotient_degree", "exact"]
)

AjVerdict = namedtuple(
    "AjVerdict",
    [
        "knot",
        "order",
        "operator",
        "char_poly",
        "a_polynomial",
        "essentially_equal",
        "lemma31_ok",
        "annihilation",
        "no_order1_certificate",
        "order_exclusion",
        "reference_match",
    ],
)


class Knot(object):
    """
    Initialize a :class:`Knot <Knot>` object.

    :param name: The knot's Rolfsen name, e.g. ``"3_1"``.
    :type name: string
    :param summand: The summand whose sum over k is the colored Jones value.
    :type summand: :class:`qrecur.qseries.Summand`
    :param a_polynomial: The A-polynomial, including its L - 1 factor.
    :type a_polynomial: string
    :param reference: Backward-shift coefficients b_0, ..., b_d of the
        published recursion, as RatFun text.
    :type reference: sequence
    :param reference_forward: The same recursion in forward-shift form.
    :type reference_forward: sequence
    :param alias: (optional) A second registry name.
    :type alias: string
    """

    def __init__(self, name, summand, a_polynomial, reference,
                 reference_forward, alias=None):
        KnotData = namedtuple(
            "KnotData",
            [
                "name",
                "alias",
                "summand",
                "a_polynomial",
                "reference",
                "reference_forward",
            ],
        )
        self._data = KnotData(
            name,
            alias,
            summand,
            a_polynomial,
            tuple(reference),
            tuple(reference_forward),
        )

    def __repr__(self):
        return "<Knot {0}>".format(self.name)

    def __str__(self):
        return self.name

    def jones(self, n):
        return colored_jones(self.summand, n)

    def term(self):
        """
        Return the summand with its shift ratios.

        :rtype: :class:`qrecur.qseries.QHyperTerm`
        """
        return term_ratios(self.summand)

    @property
    def name(self):
        return self._data.name

    @property
    def alias(self):
        return self._data.alias

    @property
    def summand(self):
        return self._data.summand

    @property
    def a_polynomial_text(self):
        return self._data.a_polynomial

    @property
    def a_polynomial(self):
        return parse_charpoly(self._data.a_polynomial)

    @property
    def reference_operator(self):
        """
        The published recursion in backward-shift form, normalized.

        :rtype: :class:`qrecur.ore.NormalizedOp`
        """
        return normalize(OreOp([parse_ratfun(c) for c in self._data.reference]))

    @property
    def reference_forward(self):
        """The published recursion in forward-shift form, normalized."""
        return normalize(
            OreOp([parse_ratfun(c) for c in self._data.reference_forward])
        )


TREFOIL_KNOT = Knot(
    "3_1",
    TREFOIL,
    "(L-1)*(L+M^6)",
    [
        "q^-1*Q^2*(q^2-Q)/(q^3-Q^2)",
        "(q-Q)*(q+Q)*(q^4+Q^4-q^3*Q+q^2*Q^2-q^3*Q^2-q*Q^3)"
        "/(Q*(q-Q^2)*(q^3-Q^2))",
        "q^2*Q^-1*(-1+Q)/(q-Q^2)",
    ],
    [
        "q^3*Q^2*(q^2-q^2*Q)/(q^3-q^4*Q^2)",
        "q^-2*Q^-1*(q-q^2*Q)*(q+q^2*Q)"
        "*(q^4-q^5*Q+q^6*Q^2-q^7*Q^2-q^7*Q^3+q^8*Q^4)"
        "/((q-q^4*Q^2)*(q^3-q^4*Q^2))",
        "(-1+q^2*Q)/(Q*(q-q^4*Q^2))",
    ],
    alias="trefoil",
)

FIG8_KNOT = Knot(
    "4_1",
    FIG8,
    "(L-1)*(-L+L*M^2+M^4+2*L*M^4+L^2*M^4+L*M^6-L*M^8)",
    [
        "q^2*Q*(-q^3+Q)/((q^2+Q)*(-q^5+Q^2))",
        "-(q^2-Q)*(q^8+Q^4-2*q^6*Q+q^7*Q-q^3*Q^2+q^4*Q^2-q^5*Q^2+q*Q^3"
        "-2*q^2*Q^3)/(q^2*Q*(q+Q)*(q^5-Q^2))",
        "(-q+Q)*(q^4+Q^4+q^2*Q-2*q^3*Q-q*Q^2+q^2*Q^2-q^3*Q^2-2*q*Q^3"
        "+q^2*Q^3)/(q*Q*(q^2+Q)*(-q+Q^2))",
        "q*Q*(-1+Q)/((q+Q)*(q-Q^2))",
    ],
    [
        "q^5*Q*(-q^3+q^3*Q)/((q^2+q^3*Q)*(-q^5+q^6*Q^2))",
        "-q^-5*Q^-1*(q^2-q^3*Q)*(q^8-2*q^9*Q+q^10*Q-q^9*Q^2+q^10*Q^2"
        "-q^11*Q^2+q^10*Q^3-2*q^11*Q^3+q^12*Q^4)"
        "/((q+q^3*Q)*(q^5-q^6*Q^2))",
        "q^-4*Q^-1*(-q+q^3*Q)*(q^4+q^5*Q-2*q^6*Q-q^7*Q^2+q^8*Q^2-q^9*Q^2"
        "-2*q^10*Q^3+q^11*Q^3+q^12*Q^4)/((q^2+q^3*Q)*(-q+q^6*Q^2))",
        "q^4*Q*(-1+q^3*Q)/((q+q^3*Q)*(q-q^6*Q^2))",
    ],
    alias="fig8",
)

KNOTS = dict(
    (key, knot)
    for knot in (TREFOIL_KNOT, FIG8_KNOT)
    for key in (knot.name, knot.alias)
)

#: Registry names accepted on the command line.
KNOT_NAMES = (TREFOIL_KNOT.name, FIG8_KNOT.name)


def get_knot(name):
    """
    Look up a registered knot. An `UnknownKnotError` (a `KeyError`) is
    raised if `name` is not registered.

    :param name: ``"3_1"``, ``"4_1"``, ``"trefoil"`` or ``"fig8"``.
    :type name: string
    :rtype: :class:`Knot <Knot>`
    """
    if isinstance(name, Knot):
        return name
    try:
        return KNOTS[name]
    except (KeyError, TypeError):
        raise UnknownKnotError(name)
