"""
qrecur.ore
~~~~~~~~~~

This module implements the q-Weyl algebra in its Ore localization
K[E; sigma] over K = Q(q, Q), where sigma(f)(q, Q) = f(q, qQ), so that
E Q = q Q E.

Operators are stored in forward-shift form: the coefficient of E^k
multiplies f(n + k), with Q standing for q^n.

:copyright: (c) 2018 Andrew Grant Spencer
:license: BSD, see LICENSE for more details.
"""

from functools import reduce
import logging

from .algebra import (
    BIPOLY,
    Q_INDEX,
    RATFUN,
    LaurentPoly,
    format_terms,
    scale_fraction,
    specialize,
    to_text,
)
from .exceptions import DomainError, ZeroOperandError

logger = logging.getLogger(__name__)


def sigma(f, power=1):
    """
    Apply the automorphism sigma^power: Q -> q^power Q.

    Negative powers substitute Q -> Q / q^|power| and clear the resulting
    q-denominators into a canonical RatFun.

    :param f: The rational function.
    :type f: RatFun
    :param power: (optional) How many times to apply sigma.
    :type power: int
    :return: The substituted, reduced rational function.
    :rtype: RatFun
    """
    f = RATFUN(f)
    if not power or not f:
        return f
    return scale_fraction(f, Q_INDEX, power)


class OreOp(object):
    """
    Initialize an :class:`OreOp <OreOp>` object, the skew polynomial
    ``sum(a_k E^k)`` with coefficients in Q(q, Q).

    Trailing zero coefficients are dropped, so the leading coefficient of a
    nonzero operator is nonzero.

    :param coeffs: (optional) a_0, ..., a_d as RatFun, BiPoly or int.
    :type coeffs: sequence
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [RATFUN(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, coeff, power):
        """Return ``coeff * E^power``."""
        return cls([0] * power + [coeff])

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, NormalizedOp):
            return value.to_ore()
        return cls([value])

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        """The E-degree; -1 for the zero operator."""
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self):
        if not self._coeffs:
            raise ZeroOperandError("the zero operator has no leading coefficient")
        return self._coeffs[-1]

    def coeff(self, k):
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return RATFUN.zero

    def monic(self):
        """Left-multiply by the inverse of the leading coefficient."""
        lc = self.leading_coefficient
        return OreOp([c / lc for c in self._coeffs])

    def __bool__(self):
        return bool(self._coeffs)

    __nonzero__ = __bool__

    def __eq__(self, other):
        if not isinstance(other, OreOp):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other):
        other = OreOp.coerce(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return OreOp([self.coeff(k) + other.coeff(k) for k in range(size)])

    __radd__ = __add__

    def __neg__(self):
        return OreOp([-c for c in self._coeffs])

    def __sub__(self, other):
        return self + (-OreOp.coerce(other))

    def __rsub__(self, other):
        return OreOp.coerce(other) - self

    def __mul__(self, other):
        return ore_mul(self, OreOp.coerce(other))

    def __rmul__(self, other):
        return ore_mul(OreOp.coerce(other), self)

    def to_text(self):
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            power = "" if k == 0 else ("E" if k == 1 else "E^{0}".format(k))
            body = "({0})".format(to_text(c))
            parts.append("*".join(p for p in (body, power) if p))
        return " + ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "<OreOp of order {0}>".format(self.degree)


#: The shift operator.
E = OreOp([0, 1])


def ore_mul(P, R):
    """
    Multiply two operators with the skew law
    ``a E^k * b E^l = a sigma^k(b) E^(k+l)``.

    :return: P*R; its degree is deg P + deg R when both are nonzero.
    :rtype: OreOp
    """
    if not P or not R:
        return OreOp()
    out = [RATFUN.zero] * (P.degree + R.degree + 1)
    for i, a in enumerate(P.coeffs):
        if not a:
            continue
        for j, b in enumerate(R.coeffs):
            if b:
                out[i + j] += a * sigma(b, i)
    return OreOp(out)


def right_divide(P, D):
    """
    Right Euclidean division: ``P = quotient * D + remainder`` with
    ``deg remainder < deg D``.

    :param P: The dividend.
    :type P: OreOp
    :param D: The nonzero divisor.
    :type D: OreOp
    :return: (quotient, remainder)
    :rtype: tuple
    """
    P, D = OreOp.coerce(P), OreOp.coerce(D)
    if not D:
        raise ZeroOperandError("right division by the zero operator")

    lc, d = D.leading_coefficient, D.degree
    quotient = [RATFUN.zero] * max(P.degree - d + 1, 0)
    remainder = P

    while remainder and remainder.degree >= d:
        m = remainder.degree - d
        c = remainder.leading_coefficient / sigma(lc, m)
        quotient[m] += c
        remainder = remainder - ore_mul(OreOp.monomial(c, m), D)

    return OreOp(quotient), remainder


def right_divides(D, P):
    """Does `D` right-divide `P` exactly?"""
    return not right_divide(P, D)[1]


def gcrd(P, R):
    """
    Greatest common right divisor by the right Euclidean algorithm.

    Remainders are made monic as the loop goes to keep coefficients small.

    :return: The monic gcrd; right-divides both inputs.
    :rtype: OreOp
    """
    a, b = OreOp.coerce(P), OreOp.coerce(R)
    if not a and not b:
        raise ZeroOperandError("gcrd of two zero operators")

    while b:
        a, b = b, right_divide(a, b)[1]
        if b:
            b = b.monic()
        logger.debug("gcrd step: orders %d, %d", a.degree, b.degree)

    return a.monic()


class NormalizedOp(object):
    """
    Initialize a :class:`NormalizedOp <NormalizedOp>` object: an operator
    ``sum(b_k E^k)`` with jointly coprime coefficients in Z[q, Q] and a
    leading coefficient that has a positive leading integer coefficient.

    Instances are produced by :func:`normalize`; the constructor does not
    re-check the invariants.

    :param coeffs: b_0, ..., b_d as BiPoly.
    :type coeffs: sequence
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        self._coeffs = tuple(BIPOLY(c) for c in coeffs)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1

    def to_ore(self):
        return OreOp(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, NormalizedOp):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._coeffs)

    def to_text(self):
        names = ["E"] + [str(s) for s in BIPOLY.symbols]
        terms = []
        for k, b in enumerate(self._coeffs):
            terms.extend(((k,) + m, c) for m, c in b.items())
        return format_terms(terms, names)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "<NormalizedOp of order {0}>".format(self.degree)


def normalize(P):
    """
    Bring a nonzero operator to its coprime integral form: multiply by the
    least common denominator, divide out the gcd over Z[q, Q] of all
    coefficients (integer content and common monomial included) and make
    the leading coefficient's leading integer positive.

    The result is unique for the left K-multiples of `P`. A right factor
    E^j is kept, since removing it changes the annihilated sequences.

    :rtype: NormalizedOp
    """
    P = OreOp.coerce(P)
    if not P:
        raise ZeroOperandError("cannot normalize the zero operator")

    common = reduce(lambda a, b: a.lcm(b), [c.denom for c in P.coeffs if c])
    polys = [
        c.numer * common.exquo(c.denom) if c else BIPOLY.zero for c in P.coeffs
    ]
    g = reduce(lambda a, b: a.gcd(b), [p for p in polys if p])
    polys = [p.exquo(g) if p else p for p in polys]

    if polys[-1].LC < 0:
        polys = [-p for p in polys]

    return NormalizedOp(polys)


def make_hom_rec(P, rhs):
    """
    Homogenize the relation ``P f = rhs``.

    :return: ``(E - 1) * (rhs^-1 * P)``, of order deg P + 1, annihilating
        every f that satisfies the inhomogeneous relation.
    :rtype: OreOp
    """
    P = OreOp.coerce(P)
    rhs = RATFUN(rhs)
    if not rhs:
        raise DomainError("the relation is already homogeneous")
    scaled = OreOp([c / rhs for c in P.coeffs])
    return ore_mul(OreOp([-1, 1]), scaled)


def forward_shifts(P, steps=None):
    """
    Rewrite a backward-shift relation ``sum b_k f(n - d + k) = 0`` into the
    forward form ``sum sigma^d(b_k) f(n + k) = 0``.

    :param P: The operator in backward presentation.
    :type P: NormalizedOp
    :param steps: (optional) The shift d; defaults to the order of `P`.
    :type steps: int
    :rtype: NormalizedOp
    """
    d = P.degree if steps is None else steps
    return normalize(OreOp([sigma(c, d) for c in P.coeffs]))


def backward_shifts(P, steps=None):
    """The inverse rewriting of :func:`forward_shifts`."""
    d = P.degree if steps is None else steps
    return normalize(OreOp([sigma(c, -d) for c in P.coeffs]))


def act(P, values, n):
    """
    Apply a normalized operator to a sequence at index `n`, substituting
    Q -> q^n in its coefficients.

    :param P: The operator.
    :type P: NormalizedOp
    :param values: A callable mapping an index to a LaurentPoly.
    :type values: callable
    :param n: The index.
    :type n: int
    :rtype: LaurentPoly
    """
    total = LaurentPoly()
    for k, b in enumerate(P.coeffs):
        if b:
            total = total + specialize(b, n) * values(n + k)
    return total
