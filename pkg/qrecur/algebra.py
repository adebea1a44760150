"""
qrecur.algebra
~~~~~~~~~~~~~~

This module implements the exact arithmetic qrecur is built on: Laurent
polynomials in q over the rationals, bivariate polynomials in (q, Q) over
the integers (``BiPoly``), their fraction field Q(q, Q) (``RatFun``), the
trivariate field Q(q, Q, Kv) used by the telescoping code, and the ring
Z[L, M] of characteristic polynomials (``CharPoly``).

Everything except :class:`LaurentPoly` is a sympy sparse polynomial or
fraction-field element. All rings share one fixed monomial order, graded
lexicographic on the generators in the order listed, which decides the
sign of canonical representatives and the display order.

:copyright: (c) 2018 Andrew Grant Spencer
:license: BSD, see LICENSE for more details.
"""

from collections import defaultdict
from fractions import Fraction
import operator

from sympy.polys.domains import QQ, ZZ
from sympy.polys.fields import field
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring

from .exceptions import DomainError, ZeroOperandError

#: Q(q, Q), the coefficient field of Ore operators.
RATFUN, qf, Qf = field("q,Q", ZZ, grlex)
#: Z[q, Q], the coefficient ring of normalized operators.
BIPOLY = RATFUN.ring
q, Q = BIPOLY.gens

#: Q(q, Q, Kv) with Kv standing for q^k.
RATFUN3, q3, Q3, Kv3 = field("q,Q,Kv", ZZ, grlex)
TRIPOLY = RATFUN3.ring

#: Z[L, M], characteristic polynomials and A-polynomials.
CHARFIELD, _, _ = field("L,M", ZZ, grlex)
CHARPOLY = CHARFIELD.ring
L, M = CHARPOLY.gens

#: Z[Q], images of the evaluation q -> 1.
UNIPOLY, Qe = ring("Q", ZZ, grlex)

#: Q[q], the carrier of LaurentPoly.
_LAURENT, _qu = ring("q", QQ, grlex)
LAURENT_FIELD, _ = field("q", ZZ, grlex)

# generator positions shared by BIPOLY, RATFUN3 and TRIPOLY
Q_INDEX = 1
KV_INDEX = 2


def _to_qq(c):
    return QQ(int(c.numerator), int(c.denominator))


def _to_fraction(c):
    return Fraction(int(c.numerator), int(c.denominator))


def format_terms(terms, names, ascending=False):
    """
    Render a sparse polynomial in the textual grammar.

    Terms are ordered by total degree, then by the fixed monomial order;
    decreasing unless `ascending` is set. Negative exponents render as
    ``q^-1`` and non-integral coefficients as ``(1/2)*q``.

    :param terms: Pairs of (exponent tuple, coefficient).
    :type terms: iterable
    :param names: Variable names, one per exponent position.
    :type names: sequence
    :param ascending: Render lowest terms first?
    :type ascending: bool
    :return: The rendered polynomial, ``"0"`` if there are no terms.
    :rtype: string
    """
    items = [(m, _to_fraction(c)) for m, c in terms if c]
    items.sort(key=lambda t: (sum(t[0]), t[0]), reverse=not ascending)

    if not items:
        return "0"

    out = []
    for monom, coeff in items:
        factors = []
        for name, e in zip(names, monom):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append("{0}^{1}".format(name, e))
        sign = "-" if coeff < 0 else "+"
        size = abs(coeff)
        if size.denominator != 1:
            body = "({0})".format(size)
            body = "*".join([body] + factors)
        elif not factors:
            body = str(size)
        elif size == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(size)] + factors)
        out.append((sign, body))

    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += " {0} {1}".format(sign, body)
    return text


def to_text(p):
    """
    Render a sympy polynomial or fraction of this module in the grammar.

    :param p: A BiPoly, CharPoly, RatFun or RatFun3 value.
    :return: The rendered value; fractions as ``(num)/(den)``.
    :rtype: string
    """
    if hasattr(p, "numer"):
        num = to_text(p.numer)
        if p.denom == 1:
            return num
        return "({0})/({1})".format(num, to_text(p.denom))
    names = [str(s) for s in p.ring.symbols]
    return format_terms(p.items(), names)


class LaurentPoly(object):
    """
    Initialize a :class:`LaurentPoly <LaurentPoly>` object, an exact Laurent
    polynomial in q with rational coefficients.

    Values are immutable and canonical: two values are equal iff their term
    maps are identical.

    :param terms: (optional) A map from integer exponent to coefficient
        (int, Fraction or sympy rational).
    :type terms: dict
    """

    __slots__ = ("_shift", "_poly")

    def __init__(self, terms=None):
        terms = terms or {}
        low = min(terms) if terms else 0
        poly = _LAURENT.from_dict(
            {(e - low,): _to_qq(c) for e, c in terms.items() if c}
        )
        self._set(low, poly)

    def _set(self, shift, poly):
        if not poly:
            shift = 0
        else:
            low = min(m[0] for m in poly.itermonoms())
            if low:
                poly = _LAURENT.from_dict({(m[0] - low,): c for m, c in poly.items()})
                shift += low
        self._shift = shift
        self._poly = poly

    @classmethod
    def _from_parts(cls, shift, poly):
        value = cls.__new__(cls)
        value._set(shift, poly)
        return value

    @classmethod
    def monomial(cls, exponent, coeff=1):
        """Return ``coeff * q^exponent``."""
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, (int, Fraction)):
            return cls({0: value})
        return NotImplemented

    @property
    def terms(self):
        """The exponent -> Fraction map."""
        return {m[0] + self._shift: _to_fraction(c) for m, c in self._poly.items()}

    @property
    def valuation(self):
        if not self._poly:
            raise ZeroOperandError("the zero Laurent polynomial has no valuation")
        return self._shift

    @property
    def degree(self):
        if not self._poly:
            raise ZeroOperandError("the zero Laurent polynomial has no degree")
        return self._shift + self._poly.degree()

    def __bool__(self):
        return bool(self._poly)

    __nonzero__ = __bool__

    def __eq__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._shift == other._shift and self._poly == other._poly

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._shift, self._poly))

    def _align(self, other):
        low = min(self._shift, other._shift)
        return (
            low,
            self._poly * _qu ** (self._shift - low),
            other._poly * _qu ** (other._shift - low),
        )

    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        low, a, b = self._align(other)
        return LaurentPoly._from_parts(low, a + b)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._from_parts(self._shift, -self._poly)

    def __sub__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        low, a, b = self._align(other)
        return LaurentPoly._from_parts(low, a - b)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly._from_parts(
            self._shift + other._shift, self._poly * other._poly
        )

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise DomainError("negative powers of a Laurent polynomial are not supported")
        result = LaurentPoly({0: 1})
        for _ in range(n):
            result = result * self
        return result

    def evaluate(self, q0):
        """
        Evaluate at a rational point, exactly.

        :param q0: The value substituted for q.
        :type q0: int or Fraction
        :return: The exact value.
        :rtype: Fraction
        """
        q0 = Fraction(q0)
        if q0 == 0:
            if self._poly and self._shift < 0:
                raise DomainError("cannot evaluate negative powers of q at 0")
            return self.terms.get(0, Fraction(0))
        return sum(
            (c * q0 ** e for e, c in self.terms.items()), Fraction(0)
        )

    def substitute_power(self, m):
        """Return the value of ``p(q^m)``."""
        if m == 0:
            return LaurentPoly({0: sum(self.terms.values(), Fraction(0))})
        return LaurentPoly({e * m: c for e, c in self.terms.items()})

    def is_palindromic(self):
        """Is the value invariant under q <-> q^-1?"""
        terms = self.terms
        return all(terms.get(-e) == c for e, c in terms.items())

    def has_integer_coefficients(self):
        return all(c.denominator == 1 for c in self.terms.values())

    def to_text(self):
        return format_terms(
            (((e,), c) for e, c in self.terms.items()), ["q"], ascending=True
        )

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "<LaurentPoly: {0}>".format(self.to_text())


def eval_laurent(p, q0):
    """
    Evaluate a :class:`LaurentPoly <LaurentPoly>` at a rational point.

    A `DomainError` is raised if `q0` is zero and negative exponents are
    present.
    """
    return p.evaluate(q0)


def content_and_primitive(p):
    """
    Split a BiPoly into its integer content and primitive part.

    The primitive part has content 1 and a positive leading coefficient
    under the fixed monomial order; the content carries the sign, so
    ``-5*Q`` splits as ``(-5, Q)``.

    :param p: A nonzero BiPoly.
    :return: (content, primitive part)
    :rtype: tuple
    """
    if not p:
        raise ZeroOperandError("the zero polynomial has no content")
    cont = p.content()
    if p.LC < 0:
        cont = -cont
    return int(cont), p.quo_ground(cont)


def eval_q_at_1(p):
    """
    Apply the evaluation map q -> 1 to a BiPoly.

    :return: A polynomial of ``UNIPOLY`` = Z[Q].
    """
    terms = defaultdict(int)
    for (_, j), c in p.items():
        terms[(j,)] += c
    return UNIPOLY.from_dict({m: c for m, c in terms.items() if c})


def specialize(p, n):
    """
    Substitute Q -> q^n in a BiPoly, giving a :class:`LaurentPoly`.
    """
    terms = defaultdict(int)
    for (i, j), c in p.items():
        terms[i + n * j] += c
    return LaurentPoly(terms)


def specialize3(p, n, k):
    """Substitute Q -> q^n, Kv -> q^k in a TRIPOLY element."""
    terms = defaultdict(int)
    for (i, j, l), c in p.items():
        terms[i + n * j + k * l] += c
    return LaurentPoly(terms)


def ratfun(num, den=1):
    """
    Build the canonical reduced RatFun ``num / den``.

    :raises ZeroOperandError: if `den` is zero.
    """
    den = BIPOLY(den)
    if not den:
        raise ZeroOperandError("zero denominator")
    return RATFUN.new(BIPOLY(num), den)


_OPERATIONS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def ratfun_arith(a, b, op):
    """
    Field arithmetic on RatFun values.

    :param op: One of ``"add"``, ``"sub"``, ``"mul"``, ``"div"``.
    :type op: string
    :return: The canonical reduced result.
    """
    if op not in _OPERATIONS:
        raise ValueError("unknown operation: {0}".format(op))
    a, b = RATFUN(a), RATFUN(b)
    if op == "div" and not b:
        raise ZeroOperandError("division by the zero rational function")
    return _OPERATIONS[op](a, b)


def scale_variable(p, index, e):
    """
    Replace generator `index` of `p` by ``q^e`` times itself; q must be
    generator 0 of the ring.

    The result is returned as a pair ``(s, poly)`` with
    ``p(.., q^e X, ..) = q^s * poly`` and `poly` free of monomial q-content,
    so negative `e` never produces negative exponents.
    """
    if not p:
        return 0, p
    moved = {}
    for monom, c in p.items():
        m = list(monom)
        m[0] += e * monom[index]
        moved[tuple(m)] = c
    s = min(m[0] for m in moved)
    poly = p.ring.from_dict({(m[0] - s,) + m[1:]: c for m, c in moved.items()})
    return s, poly


def scale_fraction(f, index, e):
    """The fraction-field version of :func:`scale_variable`."""
    sn, num = scale_variable(f.numer, index, e)
    sd, den = scale_variable(f.denom, index, e)
    fld = f.field
    return fld.new(num, den) * fld.gens[0] ** (sn - sd)


def q_power(f):
    """
    Return `e` if the RatFun `f` equals ``q^e`` exactly, else None.
    """
    num, den = f.numer, f.denom
    if len(num) != 1 or len(den) != 1:
        return None
    (mn, cn), = num.items()
    (md, cd), = den.items()
    if cn != cd or any(mn[1:]) or any(md[1:]):
        return None
    return mn[0] - md[0]
