"""
qrecur.util
~~~~~~~~~~~

This module contains the textual polynomial grammar and the JSON codecs
used by qrecur's command line and tests.

The grammar accepts integers, the variables of the target ring, ``+``,
``-``, ``*`` (optional between factors), ``/``, ``^`` with a signed integer
exponent and parentheses, e.g. ``(L-1)*(L+M^6)`` or ``q^-1*Q^2*(q^2-Q)``.

:copyright: (c) 2018 Andrew Grant Spencer
:license: BSD, see LICENSE for more details.
"""

from fractions import Fraction
import re

from .algebra import (
    BIPOLY,
    CHARFIELD,
    CHARPOLY,
    LAURENT_FIELD,
    RATFUN,
    RATFUN3,
    LaurentPoly,
    to_text,
)
from .exceptions import DomainError, ParseError, ZeroOperandError
from .ore import NormalizedOp, OreOp


class _Parser(object):
    """
    Recursive-descent evaluator of the grammar into a sympy fraction field.

    :param text: The text to parse.
    :type text: string
    :param fld: The target field; its symbols are the accepted variables.
    """

    def __init__(self, text, fld):
        self.text = text
        self.field = fld
        self.names = dict(
            (str(s), g) for s, g in zip(fld.symbols, fld.gens)
        )
        alternatives = sorted(self.names, key=len, reverse=True)
        self.token_re = re.compile(
            r"\s*(?:(?P<num>\d+)|(?P<name>{0})|(?P<op>[-+*/^()]))".format(
                "|".join(map(re.escape, alternatives))
            )
        )
        self.tokens = self._tokenize()
        self.index = 0

    def _tokenize(self):
        tokens = []
        pos = 0
        end = len(self.text.rstrip())
        while pos < end:
            match = self.token_re.match(self.text, pos)
            if match is None:
                while self.text[pos].isspace():
                    pos += 1
                raise ParseError(
                    "unexpected character {0!r}".format(self.text[pos]),
                    self.text,
                    pos,
                )
            kind = match.lastgroup
            tokens.append((kind, match.group(kind), match.start(kind)))
            pos = match.end()
        tokens.append(("end", None, len(self.text)))
        return tokens

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, value):
        kind, text, pos = self.advance()
        if text != value:
            found = "end of input" if kind == "end" else repr(text)
            raise ParseError(
                "expected {0!r}, found {1}".format(value, found), self.text, pos
            )

    def fail(self, message):
        raise ParseError(message, self.text, self.peek()[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expression()
        if self.peek()[0] != "end":
            self.fail("unexpected {0!r}".format(self.peek()[1]))
        return value

    def expression(self):
        value = self.product()
        while self.peek()[1] in ("+", "-"):
            _, op, _ = self.advance()
            rhs = self.product()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _starts_factor(self):
        kind, text, _ = self.peek()
        return kind in ("num", "name") or text == "("

    def product(self):
        value = self.unary()
        while True:
            _, text, pos = self.peek()
            if text in ("*", "/"):
                self.advance()
                rhs = self.unary()
            elif self._starts_factor():
                text, rhs = "*", self.power()
            else:
                return value
            if text == "*":
                value = value * rhs
            elif not rhs:
                raise ZeroOperandError(
                    "division by zero at position {0}".format(pos)
                )
            else:
                value = value / rhs

    def unary(self):
        if self.peek()[1] == "-":
            self.advance()
            return -self.unary()
        if self.peek()[1] == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] != "^":
            return base
        self.advance()
        pos = self.peek()[2]
        exponent = self.exponent()
        if exponent < 0 and not base:
            raise ZeroOperandError(
                "negative power of zero at position {0}".format(pos)
            )
        return base ** exponent

    def exponent(self):
        if self.peek()[1] == "(":
            self.advance()
            value = self.exponent()
            self.expect(")")
            return value
        sign = 1
        while self.peek()[1] in ("+", "-"):
            if self.advance()[1] == "-":
                sign = -sign
        kind, text, _ = self.peek()
        if kind != "num":
            self.fail("expected an integer exponent")
        self.advance()
        return sign * int(text)

    def atom(self):
        kind, text, _ = self.peek()
        if kind == "num":
            self.advance()
            return self.field(int(text))
        if kind == "name":
            self.advance()
            return self.names[text]
        if text == "(":
            self.advance()
            value = self.expression()
            self.expect(")")
            return value
        if kind == "end":
            self.fail("unexpected end of input")
        self.fail("unexpected {0!r}".format(text))


def parse_field(text, fld):
    """
    Parse `text` into an element of the sympy fraction field `fld`.

    A `ParseError` carrying the 0-based position is raised on malformed
    input.
    """
    return _Parser(text, fld).parse()


def _polynomial(value, text):
    if value.denom != 1:
        raise DomainError("not a polynomial: {0}".format(text))
    return value.numer


def parse_ratfun(text):
    """Parse a RatFun in the variables ``q`` and ``Q``."""
    return parse_field(text, RATFUN)


def parse_bipoly(text):
    """Parse a BiPoly; a `DomainError` is raised for proper fractions."""
    return BIPOLY(_polynomial(parse_ratfun(text), text))


def parse_ratfun3(text):
    """Parse a RatFun3 in the variables ``q``, ``Q`` and ``Kv``."""
    return parse_field(text, RATFUN3)


def parse_charpoly(text):
    """Parse a CharPoly in the variables ``L`` and ``M``."""
    return CHARPOLY(_polynomial(parse_field(text, CHARFIELD), text))


def parse_laurent(text):
    """
    Parse a Laurent polynomial in ``q``.

    The value may be written with divisions as long as it reduces to a
    Laurent polynomial; ``(q^2-1)/(q-1)`` is accepted, ``1/(1-q)`` is not.

    :rtype: LaurentPoly
    """
    value = parse_field(text, LAURENT_FIELD)
    den = value.denom
    if len(den) != 1:
        raise DomainError("not a Laurent polynomial: {0}".format(text))
    ((shift,), scale), = den.items()
    return LaurentPoly(
        dict(
            (e - shift, Fraction(int(c), int(scale)))
            for (e,), c in value.numer.items()
        )
    )


def _coefficient_to_json(c):
    c = Fraction(c)
    if c.denominator == 1:
        return c.numerator
    return "{0}/{1}".format(c.numerator, c.denominator)


def _coefficient_from_json(value):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DomainError("bad coefficient: {0!r}".format(value))
    return Fraction(value)


def laurent_to_json(p):
    """
    Encode a LaurentPoly as ``{"exp": coeff}`` in increasing exponent order.

    Coefficients are integers, or strings ``"a/b"`` when not integral.
    """
    terms = p.terms
    return dict(
        (str(e), _coefficient_to_json(terms[e])) for e in sorted(terms)
    )


def laurent_from_json(data):
    return LaurentPoly(
        dict((int(e), _coefficient_from_json(c)) for e, c in data.items())
    )


def operator_to_json(P):
    """
    Encode an operator as
    ``{"var": "E", "coeffs": [{"e": k, "num": ..., "den": ...}, ...]}``.

    Only nonzero coefficients are listed, in increasing E-degree.

    :param P: The operator.
    :type P: OreOp or NormalizedOp
    :rtype: dict
    """
    coeffs = []
    for k, c in enumerate(P.coeffs):
        if not c:
            continue
        c = RATFUN(c)
        coeffs.append(
            {"e": k, "num": to_text(c.numer), "den": to_text(c.denom)}
        )
    return {"var": "E", "coeffs": coeffs}


def operator_from_json(data):
    """
    Decode the operator schema of :func:`operator_to_json`.

    :rtype: OreOp
    """
    if data.get("var") != "E" or not isinstance(data.get("coeffs"), list):
        raise DomainError("not an operator document")
    entries = data["coeffs"]
    size = max([int(entry["e"]) for entry in entries] + [-1]) + 1
    coeffs = [RATFUN.zero] * size
    for entry in entries:
        num = parse_bipoly(entry["num"])
        den = parse_bipoly(entry.get("den", "1"))
        if not den:
            raise ZeroOperandError("zero denominator in operator document")
        coeffs[int(entry["e"])] += RATFUN.new(num, den)
    return OreOp(coeffs)


def normalized_from_json(data):
    """Decode an operator document whose coefficients are all integral."""
    P = operator_from_json(data)
    return NormalizedOp([_polynomial(c, "operator coefficient") for c in P.coeffs])


def telescope_to_json(result):
    """Encode a telescoping result: operator, certificate and right side."""
    data = {
        "order": result.order,
        "operator": operator_to_json(result.operator),
        "certificate": to_text(result.certificate),
        "inhom": to_text(result.inhom),
    }
    if result.recursion is not None:
        data["recursion"] = operator_to_json(result.recursion)
    return data


def verdict_to_json(verdict):
    """Encode an AJ verdict with all of its sub-results."""
    certificate = verdict.no_order1_certificate
    specialization = certificate.specialization
    exclusion = verdict.order_exclusion
    return {
        "knot": verdict.knot,
        "order": verdict.order,
        "operator": operator_to_json(verdict.operator),
        "char_poly": to_text(verdict.char_poly),
        "a_polynomial": to_text(verdict.a_polynomial),
        "essentially_equal": verdict.essentially_equal,
        "lemma31_ok": verdict.lemma31_ok,
        "annihilation": {
            "ok": verdict.annihilation.ok,
            "first_failure": verdict.annihilation.first_failure,
        },
        "no_order1_certificate": {
            "deg_Q": certificate.deg_Q,
            "deg_q": certificate.deg_q,
            "table_size": certificate.table_size,
            "nullspace_dimension": certificate.nullspace_dimension,
            "specialization": (
                None if specialization is None else str(specialization)
            ),
        },
        "order_exclusion": {
            "divisor": to_text(exclusion.divisor),
            "quotient": to_text(exclusion.quotient),
            "quotient_degree": exclusion.quotient_degree,
            "exact": exclusion.exact,
        },
        "reference_match": verdict.reference_match,
    }
