"""
qrecur.exceptions
~~~~~~~~~~~~~~~~~

This module contains the set of exceptions raised by qrecur. Each one also
derives from the builtin exception a caller would naturally catch.

:copyright: (c) 2018 Andrew Grant Spencer
:license: BSD, see LICENSE for more details.
"""


class QRecurError(Exception):
    """Base class of every error raised by qrecur."""


class ZeroOperandError(QRecurError, ZeroDivisionError):
    """A zero value was given where a nonzero one is required."""


class DomainError(QRecurError, ValueError):
    """An argument lies outside the domain of an operation."""


class ParseError(QRecurError, ValueError):
    """
    Malformed polynomial text.

    :param message: What went wrong.
    :type message: string
    :param text: The text being parsed.
    :type text: string
    :param position: 0-based column of the offending character.
    :type position: int
    """

    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super(ParseError, self).__init__(
            "{0} at position {1}: {2!r}".format(message, position, text)
        )


class OrderBoundExceeded(QRecurError, RuntimeError):
    """No telescoping relation was found up to the requested order."""


class UnknownKnotError(QRecurError, KeyError):
    """The knot name is not in the registry."""


class VerificationError(QRecurError, AssertionError):
    """An exact self-check of a computed certificate failed."""
