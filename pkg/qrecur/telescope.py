"""
qrecur.telescope
~~~~~~~~~~~~~~~~

This module implements q-Gosper summation and q-Zeilberger creative
telescoping for proper q-hypergeometric terms in one summation variable.

Terms live in Q(q, Q, Kv) with Kv standing for q^k; the k-shift acts as
Kv -> q Kv and the n-shift as Q -> q Q. Telescopers are found by the
parametrized form of Gosper's algorithm: one linear system over Q(q, Q)
in the operator coefficients and the coefficients of the polynomial
unknown of the key equation.

:copyright: (c) 2018 Andrew Grant Spencer
:license: BSD, see LICENSE for more details.
"""

from collections import defaultdict
from functools import reduce
import logging

from sympy.polys.matrices import DomainMatrix

from .algebra import (
    BIPOLY,
    KV_INDEX,
    Q_INDEX,
    RATFUN,
    RATFUN3,
    TRIPOLY,
    q_power,
    qf,
    scale_fraction,
    scale_variable,
    specialize,
)
from .exceptions import (
    DomainError,
    OrderBoundExceeded,
    VerificationError,
)
from .models import GosperCertificate, TelescopeResult
from .ore import NormalizedOp, OreOp, act, make_hom_rec, normalize
from .qseries import QHyperTerm, term_ratios

logger = logging.getLogger(__name__)

#: Highest telescoping order tried by :func:`find_recursion`.
DEFAULT_MAX_ORDER = 5

#: Widest extension of a degree bound past its generic value.
DEGREE_CAP = 32

#: The summed relation is re-checked on n = 1..SELF_CHECK_RANGE.
SELF_CHECK_RANGE = 8

_RATFUN_DOMAIN = RATFUN.to_domain()

_KV = TRIPOLY.gens[KV_INDEX]


def _lcm(polys):
    return reduce(lambda a, b: a.lcm(b), polys)


def _kv_degree(p):
    return max(m[KV_INDEX] for m in p.itermonoms())


def _strip_kv(p):
    """Split ``p = Kv^e * rest`` with `rest` not divisible by Kv."""
    e = min(m[KV_INDEX] for m in p.itermonoms())
    rest = TRIPOLY.from_dict(dict(((i, j, l - e), c) for (i, j, l), c in p.items()))
    return e, rest


def _x_coeffs(p):
    """The coefficients of a TRIPOLY in Kv, as RatFun values."""
    grouped = defaultdict(dict)
    for (i, j, l), c in p.items():
        grouped[l][(i, j)] = c
    return dict(
        (l, RATFUN(BIPOLY.from_dict(terms))) for l, terms in grouped.items()
    )


def _lift_poly(p):
    return TRIPOLY.from_dict(dict(((i, j, 0), c) for (i, j), c in p.items()))


def _lift(f):
    """Embed a RatFun into Q(q, Q, Kv)."""
    f = RATFUN(f)
    return RATFUN3.new(_lift_poly(f.numer), _lift_poly(f.denom))


def _drop_poly(p):
    if any(m[KV_INDEX] for m in p.itermonoms()):
        raise DomainError("the value depends on Kv")
    return BIPOLY.from_dict(dict(((i, j), c) for (i, j, _), c in p.items()))


def _drop(f):
    """The inverse of :func:`_lift` on Kv-free values."""
    return RATFUN.new(_drop_poly(f.numer), _drop_poly(f.denom))


def _at_kv_one(p):
    terms = defaultdict(int)
    for (i, j, _), c in p.items():
        terms[(i, j)] += c
    return BIPOLY.from_dict(dict((m, c) for m, c in terms.items() if c))


def _irreducible_kv_factors(p):
    """The irreducible factors of `p` that involve Kv, with their Kv-degree."""
    _, factors = p.factor_list()
    return [(f, _kv_degree(f)) for f, _ in factors if _kv_degree(f) >= 1]


def shift_candidates(a, b):
    """
    Return every j >= 0 for which ``a(x)`` and ``b(q^j x)`` have a common
    factor of positive degree in x = Kv.

    Both sides are split into irreducible factors. For factors f of `a`
    and g of `b` of the same degree d in x, ``f(x) ~ g(q^j x)`` forces
    ``lc(f) tc(g) / (tc(f) lc(g)) = q^(j d)``, which gives the only
    possible j; each candidate is then confirmed exactly.

    :param a: A polynomial not divisible by Kv.
    :type a: TRIPOLY element
    :param b: A polynomial not divisible by Kv.
    :type b: TRIPOLY element
    :rtype: list
    """
    if _kv_degree(a) < 1 or _kv_degree(b) < 1:
        return []

    shifts = set()
    b_factors = _irreducible_kv_factors(b)
    for f, d in _irreducible_kv_factors(a):
        fc = _x_coeffs(f)
        for g, dg in b_factors:
            if dg != d:
                continue
            gc = _x_coeffs(g)
            e = q_power(fc[d] * gc[0] / (fc[0] * gc[d]))
            if e is None or e < 0 or e % d:
                continue
            j = e // d
            if j in shifts:
                continue
            _, shifted = scale_variable(g, KV_INDEX, j)
            if _kv_degree(f.gcd(shifted)) == d:
                shifts.add(j)

    shifts = sorted(shifts)
    logger.debug("q-dispersion candidates: %s", shifts)
    return shifts


def gosper_form(r):
    """
    Write ``r(x) = a(x)/b(x) * c(qx)/c(x)`` with ``a(x)`` and ``b(q^j x)``
    coprime for every j >= 0.

    :param r: A nonzero rational function of Q(q, Q, Kv).
    :return: (a, b, c) as TRIPOLY elements.
    :rtype: tuple
    """
    alpha, A = _strip_kv(r.numer)
    beta, B = _strip_kv(r.denom)

    a, b, c = RATFUN3(A), RATFUN3(B), TRIPOLY.one
    for j in shift_candidates(A, B):
        _, shifted = scale_variable(b.numer, KV_INDEX, j)
        g = a.numer.gcd(shifted)
        if _kv_degree(g) < 1:
            continue
        a = a / RATFUN3(g)
        b = b / scale_fraction(RATFUN3(g), KV_INDEX, -j)
        for i in range(1, j + 1):
            c = c * scale_variable(g, KV_INDEX, -i)[1]

    # the remaining denominators are free of Kv
    a_poly = a.numer * b.denom * _KV ** alpha
    b_poly = b.numer * a.denom * _KV ** beta
    return a_poly, b_poly, c


def _y_range(ac, bc, sb, rhs):
    """
    Bound the exponents of ``y`` in ``a(x) y(qx) - q^sb B(x) y(x) = rhs``.
    """
    hi_rhs = max(max(coeffs) for coeffs in rhs if coeffs)
    lo_rhs = min(min(coeffs) for coeffs in rhs if coeffs)

    da, db = max(ac), max(bc)
    if da != db:
        hi = hi_rhs - max(da, db)
    else:
        hi = hi_rhs - da
        # the leading terms cancel for y_m x^m when q^m la = q^sb lb
        m0 = q_power(bc[db] / ac[da])
        if m0 is not None:
            hi = max(hi, min(m0 + sb, hi + DEGREE_CAP))

    ta, tb = min(ac), min(bc)
    if ta != tb:
        lo = lo_rhs - min(ta, tb)
    else:
        lo = lo_rhs - ta
        m1 = q_power(bc[tb] / ac[ta])
        if m1 is not None:
            lo = min(lo, max(m1 + sb, lo - DEGREE_CAP))

    return lo, hi


def parametrized_gosper(rho, parts):
    """
    Find ``lambda_0..lambda_r`` in Q(q, Q), not all zero, and a
    certificate R in Q(q, Q, Kv) with

    ``rho * R(q Kv) - R(Kv) = sum(lambda_i * parts_i)``.

    With ``rho = t(k+1)/t(k)`` this says ``G(k) = R t(k)`` is an
    antidifference of ``sum(lambda_i parts_i) t(k)``.

    :param rho: The k-shift ratio of the hypergeometric part.
    :param parts: Rational functions ``parts_i`` of Q(q, Q, Kv).
    :type parts: sequence
    :return: (lambdas, certificate), or None when there is no solution.
    :rtype: tuple
    """
    rho = RATFUN3(rho)
    if not rho:
        raise DomainError("the shift ratio must be nonzero")
    parts = [RATFUN3(p) for p in parts]

    d = _lcm([p.denom for p in parts])
    polys = [p.numer * d.exquo(p.denom) for p in parts]
    d3 = RATFUN3(d)
    r = rho * d3 / scale_fraction(d3, KV_INDEX, 1)

    a, b, c = gosper_form(r)
    sb, bs = scale_variable(b, KV_INDEX, -1)
    ac, bc = _x_coeffs(a), _x_coeffs(bs)
    rhs = [_x_coeffs(p * c) for p in polys]
    lo, hi = _y_range(ac, bc, sb, rhs)

    columns = [dict((e, -v) for e, v in coeffs.items()) for coeffs in rhs]
    unit = qf ** sb
    for m in range(lo, hi + 1):
        column = {}
        for e in set(ac) | set(bc):
            entry = qf ** m * ac.get(e, RATFUN.zero) - unit * bc.get(e, RATFUN.zero)
            if entry:
                column[e + m] = entry
        columns.append(column)

    rows = sorted(set().union(*columns))
    logger.debug(
        "key equation: %d parameters, y in x^%d..x^%d, %d equations",
        len(parts), lo, hi, len(rows),
    )
    matrix = DomainMatrix(
        [[column.get(e, RATFUN.zero) for column in columns] for e in rows],
        (len(rows), len(columns)),
        _RATFUN_DOMAIN,
    )
    basis = matrix.nullspace().to_dense().rep.to_list()

    size = len(parts)
    for vector in basis:
        if any(vector[:size]):
            break
    else:
        return None

    lambdas = [RATFUN(v) for v in vector[:size]]
    y = RATFUN3.zero
    for m, v in zip(range(lo, hi + 1), vector[size:]):
        if v:
            y += _lift(v) * RATFUN3(_KV) ** m
    certificate = _lift(unit) * RATFUN3(bs) * y / (RATFUN3(c) * d3)

    target = sum((_lift(l) * p for l, p in zip(lambdas, parts)), RATFUN3.zero)
    if rho * scale_fraction(certificate, KV_INDEX, 1) - certificate != target:
        raise VerificationError("telescoping certificate does not verify")

    return lambdas, certificate


def qgosper(ratio):
    """
    Decide whether the term t with ``t(k+1)/t(k) = ratio`` has a
    q-hypergeometric antidifference.

    :param ratio: A nonzero rational function of Kv (coefficients may
        involve q and Q).
    :return: The certificate R with ``G(k) = R t(k)`` and
        ``G(k+1) - G(k) = t(k)``, when it exists.
    :rtype: :class:`qrecur.models.GosperCertificate`
    """
    found = parametrized_gosper(ratio, [RATFUN3.one])
    if found is None:
        return GosperCertificate(False, None)
    lambdas, certificate = found
    return GosperCertificate(True, certificate / _lift(lambdas[0]))


def shifted_ratios(term, order):
    """Return ``F(n+i, k)/F(n, k)`` for i = 0..order."""
    parts = [RATFUN3.one]
    for i in range(order):
        parts.append(parts[-1] * scale_fraction(term.ratio_n, Q_INDEX, i))
    return parts


def verify_certificate(term, operator, certificate):
    """
    Check the telescoping identity ``P F = (S_k - 1) (certificate F)``
    exactly, dividing through by F.

    :rtype: bool
    """
    operator = OreOp.coerce(operator)
    parts = shifted_ratios(term, operator.degree)
    lhs = sum(
        (_lift(a) * p for a, p in zip(operator.coeffs, parts)), RATFUN3.zero
    )
    certificate = RATFUN3(certificate)
    rhs = term.ratio_k * scale_fraction(certificate, KV_INDEX, 1) - certificate
    return lhs == rhs


def boundary_inhom(term, certificate):
    """
    Sum the telescoped identity over all k: with compact support only the
    lower boundary survives, giving ``-certificate(q, Q, 1) F(n, 0)``.

    A `DomainError` is raised if the certificate has a pole at Kv = 1.

    :rtype: RatFun
    """
    certificate = RATFUN3(certificate)
    if not certificate:
        return RATFUN.zero
    num = _at_kv_one(certificate.numer)
    den = _at_kv_one(certificate.denom)
    if not den:
        raise DomainError("the certificate has a pole at Kv = 1")
    if not num:
        return RATFUN.zero
    return -RATFUN.new(num, den) * _drop(term.boundary_value())


def verify_summed_relation(term, result, n_max=SELF_CHECK_RANGE):
    """
    Check ``operator J(n) = inhom(q, q^n)`` for n = 1..n_max, skipping
    the n at which a coefficient has a pole. A `VerificationError` is
    raised on the first mismatch.
    """
    coeffs = list(result.operator.coeffs)
    inhom = RATFUN(result.inhom)
    common = _lcm([c.denom for c in coeffs if c] + [inhom.denom])
    cleared = NormalizedOp(
        [c.numer * common.exquo(c.denom) if c else BIPOLY.zero for c in coeffs]
    )
    rhs = inhom.numer * common.exquo(inhom.denom)

    for n in range(1, n_max + 1):
        if not specialize(common, n):
            continue
        if act(cleared, term.sum, n) != specialize(rhs, n):
            raise VerificationError(
                "summed relation fails at n={0}".format(n)
            )
    return True


def qzeilberger(term, order):
    """
    Look for a telescoper of the given order: ``a_0..a_order`` in Q(q, Q)
    and a certificate with ``sum(a_i F(n+i, k)) = G(n, k+1) - G(n, k)``.

    Both the certificate identity and the summed relation are verified
    before a result is returned.

    :param term: The summand with its shift ratios.
    :type term: :class:`qrecur.qseries.QHyperTerm`
    :param order: The order in E, at least 1.
    :type order: int
    :return: The relation, or None if there is none at this order.
    :rtype: :class:`qrecur.models.TelescopeResult`
    """
    if order < 1:
        raise DomainError("the telescoping order must be at least 1")

    found = parametrized_gosper(term.ratio_k, shifted_ratios(term, order))
    if found is None:
        logger.debug("no telescoper of order %d for %r", order, term)
        return None

    lambdas, certificate = found
    operator = OreOp(lambdas)
    if not verify_certificate(term, operator, certificate):
        raise VerificationError("telescoping certificate does not verify")

    result = TelescopeResult(
        operator, certificate, boundary_inhom(term, certificate), order, None
    )
    verify_summed_relation(term, result)
    logger.info("telescoper of order %d found for %r", order, term)
    return result


def find_recursion(term, max_order=DEFAULT_MAX_ORDER, homogenize=True):
    """
    Try :func:`qzeilberger` at orders 1..max_order and return the first
    relation found, with its normalized recursion: homogenized through
    :func:`qrecur.ore.make_hom_rec` when the right side is nonzero.

    An `OrderBoundExceeded` error is raised if no order up to `max_order`
    succeeds.

    :param term: A summand with its ratios, or a knot name.
    :param max_order: (optional) The highest order tried.
    :type max_order: int
    :param homogenize: (optional) Derive the homogeneous recursion?
    :type homogenize: bool
    :rtype: :class:`qrecur.models.TelescopeResult`
    """
    if max_order < 1:
        raise DomainError("max_order must be at least 1")
    if not isinstance(term, QHyperTerm):
        term = term_ratios(term)

    for order in range(1, max_order + 1):
        result = qzeilberger(term, order)
        if result is None:
            continue
        if not result.inhom:
            recursion = normalize(result.operator)
        elif homogenize:
            recursion = normalize(make_hom_rec(result.operator, result.inhom))
        else:
            recursion = None
        return result._replace(recursion=recursion)

    raise OrderBoundExceeded(
        "no telescoper up to order {0} for {1!r}".format(max_order, term)
    )
