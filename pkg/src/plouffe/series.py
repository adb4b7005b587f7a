"""High-precision evaluation of the Lambert-type series S_n(r) and T_n(r),
assembly of pi^(2n+1) and zeta(2n+1) from exact coefficient triples, and
independent zeta oracles for cross-checking.

S_n(r) = sum_{k>=1} 1/(k^n (e^(pi r k) - 1)) converges geometrically with
ratio e^(-pi r), i.e. each term buys ln(10)/(pi r) ~ 0.733/r decimal
digits.  The truncation index is chosen from that rate and then checked
against the analytic tail bound

    tail(K) <= e^(-pi r (K+1)) / ((1 - e^(-pi r))^2 (K+1)^n).

Oracle independence: :func:`zeta_reference` (accelerated alternating eta
series) and :func:`apery_zeta3` share no code path with the S/T series or
the triple assembly, so agreement between the two routes is meaningful
evidence rather than a tautology.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .bernoulli import Target, triple_for
from .precision import DEFAULT_GUARD, PrecisionReal, to_mpf


@dataclass(frozen=True)
class SeriesSpec:
    """Evaluation request: exponent n >= 1, rate r > 0, decimal digits D."""

    n: int
    r: object  # int, Fraction, float or mpf; any positive rate
    digits: int
    guard: int = DEFAULT_GUARD

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("series exponent n must be an integer >= 1")
        if float(self.r) <= 0:
            raise ValueError("series rate r must be positive")
        if self.digits < 1:
            raise ValueError("digits must be >= 1")


def _tail_log10(n, rate, k):
    """log10 of the analytic tail bound after k terms."""
    log_q = -math.pi * rate / math.log(10)
    one_minus_q = -math.expm1(-math.pi * rate)
    return log_q * (k + 1) - 2 * math.log10(one_minus_q) - n * math.log10(k + 1)


def truncation_index(n, rate, target_digits):
    """Smallest term count whose proven tail bound is below 10**-target_digits."""
    rate = float(rate)
    if rate <= 0:
        raise ValueError("rate must be positive")
    k = math.ceil(0.733 * target_digits / rate) + 10
    while _tail_log10(n, rate, k) >= -target_digits:
        k += 16
    return k


def _s_raw(n, r, target_digits, plus_one=False, extra_terms=0):
    """S_n(r) (or T_n(r) with plus_one) as a raw mpf at ambient precision.

    The ambient mpmath precision must already cover target_digits; terms are
    summed in ascending k so digit strings are reproducible.
    """
    k_max = truncation_index(n, float(r), target_digits) + extra_terms
    q = mp.exp(-mp.pi * to_mpf(r))
    total = mp.mpf(0)
    p = mp.mpf(1)
    if plus_one:
        for k in range(1, k_max + 1):
            p *= q
            total += p / ((1 + p) * k ** n)
    else:
        for k in range(1, k_max + 1):
            p *= q
            total += p / ((1 - p) * k ** n)
    return total


def s_series(spec):
    """S_n(r) at the precision requested by `spec`."""
    with mp.workdps(spec.digits + spec.guard + 5):
        value = _s_raw(spec.n, spec.r, spec.digits + spec.guard)
    return PrecisionReal(value, spec.digits, spec.guard)


def t_series(spec):
    """T_n(r), the e^(pi r k) + 1 companion series, to the precision contract."""
    with mp.workdps(spec.digits + spec.guard + 5):
        value = _s_raw(spec.n, spec.r, spec.digits + spec.guard, plus_one=True)
    return PrecisionReal(value, spec.digits, spec.guard)


def _magnitude(q):
    """Decimal digits in front of the point of a rational's absolute value."""
    q = abs(Fraction(q))
    if q <= 1:
        return 0
    return len(str(q.numerator)) - len(str(q.denominator)) + 1


def _assemble(triple, digits, guard):
    """a*S(1) + b*S(2) + c*S(4) at absolute error well below 10**-digits."""
    coeff_mag = _magnitude(abs(triple.a) + abs(triple.b) + abs(triple.c))
    if triple.target is Target.PI_POWER:
        result_mag = math.ceil(triple.exponent * math.log10(math.pi)) + 1
    else:
        result_mag = 1
    series_digits = digits + guard + coeff_mag + 5
    with mp.workdps(series_digits + result_mag + 5):
        parts = [
            to_mpf(coeff) * _s_raw(triple.exponent, rate, series_digits)
            for coeff, rate in ((triple.a, 1), (triple.b, 2), (triple.c, 4))
        ]
        value = parts[0] + parts[1] + parts[2]
    return PrecisionReal(value, digits, guard)


def eval_pi_power(exponent, digits, guard=DEFAULT_GUARD):
    """pi**exponent assembled from its three-series representation."""
    return _assemble(triple_for(Target.PI_POWER, exponent), digits, guard)


def eval_zeta_odd(exponent, digits, guard=DEFAULT_GUARD):
    """zeta(exponent) for odd exponent >= 3, assembled from its triple."""
    if exponent == 1:
        raise ValueError("zeta(1) diverges")
    return _assemble(triple_for(Target.ZETA_VALUE, exponent), digits, guard)


def _apery_raw(target_digits):
    """zeta(3) via the accelerated central-binomial series, raw mpf.

    Terms gain ~log10(4) digits each; the alternating tail is bounded by
    the first omitted term, which is the stopping rule.
    """
    threshold = mp.mpf(10) ** (-(target_digits + 2))
    binom = 2  # C(2n, n) at n = 1, updated with an exact integer recurrence
    total = mp.mpf(0)
    n = 1
    while True:
        term = mp.mpf(1) / (n ** 3 * binom)
        if term < threshold:
            break
        total += term if n % 2 == 1 else -term
        binom = binom * 2 * (2 * n + 1) // (n + 1)
        n += 1
    return mp.mpf(5) / 2 * total


def apery_zeta3(digits, guard=DEFAULT_GUARD):
    """zeta(3) through the accelerated series, to the precision contract."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    with mp.workdps(digits + guard + 5):
        value = _apery_raw(digits + guard)
    return PrecisionReal(value, digits, guard)


def _zeta_ref_raw(s, target_digits):
    """zeta(s), integer s >= 2, via accelerated alternating eta summation.

    Chebyshev-style acceleration of eta(s) = sum (-1)^(k-1)/k^s: with n
    terms the error is below 3/(3+sqrt(8))^n, about 0.7655 digits per term.
    Shares no code with the Lambert-series evaluators above.
    """
    n = int(1.31 * target_digits) + 8
    d = (3 + mp.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = mp.mpf(-1)
    c = -d
    acc = mp.mpf(0)
    for k in range(n):
        c = b - c
        acc += c / (k + 1) ** s
        b = b * (2 * (k + n) * (k - n)) / ((2 * k + 1) * (k + 1))
    eta = acc / d
    return eta / (1 - mp.mpf(2) ** (1 - s))


def zeta_reference(s, digits, guard=DEFAULT_GUARD):
    """Independent zeta oracle for integer s >= 2 (no Lambert-series code)."""
    if not isinstance(s, int) or s < 2:
        raise ValueError("zeta_reference requires an integer s >= 2")
    if digits < 1:
        raise ValueError("digits must be >= 1")
    with mp.workdps(digits + guard + 10):
        value = _zeta_ref_raw(s, digits + guard)
    return PrecisionReal(value, digits, guard)


_S1_RATES = (1, 2, 4)


def _s1_closed_raw(r):
    """Closed form of S_1(r) for r in {1, 2, 4} at ambient precision."""
    pi = +mp.pi
    if r == 2:
        return mp.log(4 / pi) / 4 - pi / 12 + mp.loggamma(mp.mpf(3) / 4)
    s14 = (mp.mpf(11) / 8) * mp.log(2) + (mp.mpf(3) / 4) * mp.log(pi) \
        - mp.loggamma(mp.mpf(1) / 4) - pi / 6
    if r == 4:
        return s14
    return s14 + mp.log(mp.mpf(1) / 4) / 4 + pi / 8


def s1_closed_form(r, digits, guard=DEFAULT_GUARD):
    """Log/log-gamma closed form of S_1(r), valid only for r in {1, 2, 4}."""
    if r not in _S1_RATES:
        raise ValueError(f"no closed form implemented for rate {r!r}; use r in {{1, 2, 4}}")
    if digits < 1:
        raise ValueError("digits must be >= 1")
    with mp.workdps(digits + guard + 5):
        value = _s1_closed_raw(int(r))
    return PrecisionReal(value, digits, guard)
