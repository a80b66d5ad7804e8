"""Certified evaluation of the infinite-series forms of the polynomial families.

Both number families admit a representation e^(-x) * sum_k c_k(n) x^k / k!
with nonnegative terms (c_k is a rising-factorial power or a plain power of
k).  Everything here is exact rational arithmetic; the only infinities are
the two series tails, and each is capped by a geometric bound once the
term-to-term ratio drops below 1/2 (the ratios are monotone decreasing, so
the first crossing covers the whole tail).

The factor e^(-x) is enclosed through the reciprocal: the partial sums of
e^x grow monotonically and carry the same geometric tail bound, giving
e^x in [P, P + c] and hence e^(-x) in [1/(P+c), 1/P] with all endpoints
positive.  The product interval therefore shrinks monotonically as either
cutoff grows, which makes refinement nested: asking for a smaller eps always
returns a sub-interval of the wider answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Callable, Union

__all__ = [
    "CertifiedDecimal",
    "PrecisionNotReached",
    "lah_bell_dobinski",
    "bell_dobinski",
    "DOBINSKI_FAMILIES",
]

RationalLike = Union[int, Fraction]

_HALF = Fraction(1, 2)
_ITERATION_CAP = 100_000

DOBINSKI_FAMILIES = ("lah_bell", "bell")


class PrecisionNotReached(Exception):
    """Raised instead of ever returning a bound looser than requested."""


@dataclass(frozen=True)
class CertifiedDecimal:
    """Exact rational midpoint with a rigorous absolute error bound.

    The true value is guaranteed to lie in [value - error_bound,
    value + error_bound], and error_bound <= requested_eps.
    """

    value: Fraction
    error_bound: Fraction
    requested_eps: Fraction
    series_terms: int
    exp_terms: int

    def __post_init__(self) -> None:
        if self.error_bound < 0:
            raise ValueError("error bound must be nonnegative")
        if self.error_bound > self.requested_eps:
            raise ValueError("error bound exceeds the requested precision")

    @property
    def low(self) -> Fraction:
        return self.value - self.error_bound

    @property
    def high(self) -> Fraction:
        return self.value + self.error_bound

    def contains(self, exact: RationalLike) -> bool:
        return self.low <= exact <= self.high

    def guaranteed_digits(self) -> int:
        """Decimal places d such that the rounded rendering is off by < 10^-d."""
        # A zero bound means the midpoint is exact; render at the precision
        # the request guaranteed rather than chasing unbounded digits.
        bound = self.error_bound if self.error_bound > 0 else self.requested_eps
        if bound <= 0:
            return 0
        digits = 0
        while bound * 2 * 10 ** (digits + 1) <= 1:
            digits += 1
        return digits

    def decimal(self) -> str:
        """The midpoint rounded to the guaranteed number of decimal places."""
        digits = self.guaranteed_digits()
        scaled = round(self.value * 10**digits)
        sign = "-" if scaled < 0 else ""
        body = str(abs(scaled)).rjust(digits + 1, "0")
        if digits == 0:
            return sign + body
        return f"{sign}{body[:-digits]}.{body[-digits:]}"

    def error_bound_decimal(self) -> str:
        """The error bound rounded UP to three significant figures."""
        return _sci_upper(self.error_bound)

    def __str__(self) -> str:
        return f"{self.decimal()} (+/- {self.error_bound_decimal()})"


def _sci_upper(q: Fraction, sig: int = 3) -> str:
    if q < 0:
        raise ValueError("expected a nonnegative quantity")
    if q == 0:
        return "0"
    exponent = 0
    if q >= 1:
        while q >= 10 ** (exponent + 1):
            exponent += 1
    else:
        while q < 10**exponent:
            exponent -= 1
    # Round the mantissa up so the printed bound never understates the true one.
    mantissa = -((-q) // Fraction(10) ** (exponent - sig + 1))
    mantissa = int(mantissa)
    if mantissa >= 10**sig:
        mantissa //= 10
        exponent += 1
    text = str(mantissa)
    return f"{text[0]}.{text[1:]}e{exponent}"


def _exp_enclosure(x: Fraction, delta: Fraction) -> tuple[Fraction, Fraction, int]:
    """Partial sum P of e^x and a tail bound c <= delta, so e^x in [P, P+c]."""
    partial = Fraction(1)
    term = Fraction(1)
    m = 0
    while True:
        ratio = x / (m + 1)
        tail = 2 * term * ratio
        if ratio <= _HALF and tail <= delta:
            return partial, tail, m + 1
        if m >= _ITERATION_CAP:
            raise PrecisionNotReached(
                f"exponential enclosure for x = {x} did not reach tail <= {delta} "
                f"within {_ITERATION_CAP} terms"
            )
        term = term * x / (m + 1)
        partial += term
        m += 1


def _certified_product(
    weight: Callable[[int], int],
    ratio: Callable[[int], Fraction],
    x: Fraction,
    eps: Fraction,
) -> CertifiedDecimal:
    """Enclose e^(-x) * sum_k weight(k) x^k / k! within eps.

    weight(k) must be a nonnegative integer and ratio(k) must bound
    term(k+1)/term(k) for k >= 1, monotone nonincreasing.  The series cutoff
    targets a quarter of eps and the exponential enclosure the rest, which
    caps the final interval width at eps/2.
    """
    tail_target = min(Fraction(1), eps / 4)
    partial = Fraction(0)
    power_over_factorial = Fraction(1)
    crude_upper = None
    k = 0
    while True:
        partial += weight(k) * power_over_factorial
        if k >= 1:
            term = weight(k) * power_over_factorial
            r = ratio(k)
            tail = 2 * term * r
            if r <= _HALF:
                if crude_upper is None and tail <= 1:
                    # Fixed, eps-independent upper bound on the full sum; it
                    # scales the exponential target so refinement stays nested.
                    crude_upper = partial + tail
                if tail <= tail_target:
                    series_terms = k + 1
                    break
        if k >= _ITERATION_CAP:
            raise PrecisionNotReached(
                f"series for x = {x} did not reach tail <= {tail_target} "
                f"within {_ITERATION_CAP} terms"
            )
        k += 1
        power_over_factorial = power_over_factorial * x / k
    assert crude_upper is not None and crude_upper > 0
    exp_partial, exp_tail, exp_terms = _exp_enclosure(x, eps / (4 * crude_upper))
    low = partial / (exp_partial + exp_tail)
    high = (partial + tail) / exp_partial
    value = (low + high) / 2
    error = (high - low) / 2
    if error > eps:
        raise PrecisionNotReached(f"final width {error} exceeds eps = {eps}")
    return CertifiedDecimal(
        value=value,
        error_bound=error,
        requested_eps=eps,
        series_terms=series_terms,
        exp_terms=exp_terms,
    )


def _validated(n: int, x: RationalLike, eps: RationalLike) -> tuple[Fraction, Fraction]:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"index must be a nonnegative integer, got {n!r}")
    x = Fraction(x)
    eps = Fraction(eps)
    if x <= 0:
        raise ValueError("argument x must be positive; the tail bounds need positive terms")
    if eps <= 0:
        raise ValueError("eps must be positive")
    return x, eps


def lah_bell_dobinski(n: int, x: RationalLike, eps: RationalLike) -> CertifiedDecimal:
    """Enclosure of e^(-x) * sum_k k(k+1)...(k+n-1) x^k / k! within eps.

    The sum equals the degree-n ordered-list-partition polynomial at x, which
    is how the enclosure is cross-checked.  term(k+1)/term(k) =
    x(k+n)/(k(k+1)), monotone decreasing for k >= 1.
    """
    x, eps = _validated(n, x, eps)

    def weight(k: int) -> int:
        return prod(range(k, k + n))

    def ratio(k: int) -> Fraction:
        return x * (k + n) / (k * (k + 1))

    return _certified_product(weight, ratio, x, eps)


def bell_dobinski(n: int, x: RationalLike, eps: RationalLike) -> CertifiedDecimal:
    """Enclosure of e^(-x) * sum_k k^n x^k / k! within eps.

    The sum equals the degree-n set-partition polynomial at x.
    term(k+1)/term(k) = x(k+1)^(n-1)/k^n, monotone decreasing for k >= 1.
    """
    x, eps = _validated(n, x, eps)

    def weight(k: int) -> int:
        return k**n

    def ratio(k: int) -> Fraction:
        if n == 0:
            return x / (k + 1)
        return x * Fraction((k + 1) ** (n - 1), k**n)

    return _certified_product(weight, ratio, x, eps)
