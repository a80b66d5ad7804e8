"""Truncated formal power series over an exact coefficient ring.

A :class:`TruncatedSeries` of order N tracks the ordinary coefficients of
t^0 .. t^N exactly; coefficients are rationals or :class:`~lahbell.exact.MultiPoly`
values.  All series here are formal, so convergence never enters; the only
analytic-looking operations (exp, log) are coefficient recurrences.

Exponential-generating-function coefficients are recovered at the boundary as
n! times the ordinary coefficient, which keeps multiplication a plain Cauchy
product with no divisions inside the engine.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence, Union

from .exact import MultiPoly

__all__ = [
    "TruncatedSeries",
    "identity_t",
    "ser_one",
    "geometric_minus_one",
    "exp_t_minus_one",
    "neg_log_one_minus_t",
    "degenerate_exponential",
    "gf_catalog",
    "GF_NAMES",
]

Coeff = Union[Fraction, MultiPoly]
CoeffLike = Union[int, Fraction, MultiPoly]


def _as_ring(value: CoeffLike) -> Coeff:
    if isinstance(value, (Fraction, MultiPoly)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact ring element: {value!r}")


class TruncatedSeries:
    """Degree-capped power series with exact coefficients.

    Binary operations require both operands to have the same order; a
    mismatch is a construction bug, not something to hide behind silent
    truncation, so it raises.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[CoeffLike], order: int | None = None):
        coeffs = [_as_ring(c) for c in coeffs]
        if order is None:
            if not coeffs:
                raise ValueError("series needs at least the constant coefficient")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        if len(coeffs) > order + 1:
            raise ValueError(f"{len(coeffs)} coefficients exceed order {order}")
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        self._coeffs = tuple(coeffs)

    # -- access --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, n: int) -> Coeff:
        """Ordinary coefficient of t^n."""
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient index {n} outside tracked range 0..{self.order}")
        return self._coeffs[n]

    def coefficients(self) -> tuple[Coeff, ...]:
        return self._coeffs

    def egf_coefficient(self, n: int) -> Coeff:
        """n! times the ordinary coefficient; exact, no division involved."""
        return factorial(n) * self.coefficient(n)

    def _require_same_order(self, other: TruncatedSeries) -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    # -- ring operations -------------------------------------------------

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        return TruncatedSeries([a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        return TruncatedSeries([a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self._coeffs])

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        a, b = self._coeffs, other._coeffs
        out = []
        for n in range(len(a)):
            acc: CoeffLike = 0
            for i in range(n + 1):
                acc = acc + a[i] * b[n - i]
            out.append(acc)
        return TruncatedSeries(out)

    def scale(self, c: CoeffLike) -> TruncatedSeries:
        """Multiply every coefficient by a fixed ring element."""
        c = _as_ring(c)
        return TruncatedSeries([c * coeff for coeff in self._coeffs])

    def __pow__(self, k: int) -> TruncatedSeries:
        if not isinstance(k, int) or k < 0:
            raise ValueError("series power must be a nonnegative integer")
        result = ser_one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self._coeffs, other._coeffs)
        )

    __hash__ = None

    # -- transcendental operations (coefficient recurrences) -------------

    def exp(self) -> TruncatedSeries:
        """exp(f) for f with zero constant term.

        Solved coefficient-by-coefficient from (exp f)' = f' * exp f:
        g_n = (1/n) * sum_{j=1..n} j * f_j * g_{n-j}, g_0 = 1.
        """
        if self._coeffs[0] != 0:
            raise ValueError("exp requires a zero constant term")
        f = self._coeffs
        g: list[CoeffLike] = [Fraction(1)] + [Fraction(0)] * self.order
        for n in range(1, self.order + 1):
            acc: CoeffLike = 0
            for j in range(1, n + 1):
                acc = acc + (j * f[j]) * g[n - j]
            g[n] = Fraction(1, n) * acc
        return TruncatedSeries(g)

    def log1p(self) -> TruncatedSeries:
        """log(1 + f) for f with zero constant term; the inverse of :meth:`exp`.

        From h' * (1 + f) = f':
        h_n = f_n - (1/n) * sum_{j=1..n-1} j * h_j * f_{n-j}, h_0 = 0.
        """
        if self._coeffs[0] != 0:
            raise ValueError("log1p requires a zero constant term")
        f = self._coeffs
        h: list[CoeffLike] = [Fraction(0)] * (self.order + 1)
        for n in range(1, self.order + 1):
            acc: CoeffLike = 0
            for j in range(1, n):
                acc = acc + (j * h[j]) * f[n - j]
            h[n] = f[n] - Fraction(1, n) * acc
        return TruncatedSeries(h)

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """Exact composition self(inner(t)) for inner with zero constant term."""
        if not isinstance(inner, TruncatedSeries):
            raise TypeError("inner must be a TruncatedSeries")
        self._require_same_order(inner)
        if inner._coeffs[0] != 0:
            raise ValueError("composition requires inner constant term zero")
        # Horner accumulation: O(order) series multiplications.
        acc = TruncatedSeries([self._coeffs[self.order]], order=self.order)
        for i in range(self.order - 1, -1, -1):
            acc = acc * inner + TruncatedSeries([self._coeffs[i]], order=self.order)
        return acc

    def pow(self, exponent: CoeffLike) -> TruncatedSeries:
        """Symbolic power f^e = exp(e * log1p(f - 1)) for f with constant term 1."""
        if self._coeffs[0] != 1:
            raise ValueError("symbolic power requires constant term 1")
        shifted = TruncatedSeries([self._coeffs[0] - 1, *self._coeffs[1:]])
        return shifted.log1p().scale(exponent).exp()


# -- stock series -------------------------------------------------------


def identity_t(order: int) -> TruncatedSeries:
    """The series t."""
    if order < 1:
        return TruncatedSeries([Fraction(0)], order=order)
    return TruncatedSeries([Fraction(0), Fraction(1)], order=order)


def ser_one(order: int) -> TruncatedSeries:
    """The constant series 1."""
    return TruncatedSeries([Fraction(1)], order=order)


def geometric_minus_one(order: int) -> TruncatedSeries:
    """1/(1-t) - 1 = t/(1-t) = t + t^2 + t^3 + ..."""
    return TruncatedSeries([Fraction(0)] + [Fraction(1)] * order)


def exp_t_minus_one(order: int) -> TruncatedSeries:
    """e^t - 1 = sum_{n>=1} t^n / n!"""
    return TruncatedSeries([Fraction(0)] + [Fraction(1, factorial(n)) for n in range(1, order + 1)])


def neg_log_one_minus_t(order: int) -> TruncatedSeries:
    """-log(1-t) = sum_{n>=1} t^n / n"""
    return TruncatedSeries([Fraction(0)] + [Fraction(1, n) for n in range(1, order + 1)])


def degenerate_exponential(order: int) -> TruncatedSeries:
    """The two-parameter exponential sum_n x(x-lam)...(x-(n-1)lam) t^n / n!.

    Built directly from the factorial coefficients so that lam enters
    polynomially; the equivalent closed form (1 + lam*t)^(x/lam) would put
    lam into denominators and is deliberately avoided.
    """
    from .exact import generalized_falling

    x = MultiPoly.var("x")
    lam = MultiPoly.var("lam")
    return TruncatedSeries(
        [Fraction(1, factorial(n)) * generalized_falling(x, n, lam) for n in range(order + 1)]
    )


# -- the generating-function catalog --------------------------------------

GF_NAMES = (
    "lah_bell",
    "lah_bell_poly",
    "bell",
    "bell_poly",
    "bivariate_bell",
    "bivariate_lah_bell",
    "degenerate_lah_bell",
    "degenerate_bell",
    "laguerre_weighted",
)


@lru_cache(maxsize=None)
def gf_catalog(name: str, order: int) -> TruncatedSeries:
    """Named exponential generating functions of the number/polynomial families.

    Every entry is assembled from the primitive series operations above; its
    egf coefficients reproduce the matching closed-form family exactly, which
    the identity suite checks.  All family parameters stay symbolic.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    x = MultiPoly.var("x")
    y = MultiPoly.var("y")
    alpha = MultiPoly.var("alpha")

    if name == "lah_bell":
        return geometric_minus_one(order).exp()
    if name == "lah_bell_poly":
        return geometric_minus_one(order).scale(x).exp()
    if name == "bell":
        return exp_t_minus_one(order).exp()
    if name == "bell_poly":
        return exp_t_minus_one(order).scale(x).exp()
    if name == "bivariate_bell":
        return (ser_one(order) + exp_t_minus_one(order).scale(y)).pow(x)
    if name == "bivariate_lah_bell":
        return (ser_one(order) + geometric_minus_one(order).scale(y)).pow(x)
    if name == "degenerate_lah_bell":
        return degenerate_exponential(order).compose(geometric_minus_one(order))
    if name == "degenerate_bell":
        return degenerate_exponential(order).compose(exp_t_minus_one(order))
    if name == "laguerre_weighted":
        # (1-t)^(-alpha-1) * exp(x * t/(t-1)); t/(t-1) = -(1/(1-t) - 1).
        one_minus_t = TruncatedSeries([Fraction(1), Fraction(-1)], order=order)
        weight = one_minus_t.pow(-alpha - 1)
        return weight * geometric_minus_one(order).scale(-x).exp()
    raise ValueError(f"unknown generating function {name!r}, expected one of {GF_NAMES}")
