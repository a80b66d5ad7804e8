"""Exact scalar and polynomial arithmetic.

Scalars are arbitrary-precision rationals (``fractions.Fraction``), always in
lowest terms with a positive denominator.  Polynomials are sparse multivariate
polynomials over those rationals in the fixed, ordered indeterminate set
``("x", "y", "lam", "alpha")``.

A :class:`MultiPoly` stores a map from exponent vectors to nonzero rational
coefficients::

    x^2*y + 3  ->  {(2, 1, 0, 0): Fraction(1), (0, 0, 0, 0): Fraction(3)}

The zero polynomial is the empty map.  Two polynomials are equal iff their
term maps are equal, so canonical-form equality is decidable and cheap.
There is no floating point anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Union

__all__ = [
    "Rational",
    "INDETERMINATES",
    "MultiPoly",
    "falling_factorial",
    "rising_factorial",
    "generalized_falling",
]

# Arbitrary-precision exact rational scalar.  The stdlib type already keeps
# values in lowest terms with a positive denominator and raises
# ZeroDivisionError on division by zero, which is exactly the contract needed.
Rational = Fraction

INDETERMINATES = ("x", "y", "lam", "alpha")

_VAR_INDEX = {name: i for i, name in enumerate(INDETERMINATES)}
_NVARS = len(INDETERMINATES)
_ZERO_EXP = (0,) * _NVARS

Scalar = Union[int, Fraction]
PolyLike = Union["MultiPoly", int, Fraction]


def _as_coeff(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


class MultiPoly:
    """Immutable sparse polynomial in x, y, lam, alpha with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Scalar] | None = None):
        canonical: dict[tuple[int, int, int, int], Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != _NVARS or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector: {exps!r}")
                c = _as_coeff(coeff)
                if c != 0:
                    canonical[exps] = c
        self._terms = canonical

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> MultiPoly:
        return cls()

    @classmethod
    def const(cls, value: Scalar) -> MultiPoly:
        return cls({_ZERO_EXP: value})

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        """The polynomial consisting of the single indeterminate `name`."""
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown indeterminate {name!r}, expected one of {INDETERMINATES}")
        exps = [0] * _NVARS
        exps[_VAR_INDEX[name]] = 1
        return cls({tuple(exps): 1})

    @classmethod
    def _coerce(cls, value: PolyLike) -> MultiPoly:
        if isinstance(value, MultiPoly):
            return value
        return cls.const(value)

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> Iterator[tuple[tuple[int, int, int, int], Fraction]]:
        """Iterate terms in the deterministic rendering order."""
        return iter(sorted(self._terms.items(), key=_term_sort_key))

    def coefficient(self, exps: tuple[int, ...]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def degree(self, name: str) -> int:
        """Degree in one indeterminate; zero polynomial has degree 0 by convention."""
        i = _VAR_INDEX[name]
        return max((exps[i] for exps in self._terms), default=0)

    def total_degree(self) -> int:
        return max((sum(exps) for exps in self._terms), default=0)

    def is_constant(self) -> bool:
        return all(exps == _ZERO_EXP for exps in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get(_ZERO_EXP, Fraction(0))

    def as_rational(self) -> Fraction:
        """The value of a constant polynomial; error if any indeterminate survives."""
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.constant_term()

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: PolyLike) -> MultiPoly:
        if not isinstance(other, (MultiPoly, int, Fraction)):
            return NotImplemented
        other = MultiPoly._coerce(other)
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            new = out.get(exps, 0) + coeff
            if new == 0:
                out.pop(exps, None)
            else:
                out[exps] = new
        return _from_canonical(out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return _from_canonical({exps: -c for exps, c in self._terms.items()})

    def __sub__(self, other: PolyLike) -> MultiPoly:
        if not isinstance(other, (MultiPoly, int, Fraction)):
            return NotImplemented
        return self + (-MultiPoly._coerce(other))

    def __rsub__(self, other: PolyLike) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other: PolyLike) -> MultiPoly:
        if not isinstance(other, (MultiPoly, int, Fraction)):
            return NotImplemented
        other = MultiPoly._coerce(other)
        out: dict[tuple[int, int, int, int], Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exps = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3])
                new = out.get(exps, 0) + ca * cb
                if new == 0:
                    out.pop(exps, None)
                else:
                    out[exps] = new
        return _from_canonical(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> MultiPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = MultiPoly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MultiPoly.const(other)._terms
        return NotImplemented

    __hash__ = None  # mutable-looking container semantics; not used as dict key

    # -- substitution ------------------------------------------------------

    def substitute(self, bindings: Mapping[str, PolyLike]) -> MultiPoly:
        """Exact substitution of polynomials (or scalars) for indeterminates.

        Unbound indeterminates pass through unchanged, so a partial binding
        yields another polynomial and a full binding yields a constant one.
        """
        for name in bindings:
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown indeterminate {name!r}")
        bound = {_VAR_INDEX[n]: MultiPoly._coerce(v) for n, v in bindings.items()}
        acc = MultiPoly.zero()
        for exps, coeff in self._terms.items():
            residual = [0] * _NVARS
            factor = MultiPoly.const(coeff)
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                if i in bound:
                    factor = factor * bound[i] ** e
                else:
                    residual[i] = e
            acc = acc + factor * _from_canonical({tuple(residual): Fraction(1)})
        return acc

    def evaluate(self, bindings: Mapping[str, Scalar]) -> MultiPoly:
        """Partial evaluation at exact rational points (see :meth:`substitute`)."""
        return self.substitute({n: _as_coeff(v) for n, v in bindings.items()})

    def derivative(self, name: str = "x") -> MultiPoly:
        """Formal partial derivative with respect to one indeterminate."""
        i = _VAR_INDEX[name]
        out: dict[tuple[int, int, int, int], Fraction] = {}
        for exps, coeff in self._terms.items():
            e = exps[i]
            if e == 0:
                continue
            lowered = list(exps)
            lowered[i] = e - 1
            out[tuple(lowered)] = coeff * e
        return _from_canonical(out)

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exps, coeff in self.terms():
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(INDETERMINATES, exps)
                if e > 0
            )
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _term_sort_key(item: tuple[tuple[int, int, int, int], Fraction]):
    # Descending total degree, then lexicographic with x > y > lam > alpha.
    exps = item[0]
    return (-sum(exps), tuple(-e for e in exps))


def _from_canonical(terms: dict[tuple[int, int, int, int], Fraction]) -> MultiPoly:
    poly = MultiPoly.__new__(MultiPoly)
    poly._terms = {e: c for e, c in terms.items() if c != 0}
    return poly


def falling_factorial(p: PolyLike, n: int) -> MultiPoly:
    """(p)_n = p (p-1) ... (p-n+1), with (p)_0 = 1."""
    return generalized_falling(p, n, 1)


def rising_factorial(p: PolyLike, n: int) -> MultiPoly:
    """<p>_n = p (p+1) ... (p+n-1), with <p>_0 = 1."""
    return generalized_falling(p, n, -1)


def generalized_falling(p: PolyLike, n: int, step: PolyLike) -> MultiPoly:
    """Product p (p-step) (p-2*step) ... (p-(n-1)*step).

    A step of 1 gives the falling factorial, -1 the rising factorial, and a
    symbolic step the degenerate falling factorial with that parameter.
    """
    if n < 0:
        raise ValueError("factorial length must be nonnegative")
    p = MultiPoly._coerce(p)
    step = MultiPoly._coerce(step)
    result = MultiPoly.const(1)
    for i in range(n):
        result = result * (p - i * step)
    return result
