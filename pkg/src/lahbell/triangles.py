"""Number triangles (Lah, Stirling first/second kind) and their row-sum sequences.

Triangles are built one row at a time from the previous row's recurrence and
memoized for the life of the process; entries are plain Python integers.
The closed-form evaluators are kept alongside as independent cross-check
routes and are never used to fill the tables.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

__all__ = [
    "Triangle",
    "TRIANGLE_KINDS",
    "lah",
    "stirling1_signed",
    "stirling2",
    "bell_number",
    "lah_bell_number",
    "lah_via_stirling",
    "stirling2_via_lah",
    "lah_product_form",
    "lah_binomial_form",
    "lah_ratio_form",
]

TRIANGLE_KINDS = ("lah", "stirling1_signed", "stirling2")


class Triangle:
    """Memoized lower-triangular table of integers, grown row by row.

    Row 0 is (1,).  Reads of already-built rows are lock-free; row extension
    is serialized by an internal lock, so instances are safe to share across
    threads.
    """

    def __init__(self, kind: str):
        if kind not in TRIANGLE_KINDS:
            raise ValueError(f"unknown triangle kind {kind!r}, expected one of {TRIANGLE_KINDS}")
        self.kind = kind
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def _extend_to(self, n: int) -> None:
        if len(self._rows) > n:
            return
        with self._lock:
            while len(self._rows) <= n:
                m = len(self._rows)
                prev = self._rows[m - 1]
                row = [0] * (m + 1)
                for k in range(1, m + 1):
                    left = prev[k - 1]
                    mid = prev[k] if k < m else 0
                    if self.kind == "lah":
                        row[k] = left + (m - 1 + k) * mid
                    elif self.kind == "stirling2":
                        row[k] = left + k * mid
                    else:  # stirling1_signed
                        row[k] = left - (m - 1) * mid
                self._rows.append(tuple(row))

    def value(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError("triangle indices must be nonnegative")
        if k > n:
            return 0
        self._extend_to(n)
        return self._rows[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise ValueError("row index must be nonnegative")
        self._extend_to(n)
        return self._rows[n]


_LAH = Triangle("lah")
_S1 = Triangle("stirling1_signed")
_S2 = Triangle("stirling2")


def lah(n: int, k: int) -> int:
    """Unsigned Lah number: partitions of an n-set into k nonempty ordered lists."""
    return _LAH.value(n, k)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind: partitions of an n-set into k blocks."""
    return _S2.value(n, k)


def stirling1_signed(n: int, k: int) -> int:
    """Signed Stirling number of the first kind, the coefficient of x^k in (x)_n.

    Its absolute value counts permutations of n elements with k cycles.
    """
    return _S1.value(n, k)


def bell_number(n: int) -> int:
    """Total number of set partitions of an n-set (row sum of stirling2)."""
    return sum(_S2.row(n))


def lah_bell_number(n: int) -> int:
    """Total number of partitions of an n-set into nonempty ordered lists."""
    return sum(_LAH.row(n))


def lah_via_stirling(n: int, k: int) -> int:
    """Lah number recovered through both Stirling kinds.

    Evaluates sum_{l=k..n} (-1)^(n-l) * S1(n,l) * S2(l,k); agrees with
    :func:`lah` on the whole domain.
    """
    return sum(
        (-1) ** (n - l) * stirling1_signed(n, l) * stirling2(l, k)
        for l in range(k, n + 1)
    )


def stirling2_via_lah(n: int, k: int) -> int:
    """Stirling-2 recovered through the Lah triangle.

    Evaluates sum_{l=k..n} (-1)^(n-l) * S2(n,l) * L(l,k); agrees with
    :func:`stirling2` on the whole domain.
    """
    return sum(
        (-1) ** (n - l) * stirling2(n, l) * lah(l, k)
        for l in range(k, n + 1)
    )


# -- closed forms, used only as cross-checks against the recurrence tables --

def lah_product_form(n: int, k: int) -> int:
    """C(n-1, k-1) * n!/k!   (defined here for 1 <= k <= n)."""
    return comb(n - 1, k - 1) * factorial(n) // factorial(k)


def lah_binomial_form(n: int, k: int) -> int:
    """C(n, k) * C(n-1, k-1) * (n-k)!"""
    return comb(n, k) * comb(n - 1, k - 1) * factorial(n - k)


def lah_ratio_form(n: int, k: int) -> Fraction:
    """(n!/k!)^2 * k / (n * (n-k)!), exact; integral on 1 <= k <= n."""
    num = Fraction(factorial(n), factorial(k)) ** 2 * k
    return num / (n * factorial(n - k))
