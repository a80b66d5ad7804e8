"""Executable catalog of the verified identities.

Every entry states one identity, computes both sides by independent routes
(closed form vs. recurrence, finite sum vs. generating function, exact value
vs. certified enclosure), and reports pass or fail.  A failure always carries
the smallest failing index with both sides rendered exactly, so a regression
is immediately reproducible.

Identity ids are stable catalog keys.  Anchors are plain restatements of the
identity in ASCII notation: L(n,k) and S1/S2(n,k) are the triangle entries,
BL_n and B_n the ordered-list and set partition counts, BL_n(x) and B_n(x)
their polynomial forms, (x)_k / <x>_k the falling and rising factorials,
(x)_{k,lam} the stepped falling factorial, and Lag_n(x) the factorial-weighted
Laguerre polynomial of order alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Optional

from .dobinski import lah_bell_dobinski
from .enumeration import (
    ENUMERATION_BOUNDS,
    count_ordered_partitions,
    count_permutations_by_cycles,
    count_set_partitions,
)
from .exact import MultiPoly, falling_factorial, rising_factorial
from .families import (
    bell_poly,
    bivariate_bell_poly,
    bivariate_lah_bell_poly,
    degenerate_bell_poly,
    degenerate_lah_bell_poly,
    lah_bell_derivative,
    lah_bell_poly,
    lah_bell_recurrence_step,
    laguerre_poly,
)
from .series import (
    exp_t_minus_one,
    gf_catalog,
    identity_t,
    neg_log_one_minus_t,
)
from .triangles import (
    bell_number,
    lah,
    lah_bell_number,
    lah_binomial_form,
    lah_product_form,
    lah_ratio_form,
    lah_via_stirling,
    stirling1_signed,
    stirling2,
    stirling2_via_lah,
)

__all__ = ["IdentityRecord", "CATALOG_IDS", "run_suite", "oracle_records", "ORACLE_IDS"]

_X = MultiPoly.var("x")

# Precision used by the two enclosure-based entries.
_NUMERIC_EPS = Fraction(1, 10**20)
# Spot values substituted for alpha after the symbolic check.
_ALPHA_SPOTS = (Fraction(0), Fraction(1, 2), Fraction(2), Fraction(-1, 3))
# Arguments at which enclosures are compared against exact evaluations.
_DOBINSKI_ARGS = (Fraction(1, 2), Fraction(1), Fraction(3))

Counterexample = Optional[dict[str, str]]


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    anchor: str
    range: str
    status: str
    counterexample: Counterexample = None

    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        payload = {
            "id": self.id,
            "anchor": self.anchor,
            "range": self.range,
            "status": self.status,
        }
        if self.counterexample is not None:
            payload["counterexample"] = dict(self.counterexample)
        return payload


def _fail(**kwargs: object) -> dict[str, str]:
    return {key: str(value) for key, value in kwargs.items()}


# -- checkers; each returns None on pass or the first counterexample ------


def _check_eq3(cap: int) -> Counterexample:
    for n in range(cap + 1):
        lhs = _X**n
        rhs = MultiPoly.zero()
        for k in range(n + 1):
            rhs = rhs + stirling2(n, k) * falling_factorial(_X, k)
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_eq4(cap: int) -> Counterexample:
    for k in range(cap + 1):
        ser = (exp_t_minus_one(cap) ** k).scale(Fraction(1, factorial(k)))
        for n in range(k, cap + 1):
            lhs = ser.egf_coefficient(n)
            rhs = stirling2(n, k)
            if lhs != rhs:
                return _fail(n=n, k=k, lhs=lhs, rhs=rhs)
    return None


def _check_eq8(cap: int) -> Counterexample:
    for n in range(cap + 1):
        lhs = falling_factorial(_X, n)
        rhs = MultiPoly.zero()
        for k in range(n + 1):
            rhs = rhs + stirling1_signed(n, k) * _X**k
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_eq9(cap: int) -> Counterexample:
    for k in range(cap + 1):
        ser = (identity_t(cap).log1p() ** k).scale(Fraction(1, factorial(k)))
        for n in range(k, cap + 1):
            lhs = ser.egf_coefficient(n)
            rhs = stirling1_signed(n, k)
            if lhs != rhs:
                return _fail(n=n, k=k, lhs=lhs, rhs=rhs)
    return None


def _check_eq11_eq16(cap: int) -> Counterexample:
    for n in range(1, cap + 1):
        for k in range(1, n + 1):
            reference = lah(n, k)
            for label, form in (
                ("product form", lah_product_form),
                ("binomial form", lah_binomial_form),
                ("ratio form", lah_ratio_form),
            ):
                value = form(n, k)
                if value != reference:
                    return _fail(n=n, k=k, form=label, lhs=value, rhs=reference)
    return None


def _check_eq17(cap: int) -> Counterexample:
    for n in range(2, cap + 1):
        for k in range(1, n):
            lhs = lah(n, k + 1) * k * (k + 1)
            rhs = (n - k) * lah(n, k)
            if lhs != rhs:
                return _fail(n=n, k=k, lhs=lhs, rhs=rhs)
    return None


def _check_eq13(cap: int) -> Counterexample:
    for n in range(cap + 1):
        lhs = rising_factorial(_X, n)
        rhs = MultiPoly.zero()
        for k in range(n + 1):
            rhs = rhs + lah(n, k) * falling_factorial(_X, k)
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_eq14(cap: int) -> Counterexample:
    for n in range(cap + 1):
        lhs = falling_factorial(_X, n)
        rhs = MultiPoly.zero()
        for k in range(n + 1):
            rhs = rhs + (-1) ** (n - k) * lah(n, k) * rising_factorial(_X, k)
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_lemma1(cap: int) -> Counterexample:
    gf = gf_catalog("lah_bell", cap)
    for n in range(cap + 1):
        lhs = gf.egf_coefficient(n)
        rhs = lah_bell_number(n)
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_thm2(cap: int) -> Counterexample:
    for n in range(cap + 1):
        lhs = bell_number(n)
        rhs = sum(
            (-1) ** (n - k) * lah_bell_number(k) * stirling2(n, k) for k in range(n + 1)
        )
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_thm3(cap: int) -> Counterexample:
    for n in range(cap + 1):
        enclosure = lah_bell_dobinski(n, 1, _NUMERIC_EPS)
        exact = lah_bell_number(n)
        if not enclosure.contains(exact):
            return _fail(n=n, enclosure=enclosure, exact=exact)
    return None


def _check_lemma4(cap: int) -> Counterexample:
    gf = gf_catalog("lah_bell_poly", cap)
    for n in range(cap + 1):
        lhs = gf.egf_coefficient(n)
        rhs = lah_bell_poly(n)
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_thm5(cap: int) -> Counterexample:
    for n in range(cap + 1):
        lhs = bell_poly(n)
        rhs = MultiPoly.zero()
        for k in range(n + 1):
            rhs = rhs + (-1) ** (n - k) * stirling2(n, k) * lah_bell_poly(k)
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_thm6(cap: int) -> Counterexample:
    for n in range(cap + 1):
        for x in _DOBINSKI_ARGS:
            enclosure = lah_bell_dobinski(n, x, _NUMERIC_EPS)
            exact = lah_bell_poly(n).evaluate({"x": x}).as_rational()
            if not enclosure.contains(exact):
                return _fail(n=n, x=x, enclosure=enclosure, exact=exact)
    return None


def _check_thm7(cap: int) -> Counterexample:
    for n in range(cap + 1):
        lhs = lah_bell_poly(n)
        rhs = MultiPoly.zero()
        for k in range(n + 1):
            rhs = rhs + (-1) ** (n - k) * stirling1_signed(n, k) * bell_poly(k)
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_thm8(cap: int) -> Counterexample:
    for n in range(cap + 1):
        for k in range(n + 1):
            lhs = stirling2_via_lah(n, k)
            rhs = stirling2(n, k)
            if lhs != rhs:
                return _fail(n=n, k=k, lhs=lhs, rhs=rhs)
    return None


def _check_eq30(cap: int) -> Counterexample:
    for n in range(cap + 1):
        for k in range(n + 1):
            lhs = lah_via_stirling(n, k)
            rhs = lah(n, k)
            if lhs != rhs:
                return _fail(n=n, k=k, lhs=lhs, rhs=rhs)
    return None


def _check_thm9(cap: int) -> Counterexample:
    values = [lah_bell_poly(m) for m in range(cap + 2)]
    for n in range(cap + 1):
        lhs = lah_bell_recurrence_step(n, values[: n + 1])
        rhs = values[n + 1]
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_thm10(cap: int) -> Counterexample:
    for n in range(1, cap + 1):
        lhs = lah_bell_poly(n).derivative("x")
        rhs = lah_bell_derivative(n)
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_eq37(cap: int) -> Counterexample:
    gf = gf_catalog("bivariate_bell", cap)
    for n in range(cap + 1):
        lhs = gf.egf_coefficient(n)
        rhs = bivariate_bell_poly(n)
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_lemma11(cap: int) -> Counterexample:
    gf = gf_catalog("bivariate_lah_bell", cap)
    for n in range(cap + 1):
        lhs = gf.egf_coefficient(n)
        rhs = bivariate_lah_bell_poly(n)
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_thm12(cap: int) -> Counterexample:
    for n in range(cap + 1):
        via_s1 = MultiPoly.zero()
        via_s2 = MultiPoly.zero()
        for k in range(n + 1):
            via_s1 = via_s1 + (-1) ** (n - k) * stirling1_signed(n, k) * bivariate_bell_poly(k)
            via_s2 = via_s2 + (-1) ** (n - k) * stirling2(n, k) * bivariate_lah_bell_poly(k)
        if bivariate_lah_bell_poly(n) != via_s1:
            return _fail(n=n, direction="S1 route", lhs=bivariate_lah_bell_poly(n), rhs=via_s1)
        if bivariate_bell_poly(n) != via_s2:
            return _fail(n=n, direction="S2 route", lhs=bivariate_bell_poly(n), rhs=via_s2)
    return None


def _check_eq44(cap: int) -> Counterexample:
    gf = gf_catalog("degenerate_lah_bell", cap)
    for n in range(cap + 1):
        lhs = gf.egf_coefficient(n)
        rhs = degenerate_lah_bell_poly(n)
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_eq45(cap: int) -> Counterexample:
    gf = gf_catalog("degenerate_bell", cap)
    for n in range(cap + 1):
        lhs = gf.egf_coefficient(n)
        rhs = degenerate_bell_poly(n)
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_eq47(cap: int) -> Counterexample:
    for n in range(cap + 1):
        lhs = degenerate_bell_poly(n)
        rhs = MultiPoly.zero()
        for k in range(n + 1):
            rhs = rhs + (-1) ** (n - k) * stirling2(n, k) * degenerate_lah_bell_poly(k)
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
    return None


def _check_eq48(cap: int) -> Counterexample:
    order = min(cap, 12)
    composed = gf_catalog("degenerate_bell", order).compose(neg_log_one_minus_t(order))
    direct = gf_catalog("degenerate_lah_bell", order)
    for n in range(order + 1):
        if composed.coefficient(n) != direct.coefficient(n):
            return _fail(
                n=n,
                part="series composition",
                lhs=composed.coefficient(n),
                rhs=direct.coefficient(n),
            )
    for n in range(cap + 1):
        lhs = degenerate_lah_bell_poly(n)
        rhs = MultiPoly.zero()
        for k in range(n + 1):
            rhs = rhs + (-1) ** (n - k) * stirling1_signed(n, k) * degenerate_bell_poly(k)
        if lhs != rhs:
            return _fail(n=n, part="coefficient sum", lhs=lhs, rhs=rhs)
    return None


def _check_eq49(cap: int) -> Counterexample:
    gf = gf_catalog("laguerre_weighted", cap)
    for n in range(cap + 1):
        lhs = gf.egf_coefficient(n)
        rhs = laguerre_poly(n)
        if lhs != rhs:
            return _fail(n=n, lhs=lhs, rhs=rhs)
        for a in _ALPHA_SPOTS:
            lhs_at = MultiPoly._coerce(lhs).substitute({"alpha": a})
            rhs_at = rhs.substitute({"alpha": a})
            if lhs_at != rhs_at:
                return _fail(n=n, alpha=a, lhs=lhs_at, rhs=rhs_at)
    return None


def _check_laguerre_conv(cap: int) -> Counterexample:
    alpha = MultiPoly.var("alpha")
    for n in range(cap + 1):
        total = MultiPoly.zero()
        for m in range(n + 1):
            total = total + comb(n, m) * lah_bell_poly(m) * laguerre_poly(n - m)
        target = rising_factorial(alpha + 1, n)
        if total.degree("x") != 0:
            return _fail(n=n, issue="x does not cancel", lhs=total, rhs=target)
        if total != target:
            return _fail(n=n, lhs=total, rhs=target)
        for a in _ALPHA_SPOTS:
            if total.substitute({"alpha": a}) != target.substitute({"alpha": a}):
                return _fail(n=n, alpha=a, lhs=total, rhs=target)
    return None


@dataclass(frozen=True)
class _Entry:
    id: str
    anchor: str
    default_max: int
    check: Callable[[int], Counterexample]
    range_template: str = "n <= {cap}"

    def range_text(self, cap: int) -> str:
        return self.range_template.format(cap=cap)


_CATALOG: tuple[_Entry, ...] = (
    _Entry("eq3", "x^n = sum_{k=0..n} S2(n,k) (x)_k", 20, _check_eq3),
    _Entry(
        "eq4",
        "(e^t - 1)^k / k! = sum_{n>=k} S2(n,k) t^n/n!",
        15,
        _check_eq4,
        "k <= n <= {cap}",
    ),
    _Entry("eq8", "(x)_n = sum_{k=0..n} S1(n,k) x^k", 20, _check_eq8),
    _Entry(
        "eq9",
        "(log(1+t))^k / k! = sum_{n>=k} S1(n,k) t^n/n!",
        15,
        _check_eq9,
        "k <= n <= {cap}",
    ),
    _Entry(
        "eq11-eq16",
        "L(n,k) = C(n-1,k-1) n!/k! = C(n,k) C(n-1,k-1) (n-k)! = (n!/k!)^2 k/(n (n-k)!)",
        30,
        _check_eq11_eq16,
        "1 <= k <= n <= {cap}",
    ),
    _Entry(
        "eq17",
        "L(n,k+1) k(k+1) = (n-k) L(n,k)",
        30,
        _check_eq17,
        "1 <= k < n <= {cap}",
    ),
    _Entry("eq13", "<x>_n = sum_{k=0..n} L(n,k) (x)_k", 15, _check_eq13),
    _Entry("eq14", "(x)_n = sum_{k=0..n} (-1)^(n-k) L(n,k) <x>_k", 15, _check_eq14),
    _Entry(
        "lemma1",
        "exp(1/(1-t) - 1) = sum_n BL_n t^n/n!",
        20,
        _check_lemma1,
    ),
    _Entry(
        "thm2",
        "B_n = sum_{k=0..n} (-1)^(n-k) BL_k S2(n,k)",
        25,
        _check_thm2,
    ),
    _Entry(
        "thm3",
        "BL_n = e^(-1) sum_{k>=0} <k>_n / k!  (certified enclosure)",
        12,
        _check_thm3,
    ),
    _Entry(
        "lemma4",
        "exp(x (1/(1-t) - 1)) = sum_n BL_n(x) t^n/n!",
        15,
        _check_lemma4,
    ),
    _Entry(
        "thm5",
        "B_n(x) = sum_{k=0..n} (-1)^(n-k) S2(n,k) BL_k(x)",
        20,
        _check_thm5,
    ),
    _Entry(
        "thm6",
        "BL_n(x) = e^(-x) sum_{k>=0} <k>_n x^k / k!  (certified enclosure)",
        12,
        _check_thm6,
        "n <= {cap}, x in {{1/2, 1, 3}}",
    ),
    _Entry(
        "thm7",
        "BL_n(x) = sum_{k=0..n} (-1)^(n-k) S1(n,k) B_k(x)",
        20,
        _check_thm7,
    ),
    _Entry(
        "thm8",
        "S2(n,k) = sum_{l=k..n} (-1)^(n-l) S2(n,l) L(l,k)",
        25,
        _check_thm8,
        "k <= n <= {cap}",
    ),
    _Entry(
        "eq30",
        "L(n,k) = sum_{l=k..n} (-1)^(n-l) S1(n,l) S2(l,k)",
        25,
        _check_eq30,
        "k <= n <= {cap}",
    ),
    _Entry(
        "thm9",
        "BL_{n+1}(x) = x sum_{m=0..n} C(n,m) (n-m+1)! BL_m(x)",
        20,
        _check_thm9,
    ),
    _Entry(
        "thm10",
        "d/dx BL_n(x) = sum_{m=0..n-1} C(n,m) (n-m)! BL_m(x)",
        20,
        _check_thm10,
        "1 <= n <= {cap}",
    ),
    _Entry(
        "eq37",
        "(1 + y(e^t - 1))^x = sum_n B_n(x,y) t^n/n!",
        12,
        _check_eq37,
    ),
    _Entry(
        "lemma11",
        "(1 + y(1/(1-t) - 1))^x = sum_n BL_n(x,y) t^n/n!",
        12,
        _check_lemma11,
    ),
    _Entry(
        "thm12",
        "BL_n(x,y) = sum_k (-1)^(n-k) S1(n,k) B_k(x,y) and B_n(x,y) = sum_k (-1)^(n-k) S2(n,k) BL_k(x,y)",
        12,
        _check_thm12,
    ),
    _Entry(
        "eq44",
        "BL_{n,lam}(x) = sum_{k=0..n} L(n,k) (x)_{k,lam}",
        12,
        _check_eq44,
    ),
    _Entry(
        "eq45-catalog",
        "e_lam^x(e^t - 1) = sum_n B_{n,lam}(x) t^n/n!",
        12,
        _check_eq45,
    ),
    _Entry(
        "eq47",
        "B_{n,lam}(x) = sum_{k=0..n} (-1)^(n-k) S2(n,k) BL_{k,lam}(x)",
        15,
        _check_eq47,
    ),
    _Entry(
        "eq48-corrected",
        "e_lam^x(t/(1-t)) expands through -log(1-t); BL_{n,lam}(x) = sum_k (-1)^(n-k) S1(n,k) B_{k,lam}(x)",
        15,
        _check_eq48,
        "n <= {cap}; composition order min({cap}, 12)",
    ),
    _Entry(
        "eq49",
        "(1-t)^(-alpha-1) exp(x t/(t-1)) = sum_n Lag_n(x) t^n/n!",
        10,
        _check_eq49,
    ),
    _Entry(
        "laguerre-conv",
        "<alpha+1>_n = sum_{m=0..n} C(n,m) BL_m(x) Lag_{n-m}(x)  (x cancels)",
        10,
        _check_laguerre_conv,
    ),
)

CATALOG_IDS: tuple[str, ...] = tuple(entry.id for entry in _CATALOG)
_BY_ID = {entry.id: entry for entry in _CATALOG}


def run_suite(selection: list[str] | str, max_n: int) -> list[IdentityRecord]:
    """Run the selected identities, each over its default range capped at max_n.

    selection is "all" (or a list containing "all") for the full catalog, or a
    list of catalog ids; records come back in catalog order.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if isinstance(selection, str):
        selection = [selection]
    if "all" in selection:
        chosen = list(_CATALOG)
    else:
        unknown = [item for item in selection if item not in _BY_ID]
        if unknown:
            raise ValueError(
                f"unknown identity ids {unknown}; valid ids: {', '.join(CATALOG_IDS)}"
            )
        wanted = set(selection)
        chosen = [entry for entry in _CATALOG if entry.id in wanted]
    records = []
    for entry in chosen:
        cap = min(entry.default_max, max_n)
        counterexample = entry.check(cap)
        records.append(
            IdentityRecord(
                id=entry.id,
                anchor=entry.anchor,
                range=entry.range_text(cap),
                status="pass" if counterexample is None else "fail",
                counterexample=counterexample,
            )
        )
    return records


# -- enumeration cross-checks (the `verify --oracle` extras) ---------------

ORACLE_IDS = (
    "oracle-ordered-partitions",
    "oracle-set-partitions",
    "oracle-permutation-cycles",
)

# Defaults keep a full oracle pass in the seconds range; the hard caps are
# the enumeration bounds themselves.
_ORACLE_DEFAULTS = {
    "oracle-ordered-partitions": 8,
    "oracle-set-partitions": 10,
    "oracle-permutation-cycles": 9,
}


def _expected_row(value_fn: Callable[[int, int], int], n: int) -> dict[int, int]:
    if n == 0:
        return {0: 1}
    return {k: value_fn(n, k) for k in range(n + 1) if value_fn(n, k) != 0}


def oracle_records(max_n: int) -> list[IdentityRecord]:
    """Compare the brute-force enumerators against triangles and row sums."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    jobs = (
        (
            "oracle-ordered-partitions",
            "every ordered-list partition counted once: totals by block count match L(n,k), overall total BL_n",
            ENUMERATION_BOUNDS["ordered_partitions"],
            count_ordered_partitions,
            lah,
            lah_bell_number,
        ),
        (
            "oracle-set-partitions",
            "every set partition counted once: totals by block count match S2(n,k), overall total B_n",
            ENUMERATION_BOUNDS["set_partitions"],
            count_set_partitions,
            stirling2,
            bell_number,
        ),
        (
            "oracle-permutation-cycles",
            "every permutation counted once by cycle count: totals match |S1(n,k)|",
            ENUMERATION_BOUNDS["permutation_cycles"],
            count_permutations_by_cycles,
            lambda n, k: abs(stirling1_signed(n, k)),
            None,
        ),
    )
    records = []
    for oracle_id, anchor, hard_cap, counter, value_fn, total_fn in jobs:
        cap = min(_ORACLE_DEFAULTS[oracle_id], hard_cap, max_n)
        counterexample = None
        for n in range(cap + 1):
            counts = counter(n)
            expected = _expected_row(value_fn, n)
            if counts != expected:
                counterexample = _fail(n=n, lhs=counts, rhs=expected)
                break
            if total_fn is not None and sum(counts.values()) != total_fn(n):
                counterexample = _fail(
                    n=n, total=sum(counts.values()), expected_total=total_fn(n)
                )
                break
        records.append(
            IdentityRecord(
                id=oracle_id,
                anchor=anchor,
                range=f"n <= {cap}",
                status="pass" if counterexample is None else "fail",
                counterexample=counterexample,
            )
        )
    return records
