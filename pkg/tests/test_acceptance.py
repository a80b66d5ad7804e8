"""Acceptance criteria, one test per criterion, one printed PASS/FAIL line each.

Verdict lines go through pytest's terminal reporter so every run shows all
six lines regardless of capture mode or verbosity flags.
"""

import random
import time
from fractions import Fraction

import pytest

from lahbell.cli import main
from lahbell.dobinski import bell_dobinski, lah_bell_dobinski
from lahbell.enumeration import (
    count_ordered_partitions,
    count_permutations_by_cycles,
    count_set_partitions,
)
from lahbell.families import (
    bell_poly,
    bivariate_lah_bell_poly,
    degenerate_bell_poly,
    degenerate_lah_bell_poly,
    lah_bell_poly,
)
from lahbell.identities import run_suite
from lahbell.series import (
    TruncatedSeries,
    gf_catalog,
    identity_t,
    neg_log_one_minus_t,
    ser_one,
)
from lahbell.triangles import lah, lah_bell_number, stirling1_signed, stirling2

EPS20 = Fraction(1, 10**20)


@pytest.fixture
def report(request):
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")

    def _report(number: int, label: str, body) -> None:
        verdict = "FAIL"
        try:
            body()
            verdict = "PASS"
        finally:
            line = f"ACCEPTANCE {number} {label}: {verdict}"
            if reporter is not None:
                reporter.write_line(line)
            else:
                print(line)

    return _report


def test_criterion_1_oracle_equivalence(report):
    def body():
        started = time.perf_counter()
        totals = []
        for n in range(9):
            ordered = count_ordered_partitions(n)
            assert ordered == {k: lah(n, k) for k in range(n + 1) if lah(n, k)}
            totals.append(sum(ordered.values()))
            unordered = count_set_partitions(n)
            assert unordered == {
                k: stirling2(n, k) for k in range(n + 1) if stirling2(n, k)
            }
            cycles = count_permutations_by_cycles(n)
            assert cycles == {
                k: abs(stirling1_signed(n, k))
                for k in range(n + 1)
                if stirling1_signed(n, k)
            }
        assert totals == [1, 1, 3, 13, 73, 501, 4051, 37633, 394353]
        assert time.perf_counter() - started < 60

    report(1, "oracle equivalence", body)


def test_criterion_2_identity_suite(report):
    def body():
        assert main(["verify", "all", "--max-n", "12"]) == 0
        targeted = {
            "thm2": 20,
            "thm5": 20,
            "thm7": 20,
            "eq13": 15,
            "eq14": 15,
            "eq30": 15,
            "thm8": 15,
            "thm9": 20,
            "thm10": 20,
            "thm12": 12,
            "eq47": 12,
            "laguerre-conv": 10,
        }
        for ident, bound in targeted.items():
            record = run_suite([ident], bound)[0]
            assert record.passed(), f"{ident}: {record.counterexample}"
            assert record.range.endswith(f"<= {bound}")

    report(2, "identity suite", body)


def test_criterion_3_generating_function_coherence(report):
    def body():
        lb = gf_catalog("lah_bell", 20)
        lb_poly = gf_catalog("lah_bell_poly", 15)
        for n in range(21):
            assert lb.egf_coefficient(n) == lah_bell_number(n)
        for n in range(16):
            assert lb_poly.egf_coefficient(n) == lah_bell_poly(n)
        bivariate = gf_catalog("bivariate_lah_bell", 12)
        degenerate = gf_catalog("degenerate_lah_bell", 12)
        degenerate_b = gf_catalog("degenerate_bell", 12)
        for n in range(13):
            assert bivariate.egf_coefficient(n) == bivariate_lah_bell_poly(n)
            assert degenerate.egf_coefficient(n) == degenerate_lah_bell_poly(n)
            assert degenerate_b.egf_coefficient(n) == degenerate_bell_poly(n)

        order = 12
        one_minus_exp_neg = ser_one(order) - identity_t(order).scale(-1).exp()
        assert gf_catalog("lah_bell", order).compose(one_minus_exp_neg) == gf_catalog(
            "bell", order
        )
        assert gf_catalog("bell_poly", order).compose(
            neg_log_one_minus_t(order)
        ) == gf_catalog("lah_bell_poly", order)

    report(3, "generating function coherence", body)


def test_criterion_4_certified_numerics(report):
    def body():
        started = time.perf_counter()
        for x in (Fraction(1, 2), Fraction(1), Fraction(3)):
            for n in range(13):
                exact_lb = lah_bell_poly(n).evaluate({"x": x}).as_rational()
                got = lah_bell_dobinski(n, x, EPS20)
                assert got.error_bound <= EPS20
                assert got.contains(exact_lb)
                exact_b = bell_poly(n).evaluate({"x": x}).as_rational()
                gotb = bell_dobinski(n, x, EPS20)
                assert gotb.error_bound <= EPS20
                assert gotb.contains(exact_b)
        assert time.perf_counter() - started < 10

    report(4, "certified numerics", body)


def test_criterion_5_degeneration(report):
    def body():
        for n in range(16):
            assert degenerate_lah_bell_poly(n).evaluate({"lam": 0}) == lah_bell_poly(n)
            assert degenerate_bell_poly(n).evaluate({"lam": 0}) == bell_poly(n)

    report(5, "degeneration at lambda=0", body)


def test_criterion_6_series_engine_round_trips(report):
    def body():
        rng = random.Random(20260819)
        order = 16
        one = ser_one(order)
        t = identity_t(order)
        for _ in range(50):
            coeffs = [Fraction(0)] + [
                Fraction(rng.randint(-40, 40), rng.randint(1, 12))
                for _ in range(order)
            ]
            f = TruncatedSeries(coeffs)
            assert (f.exp() - one).log1p() == f
            assert f.log1p().exp() == one + f
            assert (one + f).compose(t) == one + f

    report(6, "series engine round trips", body)
