"""Identity harness: reports, plans, failure paths, determinism."""

import json
from fractions import Fraction

import pytest

from runlab import identities as idn
from runlab import triangles
from runlab.exactnum import QuadExt, RatPoly

F = Fraction

REPORT_SCHEMA_KEYS = {"identity", "params", "passed", "first_failure"}
FAILURE_SCHEMA_KEYS = {"n", "point", "lhs", "rhs"}


def corrupt_triangle(builder, n, k, delta=1):
    """Wrap a triangle builder so one entry comes out wrong."""

    def wrapped(n_max):
        tri = builder(n_max)
        if tri.start <= n <= tri.max_n and k < len(tri.row(n)):
            tri.row(n)[k] += delta
        return tri

    return wrapped


class TestGrammarChecks:
    def test_runs_expansion(self):
        assert idn.check_grammar_runs(8).passed

    def test_alt_expansion(self):
        assert idn.check_grammar_alt(8).passed

    def test_eulerian(self):
        assert idn.check_dumont(8, oracle_n_max=6).passed

    def test_peaks(self):
        assert idn.check_peaks_grammar(8, oracle_n_max=6).passed

    def test_leibniz(self):
        report = idn.check_leibniz(n_max=6, cases=40)
        assert report.passed
        assert report.params["cases"] == 40


class TestPolynomialChecks:
    def test_convolutions(self):
        assert idn.check_convolutions(10).passed

    def test_recurrences(self):
        assert idn.check_recurrence_consistency(10).passed

    def test_alt_from_runs(self):
        assert idn.check_alt_from_runs(12).passed

    def test_runs_from_peaks(self):
        report = idn.check_runs_from_peaks(10)
        assert report.passed
        assert report.params["points"] >= 12


class TestPointwiseChecks:
    def test_tangent_closed_forms(self):
        report = idn.check_tangent_forms(8)
        assert report.passed
        assert report.params["points"] >= 2 * 8 + 3

    def test_tangent_w_form_by_hand(self):
        # n=2, x=3: (1/3) sigma^3 P_2(1/sigma) with sigma^2 = 2 equals W_2(3) = 2
        P2 = triangles.poly_P(2)[2]
        sigma = QuadExt.root(2)
        val = sigma**3 * P2(sigma.inverse()) / F(3)
        assert val == 2

    def test_david_barton(self):
        assert idn.check_david_barton(8).passed

    def test_david_barton_value_by_hand(self):
        # n=2, x=1/2: both sides equal 1
        x = F(1, 2)
        w = QuadExt.root(1 - x * x) / (1 + x)
        u = (1 - w) / (1 + w)
        A2 = triangles.poly_A(2)[2]
        val = ((1 + x) / 2) ** 1 * (1 + w) ** 3 * A2(u)
        assert val == 1 == triangles.poly_R(2)[2](x)

    def test_singular_points_rejected(self):
        with pytest.raises(ValueError, match="singular"):
            idn.check_tangent_forms(4, idn.SamplePlan((F(1),)))
        with pytest.raises(ValueError, match="singular"):
            idn.check_tangent_forms(4, idn.SamplePlan((F(0),)))
        with pytest.raises(ValueError, match="singular"):
            idn.check_david_barton(4, idn.SamplePlan((F(0),)))
        with pytest.raises(ValueError, match="singular"):
            idn.check_david_barton(4, idn.SamplePlan((F(3, 2),)))
        with pytest.raises(ValueError, match="singular"):
            idn.check_runs_from_peaks(4, idn.SamplePlan((F(-1),)))

    def test_default_plans_avoid_squares(self):
        plan = idn.default_plan("tangent", 30)
        assert len(plan.points) == len(set(plan.points)) == 30
        for x in plan.points:
            assert x > 1
            assert not idn._is_square(x - 1)
            assert not idn._is_square((x + 1) / (x - 1))

    def test_square_discriminants_still_work(self):
        # non-square d is a preference, not a requirement: x - 1 = 9/4 is square
        report = idn.check_tangent_forms(3, idn.SamplePlan((F(13, 4), F(7, 3), F(9, 5), F(12, 5), F(3), F(5, 2), F(4), F(5), F(6), F(7))))
        assert report.passed


class TestSeriesChecks:
    def test_carlitz_all_default_points(self):
        for x0 in idn.DEFAULT_CARLITZ_X0S:
            assert idn.check_carlitz(x0, order=8).passed

    def test_carlitz_leading_constant(self):
        # z^0 coefficient of the closed form is 1 = R(1,0) at any base point
        tri = triangles.triangle_R(1)
        assert idn._egf_coeffs(lambda n: tri.row(n + 1), F(1, 3), 0) == [F(1)]

    def test_carlitz_at_zero_reads_top_coefficients(self):
        # x0 = 0 keeps only k = n: coefficients n! * [z^n] are R(n+1, n)
        tri = triangles.triangle_R(6)
        coeffs = idn._egf_coeffs(lambda n: tri.row(n + 1), F(0), 4)
        fact = [1, 1, 2, 6, 24]
        assert [c * f for c, f in zip(coeffs, fact)] == [1, 2, 4, 10, 32]

    def test_stanley(self):
        for t0 in idn.DEFAULT_STANLEY_T0S:
            assert idn.check_stanley_gf(t0, order=8).passed

    def test_final_gf(self):
        for x0 in idn.DEFAULT_FINAL_X0S:
            assert idn.check_altsubseq_gf(x0, order=8).passed

    def test_bad_base_points_rejected(self):
        for fn in (idn.check_carlitz, idn.check_stanley_gf, idn.check_altsubseq_gf):
            with pytest.raises(ValueError):
                fn(F(1), order=4)
            with pytest.raises(ValueError):
                fn(F(-1), order=4)
            with pytest.raises(ValueError):
                fn(F(5, 3), order=4)


class TestOracleCheck:
    def test_passes(self):
        assert idn.check_oracle(6).passed


class TestFaultInjection:
    def test_corrupt_run_entry_breaks_grammar_check(self, monkeypatch):
        monkeypatch.setattr(
            triangles, "triangle_R", corrupt_triangle(triangles.triangle_R, 5, 2)
        )
        report = idn.check_grammar_runs(6)
        assert not report.passed
        assert report.first_failure is not None
        assert report.first_failure.n == 4
        assert report.first_failure.lhs != report.first_failure.rhs

    def test_corrupt_alt_entry_breaks_gf_check(self, monkeypatch):
        monkeypatch.setattr(
            triangles, "triangle_A", corrupt_triangle(triangles.triangle_A, 4, 2)
        )
        report = idn.check_altsubseq_gf(F(1, 3), order=6)
        assert not report.passed
        assert report.first_failure.n == 4

    def test_corrupt_euler_entry_breaks_oracle_check(self, monkeypatch):
        monkeypatch.setattr(
            triangles,
            "triangle_euler",
            corrupt_triangle(triangles.triangle_euler, 3, 1),
        )
        report = idn.check_oracle(4)
        assert not report.passed
        assert "descents" in report.first_failure.point

    def test_corrupt_run_entry_breaks_recurrences(self, monkeypatch):
        monkeypatch.setattr(
            triangles, "triangle_R", corrupt_triangle(triangles.triangle_R, 6, 3)
        )
        report = idn.check_recurrence_consistency(6)
        assert not report.passed

    def test_sqrt_component_failure_is_named(self, monkeypatch):
        # breaking the parity of a tangent polynomial leaves a nonzero
        # sqrt component, which must be reported as its own condition
        original = triangles.poly_P

        def skewed(n_max):
            fam = original(n_max)
            polys = list(fam.polys)
            polys[2] = polys[2] + RatPoly((0, 0, 1))
            return triangles.PolyFamily(fam.name, fam.start, tuple(polys))

        monkeypatch.setattr(triangles, "poly_P", skewed)
        report = idn.check_tangent_forms(3)
        assert not report.passed
        assert "sqrt component" in report.first_failure.point
        assert report.first_failure.rhs == "0"


class TestSuites:
    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="unknown suite"):
            idn.run_suite("everything")

    def test_reports_sorted_and_complete(self):
        reports = idn.run_suite("gf", order=5)
        ids = [r.identity for r in reports]
        assert ids == sorted(ids)
        assert len(reports) == 7  # 3 carlitz + 2 stanley + 2 final points

    def test_workers_produce_identical_output(self):
        serial = idn.run_suite("convolutions", n_max=6)
        threaded = idn.run_suite("convolutions", n_max=6, workers=4)
        assert serial == threaded

    def test_reports_serialize_deterministically(self):
        def dump(reports):
            return "\n".join(
                json.dumps(r.to_json_obj(), separators=(",", ":")) for r in reports
            )

        a = dump(idn.run_suite("gf", order=6))
        b = dump(idn.run_suite("gf", order=6))
        assert a == b

    def test_report_json_schema(self):
        reports = idn.run_suite("oracle", oracle_n_max=4)
        for r in reports:
            obj = r.to_json_obj()
            assert set(obj) == REPORT_SCHEMA_KEYS
            assert isinstance(obj["identity"], str)
            assert isinstance(obj["params"], dict)
            assert isinstance(obj["passed"], bool)
            assert obj["first_failure"] is None

    def test_failure_json_schema(self, monkeypatch):
        monkeypatch.setattr(
            triangles, "triangle_R", corrupt_triangle(triangles.triangle_R, 4, 2)
        )
        report = idn.check_grammar_runs(4)
        obj = report.to_json_obj()
        assert obj["passed"] is False
        assert set(obj["first_failure"]) == FAILURE_SCHEMA_KEYS

    def test_x0_override_narrows_gf_suite(self):
        reports = idn.run_suite(
            "gf", order=4,
            carlitz_x0s=(F(1, 5),), stanley_t0s=(F(1, 5),), final_x0s=(F(1, 5),),
        )
        assert [r.identity for r in reports] == [
            "gf/altsubseq[x0=1/5]", "gf/carlitz[x0=1/5]", "gf/stanley[t0=1/5]",
        ]
