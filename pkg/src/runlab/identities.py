"""Executable identity checks with structured pass/fail reports.

Each ``check_*`` function verifies one exact relation between the
grammar expansions, the recurrence-generated triangles/polynomials, the
brute-force oracle, and the closed forms/generating functions -- all in
exact arithmetic, so a check either passes identically or returns the
first counterexample rendered exactly.

Three kinds of verification appear:

* structural equality of polynomials / multivariate expansions,
* pointwise evaluation of radical identities in Q(sqrt(d)) at enough
  rational points to certify the underlying polynomial identity (the
  degree bound, <= 2n+2 after clearing denominators, is noted per
  check), with the sqrt-component of every evaluation required to vanish
  exactly as its own named condition,
* coefficient-by-coefficient comparison of truncated series against
  triangle-derived exponential generating function coefficients.

Reports are deterministic: the same inputs produce byte-identical
serialized output.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb, isqrt
from typing import Callable, Iterator, Mapping, Sequence

from . import grammar, permcore, triangles
from .exactnum import (
    Fraction,
    PowerSeries,
    QuadExt,
    RatPoly,
    Rational,
    cos_series,
    exp_series,
    sin_series,
)

__all__ = [
    "CheckFailure",
    "CheckReport",
    "SamplePlan",
    "SUITES",
    "check_alt_from_runs",
    "check_altsubseq_gf",
    "check_carlitz",
    "check_convolutions",
    "check_david_barton",
    "check_dumont",
    "check_grammar_alt",
    "check_grammar_runs",
    "check_leibniz",
    "check_oracle",
    "check_peaks_grammar",
    "check_recurrence_consistency",
    "check_runs_from_peaks",
    "check_stanley_gf",
    "check_tangent_forms",
    "default_plan",
    "run_suite",
]

DEFAULT_ORDER = 12
DEFAULT_CARLITZ_X0S = (Fraction(0), Fraction(1, 3), Fraction(1, 2))
DEFAULT_STANLEY_T0S = (Fraction(1, 3), Fraction(1, 2))
DEFAULT_FINAL_X0S = (Fraction(1, 3), Fraction(1, 2))


@dataclass(frozen=True)
class CheckFailure:
    """First counterexample of a failed check, rendered exactly."""

    n: int
    point: str
    lhs: str
    rhs: str

    def to_json_obj(self) -> dict:
        return {"n": self.n, "point": self.point, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class CheckReport:
    identity: str
    params: "dict[str, object]"
    passed: bool
    first_failure: "CheckFailure | None" = None

    def to_json_obj(self) -> dict:
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "passed": self.passed,
            "first_failure": None
            if self.first_failure is None
            else self.first_failure.to_json_obj(),
        }


def _passed(identity: str, params: dict) -> CheckReport:
    return CheckReport(identity, params, True, None)


def _failed(identity: str, params: dict, n: int, point: str, lhs, rhs) -> CheckReport:
    return CheckReport(identity, params, False, CheckFailure(n, point, str(lhs), str(rhs)))


# ----------------------------------------------------------------------
# Sample plans for the pointwise radical checks.


@dataclass(frozen=True)
class SamplePlan:
    """Rational sample points, already filtered for the target identity."""

    points: "tuple[Fraction, ...]"

    def __len__(self):
        return len(self.points)


def _is_square(q: Fraction) -> bool:
    if q < 0:
        return False
    return (
        isqrt(q.numerator) ** 2 == q.numerator
        and isqrt(q.denominator) ** 2 == q.denominator
    )


def _pool() -> Iterator[Fraction]:
    """Deterministic stream of small rationals: 1/2, -1/2, 1/3, -1/3, 2/3, ..."""
    q = 2
    while True:
        for p in range(1, q):
            if Fraction(p, q).denominator == q:  # gcd(p, q) == 1
                yield Fraction(p, q)
                yield Fraction(-p, q)
        q += 1


def _take(count: int, keep: "Callable[[Fraction], bool]",
          transform: "Callable[[Fraction], Fraction] | None" = None) -> SamplePlan:
    out = []
    for x in _pool():
        if transform is not None:
            x = transform(x)
        if keep(x):
            out.append(x)
            if len(out) == count:
                return SamplePlan(tuple(out))
    raise AssertionError("unreachable: the rational pool is infinite")


def default_plan(identity: str, count: int) -> SamplePlan:
    """The stock sample plan for one of the pointwise checks.

    ``identity`` is one of ``runs-from-peaks``, ``tangent``,
    ``david-barton``.  Points avoid each identity's singular values and
    prefer non-square discriminants so the quadratic extension is a
    genuine field.
    """
    if identity == "runs-from-peaks":
        return _take(count, lambda x: x != -1)
    if identity == "tangent":
        # x in (1, 2): x-1 positive; skip squares of both discriminants
        return _take(
            count,
            lambda x: x > 1
            and not _is_square(x - 1)
            and not _is_square((x + 1) / (x - 1)),
            transform=lambda r: 1 + r,
        )
    if identity == "david-barton":
        return _take(count, lambda x: not _is_square(1 - x * x))
    raise ValueError(f"no default plan for identity {identity!r}")


def _require(plan: SamplePlan, singular: "Callable[[Fraction], bool]", what: str) -> None:
    for x in plan.points:
        if singular(x):
            raise ValueError(f"sample point {x} is singular for {what}")


# ----------------------------------------------------------------------
# Grammar expansions vs. triangles and oracle.


def _expansion(rows_entry: "Callable[[int], list[int]]", n: int,
               x_exp: int, k_min: int) -> grammar.MPoly:
    """Build x^x_exp * sum_k row[k] y^k z^(n-k) as an MPoly."""
    row = rows_entry(n)
    terms = []
    for k in range(k_min, len(row)):
        if row[k]:
            terms.append(
                (grammar.Monomial({"x": x_exp, "y": k, "z": n - k}), row[k])
            )
    return grammar.MPoly(terms)


def check_grammar_runs(n_max: int = 12) -> CheckReport:
    """Iterated derivatives of x^2 under the main grammar carry the run
    triangle: the n-th derivative equals x^2 sum_k R(n+1,k) y^k z^(n-k)."""
    params = {"n_max": n_max}
    g = grammar.builtin("main")
    tri = triangles.triangle_R(n_max + 1)
    p = grammar.MPoly.monomial({"x": 2})
    for n in range(1, n_max + 1):
        p = grammar.d_apply(g, p)
        expected = _expansion(lambda m: tri.row(m + 1), n, x_exp=2, k_min=1)
        if p != expected:
            return _failed("grammar/runs", params, n, "derivative of x^2", p, expected)
    return _passed("grammar/runs", params)


def check_grammar_alt(n_max: int = 12) -> CheckReport:
    """Iterated derivatives of x under the main grammar carry the
    altsubseq triangle: the n-th derivative is x sum_k a_k(n) y^k z^(n-k)."""
    params = {"n_max": n_max}
    g = grammar.builtin("main")
    tri = triangles.triangle_A(n_max)
    p = grammar.MPoly.letter("x")
    for n in range(1, n_max + 1):
        p = grammar.d_apply(g, p)
        expected = _expansion(tri.row, n, x_exp=1, k_min=1)
        if p != expected:
            return _failed("grammar/altsubseq", params, n, "derivative of x", p, expected)
    return _passed("grammar/altsubseq", params)


def _hist_str(counts: "Mapping[int, int]") -> str:
    return "{" + ", ".join(f"{k}:{v}" for k, v in sorted(counts.items())) + "}"


def _row_counts(row: "list[int]") -> "dict[int, int]":
    return {k: v for k, v in enumerate(row) if v}


def check_dumont(n_max: int = 12, oracle_n_max: int = 8) -> CheckReport:
    """The two-letter grammar {x -> xy, y -> xy} expands descent counts:
    the n-th derivative of x is sum_k E(n,k) x^(k+1) y^(n-k).

    Coefficients are compared against the euler triangle for n <= n_max
    and against the brute-force descent histogram for n <= oracle_n_max.
    """
    params = {"n_max": n_max, "oracle_n_max": oracle_n_max}
    g = grammar.builtin("dumont")
    tri = triangles.triangle_euler(n_max)
    p = grammar.MPoly.letter("x")
    for n in range(1, n_max + 1):
        p = grammar.d_apply(g, p)
        row = tri.row(n)
        expected = grammar.MPoly(
            (grammar.Monomial({"x": k + 1, "y": n - k}), row[k])
            for k in range(n)
            if row[k]
        )
        if p != expected:
            return _failed("grammar/eulerian", params, n, "derivative of x", p, expected)
        if n <= oracle_n_max:
            dist = permcore.distribution(permcore.Stat.DESCENTS, n)
            if _row_counts(row) != dist.counts:
                return _failed(
                    "grammar/eulerian", params, n, f"descent histogram over S_{n}",
                    _hist_str(_row_counts(row)), _hist_str(dist.counts),
                )
    return _passed("grammar/eulerian", params)


def check_peaks_grammar(n_max: int = 12, oracle_n_max: int = 8) -> CheckReport:
    """The grammar {y -> yz, z -> y^2} expands both peak triangles:
    derivatives of y carry left-peak counts on monomials y^(2k+1) z^(n-2k),
    derivatives of z carry interior-peak counts on y^(2k+2) z^(n-2k-1)."""
    params = {"n_max": n_max, "oracle_n_max": oracle_n_max}
    ident = "grammar/peaks"
    g = grammar.builtin("peaks")
    W = triangles.poly_W(n_max)
    Wt = triangles.poly_Wtilde(n_max)
    py = grammar.MPoly.letter("y")
    pz = grammar.MPoly.letter("z")
    if py != grammar.MPoly.monomial({"y": 1}, int(Wt[0].coefficient(0))):
        return _failed(ident, params, 0, "derivative 0 of y", py, Wt[0])
    for n in range(1, n_max + 1):
        py = grammar.d_apply(g, py)
        pz = grammar.d_apply(g, pz)
        expected_y = grammar.MPoly(
            (grammar.Monomial({"y": 2 * k + 1, "z": n - 2 * k}), int(c))
            for k, c in enumerate(Wt[n].coeffs)
            if c
        )
        if py != expected_y:
            return _failed(ident, params, n, "derivative of y", py, expected_y)
        expected_z = grammar.MPoly(
            (grammar.Monomial({"y": 2 * k + 2, "z": n - 2 * k - 1}), int(c))
            for k, c in enumerate(W[n].coeffs)
            if c
        )
        if pz != expected_z:
            return _failed(ident, params, n, "derivative of z", pz, expected_z)
        if n <= oracle_n_max:
            peaks = permcore.distribution(permcore.Stat.INTERIOR_PEAKS, n)
            wrow = {k: int(c) for k, c in enumerate(W[n].coeffs) if c}
            if wrow != peaks.counts:
                return _failed(ident, params, n, f"interior-peak histogram over S_{n}",
                               _hist_str(wrow), _hist_str(peaks.counts))
            lpeaks = permcore.distribution(permcore.Stat.LEFT_PEAKS, n)
            wtrow = {k: int(c) for k, c in enumerate(Wt[n].coeffs) if c}
            if wtrow != lpeaks.counts:
                return _failed(ident, params, n, f"left-peak histogram over S_{n}",
                               _hist_str(wtrow), _hist_str(lpeaks.counts))
    return _passed(ident, params)


def _random_mpoly(rng: random.Random, letters: "tuple[str, ...]") -> grammar.MPoly:
    terms = []
    for _ in range(rng.randint(1, 3)):
        mono = {l: rng.randint(0, 2) for l in letters}
        terms.append((grammar.Monomial(mono), rng.randint(1, 3)))
    return grammar.MPoly(terms)


def check_leibniz(n_max: int = 10, cases: int = 100, seed: int = 20240801) -> CheckReport:
    """Iterated product rule: D^n(u*v) = sum_k C(n,k) D^k(u) D^(n-k)(v)
    over seeded random u, v and all four stock grammars."""
    params = {"n_max": n_max, "cases": cases, "seed": seed}
    rng = random.Random(seed)
    names = sorted(grammar.BUILTIN_GRAMMARS)
    for case in range(cases):
        name = rng.choice(names)
        g = grammar.builtin(name)
        letters = tuple(sorted(g.alphabet))
        u = _random_mpoly(rng, letters)
        v = _random_mpoly(rng, letters)
        n = rng.randint(0, n_max)
        if not grammar.leibniz_check(g, u, v, n):
            lhs = grammar.d_power(g, u * v, n)
            rhs = grammar.MPoly.zero()
            for k in range(n + 1):
                rhs = rhs + comb(n, k) * (
                    grammar.d_power(g, u, k) * grammar.d_power(g, v, n - k)
                )
            return _failed(
                "grammar/leibniz", params, n,
                f"case {case}: grammar={name}, u={u}, v={v}", lhs, rhs,
            )
    return _passed("grammar/leibniz", params)


# ----------------------------------------------------------------------
# Polynomial identities (exact polynomial arithmetic).


def check_convolutions(n_max: int = 20) -> CheckReport:
    """Five binomial convolution formulas tying together the run,
    altsubseq and peak polynomial families, e.g.
    R_(n+1) = sum_k C(n,k) T_k T_(n-k); peak factors enter at x^2."""
    params = {"n_max": n_max}
    ident = "poly/convolutions"
    T = triangles.poly_T(n_max + 1)
    R = triangles.poly_R(n_max + 2)
    W = triangles.poly_W(n_max)
    Wt = triangles.poly_Wtilde(n_max)
    x = RatPoly((0, 1))
    x2 = RatPoly((0, 0, 1))
    for n in range(1, n_max + 1):
        c = [comb(n, k) for k in range(n + 1)]
        rhs = sum((c[k] * (T[k] * T[n - k]) for k in range(n + 1)), RatPoly())
        if rhs != R[n + 1]:
            return _failed(ident, params, n,
                           "R_(n+1) = sum C(n,k) T_k T_(n-k)", R[n + 1], rhs)
        rhs = 2 * sum((c[k] * (T[k] * T[n - k + 1]) for k in range(n + 1)), RatPoly())
        if rhs != R[n + 2]:
            return _failed(ident, params, n,
                           "R_(n+2) = 2 sum C(n,k) T_k T_(n-k+1)", R[n + 2], rhs)
        rhs = 2 * x * Wt[n].stretch(2) + 2 * x * sum(
            (c[k] * (R[k + 1] * Wt[n - k].stretch(2)) for k in range(1, n + 1)),
            RatPoly(),
        )
        if rhs != R[n + 2]:
            return _failed(ident, params, n,
                           "R_(n+2) = 2x Wt_n(x^2) + 2x sum C(n,k) R_(k+1) Wt_(n-k)(x^2)",
                           R[n + 2], rhs)
        rhs = x * sum(
            (c[k] * (T[k] * Wt[n - k].stretch(2)) for k in range(n + 1)), RatPoly()
        )
        if rhs != T[n + 1]:
            return _failed(ident, params, n,
                           "T_(n+1) = x sum C(n,k) T_k Wt_(n-k)(x^2)", T[n + 1], rhs)
        rhs = T[n] + x2 * sum(
            (c[k] * (T[k] * W[n - k].stretch(2)) for k in range(n)), RatPoly()
        )
        if rhs != T[n + 1]:
            return _failed(ident, params, n,
                           "T_(n+1) = T_n + x^2 sum C(n,k) T_k W_(n-k)(x^2)",
                           T[n + 1], rhs)
    return _passed(ident, params)


def check_recurrence_consistency(n_max: int = 20) -> CheckReport:
    """Triangle-generated polynomials satisfy the differential
    recurrences exactly: the rows of the run triangle obey
    R_(n+2) = x(nx+2)R_(n+1) + x(1-x^2)R_(n+1)', and the altsubseq rows
    obey T_(n+1) = x(nx+1)T_n + x(1-x^2)T_n'."""
    params = {"n_max": n_max}
    ident = "poly/recurrences"
    tri_r = triangles.triangle_R(n_max + 2)
    tri_a = triangles.triangle_A(n_max + 1)
    r = {n: RatPoly(tri_r.row(n)) for n in tri_r.indices()}
    t = {n: RatPoly(tri_a.row(n)) for n in tri_a.indices()}
    for n in range(0, n_max + 1):
        rhs = RatPoly((0, 2, n)) * r[n + 1] + RatPoly((0, 1, 0, -1)) * r[n + 1].derivative()
        if rhs != r[n + 2]:
            return _failed(ident, params, n,
                           "R_(n+2) = x(nx+2)R_(n+1) + x(1-x^2)R_(n+1)'",
                           r[n + 2], rhs)
        rhs = RatPoly((0, 1, n)) * t[n] + RatPoly((0, 1, 0, -1)) * t[n].derivative()
        if rhs != t[n + 1]:
            return _failed(ident, params, n,
                           "T_(n+1) = x(nx+1)T_n + x(1-x^2)T_n'", t[n + 1], rhs)
    return _passed(ident, params)


def check_alt_from_runs(n_max: int = 25) -> CheckReport:
    """T_n(x) = (1+x)/2 * R_n(x) for n >= 2, by exact polynomial arithmetic."""
    params = {"n_max": n_max}
    ident = "closed/alt-from-runs"
    half_shift = RatPoly((Fraction(1, 2), Fraction(1, 2)))
    T = triangles.poly_T(n_max)
    R = triangles.poly_R(n_max)
    for n in range(2, n_max + 1):
        rhs = half_shift * R[n]
        if rhs != T[n]:
            return _failed(ident, params, n, "T_n = (1+x)/2 R_n", T[n], rhs)
    return _passed(ident, params)


# ----------------------------------------------------------------------
# Closed forms verified pointwise in Q(sqrt(d)).


def check_runs_from_peaks(n_max: int = 20, plan: "SamplePlan | None" = None) -> CheckReport:
    """Run and altsubseq polynomials from the peak polynomials:
    R_n(x) = x (1+x)^(n-2) / 2^(n-2) * W_n(2x/(1+x))   for n >= 2,
    T_n(x) = x (1+x)^(n-1) / 2^(n-1) * W_n(2x/(1+x))   for n >= 1.

    Both sides are rational at rational x; after clearing (1+x) powers
    the degree is at most n, so the n_max+2 sample points certify every
    n <= n_max.
    """
    if plan is None:
        plan = default_plan("runs-from-peaks", n_max + 2)
    _require(plan, lambda x: x == -1, "W_n(2x/(1+x))")
    params = {"n_max": n_max, "points": len(plan)}
    ident = "closed/runs-from-peaks"
    W = triangles.poly_W(n_max)
    R = triangles.poly_R(n_max)
    T = triangles.poly_T(n_max)
    for n in range(1, n_max + 1):
        for x in plan.points:
            wn = W[n](2 * x / (1 + x))
            rhs = x * (1 + x) ** (n - 1) / 2 ** (n - 1) * wn
            if rhs != T[n](x):
                return _failed(ident, params, n, f"T-form x={x}", T[n](x), rhs)
            if n >= 2:
                rhs = x * (1 + x) ** (n - 2) / 2 ** (n - 2) * wn
                if rhs != R[n](x):
                    return _failed(ident, params, n, f"R-form x={x}", R[n](x), rhs)
    return _passed(ident, params)


def check_tangent_forms(n_max: int = 12, plan: "SamplePlan | None" = None) -> CheckReport:
    """Both closed forms through the tangent derivative polynomials:
    W_n(x) = (1/x) (x-1)^((n+1)/2) P_n(1/sqrt(x-1)),
    R_n(x) = ((x+1)/2)^(n-1) ((x-1)/(x+1))^((n+1)/2) P_n(sqrt((x+1)/(x-1))),
    both for n >= 2.

    Half-integer powers are evaluated in Q(sigma), sigma^2 = x-1 (resp.
    Q(tau), tau^2 = (x+1)/(x-1)); the parity of P_n makes each right-hand
    side land in Q, and the sqrt component is asserted zero before the
    rational parts are compared.  After clearing denominators the degree
    is at most 2n+2, so 2*n_max+3 points certify every n <= n_max.
    """
    if plan is None:
        plan = default_plan("tangent", 2 * n_max + 3)
    _require(plan, lambda x: x in (0, 1, -1), "the tangent closed forms")
    params = {"n_max": n_max, "points": len(plan)}
    ident = "closed/tangent"
    W = triangles.poly_W(n_max)
    R = triangles.poly_R(n_max)
    P = triangles.poly_P(n_max)
    for n in range(2, n_max + 1):
        for x in plan.points:
            sigma = QuadExt.root(x - 1)
            val = sigma ** (n + 1) * P[n](sigma.inverse()) / x
            if val.b != 0:
                return _failed(ident, params, n,
                               f"W-form x={x}: sqrt component", val, 0)
            if val.a != W[n](x):
                return _failed(ident, params, n, f"W-form x={x}", W[n](x), val.a)
            tau = QuadExt.root((x + 1) / (x - 1))
            val = ((x + 1) / 2) ** (n - 1) * tau ** (-(n + 1)) * P[n](tau)
            if val.b != 0:
                return _failed(ident, params, n,
                               f"R-form x={x}: sqrt component", val, 0)
            if val.a != R[n](x):
                return _failed(ident, params, n, f"R-form x={x}", R[n](x), val.a)
    return _passed(ident, params)


def check_david_barton(n_max: int = 12, plan: "SamplePlan | None" = None) -> CheckReport:
    """The run polynomials from the descent polynomials:
    R_n(x) = ((1+x)/2)^(n-1) (1+w)^(n+1) A_n((1-w)/(1+w))  for n >= 2,
    with w = sqrt((1-x)/(1+x)), realized as rho/(1+x) in Q(rho),
    rho^2 = 1-x^2.  Points stay in (-1,1) \\ {0}; the sqrt component of
    every evaluation must vanish exactly.
    """
    if plan is None:
        plan = default_plan("david-barton", 2 * n_max + 3)
    _require(plan, lambda x: x == 0 or abs(x) >= 1, "the descent closed form")
    params = {"n_max": n_max, "points": len(plan)}
    ident = "closed/david-barton"
    A = triangles.poly_A(n_max)
    R = triangles.poly_R(n_max)
    for n in range(2, n_max + 1):
        for x in plan.points:
            w = QuadExt.root(1 - x * x) / (1 + x)
            u = (1 - w) / (1 + w)
            val = ((1 + x) / 2) ** (n - 1) * (1 + w) ** (n + 1) * A[n](u)
            if val.b != 0:
                return _failed(ident, params, n, f"x={x}: sqrt component", val, 0)
            if val.a != R[n](x):
                return _failed(ident, params, n, f"x={x}", R[n](x), val.a)
    return _passed(ident, params)


# ----------------------------------------------------------------------
# Exponential generating functions, coefficient by coefficient.


def _egf_coeffs(rows: "Callable[[int], list[int]]", x0: Fraction, order: int) -> "list[Fraction]":
    """Coefficient of z^n: (1/n!) sum_k row(n)[k] x0^(n-k)."""
    out = []
    fact = 1
    for n in range(order + 1):
        if n:
            fact *= n
        row = rows(n)
        total = sum(row[k] * x0 ** (n - k) for k in range(len(row)))
        out.append(Fraction(total, fact))
    return out


def _check_series(ident: str, params: dict, rhs: PowerSeries,
                  expected: "list[Fraction]") -> CheckReport:
    for n, want in enumerate(expected):
        got = rhs.coefficient(n)
        if got.b != 0:
            return _failed(ident, params, n, f"z^{n}: sqrt component", got, 0)
        if got.a != want:
            return _failed(ident, params, n, f"z^{n}", want, got.a)
    return _passed(ident, params)


def check_carlitz(x0: Rational = Fraction(1, 2), order: int = DEFAULT_ORDER) -> CheckReport:
    """Closed EGF for the run triangle read along antidiagonals:
    sum_n z^n/n! sum_k R(n+1,k) x0^(n-k)
      = (1-x0)/(1+x0) * ((rho + sin(z rho)) / (x0 - cos(z rho)))^2,
    rho = sqrt(1-x0^2), compared through z^order."""
    x0 = Fraction(x0)
    if not -1 < x0 < 1:
        raise ValueError(f"base point {x0} must lie in (-1, 1)")
    if order < 1:
        raise ValueError("order must be >= 1")
    params = {"x0": str(x0), "order": order}
    ident = f"gf/carlitz[x0={x0}]"
    rho = QuadExt.root(1 - x0 * x0)
    q = (rho + sin_series(rho, order)) / (x0 - cos_series(rho, order))
    rhs = (1 - x0) / (1 + x0) * (q * q)
    tri = triangles.triangle_R(order + 1)
    expected = _egf_coeffs(lambda n: tri.row(n + 1), x0, order)
    return _check_series(ident, params, rhs, expected)


def check_stanley_gf(t0: Rational = Fraction(1, 2), order: int = DEFAULT_ORDER) -> CheckReport:
    """Closed EGF for the altsubseq polynomials:
    sum_n T_n(t0) x^n/n!
      = (1-t0) (1 + rho + 2 t0 e^(rho x) + (1-rho) e^(2 rho x))
              / (1 + rho - t0^2 + (1 - rho - t0^2) e^(2 rho x)),
    rho = sqrt(1-t0^2), compared through x^order."""
    t0 = Fraction(t0)
    if not -1 < t0 < 1:
        raise ValueError(f"base point {t0} must lie in (-1, 1)")
    if order < 1:
        raise ValueError("order must be >= 1")
    params = {"t0": str(t0), "order": order}
    ident = f"gf/stanley[t0={t0}]"
    rho = QuadExt.root(1 - t0 * t0)
    e1 = exp_series(rho, order)
    e2 = exp_series(rho * 2, order)
    num = (1 + rho) + e1 * (2 * t0) + e2 * (1 - rho)
    den = ((1 - t0 * t0) + rho) + e2 * ((1 - t0 * t0) - rho)
    rhs = num / den * (1 - t0)
    T = triangles.poly_T(order)
    expected = []
    fact = 1
    for n in range(order + 1):
        if n:
            fact *= n
        expected.append(T[n](t0) / fact)
    return _check_series(ident, params, rhs, expected)


def check_altsubseq_gf(x0: Rational = Fraction(1, 2), order: int = DEFAULT_ORDER) -> CheckReport:
    """Closed EGF for the altsubseq triangle read along antidiagonals:
    sum_n z^n/n! sum_k a_k(n) x0^(n-k)
      = -sqrt((1-x0)/(1+x0)) (rho + sin(z rho)) / (x0 - cos(z rho)),
    with the positive branch sqrt((1-x0)/(1+x0)) = rho/(1+x0)."""
    x0 = Fraction(x0)
    if not -1 < x0 < 1:
        raise ValueError(f"base point {x0} must lie in (-1, 1)")
    if order < 1:
        raise ValueError("order must be >= 1")
    params = {"x0": str(x0), "order": order}
    ident = f"gf/altsubseq[x0={x0}]"
    rho = QuadExt.root(1 - x0 * x0)
    q = (rho + sin_series(rho, order)) / (x0 - cos_series(rho, order))
    rhs = q * (-(rho / (1 + x0)))
    tri = triangles.triangle_A(order)
    expected = _egf_coeffs(tri.row, x0, order)
    return _check_series(ident, params, rhs, expected)


# ----------------------------------------------------------------------
# Oracle equivalence.


def check_oracle(n_max: int = 8) -> CheckReport:
    """All five triangles match brute-force histograms over S_n, n <= n_max."""
    params = {"n_max": n_max}
    ident = "oracle/triangles"
    sources = [
        (permcore.Stat.RUNS, triangles.triangle_R(n_max)),
        (permcore.Stat.LONGEST_ALT_SUBSEQ, triangles.triangle_A(n_max)),
        (permcore.Stat.INTERIOR_PEAKS, triangles.triangle_W(n_max)),
        (permcore.Stat.LEFT_PEAKS, triangles.triangle_Wtilde(n_max)),
        (permcore.Stat.DESCENTS, triangles.triangle_euler(n_max)),
    ]
    for n in range(1, n_max + 1):
        for stat, tri in sources:
            dist = permcore.distribution(stat, n)
            expected = _row_counts(tri.row(n))
            if expected != dist.counts:
                return _failed(ident, params, n, f"{stat.value} over S_{n}",
                               _hist_str(dist.counts), _hist_str(expected))
    return _passed(ident, params)


# ----------------------------------------------------------------------
# Suites.

SUITES = ("all", "grammar", "convolutions", "closed-forms", "gf", "oracle")


def _suite_thunks(
    suite: str,
    *,
    n_max: "int | None" = None,
    oracle_n_max: "int | None" = None,
    order: "int | None" = None,
    points: "int | None" = None,
    carlitz_x0s: "Sequence[Rational] | None" = None,
    stanley_t0s: "Sequence[Rational] | None" = None,
    final_x0s: "Sequence[Rational] | None" = None,
) -> "list[Callable[[], CheckReport]]":
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r} (known: {', '.join(SUITES)})")
    order = DEFAULT_ORDER if order is None else order
    oracle_cap = oracle_n_max if oracle_n_max is not None else min(n_max or 8, 8)
    oracle_cap = min(oracle_cap, permcore.MAX_ENUM_N)

    def bound(default: int) -> int:
        return n_max if n_max is not None else default

    def plan_for(kind: str) -> "SamplePlan | None":
        return default_plan(kind, points) if points is not None else None

    thunks: "list[Callable[[], CheckReport]]" = []
    if suite in ("all", "grammar"):
        thunks += [
            lambda: check_grammar_runs(bound(12)),
            lambda: check_grammar_alt(bound(12)),
            lambda: check_dumont(bound(12), oracle_cap),
            lambda: check_peaks_grammar(bound(12), oracle_cap),
            lambda: check_leibniz(bound(10)),
        ]
    if suite in ("all", "convolutions"):
        thunks += [
            lambda: check_convolutions(bound(20)),
            lambda: check_recurrence_consistency(bound(20)),
        ]
    if suite in ("all", "closed-forms"):
        thunks += [
            lambda: check_alt_from_runs(bound(25)),
            lambda: check_runs_from_peaks(bound(20), plan_for("runs-from-peaks")),
            lambda: check_tangent_forms(bound(12), plan_for("tangent")),
            lambda: check_david_barton(bound(12), plan_for("david-barton")),
        ]
    if suite in ("all", "gf"):
        for x0 in carlitz_x0s if carlitz_x0s is not None else DEFAULT_CARLITZ_X0S:
            thunks.append(lambda x0=x0: check_carlitz(x0, order))
        for t0 in stanley_t0s if stanley_t0s is not None else DEFAULT_STANLEY_T0S:
            thunks.append(lambda t0=t0: check_stanley_gf(t0, order))
        for x0 in final_x0s if final_x0s is not None else DEFAULT_FINAL_X0S:
            thunks.append(lambda x0=x0: check_altsubseq_gf(x0, order))
    if suite in ("all", "oracle"):
        thunks.append(lambda: check_oracle(oracle_cap))
    return thunks


def run_suite(suite: str = "all", *, workers: int = 1, **options) -> "list[CheckReport]":
    """Run one suite and return its reports sorted by identity id.

    Checks are independent and pure, so ``workers > 1`` may evaluate them
    concurrently; the sorted output is identical either way.
    """
    thunks = _suite_thunks(suite, **options)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(t) for t in thunks]
            reports = [f.result() for f in futures]
    else:
        reports = [t() for t in thunks]
    return sorted(reports, key=lambda r: r.identity)
