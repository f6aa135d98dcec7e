"""Recurrence-driven integer triangles and polynomial families.

Five triangles (runs, altsubseq, peaks, leftpeaks, euler) and six
polynomial families.  Each generator applies its recurrence from the
smallest seed only; any later printed seed row is *asserted*, and every
rational recurrence step is asserted integral, so a mistranscribed
recurrence fails loudly instead of producing plausible garbage.

Triangle rows are stored dense from k = 0 (recurrences reach k-1 and
k-2, and dense rows avoid sentinel bugs at the boundaries).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import grammar
from .exactnum import RatPoly

__all__ = [
    "ConsistencyError",
    "PolyFamily",
    "Triangle",
    "poly_A",
    "poly_P",
    "poly_R",
    "poly_T",
    "poly_W",
    "poly_Wtilde",
    "triangle_A",
    "triangle_R",
    "triangle_W",
    "triangle_Wtilde",
    "triangle_euler",
]


class ConsistencyError(RuntimeError):
    """A generated family contradicts its own seeds or integrality."""


_X = RatPoly((0, 1))


@dataclass(frozen=True)
class Triangle:
    """Rows of nonnegative integers, indexed n = start.., dense from k = 0."""

    name: str
    start: int
    rows: "list[list[int]]"

    @property
    def max_n(self) -> int:
        return self.start + len(self.rows) - 1

    def indices(self) -> range:
        return range(self.start, self.max_n + 1)

    def row(self, n: int) -> "list[int]":
        if not self.start <= n <= self.max_n:
            raise ValueError(f"row {n} outside generated range "
                             f"{self.start}..{self.max_n} of triangle {self.name!r}")
        return self.rows[n - self.start]

    def entry(self, n: int, k: int) -> int:
        row = self.row(n)
        return row[k] if 0 <= k < len(row) else 0


@dataclass(frozen=True)
class PolyFamily:
    """Polynomials indexed n = start.., one family per statistic."""

    name: str
    start: int
    polys: "tuple[RatPoly, ...]"

    @property
    def max_n(self) -> int:
        return self.start + len(self.polys) - 1

    def indices(self) -> range:
        return range(self.start, self.max_n + 1)

    def __getitem__(self, n: int) -> RatPoly:
        if not self.start <= n <= self.max_n:
            raise ValueError(f"index {n} outside generated range "
                             f"{self.start}..{self.max_n} of family {self.name!r}")
        return self.polys[n - self.start]


def triangle_R(n_max: int) -> Triangle:
    """Counts of permutations of [n] by number of alternating runs.

    Rows n = 1..n_max from
    R(n,k) = k*R(n-1,k) + 2*R(n-1,k-1) + (n-k)*R(n-1,k-2),
    seeded with R(1,0) = 1.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = [[1]]
    for n in range(2, n_max + 1):
        prev = rows[-1]

        def at(k: int) -> int:
            return prev[k] if 0 <= k < len(prev) else 0

        row = [0] * n
        for k in range(1, n):
            row[k] = k * at(k) + 2 * at(k - 1) + (n - k) * at(k - 2)
        rows.append(row)
    return Triangle("runs", 1, rows)


def triangle_A(n_max: int) -> Triangle:
    """Counts of permutations of [n] by longest alternating subsequence.

    Rows n = 0..n_max from
    a_k(n) = k*a_k(n-1) + a_(k-1)(n-1) + (n-k+1)*a_(k-2)(n-1),
    seeded with a_0(0) = 1; the printed value a_1(1) = 1 is asserted.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]

        def at(k: int) -> int:
            return prev[k] if 0 <= k < len(prev) else 0

        row = [0] * (n + 1)
        for k in range(1, n + 1):
            row[k] = k * at(k) + at(k - 1) + (n - k + 1) * at(k - 2)
        rows.append(row)
    if n_max >= 1 and rows[1] != [0, 1]:
        raise ConsistencyError(f"row 1 of the altsubseq triangle is {rows[1]}, "
                               "expected [0, 1]")
    return Triangle("altsubseq", 0, rows)


def _int_rows(name: str, polys: "list[RatPoly]") -> "list[list[int]]":
    rows = []
    for p in polys:
        if not p.is_integral:
            raise ConsistencyError(f"family {name!r} produced a non-integer "
                                   f"coefficient in {p}")
        rows.append([int(c) for c in p.coeffs] or [0])
    return rows


def _recurrence_family(
    name: str,
    start: int,
    first: RatPoly,
    step: "Callable[[int, RatPoly], RatPoly]",
    seeds: "dict[int, RatPoly]",
    n_max: int,
) -> PolyFamily:
    """Run ``step`` from the smallest seed, asserting later seeds on the way."""
    if n_max < start:
        raise ValueError(f"n_max must be >= {start} for family {name!r}")
    top = max(n_max, max(seeds) if seeds else start)
    polys = [first]
    for n in range(start, top):
        nxt = step(n, polys[-1])
        if not nxt.is_integral:
            raise ConsistencyError(
                f"family {name!r}: index {n + 1} has non-integer coefficients: {nxt}"
            )
        expected = seeds.get(n + 1)
        if expected is not None and nxt != expected:
            raise ConsistencyError(
                f"family {name!r}: recurrence gives {nxt} at index {n + 1}, "
                f"seed says {expected}"
            )
        polys.append(nxt)
    return PolyFamily(name, start, tuple(polys[: n_max - start + 1]))


def poly_R(n_max: int) -> PolyFamily:
    """Run polynomials from R_(n+2) = x(nx+2)R_(n+1) + x(1-x^2)R_(n+1)'."""
    return _recurrence_family(
        "R",
        1,
        RatPoly((1,)),
        lambda n, p: RatPoly((0, 2, n - 1)) * p + RatPoly((0, 1, 0, -1)) * p.derivative(),
        {},
        n_max,
    )


def poly_T(n_max: int) -> PolyFamily:
    """Alternating-subsequence polynomials from
    T_(n+1) = x(nx+1)T_n + x(1-x^2)T_n', seeded T_0 = 1; T_1 = x asserted."""
    return _recurrence_family(
        "T",
        0,
        RatPoly((1,)),
        lambda n, p: RatPoly((0, 1, n)) * p + RatPoly((0, 1, 0, -1)) * p.derivative(),
        {1: _X},
        n_max,
    )


def poly_W(n_max: int) -> PolyFamily:
    """Interior-peak polynomials from
    W_(n+1) = (nx-x+2)W_n + 2x(1-x)W_n', seeded W_1 = 1; W_2, W_3 asserted."""
    return _recurrence_family(
        "W",
        1,
        RatPoly((1,)),
        lambda n, p: RatPoly((2, n - 1)) * p + RatPoly((0, 2, -2)) * p.derivative(),
        {2: RatPoly((2,)), 3: RatPoly((4, 2))},
        n_max,
    )


def poly_Wtilde(n_max: int) -> PolyFamily:
    """Left-peak polynomials from
    Wt_(n+1) = (nx+1)Wt_n + 2x(1-x)Wt_n', seeded Wt_0 = 1; the printed
    rows Wt_1 = 1, Wt_2 = 1+x, Wt_3 = 1+5x are asserted."""
    return _recurrence_family(
        "Wt",
        0,
        RatPoly((1,)),
        lambda n, p: RatPoly((1, n)) * p + RatPoly((0, 2, -2)) * p.derivative(),
        {1: RatPoly((1,)), 2: RatPoly((1, 1)), 3: RatPoly((1, 5))},
        n_max,
    )


def poly_P(n_max: int) -> PolyFamily:
    """Tangent derivative polynomials: P_0 = x, P_(n+1) = (1+x^2)P_n'."""
    return _recurrence_family(
        "P",
        0,
        _X,
        lambda n, p: RatPoly((1, 0, 1)) * p.derivative(),
        {},
        n_max,
    )


def triangle_W(n_max: int) -> Triangle:
    """Interior-peak counts W(n,k); coefficient rows of poly_W."""
    return Triangle("peaks", 1, _int_rows("W", list(poly_W(n_max).polys)))


def triangle_Wtilde(n_max: int) -> Triangle:
    """Left-peak counts; coefficient rows of poly_Wtilde."""
    return Triangle("leftpeaks", 0, _int_rows("Wt", list(poly_Wtilde(n_max).polys)))


def triangle_euler(n_max: int) -> Triangle:
    """Descent counts, expanded from the two-letter substitution grammar
    {x -> xy, y -> xy}: the n-th derivative of x is
    sum_k E(n,k) x^(k+1) y^(n-k), and E(n,k) is the euler row."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    g = grammar.builtin("dumont")
    rows = []
    p = grammar.MPoly.letter("x")
    for n in range(1, n_max + 1):
        p = grammar.d_apply(g, p)
        row = [0] * n
        for mono, c in p.terms():
            k = mono.degree_of("x") - 1
            if not (0 <= k < n and mono.degree_of("y") == n - k
                    and mono.total_degree == n + 1):
                raise ConsistencyError(
                    f"unexpected monomial {mono} in derivative {n} of x"
                )
            row[k] = c
        rows.append(row)
    return Triangle("euler", 1, rows)


def poly_A(n_max: int) -> PolyFamily:
    """Descent polynomials A_n(x) = x * sum_k E(n,k) x^k from the euler rows."""
    tri = triangle_euler(n_max)
    polys = tuple(RatPoly([0] + tri.row(n)) for n in tri.indices())
    return PolyFamily("A", 1, polys)
