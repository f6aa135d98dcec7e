"""Brute-force permutation statistics: the ground-truth oracle.

Everything here is a direct transcription of the definitions -- scan for
direction changes, scan for peaks, quadratic DP for the longest
alternating subsequence -- evaluated over exhaustively enumerated
symmetric groups.  The triangle generators are validated against these
histograms, so this module must stay independent of them.

Conventions for the one-element permutation: 0 alternating runs, 0 peaks,
0 left peaks, 0 descents, and a longest alternating subsequence of 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "MAX_ENUM_N",
    "Permutation",
    "Stat",
    "StatDistribution",
    "alternating_runs",
    "descents",
    "distribution",
    "enumerate_sn",
    "interior_peaks",
    "left_peaks",
    "longest_alt_subseq",
]

#: 10! permutations is the practical ceiling for exhaustive enumeration.
MAX_ENUM_N = 10


class Stat(Enum):
    """Statistics with exact distributions over S_n."""

    RUNS = "runs"
    INTERIOR_PEAKS = "peaks"
    LEFT_PEAKS = "leftpeaks"
    LONGEST_ALT_SUBSEQ = "altsubseq"
    DESCENTS = "descents"


class Permutation:
    """A permutation of [n] in one-line notation; bijectivity is checked."""

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[int]):
        vals = tuple(values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise ValueError(f"not a permutation of 1..{len(vals)}: {vals!r}")
        self._values = vals

    @classmethod
    def _from_trusted(cls, word: "tuple[int, ...]") -> "Permutation":
        p = object.__new__(cls)
        p._values = word
        return p

    @property
    def values(self) -> "tuple[int, ...]":
        return self._values

    def complement(self) -> "Permutation":
        """The value-complement i -> n+1-i, which swaps peaks and valleys."""
        n = len(self._values)
        return Permutation._from_trusted(tuple(n + 1 - v for v in self._values))

    def __len__(self):
        return len(self._values)

    def __iter__(self):
        return iter(self._values)

    def __getitem__(self, i):
        return self._values[i]

    def __eq__(self, other):
        if isinstance(other, Permutation):
            return self._values == other._values
        return NotImplemented

    def __hash__(self):
        return hash(self._values)

    def __repr__(self):
        return f"Permutation({list(self._values)!r})"


PermLike = Union[Permutation, Sequence[int]]


def _word(perm: PermLike) -> "tuple[int, ...]":
    if isinstance(perm, Permutation):
        return perm.values
    return tuple(perm)


def _check_enum_n(n: int) -> None:
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"n must be between 1 and {MAX_ENUM_N}, got {n}")


def enumerate_sn(n: int) -> Iterator[Permutation]:
    """Yield all n! permutations of [n] in lexicographic order."""
    _check_enum_n(n)
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation._from_trusted(word)


def alternating_runs(perm: PermLike) -> int:
    """Number of maximal monotone segments: 1 + number of direction changes.

    A single element has no runs under the convention used throughout
    this package.
    """
    w = _word(perm)
    n = len(w)
    if n < 2:
        return 0
    changes = 0
    for i in range(1, n - 1):
        if (w[i - 1] < w[i]) != (w[i] < w[i + 1]):
            changes += 1
    return changes + 1


def interior_peaks(perm: PermLike) -> int:
    """Count positions 1 < i < n with w[i-1] < w[i] > w[i+1]."""
    w = _word(perm)
    return sum(
        1 for i in range(1, len(w) - 1) if w[i - 1] < w[i] > w[i + 1]
    )


def left_peaks(perm: PermLike) -> int:
    """Like interior peaks, but position 1 counts too (sentinel w[0] = 0)."""
    w = _word(perm)
    n = len(w)
    if n < 2:
        return 0
    count = 1 if w[0] > w[1] else 0
    for i in range(1, n - 1):
        if w[i - 1] < w[i] > w[i + 1]:
            count += 1
    return count


def longest_alt_subseq(perm: PermLike) -> int:
    """Length of the longest subsequence of shape a > b < c > d < ...

    The first comparison must be a descent; singletons count, so the
    result is at least 1 for nonempty input.  O(n^2) DP over (end
    position, next required comparison); the exhaustive 2^n subsequence
    scan in the test suite guards this.
    """
    w = _word(perm)
    n = len(w)
    if n == 0:
        return 0
    # need_desc[j]: best length ending at j when the next step must descend.
    # need_asc[j]: same with the next step ascending; 0 marks "unreachable"
    # because a subsequence cannot open with an ascent.
    need_desc = [1] * n
    need_asc = [0] * n
    for j in range(n):
        wj = w[j]
        for i in range(j):
            if w[i] > wj:
                if need_desc[i] + 1 > need_asc[j]:
                    need_asc[j] = need_desc[i] + 1
            elif need_asc[i] and need_asc[i] + 1 > need_desc[j]:
                need_desc[j] = need_asc[i] + 1
    return max(max(need_desc), max(need_asc))


def descents(perm: PermLike) -> int:
    """Count positions i < n with w[i] > w[i+1]."""
    w = _word(perm)
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


_STAT_FUNCS = {
    Stat.RUNS: alternating_runs,
    Stat.INTERIOR_PEAKS: interior_peaks,
    Stat.LEFT_PEAKS: left_peaks,
    Stat.LONGEST_ALT_SUBSEQ: longest_alt_subseq,
    Stat.DESCENTS: descents,
}


@dataclass(frozen=True)
class StatDistribution:
    """Exact histogram of a statistic over S_n; counts sum to n!."""

    stat: Stat
    n: int
    counts: "dict[int, int]"

    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, k: int) -> int:
        return self.counts.get(k, 0)


def distribution(stat: "Stat | str", n: int) -> StatDistribution:
    """Histogram of ``stat`` over all of S_n (n <= 10)."""
    stat = Stat(stat)
    _check_enum_n(n)
    fn = _STAT_FUNCS[stat]
    counts: "dict[int, int]" = {}
    for word in itertools.permutations(range(1, n + 1)):
        k = fn(word)
        counts[k] = counts.get(k, 0) + 1
    return StatDistribution(stat=stat, n=n, counts=dict(sorted(counts.items())))
