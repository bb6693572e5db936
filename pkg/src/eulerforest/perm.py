"""Permutations of [n] in one-line notation and the statistics they carry.

Words are plain tuples of 1-based values.  Cycle statistics (excedances,
drops, fixed points, cycles) read the word as the function ``i -> word[i]``.

Convention for the (alpha, beta)-Eulerian polynomials: ``x`` marks ascents
and ``y`` descents when alpha/beta count left-to-right/right-to-left minima
(``"min"`` form); with maxima the roles of ``x`` and ``y`` are exchanged
(``"max"`` form).  Both forms produce the polynomial generated by Ji's grammar,
e.g. ``A_1 = x*beta + y*alpha``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterator, Sequence

from ._parallel import merged_counts
from .exactpoly import Poly, x, y, q, alpha, beta

Perm = tuple


@dataclass(frozen=True)
class StatBundle:
    asc: int
    des: int
    lrmax: int
    rlmax: int
    lrmin: int
    rlmin: int
    peaks: int
    exc: int
    drop: int
    fix: int
    cyc: int

    def as_text(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.__dict__.items())


@dataclass(frozen=True)
class CyclePerm:
    """Cycles with each minimum written last, cycles sorted by their minima."""

    cycles: tuple

    def to_word(self) -> Perm:
        n = sum(len(c) for c in self.cycles)
        w = [0] * n
        for c in self.cycles:
            for i, v in enumerate(c):
                w[v - 1] = c[(i + 1) % len(c)]
        return tuple(w)

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)


def check_perm(word: Sequence[int]) -> Perm:
    w = tuple(int(v) for v in word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w!r} is not a permutation of [1..{len(w)}]")
    return w


def parse_perm(text: str) -> Perm:
    """Accepts ``"8 4 9 6 1 2 5 3 7"``, ``"8,4,9"`` or, for n < 10, ``"849612537"``."""
    parts = text.replace(",", " ").split()
    if len(parts) == 1 and len(parts[0]) > 1:
        parts = list(parts[0])
    return check_perm(int(p) for p in parts)


def _left_to_right_minima(w: Sequence[int]) -> int:
    count, best = 0, None
    for v in w:
        if best is None or v < best:
            best, count = v, count + 1
    return count


def _right_to_left_minima(w: Sequence[int]) -> int:
    return _left_to_right_minima(w[::-1])


def _left_to_right_maxima(w: Sequence[int]) -> int:
    return _left_to_right_minima([-v for v in w])


def _right_to_left_maxima(w: Sequence[int]) -> int:
    return _left_to_right_minima([-v for v in reversed(w)])


def cycle_statistics(w: Sequence[int]) -> tuple[int, int, int, int]:
    """(exc, drop, fix, cyc) of ``i -> w[i]``."""
    n = len(w)
    exc = sum(1 for i in range(n) if w[i] > i + 1)
    drop = sum(1 for i in range(n) if w[i] < i + 1)
    seen = [False] * n
    cyc = 0
    for i in range(n):
        if not seen[i]:
            cyc += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = w[j] - 1
    return exc, drop, n - exc - drop, cyc


def statistics(word: Sequence[int]) -> StatBundle:
    w = tuple(word)
    n = len(w)
    asc = sum(1 for i in range(1, n) if w[i - 1] < w[i])
    peaks = sum(1 for i in range(1, n - 1) if w[i - 1] < w[i] > w[i + 1])
    exc, drop, fix, cyc = cycle_statistics(w)
    return StatBundle(
        asc=asc,
        des=max(n - 1, 0) - asc,
        lrmax=_left_to_right_maxima(w),
        rlmax=_right_to_left_maxima(w),
        lrmin=_left_to_right_minima(w),
        rlmin=_right_to_left_minima(w),
        peaks=peaks,
        exc=exc,
        drop=drop,
        fix=fix,
        cyc=cyc,
    )


def _chunk(n: int, first: int) -> Iterator[Perm]:
    rest = [v for v in range(1, n + 1) if v != first]
    for p in permutations(rest):
        yield (first,) + p


def enumerate_perms(n: int, family: str = "all") -> Iterator[Perm]:
    """All permutations of [n] (or the derangements) in lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if family not in ("all", "derangements"):
        raise ValueError(f"unknown family {family!r}")
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        if family == "derangements" and first == 1:
            continue
        for w in _chunk(n, first):
            if family == "all" or all(w[i] != i + 1 for i in range(n)):
                yield w


def word_to_cycle(word: Sequence[int]) -> CyclePerm:
    """Cut the word after every right-to-left minimum; each piece is a cycle."""
    w = tuple(word)
    cycles, start = [], 0
    suffix_min = None
    is_cut = [False] * len(w)
    for i in range(len(w) - 1, -1, -1):
        if suffix_min is None or w[i] < suffix_min:
            suffix_min = w[i]
            is_cut[i] = True
    for i, cut in enumerate(is_cut):
        if cut:
            cycles.append(w[start:i + 1])
            start = i + 1
    return CyclePerm(tuple(cycles))


# -- enumeration-built polynomials -------------------------------------------

def _eulerian_chunk(m: int, first: int, variant: str) -> Counter:
    counts: Counter = Counter()
    rest = (0, 0, 0, 0)
    for w in _chunk(m, first):
        asc = 0
        prev = w[0]
        for v in w[1:]:
            if v > prev:
                asc += 1
            prev = v
        des = m - 1 - asc
        if variant == "min":
            e_alpha = _left_to_right_minima(w) - 1
            e_beta = _right_to_left_minima(w) - 1
            key = (asc, des, 0, 0, e_alpha, e_beta) + rest[:2]
        else:
            e_alpha = _left_to_right_maxima(w) - 1
            e_beta = _right_to_left_maxima(w) - 1
            key = (des, asc, 0, 0, e_alpha, e_beta) + rest[:2]
        counts[key] += 1
    return counts


def eulerian_by_enumeration(n: int, variant: str = "min", threads: int | None = None) -> Poly:
    """``A_n(x, y | alpha, beta)`` summed over all permutations of [n+1]."""
    if variant not in ("min", "max"):
        raise ValueError("variant must be 'min' or 'max'")
    if n < 0:
        raise ValueError("n must be non-negative")
    m = n + 1
    counts = merged_counts(_eulerian_chunk, [(m, f, variant) for f in range(1, m + 1)], threads)
    return Poly.from_exponent_counts(counts)


def _derangement_chunk(n: int, first: int) -> Counter:
    counts: Counter = Counter()
    for w in _chunk(n, first):
        if any(w[i] == i + 1 for i in range(n)):
            continue
        exc, drop, _, cyc = cycle_statistics(w)
        counts[(exc, drop, 0, 0, 0, 0, cyc, 0)] += 1
    return counts


def derangement_poly(n: int, threads: int | None = None) -> Poly:
    """``d_n(x, y, q)``: x marks excedances, y drops, q cycles."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return Poly.const(1)
    counts = merged_counts(_derangement_chunk, [(n, f) for f in range(2, n + 1)], threads)
    return Poly.from_exponent_counts(counts)


def _peak_chunk(n: int, first: int) -> Counter:
    counts: Counter = Counter()
    for w in _chunk(n, first):
        s = statistics(w)
        counts[(s.peaks, s.des, s.lrmin, s.rlmin)] += 1
    return counts


def stembridge_sides(n: int, threads: int | None = None) -> tuple[Poly, Poly]:
    """Both sides of Ji's (alpha, beta)-Stembridge identity, summed over S_n.

    Left:  (xy)^M ((x+y)/2)^(n-2M-1) alpha^(lrmin-1) beta^(rlmin-1)
    Right: x^des y^(n-1-des) ((alpha+beta)/2)^(lrmin+rlmin-2)
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    counts = merged_counts(_peak_chunk, [(n, f) for f in range(1, n + 1)], threads)
    half_xy = (x + y) / 2
    half_ab = (alpha + beta) / 2
    left: dict = Counter()
    right: dict = Counter()
    for (peaks, des, lrmin, rlmin), c in counts.items():
        left[(peaks, lrmin - 1, rlmin - 1)] += c
        right[(des, lrmin + rlmin - 2)] += c
    lhs = Poly()
    for (peaks, ea, eb), c in left.items():
        lhs += (x * y) ** peaks * half_xy ** (n - 2 * peaks - 1) * alpha ** ea * beta ** eb * c
    rhs = Poly()
    for (des, k), c in right.items():
        rhs += x ** des * y ** (n - 1 - des) * half_ab ** k * c
    return lhs, rhs


def _signed_chunk(m: int, first: int) -> Counter:
    counts: Counter = Counter()
    for w in _chunk(m, first):
        asc = sum(1 for i in range(1, m) if w[i - 1] < w[i])
        k = _left_to_right_minima(w) + _right_to_left_minima(w) - 2
        counts[k] += -1 if (m - 1 - asc) % 2 else 1
    return counts


def signed_half_sum(n: int, threads: int | None = None) -> Poly:
    """Sum over S_{n+1} of (-1)^des (q/2)^(lrmin+rlmin-2); set q=1 for the plain sum."""
    if n < 0:
        raise ValueError("n must be non-negative")
    m = n + 1
    counts = merged_counts(_signed_chunk, [(m, f) for f in range(1, m + 1)], threads)
    return sum((q ** k * Fraction(c, 2 ** k) for k, c in counts.items() if c), Poly())
