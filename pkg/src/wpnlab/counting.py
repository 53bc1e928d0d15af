"""Exact counting: Bell numbers, star/clique-complement family sizes,
labeled cograph counts, the even-cycle lower bound, and an exactly uniform
set-partition sampler.

All counts are exact big integers.  The one non-integer quantity (the
lower bound's fractional power of two) is kept as an exact rational
exponent and compared without floating point.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator


@lru_cache(maxsize=None)
def _bell_triangle_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _bell_triangle_row(n - 1)
    row = [prev[-1]]
    for x in prev:
        row.append(row[-1] + x)
    return tuple(row)


def bell(n: int) -> int:
    """The nth Bell number (partitions of an n-set)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _bell_triangle_row(n)[0]


def iter_set_partitions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All partitions of {0..n-1}; blocks sorted by least element."""
    if n == 0:
        yield ()
        return
    for sub in iter_set_partitions(n - 1):
        for i in range(len(sub)):
            yield sub[:i] + (sub[i] + (n - 1,),) + sub[i + 1:]
        yield sub + ((n - 1,),)


# -- the F* families ----------------------------------------------------------


def component_count(i: int, s: int) -> int:
    """Labeled connected graphs on s vertices allowed as complement
    components of the family F*_i."""
    if i == 1:  # stars and triangles
        if s <= 2:
            return 1
        if s == 3:
            return 4  # 3 stars + 1 triangle
        return s  # choice of star center
    if i == 2:  # stars and cliques
        if s <= 2:
            return 1
        if s == 3:
            return 4
        return s + 1  # s stars + 1 clique
    if i == 3:  # join of a clique and a stable set (complete split graphs)
        if s == 1:
            return 1
        # pick the universal clique side; subtract the s+1 choices that
        # leave the graph disconnected (empty clique, or a lone clique
        # vertex counted twice as K_s ... see component oracle test)
        return 2 ** s - s - 1
    raise ValueError("i must be 1, 2 or 3")


@lru_cache(maxsize=None)
def f_star(i: int, n: int) -> int:
    """|F*_i(n)|: labeled graphs on [n] whose complement components all
    have the family's shape; computed by the rooted-component convolution."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    total = 0
    for s in range(1, n + 1):
        total += math.comb(n - 1, s - 1) * component_count(i, s) * f_star(i, n - s)
    return total


@lru_cache(maxsize=None)
def _cograph_counts(n: int) -> tuple[int, int]:
    """(total, connected) labeled cographs on n vertices.

    By Seinsche's theorem exactly half the cographs on n >= 2 vertices are
    connected (complementation swaps connected and co-connected), so the
    usual component convolution closes the recurrence.
    """
    if n == 0:
        return (1, 0)
    if n == 1:
        return (1, 1)
    partial = 0
    for s in range(1, n):
        partial += math.comb(n - 1, s - 1) * _cograph_counts(s)[1] * _cograph_counts(n - s)[0]
    total = 2 * partial
    return (total, total // 2)


def labeled_cograph_count(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _cograph_counts(n)[0]


# -- the C_{2l} lower bound ----------------------------------------------------


@dataclass(frozen=True)
class PowBellBound:
    """Exact value 2**exponent * bell_factor with a rational exponent."""

    exponent: Fraction
    bell_factor: int

    def is_integral(self) -> bool:
        return self.exponent.denominator == 1

    def exact_value(self) -> int:
        if not self.is_integral():
            raise ValueError("fractional exponent; compare with le_int/ge_int")
        return (1 << int(self.exponent)) * self.bell_factor

    def le_int(self, other: int) -> bool:
        """self <= other, exactly: 2^(p/q)*B <= N iff 2^p * B^q <= N^q."""
        p, q = self.exponent.numerator, self.exponent.denominator
        return (1 << p) * self.bell_factor ** q <= other ** q

    def ge_int(self, other: int) -> bool:
        p, q = self.exponent.numerator, self.exponent.denominator
        return (1 << p) * self.bell_factor ** q >= other ** q


def c2l_lower_bound(n: int, l: int) -> PowBellBound:
    """2^((1-1/(l-1))*C(n,2)) * B_ceil(n/(l-1)), exactly."""
    if l <= 3:
        raise ValueError("need l > 3")
    if n < 1:
        raise ValueError("need n >= 1")
    exponent = Fraction(l - 2, l - 1) * math.comb(n, 2)
    return PowBellBound(exponent=exponent, bell_factor=bell(-(-n // (l - 1))))


# -- exact log2 comparisons ----------------------------------------------------


def le_times_log2(a: int, b: int, n: int) -> bool:
    """Decide a <= b * log2(n) exactly (a, b >= 0 integers, n >= 2).

    Brackets log2(n) between p/q and (p+1)/q for growing q until the
    comparison is decided.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    q = 64
    while True:
        npow = n ** q
        p = npow.bit_length() - 1  # 2^p <= n^q < 2^(p+1)
        if a * q <= b * p:
            return True
        if a * q > b * (p + 1):
            return False
        q *= 2


def growth_bounds_hold(i: int, n: int) -> bool:
    """n*f(n)/(16*log2 n) <= f(n+1) <= 4n*f(n), decided exactly."""
    fn, fn1 = f_star(i, n), f_star(i, n + 1)
    if fn1 > 4 * n * fn:
        return False
    return le_times_log2(n * fn, 16 * fn1, n)


# -- uniform set-partition sampling ---------------------------------------------


MAX_SAMPLER_N = 2000


@dataclass(frozen=True)
class SetPartition:
    """Partition of {0..n-1}; blocks disjoint, nonempty, sorted by least
    element."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if seen & set(b):
                raise ValueError("overlapping blocks")
            seen.update(b)
        if seen != set(range(self.n)):
            raise ValueError("blocks do not cover the ground set")


@dataclass(frozen=True)
class PartitionStats:
    blocks: int
    nonsingleton_blocks: int


def partition_stats(p: SetPartition) -> PartitionStats:
    return PartitionStats(
        blocks=len(p.blocks),
        nonsingleton_blocks=sum(1 for b in p.blocks if len(b) > 1),
    )


def vertices_in_blocks_larger_than(p: SetPartition, t: int) -> int:
    return sum(len(b) for b in p.blocks if len(b) > t)


@lru_cache(maxsize=32)
def _urn_weight_table(n: int) -> tuple[tuple[int, ...], int]:
    """Cumulative integer weights for the urn count U with
    P(U=u) proportional to u^n/u! (Dobinski), truncated once the remaining
    tail is below 2^-100 of the accumulated mass."""
    weights: list[Fraction] = []
    u = 1
    fact = 1
    total = Fraction(0)
    while True:
        w = Fraction(u ** n, fact * u)  # u^n / u!
        weights.append(w)
        total += w
        if u > 1 and w < weights[-2]:
            ratio = w / weights[-2]
            tail_bound = w * ratio / (1 - ratio)
            if tail_bound < total * Fraction(1, 1 << 100):
                break
        fact *= u
        u += 1
    denom = math.lcm(*(w.denominator for w in weights))
    ints = [int(w * denom) for w in weights]
    cum = []
    acc = 0
    for x in ints:
        acc += x
        cum.append(acc)
    return tuple(cum), acc


class UniformPartitionSampler:
    """Exactly uniform random set partitions of an n-set (two-stage urn
    method: draw the urn count, drop each element in a uniform urn, discard
    empty urns)."""

    def __init__(self, n: int, seed: int):
        if not 1 <= n <= MAX_SAMPLER_N:
            raise ValueError(f"sampler supports 1 <= n <= {MAX_SAMPLER_N}")
        self.n = n
        self._rng = random.Random(seed)
        self._cum, self._total = _urn_weight_table(n)

    def sample(self) -> SetPartition:
        import bisect

        r = self._rng.randrange(self._total)
        u = bisect.bisect_right(self._cum, r) + 1  # urn counts start at 1
        urns: dict[int, list[int]] = {}
        for x in range(self.n):
            urns.setdefault(self._rng.randrange(u), []).append(x)
        blocks = tuple(sorted((tuple(b) for b in urns.values()),
                              key=lambda b: b[0]))
        return SetPartition(n=self.n, blocks=blocks)


def sample_uniform_partition(n: int, seed: int) -> SetPartition:
    return UniformPartitionSampler(n, seed).sample()
