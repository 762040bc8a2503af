"""Deciders for Abelian primitivity.

A word of length n is an Abelian power if it splits into at least two
equal-length blocks whose Parikh vectors all agree; it is A-primitive
otherwise. The oracle tries every proper divisor of n. The fast decider
tests only the maximal proper divisors n/p, which suffices because an
A-root of length d lifts to every multiple of d dividing n. The linear
decider additionally caches the Parikh vectors of blocks of length
gpf(n) and derives the others by summing them, for O(n) total work.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .numtheory import divisors, factorize
from .parikh import Word, _block_count_table, has_a_root_of_length


@dataclass(frozen=True)
class PrimitivityVerdict:
    is_a_primitive: bool
    witness_root_length: Optional[int] = None

    def __post_init__(self):
        if self.is_a_primitive != (self.witness_root_length is None):
            raise ValueError("witness must be present exactly when not A-primitive")


def _require_nonempty(w: Word) -> int:
    n = len(w)
    if n == 0:
        raise ValueError("the empty word has no primitivity classification")
    return n


def is_a_primitive_oracle(w: Word) -> PrimitivityVerdict:
    """Definition-chasing decider: try every proper divisor, smallest first."""
    n = _require_nonempty(w)
    for d in divisors(n)[:-1]:
        if has_a_root_of_length(w, d):
            return PrimitivityVerdict(False, d)
    return PrimitivityVerdict(True)


def _maximal_proper_divisors(n: int) -> list[int]:
    # factorize lists primes ascending, so n/p comes out descending
    return [n // p for p, _ in factorize(n).entries]


def is_a_primitive(w: Word) -> PrimitivityVerdict:
    """Decider testing only the maximal proper divisors n/p."""
    n = _require_nonempty(w)
    if n == 1:
        return PrimitivityVerdict(True)
    for d in _maximal_proper_divisors(n):
        if has_a_root_of_length(w, d):
            return PrimitivityVerdict(False, d)
    return PrimitivityVerdict(True)


def is_a_primitive_linear(w: Word) -> PrimitivityVerdict:
    """O(n) decider reusing counts of blocks of length gpf(n).

    When gpf(n)^2 does not divide n, the divisor n/gpf(n) is not a
    multiple of gpf(n); it is tested eagerly, before the cache is built,
    and the verdict returns immediately on a hit. Every remaining
    maximal divisor d is a multiple of g = gpf(n), so the Parikh vectors
    of its blocks are sums of d/g consecutive cached vectors.
    """
    n = _require_nonempty(w)
    if n == 1:
        return PrimitivityVerdict(True)
    entries = factorize(n).entries
    g = entries[-1][0]
    candidates = [n // p for p, _ in entries]
    if n % (g * g):
        d = n // g
        if has_a_root_of_length(w, d):
            return PrimitivityVerdict(False, d)
        candidates.remove(d)
    if not candidates:
        return PrimitivityVerdict(True)
    cached = _block_count_table(w.letters, g, w.alphabet_size)
    for d in candidates:
        sums = cached.reshape(n // d, d // g, -1).sum(axis=1)
        if bool((sums[1:] == sums[0]).all()):
            return PrimitivityVerdict(False, d)
    return PrimitivityVerdict(True)
