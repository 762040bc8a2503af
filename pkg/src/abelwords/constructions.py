"""Explicit word families with guaranteed root structure.

m_word(p) = aabb(ab)^(p-2) is A-primitive exactly when p is prime; the
family M = {aabb(ab)^(p-2) : p prime} is what is_in_M recognizes.
multiroot_word(n) glues the first n primes into one word of length
2 * p1 * ... * pn with n distinct A-primitive roots. antichain_word(n)
realizes the upper bound s(n): one word of length 2n with an
A-primitive root of length 2t for every t in the middle antichain of n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from .numtheory import is_prime, multiples_closure
from .parikh import Word

FAMILIES = ("mword", "multiroot", "antichain")


@dataclass(frozen=True)
class ConstructionSpec:
    """A named family plus its integer parameter, validated together."""

    family: str
    parameter: int

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}, expected one of {FAMILIES}")
        if self.family == "mword" and not is_prime(self.parameter):
            raise ValueError("mword requires a prime parameter")
        if self.family == "multiroot" and self.parameter < 1:
            raise ValueError("multiroot requires parameter >= 1")
        if self.family == "antichain" and self.parameter < 2:
            raise ValueError("antichain requires parameter >= 2")

    def build(self) -> Word:
        self.validate()
        if self.family == "mword":
            return m_word(self.parameter)
        if self.family == "multiroot":
            return multiroot_word(self.parameter)
        return antichain_word(self.parameter)


def _aabb_ab_power(m: int) -> Word:
    """The word aabb(ab)^m over {a, b}."""
    letters = np.empty(4 + 2 * m, dtype=np.uint8)
    letters[:4] = (0, 0, 1, 1)
    letters[4::2] = 0
    letters[5::2] = 1
    return Word(letters, 2)


def m_word(p: int) -> Word:
    """aabb(ab)^(p-2) for prime p; length 2p, guaranteed A-primitive."""
    if not is_prime(p):
        raise ValueError(f"m_word requires a prime, got {p}")
    return _aabb_ab_power(p - 2)


def first_primes(count: int) -> list[int]:
    """The first `count` primes, by incremental trial division."""
    out: list[int] = []
    m = 2
    while len(out) < count:
        if is_prime(m):
            out.append(m)
        m += 1
    return out


def multiroot_word(n: int) -> Word:
    """aabb(ab)^((Q-4)/2) where Q = 2 * (product of the first n primes).

    For n >= 2 the prefixes aabb(ab)^(p_m - 2), of length 2 p_m for each
    of the first n primes p_m, are n distinct A-primitive roots.
    """
    if n < 1:
        raise ValueError(f"multiroot_word requires n >= 1, got {n}")
    q = 2 * prod(first_primes(n))
    return _aabb_ab_power((q - 4) // 2)


def antichain_word(n: int) -> Word:
    """A word of length 2n with an A-primitive root of length 2t for each
    t in middle_antichain(n).

    With t_1 < ... < t_m the sorted multiples closure of the middle
    antichain, the word is a^(t_1) b^(t_1) followed by a^(t_i - t_(i-1))
    b^(t_i - t_(i-1)) for each later t_i. The Parikh vector is (n, n).
    """
    if n < 2:
        raise ValueError(f"antichain_word requires n >= 2, got {n}")
    parts = []
    prev = 0
    for t in multiples_closure(n):
        gap = t - prev
        parts.append(np.zeros(gap, dtype=np.uint8))
        parts.append(np.ones(gap, dtype=np.uint8))
        prev = t
    return Word(np.concatenate(parts), 2)


def is_in_M(w: Word) -> bool:
    """Membership in M = {aabb(ab)^(p-2) : p prime}: exact shape plus prime half-length."""
    n = len(w)
    if n < 4 or n % 2:
        return False
    arr = w.letters
    if not (arr[0] == 0 and arr[1] == 0 and arr[2] == 1 and arr[3] == 1):
        return False
    tail = arr[4:]
    if tail.size and not (bool((tail[0::2] == 0).all()) and bool((tail[1::2] == 1).all())):
        return False
    return is_prime(n // 2)
