"""Enumeration of the Abelian roots and A-primitive roots of a word.

A-roots are prefixes by definition: the root of an Abelian-power
decomposition is its first block. The profile lists every proper
divisor of |w| whose blocks share a Parikh vector, and the subset whose
prefix is itself A-primitive. Distinct A-primitive root lengths are
always division-free: if d divided d', the d'-prefix would have an
A-root of length d and could not be A-primitive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numtheory import divisors
from .parikh import Word, has_a_root_of_length
from .primitivity import is_a_primitive_linear


@dataclass(frozen=True)
class RootProfile:
    word_length: int
    a_root_lengths: tuple[int, ...]
    a_primitive_root_lengths: tuple[int, ...]


def root_profile(w: Word) -> RootProfile:
    """Scan all proper divisors of |w| (not only maximal ones)."""
    n = len(w)
    if n < 2:
        raise ValueError("root profiles need |w| >= 2: an Abelian power has at least 2 blocks")
    roots = [d for d in divisors(n)[:-1] if has_a_root_of_length(w, d)]
    prim = [d for d in roots if is_a_primitive_linear(w.prefix(d)).is_a_primitive]
    return RootProfile(n, tuple(roots), tuple(prim))


def a_primitive_roots(w: Word) -> list[Word]:
    """The A-primitive root prefixes of w, shortest first."""
    return [w.prefix(d) for d in root_profile(w).a_primitive_root_lengths]


def count_distinct_a_primitive_roots(w: Word) -> int:
    return len(root_profile(w).a_primitive_root_lengths)
