"""Explore A-roots and words built to carry many of them.

Unlike classical primitive roots, a word can have several distinct
A-primitive roots. Their lengths always form a division-free set, and
the count is bounded by the size of the divisor lattice's middle layer.
"""

from abelwords import (
    Word,
    antichain_word,
    count_distinct_a_primitive_roots,
    m_word,
    middle_antichain,
    multiroot_word,
    root_profile,
)


def show_profile(w: Word) -> None:
    profile = root_profile(w)
    print(f"  word: {w.to_text()}")
    print(f"  A-root lengths:           {list(profile.a_root_lengths)}")
    print(f"  A-primitive root lengths: {list(profile.a_primitive_root_lengths)}")


def main() -> None:
    print("a word with two A-primitive roots:")
    show_profile(Word.from_text("aabbabababab"))

    # m_word(p) has length 2p and letter counts (p, p); these are the
    # building blocks for every construction below
    print("\nprime building blocks:")
    for p in (2, 3, 5, 7):
        print(f"  m_word({p}) = {m_word(p).to_text()}")

    # multiroot_word(n) concatenates blocks so that exactly n distinct
    # A-primitive roots appear, one per prime used
    print("\nwords with exactly n distinct A-primitive roots:")
    for n in range(2, 5):
        w = multiroot_word(n)
        count = count_distinct_a_primitive_roots(w)
        print(f"  n={n}: length {len(w)}, roots {count}")
        assert count == n

    # antichain_word(n) packs an A-primitive root of length 2t for every
    # t in the middle antichain of n's divisor lattice, which is as many
    # as a word of its shape can have
    print("\nmiddle-layer antichain words:")
    for n in (12, 30, 60):
        z = antichain_word(n)
        middle = middle_antichain(n)
        lengths = set(root_profile(z).a_primitive_root_lengths)
        print(f"  n={n}: middle antichain {middle}, "
              f"bound {len(middle)}, "
              f"root lengths {sorted(lengths)}")
        assert {2 * t for t in middle} <= lengths


if __name__ == "__main__":
    main()
