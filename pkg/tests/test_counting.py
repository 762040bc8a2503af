import pytest

from abelwords import (
    DEFAULT_BUDGET,
    EnumerationBudgetError,
    count_table,
    delta,
    delta_prime_power,
    psi,
    psi_a,
)
from conftest import ref_a_primitive

sympy = pytest.importorskip("sympy")


def every_word(k: int, n: int):
    for x in range(k**n):
        digits = []
        for _ in range(n):
            digits.append(x % k)
            x //= k
        yield digits


def classically_primitive(s) -> bool:
    n = len(s)
    return not any(
        n % d == 0 and s == s[:d] * (n // d) for d in range(1, n)
    )


# -------------------------------------------------------------------- psi


def test_psi_small_values():
    assert psi(2, 1) == 2
    assert psi(2, 2) == 2
    assert psi(2, 4) == 12
    assert psi(2, 6) == 54
    assert psi(3, 4) == 72
    assert psi(4, 2) == 12


def test_psi_brute_force():
    for k in (2, 3):
        for n in range(1, 11 if k == 2 else 8):
            expect = sum(1 for w in every_word(k, n) if classically_primitive(w))
            assert psi(k, n) == expect, (k, n)


def test_psi_against_mobius_oracle():
    for k in (2, 3, 4, 5):
        for n in range(1, 40):
            expect = sum(
                sympy.mobius(n // d) * k**d for d in sympy.divisors(n)
            )
            assert psi(k, n) == expect


def test_psi_rejects_bad_args():
    for k, n in ((0, 3), (2, 0), (-1, -1)):
        with pytest.raises(ValueError):
            psi(k, n)


# ------------------------------------------------------------------ psi_a


def test_psi_a_brute_force():
    for k, top in ((2, 11), (3, 8), (4, 6)):
        for n in range(1, top):
            letters = "abcdef"[:k]
            expect = sum(
                1
                for w in every_word(k, n)
                if ref_a_primitive("".join(letters[c] for c in w))
            )
            assert psi_a(k, n) == expect, (k, n)


def test_psi_a_known_cells():
    assert psi_a(2, 4) == 10
    assert psi_a(2, 6) == 36
    assert psi_a(2, 12) == 2972
    assert psi_a(3, 10) == 54300
    assert psi_a(4, 10) == 1016880
    assert psi_a(5, 8) == 382740
    assert psi_a(2, 20) == 859180


def test_psi_a_unary():
    assert psi_a(1, 1) == 1
    for n in (2, 3, 6, 12):
        assert psi_a(1, n) == 0


def test_psi_a_thread_count_does_not_change_result():
    for k, n in ((2, 12), (3, 9), (5, 6)):
        serial = psi_a(k, n, threads=1)
        assert psi_a(k, n, threads=4) == serial


def test_a_primitive_words_are_classically_primitive():
    # a classical k-th power is an Abelian k-th power, so psi_a <= psi
    for k in (2, 3, 4):
        for n in range(1, 10):
            a, c = psi_a(k, n), psi(k, n)
            assert a <= c
            if n != 1 and sympy.isprime(n):
                assert a == c


# ----------------------------------------------------------------- budget


def test_budget_error_names_the_numbers():
    with pytest.raises(EnumerationBudgetError) as info:
        psi_a(2, 40, budget=1000)
    msg = str(info.value)
    assert "1000" in msg
    assert "2**40" in msg or str(2**40 * 40) in msg


def test_default_budget_blocks_huge_enumerations():
    assert 3**19 * 19 > DEFAULT_BUDGET
    with pytest.raises(EnumerationBudgetError):
        psi_a(3, 19)


def test_budget_env_is_not_read_by_library(monkeypatch):
    monkeypatch.setenv("ABELWORDS_BUDGET", "1")
    assert psi_a(2, 6) == 36  # only the CLI consults the environment


# ------------------------------------------------------------------ delta


def test_delta_values():
    assert delta(2, 4) == 2
    assert delta(2, 6) == 18
    assert delta(2, 8) == 54
    assert delta(2, 9) == 48
    assert delta(3, 4) == 6
    for p in (2, 3, 5, 7, 11, 13):
        assert delta(2, p) == 0
    assert delta(4, 1) == 0


def test_delta_prime_power_closed_form():
    cases = [(2, 2, 2), (2, 2, 3), (2, 2, 4), (2, 3, 2), (3, 2, 2), (4, 2, 2)]
    for k, p, r in cases:
        assert delta_prime_power(k, p, r) == delta(k, p**r), (k, p, r)


def test_delta_prime_power_counts_ordered_tuples():
    # Parikh classes are ordered tuples: for k=2, p=2, r=3 the classes
    # (1,3), (2,2), (3,1) contribute 12 + 30 + 12
    assert delta_prime_power(2, 2, 3) == 54
    assert delta_prime_power(2, 2, 2) == 2
    assert delta_prime_power(2, 3, 2) == 48


def test_delta_prime_power_validation():
    with pytest.raises(ValueError):
        delta_prime_power(2, 4, 2)  # p must be prime
    with pytest.raises(ValueError):
        delta_prime_power(2, 2, 1)  # r >= 2
    with pytest.raises(ValueError):
        delta_prime_power(0, 2, 2)


# ------------------------------------------------------------ count_table


def test_count_table_small():
    t = count_table(2, 8)
    assert t.alphabet_size == 2
    assert t.skipped == ()
    assert [r.n for r in t.rows] == list(range(1, 9))
    assert [r.psi_a for r in t.rows] == [2, 2, 6, 10, 30, 36, 126, 186]
    assert all(r.delta == r.psi - r.psi_a for r in t.rows)


def test_count_table_prime_rows_need_no_budget():
    t = count_table(4, 13, budget=10)  # too small for any enumeration
    have = {r.n for r in t.rows}
    assert have == {1, 2, 3, 5, 7, 11, 13}
    assert set(t.skipped) == {4, 6, 8, 9, 10, 12}
    for r in t.rows:
        assert r.psi_a == r.psi
        if r.n > 1:
            assert r.psi_a == 4**r.n - 4


def test_count_table_rejects_bad_args():
    with pytest.raises(ValueError):
        count_table(0, 5)
    with pytest.raises(ValueError):
        count_table(2, 0)
