"""Count A-primitive words exactly and compare with classical counts.

psi(k, n) counts classically primitive words over k letters at length n;
psi_a(k, n) counts the A-primitive ones. The gap delta = psi - psi_a is
zero exactly at primes and n = 1, where A-primitivity and classical
primitivity coincide and psi_a(k, p) = k^p - k in closed form.
"""

from abelwords import count_table, delta_prime_power, psi, psi_a


def main() -> None:
    print("binary words up to length 16:")
    table = count_table(2, 16)
    print("  n    psi       psi_a     delta")
    for row in table.rows:
        print(f"  {row.n:<4} {row.psi:<9} {row.psi_a:<9} {row.delta}")

    # at primes the two notions coincide, so no enumeration is needed
    # and the closed form reaches lengths far beyond brute force
    print("\nclosed form at prime lengths:")
    for k, p in ((2, 31), (3, 23), (5, 19)):
        print(f"  psi_a({k}, {p}) = {k}^{p} - {k} = {k**p - k}")

    # at prime powers p^r the gap also has a closed form, summing over
    # the ways a Parikh vector can stay constant across p^(r-1) blocks
    print("\nprime-power gap, closed form vs enumeration:")
    for k, p, r in ((2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 2)):
        n = p**r
        direct = delta_prime_power(k, p, r)
        enumerated = psi(k, n) - psi_a(k, n)
        print(f"  delta_{k}({n}) = {direct}  (enumerated: {enumerated})")
        assert direct == enumerated

    # enumeration cost is k^n * n, so a budget guards composite lengths
    big = count_table(4, 19, budget=10**6)
    skipped = [n for n in range(1, 20) if n not in {r.n for r in big.rows}]
    print(f"\ncount_table(4, 19, budget=10^6) skips composites {skipped}")
    print("while every prime row still fills in from the closed form:")
    for row in big.rows:
        if row.n in (13, 17, 19):
            print(f"  n={row.n}: psi_a = {row.psi_a}")


if __name__ == "__main__":
    main()
