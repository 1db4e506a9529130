#!/usr/bin/env python3
"""Tabulate divisor-locus point counts over several primes.

For every comparable pair in S(2,4) with a nonempty window family, count
the points of the pivot-coordinate zero locus inside the open interval
stratum over GF(q), interpolate the count polynomial, and compare its
degree with dimension - 1.
"""

from plucker import (
    divisor_spec,
    interpolate_count_polynomial,
    iter_comparable_pairs,
    p_set,
    subset_rank,
)

PRIMES = (2, 3, 5, 7, 11)


def main():
    header = f"{'beta':>8} {'gamma':>8} {'t':>2} " + " ".join(
        f"q={q:<5}" for q in PRIMES
    ) + f" {'deg':>4} {'dim-1':>5} {'stable':>6}"
    print(header)
    print("-" * len(header))
    for beta, gamma in iter_comparable_pairs(2, 4):
        for t in (1,):
            if not len(p_set(beta, gamma, t)):
                continue
            result = interpolate_count_polynomial(divisor_spec(beta, gamma, t), PRIMES)
            counts = " ".join(f"{result['counts'][q]:<7}" for q in PRIMES)
            dim = subset_rank(gamma) - subset_rank(beta)
            print(
                f"{str(beta):>8} {str(gamma):>8} {t:>2} {counts}"
                f" {result['degree']:>4} {dim - 1:>5} {str(result['stable']):>6}"
            )


if __name__ == "__main__":
    main()
