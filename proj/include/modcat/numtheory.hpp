#pragma once

// Small-integer number theory used throughout: factorization, Euler phi,
// unit groups, Moebius, Ramanujan sums.

#include <cstdint>
#include <utility>
#include <vector>

namespace modcat::nt {

using i64 = std::int64_t;

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);
/// Non-negative residue of a mod m (m > 0).
i64 mod(i64 a, i64 m);
/// Inverse of a mod m; throws NotAUnit when gcd(a, m) != 1.
i64 inverse_mod(i64 a, i64 m);
i64 pow_mod(i64 base, i64 exp, i64 m);

bool is_prime(i64 n);
/// (prime, exponent) pairs in increasing prime order. factor(1) is empty.
std::vector<std::pair<i64, int>> factor(i64 n);
std::vector<i64> prime_divisors(i64 n);
std::vector<i64> divisors(i64 n);

i64 euler_phi(i64 n);
int moebius(i64 n);

/// The units of Z/nZ in increasing order; units(1) == {0}.
std::vector<i64> units(i64 n);
/// Multiplicative order of a unit mod n.
i64 multiplicative_order(i64 a, i64 n);

/// c_n(e) = sum over primitive n-th roots w of w^e, which is the trace of
/// zeta_n^e from Q(zeta_n) down to Q.
i64 ramanujan_sum(i64 n, i64 e);

}  // namespace modcat::nt
