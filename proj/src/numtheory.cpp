#include "modcat/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "modcat/error.hpp"

namespace modcat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::OrderTooLarge: return "order-too-large";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::NotAUnit: return "not-a-unit";
    case ErrorKind::SchemaViolation: return "schema-violation";
    case ErrorKind::NotFusionIntegral: return "not-fusion-integral";
    case ErrorKind::DegenerateS: return "degenerate-S";
    case ErrorKind::NotFound: return "not-found";
    case ErrorKind::NotGaloisStable: return "not-galois-stable";
    case ErrorKind::NotGaloisSymmetric: return "not-galois-symmetric";
    case ErrorKind::BadLevel: return "bad-level";
    case ErrorKind::NotModular: return "not-modular";
    case ErrorKind::NotTabulated: return "not-tabulated";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::InvalidFamily: return "invalid-family";
    case ErrorKind::InvalidParameters: return "invalid-parameters";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::ParseError: return "parse-error";
  }
  return "unknown";
}

}  // namespace modcat

namespace modcat::nt {

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 inverse_mod(i64 a, i64 m) {
  if (m == 1) return 0;
  i64 old_r = mod(a, m), r = m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error(ErrorKind::NotAUnit, std::to_string(a) + " mod " + std::to_string(m));
  return mod(old_s, m);
}

i64 pow_mod(i64 base, i64 exp, i64 m) {
  __int128 result = 1 % m;
  __int128 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = (result * b) % m;
    b = (b * b) % m;
    exp >>= 1;
  }
  return static_cast<i64>(result);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<i64, int>> factor(i64 n) {
  std::vector<std::pair<i64, int>> out;
  if (n < 0) n = -n;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<i64> prime_divisors(i64 n) {
  std::vector<i64> out;
  for (auto [p, e] : factor(n)) out.push_back(p);
  return out;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> out{1};
  for (auto [p, e] : factor(n)) {
    const std::size_t base = out.size();
    i64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

i64 euler_phi(i64 n) {
  i64 result = n;
  for (auto [p, e] : factor(n)) result = result / p * (p - 1);
  return result;
}

int moebius(i64 n) {
  int sign = 1;
  for (auto [p, e] : factor(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::vector<i64> units(i64 n) {
  if (n == 1) return {0};
  std::vector<i64> out;
  for (i64 k = 1; k < n; ++k)
    if (gcd(k, n) == 1) out.push_back(k);
  return out;
}

i64 multiplicative_order(i64 a, i64 n) {
  if (n == 1) return 1;
  if (gcd(a, n) != 1) throw Error(ErrorKind::NotAUnit, std::to_string(a) + " mod " + std::to_string(n));
  i64 x = mod(a, n);
  i64 k = 1;
  while (x != 1) {
    x = static_cast<i64>((static_cast<__int128>(x) * mod(a, n)) % n);
    ++k;
  }
  return k;
}

i64 ramanujan_sum(i64 n, i64 e) {
  const i64 g = gcd(mod(e, n), n);  // gcd(0, n) = n
  const i64 m = n / g;
  return moebius(m) * (euler_phi(n) / euler_phi(m));
}

}  // namespace modcat::nt
