#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element of Q(zeta_n) is stored in the power basis
// {zeta_n^e : 0 <= e < phi(n)}, reduced modulo the n-th cyclotomic
// polynomial, as an integer numerator vector over one positive common
// denominator. Results of arithmetic are re-expressed at their conductor
// (the smallest m with the element in Q(zeta_m)), so elements coming out of
// the arithmetic layer have a unique representation.

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace modcat {

using Integer = mpz_class;
using Rational = mpq_class;
using Float = boost::multiprecision::cpp_bin_float_50;

/// Accepts "p", "-p", "p/q" with decimal big integers; result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Largest phi(n) any operation will accept. Default 2000.
std::int64_t order_cap();
void set_order_cap(std::int64_t phi_cap);

/// Largest `digits` accepted by Cyclotomic::evaluate.
inline constexpr int kMaxEvalDigits = 40;

struct ComplexValue {
  Float re;
  Float im;
  double real() const { return static_cast<double>(re); }
  double imag() const { return static_cast<double>(im); }
};

/// exp(2 pi i * num/den), kept as a reduced fraction num/den in [0, 1).
class RootOfUnity {
 public:
  RootOfUnity() = default;
  /// zeta_den^num; den >= 1, num arbitrary.
  RootOfUnity(std::int64_t num, std::int64_t den);

  static RootOfUnity one() { return {}; }

  std::int64_t numerator() const { return num_; }
  /// The multiplicative order of the root.
  std::int64_t order() const { return den_; }
  /// Exponent e with this == zeta_n^e; requires order() | n.
  std::int64_t exponent_over(std::int64_t n) const;

  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity operator/(const RootOfUnity& o) const;
  RootOfUnity pow(std::int64_t k) const;
  RootOfUnity inverse() const { return RootOfUnity(-num_, den_); }
  /// Image under zeta |-> zeta^k (k a unit modulo the order).
  RootOfUnity galois(std::int64_t k) const { return pow(k); }
  /// The principal square root exp(pi i num/den).
  RootOfUnity sqrt() const { return RootOfUnity(num_, 2 * den_); }

  bool operator==(const RootOfUnity& o) const = default;
  auto operator<=>(const RootOfUnity& o) const = default;

  std::string to_string() const;  // "num/den"

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

class Cyclotomic {
 public:
  /// Zero.
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// sum_e raw[e] zeta_order^e. Exponents are arbitrary integers, reduced
  /// mod order and then mod Phi_order. The result is canonical at `order`
  /// (not conductor-reduced; see reduce_conductor).
  static Cyclotomic make(std::int64_t order, const std::map<std::int64_t, Rational>& raw);
  /// zeta_n^e, conductor-reduced.
  static Cyclotomic zeta(std::int64_t n, std::int64_t e = 1);
  static Cyclotomic from_root(const RootOfUnity& w);

  /// The n at which the element is currently expressed.
  std::int64_t order() const { return order_; }
  /// Minimal m such that the element lies in Q(zeta_m).
  std::int64_t conductor() const;
  Cyclotomic reduce_conductor() const;
  /// Canonical coefficients at a multiple m of order(), dense, length phi(m).
  std::vector<Rational> coefficients_at(std::int64_t m) const;
  /// Nonzero canonical coefficients at order().
  std::map<std::int64_t, Rational> coeffs() const;
  Rational coeff(std::int64_t e) const;

  bool is_zero() const;
  bool is_rational() const;
  bool is_real() const;
  /// True iff every canonical coefficient is an integer; the power basis is
  /// an integral basis of Z[zeta_n], so this is exact.
  bool is_algebraic_integer() const;
  /// The root w with *this == w, when *this is a root of unity.
  std::optional<RootOfUnity> as_root_of_unity() const;
  /// The rational value; requires is_rational().
  Rational to_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

  Cyclotomic inv() const;
  Cyclotomic pow(std::int64_t k) const;
  /// sigma_k : zeta_n -> zeta_n^k; k must be a unit modulo order().
  Cyclotomic galois(std::int64_t k) const;
  Cyclotomic conj() const { return galois(-1); }

  /// Product of all Galois conjugates over Q(zeta_order) / Q.
  Rational norm() const;
  Rational trace() const;

  /// Complex value with absolute error below 10^-digits.
  ComplexValue evaluate(int digits = 30) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Cyclotomic(std::int64_t order, std::vector<Integer> num, Integer den, bool reduced);

  void normalize();
  // Re-express at `m` (a multiple of order_) without conductor reduction.
  Cyclotomic lifted(std::int64_t m) const;
  Cyclotomic conductor_reduced() const;

  std::int64_t order_ = 1;
  std::vector<Integer> num_;  // length phi(order_)
  Integer den_ = 1;
  bool reduced_ = true;  // known to be expressed at its conductor

  friend Cyclotomic combine(const Cyclotomic&, const Cyclotomic&, bool);
};

Cyclotomic reduce_conductor(const Cyclotomic& x);
Cyclotomic galois_apply(const Cyclotomic& x, std::int64_t k);
ComplexValue complex_eval(const Cyclotomic& x, int digits);

/// A square root of q inside a cyclotomic field (Gauss sums); the positive
/// root for q > 0 and i*sqrt(-q) for q < 0.
Cyclotomic sqrt_rational(const Rational& q);
/// (zeta_{2n}^a - zeta_{2n}^-a) / (2i) == sin(pi a / n).
Cyclotomic sin_pi(std::int64_t a, std::int64_t n);

}  // namespace modcat
