#pragma once

// Floating-point oracles. These re-derive values from canonical coefficients
// with std::complex and never call the library's own evaluator.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "modcat/cyclotomic.hpp"
#include "modcat/matrix.hpp"

namespace oracle {

using cplx = std::complex<double>;

/// The embedding zeta_n -> exp(2 pi i k / n) applied to x.
inline cplx eval(const modcat::Cyclotomic& x, std::int64_t k = 1) {
  cplx sum = 0;
  const double n = static_cast<double>(x.order());
  for (const auto& [e, c] : x.coeffs())
    sum += c.get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k * e) / n);
  return sum;
}

inline cplx root(std::int64_t num, std::int64_t den) {
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den));
}

inline std::vector<std::vector<cplx>> eval(const modcat::Matrix& m) {
  std::vector<std::vector<cplx>> out;
  for (const auto& row : m) {
    std::vector<cplx> r;
    for (const auto& x : row) r.push_back(eval(x));
    out.push_back(r);
  }
  return out;
}

inline bool close(cplx a, cplx b, double tol = 1e-9) { return std::abs(a - b) < tol; }

/// Random element of Q(zeta_n) with small rational coefficients.
inline modcat::Cyclotomic random_element(std::mt19937_64& rng, std::int64_t n, int terms = 4, bool integral = false) {
  std::uniform_int_distribution<std::int64_t> exp(0, n - 1), num(-5, 5), den(1, integral ? 1 : 4);
  std::map<std::int64_t, modcat::Rational> raw;
  for (int i = 0; i < terms; ++i) {
    modcat::Rational c(static_cast<long>(num(rng)), static_cast<long>(den(rng)));
    c.canonicalize();
    raw[exp(rng)] += c;
  }
  return modcat::Cyclotomic::make(n, raw);
}

}  // namespace oracle
