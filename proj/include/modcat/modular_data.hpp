#pragma once

// Modular data (S, T), Verlinde fusion rules and the seven-condition
// admissibility check.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modcat/cyclotomic.hpp"
#include "modcat/matrix.hpp"

namespace modcat {

/// A pass/fail outcome with a human-readable witness on failure.
struct Verdict {
  bool pass = true;
  std::string witness;

  static Verdict ok() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return pass; }
};

struct ModularDatum {
  int rank = 1;
  std::int64_t torder = 1;
  /// theta_j = zeta_torder^{t_exponents[j]}
  std::vector<std::int64_t> t_exponents{0};
  Matrix S{{Cyclotomic(1)}};

  /// Builds a datum from S and twists; torder is the lcm of the twist orders
  /// and S entries are conductor-reduced. Checks the structural invariants.
  static ModularDatum from_twists(Matrix S, const std::vector<RootOfUnity>& twists);

  RootOfUnity twist(int j) const { return {t_exponents[j], torder}; }
  Cyclotomic theta(int j) const { return Cyclotomic::zeta(torder, t_exponents[j]); }
  const Cyclotomic& dim(int j) const { return S[0][j]; }
  std::vector<Cyclotomic> thetas() const;

  /// Throws SchemaViolation when S is not rank x rank and symmetric, S_00 != 1,
  /// theta_0 != 1 or torder is not the order of T.
  void validate() const;

  bool operator==(const ModularDatum& o) const;
};

struct DerivedScalars {
  std::vector<Cyclotomic> dims;
  Cyclotomic global_dim_sq;
  Cyclotomic gauss_plus;
  Cyclotomic gauss_minus;
  /// p+/p- when it is a root of unity.
  std::optional<RootOfUnity> anomaly;
  /// j -> j*, from conj(S_ij) = S_{i j*}; -1 when no column matches.
  std::vector<int> dual;
};

DerivedScalars derived_scalars(const ModularDatum& datum);

struct FusionRules {
  int rank = 0;
  std::vector<std::int64_t> tensor;  // N_{ij}^k at (i * rank + j) * rank + k
  std::vector<int> dual;

  std::int64_t operator()(int i, int j, int k) const { return tensor[(static_cast<std::size_t>(i) * rank + j) * rank + k]; }
  std::int64_t& at(int i, int j, int k) { return tensor[(static_cast<std::size_t>(i) * rank + j) * rank + k]; }
  /// (N_i)_{jk} = N_{ij}^k
  std::vector<std::vector<std::int64_t>> matrix(int i) const;

  bool operator==(const FusionRules& o) const = default;
};

/// Symmetries, unit law, N_{ij}^0 = delta_{i j*}, associativity and
/// commutativity of the fusion matrices, checked exhaustively.
Verdict check_fusion_invariants(const FusionRules& f);

/// Throws DegenerateS (S conj(S)^t != D^2 I, or some d_a = 0) or
/// NotFusionIntegral with the offending (i, j, k) and value.
FusionRules verlinde_fusion(const ModularDatum& datum);

Verdict check_balancing(const ModularDatum& datum, const FusionRules& fusion);
Verdict check_twist_equation(const ModularDatum& datum);

Cyclotomic fs_indicator(const ModularDatum& datum, const FusionRules& fusion, std::int64_t n, int k);
/// Smallest n <= 12 torder with nu_n(k) = d_k for all k; NotFound otherwise.
std::int64_t fs_exponent(const ModularDatum& datum, const FusionRules& fusion);

struct AdmissibilityReport {
  static constexpr std::array<const char*, 7> kNames{"(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)", "(vii)"};
  std::array<Verdict, 7> conditions;

  bool pass() const;
};

AdmissibilityReport check_admissible(const ModularDatum& datum);

}  // namespace modcat
