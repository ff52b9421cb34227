#pragma once

// Normalized modular pairs (s, t) lifting the projective SL(2,Z)
// representation of a datum, plus spectral checks on them.

#include <cstdint>
#include <optional>
#include <vector>

#include "modcat/modular_data.hpp"

namespace modcat {

using Permutation = std::vector<int>;

enum class Parity { Even, Odd, Neither };
const char* to_string(Parity p);

struct ModularRep {
  int rank = 1;
  Matrix s{{Cyclotomic(1)}};
  std::vector<RootOfUnity> t{RootOfUnity()};
  std::int64_t level = 1;  // ord(t)
  Parity parity = Parity::Even;

  Cyclotomic t_value(int i) const { return Cyclotomic::from_root(t[i]); }
};

/// Builds (s, t) from s and t, computing level and parity. Throws NotModular
/// unless s^4 = I and (st)^3 = s^2.
ModularRep make_rep(Matrix s, std::vector<RootOfUnity> t);
Verdict check_relations(const Matrix& s, const std::vector<RootOfUnity>& t);

/// The positive square root D of D^2, as an exact cyclotomic number.
Cyclotomic global_dimension(const ModularDatum& datum);

/// rho_x^zeta with x = zeta_12^x_exp and zeta the zeta_choice-th sixth root
/// of the anomaly (0..5). Throws NotModular when the relations fail.
ModularRep normalize(const ModularDatum& datum, int x_exp, int zeta_choice = 0);
/// The lift with s = S / D.
ModularRep canonical_lift(const ModularDatum& datum);
/// All twelve rho_x for a fixed sixth root.
std::vector<ModularRep> all_lifts(const ModularDatum& datum, int zeta_choice = 0);

/// Connectivity of the graph on distinct t-eigenvalues joined by nonzero s entries.
Verdict spectra_connectivity(const ModularRep& rep);

struct Obstruction120 {
  Verdict verdict;
  /// (r-2)-subsets of labels whose t-values contain no 120th root of unity.
  std::vector<std::vector<int>> flagged;
};
Obstruction120 obstruction_120(const ModularRep& rep, int subdegree);

struct SpectrumRecord {
  int degree = 0;
  Parity parity = Parity::Even;
  std::int64_t level = 1;
  std::vector<std::vector<RootOfUnity>> spectra;
};
const std::vector<SpectrumRecord>& spectra_table();
/// Throws NotTabulated when no row matches.
std::vector<SpectrumRecord> spectra_lookup(int degree, std::int64_t level, Parity parity);

struct PsiCertificate {
  ModularRep rep;
  Cyclotomic sqrt_p_plus_1;
  std::int64_t sqrt_conductor = 1;
  /// Passes when sqrt(p+1) lies outside Q_p.
  Verdict inadmissible;
};
/// The degree p, level p representation psi; throws OutOfRange for p <= 3 or p not prime.
PsiCertificate inadmissible_psi(std::int64_t p);

struct SignedPermutation {
  Permutation perm;
  std::vector<int> signs;
};
/// U with s2_{pi(i) pi(j)} = q_i q_j s1_{ij} and t2_{pi(i)} = t1_i, q_0 = +1.
/// Throws NotApplicable when a t has repeated eigenvalues.
std::optional<SignedPermutation> signed_perm_match(const ModularRep& rep1, const ModularRep& rep2);

}  // namespace modcat
