#pragma once

// Galois action on modular data: the permutations h_sigma of the labels,
// sign functions, orbits and the exclusion predicates used at rank 5.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modcat/modular_data.hpp"
#include "modcat/sl2z.hpp"

namespace modcat {

struct GaloisProfile {
  std::int64_t field_conductor = 1;
  std::vector<std::int64_t> group;  // units mod field_conductor
  std::map<std::int64_t, Permutation> perms;
  /// Signs on the canonical lift; empty when the datum has no lift.
  std::map<std::int64_t, std::vector<int>> signs;
  std::vector<std::vector<int>> orbits;

  /// h_sigma for any integer k coprime to field_conductor.
  const Permutation& perm(std::int64_t k) const;
  /// Distinct permutations in the image, sorted.
  std::vector<Permutation> image() const;
  const std::vector<int>& orbit_of(int j) const;
};

/// Throws NotGaloisStable when some sigma(column) has no unique match.
GaloisProfile compute_profile(const ModularDatum& datum);

/// sigma_k(s_ij) = eps(i) s_{h(i) j} = eps(j) s_{i h(j)}; throws
/// NotGaloisSymmetric if no consistent signed permutation exists.
SignedPermutation sign_function(const ModularRep& rep, std::int64_t k);
/// G_sigma = sigma(s) s^{-1}.
Matrix galois_sign_matrix(const ModularRep& rep, std::int64_t k);

/// sigma^2(t_i) = t_{h_sigma(i)} for every unit sigma mod rep.level.
Verdict check_twist_symmetry(const ModularRep& rep, const GaloisProfile& profile);

enum class DimensionClass { Integral, WeaklyIntegral, PseudoUnitaryCandidate, Generic };
const char* to_string(DimensionClass c);

struct DimensionReport {
  DimensionClass kind = DimensionClass::Generic;
  bool pseudo_unitary = false;
  /// Column a with S_ia / S_0a > 0 for all i (the FP character).
  int fp_column = 0;
  /// A unit k with h_k(0) = fp_column, when the FP column lies in the orbit of 0.
  std::optional<std::int64_t> pseudo_unitarizing_unit;
  /// For weakly integral data with positive dims: d constant on orbits.
  std::optional<Verdict> dims_constant_on_orbits;
};
DimensionReport classify_dimensions(const ModularDatum& datum, const GaloisProfile& profile);

struct NamedVerdict {
  std::string name;
  Verdict verdict;
};

/// Forbidden cycle types at odd rank r >= 5, evaluated on explicit group
/// elements: (0 a)(r-2 cycle) and (r-2 cycle through 0)(2-cycle of self-dual labels).
std::vector<NamedVerdict> forbidden_cycle_predicates(int rank, const std::vector<Permutation>& elements,
                                                     const std::vector<bool>& self_dual);
std::vector<NamedVerdict> exclusion_predicates(const ModularDatum& datum, const GaloisProfile& profile);

std::string cycle_notation(const Permutation& p);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b

}  // namespace modcat
