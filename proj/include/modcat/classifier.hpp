#pragma once

// Rank-5 verification harness: Galois cases, Grothendieck equivalence,
// the vanishing-sum scan and the integral dimension search.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modcat/catalog.hpp"
#include "modcat/galois.hpp"

namespace modcat {

struct PermGroup {
  std::string name;  // generators in cycle notation
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted
};
PermGroup generate_group(int degree, const std::vector<Permutation>& generators);
/// Some relabeling pi with pi G pi^-1 == H, if any.
std::optional<Permutation> conjugating_relabeling(const PermGroup& g, const PermGroup& h);

/// The seven cyclic / Klein-four Galois groups possible at rank 5.
std::vector<PermGroup> rank5_galois_cases();

/// pi with pi(0) = 0 and N2_{pi(i) pi(j)}^{pi(k)} = N1_{ij}^k. Throws TooLarge above rank 8.
std::optional<Permutation> grothendieck_equiv(const FusionRules& f1, const FusionRules& f2);

struct VanishingCheck {
  bool sum_is_zero = false;
  /// alpha = +-1, beta = +-i, a + alpha c_alpha = 0, b i + c_beta beta = 0 (vacuous when the sum is nonzero).
  Verdict conclusions;
};
/// a + b i + c_alpha alpha + c_beta beta with nonzero integer coefficients and
/// ord(alpha) <= ord(beta); throws InvalidParameters otherwise.
VanishingCheck vanishing_sum_check(std::int64_t a, std::int64_t b, std::int64_t c_alpha, std::int64_t c_beta,
                                   const RootOfUnity& alpha, const RootOfUnity& beta);

struct VanishingScan {
  int max_order = 0;
  std::int64_t pairs_checked = 0;
  /// (alpha, beta) admitting a relation with all four coefficients nonzero, outside {+-1} x {+-i}.
  std::vector<std::pair<RootOfUnity, RootOfUnity>> counterexamples;
  /// Pairs in {+-1} x {+-i} where a relation exists (expected: all four).
  std::int64_t lemma_instances = 0;
};
/// All root pairs with ord(alpha) <= ord(beta) <= max_order.
VanishingScan vanishing_sum_scan(int max_order = 60);

struct DimensionSearchOptions {
  std::vector<std::int64_t> modulus_filters;
  /// Require D^2 to be a perfect square (D rational).
  bool integral_global_dimension = false;
  /// Largest dimension tried in the bounded enumeration.
  std::int64_t max_dim = 5000;
};
struct DimensionSearchResult {
  /// Dimension vectors, one entry per label, in orbit order.
  std::vector<std::vector<std::int64_t>> survivors;
  /// A modulus over which the dimension equation has no residue solution
  /// (so no solution exists at any size), when one was found.
  std::optional<std::int64_t> residue_certificate;
};
/// Integer dimensions constant on orbits (the first orbit is {0}, d_0 = 1),
/// all prime factors of every d_i and of D^2 in prime_set, d_i^2 | D^2.
DimensionSearchResult integral_dimension_search(int rank, const std::vector<int>& orbit_multiplicities,
                                                const std::vector<std::int64_t>& prime_set,
                                                const DimensionSearchOptions& options = {});

struct DatumReport {
  std::string name;
  std::string fusion_class;
  std::vector<NamedVerdict> predicates;
  bool pass() const;
};
struct Rank5Report {
  std::vector<DatumReport> data;
  std::vector<std::string> not_instantiated;
  bool pass() const;
};
struct Rank5Options {
  /// Rank-5 catalog entries when empty.
  std::vector<CatalogEntry> data;
};
Rank5Report rank5_suite(const Rank5Options& options = {});

}  // namespace modcat
