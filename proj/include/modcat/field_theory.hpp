#pragma once

// Conductors, modularly admissible cyclotomic extensions and the level
// enumeration for prime-power Galois shapes.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modcat/modular_data.hpp"

namespace modcat {

/// Z/p^{r_1} x ... x Z/p^{r_m}, or (Z/2)^m when multiquadratic.
struct GroupShape {
  bool multiquadratic = false;
  std::int64_t p = 2;
  std::vector<int> r;  // sorted, each >= 1

  int m() const { return static_cast<int>(r.size()); }
  std::int64_t order() const;
};

/// "p=3,m=1,r=1" (r may be a colon list "1:3") or "multiquadratic,m=2".
GroupShape parse_shape(std::string_view text);
std::string to_string(const GroupShape& shape);

std::int64_t subfield_conductor(const std::vector<Cyclotomic>& generators);

struct AdmissibleLevelReport {
  std::int64_t conductor = 1;  // f, the conductor of K
  Verdict multi_quadratic;     // Gal(Q_n/K) elementary abelian 2-group
  Verdict quotient_divides_24;  // n/f | 24
  Verdict gcd_divides_2;       // gcd(n/f, f) | 2
  Verdict galois_in_2_cubed;   // Gal(Q_n/Q_f) embeds in (Z/2)^3

  bool admissible() const { return multi_quadratic.pass; }
};

/// Throws BadLevel when some generator does not lie in Q_n.
AdmissibleLevelReport is_modularly_admissible(std::int64_t n, const std::vector<Cyclotomic>& generators);

/// Candidate levels n for a modularly admissible Q_n / K with Gal(K/Q) of the given shape.
std::vector<std::int64_t> enumerate_levels(const GroupShape& shape);

/// Whether (Z/n)^x has a quotient by a subgroup of its 2-torsion isomorphic
/// to the shape, i.e. Q_n contains some K with that Galois group and
/// Q_n / K modularly admissible. Brute force on the unit group.
bool admits_shape(std::int64_t n, const GroupShape& shape);

/// Odd primes q | n: q = 3 mod 4, and for q > 3 a simple factor 2 p^r + 1
/// (with p given, or any prime p otherwise).
Verdict odd_prime_constraints(std::int64_t n, std::optional<std::int64_t> p = std::nullopt);

struct CauchySupport {
  std::vector<std::int64_t> norm_primes;
  std::vector<std::int64_t> level_primes;
  Verdict verdict;
};
CauchySupport cauchy_prime_support(const Cyclotomic& global_dim_sq, std::int64_t torder);
CauchySupport cauchy_prime_support(const ModularDatum& datum);

}  // namespace modcat
