#pragma once

// Explicit families of modular data.

#include <cstdint>
#include <string>
#include <vector>

#include "modcat/modular_data.hpp"

namespace modcat {

/// SU(2)_{2p-1}/Z_2 with q = 2p+1 prime, Galois-conjugated by sigma_conj.
/// Throws InvalidFamily when p or q is not prime, NotAUnit when q | conj.
ModularDatum su2_odd_mod2(std::int64_t p, std::int64_t conj = 1);

/// Pointed Z_n data from the quadratic form j -> m j^2 (n odd):
/// theta_j = zeta_n^{m j^2}, S_jk = zeta_n^{-2 m j k}.
ModularDatum pointed_Zn(std::int64_t n, std::int64_t m = 1);

struct Su2_4Params {
  int nu1 = 1;
  int nu2 = 1;
  RootOfUnity theta2{1, 3};
  RootOfUnity theta3{3, 8};
};

/// The rank-5 data with SU(2)_4 fusion rules, T = diag(1, 1, theta2, theta3, -theta3).
/// Throws InvalidParameters unless theta2 has order 3 and theta3^2 = -nu2 nu3 i,
/// where theta2 = exp(nu3 2 pi i / 3).
ModularDatum su2_4_family(const Su2_4Params& params);
/// Index 0..15: bits (nu1, nu2, nu3, choice of theta3) from the high bit down.
Su2_4Params su2_4_parameters(int index);
std::vector<ModularDatum> all_su2_4_family();

struct CatalogEntry {
  std::string name;
  ModularDatum datum;
};
/// Every datum the test suites sweep over.
std::vector<CatalogEntry> catalog_entries();

}  // namespace modcat
