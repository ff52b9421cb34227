#include "modcat/catalog.hpp"

#include "modcat/error.hpp"
#include "modcat/numtheory.hpp"

namespace modcat {

ModularDatum su2_odd_mod2(std::int64_t p, std::int64_t conj) {
  const std::int64_t q = 2 * p + 1;
  if (!nt::is_prime(p) || !nt::is_prime(q))
    throw Error(ErrorKind::InvalidFamily, "need p and q = 2p+1 prime, got p = " + std::to_string(p));
  if (nt::gcd(conj, q) != 1) throw Error(ErrorKind::NotAUnit, std::to_string(conj) + " mod " + std::to_string(q));
  const Cyclotomic base = sin_pi(1, q).inv();
  Matrix S = zero_matrix(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
  std::vector<RootOfUnity> twists;
  for (std::int64_t i = 0; i < p; ++i) {
    for (std::int64_t j = 0; j < p; ++j)
      S[i][j] = (sin_pi((2 * i + 1) * (2 * j + 1), q) * base).reduce_conductor().galois(conj);
    twists.push_back(RootOfUnity(i * i + i, q).galois(conj));
  }
  return ModularDatum::from_twists(std::move(S), twists);
}

ModularDatum pointed_Zn(std::int64_t n, std::int64_t m) {
  if (n < 1 || n % 2 == 0) throw Error(ErrorKind::InvalidParameters, "n must be odd and positive");
  if (nt::gcd(2 * m, n) != 1) throw Error(ErrorKind::NotModular, "the form j -> m j^2 is degenerate mod " + std::to_string(n));
  Matrix S = zero_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  std::vector<RootOfUnity> twists;
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t k = 0; k < n; ++k) S[j][k] = Cyclotomic::zeta(n, -2 * m * j * k);
    twists.emplace_back(m * j * j, n);
  }
  return ModularDatum::from_twists(std::move(S), twists);
}

ModularDatum su2_4_family(const Su2_4Params& prm) {
  if ((prm.nu1 != 1 && prm.nu1 != -1) || (prm.nu2 != 1 && prm.nu2 != -1))
    throw Error(ErrorKind::InvalidParameters, "nu1 and nu2 must be +1 or -1");
  if (prm.theta2.order() != 3) throw Error(ErrorKind::InvalidParameters, "theta2 must be a primitive cube root of unity");
  const int nu3 = prm.theta2 == RootOfUnity(1, 3) ? 1 : -1;
  const RootOfUnity want = RootOfUnity(prm.nu2 * nu3 == 1 ? 3 : 1, 4);  // -nu2 nu3 i
  if (prm.theta3.pow(2) != want)
    throw Error(ErrorKind::InvalidParameters, "theta3^2 = " + prm.theta3.pow(2).to_string() + ", expected " + want.to_string());
  const Cyclotomic r3 = Cyclotomic::zeta(12) + Cyclotomic::zeta(12, -1);
  const Cyclotomic a = r3 * Cyclotomic(prm.nu1);
  const Cyclotomic b = r3 * Cyclotomic(prm.nu2);
  const Cyclotomic one(1), two(2), zero;
  Matrix S{{one, one, two, a, a},
           {one, one, two, -a, -a},
           {two, two, -two, zero, zero},
           {a, -a, zero, -b, b},
           {a, -a, zero, b, -b}};
  return ModularDatum::from_twists(std::move(S),
                                   {RootOfUnity(), RootOfUnity(), prm.theta2, prm.theta3, prm.theta3 * RootOfUnity(1, 2)});
}

Su2_4Params su2_4_parameters(int index) {
  if (index < 0 || index > 15) throw Error(ErrorKind::OutOfRange, "index must be in 0..15");
  Su2_4Params p;
  p.nu1 = (index & 8) ? -1 : 1;
  p.nu2 = (index & 4) ? -1 : 1;
  const int nu3 = (index & 2) ? -1 : 1;
  p.theta2 = RootOfUnity(nu3 == 1 ? 1 : 2, 3);
  const bool upper = index & 1;
  if (p.nu2 * nu3 == 1)
    p.theta3 = RootOfUnity(upper ? 7 : 3, 8);
  else
    p.theta3 = RootOfUnity(upper ? 5 : 1, 8);
  return p;
}

std::vector<ModularDatum> all_su2_4_family() {
  std::vector<ModularDatum> out;
  for (int i = 0; i < 16; ++i) out.push_back(su2_4_family(su2_4_parameters(i)));
  return out;
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  for (std::int64_t p : {2, 3, 5})
    for (std::int64_t c = 1; c < 2 * p + 1; ++c) out.push_back({"su2_odd_mod2(" + std::to_string(p) + "," + std::to_string(c) + ")", su2_odd_mod2(p, c)});
  out.push_back({"pointed_Zn(1,1)", pointed_Zn(1, 1)});
  for (std::int64_t m : {1, 2}) out.push_back({"pointed_Zn(3," + std::to_string(m) + ")", pointed_Zn(3, m)});
  for (std::int64_t m : {1, 2, 3, 4}) out.push_back({"pointed_Zn(5," + std::to_string(m) + ")", pointed_Zn(5, m)});
  for (int i = 0; i < 16; ++i) out.push_back({"su2_4_family(" + std::to_string(i) + ")", su2_4_family(su2_4_parameters(i))});
  return out;
}

}  // namespace modcat
