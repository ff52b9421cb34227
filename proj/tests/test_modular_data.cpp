#include "doctest.h"
#include "modcat/catalog.hpp"
#include "modcat/modular_data.hpp"
#include "modcat/numtheory.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace modcat;
using support::kind_of;

namespace {

// N_ij^k = sum_a S_ia S_ja conj(S_ka) / (D^2 S_0a), evaluated in doubles.
std::int64_t float_verlinde(const std::vector<std::vector<oracle::cplx>>& s, int i, int j, int k) {
  const std::size_t r = s.size();
  double dsq = 0;
  for (std::size_t a = 0; a < r; ++a) dsq += std::norm(s[0][a]);
  oracle::cplx sum = 0;
  for (std::size_t a = 0; a < r; ++a) sum += s[i][a] * s[j][a] * std::conj(s[k][a]) / (dsq * s[0][a]);
  CHECK(std::abs(sum.imag()) < 1e-8);
  CHECK(std::abs(sum.real() - std::round(sum.real())) < 1e-8);
  return std::llround(sum.real());
}

// nu_n(k) = D^-2 sum_ij N_ij^k d_i d_j (theta_i / theta_j)^n.
oracle::cplx float_indicator(const ModularDatum& d, const FusionRules& f, std::int64_t n, int k) {
  const auto s = oracle::eval(d.S);
  double dsq = 0;
  for (int a = 0; a < d.rank; ++a) dsq += std::norm(s[0][a]);
  oracle::cplx sum = 0;
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) {
      const std::int64_t e = n * (d.t_exponents[i] - d.t_exponents[j]);
      sum += static_cast<double>(f(i, j, k)) * s[0][i] * s[0][j] * oracle::root(e, d.torder);
    }
  return sum / dsq;
}

ModularDatum with_entry(ModularDatum d, int i, int j, const Cyclotomic& x) {
  d.S[i][j] = x;
  d.S[j][i] = x;
  return d;
}

}  // namespace

TEST_SUITE("modular_data") {
  TEST_CASE("the trivial datum") {
    const ModularDatum d;
    const FusionRules f = verlinde_fusion(d);
    CHECK(f(0, 0, 0) == 1);
    CHECK(check_admissible(d).pass());
    CHECK(fs_exponent(d, f) == 1);
  }

  TEST_CASE("Verlinde on pointed Z5 is the group law") {
    const ModularDatum d = pointed_Zn(5, 1);
    const FusionRules f = verlinde_fusion(d);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k) CHECK(f(i, j, k) == ((i + j) % 5 == k ? 1 : 0));
    CHECK(f.dual == std::vector<int>{0, 4, 3, 2, 1});
  }

  TEST_CASE("Verlinde agrees with the float oracle on the catalog") {
    for (const auto& [name, d] : support::catalog()) {
      CAPTURE(name);
      const FusionRules f = verlinde_fusion(d);
      const auto s = oracle::eval(d.S);
      for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j)
          for (int k = 0; k < d.rank; ++k) CHECK(f(i, j, k) == float_verlinde(s, i, j, k));
      CHECK(check_fusion_invariants(f));
      for (int j = 0; j < d.rank; ++j)
        for (int k = 0; k < d.rank; ++k) CHECK(f(0, j, k) == (j == k ? 1 : 0));
    }
  }

  TEST_CASE("the SU(2)_4 family shares one fusion tensor") {
    const auto family = all_su2_4_family();
    const FusionRules first = verlinde_fusion(family[0]);
    for (const auto& d : family) CHECK(verlinde_fusion(d) == first);
    // X_2 (x) X_2 = 1 + X_1 + X_2 in the labelling 1, X_1, X_2, X_3, X_4.
    CHECK(first(2, 2, 0) == 1);
    CHECK(first(2, 2, 1) == 1);
    CHECK(first(2, 2, 2) == 1);
  }

  TEST_CASE("fusion invariants catch a corrupted tensor") {
    FusionRules f = verlinde_fusion(su2_odd_mod2(5, 1));
    f.at(1, 2, 3) += 1;
    CHECK_FALSE(check_fusion_invariants(f));
  }

  TEST_CASE("S is projectively unitary and derived scalars are consistent") {
    for (const auto& [name, d] : support::catalog()) {
      CAPTURE(name);
      const DerivedScalars ds = derived_scalars(d);
      CHECK(is_scalar_identity(mat_mul(d.S, conj(transpose(d.S))), ds.global_dim_sq));
      CHECK(ds.gauss_plus * ds.gauss_minus == ds.global_dim_sq);
      REQUIRE(ds.anomaly);
      CHECK(ds.dual[0] == 0);
      bool self_dual = true;
      for (int j = 0; j < d.rank; ++j) {
        CHECK(ds.dual[ds.dual[j]] == j);
        self_dual = self_dual && ds.dual[j] == j;
      }
      bool real = true;
      for (const auto& row : d.S)
        for (const auto& x : row) real = real && x.is_real();
      CHECK(self_dual == real);
    }
  }

  TEST_CASE("balancing") {
    for (const auto& [name, d] : support::catalog()) {
      CAPTURE(name);
      CHECK(check_balancing(d, verlinde_fusion(d)));
    }
    ModularDatum bad = su2_odd_mod2(5, 1);
    std::vector<RootOfUnity> twists;
    for (int j = 0; j < bad.rank; ++j) twists.push_back(bad.twist(j));
    twists[1] = twists[1] * RootOfUnity(1, 11);
    const ModularDatum perturbed = ModularDatum::from_twists(bad.S, twists);
    const Verdict v = check_balancing(perturbed, verlinde_fusion(perturbed));
    CHECK_FALSE(v);
    CHECK_FALSE(v.witness.empty());
  }

  TEST_CASE("twist equation") {
    for (const auto& [name, d] : support::catalog()) {
      CAPTURE(name);
      CHECK(check_twist_equation(d));
    }
    const ModularDatum d = su2_4_family(su2_4_parameters(0));
    std::vector<RootOfUnity> twists;
    for (int j = 0; j < d.rank; ++j) twists.push_back(d.twist(j));
    twists[3] = twists[3] * RootOfUnity(1, 4);
    twists[4] = twists[4] * RootOfUnity(1, 4);
    CHECK_FALSE(check_twist_equation(ModularDatum::from_twists(d.S, twists)));
  }

  TEST_CASE("Frobenius-Schur indicators") {
    for (const auto& [name, d] : support::catalog()) {
      CAPTURE(name);
      const FusionRules f = verlinde_fusion(d);
      for (int k = 0; k < d.rank; ++k) {
        CHECK(fs_indicator(d, f, 1, k) == Cyclotomic(k == 0 ? 1 : 0));
        const Cyclotomic nu2 = fs_indicator(d, f, 2, k);
        if (f.dual[k] == k) {
          CHECK((nu2 == Cyclotomic(1) || nu2 == Cyclotomic(-1)));
        } else {
          CHECK(nu2.is_zero());
        }
        for (std::int64_t n = 1; n <= d.torder; ++n) {
          const Cyclotomic nu = fs_indicator(d, f, n, k);
          CHECK(nu == fs_indicator(d, f, n + d.torder, k));
          CHECK(nu.is_algebraic_integer());
          CHECK(oracle::close(oracle::eval(nu), float_indicator(d, f, n, k), 1e-8));
        }
      }
    }
  }

  TEST_CASE("FS exponents") {
    CHECK(fs_exponent(su2_odd_mod2(5, 1), verlinde_fusion(su2_odd_mod2(5, 1))) == 11);
    CHECK(fs_exponent(pointed_Zn(5, 1), verlinde_fusion(pointed_Zn(5, 1))) == 5);
    const ModularDatum s4 = su2_4_family(su2_4_parameters(0));
    CHECK(fs_exponent(s4, verlinde_fusion(s4)) == 24);
    for (const auto& [name, d] : support::catalog()) {
      CAPTURE(name);
      const std::int64_t e = fs_exponent(d, verlinde_fusion(d));
      CHECK(d.torder % e == 0);
    }
  }

  TEST_CASE("admissibility") {
    for (const auto& [name, d] : support::catalog()) {
      CAPTURE(name);
      const AdmissibilityReport rep = check_admissible(d);
      for (std::size_t c = 0; c < rep.conditions.size(); ++c) {
        CAPTURE(AdmissibilityReport::kNames[c]);
        CHECK(rep.conditions[c].pass);
      }
    }
    const ModularDatum base = su2_odd_mod2(5, 1);
    const AdmissibilityReport doubled = check_admissible(with_entry(base, 1, 2, base.S[1][2] * Cyclotomic(2)));
    CHECK_FALSE(doubled.pass());
    CHECK_FALSE(doubled.conditions[0].pass);
  }

  TEST_CASE("structural errors") {
    ModularDatum d = su2_odd_mod2(2, 1);
    d.S[0][1] = d.S[0][1] + Cyclotomic(1);
    CHECK(kind_of([&] { d.validate(); }) == ErrorKind::SchemaViolation);
    const ModularDatum base = pointed_Zn(3, 1);
    CHECK(kind_of([&] { ModularDatum::from_twists(base.S, {RootOfUnity(1, 3), RootOfUnity(1, 3), RootOfUnity(1, 3)}); }) ==
          ErrorKind::SchemaViolation);
    Matrix zero_col = base.S;
    for (auto& row : zero_col) row[2] = Cyclotomic();
    for (auto& x : zero_col[2]) x = Cyclotomic();
    ModularDatum degenerate = base;
    degenerate.S = zero_col;
    CHECK(kind_of([&] { verlinde_fusion(degenerate); }) == ErrorKind::DegenerateS);
  }

  TEST_CASE("non-integral Verlinde output") {
    // [[1, 2], [2, -1]] is unitary up to 5 but gives N_11^1 = 3/2.
    const ModularDatum d = ModularDatum::from_twists({{Cyclotomic(1), Cyclotomic(2)}, {Cyclotomic(2), Cyclotomic(-1)}},
                                                     {RootOfUnity(), RootOfUnity()});
    CHECK(kind_of([&] { verlinde_fusion(d); }) == ErrorKind::NotFusionIntegral);
    CHECK_FALSE(check_admissible(d).pass());
  }
}
