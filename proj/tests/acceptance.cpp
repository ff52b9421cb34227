// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "modcat/catalog.hpp"
#include "modcat/classifier.hpp"
#include "modcat/field_theory.hpp"
#include "modcat/galois.hpp"
#include "modcat/numtheory.hpp"
#include "modcat/sl2z.hpp"
#include "printed_spectra.hpp"

using namespace modcat;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

struct Criterion {
  std::string title;
  double budget_s;  // 0 = no time limit
  std::function<Outcome()> run;
};

std::vector<std::int64_t> multiples_dividing(std::int64_t base, std::int64_t top) {
  std::vector<std::int64_t> out;
  for (std::int64_t d : nt::divisors(top))
    if (d % base == 0) out.push_back(d);
  return out;
}

bool is_cycle_of_length(const Permutation& p, int len) {
  int x = 0, steps = 0;
  do {
    x = p[x];
    ++steps;
  } while (x != 0);
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] == i) return false;
  return steps == len;
}

Outcome su2_9() {
  Outcome o;
  const ModularDatum d = su2_odd_mod2(5, 1);
  o.require(check_admissible(d).pass(), "not admissible");
  o.require(d.torder == 11, "ord(T) != 11");
  o.require(fs_exponent(d, verlinde_fusion(d)) == 11, "FSexp != 11");
  const GaloisProfile prof = compute_profile(d);
  const PermGroup g = generate_group(5, prof.image());
  o.require(g.elements.size() == 5, "Galois group order != 5");
  for (const auto& p : prof.image())
    if (!std::is_sorted(p.begin(), p.end())) o.require(is_cycle_of_length(p, 5), cycle_notation(p) + " is not a 5-cycle");
  const CauchySupport c = cauchy_prime_support(d);
  o.require(c.norm_primes == std::vector<std::int64_t>{11} && c.level_primes == std::vector<std::int64_t>{11}, "Cauchy support != {11}");
  return o;
}

Outcome su2_4() {
  Outcome o;
  const auto family = all_su2_4_family();
  o.require(family.size() == 16, "family size != 16");
  std::vector<FusionRules> rules;
  for (std::size_t n = 0; n < family.size(); ++n) {
    const ModularDatum& d = family[n];
    const std::string tag = "su2_4_family(" + std::to_string(n) + ")";
    o.require(check_admissible(d).pass(), tag + " not admissible");
    o.require(derived_scalars(d).global_dim_sq == Cyclotomic(12), tag + " D^2 != 12");
    rules.push_back(verlinde_fusion(d));
    const GaloisProfile prof = compute_profile(d);
    o.require(prof.image() == std::vector<Permutation>{{0, 1, 2, 3, 4}, {1, 0, 2, 3, 4}}, tag + " Gal(C) != <(0 1)>");
    std::vector<int> eps;
    for (int j = 2; j < 5; ++j) eps.push_back((d.S[1][j] / d.S[0][j]) == Cyclotomic(1) ? 1 : (d.S[1][j] / d.S[0][j]) == Cyclotomic(-1) ? -1 : 0);
    o.require(eps == std::vector<int>{1, -1, -1}, tag + " sign pattern != (1,-1,-1)");
    // eps_j = eps_sigma(1) eps_sigma(j) for sigma with h_sigma = (0 1)
    const ModularRep rep = canonical_lift(d);
    std::int64_t level = 1;
    for (const auto& row : rep.s)
      for (const auto& x : row) level = nt::lcm(level, x.order());
    bool swapped = false;
    for (std::int64_t k : nt::units(level)) {
      const SignedPermutation sp = sign_function(rep, k);
      if (sp.perm != Permutation{1, 0, 2, 3, 4}) continue;
      swapped = true;
      for (int j = 2; j < 5; ++j) o.require(sp.signs[1] * sp.signs[j] == eps[j - 2], tag + " eps_sigma disagrees");
    }
    o.require(swapped, tag + " no sigma with h_sigma = (0 1)");
  }
  for (std::size_t a = 0; a < rules.size(); ++a)
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const auto w = grothendieck_equiv(rules[a], rules[b]);
      bool ok = w.has_value();
      for (int i = 0; i < 5 && ok; ++i)
        for (int j = 0; j < 5 && ok; ++j)
          for (int k = 0; k < 5 && ok; ++k) ok = rules[b]((*w)[i], (*w)[j], (*w)[k]) == rules[a](i, j, k);
      o.require(ok, "no fusion witness for pair " + std::to_string(a) + "," + std::to_string(b));
    }
  return o;
}

Outcome levels() {
  Outcome o;
  o.require(enumerate_levels(parse_shape("p=5,m=1,r=1")) == multiples_dividing(11, 264), "p=5 levels differ");
  auto p3 = multiples_dividing(7, 168);
  for (auto n : multiples_dividing(9, 72)) p3.push_back(n);
  std::sort(p3.begin(), p3.end());
  o.require(enumerate_levels(parse_shape("p=3,m=1,r=1")) == p3, "p=3 levels differ");
  for (int m = 1; m <= 4; ++m)
    for (auto n : enumerate_levels(parse_shape("multiquadratic,m=" + std::to_string(m))))
      o.require(240 % n == 0, "multiquadratic level " + std::to_string(n) + " does not divide 240");
  return o;
}

Outcome twist_symmetry() {
  Outcome o;
  int lifts = 0;
  for (const auto& [name, d] : catalog_entries()) {
    const GaloisProfile prof = compute_profile(d);
    for (const auto& rep : all_lifts(d)) {
      ++lifts;
      const Verdict v = check_twist_symmetry(rep, prof);
      o.require(v.pass, name + ": " + v.witness);
    }
  }
  if (o.pass) o.note = std::to_string(lifts) + " lifts";
  return o;
}

Outcome connectivity() {
  Outcome o;
  int lifts = 0;
  for (const auto& [name, d] : catalog_entries())
    for (const auto& rep : all_lifts(d)) {
      ++lifts;
      const Verdict v = spectra_connectivity(rep);
      o.require(v.pass, name + ": " + v.witness);
    }
  const ModularRep split = make_rep(identity_matrix(2), {RootOfUnity(), RootOfUnity(1, 3)});
  o.require(!spectra_connectivity(split).pass, "block-diagonal counterexample accepted");
  if (o.pass) o.note = std::to_string(lifts) + " lifts, counterexample rejected";
  return o;
}

Outcome table_round_trip() {
  Outcome o;
  const auto printed = printed_spectra::printed();
  const auto& table = spectra_table();
  o.require(table.size() == printed.size(), "row count differs");
  int values = 0;
  for (std::size_t r = 0; r < std::min(table.size(), printed.size()); ++r) {
    const std::string tag = "row " + std::to_string(r);
    o.require(table[r].degree == printed[r].degree && table[r].level == printed[r].level &&
                  (table[r].parity == Parity::Even) == printed[r].even,
              tag + " header differs");
    o.require(table[r].spectra.size() == printed[r].spectra.size(), tag + " spectrum count differs");
    for (std::size_t k = 0; k < std::min(table[r].spectra.size(), printed[r].spectra.size()); ++k) {
      o.require(table[r].spectra[k].size() == printed[r].spectra[k].size(), tag + " degree differs");
      for (std::size_t e = 0; e < std::min(table[r].spectra[k].size(), printed[r].spectra[k].size()); ++e) {
        const ComplexValue v = complex_eval(Cyclotomic::from_root(table[r].spectra[k][e]), 15);
        const auto want = printed[r].spectra[k][e].value();
        o.require(std::abs(v.real() - want.real()) < 1e-12 && std::abs(v.imag() - want.imag()) < 1e-12, tag + " value differs");
        ++values;
      }
    }
  }
  const auto two_five = spectra_lookup(2, 5, Parity::Odd);
  o.require(two_five.size() == 1 && two_five[0].spectra.size() == 2, "lookup(2,5,odd) does not give two pairs");
  if (two_five.size() == 1 && two_five[0].spectra.size() == 2) {
    const std::vector<printed_spectra::Spectrum> want{{{1, 2, 5}, {1, -2, 5}}, {{1, 4, 5}, {1, -4, 5}}};
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t e = 0; e < 2; ++e) {
        const ComplexValue v = complex_eval(Cyclotomic::from_root(two_five[0].spectra[k][e]), 15);
        o.require(std::abs(v.real() - want[k][e].value().real()) < 1e-12 && std::abs(v.imag() - want[k][e].value().imag()) < 1e-12,
                  "lookup(2,5,odd) differs from the printed pairs");
      }
  }
  if (o.pass) o.note = std::to_string(values) + " eigenvalues";
  return o;
}

Outcome rank7() {
  Outcome o;
  const auto bounded = integral_dimension_search(7, {1, 5, 1}, {2, 3, 11});
  o.require(bounded.survivors.empty(), std::to_string(bounded.survivors.size()) + " survivors");
  // With D rational the equation has no solution modulo 5 at any size.
  const auto res = integral_dimension_search(7, {1, 5, 1}, {2, 3, 11}, {.modulus_filters = {5}, .integral_global_dimension = true});
  o.require(res.survivors.empty() && res.residue_certificate == 5, "no residue certificate mod 5");
  if (o.pass) o.note = "no residue solution mod 5";
  return o;
}

Outcome fusion_invariants() {
  Outcome o;
  int count = 0;
  for (const auto& [name, d] : catalog_entries()) {
    const Verdict v = check_fusion_invariants(verlinde_fusion(d));
    o.require(v.pass, name + ": " + v.witness);
    ++count;
  }
  if (o.pass) o.note = std::to_string(count) + " fusion rings";
  return o;
}

Outcome psi() {
  Outcome o;
  for (std::int64_t p : {5, 7}) {
    const PsiCertificate cert = inadmissible_psi(p);
    o.require(check_relations(cert.rep.s, cert.rep.t).pass, "psi_" + std::to_string(p) + " relations fail");
    o.require(cert.sqrt_p_plus_1 * cert.sqrt_p_plus_1 == Cyclotomic(p + 1), "bad sqrt(p+1)");
    o.require(p % cert.sqrt_conductor != 0, "sqrt(" + std::to_string(p + 1) + ") lies in Q_" + std::to_string(p));
    o.require(cert.inadmissible.pass, cert.inadmissible.witness);
  }
  return o;
}

Outcome vanishing() {
  Outcome o;
  const VanishingScan scan = vanishing_sum_scan(24);
  o.require(scan.counterexamples.empty(), std::to_string(scan.counterexamples.size()) + " counterexamples");
  if (o.pass) o.note = std::to_string(scan.pairs_checked) + " pairs";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"SU(2)_9/Z_2: admissible, FSexp 11, Galois Z/5 by 5-cycles, Cauchy {11}", 10, su2_9},
      {"SU(2)_4 family: 16 admissible, D^2 = 12, one fusion ring, Gal = <(0 1)>, eps = (1,-1,-1)", 30, su2_4},
      {"level enumeration for p=5, p=3 and multiquadratic shapes", 0, levels},
      {"Galois twist symmetry on every lift of every catalog datum", 0, twist_symmetry},
      {"spectra connectivity on every catalog lift; split counterexample rejected", 0, connectivity},
      {"degree <= 4 spectra table round trip at 15 digits; lookup(2,5,odd)", 0, table_round_trip},
      {"rank 7, orbits (1,5,1), primes {2,3,11}: no integral dimensions", 60, rank7},
      {"fusion invariants on every computed fusion ring", 0, fusion_invariants},
      {"psi_5, psi_7: SL(2,Z) relations and sqrt(p+1) outside Q_p", 0, psi},
      {"vanishing sums up to order 24: no counterexamples", 120, vanishing},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) o.require(false, "over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget");
    failures += !o.pass;
    std::printf("[%s] %2zu %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, c.title.c_str(), secs, o.note.empty() ? "" : ": ",
                o.note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
