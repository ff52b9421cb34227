#include "modcat/classifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "modcat/error.hpp"
#include "modcat/field_theory.hpp"
#include "modcat/numtheory.hpp"

namespace modcat {

PermGroup generate_group(int degree, const std::vector<Permutation>& generators) {
  PermGroup g;
  g.generators = generators;
  Permutation id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::vector<Permutation> todo{id};
  while (!todo.empty()) {
    const Permutation p = todo.back();
    todo.pop_back();
    for (const auto& gen : generators) {
      Permutation q = compose(gen, p);
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  g.elements.assign(seen.begin(), seen.end());
  for (std::size_t i = 0; i < generators.size(); ++i) g.name += (i ? "," : "") + cycle_notation(generators[i]);
  g.name = "<" + g.name + ">";
  return g;
}

std::optional<Permutation> conjugating_relabeling(const PermGroup& g, const PermGroup& h) {
  if (g.elements.size() != h.elements.size() || g.elements.empty()) return std::nullopt;
  const std::size_t n = g.elements.front().size();
  Permutation pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  const std::set<Permutation> target(h.elements.begin(), h.elements.end());
  do {
    Permutation inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[static_cast<std::size_t>(pi[i])] = static_cast<int>(i);
    bool ok = true;
    for (const auto& x : g.elements)
      if (!target.count(compose(pi, compose(x, inv)))) {
        ok = false;
        break;
      }
    if (ok) return pi;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

std::vector<PermGroup> rank5_galois_cases() {
  const std::vector<std::vector<Permutation>> gens{
      {{1, 0, 2, 3, 4}},
      {{1, 2, 0, 3, 4}},
      {{1, 2, 3, 0, 4}},
      {{1, 2, 3, 4, 0}},
      {{1, 0, 3, 2, 4}},
      {{1, 0, 2, 3, 4}, {0, 1, 3, 2, 4}},
      {{1, 0, 3, 2, 4}, {2, 3, 0, 1, 4}},
  };
  std::vector<PermGroup> out;
  for (const auto& g : gens) out.push_back(generate_group(5, g));
  return out;
}

std::optional<Permutation> grothendieck_equiv(const FusionRules& f1, const FusionRules& f2) {
  if (f1.rank > 8 || f2.rank > 8) throw Error(ErrorKind::TooLarge, "rank above 8");
  if (f1.rank != f2.rank) return std::nullopt;
  const int r = f1.rank;
  Permutation pi(static_cast<std::size_t>(r));
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = 0; j < r && ok; ++j)
        for (int k = 0; k < r && ok; ++k) ok = f2(pi[i], pi[j], pi[k]) == f1(i, j, k);
    if (ok) return pi;
  } while (std::next_permutation(pi.begin() + 1, pi.end()));
  return std::nullopt;
}

VanishingCheck vanishing_sum_check(std::int64_t a, std::int64_t b, std::int64_t c_alpha, std::int64_t c_beta,
                                   const RootOfUnity& alpha, const RootOfUnity& beta) {
  if (a == 0 || b == 0 || c_alpha == 0 || c_beta == 0)
    throw Error(ErrorKind::InvalidParameters, "coefficients must be nonzero");
  if (alpha.order() > beta.order()) throw Error(ErrorKind::InvalidParameters, "need ord(alpha) <= ord(beta)");
  const Cyclotomic i = Cyclotomic::zeta(4);
  const Cyclotomic sum = Cyclotomic(a) + Cyclotomic(b) * i + Cyclotomic(c_alpha) * Cyclotomic::from_root(alpha) +
                         Cyclotomic(c_beta) * Cyclotomic::from_root(beta);
  VanishingCheck out;
  out.sum_is_zero = sum.is_zero();
  if (!out.sum_is_zero) return out;
  if (alpha.order() > 2) {
    out.conclusions = Verdict::fail("alpha = " + alpha.to_string() + " is not +-1");
  } else if (beta.order() != 4) {
    out.conclusions = Verdict::fail("beta = " + beta.to_string() + " is not +-i");
  } else {
    const std::int64_t sa = alpha.order() == 1 ? 1 : -1;
    const std::int64_t sb = beta == RootOfUnity(1, 4) ? 1 : -1;
    if (a + sa * c_alpha != 0)
      out.conclusions = Verdict::fail("a + alpha c_alpha != 0");
    else if (b + sb * c_beta != 0)
      out.conclusions = Verdict::fail("b i + c_beta beta != 0");
  }
  return out;
}

namespace {

using i128 = __int128;

int rank_of(std::vector<std::vector<i128>> m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    const auto& p = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const i128 f = m[r][c], g = p[c];
      i128 content = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        m[r][k] = m[r][k] * g - p[k] * f;
        const i128 v = m[r][k] < 0 ? -m[r][k] : m[r][k];
        content = std::gcd(static_cast<std::int64_t>(content), static_cast<std::int64_t>(v));
      }
      if (content > 1)
        for (auto& v : m[r]) v /= content;
    }
    ++rank;
  }
  return rank;
}

struct RamanujanTable {
  std::vector<std::int64_t> phi;
  std::vector<int> mu;
  explicit RamanujanTable(std::int64_t n) : phi(static_cast<std::size_t>(n + 1)), mu(static_cast<std::size_t>(n + 1)) {
    for (std::int64_t k = 1; k <= n; ++k) {
      phi[k] = nt::euler_phi(k);
      mu[k] = nt::moebius(k);
    }
  }
  std::int64_t operator()(std::int64_t L, std::int64_t e) const {
    const std::int64_t g = std::gcd(nt::mod(e, L), L);
    const std::int64_t m = L / g;
    return mu[m] * (phi[L] / phi[m]);
  }
};

}  // namespace

VanishingScan vanishing_sum_scan(int max_order) {
  if (max_order < 1) throw Error(ErrorKind::OutOfRange, "max_order must be positive");
  VanishingScan scan;
  scan.max_order = max_order;
  std::vector<RootOfUnity> roots;
  for (std::int64_t k = 1; k <= max_order; ++k)
    for (std::int64_t e : nt::units(k)) roots.emplace_back(k == 1 ? 0 : e, k);
  const RamanujanTable table(4LL * max_order * max_order);
  for (const auto& alpha : roots)
    for (const auto& beta : roots) {
      if (alpha.order() > beta.order()) continue;
      ++scan.pairs_checked;
      const std::int64_t L = nt::lcm(4, nt::lcm(alpha.order(), beta.order()));
      const std::array<std::int64_t, 4> e{0, L / 4, alpha.exponent_over(L), beta.exponent_over(L)};
      std::vector<std::vector<i128>> gram(4, std::vector<i128>(4));
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) gram[k][l] = table(L, e[k] - e[l]);
      const int rk = rank_of(gram);
      if (rk == 4) continue;
      // A fully nonzero kernel vector exists iff no coordinate vanishes on the
      // kernel, i.e. no unit vector lies in the row space.
      bool all_free = true;
      for (int c = 0; c < 4 && all_free; ++c) {
        auto ext = gram;
        std::vector<i128> unit(4, 0);
        unit[c] = 1;
        ext.push_back(unit);
        if (rank_of(ext) == rk) all_free = false;
      }
      if (!all_free) continue;
      const bool lemma_shape = alpha.order() <= 2 && beta.order() == 4;
      if (lemma_shape)
        ++scan.lemma_instances;
      else
        scan.counterexamples.emplace_back(alpha, beta);
    }
  return scan;
}

namespace {

std::vector<std::int64_t> smooth_numbers(const std::vector<std::int64_t>& primes, std::int64_t bound) {
  std::set<std::int64_t> out{1};
  std::vector<std::int64_t> todo{1};
  while (!todo.empty()) {
    const std::int64_t x = todo.back();
    todo.pop_back();
    for (std::int64_t p : primes)
      if (x <= bound / p && out.insert(x * p).second) todo.push_back(x * p);
  }
  return {out.begin(), out.end()};
}

bool is_smooth(std::int64_t n, const std::vector<std::int64_t>& primes) {
  for (std::int64_t p : primes)
    while (n % p == 0) n /= p;
  return n == 1;
}

bool is_square(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

std::set<std::int64_t> smooth_residues(const std::vector<std::int64_t>& primes, std::int64_t q) {
  std::set<std::int64_t> out{1 % q};
  std::vector<std::int64_t> todo{1 % q};
  while (!todo.empty()) {
    const std::int64_t x = todo.back();
    todo.pop_back();
    for (std::int64_t p : primes) {
      const std::int64_t y = x * p % q;
      if (out.insert(y).second) todo.push_back(y);
    }
  }
  return out;
}

bool residue_solvable(const std::vector<int>& mult, const std::vector<std::int64_t>& primes, std::int64_t q,
                      bool integral_d) {
  const auto res = smooth_residues(primes, q);
  const std::vector<std::int64_t> r(res.begin(), res.end());
  std::set<std::int64_t> targets;
  for (std::int64_t d : r) targets.insert(integral_d ? d * d % q : d);
  const std::size_t free = mult.size() - 1;
  std::vector<std::size_t> idx(free, 0);
  while (true) {
    std::int64_t sum = 1 % q;
    for (std::size_t i = 0; i < free; ++i) sum = (sum + mult[i + 1] * r[idx[i]] % q * r[idx[i]]) % q;
    if (targets.count(sum)) return true;
    std::size_t k = 0;
    while (k < free && ++idx[k] == r.size()) idx[k++] = 0;
    if (k == free) return false;
  }
}

}  // namespace

DimensionSearchResult integral_dimension_search(int rank, const std::vector<int>& mult,
                                                const std::vector<std::int64_t>& primes,
                                                const DimensionSearchOptions& opt) {
  if (rank < 1 || rank > 8) throw Error(ErrorKind::OutOfRange, "rank must be in 1..8");
  if (mult.empty() || mult[0] != 1 || std::accumulate(mult.begin(), mult.end(), 0) != rank)
    throw Error(ErrorKind::InvalidParameters, "orbit multiplicities must start with 1 and sum to the rank");
  for (std::int64_t p : primes)
    if (!nt::is_prime(p)) throw Error(ErrorKind::InvalidParameters, std::to_string(p) + " is not prime");

  DimensionSearchResult out;
  std::vector<std::int64_t> filters = opt.modulus_filters;
  if (filters.empty()) filters = {3, 4, 5, 7, 8, 9, 16};
  for (std::int64_t q : filters)
    if (q > 1 && !residue_solvable(mult, primes, q, opt.integral_global_dimension)) {
      out.residue_certificate = q;
      break;
    }

  const auto dims = smooth_numbers(primes, opt.max_dim);
  const std::size_t free = mult.size() - 1;
  std::vector<std::size_t> idx(free, 0);
  while (true) {
    std::int64_t d2 = 1;
    for (std::size_t i = 0; i < free; ++i) d2 += mult[i + 1] * dims[idx[i]] * dims[idx[i]];
    bool ok = is_smooth(d2, primes) && (!opt.integral_global_dimension || is_square(d2));
    for (std::size_t i = 0; i < free && ok; ++i) ok = d2 % (dims[idx[i]] * dims[idx[i]]) == 0;
    if (ok) {
      std::vector<std::int64_t> v{1};
      for (std::size_t i = 0; i < free; ++i) v.insert(v.end(), static_cast<std::size_t>(mult[i + 1]), dims[idx[i]]);
      out.survivors.push_back(v);
    }
    std::size_t k = 0;
    while (k < free && ++idx[k] == dims.size()) idx[k++] = 0;
    if (k == free) break;
  }
  std::sort(out.survivors.begin(), out.survivors.end());
  return out;
}

bool DatumReport::pass() const {
  return std::all_of(predicates.begin(), predicates.end(), [](const NamedVerdict& v) { return v.verdict.pass; });
}

bool Rank5Report::pass() const {
  return std::all_of(data.begin(), data.end(), [](const DatumReport& d) { return d.pass(); });
}

namespace {

struct FusionClass {
  std::string name;
  FusionRules rules;
};

const std::vector<FusionClass>& fusion_classes() {
  static const std::vector<FusionClass> classes{
      {"(i) SU(2)_4", verlinde_fusion(su2_4_family(su2_4_parameters(0)))},
      {"(ii) SU(2)_9/Z_2", verlinde_fusion(su2_odd_mod2(5, 1))},
      {"(iii) SU(5)_1", verlinde_fusion(pointed_Zn(5, 1))},
  };
  return classes;
}

template <class F>
Verdict guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return Verdict::fail(e.what());
  }
}

DatumReport run_datum(const CatalogEntry& entry) {
  DatumReport rep;
  rep.name = entry.name;
  const ModularDatum& d = entry.datum;
  auto add = [&](std::string name, Verdict v) { rep.predicates.push_back({std::move(name), std::move(v)}); };

  const AdmissibilityReport adm = check_admissible(d);
  for (std::size_t i = 0; i < adm.conditions.size(); ++i)
    add(std::string("admissible ") + AdmissibilityReport::kNames[i], adm.conditions[i]);

  rep.fusion_class = "unidentified";
  add("fusion class", guarded([&] {
        const FusionRules f = verlinde_fusion(d);
        for (const auto& c : fusion_classes())
          if (grothendieck_equiv(f, c.rules)) {
            rep.fusion_class = c.name;
            return Verdict::ok();
          }
        return Verdict::fail("no instantiated rank-5 class matches");
      }));

  std::optional<GaloisProfile> prof;
  add("galois profile", guarded([&] {
        prof = compute_profile(d);
        return Verdict::ok();
      }));
  if (prof) {
    const DerivedScalars ds = derived_scalars(d);
    bool self_dual = true;
    for (int j = 0; j < d.rank; ++j) self_dual = self_dual && ds.dual[j] == j;
    const bool integral = prof->orbit_of(0).size() == 1;
    if (self_dual && !integral) {
      const PermGroup g = generate_group(d.rank, prof->image());
      Verdict v = Verdict::fail("Galois image " + g.name + " is not a listed case");
      for (const auto& c : rank5_galois_cases())
        if (conjugating_relabeling(g, c)) {
          v = Verdict::ok();
          break;
        }
      add("galois case", v);
    }
    for (auto& nv : exclusion_predicates(d, *prof)) rep.predicates.push_back(std::move(nv));

    std::vector<ModularRep> lifts;
    add("normalized lifts", guarded([&] {
          lifts = all_lifts(d);
          return Verdict::ok();
        }));
    Verdict twist, conn, level;
    for (const auto& l : lifts) {
      if (twist.pass) twist = check_twist_symmetry(l, *prof);
      if (conn.pass) conn = spectra_connectivity(l);
      if (level.pass && (l.level % d.torder != 0 || (12 * d.torder) % l.level != 0))
        level = Verdict::fail("level " + std::to_string(l.level) + " vs N = " + std::to_string(d.torder));
    }
    add("twist symmetry", twist);
    add("spectra connectivity", conn);
    add("N | n | 12N", level);
  }
  add("cauchy support", guarded([&] { return cauchy_prime_support(d).verdict; }));
  return rep;
}

}  // namespace

Rank5Report rank5_suite(const Rank5Options& options) {
  Rank5Report report;
  std::vector<CatalogEntry> data = options.data;
  if (data.empty())
    for (auto& e : catalog_entries())
      if (e.datum.rank == 5) data.push_back(std::move(e));
  for (const auto& e : data) report.data.push_back(run_datum(e));
  report.not_instantiated.push_back("(iv) SU(3)_4/Z_3");
  return report;
}

}  // namespace modcat
