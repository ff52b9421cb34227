#include "modcat/sl2z.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "modcat/error.hpp"
#include "modcat/numtheory.hpp"

namespace modcat {

const char* to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Neither: return "neither";
  }
  return "neither";
}

namespace {

std::vector<Cyclotomic> t_values(const std::vector<RootOfUnity>& t) {
  std::vector<Cyclotomic> out;
  for (const auto& w : t) out.push_back(Cyclotomic::from_root(w));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Component id (over distinct t-values) for every label.
std::vector<int> eigen_components(const ModularRep& rep, int* count) {
  std::map<RootOfUnity, int> node;
  for (const auto& w : rep.t) node.emplace(w, static_cast<int>(node.size()));
  UnionFind uf(static_cast<int>(node.size()));
  for (int i = 0; i < rep.rank; ++i)
    for (int j = 0; j < rep.rank; ++j)
      if (!rep.s[i][j].is_zero()) uf.unite(node[rep.t[i]], node[rep.t[j]]);
  std::map<int, int> ids;
  std::vector<int> comp;
  for (int i = 0; i < rep.rank; ++i) {
    const int root = uf.find(node[rep.t[i]]);
    comp.push_back(ids.emplace(root, static_cast<int>(ids.size())).first->second);
  }
  if (count) *count = static_cast<int>(ids.size());
  return comp;
}

}  // namespace

Verdict check_relations(const Matrix& s, const std::vector<RootOfUnity>& t) {
  const std::size_t r = s.size();
  const Matrix s2 = mat_mul(s, s);
  if (!is_scalar_identity(mat_mul(s2, s2), Cyclotomic(1))) return Verdict::fail("s^4 != I");
  const Matrix st = diag_right(s, t_values(t));
  if (mat_pow(st, 3) != s2) return Verdict::fail("(st)^3 != s^2");
  (void)r;
  return Verdict::ok();
}

ModularRep make_rep(Matrix s, std::vector<RootOfUnity> t) {
  if (s.size() != t.size() || s.empty()) throw Error(ErrorKind::InvalidParameters, "s and t sizes differ");
  const Verdict v = check_relations(s, t);
  if (!v.pass) throw Error(ErrorKind::NotModular, v.witness);
  ModularRep rep;
  rep.rank = static_cast<int>(s.size());
  rep.level = 1;
  for (const auto& w : t) rep.level = nt::lcm(rep.level, w.order());
  const Matrix s2 = mat_mul(s, s);
  if (is_scalar_identity(s2, Cyclotomic(1)))
    rep.parity = Parity::Even;
  else if (is_scalar_identity(s2, Cyclotomic(-1)))
    rep.parity = Parity::Odd;
  else
    rep.parity = Parity::Neither;
  rep.s = std::move(s);
  rep.t = std::move(t);
  return rep;
}

namespace {

RootOfUnity anomaly_of(const ModularDatum& datum, const DerivedScalars& ds) {
  if (!ds.anomaly) throw Error(ErrorKind::NotModular, "p+/p- is not a root of unity");
  (void)datum;
  return *ds.anomaly;
}

}  // namespace

Cyclotomic global_dimension(const ModularDatum& datum) {
  const DerivedScalars ds = derived_scalars(datum);
  const RootOfUnity alpha = anomaly_of(datum, ds);
  // p+ = D e^{i phi} and alpha = e^{2 i phi}, so p+ / sqrt(alpha) = +-D.
  Cyclotomic d = ds.gauss_plus / Cyclotomic::from_root(alpha.sqrt());
  if (d.evaluate(20).re < 0) d = -d;
  if (d * d != ds.global_dim_sq || !d.is_real())
    throw Error(ErrorKind::NotModular, "p+ / sqrt(p+/p-) is not a square root of D^2");
  return d;
}

ModularRep normalize(const ModularDatum& datum, int x_exp, int zeta_choice) {
  if (x_exp < 0 || x_exp >= 12 || zeta_choice < 0 || zeta_choice >= 6)
    throw Error(ErrorKind::OutOfRange, "x_exp must be in 0..11 and zeta_choice in 0..5");
  const DerivedScalars ds = derived_scalars(datum);
  const RootOfUnity alpha = anomaly_of(datum, ds);
  const RootOfUnity zeta(alpha.numerator() + zeta_choice * alpha.order(), 6 * alpha.order());
  const RootOfUnity x(x_exp, 12);
  const Cyclotomic scale = Cyclotomic::from_root(zeta.pow(3) / x.pow(3)) / ds.gauss_plus;
  std::vector<RootOfUnity> t;
  for (int j = 0; j < datum.rank; ++j) t.push_back(x / zeta * datum.twist(j));
  return make_rep(mat_scale(datum.S, scale), std::move(t));
}

ModularRep canonical_lift(const ModularDatum& datum) {
  const Cyclotomic inv_d = global_dimension(datum).inv();
  const DerivedScalars ds = derived_scalars(datum);
  const RootOfUnity alpha = anomaly_of(datum, ds);
  for (int zc = 0; zc < 6; ++zc)
    for (int x = 0; x < 12; ++x) {
      const RootOfUnity zeta(alpha.numerator() + zc * alpha.order(), 6 * alpha.order());
      const Cyclotomic scale = Cyclotomic::from_root(zeta.pow(3) / RootOfUnity(x, 12).pow(3)) / ds.gauss_plus;
      if (scale == inv_d) return normalize(datum, x, zc);
    }
  throw Error(ErrorKind::NotModular, "no lift with s = S/D");
}

std::vector<ModularRep> all_lifts(const ModularDatum& datum, int zeta_choice) {
  std::vector<ModularRep> out;
  for (int x = 0; x < 12; ++x) out.push_back(normalize(datum, x, zeta_choice));
  return out;
}

Verdict spectra_connectivity(const ModularRep& rep) {
  int count = 0;
  const auto comp = eigen_components(rep, &count);
  if (count <= 1) return Verdict::ok();
  std::ostringstream os;
  os << count << " components over the t-spectrum; labels by component:";
  for (int c = 0; c < count; ++c) {
    os << " {";
    bool first = true;
    for (int i = 0; i < rep.rank; ++i)
      if (comp[i] == c) {
        os << (first ? "" : ",") << i;
        first = false;
      }
    os << "}";
  }
  return Verdict::fail(os.str());
}

Obstruction120 obstruction_120(const ModularRep& rep, int subdegree) {
  if (rep.rank < 3) throw Error(ErrorKind::OutOfRange, "obstruction_120 needs rank >= 3");
  if (subdegree < 1 || subdegree > rep.rank) throw Error(ErrorKind::OutOfRange, "bad subdegree");
  Obstruction120 out;
  int count = 0;
  const auto comp = eigen_components(rep, &count);
  std::vector<int> pick(static_cast<std::size_t>(rep.rank), 0);
  std::fill(pick.end() - subdegree, pick.end(), 1);
  do {
    std::vector<int> subset;
    bool has120 = false;
    for (int i = 0; i < rep.rank; ++i)
      if (pick[i]) {
        subset.push_back(i);
        if (120 % rep.t[i].order() == 0) has120 = true;
      }
    if (has120) continue;
    out.flagged.push_back(subset);
    // Only a union of whole components can be a direct summand.
    bool closed = true;
    for (int i = 0; i < rep.rank && closed; ++i)
      for (int j = 0; j < rep.rank && closed; ++j)
        if (comp[i] == comp[j] && pick[i] != pick[j]) closed = false;
    if (closed && out.verdict.pass) {
      std::ostringstream os;
      os << "summand candidate {";
      for (std::size_t k = 0; k < subset.size(); ++k) os << (k ? "," : "") << subset[k];
      os << "} has no 120th root of unity in its t-spectrum";
      out.verdict = Verdict::fail(os.str());
    }
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.flagged.begin(), out.flagged.end());
  return out;
}

namespace {

using Spec = std::vector<std::pair<std::int64_t, std::int64_t>>;  // turns num/den

SpectrumRecord record(int degree, Parity parity, std::int64_t level, const std::vector<Spec>& spectra) {
  SpectrumRecord r;
  r.degree = degree;
  r.parity = parity;
  r.level = level;
  for (const auto& sp : spectra) {
    std::vector<RootOfUnity> v;
    for (auto [n, d] : sp) v.emplace_back(n, d);
    r.spectra.push_back(v);
  }
  return r;
}

std::vector<SpectrumRecord> build_table() {
  const Parity E = Parity::Even, O = Parity::Odd;
  std::vector<SpectrumRecord> t;
  // degree 2
  t.push_back(record(2, E, 2, {{{0, 1}, {1, 2}}}));
  {
    std::vector<Spec> sp;
    for (int r = 0; r < 3; ++r) sp.push_back({{r, 3}, {-(r + 1), 3}});
    t.push_back(record(2, O, 3, sp));
  }
  t.push_back(record(2, O, 4, {{{1, 4}, {3, 4}}}));
  t.push_back(record(2, O, 5, {{{1, 5}, {-1, 5}}, {{2, 5}, {-2, 5}}}));
  t.push_back(record(2, E, 8, {{{5, 8}, {7, 8}}, {{1, 8}, {3, 8}}}));
  t.push_back(record(2, O, 8, {{{3, 8}, {5, 8}}, {{7, 8}, {1, 8}}}));
  // degree 3
  {
    std::vector<Spec> sp;
    for (int r = 0; r < 3; ++r) sp.push_back({{r + 1, 3}, {r + 2, 3}, {r, 3}});
    t.push_back(record(3, E, 3, sp));
  }
  t.push_back(record(3, O, 4, {{{1, 4}, {1, 2}, {0, 1}}, {{3, 4}, {0, 1}, {1, 2}}}));
  t.push_back(record(3, E, 4, {{{1, 2}, {3, 4}, {1, 4}}, {{0, 1}, {1, 4}, {3, 4}}}));
  {
    std::vector<Spec> sp;
    for (int r = 1; r <= 2; ++r) sp.push_back({{0, 1}, {r, 5}, {-r, 5}});
    t.push_back(record(3, E, 5, sp));
  }
  t.push_back(record(3, E, 7, {{{2, 7}, {1, 7}, {4, 7}}, {{-2, 7}, {-1, 7}, {-4, 7}}}));
  t.push_back(record(3, O, 8,
                     {{{1, 2}, {5, 8}, {1, 8}}, {{0, 1}, {1, 8}, {5, 8}}, {{1, 2}, {7, 8}, {3, 8}}, {{0, 1}, {3, 8}, {7, 8}}}));
  t.push_back(record(3, E, 8,
                     {{{3, 4}, {7, 8}, {3, 8}}, {{1, 4}, {3, 8}, {7, 8}}, {{1, 4}, {5, 8}, {1, 8}}, {{3, 4}, {1, 8}, {5, 8}}}));
  t.push_back(record(3, O, 16,
                     {{{5, 8}, {1, 16}, {9, 16}},
                      {{1, 8}, {9, 16}, {1, 16}},
                      {{1, 8}, {5, 16}, {13, 16}},
                      {{5, 8}, {13, 16}, {5, 16}},
                      {{7, 8}, {3, 16}, {11, 16}},
                      {{3, 8}, {11, 16}, {3, 16}},
                      {{3, 8}, {15, 16}, {7, 16}},
                      {{7, 8}, {15, 16}, {7, 16}}}));
  t.push_back(record(3, E, 16,
                     {{{7, 8}, {5, 16}, {13, 16}},
                      {{3, 8}, {13, 16}, {5, 16}},
                      {{3, 8}, {9, 16}, {1, 16}},
                      {{7, 8}, {1, 16}, {9, 16}},
                      {{5, 8}, {15, 16}, {7, 16}},
                      {{1, 8}, {7, 16}, {15, 16}},
                      {{5, 8}, {3, 16}, {11, 16}},
                      {{1, 8}, {11, 16}, {3, 16}}}));
  // degree 4
  t.push_back(record(4, O, 5, {{{1, 5}, {2, 5}, {3, 5}, {4, 5}}}));
  t.push_back(record(4, E, 5, {{{1, 5}, {2, 5}, {3, 5}, {4, 5}}}));
  t.push_back(record(4, O, 7, {{{0, 1}, {1, 7}, {4, 7}, {2, 7}}}));
  t.push_back(record(4, O, 7, {{{0, 1}, {6, 7}, {3, 7}, {5, 7}}}));
  t.push_back(record(4, O, 8, {{{1, 8}, {3, 8}, {5, 8}, {7, 8}}}));
  t.push_back(record(4, E, 8, {{{1, 8}, {3, 8}, {5, 8}, {7, 8}}}));
  for (Parity par : {O, E}) {
    std::vector<Spec> sp;
    for (int r = 0; r < 3; ++r) sp.push_back({{1 + 3 * r, 9}, {4 + 3 * r, 9}, {7 + 3 * r, 9}, {1 + r, 3}});
    for (int r = 0; r < 3; ++r) sp.push_back({{8 + 3 * r, 9}, {5 + 3 * r, 9}, {2 + 3 * r, 9}, {2 + r, 3}});
    t.push_back(record(4, par, 9, sp));
  }
  return t;
}

}  // namespace

const std::vector<SpectrumRecord>& spectra_table() {
  static const std::vector<SpectrumRecord> table = build_table();
  return table;
}

std::vector<SpectrumRecord> spectra_lookup(int degree, std::int64_t level, Parity parity) {
  std::vector<SpectrumRecord> out;
  for (const auto& r : spectra_table())
    if (r.degree == degree && r.level == level && r.parity == parity) out.push_back(r);
  if (out.empty())
    throw Error(ErrorKind::NotTabulated, "no row for degree " + std::to_string(degree) + ", level " +
                                             std::to_string(level) + ", " + to_string(parity));
  return out;
}

PsiCertificate inadmissible_psi(std::int64_t p) {
  if (p <= 3 || !nt::is_prime(p)) throw Error(ErrorKind::OutOfRange, "p must be a prime > 3");
  PsiCertificate cert;
  cert.sqrt_p_plus_1 = sqrt_rational(Rational(static_cast<long>(p + 1)));
  const Cyclotomic inv_p(Rational(1, static_cast<long>(p)));
  Matrix s = zero_matrix(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
  s[0][0] = Cyclotomic(Rational(-1, static_cast<long>(p)));
  for (std::int64_t k = 1; k < p; ++k) s[0][k] = s[k][0] = cert.sqrt_p_plus_1 * inv_p;
  for (std::int64_t j = 1; j < p; ++j)
    for (std::int64_t k = 1; k < p; ++k) {
      std::map<std::int64_t, Rational> terms;
      for (std::int64_t a = 1; a < p; ++a) terms[nt::mod(a * j + nt::inverse_mod(a, p) * k, p)] += Rational(1, static_cast<long>(p));
      s[j][k] = Cyclotomic::make(p, terms).reduce_conductor();
    }
  std::vector<RootOfUnity> t;
  for (std::int64_t k = 0; k < p; ++k) t.emplace_back(k, p);
  cert.rep = make_rep(std::move(s), std::move(t));
  cert.sqrt_conductor = cert.sqrt_p_plus_1.conductor();
  if (p % cert.sqrt_conductor == 0)
    cert.inadmissible = Verdict::fail("sqrt(p+1) lies in Q_p");
  return cert;
}

std::optional<SignedPermutation> signed_perm_match(const ModularRep& rep1, const ModularRep& rep2) {
  auto distinct = [](const std::vector<RootOfUnity>& t) { return std::set<RootOfUnity>(t.begin(), t.end()).size() == t.size(); };
  if (!distinct(rep1.t) || !distinct(rep2.t)) throw Error(ErrorKind::NotApplicable, "t has a repeated eigenvalue");
  if (rep1.rank != rep2.rank) return std::nullopt;
  const int r = rep1.rank;
  SignedPermutation u;
  u.perm.assign(static_cast<std::size_t>(r), -1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (rep2.t[j] == rep1.t[i]) u.perm[i] = j;
  if (std::find(u.perm.begin(), u.perm.end(), -1) != u.perm.end()) return std::nullopt;
  u.signs.assign(static_cast<std::size_t>(r), 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (r - 1)); ++mask) {
    for (int i = 1; i < r; ++i) u.signs[i] = (mask >> (i - 1)) & 1U ? -1 : 1;
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = i; j < r && ok; ++j) {
        const Cyclotomic lhs = rep2.s[u.perm[i]][u.perm[j]];
        const Cyclotomic rhs = u.signs[i] * u.signs[j] == 1 ? rep1.s[i][j] : -rep1.s[i][j];
        if (lhs != rhs) ok = false;
      }
    if (ok) return u;
  }
  return std::nullopt;
}

}  // namespace modcat
