#include "modcat/galois.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "modcat/error.hpp"
#include "modcat/numtheory.hpp"

namespace modcat {

const char* to_string(DimensionClass c) {
  switch (c) {
    case DimensionClass::Integral: return "integral";
    case DimensionClass::WeaklyIntegral: return "weakly-integral";
    case DimensionClass::PseudoUnitaryCandidate: return "pseudo-unitary-candidate";
    case DimensionClass::Generic: return "generic";
  }
  return "generic";
}

std::string cycle_notation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    os << "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j;
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    os << ")";
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

const Permutation& GaloisProfile::perm(std::int64_t k) const {
  if (nt::gcd(k, field_conductor) != 1)
    throw Error(ErrorKind::NotAUnit, std::to_string(k) + " mod " + std::to_string(field_conductor));
  return perms.at(nt::mod(k, field_conductor));
}

std::vector<Permutation> GaloisProfile::image() const {
  std::set<Permutation> s;
  for (const auto& [k, p] : perms) s.insert(p);
  return {s.begin(), s.end()};
}

const std::vector<int>& GaloisProfile::orbit_of(int j) const {
  for (const auto& o : orbits)
    if (std::find(o.begin(), o.end(), j) != o.end()) return o;
  throw Error(ErrorKind::OutOfRange, "label " + std::to_string(j));
}

namespace {

std::int64_t matrix_conductor(const Matrix& m) {
  std::int64_t c = 1;
  for (const auto& row : m)
    for (const auto& x : row) c = nt::lcm(c, x.conductor());
  return c;
}

// Smallest positive k' = k mod m that is a unit mod L (m | L).
std::int64_t lift_unit(std::int64_t k, std::int64_t m, std::int64_t big) {
  std::int64_t k1 = nt::mod(k, m);
  if (k1 == 0) k1 = m;
  while (nt::gcd(k1, big) != 1) k1 += m;
  return k1;
}

bool positive(const Cyclotomic& x) { return x.is_real() && !x.is_zero() && x.evaluate(25).re > 0; }

}  // namespace

GaloisProfile compute_profile(const ModularDatum& datum) {
  const int r = datum.rank;
  Matrix ratio(static_cast<std::size_t>(r), std::vector<Cyclotomic>(static_cast<std::size_t>(r)));
  for (int a = 0; a < r; ++a) {
    if (datum.S[0][a].is_zero()) throw Error(ErrorKind::DegenerateS, "d_" + std::to_string(a) + " = 0");
    const Cyclotomic inv = datum.S[0][a].inv();
    for (int i = 0; i < r; ++i) ratio[i][a] = datum.S[i][a] * inv;
  }
  GaloisProfile prof;
  prof.field_conductor = matrix_conductor(ratio);
  const std::int64_t m = prof.field_conductor;
  prof.group = nt::units(m);
  for (std::int64_t k : prof.group) {
    const std::int64_t kk = m == 1 ? 1 : k;
    Permutation h(static_cast<std::size_t>(r), -1);
    for (int a = 0; a < r; ++a) {
      std::vector<Cyclotomic> col;
      for (int i = 0; i < r; ++i) col.push_back(ratio[i][a].galois(kk));
      int match = -1;
      for (int b = 0; b < r; ++b) {
        bool eq = true;
        for (int i = 0; i < r && eq; ++i) eq = col[i] == ratio[i][b];
        if (!eq) continue;
        if (match >= 0)
          throw Error(ErrorKind::NotGaloisStable, "columns " + std::to_string(match) + " and " + std::to_string(b) +
                                                      " are equal characters");
        match = b;
      }
      if (match < 0)
        throw Error(ErrorKind::NotGaloisStable,
                    "sigma_" + std::to_string(kk) + " of character column " + std::to_string(a) + " matches no column");
      h[a] = match;
    }
    std::vector<int> sorted = h;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::NotGaloisStable, "sigma_" + std::to_string(kk) + " is not a bijection on columns");
    prof.perms[k] = h;
  }

  std::vector<int> root(static_cast<std::size_t>(r));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& [k, h] : prof.perms)
    for (int a = 0; a < r; ++a) root[find(a)] = find(h[a]);
  std::map<int, std::vector<int>> classes;
  for (int a = 0; a < r; ++a) classes[find(a)].push_back(a);
  for (auto& [rt, o] : classes) prof.orbits.push_back(o);
  std::sort(prof.orbits.begin(), prof.orbits.end());

  try {
    const ModularRep rep = canonical_lift(datum);
    const std::int64_t big = nt::lcm(nt::lcm(m, rep.level), matrix_conductor(rep.s));
    for (std::int64_t k : prof.group) prof.signs[k] = sign_function(rep, lift_unit(k, m, big)).signs;
  } catch (const Error&) {
    prof.signs.clear();
  }
  return prof;
}

SignedPermutation sign_function(const ModularRep& rep, std::int64_t k) {
  const int r = rep.rank;
  const Matrix gs = galois(rep.s, k);
  SignedPermutation out;
  out.perm.assign(static_cast<std::size_t>(r), -1);
  out.signs.assign(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r && out.perm[i] < 0; ++j)
      for (int sign : {1, -1}) {
        bool eq = true;
        for (int c = 0; c < r && eq; ++c) eq = gs[i][c] == (sign == 1 ? rep.s[j][c] : -rep.s[j][c]);
        if (eq) {
          out.perm[i] = j;
          out.signs[i] = sign;
          break;
        }
      }
    if (out.perm[i] < 0)
      throw Error(ErrorKind::NotGaloisSymmetric, "row " + std::to_string(i) + " of sigma_" + std::to_string(k) +
                                                     "(s) is not a signed row of s");
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Cyclotomic& rhs = rep.s[i][out.perm[j]];
      if (gs[i][j] != (out.signs[j] == 1 ? rhs : -rhs))
        throw Error(ErrorKind::NotGaloisSymmetric,
                    "column form fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return out;
}

Matrix galois_sign_matrix(const ModularRep& rep, std::int64_t k) {
  return mat_mul(galois(rep.s, k), mat_pow(rep.s, 3));
}

Verdict check_twist_symmetry(const ModularRep& rep, const GaloisProfile& profile) {
  const std::int64_t n = rep.level;
  for (std::int64_t k : nt::units(n)) {
    const std::int64_t kk = n == 1 ? 1 : k;
    const Permutation& h = profile.perm(lift_unit(kk, profile.field_conductor, n));
    for (int i = 0; i < rep.rank; ++i)
      if (rep.t[i].pow(kk * kk) != rep.t[h[i]])
        return Verdict::fail("sigma_" + std::to_string(kk) + "^2(t_" + std::to_string(i) + ") = " +
                             rep.t[i].pow(kk * kk).to_string() + " but t_" + std::to_string(h[i]) + " = " +
                             rep.t[h[i]].to_string());
  }
  return Verdict::ok();
}

DimensionReport classify_dimensions(const ModularDatum& datum, const GaloisProfile& profile) {
  DimensionReport rep;
  const int r = datum.rank;
  rep.fp_column = -1;
  for (int a = 0; a < r && rep.fp_column < 0; ++a) {
    bool ok = true;
    const Cyclotomic inv = datum.S[0][a].inv();
    for (int i = 0; i < r && ok; ++i) ok = positive(datum.S[i][a] * inv);
    if (ok) rep.fp_column = a;
  }
  rep.pseudo_unitary = rep.fp_column == 0;
  if (rep.fp_column >= 0)
    for (std::int64_t k : profile.group)
      if (profile.perms.at(k)[0] == rep.fp_column) {
        rep.pseudo_unitarizing_unit = profile.field_conductor == 1 ? 1 : k;
        break;
      }

  Cyclotomic d2;
  for (int j = 0; j < r; ++j) d2 += datum.dim(j) * datum.dim(j);
  const bool weakly = d2.is_rational() && d2.to_rational().get_den() == 1;

  if (profile.orbit_of(0).size() == 1)
    rep.kind = DimensionClass::Integral;
  else if (weakly)
    rep.kind = DimensionClass::WeaklyIntegral;
  else if (!rep.pseudo_unitary && rep.pseudo_unitarizing_unit)
    rep.kind = DimensionClass::PseudoUnitaryCandidate;
  else
    rep.kind = DimensionClass::Generic;

  bool dims_positive = true;
  for (int j = 0; j < r; ++j) dims_positive = dims_positive && positive(datum.dim(j));
  if (weakly && dims_positive) {
    Verdict v;
    for (const auto& [k, h] : profile.perms)
      for (int a = 0; a < r && v.pass; ++a)
        if (datum.dim(h[a]) != datum.dim(a))
          v = Verdict::fail("d_" + std::to_string(h[a]) + " != d_" + std::to_string(a));
    rep.dims_constant_on_orbits = v;
  }
  return rep;
}

namespace {

std::vector<std::vector<int>> cycles_of(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (auto j = static_cast<int>(i); !seen[j]; j = p[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(c);
  }
  return out;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

std::vector<NamedVerdict> forbidden_cycle_predicates(int rank, const std::vector<Permutation>& elements,
                                                     const std::vector<bool>& self_dual) {
  std::vector<NamedVerdict> out;
  if (rank < 5 || rank % 2 == 0) return out;
  Verdict a, b;
  for (const auto& p : elements) {
    const auto cs = cycles_of(p);
    if (cs.size() != 2) continue;
    const auto& c0 = contains(cs[0], 0) ? cs[0] : cs[1];
    const auto& c1 = contains(cs[0], 0) ? cs[1] : cs[0];
    if (a.pass && c0.size() == 2 && static_cast<int>(c1.size()) == rank - 2)
      a = Verdict::fail(cycle_notation(p) + " lies in the Galois image");
    if (b.pass && static_cast<int>(c0.size()) == rank - 2 && c1.size() == 2 && self_dual[c1[0]] && self_dual[c1[1]])
      b = Verdict::fail(cycle_notation(p) + " lies in the Galois image and swaps self-dual labels");
  }
  out.push_back({"no (0 a)(r-2 cycle)", a});
  out.push_back({"no (r-2 cycle through 0)(self-dual 2-cycle)", b});
  return out;
}

std::vector<NamedVerdict> exclusion_predicates(const ModularDatum& datum, const GaloisProfile& profile) {
  const int r = datum.rank;
  const DerivedScalars ds = derived_scalars(datum);
  std::vector<bool> self_dual;
  for (int j = 0; j < r; ++j) self_dual.push_back(ds.dual[j] == j);
  auto out = forbidden_cycle_predicates(r, profile.image(), self_dual);

  Permutation swap01(static_cast<std::size_t>(r));
  std::iota(swap01.begin(), swap01.end(), 0);
  if (r < 2) return out;
  std::swap(swap01[0], swap01[1]);
  Permutation id(static_cast<std::size_t>(r));
  std::iota(id.begin(), id.end(), 0);
  if (r < 5 || profile.image() != std::vector<Permutation>{id, swap01}) return out;

  auto is_integer = [](const Cyclotomic& x) { return x.is_rational() && x.to_rational().get_den() == 1; };
  const Cyclotomic d1 = datum.dim(1);
  const Cyclotomic inv1 = d1.inv();
  out.push_back({"d1 > 0", positive(d1) ? Verdict::ok() : Verdict::fail("d1 = " + d1.to_string())});
  out.push_back({"d1 + 1/d1 integral", is_integer(d1 + inv1) ? Verdict::ok() : Verdict::fail((d1 + inv1).to_string())});
  out.push_back({"D^2/d1 integral",
                 is_integer(ds.global_dim_sq * inv1) ? Verdict::ok() : Verdict::fail((ds.global_dim_sq * inv1).to_string())});
  Verdict sq;
  for (int i = 2; i < r && sq.pass; ++i)
    if (!is_integer(datum.dim(i) * datum.dim(i) * inv1)) sq = Verdict::fail("i = " + std::to_string(i));
  out.push_back({"d_i^2/d1 integral", sq});

  std::vector<int> eps(static_cast<std::size_t>(r), 0);
  Verdict signs;
  for (int j = 2; j < r; ++j) {
    const Cyclotomic e = datum.S[1][j] / datum.dim(j);
    if (e == Cyclotomic(1))
      eps[j] = 1;
    else if (e == Cyclotomic(-1))
      eps[j] = -1;
    else if (signs.pass)
      signs = Verdict::fail("S_1" + std::to_string(j) + "/d_" + std::to_string(j) + " = " + e.to_string());
  }
  out.push_back({"eps_j in {+1,-1}", signs});
  bool mixed = false;
  for (int j = 3; j < r; ++j) mixed = mixed || (eps[j] != 0 && eps[2] != 0 && eps[j] != eps[2]);
  out.push_back({"eps not constant", mixed ? Verdict::ok() : Verdict::fail("all eps_j equal")});
  Verdict zeros;
  for (int i = 2; i < r && zeros.pass; ++i)
    for (int j = 2; j < r && zeros.pass; ++j)
      if (eps[i] * eps[j] == -1 && !datum.S[i][j].is_zero())
        zeros = Verdict::fail("S_" + std::to_string(i) + std::to_string(j) + " != 0");
  out.push_back({"S_ij = 0 when eps_i = -eps_j", zeros});
  return out;
}

}  // namespace modcat
