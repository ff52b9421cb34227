#include "modcat/modular_data.hpp"

#include <sstream>

#include "modcat/error.hpp"
#include "modcat/field_theory.hpp"
#include "modcat/galois.hpp"
#include "modcat/numtheory.hpp"

namespace modcat {

namespace {

std::string idx(std::initializer_list<int> is) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int i : is) {
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << ")";
  return os.str();
}

Cyclotomic global_dim_sq(const ModularDatum& d) {
  Cyclotomic sum;
  for (int j = 0; j < d.rank; ++j) sum += d.dim(j) * d.dim(j);
  return sum;
}

// S conj(S)^t == D^2 I; returns the first failing (i, k).
std::optional<std::pair<int, int>> orthogonality_failure(const Matrix& S, const Cyclotomic& d2) {
  const auto r = static_cast<int>(S.size());
  const Matrix cs = conj(S);
  for (int i = 0; i < r; ++i)
    for (int k = i; k < r; ++k) {
      Cyclotomic sum;
      for (int j = 0; j < r; ++j) sum += S[i][j] * cs[k][j];
      if (sum != (i == k ? d2 : Cyclotomic())) return std::make_pair(i, k);
    }
  return std::nullopt;
}

}  // namespace

std::vector<Cyclotomic> ModularDatum::thetas() const {
  std::vector<Cyclotomic> out;
  out.reserve(static_cast<std::size_t>(rank));
  for (int j = 0; j < rank; ++j) out.push_back(theta(j));
  return out;
}

ModularDatum ModularDatum::from_twists(Matrix S, const std::vector<RootOfUnity>& twists) {
  ModularDatum d;
  d.rank = static_cast<int>(S.size());
  if (twists.size() != S.size())
    throw Error(ErrorKind::SchemaViolation, "S has rank " + std::to_string(S.size()) + " but " +
                                                std::to_string(twists.size()) + " twists were given");
  d.torder = 1;
  for (const auto& w : twists) d.torder = nt::lcm(d.torder, w.order());
  d.t_exponents.clear();
  for (const auto& w : twists) d.t_exponents.push_back(w.exponent_over(d.torder));
  for (auto& row : S)
    for (auto& x : row) x = x.reduce_conductor();
  d.S = std::move(S);
  d.validate();
  return d;
}

void ModularDatum::validate() const {
  if (rank < 1) throw Error(ErrorKind::SchemaViolation, "rank must be positive");
  if (S.size() != static_cast<std::size_t>(rank))
    throw Error(ErrorKind::SchemaViolation, "S has " + std::to_string(S.size()) + " rows, expected " + std::to_string(rank));
  for (int i = 0; i < rank; ++i)
    if (S[i].size() != static_cast<std::size_t>(rank))
      throw Error(ErrorKind::SchemaViolation, "S row " + std::to_string(i) + " has wrong length");
  if (t_exponents.size() != static_cast<std::size_t>(rank))
    throw Error(ErrorKind::SchemaViolation, "t_exponents has wrong length");
  if (torder < 1) throw Error(ErrorKind::SchemaViolation, "torder must be positive");
  std::int64_t ord = 1;
  for (int j = 0; j < rank; ++j) {
    if (t_exponents[j] < 0 || t_exponents[j] >= torder)
      throw Error(ErrorKind::SchemaViolation, "t_exponents[" + std::to_string(j) + "] out of range");
    ord = nt::lcm(ord, twist(j).order());
  }
  if (ord != torder)
    throw Error(ErrorKind::SchemaViolation,
                "torder " + std::to_string(torder) + " is not ord(T) = " + std::to_string(ord));
  if (t_exponents[0] != 0) throw Error(ErrorKind::SchemaViolation, "theta_0 != 1 at t_exponents[0]");
  if (S[0][0] != Cyclotomic(1)) throw Error(ErrorKind::SchemaViolation, "S[0][0] != 1");
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j)
      if (S[i][j] != S[j][i])
        throw Error(ErrorKind::SchemaViolation, "S not symmetric at " + idx({i, j}));
}

bool ModularDatum::operator==(const ModularDatum& o) const {
  return rank == o.rank && torder == o.torder && t_exponents == o.t_exponents && S == o.S;
}

DerivedScalars derived_scalars(const ModularDatum& datum) {
  DerivedScalars out;
  const int r = datum.rank;
  for (int j = 0; j < r; ++j) out.dims.push_back(datum.dim(j));
  out.global_dim_sq = global_dim_sq(datum);
  for (int j = 0; j < r; ++j) {
    const Cyclotomic d2 = out.dims[j] * out.dims[j];
    const Cyclotomic th = datum.theta(j);
    out.gauss_plus += d2 * th;
    out.gauss_minus += d2 * th.conj();
  }
  if (!out.gauss_minus.is_zero()) out.anomaly = (out.gauss_plus / out.gauss_minus).as_root_of_unity();
  const Matrix cs = conj(datum.S);
  out.dual.assign(static_cast<std::size_t>(r), -1);
  for (int j = 0; j < r; ++j)
    for (int jj = 0; jj < r; ++jj) {
      bool match = true;
      for (int i = 0; i < r && match; ++i)
        if (cs[i][j] != datum.S[i][jj]) match = false;
      if (match) {
        out.dual[j] = jj;
        break;
      }
    }
  return out;
}

std::vector<std::vector<std::int64_t>> FusionRules::matrix(int i) const {
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(rank), std::vector<std::int64_t>(static_cast<std::size_t>(rank)));
  for (int j = 0; j < rank; ++j)
    for (int k = 0; k < rank; ++k) m[j][k] = (*this)(i, j, k);
  return m;
}

Verdict check_fusion_invariants(const FusionRules& f) {
  const int r = f.rank;
  const auto& du = f.dual;
  if (static_cast<int>(du.size()) != r) return Verdict::fail("dual has wrong length");
  for (int i = 0; i < r; ++i) {
    if (du[i] < 0 || du[i] >= r || du[du[i]] != i) return Verdict::fail("dual is not an involution at " + std::to_string(i));
  }
  if (du[0] != 0) return Verdict::fail("dual does not fix 0");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        const auto n = f(i, j, k);
        if (n < 0) return Verdict::fail("negative N at " + idx({i, j, k}));
        if (f(0, j, k) != (j == k ? 1 : 0)) return Verdict::fail("unit law fails at " + idx({j, k}));
        if (n != f(j, i, k)) return Verdict::fail("N_ij^k != N_ji^k at " + idx({i, j, k}));
        if (n != f(i, du[k], du[j])) return Verdict::fail("N_ij^k != N_{i k*}^{j*} at " + idx({i, j, k}));
        if (n != f(du[i], du[j], du[k])) return Verdict::fail("N_ij^k != N_{i* j*}^{k*} at " + idx({i, j, k}));
      }
      if (f(i, j, 0) != (j == du[i] ? 1 : 0)) return Verdict::fail("N_ij^0 != delta_{i j*} at " + idx({i, j}));
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          std::int64_t lhs = 0, rhs = 0;
          for (int m = 0; m < r; ++m) {
            lhs += f(i, j, m) * f(m, k, l);
            rhs += f(j, k, m) * f(i, m, l);
          }
          if (lhs != rhs) return Verdict::fail("associativity fails at " + idx({i, j, k, l}));
        }
  // (N_i N_j)_{ab} = sum_c N_{ia}^c N_{jc}^b
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
          std::int64_t x = 0, y = 0;
          for (int c = 0; c < r; ++c) {
            x += f(i, a, c) * f(j, c, b);
            y += f(j, a, c) * f(i, c, b);
          }
          if (x != y) return Verdict::fail("N_" + std::to_string(i) + " and N_" + std::to_string(j) + " do not commute");
        }
  return Verdict::ok();
}

FusionRules verlinde_fusion(const ModularDatum& datum) {
  const int r = datum.rank;
  const Cyclotomic d2 = global_dim_sq(datum);
  if (d2.is_zero()) throw Error(ErrorKind::DegenerateS, "D^2 = 0");
  if (auto bad = orthogonality_failure(datum.S, d2))
    throw Error(ErrorKind::DegenerateS,
                "S conj(S)^t != D^2 I at " + idx({bad->first, bad->second}));
  std::vector<Cyclotomic> inv0;
  for (int a = 0; a < r; ++a) {
    if (datum.dim(a).is_zero()) throw Error(ErrorKind::DegenerateS, "S_0" + std::to_string(a) + " = 0");
    inv0.push_back(datum.dim(a).inv());
  }
  const Cyclotomic inv_d2 = d2.inv();
  const Matrix cs = conj(datum.S);
  FusionRules f;
  f.rank = r;
  f.tensor.assign(static_cast<std::size_t>(r) * r * r, 0);
  std::vector<Cyclotomic> w(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      for (int a = 0; a < r; ++a) w[a] = datum.S[i][a] * datum.S[j][a] * inv0[a] * inv_d2;
      for (int k = 0; k < r; ++k) {
        Cyclotomic v;
        for (int a = 0; a < r; ++a) v += w[a] * cs[k][a];
        if (!v.is_rational())
          throw Error(ErrorKind::NotFusionIntegral, "N" + idx({i, j, k}) + " = " + v.to_string());
        const Rational q = v.to_rational();
        if (q.get_den() != 1 || q < 0)
          throw Error(ErrorKind::NotFusionIntegral, "N" + idx({i, j, k}) + " = " + q.get_str());
        if (!q.get_num().fits_slong_p())
          throw Error(ErrorKind::NotFusionIntegral, "N" + idx({i, j, k}) + " too large");
        f.at(i, j, k) = q.get_num().get_si();
        f.at(j, i, k) = f.at(i, j, k);
      }
    }
  f.dual.assign(static_cast<std::size_t>(r), -1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (f(i, j, 0) == 1) f.dual[i] = j;
  for (int i = 0; i < r; ++i)
    if (f.dual[i] < 0) throw Error(ErrorKind::NotFusionIntegral, "label " + std::to_string(i) + " has no dual");
  return f;
}

Verdict check_balancing(const ModularDatum& datum, const FusionRules& fusion) {
  const int r = datum.rank;
  const auto th = datum.thetas();
  std::vector<Cyclotomic> dth;
  for (int k = 0; k < r; ++k) dth.push_back(datum.dim(k) * th[k]);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Cyclotomic rhs;
      for (int k = 0; k < r; ++k) {
        const auto n = fusion(fusion.dual[i], j, k);
        if (n != 0) rhs += Cyclotomic(static_cast<long>(n)) * dth[k];
      }
      if (th[i] * th[j] * datum.S[i][j] != rhs) return Verdict::fail("balancing fails at " + idx({i, j}));
    }
  return Verdict::ok();
}

Verdict check_twist_equation(const ModularDatum& datum) {
  const int r = datum.rank;
  const auto th = datum.thetas();
  const Cyclotomic pp = derived_scalars(datum).gauss_plus;
  for (int j = 0; j < r; ++j)
    for (int k = j; k < r; ++k) {
      Cyclotomic sum;
      for (int i = 0; i < r; ++i) sum += th[i] * datum.S[i][j] * datum.S[i][k];
      if (pp * datum.S[j][k] != th[j] * th[k] * sum) return Verdict::fail("twist equation fails at " + idx({j, k}));
    }
  return Verdict::ok();
}

namespace {

// nu_n(k) for all k, with the weights N_ij^k d_i d_j / D^2 binned by the
// exponent n (a_i - a_j) mod N.
std::vector<Cyclotomic> fs_indicators(const ModularDatum& datum, const FusionRules& fusion, std::int64_t n) {
  const int r = datum.rank;
  const std::int64_t big_n = datum.torder;
  const Cyclotomic inv_d2 = global_dim_sq(datum).inv();
  std::vector<Cyclotomic> out;
  for (int k = 0; k < r; ++k) {
    std::vector<Cyclotomic> bins(static_cast<std::size_t>(big_n));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        const auto m = fusion(i, j, k);
        if (m == 0) continue;
        const std::int64_t e = nt::mod(n % big_n * ((datum.t_exponents[i] - datum.t_exponents[j]) % big_n), big_n);
        bins[e] += Cyclotomic(static_cast<long>(m)) * datum.dim(i) * datum.dim(j);
      }
    Cyclotomic sum;
    for (std::int64_t e = 0; e < big_n; ++e)
      if (!bins[e].is_zero()) sum += bins[e] * Cyclotomic::zeta(big_n, e);
    out.push_back(sum * inv_d2);
  }
  return out;
}

}  // namespace

Cyclotomic fs_indicator(const ModularDatum& datum, const FusionRules& fusion, std::int64_t n, int k) {
  if (k < 0 || k >= datum.rank) throw Error(ErrorKind::OutOfRange, "label " + std::to_string(k));
  if (n < 1) throw Error(ErrorKind::OutOfRange, "n must be positive");
  return fs_indicators(datum, fusion, n)[k];
}

std::int64_t fs_exponent(const ModularDatum& datum, const FusionRules& fusion) {
  // nu_n is periodic in n with period torder, so n <= torder covers every n <= 12 torder.
  for (std::int64_t n = 1; n <= datum.torder; ++n) {
    const auto nu = fs_indicators(datum, fusion, n);
    bool all = true;
    for (int k = 0; k < datum.rank && all; ++k)
      if (nu[k] != datum.dim(k)) all = false;
    if (all) return n;
  }
  throw Error(ErrorKind::NotFound, "no n <= 12 ord(T) with nu_n(k) = d_k for all k");
}

bool AdmissibilityReport::pass() const {
  for (const auto& c : conditions)
    if (!c.pass) return false;
  return true;
}

AdmissibilityReport check_admissible(const ModularDatum& datum) {
  AdmissibilityReport rep;
  const int r = datum.rank;
  const DerivedScalars ds = derived_scalars(datum);
  const Cyclotomic& d2 = ds.global_dim_sq;

  // (i)
  {
    Verdict v;
    for (int j = 0; j < r && v.pass; ++j)
      if (!ds.dims[j].is_real()) v = Verdict::fail("d_" + std::to_string(j) + " is not real");
    if (v.pass && !is_symmetric(datum.S)) v = Verdict::fail("S is not symmetric");
    if (v.pass)
      if (auto bad = orthogonality_failure(datum.S, d2))
        v = Verdict::fail("S conj(S)^t != D^2 I at " + idx({bad->first, bad->second}));
    if (v.pass) {
      std::int64_t ord = 1;
      for (int j = 0; j < r; ++j) ord = nt::lcm(ord, datum.twist(j).order());
      if (ord != datum.torder) v = Verdict::fail("torder " + std::to_string(datum.torder) + " != ord(T) " + std::to_string(ord));
    }
    rep.conditions[0] = v;
  }
  // (ii)
  {
    Verdict v;
    const Matrix st = diag_right(datum.S, datum.thetas());
    if (mat_pow(st, 3) != mat_scale(mat_mul(datum.S, datum.S), ds.gauss_plus))
      v = Verdict::fail("(ST)^3 != p+ S^2");
    else if (ds.gauss_plus * ds.gauss_minus != d2)
      v = Verdict::fail("p+ p- != D^2");
    else if (!ds.anomaly)
      v = Verdict::fail("p+/p- is not a root of unity");
    rep.conditions[1] = v;
  }
  // (iii) - (v)
  std::optional<FusionRules> fusion;
  try {
    fusion = verlinde_fusion(datum);
  } catch (const Error& e) {
    rep.conditions[2] = Verdict::fail(e.what());
  }
  if (fusion) {
    rep.conditions[3] = check_balancing(datum, *fusion);
    Verdict v;
    for (std::int64_t n = 1; n <= datum.torder && v.pass; ++n) {
      const auto nu = fs_indicators(datum, *fusion, n);
      for (int k = 0; k < r && v.pass; ++k) {
        if (!nu[k].is_algebraic_integer() || datum.torder % nu[k].conductor() != 0)
          v = Verdict::fail("nu_" + std::to_string(n) + "(" + std::to_string(k) + ") = " + nu[k].to_string() +
                            " is not in Z[zeta_N]");
        else if (n == 2) {
          const bool self_dual = fusion->dual[k] == k;
          const bool ok = self_dual ? (nu[k] == Cyclotomic(1) || nu[k] == Cyclotomic(-1)) : nu[k].is_zero();
          if (!ok) v = Verdict::fail("nu_2(" + std::to_string(k) + ") = " + nu[k].to_string());
        }
      }
    }
    rep.conditions[4] = v;
  } else {
    rep.conditions[3] = Verdict::fail("requires integral fusion rules");
    rep.conditions[4] = Verdict::fail("requires integral fusion rules");
  }
  // (vi)
  {
    Verdict v;
    std::int64_t f_s = 1;
    for (const auto& row : datum.S)
      for (const auto& x : row) f_s = nt::lcm(f_s, x.conductor());
    if (datum.torder % f_s != 0) {
      v = Verdict::fail("F_S has conductor " + std::to_string(f_s) + " which does not divide N");
    } else {
      try {
        const GaloisProfile prof = compute_profile(datum);
        for (std::int64_t k : prof.group) {
          for (std::int64_t l : prof.group) {
            const Permutation& hk = prof.perm(k);
            const Permutation& hl = prof.perm(l);
            if (compose(hk, hl) != compose(hl, hk)) {
              v = Verdict::fail("Galois image is not abelian");
              break;
            }
            if (compose(hk, hl) != prof.perm(k * l)) {
              v = Verdict::fail("sigma -> h_sigma is not a homomorphism");
              break;
            }
          }
          if (!v.pass) break;
          Permutation id(static_cast<std::size_t>(r));
          for (int i = 0; i < r; ++i) id[i] = i;
          if (prof.perm(k) == id) {
            for (const auto& row : datum.S)
              for (const auto& x : row)
                if (v.pass && x.galois(k) != x)
                  v = Verdict::fail("h_sigma trivial for sigma_" + std::to_string(k) + " which moves F_S");
          }
          if (!v.pass) break;
        }
      } catch (const Error& e) {
        v = Verdict::fail(e.what());
      }
      if (v.pass) {
        // Gal(Q_N / F_S) must be elementary abelian of exponent 2.
        const std::int64_t f_t = datum.torder % 4 == 2 ? datum.torder / 2 : datum.torder;
        for (std::int64_t k : nt::units(f_t)) {
          bool fixes = true;
          for (const auto& row : datum.S) {
            for (const auto& x : row)
              if (x.galois(k) != x) {
                fixes = false;
                break;
              }
            if (!fixes) break;
          }
          if (fixes && nt::mod(k * k, f_t) != 1 % f_t) {
            v = Verdict::fail("sigma_" + std::to_string(k) + " in Gal(F_T/F_S) has order > 2");
            break;
          }
        }
      }
    }
    rep.conditions[5] = v;
  }
  // (vii)
  rep.conditions[6] = cauchy_prime_support(d2, datum.torder).verdict;
  return rep;
}

}  // namespace modcat
