#include "modcat/field_theory.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "modcat/error.hpp"
#include "modcat/numtheory.hpp"

namespace modcat {

using nt::i64;

namespace {

const std::vector<i64> kFermatPrimes{3, 5, 17, 257, 65537};

i64 ipow(i64 b, int e) {
  i64 out = 1;
  while (e-- > 0) out *= b;
  return out;
}

std::vector<i64> sorted_unique(std::vector<i64> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

i64 parse_int(const std::string& s, const std::string& ctx) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorKind::ParseError, "bad integer '" + s + "' in " + ctx);
  return std::stoll(s);
}

}  // namespace

i64 GroupShape::order() const {
  i64 out = 1;
  for (int e : r) out *= ipow(p, e);
  return out;
}

GroupShape parse_shape(std::string_view text) {
  const std::string all(text);
  std::vector<std::string> parts;
  std::stringstream ss(all);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  GroupShape shape;
  std::optional<i64> p, m;
  std::vector<int> r;
  for (const auto& part : parts) {
    if (part == "multiquadratic") {
      shape.multiquadratic = true;
      continue;
    }
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected key=value in '" + part + "'");
    const std::string key = part.substr(0, eq), value = part.substr(eq + 1);
    if (key == "p") {
      p = parse_int(value, all);
    } else if (key == "m") {
      m = parse_int(value, all);
    } else if (key == "r") {
      std::stringstream rs(value);
      for (std::string v; std::getline(rs, v, ':');) r.push_back(static_cast<int>(parse_int(v, all)));
    } else {
      throw Error(ErrorKind::ParseError, "unknown key '" + key + "' in shape");
    }
  }
  if (shape.multiquadratic) {
    if (!m || *m < 1 || p || !r.empty()) throw Error(ErrorKind::ParseError, "multiquadratic shape takes only m >= 1");
    shape.p = 2;
    shape.r.assign(static_cast<std::size_t>(*m), 1);
    return shape;
  }
  if (!p || !nt::is_prime(*p)) throw Error(ErrorKind::ParseError, "shape needs a prime p");
  if (r.empty()) throw Error(ErrorKind::ParseError, "shape needs r");
  if (!m) m = static_cast<i64>(r.size());
  if (r.size() == 1 && *m > 1) r.assign(static_cast<std::size_t>(*m), r[0]);
  if (static_cast<i64>(r.size()) != *m) throw Error(ErrorKind::ParseError, "r list length differs from m");
  for (int e : r)
    if (e < 1) throw Error(ErrorKind::ParseError, "exponents r must be >= 1");
  std::sort(r.begin(), r.end());
  shape.p = *p;
  shape.r = r;
  return shape;
}

std::string to_string(const GroupShape& shape) {
  if (shape.multiquadratic) return "multiquadratic,m=" + std::to_string(shape.m());
  std::string out = "p=" + std::to_string(shape.p) + ",m=" + std::to_string(shape.m()) + ",r=";
  for (std::size_t i = 0; i < shape.r.size(); ++i) out += (i ? ":" : "") + std::to_string(shape.r[i]);
  return out;
}

i64 subfield_conductor(const std::vector<Cyclotomic>& generators) {
  i64 f = 1;
  for (const auto& g : generators) f = nt::lcm(f, g.conductor());
  return f;
}

AdmissibleLevelReport is_modularly_admissible(i64 n, const std::vector<Cyclotomic>& generators) {
  if (n < 1) throw Error(ErrorKind::BadLevel, "level must be positive");
  AdmissibleLevelReport rep;
  rep.conductor = subfield_conductor(generators);
  if (n % rep.conductor != 0)
    throw Error(ErrorKind::BadLevel, "K has conductor " + std::to_string(rep.conductor) + " which does not divide " + std::to_string(n));
  std::vector<Cyclotomic> gens;
  for (const auto& g : generators) gens.push_back(g.reduce_conductor());
  for (i64 k : nt::units(n)) {
    bool fixes = true;
    for (const auto& g : gens)
      if (g.galois(nt::mod(k, g.order())) != g) {
        fixes = false;
        break;
      }
    if (fixes && nt::mod(k * k, n) != 1 % n) {
      rep.multi_quadratic = Verdict::fail("sigma_" + std::to_string(k) + " fixes K but has order > 2");
      break;
    }
  }
  const i64 f = rep.conductor;
  const i64 q = n / f;
  if (24 % q != 0) rep.quotient_divides_24 = Verdict::fail("n/f = " + std::to_string(q) + " does not divide 24");
  if (2 % nt::gcd(q, f) != 0) rep.gcd_divides_2 = Verdict::fail("gcd(n/f, f) = " + std::to_string(nt::gcd(q, f)));
  // Kernel of (Z/n)^x -> (Z/f)^x.
  i64 kernel = 0;
  for (i64 k : nt::units(n)) {
    if (nt::mod(k, f) != 1 % f) continue;
    ++kernel;
    if (nt::mod(k * k, n) != 1 % n) {
      rep.galois_in_2_cubed = Verdict::fail("Gal(Q_n/Q_f) contains sigma_" + std::to_string(k) + " of order > 2");
      break;
    }
  }
  if (rep.galois_in_2_cubed.pass && kernel > 8)
    rep.galois_in_2_cubed = Verdict::fail("|Gal(Q_n/Q_f)| = " + std::to_string(kernel) + " > 8");
  return rep;
}

std::vector<i64> enumerate_levels(const GroupShape& shape) {
  std::vector<i64> out;
  const auto& r = shape.r;
  const i64 p = shape.p;
  const auto div24 = nt::divisors(24);
  if (shape.multiquadratic || p == 2) {
    // n = 2^a times distinct Fermat primes, bounded by the order cap.
    std::vector<i64> odd_parts{1};
    for (i64 fp : kFermatPrimes) {
      const std::size_t base = odd_parts.size();
      for (std::size_t i = 0; i < base; ++i) odd_parts.push_back(odd_parts[i] * fp);
    }
    for (i64 odd : odd_parts)
      for (i64 two = 1; nt::euler_phi(two) <= order_cap(); two *= 2) {
        const i64 n = two * odd;
        if (nt::euler_phi(n) <= order_cap()) out.push_back(n);
      }
    const bool elementary = std::all_of(r.begin(), r.end(), [](int e) { return e == 1; });
    if (shape.multiquadratic || elementary)
      out.erase(std::remove_if(out.begin(), out.end(), [](i64 n) { return 240 % n != 0; }), out.end());
    out.erase(std::remove_if(out.begin(), out.end(), [&](i64 n) { return !admits_shape(n, shape); }), out.end());
    return sorted_unique(out);
  }
  std::vector<i64> q;
  for (int e : r) q.push_back(2 * ipow(p, e) + 1);
  auto distinct_primes = [](const std::vector<i64>& qs) {
    if (!std::all_of(qs.begin(), qs.end(), [](i64 x) { return nt::is_prime(x); })) return false;
    return std::set<i64>(qs.begin(), qs.end()).size() == qs.size();
  };
  auto product = [](const std::vector<i64>& qs) {
    i64 out = 1;
    for (i64 x : qs) out *= x;
    return out;
  };
  if (p > 3) {
    if (p % 3 != 2) return {};
    if (!std::all_of(r.begin(), r.end(), [](int e) { return e % 2 == 1; })) return {};
    if (std::set<int>(r.begin(), r.end()).size() != r.size()) return {};
    if (!distinct_primes(q)) return {};
    for (i64 f : div24) out.push_back(f * product(q));
    return sorted_unique(out);
  }
  // p == 3
  if (distinct_primes(q))
    for (i64 f : div24) out.push_back(f * product(q));
  for (std::size_t i = 0; i < q.size(); ++i) {
    std::vector<i64> rest;
    for (std::size_t j = 0; j < q.size(); ++j)
      if (j != i) rest.push_back(q[j]);
    if (!distinct_primes(rest)) continue;
    for (i64 f : nt::divisors(8)) out.push_back(f * ipow(3, r[i] + 1) * product(rest));
  }
  return sorted_unique(out);
}

bool admits_shape(i64 n, const GroupShape& shape) {
  const std::vector<i64> g = nt::units(n);
  const i64 order_g = static_cast<i64>(g.size());
  if (order_g % shape.order() != 0) return false;
  std::vector<i64> omega2;
  for (i64 x : g)
    if (nt::mod(x * x, n) == 1 % n) omega2.push_back(x);
  // Every subgroup of the elementary 2-group omega2, as sorted element lists.
  std::set<std::vector<i64>> subgroups{{1 % n}};
  std::vector<std::vector<i64>> frontier{{1 % n}};
  while (!frontier.empty()) {
    std::vector<std::vector<i64>> next;
    for (const auto& h : frontier)
      for (i64 x : omega2) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        std::vector<i64> bigger = h;
        for (i64 y : h) bigger.push_back(nt::mod(x * y, n));
        std::sort(bigger.begin(), bigger.end());
        if (subgroups.insert(bigger).second) next.push_back(bigger);
      }
    frontier = std::move(next);
  }
  const auto divs = nt::divisors(order_g);
  for (const auto& h : subgroups) {
    const i64 order_h = static_cast<i64>(h.size());
    if (order_g / order_h != shape.order()) continue;
    std::vector<char> in_h(static_cast<std::size_t>(n), 0);
    for (i64 y : h) in_h[static_cast<std::size_t>(y)] = 1;
    bool same = true;
    for (i64 k : divs) {
      i64 count = 0;
      for (i64 x : g)
        if (in_h[static_cast<std::size_t>(nt::pow_mod(x, k, n))]) ++count;
      i64 expected = 1;
      for (int e : shape.r) expected *= nt::gcd(k, ipow(shape.p, e));
      if (count / order_h != expected) {
        same = false;
        break;
      }
    }
    if (same) return true;
  }
  return false;
}

Verdict odd_prime_constraints(i64 n, std::optional<i64> p) {
  if (n < 1) return Verdict::fail("n must be positive");
  for (auto [q, e] : nt::factor(n)) {
    if (q == 2) continue;
    if (q % 4 != 3) return Verdict::fail(std::to_string(q) + " | n but " + std::to_string(q) + " != 3 mod 4");
    if (q <= 3) continue;
    if (e > 1) return Verdict::fail(std::to_string(q) + "^" + std::to_string(e) + " | n: not a simple factor");
    const i64 half = (q - 1) / 2;
    const auto f = nt::factor(half);
    if (f.size() != 1) return Verdict::fail(std::to_string(q) + " is not 2 p^r + 1");
    if (p) {
      if (f[0].first != *p) return Verdict::fail(std::to_string(q) + " is not 2 * " + std::to_string(*p) + "^r + 1");
      if (*p > 3 && (f[0].second % 2 == 0 || *p % 3 != 2))
        return Verdict::fail(std::to_string(q) + " = 2 p^r + 1 with r even or p != 2 mod 3");
    }
  }
  return Verdict::ok();
}

CauchySupport cauchy_prime_support(const Cyclotomic& global_dim_sq, i64 torder) {
  CauchySupport out;
  out.level_primes = nt::prime_divisors(torder);
  // Norm over Q(zeta_f) for the conductor f of D^2; it is a power of the norm
  // over Q_N, so the prime support is the same.
  const Rational norm = global_dim_sq.norm();
  if (norm == 0) {
    out.verdict = Verdict::fail("D^2 = 0");
    return out;
  }
  Integer rest = abs(norm.get_num()) * norm.get_den();
  for (i64 q : out.level_primes) {
    const Integer zq(static_cast<long>(q));
    if (rest % zq == 0) {
      out.norm_primes.push_back(q);
      while (rest % zq == 0) rest /= zq;
    }
  }
  // Remaining primes, by trial division; a large cofactor is reported as is.
  for (long d = 2; rest > 1 && d < 1000000; ++d) {
    if (rest % d != 0) continue;
    out.norm_primes.push_back(d);
    while (rest % d == 0) rest /= d;
  }
  bool leftover = false;
  if (rest > 1) {
    leftover = true;
    if (rest.fits_slong_p()) out.norm_primes.push_back(rest.get_si());
  }
  std::sort(out.norm_primes.begin(), out.norm_primes.end());
  if (out.norm_primes != out.level_primes || leftover) {
    std::ostringstream os;
    os << "primes of Norm(D^2) {";
    for (std::size_t i = 0; i < out.norm_primes.size(); ++i) os << (i ? "," : "") << out.norm_primes[i];
    if (leftover && !rest.fits_slong_p()) os << (out.norm_primes.empty() ? "" : ",") << "cofactor " << rest.get_str();
    os << "} != primes of N {";
    for (std::size_t i = 0; i < out.level_primes.size(); ++i) os << (i ? "," : "") << out.level_primes[i];
    os << "}";
    out.verdict = Verdict::fail(os.str());
  }
  return out;
}

CauchySupport cauchy_prime_support(const ModularDatum& datum) {
  return cauchy_prime_support(derived_scalars(datum).global_dim_sq, datum.torder);
}

}  // namespace modcat
