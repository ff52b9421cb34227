#include "modcat/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <boost/math/constants/constants.hpp>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "modcat/error.hpp"
#include "modcat/numtheory.hpp"

namespace modcat {

using i64 = std::int64_t;

namespace {

std::atomic<i64> g_order_cap{2000};

struct OrderContext {
  i64 n = 1;
  i64 phi = 1;
  std::vector<i64> poly;                      // Phi_n, low to high, monic, size phi + 1
  std::vector<std::pair<i64, i64>> low_terms;  // nonzero (index, coeff) below the leading term
};

std::vector<i64> divide_exact(const std::vector<i64>& num, const std::vector<i64>& den) {
  // den is monic.
  std::vector<i64> rem = num;
  const std::size_t dn = den.size() - 1;
  std::vector<i64> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const i64 c = rem[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= c * den[j];
  }
  return quot;
}

class ContextCache {
 public:
  const OrderContext& get(i64 n) {
    if (n < 1) throw Error(ErrorKind::InvalidOrder, "order " + std::to_string(n));
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return *it->second;
    const i64 phi = nt::euler_phi(n);
    if (phi > g_order_cap.load())
      throw Error(ErrorKind::OrderTooLarge,
                  "phi(" + std::to_string(n) + ") = " + std::to_string(phi) + " exceeds cap " +
                      std::to_string(g_order_cap.load()));
    auto ctx = std::make_unique<OrderContext>();
    ctx->n = n;
    ctx->phi = phi;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<i64> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (i64 d : nt::divisors(n)) {
      if (d == n) continue;
      p = divide_exact(p, get(d).poly);
    }
    ctx->poly = std::move(p);
    for (i64 i = 0; i < phi; ++i)
      if (ctx->poly[static_cast<std::size_t>(i)] != 0)
        ctx->low_terms.emplace_back(i, ctx->poly[static_cast<std::size_t>(i)]);
    auto* raw = ctx.get();
    cache_.emplace(n, std::move(ctx));
    return *raw;
  }

 private:
  std::recursive_mutex mutex_;
  std::unordered_map<i64, std::unique_ptr<OrderContext>> cache_;
};

ContextCache& contexts() {
  static ContextCache cache;
  return cache;
}

// Folds exponents mod n and reduces modulo Phi_n; returns length phi(n).
std::vector<Integer> reduce_poly(std::vector<Integer> poly, const OrderContext& ctx) {
  const auto n = static_cast<std::size_t>(ctx.n);
  if (poly.size() > n) {
    for (std::size_t i = n; i < poly.size(); ++i)
      if (poly[i] != 0) poly[i % n] += poly[i];
    poly.resize(n);
  }
  if (poly.size() < n) poly.resize(n);
  const auto phi = static_cast<std::size_t>(ctx.phi);
  Integer c;
  for (std::size_t d = n; d-- > phi;) {
    if (poly[d] == 0) continue;
    c = poly[d];
    const std::size_t shift = d - phi;
    for (const auto& [idx, coeff] : ctx.low_terms) poly[shift + static_cast<std::size_t>(idx)] -= c * coeff;
    poly[d] = 0;
  }
  poly.resize(phi);
  return poly;
}

bool all_zero(const std::vector<Integer>& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

std::int64_t order_cap() { return g_order_cap.load(); }
void set_order_cap(std::int64_t phi_cap) { g_order_cap.store(phi_cap); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  Rational q;
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
    q = Rational(Integer(s[0] == '+' ? s.substr(1) : s));
  } else {
    const std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!valid_int(a) || !valid_int(b)) throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
    Integer den(b[0] == '+' ? b.substr(1) : b);
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    q = Rational(Integer(a[0] == '+' ? a.substr(1) : a), den);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- RootOfUnity

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den < 1) throw Error(ErrorKind::InvalidOrder, "root of unity denominator " + std::to_string(den));
  num = nt::mod(num, den);
  const i64 g = nt::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  if (num_ == 0) den_ = 1;
}

std::int64_t RootOfUnity::exponent_over(std::int64_t n) const {
  if (n % den_ != 0)
    throw Error(ErrorKind::InvalidOrder, "root of order " + std::to_string(den_) + " is not a " +
                                             std::to_string(n) + "-th root");
  return num_ * (n / den_);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  const i64 l = nt::lcm(den_, o.den_);
  return {num_ * (l / den_) + o.num_ * (l / o.den_), l};
}

RootOfUnity RootOfUnity::operator/(const RootOfUnity& o) const { return *this * o.inverse(); }

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  const i64 kk = nt::mod(k, den_);
  return {static_cast<i64>((static_cast<__int128>(num_) * kk) % den_), den_};
}

std::string RootOfUnity::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

// ----------------------------------------------------------------- Cyclotomic

Cyclotomic::Cyclotomic() : order_(1), num_{Integer(0)}, den_(1), reduced_(true) {}

Cyclotomic::Cyclotomic(long value) : order_(1), num_{Integer(value)}, den_(1), reduced_(true) {}

Cyclotomic::Cyclotomic(const Rational& value) : order_(1), reduced_(true) {
  Rational q = value;
  q.canonicalize();
  num_ = {q.get_num()};
  den_ = q.get_den();
}

Cyclotomic::Cyclotomic(std::int64_t order, std::vector<Integer> num, Integer den, bool reduced)
    : order_(order), num_(std::move(num)), den_(std::move(den)), reduced_(reduced) {
  normalize();
}

void Cyclotomic::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (all_zero(num_)) {
    order_ = 1;
    num_.assign(1, Integer(0));
    den_ = 1;
    reduced_ = true;
    return;
  }
  Integer g = den_;
  for (const auto& c : num_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Cyclotomic Cyclotomic::make(std::int64_t order, const std::map<std::int64_t, Rational>& raw) {
  const OrderContext& ctx = contexts().get(order);
  Integer den = 1;
  for (const auto& [e, c] : raw) {
    if (c == 0) continue;
    den = lcm(den, Integer(c.get_den()));
  }
  std::vector<Integer> poly(static_cast<std::size_t>(order));
  for (const auto& [e, c] : raw) {
    if (c == 0) continue;
    poly[static_cast<std::size_t>(nt::mod(e, order))] += c.get_num() * (den / c.get_den());
  }
  return Cyclotomic(order, reduce_poly(std::move(poly), ctx), den, order == 1);
}

Cyclotomic Cyclotomic::zeta(std::int64_t n, std::int64_t e) {
  return make(n, {{e, Rational(1)}}).reduce_conductor();
}

Cyclotomic Cyclotomic::from_root(const RootOfUnity& w) { return zeta(w.order(), w.numerator()); }

Cyclotomic Cyclotomic::lifted(std::int64_t m) const {
  if (m == order_) return *this;
  if (m % order_ != 0)
    throw Error(ErrorKind::InvalidOrder,
                std::to_string(m) + " is not a multiple of order " + std::to_string(order_));
  const OrderContext& ctx = contexts().get(m);
  const auto k = static_cast<std::size_t>(m / order_);
  std::vector<Integer> poly(static_cast<std::size_t>(m));
  for (std::size_t e = 0; e < num_.size(); ++e)
    if (num_[e] != 0) poly[e * k] = num_[e];
  return Cyclotomic(m, reduce_poly(std::move(poly), ctx), den_, false);
}

std::vector<Rational> Cyclotomic::coefficients_at(std::int64_t m) const {
  const Cyclotomic up = lifted(m);
  std::vector<Rational> out;
  out.reserve(up.num_.size());
  for (const auto& c : up.num_) {
    Rational q(c, up.den_);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

std::map<std::int64_t, Rational> Cyclotomic::coeffs() const {
  std::map<std::int64_t, Rational> out;
  for (std::size_t e = 0; e < num_.size(); ++e) {
    if (num_[e] == 0) continue;
    Rational q(num_[e], den_);
    q.canonicalize();
    out.emplace(static_cast<i64>(e), q);
  }
  return out;
}

Rational Cyclotomic::coeff(std::int64_t e) const {
  if (e < 0 || e >= static_cast<i64>(num_.size())) return Rational(0);
  Rational q(num_[static_cast<std::size_t>(e)], den_);
  q.canonicalize();
  return q;
}

Cyclotomic Cyclotomic::conductor_reduced() const {
  i64 n = order_;
  std::vector<Integer> num = num_;
  Integer den = den_;
  bool changed = true;
  while (changed && n > 1) {
    changed = false;
    if (n % 4 == 2) {
      // Q(zeta_2m) == Q(zeta_m) for odd m: zeta_n = -zeta_m^((m+1)/2).
      const i64 m = n / 2;
      const i64 half = (m + 1) / 2;
      std::vector<Integer> poly(static_cast<std::size_t>(m));
      for (std::size_t e = 0; e < num.size(); ++e) {
        if (num[e] == 0) continue;
        const auto target = static_cast<std::size_t>(nt::mod(static_cast<i64>(e) * half, m));
        if (e % 2 == 0)
          poly[target] += num[e];
        else
          poly[target] -= num[e];
      }
      num = reduce_poly(std::move(poly), contexts().get(m));
      n = m;
      changed = true;
      continue;
    }
    for (i64 p : nt::prime_divisors(n)) {
      const i64 m = n / p;
      if (m % p == 0) {
        // Phi_n(x) = Phi_m(x^p): exponent classes mod p never mix.
        bool inside = true;
        for (std::size_t e = 0; e < num.size() && inside; ++e)
          if (num[e] != 0 && static_cast<i64>(e) % p != 0) inside = false;
        if (!inside) continue;
        std::vector<Integer> next(static_cast<std::size_t>(nt::euler_phi(m)));
        for (std::size_t e = 0; e < num.size(); e += static_cast<std::size_t>(p))
          next[e / static_cast<std::size_t>(p)] = num[e];
        num = std::move(next);
        n = m;
        changed = true;
        break;
      }
      // p exactly divides n: zeta_n^e = zeta_m^u zeta_p^v with e = u p + v m.
      // Averaging over Gal(Q_n/Q_m) sends zeta_p^v (v != 0) to -1/(p-1).
      const i64 p_inv = nt::inverse_mod(p, m);
      const i64 m_inv = nt::inverse_mod(m, p);
      std::vector<Integer> proj(static_cast<std::size_t>(m));
      for (std::size_t e = 0; e < num.size(); ++e) {
        if (num[e] == 0) continue;
        const i64 ee = static_cast<i64>(e);
        const auto u = static_cast<std::size_t>(nt::mod(ee * p_inv, m));
        const i64 v = nt::mod(ee * m_inv, p);
        if (v == 0)
          proj[u] += num[e] * (p - 1);
        else
          proj[u] -= num[e];
      }
      std::vector<Integer> proj_red = reduce_poly(std::move(proj), contexts().get(m));
      // Embed back and compare with (p-1) * x.
      std::vector<Integer> back(static_cast<std::size_t>(n));
      for (std::size_t u = 0; u < proj_red.size(); ++u)
        if (proj_red[u] != 0) back[u * static_cast<std::size_t>(p)] = proj_red[u];
      back = reduce_poly(std::move(back), contexts().get(n));
      bool equal = true;
      for (std::size_t e = 0; e < num.size() && equal; ++e)
        if (back[e] != num[e] * (p - 1)) equal = false;
      if (!equal) continue;
      num = std::move(proj_red);
      den *= (p - 1);
      n = m;
      changed = true;
      break;
    }
  }
  return Cyclotomic(n, std::move(num), std::move(den), true);
}

Cyclotomic Cyclotomic::reduce_conductor() const {
  if (reduced_) return *this;
  return conductor_reduced();
}

std::int64_t Cyclotomic::conductor() const { return reduce_conductor().order_; }

bool Cyclotomic::is_zero() const { return num_.size() == 1 && order_ == 1 && num_[0] == 0; }

bool Cyclotomic::is_rational() const { return reduce_conductor().order_ == 1; }

bool Cyclotomic::is_real() const { return *this == conj(); }

bool Cyclotomic::is_algebraic_integer() const { return den_ == 1; }

Rational Cyclotomic::to_rational() const {
  const Cyclotomic r = reduce_conductor();
  if (r.order_ != 1) throw Error(ErrorKind::NotApplicable, "element is not rational: " + to_string());
  Rational q(r.num_[0], r.den_);
  q.canonicalize();
  return q;
}

std::optional<RootOfUnity> Cyclotomic::as_root_of_unity() const {
  if (is_zero()) return std::nullopt;
  if (*this * conj() != Cyclotomic(1)) return std::nullopt;
  const Cyclotomic r = reduce_conductor();
  const i64 l = nt::lcm(2, r.order_);
  for (i64 j = 0; j < l; ++j)
    if (zeta(l, j) == r) return RootOfUnity(j, l);
  return std::nullopt;
}

Cyclotomic combine(const Cyclotomic& a, const Cyclotomic& b, bool subtract) {
  const i64 l = nt::lcm(a.order_, b.order_);
  const OrderContext& ctx = contexts().get(l);
  std::vector<Integer> poly(static_cast<std::size_t>(l));
  const auto ka = static_cast<std::size_t>(l / a.order_);
  const auto kb = static_cast<std::size_t>(l / b.order_);
  const bool same_den = a.den_ == b.den_;
  for (std::size_t e = 0; e < a.num_.size(); ++e)
    if (a.num_[e] != 0) poly[e * ka] += same_den ? a.num_[e] : a.num_[e] * b.den_;
  for (std::size_t e = 0; e < b.num_.size(); ++e) {
    if (b.num_[e] == 0) continue;
    if (subtract)
      poly[e * kb] -= same_den ? b.num_[e] : b.num_[e] * a.den_;
    else
      poly[e * kb] += same_den ? b.num_[e] : b.num_[e] * a.den_;
  }
  Integer den = same_den ? a.den_ : Integer(a.den_ * b.den_);
  const bool already = a.order_ == b.order_ && a.reduced_ && b.reduced_ && a.order_ == 1;
  Cyclotomic out(l, reduce_poly(std::move(poly), ctx), den, already);
  return out.reduce_conductor();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const { return combine(*this, o, false); }

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return combine(*this, o, true); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (is_zero() || o.is_zero()) return Cyclotomic();
  if (order_ == 1 && o.order_ == 1) return Cyclotomic(1, {num_[0] * o.num_[0]}, den_ * o.den_, true);
  if (order_ == 1 || o.order_ == 1) {
    const Cyclotomic& scalar = order_ == 1 ? *this : o;
    const Cyclotomic& vec = order_ == 1 ? o : *this;
    std::vector<Integer> num = vec.num_;
    for (auto& c : num) c *= scalar.num_[0];
    return Cyclotomic(vec.order_, std::move(num), vec.den_ * scalar.den_, vec.reduced_);
  }
  const i64 l = nt::lcm(order_, o.order_);
  const OrderContext& ctx = contexts().get(l);
  const auto lu = static_cast<std::size_t>(l);
  const auto ka = static_cast<std::size_t>(l / order_);
  const auto kb = static_cast<std::size_t>(l / o.order_);
  std::vector<std::size_t> nz_b;
  for (std::size_t e = 0; e < o.num_.size(); ++e)
    if (o.num_[e] != 0) nz_b.push_back(e);
  std::vector<Integer> poly(lu);
  for (std::size_t ea = 0; ea < num_.size(); ++ea) {
    if (num_[ea] == 0) continue;
    const std::size_t base = ea * ka;
    for (std::size_t eb : nz_b) {
      std::size_t idx = base + eb * kb;
      if (idx >= lu) idx -= lu;
      mpz_addmul(poly[idx].get_mpz_t(), num_[ea].get_mpz_t(), o.num_[eb].get_mpz_t());
    }
  }
  Cyclotomic out(l, reduce_poly(std::move(poly), ctx), den_ * o.den_, false);
  return out.reduce_conductor();
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (nt::gcd(nt::mod(k, order_), order_) != 1 && order_ > 1)
    throw Error(ErrorKind::NotAUnit,
                std::to_string(k) + " is not a unit modulo " + std::to_string(order_));
  if (order_ == 1) return *this;
  const OrderContext& ctx = contexts().get(order_);
  const i64 kk = nt::mod(k, order_);
  std::vector<Integer> poly(static_cast<std::size_t>(order_));
  for (std::size_t e = 0; e < num_.size(); ++e)
    if (num_[e] != 0) poly[static_cast<std::size_t>((static_cast<i64>(e) * kk) % order_)] = num_[e];
  return Cyclotomic(order_, reduce_poly(std::move(poly), ctx), den_, reduced_);
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const Cyclotomic x = reduce_conductor();
  if (x.order_ == 1) return Cyclotomic(1, {x.den_}, x.num_[0], true);
  // x^-1 = (prod_{k != 1} sigma_k(x)) / N(x)
  Cyclotomic others(1);
  for (i64 k : nt::units(x.order_)) {
    if (k == 1) continue;
    others = others * x.galois(k);
  }
  const Rational n = (x * others).to_rational();
  return others * Cyclotomic(Rational(1) / n);
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (o.order_ == 1) {
    Rational q(o.num_[0], o.den_);
    q.canonicalize();
    return *this * Cyclotomic(Rational(1) / q);
  }
  return *this * o.inv();
}

Cyclotomic Cyclotomic::pow(std::int64_t k) const {
  if (k < 0) return inv().pow(-k);
  Cyclotomic result(1), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational Cyclotomic::norm() const {
  Cyclotomic prod(1);
  for (i64 k : nt::units(order_)) prod = prod * galois(k);
  return prod.to_rational();
}

Rational Cyclotomic::trace() const {
  Integer acc = 0;
  for (std::size_t e = 0; e < num_.size(); ++e)
    if (num_[e] != 0) acc += num_[e] * nt::ramanujan_sum(order_, static_cast<i64>(e));
  Rational q(acc, den_);
  q.canonicalize();
  return q;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (order_ == o.order_) return den_ == o.den_ && num_ == o.num_;
  if (reduced_ && o.reduced_) return false;
  const i64 l = nt::lcm(order_, o.order_);
  const Cyclotomic a = lifted(l), b = o.lifted(l);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

ComplexValue Cyclotomic::evaluate(int digits) const {
  if (digits < 1 || digits > kMaxEvalDigits)
    throw Error(ErrorKind::OutOfRange, "digits must be in 1.." + std::to_string(kMaxEvalDigits));
  const Float two_pi = 2 * boost::math::constants::pi<Float>();
  const Float den(den_.get_str());
  ComplexValue out{0, 0};
  for (std::size_t e = 0; e < num_.size(); ++e) {
    if (num_[e] == 0) continue;
    const Float c = Float(num_[e].get_str()) / den;
    const Float angle = two_pi * Float(static_cast<long long>(e)) / Float(static_cast<long long>(order_));
    out.re += c * boost::multiprecision::cos(angle);
    out.im += c * boost::multiprecision::sin(angle);
  }
  return out;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs()) {
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "E(" << order_ << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

Cyclotomic reduce_conductor(const Cyclotomic& x) { return x.reduce_conductor(); }

Cyclotomic galois_apply(const Cyclotomic& x, std::int64_t k) { return x.galois(k); }

ComplexValue complex_eval(const Cyclotomic& x, int digits) { return x.evaluate(digits); }

namespace {

int legendre(i64 a, i64 p) {
  const i64 r = nt::pow_mod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

// sqrt(p) for a prime p, as a positive real cyclotomic integer.
Cyclotomic sqrt_prime(i64 p) {
  if (p == 2) return Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, 7);
  std::map<i64, Rational> gauss;
  for (i64 a = 1; a < p; ++a) gauss[a] = Rational(legendre(a, p));
  Cyclotomic g = Cyclotomic::make(p, gauss).reduce_conductor();
  // g^2 = (-1)^((p-1)/2) p; for p = 3 mod 4, g = i sqrt(p).
  if (p % 4 == 3) g = g * Cyclotomic::zeta(4, 3);
  if (g.evaluate(20).re < 0) g = -g;
  return g;
}

}  // namespace

Cyclotomic sqrt_rational(const Rational& q) {
  if (q == 0) return Cyclotomic();
  const bool negative = q < 0;
  const Rational a = negative ? Rational(-q) : q;
  // sqrt(n/d) = sqrt(n d) / d
  const Integer nd = a.get_num() * a.get_den();
  if (!nd.fits_slong_p()) throw Error(ErrorKind::OutOfRange, "sqrt argument too large");
  Integer square = 1;
  Cyclotomic root(1);
  for (auto [p, e] : nt::factor(nd.get_si())) {
    for (int i = 0; i < e / 2; ++i) square *= p;
    if (e % 2 == 1) root = root * sqrt_prime(p);
  }
  root = root * Cyclotomic(Rational(square, a.get_den()));
  if (negative) root = root * Cyclotomic::zeta(4, 1);
  return root;
}

Cyclotomic sin_pi(std::int64_t a, std::int64_t n) {
  // (zeta_2n^a - zeta_2n^-a) / (2i) = (zeta_2n^a - zeta_2n^-a) * (-i/2)
  const Cyclotomic diff = Cyclotomic::zeta(2 * n, a) - Cyclotomic::zeta(2 * n, -a);
  return diff * Cyclotomic::zeta(4, 3) * Cyclotomic(Rational(1, 2));
}

}  // namespace modcat
