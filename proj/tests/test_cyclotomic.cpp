#include <thread>

#include "doctest.h"
#include "modcat/error.hpp"
#include "modcat/numtheory.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace modcat;
using support::kind_of;

namespace {

const std::vector<std::int64_t> kOrders{1, 3, 4, 5, 7, 8, 9, 12, 15, 20, 24, 60};

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("make") {
    const Cyclotomic i = Cyclotomic::make(4, {{1, 1}});
    CHECK(i * i == Cyclotomic::make(4, {{0, -1}}));
    const Cyclotomic half = Cyclotomic::make(1, {{0, Rational(3, 2)}});
    CHECK(half.is_rational());
    CHECK(half.to_rational() == Rational(3, 2));
    CHECK(Cyclotomic::make(5, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}).is_zero());
    CHECK(Cyclotomic::make(7, {{0, 1}}) == Cyclotomic(1));
    CHECK(kind_of([] { Cyclotomic::make(0, {}); }) == ErrorKind::InvalidOrder);
  }

  TEST_CASE("field operations") {
    CHECK(Cyclotomic::zeta(8) * Cyclotomic::zeta(8, 7) == Cyclotomic(1));
    CHECK(Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2) == Cyclotomic(-1));
    const Cyclotomic x = Cyclotomic::zeta(5) + Cyclotomic::zeta(5, 4);
    CHECK(x * x.inv() == Cyclotomic(1));
    CHECK(kind_of([] { Cyclotomic().inv(); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { Cyclotomic(1) / Cyclotomic(); }) == ErrorKind::DivisionByZero);
  }

  TEST_CASE("arithmetic agrees with the float oracle") {
    std::mt19937_64 rng(support::seed(1234));
    std::uniform_int_distribution<std::size_t> pick(0, kOrders.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const Cyclotomic x = oracle::random_element(rng, kOrders[pick(rng)]);
      const Cyclotomic y = oracle::random_element(rng, kOrders[pick(rng)]);
      CHECK(oracle::close(oracle::eval(x + y), oracle::eval(x) + oracle::eval(y)));
      CHECK(oracle::close(oracle::eval(x - y), oracle::eval(x) - oracle::eval(y)));
      CHECK(oracle::close(oracle::eval(x * y), oracle::eval(x) * oracle::eval(y), 1e-8));
      if (!y.is_zero()) {
        CHECK(oracle::close(oracle::eval(x / y), oracle::eval(x) / oracle::eval(y), 1e-6));
        CHECK(x / y * y == x);
      }
    }
  }

  TEST_CASE("galois_apply") {
    CHECK(galois_apply(Cyclotomic::zeta(5), 2) == Cyclotomic::zeta(5, 2));
    const Cyclotomic r2 = Cyclotomic::zeta(8) + Cyclotomic::zeta(8, -1);
    CHECK(galois_apply(r2, -1) == r2);
    CHECK(galois_apply(r2, 3) == -r2);
    CHECK(kind_of([] { galois_apply(Cyclotomic::zeta(5), 5); }) == ErrorKind::NotAUnit);

    std::mt19937_64 rng(support::seed(99));
    for (int trial = 0; trial < 50; ++trial) {
      const std::int64_t n = kOrders[trial % kOrders.size()];
      const Cyclotomic x = oracle::random_element(rng, n);
      const auto units = nt::units(n);
      const std::int64_t k = units[trial % units.size()], l = units[(trial * 7 + 3) % units.size()];
      CHECK(galois_apply(galois_apply(x, k), l) == galois_apply(x, nt::mod(k * l, n)));
      CHECK(galois_apply(x, 1) == x);
      CHECK(oracle::close(oracle::eval(galois_apply(x, k)), oracle::eval(x, k)));
      CHECK(oracle::close(oracle::eval(x.conj()), std::conj(oracle::eval(x))));
    }
  }

  TEST_CASE("the unit group acts faithfully as a group") {
    std::mt19937_64 rng(support::seed(7));
    for (std::int64_t n : {5, 8, 12, 15, 21, 36, 60}) {
      std::vector<Cyclotomic> xs{Cyclotomic::zeta(n)};
      for (int i = 1; i < 20; ++i) xs.push_back(oracle::random_element(rng, n));
      const auto units = nt::units(n);
      for (std::int64_t k : units) {
        bool moved = false;
        for (const auto& x : xs) moved = moved || x.galois(k) != x;
        CHECK(moved == (k != 1));
        for (std::int64_t l : units)
          for (const auto& x : xs) CHECK(x.galois(l).galois(k) == x.galois(nt::mod(k * l, n)));
      }
    }
  }

  TEST_CASE("reduce_conductor") {
    const Cyclotomic z = Cyclotomic::make(6, {{2, 1}});
    CHECK(z.reduce_conductor().order() == 3);
    CHECK(z == Cyclotomic::zeta(3));
    const Cyclotomic r2 = Cyclotomic::zeta(8) + Cyclotomic::zeta(8, -1);
    CHECK(r2.conductor() == 8);
    CHECK(Cyclotomic::make(12, {{0, 7}}).reduce_conductor().order() == 1);

    // Fixed-field oracle: x lies in Q(zeta_d) iff sigma_k x = x for every unit k = 1 mod d.
    auto in_subfield = [](const Cyclotomic& x, std::int64_t n, std::int64_t d) {
      for (std::int64_t k : nt::units(n))
        if (nt::mod(k, d) == 1 % d && x.galois(k) != x) return false;
      return true;
    };
    std::mt19937_64 rng(support::seed(31));
    for (int trial = 0; trial < 60; ++trial) {
      const std::int64_t n = kOrders[trial % kOrders.size()];
      const Cyclotomic x = oracle::random_element(rng, n, 1 + trial % 3);
      const std::int64_t f = x.conductor();
      CHECK(n % f == 0);
      CHECK(in_subfield(x, n, f));
      for (std::int64_t d : nt::divisors(n))
        if (in_subfield(x, n, d)) CHECK(d % f == 0);
      CHECK(x.reduce_conductor().reduce_conductor().order() == x.reduce_conductor().order());
      CHECK(Cyclotomic::make(2 * n, [&] {
              std::map<std::int64_t, Rational> lifted;
              for (const auto& [e, c] : x.coeffs()) lifted[2 * e] = c;
              return lifted;
            }()) == x);
    }
  }

  TEST_CASE("canonical form is unique") {
    std::mt19937_64 rng(support::seed(5));
    for (int trial = 0; trial < 100; ++trial) {
      const Cyclotomic x = oracle::random_element(rng, kOrders[trial % kOrders.size()]);
      const Cyclotomic y = trial % 2 ? oracle::random_element(rng, kOrders[(trial * 5) % kOrders.size()]) : x * Cyclotomic(1);
      const std::int64_t m = nt::lcm(x.order(), y.order());
      CHECK((x == y) == (x.coefficients_at(m) == y.coefficients_at(m)));
    }
  }

  TEST_CASE("predicates") {
    const auto w = (-Cyclotomic::zeta(3)).as_root_of_unity();
    REQUIRE(w);
    CHECK(w->order() == 6);
    CHECK_FALSE((Cyclotomic::zeta(3) + Cyclotomic(1) + Cyclotomic(1)).as_root_of_unity());
    CHECK_FALSE(Cyclotomic(Rational(1, 2)).is_algebraic_integer());
    CHECK((Cyclotomic::zeta(5) + Cyclotomic::zeta(5, 4)).is_real());
    CHECK_FALSE(Cyclotomic::zeta(5).is_real());

    std::mt19937_64 rng(support::seed(11));
    for (int trial = 0; trial < 40; ++trial) {
      const std::int64_t n = kOrders[trial % kOrders.size()];
      const Cyclotomic x = oracle::random_element(rng, n, 4, true), y = oracle::random_element(rng, n, 4, true);
      CHECK((x + y).is_algebraic_integer());
      CHECK((x * y).is_algebraic_integer());
      CHECK(x.is_real() == (x == galois_apply(x, -1)));
    }
  }

  TEST_CASE("norm and trace") {
    std::mt19937_64 rng(support::seed(17));
    for (int trial = 0; trial < 30; ++trial) {
      const std::int64_t n = kOrders[1 + trial % (kOrders.size() - 1)];
      const Cyclotomic x = oracle::random_element(rng, n);
      oracle::cplx prod = 1, sum = 0;
      for (std::int64_t k : nt::units(x.order())) {
        prod *= oracle::eval(x, k);
        sum += oracle::eval(x, k);
      }
      CHECK(std::abs(x.norm().get_d() - prod.real()) < 1e-6 * (1 + std::abs(prod.real())));
      CHECK(std::abs(x.trace().get_d() - sum.real()) < 1e-9);
    }
  }

  TEST_CASE("complex_eval") {
    const ComplexValue i = complex_eval(Cyclotomic::zeta(4), 10);
    CHECK(std::abs(i.real()) < 1e-10);
    CHECK(std::abs(i.imag() - 1) < 1e-10);
    const ComplexValue r2 = complex_eval(Cyclotomic::zeta(8) + Cyclotomic::zeta(8, -1), 10);
    CHECK(std::abs(r2.real() - std::sqrt(2.0)) < 1e-10);
    const Cyclotomic ratio = sin_pi(3, 11) / sin_pi(1, 11);
    CHECK(std::abs(complex_eval(ratio, 15).real() - std::sin(3 * std::numbers::pi / 11) / std::sin(std::numbers::pi / 11)) < 1e-12);
    CHECK(sin_pi(1, 6) == Cyclotomic(Rational(1, 2)));
    CHECK_THROWS_AS(complex_eval(Cyclotomic(1), kMaxEvalDigits + 1), Error);
  }

  TEST_CASE("sqrt_rational") {
    for (long q : {2L, 3L, 5L, 6L, 8L, 12L, -1L, -3L, -7L, 49L}) {
      const Cyclotomic r = sqrt_rational(Rational(q));
      CHECK(r * r == Cyclotomic(q));
      if (q > 0) CHECK(complex_eval(r, 20).real() > 0);
    }
    const Cyclotomic half = sqrt_rational(parse_rational("1/4"));
    CHECK(half == Cyclotomic(parse_rational("1/2")));
    CHECK(sqrt_rational(Rational(6)).conductor() == 24);
    CHECK(sqrt_rational(Rational(8)).conductor() == 8);
    CHECK(sqrt_rational(Rational(5)).conductor() == 5);
  }

  TEST_CASE("rationals") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("123456789012345678901234567890") == Rational(Integer("123456789012345678901234567890")));
    CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_rational("x"); }) == ErrorKind::ParseError);
    CHECK(to_string(parse_rational("4/6")) == "2/3");
  }

  TEST_CASE("roots of unity") {
    const RootOfUnity w(3, 12);
    CHECK(w.order() == 4);
    CHECK(w.numerator() == 1);
    CHECK(w.pow(4) == RootOfUnity());
    CHECK(w * w.inverse() == RootOfUnity());
    CHECK(w.sqrt().pow(2) == w);
    CHECK(w.exponent_over(8) == 2);
    CHECK(Cyclotomic::from_root(w) == Cyclotomic::zeta(4));
  }

  TEST_CASE("order cap") {
    const std::int64_t saved = order_cap();
    set_order_cap(100);
    CHECK(kind_of([] { Cyclotomic::zeta(211); }) == ErrorKind::OrderTooLarge);
    set_order_cap(saved);
    CHECK(Cyclotomic::zeta(211).order() == 211);
  }

  TEST_CASE("concurrent use agrees with sequential use") {
    std::vector<std::int64_t> orders{33, 35, 39, 44, 45, 51, 52, 55};
    std::vector<Cyclotomic> seq, par(orders.size());
    for (std::int64_t n : orders) seq.push_back((Cyclotomic::zeta(n) + Cyclotomic(2)).pow(5).inv());
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < orders.size(); ++i)
      threads.emplace_back([&, i] { par[i] = (Cyclotomic::zeta(orders[i]) + Cyclotomic(2)).pow(5).inv(); });
    for (auto& t : threads) t.join();
    CHECK(seq == par);
  }
}
