#include "bchresum/hyper.hpp"

#include <cmath>
#include <random>

#include "bchresum/series.hpp"
#include "doctest.h"

using bch::ArgTuple;

TEST_CASE("coth against the exponential form") {
  for (double x : {-3.0, -0.7, 0.02, 0.5, 1.0, 4.0, 25.0}) {
    double ref = (std::exp(2 * x) + 1) / (std::exp(2 * x) - 1);
    CHECK(bch::coth_x(x) == doctest::Approx(ref).epsilon(1e-14));
  }
}

TEST_CASE("coth refuses near-zero arguments") {
  CHECK_THROWS_AS(bch::coth_x(0.0), bch::NearSingular);
  CHECK_THROWS_AS(bch::coth_x(-0.5e-8), bch::NearSingular);
  CHECK_NOTHROW(bch::coth_x(2e-8));
}

TEST_CASE("g1 is even, capped, and smooth across the Taylor switch") {
  CHECK(bch::g1(0.0) == 1.0);
  CHECK(bch::g1(0.3) == doctest::Approx(0.3 / std::sinh(0.3)).epsilon(1e-15));
  CHECK(bch::g1(-0.3) == bch::g1(0.3));
  double x = 0.99e-4;  // Taylor branch vs the exact formula, same point
  CHECK(std::abs(bch::g1(x) - x / std::sinh(x)) < 1e-15);
  CHECK_THROWS_AS(bch::g1(400.0), bch::Overflow);
}

TEST_CASE("coth angle addition") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    double a = u(rng), b = u(rng);
    if (std::abs(a) < 1e-2 || std::abs(b) < 1e-2 || std::abs(a + b) < 1e-2)
      continue;
    double lhs = bch::coth_x(a) * bch::coth_x(b) + 1;
    double rhs = (bch::coth_x(a) + bch::coth_x(b)) * bch::coth_x(a + b);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }
}

TEST_CASE("h_2 and h_3 closed forms") {
  auto c = [](double x) { return bch::coth_x(x); };
  std::vector<double> x = {0.7, -1.3};
  CHECK(bch::h_eval(x) ==
        doctest::Approx(c(0.7) * c(-1.3) - 1.0 / 3.0).epsilon(1e-14));
  std::vector<double> y = {0.4, 1.9, -0.8};
  CHECK(bch::h_eval(y) ==
        doctest::Approx(c(0.4) * c(1.9) * c(-0.8) -
                        (c(0.4) + c(-0.8)) / 3.0)
            .epsilon(1e-13));
}

TEST_CASE("h is invariant under argument reversal") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (std::size_t n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> x(n);
      for (auto& v : x) {
        do v = u(rng);
        while (std::abs(v) < 0.05);
      }
      std::vector<double> r(x.rbegin(), x.rend());
      double a = bch::h_eval(x), b = bch::h_eval(r);
      CHECK(a == doctest::Approx(b).epsilon(1e-11));
    }
}

TEST_CASE("edge identities in both directions") {
  const auto& td = bch::t_doubles(10);
  const auto& Td = bch::T_doubles(10);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (std::size_t m = 1; m <= 8; ++m)
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> inc(m);
      ArgTuple t{inc};
      do {
        for (auto& v : inc) v = u(rng);
        t = ArgTuple{inc};
      } while (!t.regular(1e-2));
      // h_m = sum_r t_r u_{m-r}
      double lhs = bch::h_eval(t.prefix);
      double rhs = 0;
      for (std::size_t r = 0; r <= m; ++r)
        rhs += td[r] * bch::u_eval(t, m - r);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
      // u_m = sum_p T_p h_{m-p}
      double ul = bch::u_eval(t, m);
      double ur = 0;
      for (std::size_t p = 0; p <= m; ++p)
        ur += Td[p] *
              bch::h_eval(std::span<const double>(t.prefix).first(m - p));
      CHECK(ul == doctest::Approx(ur).epsilon(1e-10));
    }
}

TEST_CASE("f is h on prefix sums and refuses singular tuples") {
  ArgTuple t{{0.5, -0.2, 1.1}};
  std::vector<double> pre = {0.5, 0.3, 1.4};
  CHECK(bch::f_eval(t) == doctest::Approx(bch::h_eval(pre)).epsilon(1e-15));
  CHECK(bch::bracket(t) == doctest::Approx(0.5 * bch::f_eval(t)));
  ArgTuple bad{{0.5, -0.5, 1.1}};
  CHECK_FALSE(bad.regular());
  CHECK_THROWS_AS(bch::f_eval(bad), bch::NearSingular);
  CHECK_THROWS_AS(bch::bracket(bad), bch::NearSingular);
}

TEST_CASE("u_0 is 1 and u_r splits into h_{r-1} * coth") {
  ArgTuple t{{0.5, -0.2, 1.1}};
  CHECK(bch::u_eval(t, 0) == 1.0);
  CHECK(bch::u_eval(t, 1) == doctest::Approx(bch::coth_x(0.5)));
  std::vector<double> pre1 = {0.5};
  CHECK(bch::u_eval(t, 2) ==
        doctest::Approx(bch::h_eval(pre1) * bch::coth_x(0.3)).epsilon(1e-14));
}

TEST_CASE("w2_inv symmetry and small-argument limit") {
  CHECK(bch::w2_inv(0.7, 0.3) == doctest::Approx(bch::w2_inv(0.3, 0.7)));
  CHECK(bch::w2_inv(0.7, 0.3) == doctest::Approx(bch::w2_inv(-0.3, -0.7)));
  // G1(x)G1(y)/G1(x-y) -> 1 as both arguments vanish
  CHECK(bch::w2_inv(1e-6, -1e-6) == doctest::Approx(1.0).epsilon(1e-9));
}
