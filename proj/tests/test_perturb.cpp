#include "bchresum/perturb.hpp"

#include <cmath>
#include <random>

#include "bchresum/hyper.hpp"
#include "doctest.h"

using bch::DenseMatrix;

TEST_CASE("zero perturbation leaves only the eigenvalue") {
  auto r = bch::corrections({0.2, 1.1, 2.4}, DenseMatrix(3), 1);
  CHECK(r.corrections[0] == 1.1);
  CHECK(r.corrections[1] == 0.0);
  CHECK(r.corrections[2] == 0.0);
  CHECK(r.corrections[3] == 0.0);
}

TEST_CASE("first order is the diagonal element") {
  DenseMatrix b(2);
  b.at(0, 0) = 0.3;
  b.at(1, 1) = -0.8;
  b.at(0, 1) = b.at(1, 0) = 0.5;
  auto r = bch::corrections({0.0, 2.0}, b, 0);
  CHECK(r.corrections[1] == doctest::Approx(0.3));
}

TEST_CASE("two-level system closed forms") {
  // a = diag(1, -1), so the level gap is 2
  double bb = 0.37, d = 2.0;
  DenseMatrix b(2);
  b.at(0, 1) = b.at(1, 0) = bb;
  b.at(0, 0) = 0.15;
  b.at(1, 1) = -0.6;
  auto r = bch::corrections({1.0, -1.0}, b, 0);
  double h1 = bch::coth_x(d);
  CHECK(r.corrections[2] == doctest::Approx(h1 * bb * bb).epsilon(1e-14));
  // c3 = h2(d,d) B01 B10 (B11 - B00)
  double h2 = h1 * h1 - 1.0 / 3.0;
  CHECK(r.corrections[3] ==
        doctest::Approx(h2 * bb * bb * (-0.6 - 0.15)).epsilon(1e-13));
}

TEST_CASE("diagonal perturbation is exact at first order") {
  DenseMatrix a = DenseMatrix::diagonal({0.0, 1.0, 2.5});
  DenseMatrix b = DenseMatrix::diagonal({0.4, -0.2, 0.1});
  auto r = bch::epsilon_sweep(a, b, 2, {0.1, 0.05});
  CHECK(r.corrections[2] == doctest::Approx(0.0));
  CHECK(r.corrections[3] == doctest::Approx(0.0));
  for (const auto& p : r.epsilon_sweep) CHECK(std::abs(p.residual) < 1e-12);
}

TEST_CASE("sweep residual shrinks at fourth order") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix a(4), b(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      a.at(i, j) = a.at(j, i) = 0.3 * u(rng);
      b.at(i, j) = b.at(j, i) = 0.5 * u(rng);
    }
  for (std::size_t i = 0; i < 4; ++i) a.at(i, i) += 1.5 * static_cast<double>(i);
  for (std::size_t n = 0; n < 4; ++n) {
    auto r = bch::epsilon_sweep(a, b, n, {0.1, 0.05, 0.025});
    REQUIRE(r.epsilon_sweep.size() == 3);
    double slope = std::log(r.epsilon_sweep.front().residual /
                            r.epsilon_sweep.back().residual) /
                   std::log(0.1 / 0.025);
    CHECK(slope >= 3.5);
  }
}

TEST_CASE("degenerate input is rejected") {
  DenseMatrix a = DenseMatrix::diagonal({1.0, 1.0, 2.0});
  DenseMatrix b(3);
  b.at(0, 1) = b.at(1, 0) = 0.2;
  CHECK_THROWS_AS(bch::epsilon_sweep(a, b, 0, {0.1}),
                  bch::DegenerateSpectrum);
}
