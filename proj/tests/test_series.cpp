#include "bchresum/series.hpp"

#include "doctest.h"

using bch::Rational;
using bch::RationalSeries;

TEST_CASE("tanh(z)/z coefficients through order 10") {
  RationalSeries t = bch::taylor_t(10);
  CHECK(t.coeffs[0] == 1);
  CHECK(t.coeffs[2] == Rational(-1, 3));
  CHECK(t.coeffs[4] == Rational(2, 15));
  CHECK(t.coeffs[6] == Rational(-17, 315));
  CHECK(t.coeffs[8] == Rational(62, 2835));
  CHECK(t.coeffs[10] == Rational(-1382, 155925));
  for (std::size_t k = 1; k <= 10; k += 2) CHECK(t.coeffs[k] == 0);
}

TEST_CASE("z/tanh(z) coefficients through order 10") {
  RationalSeries T = bch::taylor_T(10);
  CHECK(T.coeffs[0] == 1);
  CHECK(T.coeffs[2] == Rational(1, 3));
  CHECK(T.coeffs[4] == Rational(-1, 45));
  CHECK(T.coeffs[6] == Rational(2, 945));
  CHECK(T.coeffs[8] == Rational(-1, 4725));
  CHECK(T.coeffs[10] == Rational(2, 93555));
}

TEST_CASE("sinh cosh / z coefficients through order 8") {
  RationalSeries s = bch::taylor_s(8);
  CHECK(s.coeffs[0] == 1);
  CHECK(s.coeffs[2] == Rational(2, 3));
  CHECK(s.coeffs[4] == Rational(2, 15));
  CHECK(s.coeffs[6] == Rational(4, 315));
  CHECK(s.coeffs[8] == Rational(2, 2835));
}

TEST_CASE("T is the exact reciprocal of t") {
  RationalSeries prod = bch::convolve(bch::taylor_t(40), bch::taylor_T(40));
  CHECK(prod.coeffs[0] == 1);
  for (std::size_t k = 1; k <= 40; ++k) CHECK(prod.coeffs[k] == 0);
}

TEST_CASE("W = t*s matches the closed coefficient of (sinh z/z)^2") {
  // (sinh z/z)^2 = sum_k 2^{2k+1}/(2k+2)! z^{2k}
  RationalSeries w = bch::taylor_W(40);
  for (std::size_t k = 0; 2 * k <= 40; ++k) {
    Rational num = 1;
    for (std::size_t p = 0; p < 2 * k + 1; ++p) num *= 2;
    Rational fact = 1;
    for (std::size_t p = 2; p <= 2 * k + 2; ++p) fact *= p;
    CHECK(w.coeffs[2 * k] == num / fact);
    if (2 * k + 1 <= 40) CHECK(w.coeffs[2 * k + 1] == 0);
  }
}

TEST_CASE("s = T*W") {
  RationalSeries lhs = bch::taylor_s(40);
  RationalSeries rhs = bch::convolve(bch::taylor_T(40), bch::taylor_W(40));
  for (std::size_t k = 0; k <= 40; ++k) CHECK(lhs.coeffs[k] == rhs.coeffs[k]);
}

TEST_CASE("series_by_name rejects unknown names") {
  CHECK_THROWS_AS(bch::series_by_name("q", 4), std::invalid_argument);
}
