#include "bchresum/perm.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"

using bch::PermSum;
using bch::SignedPerm;

namespace {

long binom(int n, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("reversal and cycle one-line forms") {
  CHECK(bch::reversal(4).map == std::vector<int>{4, 3, 2, 1});
  CHECK(bch::cycle(1, 3).map == std::vector<int>{2, 3, 1});
  CHECK(bch::cycle(2, 4).map == std::vector<int>{1, 3, 4, 2});
}

TEST_CASE("windowed application leaves out trailing positions") {
  std::vector<double> x = {1, 2, 3, 4};
  auto w = bch::reversal(4).apply_window(x, 3);
  CHECK(w == std::vector<double>{4, 3, 2});
}

TEST_CASE("P_N has 2^{N-1} terms") {
  for (int n = 1; n <= 10; ++n)
    CHECK(bch::expand_P(n).size() == (std::size_t{1} << (n - 1)));
}

TEST_CASE("P_3 is 123 - 213 - 231 + 321") {
  PermSum p = bch::expand_P(3);
  REQUIRE(p.size() == 4);
  CHECK(p.terms[0].map == std::vector<int>{1, 2, 3});
  CHECK(p.terms[0].sign == 1);
  CHECK(p.terms[1].map == std::vector<int>{2, 1, 3});
  CHECK(p.terms[1].sign == -1);
  CHECK(p.terms[2].map == std::vector<int>{2, 3, 1});
  CHECK(p.terms[2].sign == -1);
  CHECK(p.terms[3].map == std::vector<int>{3, 2, 1});
  CHECK(p.terms[3].sign == 1);
}

TEST_CASE("R_N P_N = (-1)^{N+1} P_N") {
  for (int n = 1; n <= 10; ++n) {
    PermSum r;
    r.terms.push_back(bch::reversal(n));
    PermSum lhs = bch::algebra_mul(r, bch::expand_P(n));
    PermSum rhs = bch::expand_P(n);
    int sgn = (n % 2 == 0) ? -1 : 1;
    for (auto& t : rhs.terms) t.sign *= sgn;
    rhs.canonicalize();
    CHECK(lhs.terms == rhs.terms);
  }
}

TEST_CASE("marching terms are the order-preserving interleavings") {
  for (int n = 2; n <= 7; ++n)
    for (int m = 1; m <= n - 1; ++m) {
      PermSum mm = bch::marching(n, m);
      CHECK(mm.size() == static_cast<std::size_t>(binom(n, m)));
      for (const auto& t : mm) {
        CHECK(t.sign == 1);
        // positions of 1..m and of m+1..n appear in increasing order
        std::vector<int> head, tail;
        for (int v : t.map) (v <= m ? head : tail).push_back(v);
        CHECK(std::is_sorted(head.begin(), head.end()));
        CHECK(std::is_sorted(tail.begin(), tail.end()));
      }
    }
}

TEST_CASE("marching annihilates P_N") {
  for (int n = 2; n <= 8; ++n)
    for (int m = 1; m <= n - 1; ++m)
      CHECK(bch::algebra_mul(bch::marching(n, m), bch::expand_P(n)).is_zero());
}

TEST_CASE("alternating sum of S_{N,r} reproduces P_N") {
  for (int n = 1; n <= 8; ++n) {
    PermSum acc;
    for (int r = 1; r <= n; ++r) {
      PermSum s = bch::s_perms(n, r);
      int sgn = (r % 2 == 1) ? 1 : -1;
      for (auto t : s) {
        t.sign *= sgn;
        acc.terms.push_back(t);
      }
    }
    acc.canonicalize();
    CHECK(acc.terms == bch::expand_P(n).terms);
  }
}

TEST_CASE("composition promotes the shorter operand") {
  SignedPerm a = bch::reversal(2);   // (2 1)
  SignedPerm b = bch::cycle(1, 3);   // (2 3 1)
  SignedPerm ab = bch::compose(a, b);
  // a promoted to (2 1 3); (a o b)(m) = a(b(m)) -> (1 3 2)
  CHECK(ab.map == std::vector<int>{1, 3, 2});
}

TEST_CASE("canonicalize merges and drops zero weights") {
  PermSum p;
  p.terms.push_back(bch::perm_identity(3));
  p.terms.push_back(bch::perm_identity(3));
  SignedPerm neg = bch::reversal(3);
  neg.sign = -1;
  p.terms.push_back(neg);
  neg.sign = 1;
  p.terms.push_back(neg);
  p.canonicalize();
  REQUIRE(p.size() == 1);
  CHECK(p.terms[0].sign == 2);
  CHECK(p.terms[0].map == std::vector<int>{1, 2, 3});
}
