#include "bchresum/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace bch {

std::vector<double> SignedPerm::apply_window(std::span<const double> values,
                                             int k) const {
  std::vector<double> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out[i] = values[map[i] - 1];
  return out;
}

SignedPerm perm_identity(int n) {
  SignedPerm p;
  p.map.resize(n);
  for (int i = 0; i < n; ++i) p.map[i] = i + 1;
  return p;
}

SignedPerm reversal(int n) {
  SignedPerm p;
  p.map.resize(n);
  for (int i = 0; i < n; ++i) p.map[i] = n - i;
  return p;
}

SignedPerm cycle(int m, int n) {
  SignedPerm p = perm_identity(n);
  for (int i = m; i < n; ++i) p.map[i - 1] = i + 1;
  p.map[n - 1] = m;
  return p;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  int n = std::max(a.arity(), b.arity());
  SignedPerm out;
  out.sign = a.sign * b.sign;
  out.map.resize(n);
  auto at = [n](const SignedPerm& p, int m) {
    return m <= p.arity() ? p.map[m - 1] : m;
  };
  for (int i = 1; i <= n; ++i) out.map[i - 1] = at(a, at(b, i));
  return out;
}

void PermSum::canonicalize() {
  std::sort(terms.begin(), terms.end(),
            [](const SignedPerm& x, const SignedPerm& y) {
              return x.map < y.map;
            });
  std::vector<SignedPerm> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().map == t.map) {
      merged.back().sign += t.sign;
      if (merged.back().sign == 0) merged.pop_back();
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms = std::move(merged);
}

PermSum expand_P(int n) {
  if (n < 1) throw std::invalid_argument("expand_P: N >= 1 required");
  PermSum sum;
  sum.terms.push_back(perm_identity(1));
  for (int k = 1; k < n; ++k) {
    // Left-multiply by (1 - (-1)^{k+1} R_{k+1}).
    int sgn = (k % 2 == 0) ? 1 : -1;
    SignedPerm r = reversal(k + 1);
    std::vector<SignedPerm> next;
    next.reserve(sum.terms.size() * 2);
    for (const auto& t : sum.terms) {
      SignedPerm id_part = t;
      id_part.map.push_back(k + 1);
      next.push_back(std::move(id_part));
      SignedPerm rev_part = compose(r, t);
      rev_part.sign *= sgn;
      next.push_back(std::move(rev_part));
    }
    sum.terms = std::move(next);
  }
  sum.canonicalize();
  return sum;
}

PermSum marching(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("marching: 0 <= m <= N");
  PermSum sum;
  if (m == 0 || m == n) {
    sum.terms.push_back(perm_identity(n));
    return sum;
  }
  // M_{N,m} = M_{N-1,m} + (m m+1 ... N) M_{N-1,m-1}
  PermSum a = marching(n - 1, m);
  PermSum b = marching(n - 1, m - 1);
  SignedPerm c = cycle(m, n);
  for (auto& t : a.terms) {
    t.map.push_back(n);
    sum.terms.push_back(std::move(t));
  }
  for (const auto& t : b.terms) sum.terms.push_back(compose(c, t));
  sum.canonicalize();
  return sum;
}

PermSum algebra_mul(const PermSum& a, const PermSum& b, bool promote) {
  if (!promote && !a.terms.empty() && !b.terms.empty() &&
      a.terms.front().arity() != b.terms.front().arity())
    throw std::invalid_argument("algebra_mul: arity mismatch");
  PermSum out;
  out.terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& x : a.terms)
    for (const auto& y : b.terms) out.terms.push_back(compose(x, y));
  out.canonicalize();
  return out;
}

PermSum s_perms(int n, int r) {
  if (r < 1 || r > n) throw std::invalid_argument("s_perms: 1 <= r <= N");
  PermSum sum;
  if (n == 1) {
    sum.terms.push_back(perm_identity(1));
    return sum;
  }
  if (r <= n - 1) sum = s_perms(n - 1, r);
  if (r - 1 >= 1) {
    PermSum lower = s_perms(n - 1, r - 1);
    SignedPerm rr = compose(reversal(n), reversal(n - 1));
    for (const auto& t : lower.terms) sum.terms.push_back(compose(rr, t));
  }
  for (auto& t : sum.terms)
    if (t.arity() < n) t = compose(perm_identity(n), t);
  sum.canonicalize();
  return sum;
}

}  // namespace bch
