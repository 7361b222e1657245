#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bch {

/// A permutation of positions 1..N with an integer weight.  Weights are
/// +-1 for the generators; canonical sums may accumulate larger values.
/// map[i] is the (1-based) image of position i+1.
struct SignedPerm {
  int sign = 1;
  std::vector<int> map;

  int arity() const { return static_cast<int>(map.size()); }

  // Applies the index map to a window of the first k slots of an
  // N-value tuple: out[i] = values[map[i]-1].  k < N uses the
  // leave-out-the-final-ones convention.
  std::vector<double> apply_window(std::span<const double> values,
                                   int k) const;

  bool operator==(const SignedPerm& o) const = default;
};

SignedPerm perm_identity(int n);

// R_N: position m -> N+1-m.
SignedPerm reversal(int n);

// The cycle (m m+1 ... n): m->m+1, ..., n-1->n, n->m.
SignedPerm cycle(int m, int n);

// (a o b)(m) = a(b(m)); the shorter perm is promoted by fixing
// trailing positions.
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);

/// A formal integer combination of equal-arity permutations, kept in
/// canonical form: terms sorted by one-line notation, equal maps merged,
/// zero weights dropped.
struct PermSum {
  std::vector<SignedPerm> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  auto begin() const { return terms.begin(); }
  auto end() const { return terms.end(); }

  void canonicalize();
};

// P_N = prod_{n=1..N-1} (1 - (-1)^{n+1} R_{n+1}), expanded; 2^{N-1} terms.
PermSum expand_P(int n);

// Marching operator M_{N,m}: the binomial(N,m) order-preserving
// interleavings of the first m and last N-m positions.
PermSum marching(int n, int m);

// Distributed product in canonical form.  Arities are promoted to the
// larger one only when promote is set; a mismatch otherwise throws.
PermSum algebra_mul(const PermSum& a, const PermSum& b, bool promote = true);

// S_{N,r} recursion: S_{N,r} = S_{N-1,r} + R_N R_{N-1} S_{N-1,r-1},
// seeded by S_{1,1} = 1 with vanishing boundaries.
PermSum s_perms(int n, int r);

}  // namespace bch
