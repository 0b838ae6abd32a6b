#pragma once

// Brute-force reference implementations for tests. Everything here works from
// the textbook definitions (full permutation enumeration, quadratic inversion
// counts) and shares no code with the library's evaluators.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "skewminor/scalar.hpp"
#include "skewminor/skew_matrix.hpp"
#include "skewminor/word.hpp"

namespace skewminor::testing {

inline SkewMatrix random_skew(std::size_t n, const Ring& ring,
                              std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  SkewMatrix::Builder b(n, ring);
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n); ++j) b.set(i, j, dist(rng));
  }
  return std::move(b).build();
}

/// The 3x3 example matrix with t12 = a, t13 = b, t23 = c.
inline SkewMatrix paper_example(long a, long b, long c,
                                const Ring& ring = Ring::integers()) {
  return SkewMatrix::Builder(3, ring).set(1, 2, a).set(1, 3, b).set(2, 3, c).build();
}

inline int inversion_parity(const std::vector<std::size_t>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inv;
    }
  }
  return inv % 2 == 0 ? 1 : -1;
}

/// sgn by linear search and quadratic inversion count.
inline int brute_sign(const Word& alpha, const Word& beta) {
  if (alpha.size() != beta.size() || alpha.has_repeats() || beta.has_repeats())
    return 0;
  std::vector<std::size_t> perm;
  for (Letter b : beta) {
    auto it = std::find(alpha.begin(), alpha.end(), b);
    if (it == alpha.end()) return 0;
    perm.push_back(static_cast<std::size_t>(it - alpha.begin()));
  }
  return inversion_parity(perm);
}

/// Leibniz formula: sum over all n! permutations.
inline Scalar leibniz_det(const GeneralMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Scalar total = Scalar::zero(m.ring());
  do {
    Scalar term = Scalar::from_int(m.ring(), inversion_parity(perm));
    for (std::size_t r = 0; r < n; ++r) term *= m.at(r, perm[r]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// P[alpha] straight from the definition: every ordering j1 j2 ... j2k of the
/// word's positions with j1 < j2, j3 < j4, ... and j1 < j3 < ... is one pair
/// partition, weighted by the sign of that ordering.
inline Scalar brute_pf(const SkewMatrix& t, const Word& alpha) {
  const Ring& ring = t.ring();
  const std::size_t len = alpha.size();
  if (len == 0) return Scalar::one(ring);
  if (len % 2 == 1 || alpha.has_repeats()) return Scalar::zero(ring);
  std::vector<std::size_t> perm(len);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Scalar total = Scalar::zero(ring);
  do {
    bool canonical = true;
    for (std::size_t p = 0; p < len && canonical; p += 2) {
      if (perm[p] > perm[p + 1]) canonical = false;
      if (p >= 2 && perm[p - 2] > perm[p]) canonical = false;
    }
    if (!canonical) continue;
    Scalar term = Scalar::from_int(ring, inversion_parity(perm));
    for (std::size_t p = 0; p < len; p += 2) {
      term *= t.entry(alpha[perm[p]], alpha[perm[p + 1]]);
    }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// All k-subsets of {1..n} as index sets, by bitmask.
inline std::vector<IndexSet> subsets_of(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<int> v;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) v.push_back(static_cast<int>(i + 1));
    }
    out.push_back(IndexSet::from(v));
  }
  return out;
}

}  // namespace skewminor::testing
