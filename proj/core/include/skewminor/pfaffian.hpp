#pragma once

#include <cstddef>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "skewminor/scalar.hpp"
#include "skewminor/skew_matrix.hpp"
#include "skewminor/word.hpp"

namespace skewminor {

/// Memo of Pfaffian values keyed by sorted repeat-free words. A cache belongs
/// to exactly one matrix; reusing it with another matrix gives wrong answers.
/// Concurrent reads are safe, writes need external serialization.
class PfCache {
 public:
  [[nodiscard]] const Scalar* find(const std::vector<Letter>& sorted) const;
  void store(std::vector<Letter> sorted, Scalar value);

  [[nodiscard]] std::size_t size() const noexcept { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<Letter>& key) const noexcept;
  };
  std::unordered_map<std::vector<Letter>, Scalar, KeyHash> memo_;
};

/// P[alpha] by summing over every pair partition of the word, with the sign
/// of the permutation that lists the pairs in order. Conventions: the empty
/// word gives 1, odd length gives 0, a repeated letter gives 0. Throws
/// std::out_of_range for letters outside [1, n].
[[nodiscard]] Scalar pf_matchsum(const SkewMatrix& t, const Word& alpha);

/// Same matching sum but without the repeated-letter shortcut: pairs of equal
/// letters contribute t_ii = 0 and the remaining terms have to cancel.
[[nodiscard]] Scalar pf_matchsum_unchecked(const SkewMatrix& t,
                                           const Word& alpha);

/// P[alpha] by the expansion along the smallest letter a,
///   P[a...] = sum_x sgn(alpha; a x (alpha \ ax)) P[ax] P[alpha \ ax],
/// memoized on sorted words. Unsorted words are answered as
/// sign(alpha, sort(alpha)) * P[sort(alpha)].
[[nodiscard]] Scalar pf_expand(const SkewMatrix& t, const Word& alpha,
                               PfCache& cache);
[[nodiscard]] Scalar pf_expand(const SkewMatrix& t, const Word& alpha);

/// Pf(T[R;R]) by fraction-free skew elimination, O(m^3) ring operations.
/// Each step divides by the previous pivot, which is exact over the integers.
/// Throws UnsupportedRing for Z/m with m composite.
[[nodiscard]] Scalar pf_eliminate(const SkewMatrix& t, const IndexSet& rows);

enum class PfStrategy { expand, matchsum, eliminate };

[[nodiscard]] std::string_view to_string(PfStrategy s);
/// "expand", "matchsum" or "eliminate"; throws std::invalid_argument.
[[nodiscard]] PfStrategy parse_strategy(std::string_view text);

/// P on an arbitrary word with the chosen evaluator. `cache` is used by the
/// expand strategy only and may be null.
[[nodiscard]] Scalar pf_word(const SkewMatrix& t, const Word& alpha,
                             PfStrategy strategy, PfCache* cache = nullptr);

/// Pf(T[R;R]) = P[r1...rm].
[[nodiscard]] Scalar pfaffian(const SkewMatrix& t, const IndexSet& rows,
                              PfStrategy strategy = PfStrategy::expand);

}  // namespace skewminor
