#pragma once

#include <cstddef>
#include <string_view>

#include "skewminor/pfaffian.hpp"
#include "skewminor/scalar.hpp"
#include "skewminor/skew_matrix.hpp"

namespace skewminor {

enum class MinorPath { direct_brill, doubling, oracle };

[[nodiscard]] std::string_view to_string(MinorPath p);

/// A minor together with how it was obtained. For the Pfaffian paths,
/// terms_evaluated + terms_skipped_vanishing is the number of even-length
/// subwords of the row word, i.e. sum_k C(m, 2k).
struct MinorReport {
  Scalar value;
  MinorPath path = MinorPath::direct_brill;
  std::size_t terms_evaluated = 0;
  std::size_t terms_skipped_vanishing = 0;
};

struct BrillOptions {
  /// Skip subwords w of the row word that miss a letter of R ∩ S; their
  /// term vanishes because (rho \ w) sigma repeats a letter.
  bool skip_vanishing = true;
  PfStrategy strategy = PfStrategy::expand;
  /// Optional memo shared across calls. It must belong to the matrix the sum
  /// is evaluated on: T for brill_minor, doubled(T) for the doubling path.
  PfCache* cache = nullptr;
};

/// det(T[R;S]) as a signed sum of Pfaffian products,
///
///   (-1)^floor(m/2) sum_k (-1)^k sum_{|w| = 2k, w ⊆ rho}
///       sgn(rho; w (rho \ w)) P[w] P[(rho \ w) sigma],
///
/// with rho, sigma the increasing words of R and S. R and S may overlap.
/// Throws std::invalid_argument if |R| != |S| and std::out_of_range for
/// indices outside [1, n].
[[nodiscard]] MinorReport brill_minor(const SkewMatrix& t, const IndexSet& rows,
                                      const IndexSet& cols,
                                      const BrillOptions& options = {});

/// The same minor read off the doubled matrix: T[R;S] = T'[R';S'] with R'
/// odd and S' even, so the row and column words are always disjoint.
[[nodiscard]] MinorReport brill_minor_via_doubling(
    const SkewMatrix& t, const IndexSet& rows, const IndexSet& cols,
    const BrillOptions& options = {});

/// True iff P[(rho \ w) sigma] is exactly zero for every even-length w ⊆ rho
/// that misses a letter of R ∩ S. Evaluated with the unchecked matching sum,
/// so zero comes from cancellation rather than from the repeated-letter rule.
[[nodiscard]] bool vanishing_term_check(const SkewMatrix& t,
                                        const IndexSet& rows,
                                        const IndexSet& cols);

}  // namespace skewminor
