#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "skewminor/scalar.hpp"
#include "skewminor/word.hpp"

namespace skewminor {

/// Strictly increasing sequence of 1-based indices (a row or column set).
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> indices);
  /// Sorts; throws std::invalid_argument on duplicates or indices < 1.
  static IndexSet from(std::vector<int> indices);

  [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
  [[nodiscard]] bool empty() const noexcept { return indices_.empty(); }
  [[nodiscard]] int operator[](std::size_t i) const { return indices_[i]; }
  [[nodiscard]] auto begin() const noexcept { return indices_.begin(); }
  [[nodiscard]] auto end() const noexcept { return indices_.end(); }
  [[nodiscard]] const std::vector<int>& indices() const noexcept {
    return indices_;
  }
  [[nodiscard]] bool contains(int i) const;
  [[nodiscard]] int max() const { return indices_.empty() ? 0 : indices_.back(); }

  /// The increasing word r1...rm.
  [[nodiscard]] Word to_word() const { return Word(indices_); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> indices_;
};

std::ostream& operator<<(std::ostream& os, const IndexSet& s);

/// {2r - 1 : r in R}
[[nodiscard]] IndexSet odd_lift(const IndexSet& rows);
/// {2s : s in S}
[[nodiscard]] IndexSet even_lift(const IndexSet& cols);

/// Dense row-major matrix over one ring. Positions are 0-based.
class GeneralMatrix {
 public:
  GeneralMatrix(std::size_t rows, std::size_t cols, const Ring& ring);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] const Ring& ring() const noexcept { return ring_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  [[nodiscard]] const Scalar& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  /// Throws RingMismatch if `value` is not from this matrix's ring.
  void set(std::size_t r, std::size_t c, Scalar value);

  /// Builds from nested rows of equal length; the ring is taken from the
  /// first entry (integers if empty).
  static GeneralMatrix from_rows(
      const std::vector<std::vector<Scalar>>& rows);

  friend bool operator==(const GeneralMatrix&, const GeneralMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Ring ring_;
  std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const GeneralMatrix& m);

/// n x n skew-symmetric matrix with zero diagonal. Only the strict upper
/// triangle is stored, so skew symmetry and the zero diagonal hold by
/// construction. Immutable once built; use SkewMatrix::Builder.
class SkewMatrix {
 public:
  class Builder {
   public:
    Builder(std::size_t n, const Ring& ring);

    /// Sets t_ij (and thereby t_ji = -t_ij). Requires i != j, both in [1, n].
    Builder& set(int i, int j, Scalar value);
    Builder& set(int i, int j, long value) {
      return set(i, j, Scalar::from_int(ring_, value));
    }
    [[nodiscard]] SkewMatrix build() &&;
    [[nodiscard]] SkewMatrix build() const&;

   private:
    std::size_t n_;
    Ring ring_;
    std::vector<Scalar> upper_;
  };

  /// The 0 x 0 matrix over the integers.
  SkewMatrix() : SkewMatrix(0, Ring::integers()) {}
  /// Zero matrix.
  SkewMatrix(std::size_t n, const Ring& ring);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] const Ring& ring() const noexcept { return ring_; }

  /// t_ij with 1-based indices; 0 on the diagonal, -t_ji below it.
  /// Throws std::out_of_range for indices outside [1, n].
  [[nodiscard]] Scalar entry(int i, int j) const;

  /// Stored t_ij for 1 <= i < j <= n, without range checks.
  [[nodiscard]] const Scalar& upper(int i, int j) const {
    return upper_[offset(i, j)];
  }

  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

 private:
  friend class Builder;
  [[nodiscard]] std::size_t offset(int i, int j) const {
    // Row-major packing of the strict upper triangle, 1-based i < j.
    const auto a = static_cast<std::size_t>(i - 1);
    const auto b = static_cast<std::size_t>(j - 1);
    return a * n_ - a * (a + 1) / 2 + (b - a - 1);
  }
  void check_index(int i) const;

  std::size_t n_;
  Ring ring_;
  std::vector<Scalar> upper_;
};

/// T[R;S]: rows indexed by R, columns by S.
[[nodiscard]] GeneralMatrix submatrix(const SkewMatrix& t, const IndexSet& rows,
                                      const IndexSet& cols);

/// The 2n x 2n matrix T' with T'(a, b) = T(ceil(a/2), ceil(b/2)) for a != b.
[[nodiscard]] SkewMatrix doubled(const SkewMatrix& t);

}  // namespace skewminor
