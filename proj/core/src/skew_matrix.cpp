#include "skewminor/skew_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace skewminor {

IndexSet::IndexSet(std::initializer_list<int> indices)
    : IndexSet(from(std::vector<int>(indices))) {}

IndexSet IndexSet::from(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  if (auto dup = std::adjacent_find(indices.begin(), indices.end());
      dup != indices.end()) {
    throw std::invalid_argument("duplicate index " + std::to_string(*dup));
  }
  if (!indices.empty() && indices.front() < 1) {
    throw std::invalid_argument("indices are 1-based, got " +
                                std::to_string(indices.front()));
  }
  IndexSet out;
  out.indices_ = std::move(indices);
  return out;
}

bool IndexSet::contains(int i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::ostream& operator<<(std::ostream& os, const IndexSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os << '}';
}

IndexSet odd_lift(const IndexSet& rows) {
  std::vector<int> out;
  out.reserve(rows.size());
  for (int r : rows) out.push_back(2 * r - 1);
  return IndexSet::from(std::move(out));
}

IndexSet even_lift(const IndexSet& cols) {
  std::vector<int> out;
  out.reserve(cols.size());
  for (int s : cols) out.push_back(2 * s);
  return IndexSet::from(std::move(out));
}

GeneralMatrix::GeneralMatrix(std::size_t rows, std::size_t cols,
                             const Ring& ring)
    : rows_(rows), cols_(cols), ring_(ring),
      entries_(rows * cols, Scalar::zero(ring)) {}

void GeneralMatrix::set(std::size_t r, std::size_t c, Scalar value) {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("GeneralMatrix position out of range");
  }
  if (value.ring() != ring_) {
    throw RingMismatch("entry from " + value.ring().to_string() +
                       " in a matrix over " + ring_.to_string());
  }
  entries_[r * cols_ + c] = std::move(value);
}

GeneralMatrix GeneralMatrix::from_rows(
    const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows ? rows.front().size() : 0;
  const Ring ring = (nrows && ncols) ? rows.front().front().ring()
                                     : Ring::integers();
  GeneralMatrix m(nrows, ncols, ring);
  for (std::size_t r = 0; r < nrows; ++r) {
    if (rows[r].size() != ncols) {
      throw std::invalid_argument("ragged rows in GeneralMatrix::from_rows");
    }
    for (std::size_t c = 0; c < ncols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const GeneralMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << (c ? ", " : "") << m.at(r, c);
    }
    os << ']';
  }
  return os << ']';
}

SkewMatrix::SkewMatrix(std::size_t n, const Ring& ring)
    : n_(n), ring_(ring), upper_(n * (n ? n - 1 : 0) / 2, Scalar::zero(ring)) {}

void SkewMatrix::check_index(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > n_) {
    throw std::out_of_range("index " + std::to_string(i) +
                            " outside [1, " + std::to_string(n_) + "]");
  }
}

Scalar SkewMatrix::entry(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) return Scalar::zero(ring_);
  if (i < j) return upper_[offset(i, j)];
  return -upper_[offset(j, i)];
}

SkewMatrix::Builder::Builder(std::size_t n, const Ring& ring)
    : n_(n), ring_(ring), upper_(n * (n ? n - 1 : 0) / 2, Scalar::zero(ring)) {}

SkewMatrix::Builder& SkewMatrix::Builder::set(int i, int j, Scalar value) {
  const auto in_range = [&](int k) {
    return k >= 1 && static_cast<std::size_t>(k) <= n_;
  };
  if (!in_range(i) || !in_range(j)) {
    throw std::out_of_range("entry (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside a " +
                            std::to_string(n_) + "x" + std::to_string(n_) +
                            " matrix");
  }
  if (i == j) {
    throw std::invalid_argument("diagonal entries of a skew matrix are zero");
  }
  if (value.ring() != ring_) {
    throw RingMismatch("entry from " + value.ring().to_string() +
                       " in a matrix over " + ring_.to_string());
  }
  if (i > j) {
    std::swap(i, j);
    value = -value;
  }
  const auto a = static_cast<std::size_t>(i - 1);
  const auto b = static_cast<std::size_t>(j - 1);
  upper_[a * n_ - a * (a + 1) / 2 + (b - a - 1)] = std::move(value);
  return *this;
}

SkewMatrix SkewMatrix::Builder::build() && {
  SkewMatrix m(0, ring_);
  m.n_ = n_;
  m.upper_ = std::move(upper_);
  return m;
}

SkewMatrix SkewMatrix::Builder::build() const& {
  SkewMatrix m(0, ring_);
  m.n_ = n_;
  m.upper_ = upper_;
  return m;
}

GeneralMatrix submatrix(const SkewMatrix& t, const IndexSet& rows,
                        const IndexSet& cols) {
  GeneralMatrix out(rows.size(), cols.size(), t.ring());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) {
      out.set(a, b, t.entry(rows[a], cols[b]));
    }
  }
  // entry() range-checks, but an empty partner set would skip it.
  for (int r : rows) (void)t.entry(r, r);
  for (int c : cols) (void)t.entry(c, c);
  return out;
}

SkewMatrix doubled(const SkewMatrix& t) {
  const auto n2 = static_cast<int>(2 * t.size());
  SkewMatrix::Builder b(2 * t.size(), t.ring());
  for (int a = 1; a <= n2; ++a) {
    for (int c = a + 1; c <= n2; ++c) {
      const int i = (a + 1) / 2;
      const int j = (c + 1) / 2;
      if (i != j) b.set(a, c, t.upper(i, j));
    }
  }
  return std::move(b).build();
}

}  // namespace skewminor
