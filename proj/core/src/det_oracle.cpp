#include "skewminor/det_oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace skewminor {

namespace {

void require_square(const GeneralMatrix& m, const char* who) {
  if (!m.is_square()) {
    throw std::invalid_argument(std::string(who) + ": matrix is " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", not square");
  }
}

// Expands rows [row, n) over the columns still marked free.
Scalar cofactor_rec(const GeneralMatrix& m, std::size_t row,
                    std::vector<bool>& taken) {
  const std::size_t n = m.rows();
  if (row == n) return Scalar::one(m.ring());
  Scalar total = Scalar::zero(m.ring());
  int parity = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (taken[c]) continue;
    const Scalar& v = m.at(row, c);
    if (!v.is_zero()) {
      taken[c] = true;
      Scalar term = v * cofactor_rec(m, row + 1, taken);
      taken[c] = false;
      if (parity) {
        total -= term;
      } else {
        total += term;
      }
    }
    parity ^= 1;
  }
  return total;
}

}  // namespace

Scalar det_cofactor(const GeneralMatrix& m) {
  require_square(m, "det_cofactor");
  if (m.rows() > kCofactorMaxDim) {
    throw std::invalid_argument("det_cofactor: dimension " +
                                std::to_string(m.rows()) + " exceeds " +
                                std::to_string(kCofactorMaxDim));
  }
  std::vector<bool> taken(m.cols(), false);
  return cofactor_rec(m, 0, taken);
}

Scalar det_bareiss(const GeneralMatrix& m) {
  require_square(m, "det_bareiss");
  const Ring& ring = m.ring();
  if (!ring.is_integral_domain()) {
    throw UnsupportedRing("det_bareiss needs an integral domain, got " +
                          ring.to_string());
  }
  const std::size_t n = m.rows();
  if (n == 0) return Scalar::one(ring);

  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m.at(r, c);
  }

  bool negate = false;
  Scalar prev = Scalar::one(ring);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) return Scalar::zero(ring);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = Scalar::zero(ring);
    }
    prev = a[k][k];
  }
  const Scalar& det = a[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace skewminor
