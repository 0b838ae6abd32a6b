#include "skewminor/brill.hpp"

#include <stdexcept>
#include <string>

namespace skewminor {

namespace {

void check_shapes(const SkewMatrix& t, const IndexSet& rows,
                  const IndexSet& cols) {
  if (rows.size() != cols.size()) {
    throw std::invalid_argument("row set has " + std::to_string(rows.size()) +
                                " indices but column set has " +
                                std::to_string(cols.size()));
  }
  const int n = static_cast<int>(t.size());
  for (const IndexSet* s : {&rows, &cols}) {
    if (s->max() > n) {
      throw std::out_of_range("index " + std::to_string(s->max()) +
                              " outside [1, " + std::to_string(n) + "]");
    }
  }
}

Word intersection(const IndexSet& a, const IndexSet& b) {
  std::vector<Letter> out;
  for (int x : a) {
    if (b.contains(x)) out.push_back(x);
  }
  return Word(std::move(out));
}

bool contains_all(const Word& w, const Word& letters) {
  for (Letter l : letters) {
    if (!w.contains(l)) return false;
  }
  return true;
}

// The double sum itself. `tail` builds the second Pfaffian's word from the
// row word, the column word and the chosen subword.
template <typename Tail>
MinorReport brill_sum(const SkewMatrix& t, const Word& rho, const Word& sigma,
                      const Word& overlap, const BrillOptions& options,
                      Tail tail) {
  PfCache local;
  PfCache* cache = options.cache ? options.cache : &local;
  const Ring& ring = t.ring();
  const std::size_t m = rho.size();

  MinorReport report;
  Scalar total = Scalar::zero(ring);
  for (std::size_t k = 0; 2 * k <= m; ++k) {
    Scalar inner = Scalar::zero(ring);
    for (const Word& omega : subwords_of_size(rho, 2 * k)) {
      if (options.skip_vanishing && !contains_all(omega, overlap)) {
        ++report.terms_skipped_vanishing;
        continue;
      }
      ++report.terms_evaluated;
      const Word rest = word_remove(rho, omega);
      const int s = sign(rho, concat(omega, rest));
      Scalar pf_omega = pf_word(t, omega, options.strategy, cache);
      if (pf_omega.is_zero()) continue;
      Scalar term = pf_omega *
                    pf_word(t, tail(rho, sigma, omega, rest), options.strategy,
                            cache);
      if (s > 0) {
        inner += term;
      } else {
        inner -= term;
      }
    }
    if (k % 2 == 0) {
      total += inner;
    } else {
      total -= inner;
    }
  }
  report.value = (m / 2) % 2 == 0 ? total : -total;
  return report;
}

}  // namespace

std::string_view to_string(MinorPath p) {
  switch (p) {
    case MinorPath::direct_brill:
      return "direct";
    case MinorPath::doubling:
      return "doubling";
    case MinorPath::oracle:
      return "oracle";
  }
  return "?";
}

MinorReport brill_minor(const SkewMatrix& t, const IndexSet& rows,
                        const IndexSet& cols, const BrillOptions& options) {
  check_shapes(t, rows, cols);
  const Word rho = rows.to_word();
  const Word sigma = cols.to_word();
  MinorReport report = brill_sum(
      t, rho, sigma, intersection(rows, cols), options,
      [](const Word&, const Word& sig, const Word&, const Word& rest) {
        return concat(rest, sig);
      });
  report.path = MinorPath::direct_brill;
  return report;
}

MinorReport brill_minor_via_doubling(const SkewMatrix& t, const IndexSet& rows,
                                     const IndexSet& cols,
                                     const BrillOptions& options) {
  check_shapes(t, rows, cols);
  const SkewMatrix lifted = doubled(t);
  const Word rho = odd_lift(rows).to_word();
  const Word sigma = even_lift(cols).to_word();
  // Disjoint words: (rho' \ w') sigma' is rho' sigma' \ w'.
  MinorReport report = brill_sum(
      lifted, rho, sigma, Word{}, options,
      [](const Word& r, const Word& sig, const Word& omega, const Word&) {
        return word_remove(concat(r, sig), omega);
      });
  report.path = MinorPath::doubling;
  return report;
}

bool vanishing_term_check(const SkewMatrix& t, const IndexSet& rows,
                          const IndexSet& cols) {
  check_shapes(t, rows, cols);
  const Word rho = rows.to_word();
  const Word sigma = cols.to_word();
  const Word overlap = intersection(rows, cols);
  if (overlap.empty()) return true;
  for (std::size_t k = 0; 2 * k <= rho.size(); ++k) {
    for (const Word& omega : subwords_of_size(rho, 2 * k)) {
      if (contains_all(omega, overlap)) continue;
      const Word tail = concat(word_remove(rho, omega), sigma);
      if (!pf_matchsum_unchecked(t, tail).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace skewminor
