#include "skewminor/pfaffian.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace skewminor {

namespace {

void check_letters(const SkewMatrix& t, const Word& alpha) {
  for (Letter l : alpha) {
    if (l < 1 || static_cast<std::size_t>(l) > t.size()) {
      throw std::out_of_range("letter " + std::to_string(l) + " outside [1, " +
                              std::to_string(t.size()) + "]");
    }
  }
}

// Shared convention handling. Returns true and sets `out` when the value is
// fixed without arithmetic.
bool degenerate_value(const SkewMatrix& t, const Word& alpha, bool check_repeats,
                      Scalar& out) {
  check_letters(t, alpha);
  if (alpha.empty()) {
    out = Scalar::one(t.ring());
    return true;
  }
  if (alpha.size() % 2 == 1 || (check_repeats && alpha.has_repeats())) {
    out = Scalar::zero(t.ring());
    return true;
  }
  return false;
}

// Pair the first live position with every later live one; the sign of moving
// the partner next to it is (-1)^(number of live positions skipped).
Scalar matchsum_rec(const std::vector<std::vector<Scalar>>& pair,
                    std::vector<bool>& used, const Scalar& zero) {
  const std::size_t len = used.size();
  std::size_t first = 0;
  while (first < len && used[first]) ++first;
  if (first == len) return Scalar::one(zero.ring());

  used[first] = true;
  Scalar total = zero;
  int parity = 0;
  for (std::size_t j = first + 1; j < len; ++j) {
    if (used[j]) continue;
    const Scalar& pv = pair[first][j];
    if (!pv.is_zero()) {
      used[j] = true;
      Scalar term = pv * matchsum_rec(pair, used, zero);
      used[j] = false;
      if (parity) {
        total -= term;
      } else {
        total += term;
      }
    }
    parity ^= 1;
  }
  used[first] = false;
  return total;
}

Scalar matchsum(const SkewMatrix& t, const Word& alpha) {
  const std::size_t len = alpha.size();
  std::vector<std::vector<Scalar>> pair(len, std::vector<Scalar>(len));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      pair[i][j] = t.entry(alpha[i], alpha[j]);
    }
  }
  std::vector<bool> used(len, false);
  return matchsum_rec(pair, used, Scalar::zero(t.ring()));
}

Scalar expand_sorted(const SkewMatrix& t, const std::vector<Letter>& word,
                     PfCache& cache) {
  if (word.empty()) return Scalar::one(t.ring());
  if (const Scalar* hit = cache.find(word)) return *hit;

  const Letter a = word.front();
  Scalar total = Scalar::zero(t.ring());
  std::vector<Letter> rest(word.size() - 2);
  for (std::size_t p = 1; p < word.size(); ++p) {
    const Scalar& t_ax = t.upper(a, word[p]);
    if (t_ax.is_zero()) continue;
    // rest = word with positions 0 and p removed; still sorted.
    std::copy(word.begin() + 1, word.begin() + static_cast<std::ptrdiff_t>(p),
              rest.begin());
    std::copy(word.begin() + static_cast<std::ptrdiff_t>(p) + 1, word.end(),
              rest.begin() + static_cast<std::ptrdiff_t>(p) - 1);
    Scalar term = t_ax * expand_sorted(t, rest, cache);
    // sgn(word; a x rest) = (-1)^(p-1)
    if (p % 2 == 0) {
      total -= term;
    } else {
      total += term;
    }
  }
  cache.store(word, total);
  return total;
}

}  // namespace

std::size_t PfCache::KeyHash::operator()(
    const std::vector<Letter>& key) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter l : key) {
    h ^= static_cast<std::size_t>(l);
    h *= 1099511628211ULL;
  }
  return h;
}

const Scalar* PfCache::find(const std::vector<Letter>& sorted) const {
  auto it = memo_.find(sorted);
  return it == memo_.end() ? nullptr : &it->second;
}

void PfCache::store(std::vector<Letter> sorted, Scalar value) {
  memo_.insert_or_assign(std::move(sorted), std::move(value));
}

Scalar pf_matchsum(const SkewMatrix& t, const Word& alpha) {
  Scalar out;
  if (degenerate_value(t, alpha, true, out)) return out;
  return matchsum(t, alpha);
}

Scalar pf_matchsum_unchecked(const SkewMatrix& t, const Word& alpha) {
  Scalar out;
  if (degenerate_value(t, alpha, false, out)) return out;
  return matchsum(t, alpha);
}

Scalar pf_expand(const SkewMatrix& t, const Word& alpha, PfCache& cache) {
  Scalar out;
  if (degenerate_value(t, alpha, true, out)) return out;
  const Word sorted = sort_word(alpha);
  Scalar value = expand_sorted(t, sorted.letters(), cache);
  return sign(alpha, sorted) == 1 ? value : -value;
}

Scalar pf_expand(const SkewMatrix& t, const Word& alpha) {
  PfCache cache;
  return pf_expand(t, alpha, cache);
}

Scalar pf_eliminate(const SkewMatrix& t, const IndexSet& rows) {
  const Ring& ring = t.ring();
  if (!ring.is_integral_domain()) {
    throw UnsupportedRing("pf_eliminate needs an integral domain, got " +
                          ring.to_string());
  }
  if (rows.max() > static_cast<int>(t.size())) {
    throw std::out_of_range("index " + std::to_string(rows.max()) +
                            " outside [1, " + std::to_string(t.size()) + "]");
  }
  const std::size_t m = rows.size();
  if (m == 0) return Scalar::one(ring);
  if (m % 2 == 1) return Scalar::zero(ring);

  std::vector<std::vector<Scalar>> a(m, std::vector<Scalar>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = t.entry(rows[i], rows[j]);
  }

  // After the step with pivot pair (k, k+1), a[i][j] for i, j > k+1 holds the
  // Pfaffian of the rows {0, ..., k+1, i, j} of the (permuted) input.
  bool negate = false;
  Scalar prev = Scalar::one(ring);
  for (std::size_t k = 0; k < m; k += 2) {
    std::size_t piv = k + 1;
    while (piv < m && a[k][piv].is_zero()) ++piv;
    if (piv == m) return Scalar::zero(ring);
    if (piv != k + 1) {
      // Symmetric swap of indices k+1 and piv.
      std::swap(a[k + 1], a[piv]);
      for (auto& row : a) std::swap(row[k + 1], row[piv]);
      negate = !negate;
    }
    const Scalar pivot = a[k][k + 1];
    for (std::size_t i = k + 2; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        Scalar v = pivot * a[i][j] - a[k][i] * a[k + 1][j] +
                   a[k][j] * a[k + 1][i];
        a[i][j] = exact_div(v, prev);
        a[j][i] = -a[i][j];
      }
    }
    prev = pivot;
  }
  return negate ? -prev : prev;
}

std::string_view to_string(PfStrategy s) {
  switch (s) {
    case PfStrategy::expand:
      return "expand";
    case PfStrategy::matchsum:
      return "matchsum";
    case PfStrategy::eliminate:
      return "eliminate";
  }
  return "?";
}

PfStrategy parse_strategy(std::string_view text) {
  if (text == "expand") return PfStrategy::expand;
  if (text == "matchsum") return PfStrategy::matchsum;
  if (text == "eliminate") return PfStrategy::eliminate;
  throw std::invalid_argument("unknown strategy '" + std::string(text) +
                              "' (expected expand, matchsum or eliminate)");
}

Scalar pf_word(const SkewMatrix& t, const Word& alpha, PfStrategy strategy,
               PfCache* cache) {
  switch (strategy) {
    case PfStrategy::matchsum:
      return pf_matchsum(t, alpha);
    case PfStrategy::eliminate: {
      Scalar out;
      if (degenerate_value(t, alpha, true, out)) return out;
      const Word sorted = sort_word(alpha);
      Scalar value = pf_eliminate(t, IndexSet::from(sorted.letters()));
      return sign(alpha, sorted) == 1 ? value : -value;
    }
    case PfStrategy::expand:
      break;
  }
  if (cache) return pf_expand(t, alpha, *cache);
  return pf_expand(t, alpha);
}

Scalar pfaffian(const SkewMatrix& t, const IndexSet& rows,
                PfStrategy strategy) {
  if (strategy == PfStrategy::eliminate) return pf_eliminate(t, rows);
  return pf_word(t, rows.to_word(), strategy);
}

}  // namespace skewminor
