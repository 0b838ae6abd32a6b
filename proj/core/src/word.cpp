#include "skewminor/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace skewminor {

namespace {

std::atomic<bool> g_sign_flip{false};

void check_letters(const std::vector<Letter>& letters) {
  for (Letter l : letters) {
    if (l < 1) {
      throw std::invalid_argument("word letters must be positive, got " +
                                  std::to_string(l));
    }
  }
}

// Counts inversions of `perm` by merge sort; `scratch` must match its size.
std::size_t count_inversions(std::vector<std::size_t>& perm,
                             std::vector<std::size_t>& scratch,
                             std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::size_t inv = count_inversions(perm, scratch, lo, mid) +
                    count_inversions(perm, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (perm[i] <= perm[j]) {
      scratch[k++] = perm[i++];
    } else {
      inv += mid - i;
      scratch[k++] = perm[j++];
    }
  }
  while (i < mid) scratch[k++] = perm[i++];
  while (j < hi) scratch[k++] = perm[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            perm.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

int raw_sign(const Word& alpha, const Word& beta) {
  const std::size_t len = alpha.size();
  if (beta.size() != len) return 0;

  // (letter, position) pairs sorted by letter match positions across words.
  auto tagged = [](const Word& w) {
    std::vector<std::pair<Letter, std::size_t>> t(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) t[i] = {w[i], i};
    std::sort(t.begin(), t.end());
    return t;
  };
  const auto ta = tagged(alpha);
  const auto tb = tagged(beta);
  for (std::size_t i = 0; i < len; ++i) {
    if (ta[i].first != tb[i].first) return 0;
    if (i > 0 && ta[i].first == ta[i - 1].first) return 0;
  }

  // perm[q] = position in alpha of the letter sitting at position q of beta.
  std::vector<std::size_t> perm(len);
  for (std::size_t i = 0; i < len; ++i) perm[tb[i].second] = ta[i].second;
  std::vector<std::size_t> scratch(len);
  return count_inversions(perm, scratch, 0, len) % 2 == 0 ? 1 : -1;
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters) : letters_(letters) {
  check_letters(letters_);
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  check_letters(letters_);
}

bool Word::contains(Letter letter) const {
  return std::find(letters_.begin(), letters_.end(), letter) != letters_.end();
}

bool Word::has_repeats() const {
  std::vector<Letter> sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

std::string Word::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ',';
    os << letters_[i];
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.to_string();
}

Word concat(const Word& alpha, const Word& beta) {
  std::vector<Letter> out;
  out.reserve(alpha.size() + beta.size());
  out.insert(out.end(), alpha.begin(), alpha.end());
  out.insert(out.end(), beta.begin(), beta.end());
  return Word(std::move(out));
}

Word sort_word(const Word& alpha) {
  std::vector<Letter> out = alpha.letters();
  std::stable_sort(out.begin(), out.end());
  return Word(std::move(out));
}

int sign(const Word& alpha, const Word& beta) {
  const int s = raw_sign(alpha, beta);
  return fault_injection::sign_flip_enabled() ? -s : s;
}

Word word_remove(const Word& alpha, const Word& gamma) {
  std::vector<bool> removed(alpha.size(), false);
  for (Letter g : gamma) {
    bool found = false;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (!removed[i] && alpha[i] == g) {
        removed[i] = true;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("word_remove: letter " + std::to_string(g) +
                                  " not present in " + alpha.to_string());
    }
  }
  std::vector<Letter> out;
  out.reserve(alpha.size() - gamma.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!removed[i]) out.push_back(alpha[i]);
  }
  return Word(std::move(out));
}

std::vector<Word> subwords_of_size(const Word& alpha, std::size_t k) {
  std::vector<Word> out;
  const std::size_t len = alpha.size();
  if (k > len) return out;

  std::vector<std::size_t> pos(k);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  std::vector<Letter> buf(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) buf[i] = alpha[pos[i]];
    out.emplace_back(buf);
    // Advance to the next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == len - k + (i - 1)) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
  return out;
}

namespace fault_injection {

void set_sign_flip(bool enabled) noexcept {
  g_sign_flip.store(enabled, std::memory_order_relaxed);
}

bool sign_flip_enabled() noexcept {
  return g_sign_flip.load(std::memory_order_relaxed);
}

}  // namespace fault_injection

}  // namespace skewminor
