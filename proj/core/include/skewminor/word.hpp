#pragma once

#include <atomic>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace skewminor {

using Letter = int;

/// A finite sequence of 1-based letters. Repeated letters are allowed; the
/// Pfaffian calculus assigns such words the value zero downstream.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] Letter front() const { return letters_.front(); }

  [[nodiscard]] auto begin() const noexcept { return letters_.begin(); }
  [[nodiscard]] auto end() const noexcept { return letters_.end(); }

  [[nodiscard]] const std::vector<Letter>& letters() const noexcept {
    return letters_;
  }

  [[nodiscard]] bool contains(Letter letter) const;
  [[nodiscard]] bool has_repeats() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Concatenation, e.g. the word ρσ.
[[nodiscard]] Word concat(const Word& alpha, const Word& beta);

/// Letters of `alpha` in non-decreasing order (stable for repeats).
[[nodiscard]] Word sort_word(const Word& alpha);

/// Sign of the permutation carrying `alpha` to `beta`. Returns 0 unless the
/// two words are repeat-free rearrangements of each other.
[[nodiscard]] int sign(const Word& alpha, const Word& beta);

/// `alpha` with one occurrence of each letter of `gamma` deleted, order of the
/// survivors preserved. Throws std::invalid_argument if a letter of `gamma`
/// is missing from `alpha`.
[[nodiscard]] Word word_remove(const Word& alpha, const Word& gamma);

/// All order-preserving selections of `k` letters from `alpha`, in
/// lexicographic order of the selected positions.
[[nodiscard]] std::vector<Word> subwords_of_size(const Word& alpha,
                                                 std::size_t k);

namespace fault_injection {

// Negates every value returned by sign(). Only meant for tests that must show
// a sign error is detected.
void set_sign_flip(bool enabled) noexcept;
[[nodiscard]] bool sign_flip_enabled() noexcept;

class ScopedSignFlip {
 public:
  ScopedSignFlip() : previous_(sign_flip_enabled()) { set_sign_flip(true); }
  ~ScopedSignFlip() { set_sign_flip(previous_); }
  ScopedSignFlip(const ScopedSignFlip&) = delete;
  ScopedSignFlip& operator=(const ScopedSignFlip&) = delete;

 private:
  bool previous_;
};

}  // namespace fault_injection

}  // namespace skewminor
