#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "skewminor/skew_matrix.hpp"

namespace skewminor {

/// Error in a matrix document; `line()` is 1-based (0 when not line-specific).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Text format:
//
//   # comment
//   skew <n> <ring>        ring is one of: int | rat | mod <m>
//   i j value              one line per nonzero t_ij, i < j
//
// Absent pairs are zero; a repeated (i, j) pair is an error.
[[nodiscard]] SkewMatrix read_skew_matrix(std::istream& in);
[[nodiscard]] SkewMatrix read_skew_matrix_file(const std::string& path);

/// Writes the header and every nonzero strict-upper entry. Output reads back
/// to an equal matrix.
void write_skew_matrix(std::ostream& out, const SkewMatrix& t);

}  // namespace skewminor
