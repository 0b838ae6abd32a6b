#include "skewminor/matrix_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace skewminor {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#';
  }
  return true;
}

int parse_index(const std::string& token, std::size_t n, std::size_t line_no) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected an index, got '" + token + "'");
  }
  if (used != token.size()) {
    throw ParseError(line_no, "expected an index, got '" + token + "'");
  }
  if (v < 1 || static_cast<std::size_t>(v) > n) {
    throw ParseError(line_no, "index " + token + " outside [1, " +
                                  std::to_string(n) + "]");
  }
  return static_cast<int>(v);
}

}  // namespace

SkewMatrix read_skew_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  // Header.
  bool have_header = false;
  std::size_t n = 0;
  Ring ring;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream ls(line);
    std::string keyword;
    long dim = -1;
    ls >> keyword >> dim;
    if (keyword != "skew" || !ls || dim < 0) {
      throw ParseError(line_no, "expected header 'skew <n> <ring>'");
    }
    std::string rest;
    std::getline(ls, rest);
    try {
      ring = Ring::parse(rest);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    n = static_cast<std::size_t>(dim);
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError(line_no, "missing 'skew <n> <ring>' header");

  SkewMatrix::Builder builder(n, ring);
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream ls(line);
    std::string ti, tj;
    ls >> ti >> tj;
    std::string value;
    std::getline(ls, value);
    if (ti.empty() || tj.empty() ||
        value.find_first_not_of(" \t\r") == std::string::npos) {
      throw ParseError(line_no, "expected 'i j value'");
    }
    const int i = parse_index(ti, n, line_no);
    const int j = parse_index(tj, n, line_no);
    if (i >= j) {
      throw ParseError(line_no, "entries must satisfy i < j, got (" + ti +
                                    "," + tj + ")");
    }
    if (!seen.emplace(i, j).second) {
      throw ParseError(line_no, "duplicate entry (" + ti + "," + tj + ")");
    }
    try {
      builder.set(i, j, Scalar::parse(ring, value));
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return std::move(builder).build();
}

SkewMatrix read_skew_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_skew_matrix(in);
}

void write_skew_matrix(std::ostream& out, const SkewMatrix& t) {
  out << "skew " << t.size() << ' ' << t.ring().to_string() << '\n';
  const auto n = static_cast<int>(t.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Scalar& v = t.upper(i, j);
      if (v.is_zero()) continue;
      out << i << ' ' << j << ' ';
      if (const auto* r = v.as_residue()) {
        out << r->value;
      } else {
        out << v;
      }
      out << '\n';
    }
  }
}

}  // namespace skewminor
