#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "skewminor/brill.hpp"
#include "skewminor/pfaffian.hpp"
#include "skewminor/skew_matrix.hpp"
#include "verify.hpp"

namespace skewminor::cli {

enum ExitCode : int { kOk = 0, kDisagreement = 1, kUsage = 2 };

enum class Subcommand { pf, minor, verify, double_matrix };
enum class PathChoice { direct, doubling, both };

struct Command {
  Subcommand subcommand = Subcommand::pf;
  std::string matrix_path;
  // Raw comma-separated lists; checked against the matrix when it is loaded.
  std::string set;
  std::string rows;
  std::string cols;
  PfStrategy strategy = PfStrategy::expand;
  PathChoice path = PathChoice::both;
  VerifyConfig verify;
  bool inject_sign_fault = false;
};

/// Parses argv-style arguments (without the program name). On failure or
/// --help, returns nullopt and sets `exit_code` after writing to out/err.
std::optional<Command> parse_command(const std::vector<std::string>& args,
                                     std::ostream& out, std::ostream& err,
                                     int& exit_code);

/// Executes a parsed command; returns the process exit status.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_command followed by run.
int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

/// "1,3,4" -> {1,3,4}. Empty text is the empty set. Throws
/// std::invalid_argument naming `flag` on malformed or duplicate entries.
IndexSet parse_index_list(const std::string& text, const std::string& flag);

}  // namespace skewminor::cli
