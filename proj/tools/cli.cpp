#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "skewminor/det_oracle.hpp"
#include "skewminor/matrix_io.hpp"

namespace skewminor::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_range(const IndexSet& s, const SkewMatrix& t,
                 const std::string& flag) {
  if (s.max() > static_cast<int>(t.size())) {
    throw UsageError(flag + ": index " + std::to_string(s.max()) +
                     " outside [1, " + std::to_string(t.size()) + "]");
  }
}

int run_pf(const Command& cmd, std::ostream& out) {
  const SkewMatrix t = read_skew_matrix_file(cmd.matrix_path);
  const IndexSet set = parse_index_list(cmd.set, "--set");
  check_range(set, t, "--set");
  out << "pfaffian: " << pfaffian(t, set, cmd.strategy) << '\n';
  out << "strategy: " << to_string(cmd.strategy) << '\n';
  return kOk;
}

int run_minor(const Command& cmd, std::ostream& out) {
  const SkewMatrix t = read_skew_matrix_file(cmd.matrix_path);
  const IndexSet rows = parse_index_list(cmd.rows, "--rows");
  const IndexSet cols = parse_index_list(cmd.cols, "--cols");
  check_range(rows, t, "--rows");
  check_range(cols, t, "--cols");
  if (rows.size() != cols.size()) {
    throw UsageError("--rows has " + std::to_string(rows.size()) +
                     " indices but --cols has " + std::to_string(cols.size()));
  }

  std::optional<Scalar> direct, doubling;
  if (cmd.path != PathChoice::doubling) {
    const MinorReport r = brill_minor(t, rows, cols);
    out << "direct: " << r.value << '\n';
    out << "terms_evaluated: " << r.terms_evaluated << '\n';
    out << "terms_skipped_vanishing: " << r.terms_skipped_vanishing << '\n';
    direct = r.value;
  }
  if (cmd.path != PathChoice::direct) {
    const MinorReport r = brill_minor_via_doubling(t, rows, cols);
    out << "doubling: " << r.value << '\n';
    doubling = r.value;
  }
  if (cmd.path != PathChoice::both) return kOk;

  const GeneralMatrix sub = submatrix(t, rows, cols);
  std::optional<Scalar> oracle;
  if (t.ring().is_integral_domain()) {
    oracle = det_bareiss(sub);
  } else if (sub.rows() <= kCofactorMaxDim) {
    oracle = det_cofactor(sub);
  }
  if (oracle) {
    out << "oracle: " << *oracle << '\n';
  } else {
    out << "oracle: unavailable\n";
  }
  const bool agree = *direct == *doubling && (!oracle || *oracle == *direct);
  out << "result: " << (agree ? "OK" : "FAIL") << '\n';
  return agree ? kOk : kDisagreement;
}

int run_verify_cmd(const Command& cmd, std::ostream& out) {
  const VerifyConfig& c = cmd.verify;
  out << "verify: max_n=" << c.max_n << " trials=" << c.trials
      << " seed=" << c.seed << " entry_bound=" << c.entry_bound
      << " ring=" << c.ring.to_string() << '\n';

  std::optional<fault_injection::ScopedSignFlip> fault;
  if (cmd.inject_sign_fault) {
    fault.emplace();
    out << "fault_injection: sign flipped\n";
  }

  const auto results = run_verify(c);
  bool all_ok = true;
  for (const auto& r : results) {
    out << r.name << ": " << r.passed << "/" << r.checked << " passed\n";
    for (const auto& f : r.failures) out << "  failure: " << f << '\n';
    all_ok = all_ok && r.ok();
  }
  out << "result: " << (all_ok ? "PASS" : "FAIL") << '\n';
  return all_ok ? kOk : kDisagreement;
}

int run_double(const Command& cmd, std::ostream& out) {
  write_skew_matrix(out, doubled(read_skew_matrix_file(cmd.matrix_path)));
  return kOk;
}

}  // namespace

IndexSet parse_index_list(const std::string& text, const std::string& flag) {
  std::vector<int> indices;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 1) {
      throw std::invalid_argument(flag + ": '" + item +
                                  "' is not a positive index");
    }
    indices.push_back(static_cast<int>(v));
  }
  if (!text.empty() && text.back() == ',') {
    throw std::invalid_argument(flag + ": trailing comma");
  }
  try {
    return IndexSet::from(std::move(indices));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(flag + ": " + e.what());
  }
}

std::optional<Command> parse_command(const std::vector<std::string>& args,
                                     std::ostream& out, std::ostream& err,
                                     int& exit_code) {
  CLI::App app{"Pfaffians and minors of skew-symmetric matrices"};
  app.require_subcommand(1);
  Command cmd;

  const std::map<std::string, PfStrategy> strategies{
      {"expand", PfStrategy::expand},
      {"matchsum", PfStrategy::matchsum},
      {"eliminate", PfStrategy::eliminate}};
  const std::map<std::string, PathChoice> paths{
      {"direct", PathChoice::direct},
      {"doubling", PathChoice::doubling},
      {"both", PathChoice::both}};

  auto* pf = app.add_subcommand("pf", "Pfaffian of the principal submatrix T[R;R]");
  pf->add_option("--matrix", cmd.matrix_path, "Matrix file")->required();
  pf->add_option("--set", cmd.set, "Comma-separated 1-based indices")->required();
  std::string strategy_text = "expand";
  pf->add_option("--strategy", strategy_text, "expand | matchsum | eliminate")
      ->check(CLI::IsMember(strategies));

  auto* minor = app.add_subcommand("minor", "Minor det(T[R;S]) from Pfaffians");
  minor->add_option("--matrix", cmd.matrix_path, "Matrix file")->required();
  minor->add_option("--rows", cmd.rows, "Row indices R")->required();
  minor->add_option("--cols", cmd.cols, "Column indices S")->required();
  std::string path_text = "both";
  minor->add_option("--path", path_text, "direct | doubling | both")
      ->check(CLI::IsMember(paths));

  auto* verify = app.add_subcommand("verify", "Randomized identity sweep");
  std::string ring_text = "int";
  verify->add_option("--max-n", cmd.verify.max_n, "Largest matrix size (1-8)")
      ->check(CLI::Range(1, 8));
  verify->add_option("--trials", cmd.verify.trials, "Number of random matrices");
  verify->add_option("--seed", cmd.verify.seed, "Generator seed");
  verify->add_option("--entry-bound", cmd.verify.entry_bound,
                     "Entries uniform in [-b, b]")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--ring", ring_text, "int | rat | 'mod <m>'");
  verify->add_flag("--inject-sign-fault", cmd.inject_sign_fault,
                   "Negate the permutation sign (self-test of the sweep)");

  auto* dbl = app.add_subcommand("double", "Print the doubled matrix T'");
  dbl->add_option("--matrix", cmd.matrix_path, "Matrix file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    cmd.verify.ring = Ring::parse(ring_text);
    cmd.strategy = strategies.at(strategy_text);
    cmd.path = paths.at(path_text);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err) == 0 ? kOk : kUsage;
    return std::nullopt;
  } catch (const std::invalid_argument& e) {
    err << "error: --ring: " << e.what() << '\n';
    exit_code = kUsage;
    return std::nullopt;
  }

  if (pf->parsed()) {
    cmd.subcommand = Subcommand::pf;
  } else if (minor->parsed()) {
    cmd.subcommand = Subcommand::minor;
  } else if (verify->parsed()) {
    cmd.subcommand = Subcommand::verify;
  } else {
    cmd.subcommand = Subcommand::double_matrix;
  }
  return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd.subcommand) {
      case Subcommand::pf:
        return run_pf(cmd, out);
      case Subcommand::minor:
        return run_minor(cmd, out);
      case Subcommand::verify:
        return run_verify_cmd(cmd, out);
      case Subcommand::double_matrix:
        return run_double(cmd, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << cmd.matrix_path << ": " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  int exit_code = kOk;
  auto cmd = parse_command(args, out, err, exit_code);
  if (!cmd) return exit_code;
  return run(*cmd, out, err);
}

}  // namespace skewminor::cli
