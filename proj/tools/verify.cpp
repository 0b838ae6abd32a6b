#include "verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "skewminor/brill.hpp"
#include "skewminor/det_oracle.hpp"
#include "skewminor/pfaffian.hpp"
#include "skewminor/skew_matrix.hpp"
#include "skewminor/word.hpp"

namespace skewminor::cli {

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;
constexpr std::size_t kMaxWordLength = 8;
constexpr int kIdentityInstancesPerTrial = 4;

enum Suite {
  kEvaluatorAgreement,
  kTannerExpansion,
  kTwoSumDecomposition,
  kOracleEquivalence,
  kDoublingAgreement,
  kVanishingTerms,
  kSuiteCount
};

const char* const kSuiteNames[kSuiteCount] = {
    "evaluator_agreement", "tanner_expansion",   "two_sum_decomposition",
    "oracle_equivalence",  "doubling_agreement", "vanishing_terms"};

class Recorder {
 public:
  Recorder() : results_(kSuiteCount) {
    for (int s = 0; s < kSuiteCount; ++s) results_[s].name = kSuiteNames[s];
  }

  void check(Suite suite, bool ok, std::size_t trial, const std::string& what) {
    auto& r = results_[suite];
    ++r.checked;
    if (ok) {
      ++r.passed;
    } else if (r.failures.size() < kMaxRecordedFailures) {
      r.failures.push_back("trial " + std::to_string(trial) + ": " + what);
    }
  }

  std::vector<SuiteResult> take() { return std::move(results_); }

 private:
  std::vector<SuiteResult> results_;
};

SkewMatrix random_matrix(std::size_t n, const VerifyConfig& config,
                         std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-config.entry_bound,
                                           config.entry_bound);
  SkewMatrix::Builder b(n, config.ring);
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n); ++j) b.set(i, j, dist(rng));
  }
  return std::move(b).build();
}

std::vector<int> shuffled_letters(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng);
  return all;
}

std::vector<IndexSet> all_subsets(std::size_t n, std::size_t size) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<IndexSet> out;
  for (const Word& w : subwords_of_size(Word(base), size)) {
    out.push_back(IndexSet::from(w.letters()));
  }
  return out;
}

std::string describe(const IndexSet& r, const IndexSet& s) {
  std::ostringstream os;
  os << "R=" << r << " S=" << s;
  return os.str();
}

Scalar oracle_det(const GeneralMatrix& m) {
  if (m.ring().is_integral_domain()) return det_bareiss(m);
  return det_cofactor(m);
}

void evaluator_agreement(const SkewMatrix& t, std::size_t trial,
                         std::mt19937_64& rng, Recorder& rec) {
  const std::size_t n = t.size();
  const bool eliminate_ok = t.ring().is_integral_domain();
  PfCache cache;
  for (std::size_t len = 0; len <= std::min(n, kMaxWordLength); ++len) {
    for (const IndexSet& set : all_subsets(n, len)) {
      const Word w = set.to_word();
      const Scalar ms = pf_matchsum(t, w);
      rec.check(kEvaluatorAgreement, ms == pf_expand(t, w, cache), trial,
                "matchsum != expand on " + w.to_string());
      if (eliminate_ok && len % 2 == 0) {
        rec.check(kEvaluatorAgreement, ms == pf_eliminate(t, set), trial,
                  "matchsum != eliminate on " + w.to_string());
      }
    }
  }
  // An unsorted word, possibly with a repeated letter.
  std::uniform_int_distribution<int> letter(1, static_cast<int>(n));
  std::vector<int> letters(std::min<std::size_t>(2 * (n / 2 + 1), 6));
  for (int& l : letters) l = letter(rng);
  const Word w(letters);
  rec.check(kEvaluatorAgreement, pf_matchsum(t, w) == pf_expand(t, w, cache),
            trial, "matchsum != expand on " + w.to_string());
}

// P[alpha] = sum_{x != a} sgn(alpha; a x (alpha \ ax)) P[ax] P[alpha \ ax]
void tanner_expansion(const SkewMatrix& t, std::size_t trial,
                      std::mt19937_64& rng, Recorder& rec) {
  const std::size_t n = t.size();
  const std::size_t max_len = std::min(n, kMaxWordLength) / 2 * 2;
  if (max_len < 2) return;
  std::uniform_int_distribution<std::size_t> half(1, max_len / 2);
  for (int rep = 0; rep < kIdentityInstancesPerTrial; ++rep) {
    auto letters = shuffled_letters(n, rng);
    letters.resize(2 * half(rng));
    const Word alpha(letters);
    const Letter a = alpha.front();
    Scalar sum = Scalar::zero(t.ring());
    for (std::size_t p = 1; p < alpha.size(); ++p) {
      const Word ax{a, alpha[p]};
      const Word rest = word_remove(alpha, ax);
      const int s = sign(alpha, concat(ax, rest));
      sum += Scalar::from_int(t.ring(), s) * pf_matchsum(t, ax) *
             pf_matchsum(t, rest);
    }
    rec.check(kTannerExpansion, sum == pf_matchsum(t, alpha), trial,
              "expansion fails on " + alpha.to_string());
  }
}

// For disjoint rho, sigma and w ⊆ rho \ r1:
//   P[rho sigma \ w] = sum_{r in rho \ r1 w} sgn(rho\w; r1 r (rho\w r1 r))
//                          P[r1 r] P[rho sigma \ w r1 r]
//                    + (-1)^(|rho\w| - 1) sum_{s in sigma}
//                          sgn(sigma; s (sigma\s)) P[r1 s] P[rho sigma \ w r1 s]
void two_sum_decomposition(const SkewMatrix& t, std::size_t trial,
                           std::mt19937_64& rng, Recorder& rec) {
  const std::size_t n = t.size();
  if (n < 2) return;
  const Ring& ring = t.ring();
  for (int rep = 0; rep < kIdentityInstancesPerTrial; ++rep) {
    auto letters = shuffled_letters(n, rng);
    std::uniform_int_distribution<std::size_t> rho_len(1, n - 1);
    const std::size_t lr = rho_len(rng);
    std::uniform_int_distribution<std::size_t> sigma_len(1, n - lr);
    const std::size_t ls = sigma_len(rng);
    std::vector<int> rv(letters.begin(), letters.begin() + lr);
    std::vector<int> sv(letters.begin() + lr, letters.begin() + lr + ls);
    std::sort(rv.begin(), rv.end());
    std::sort(sv.begin(), sv.end());
    const Word rho(rv), sigma(sv);
    const Letter r1 = rho.front();

    // Random subword of rho \ r1.
    std::vector<int> wv;
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 1; i < rho.size(); ++i) {
      if (coin(rng)) wv.push_back(rho[i]);
    }
    const Word omega(wv);
    const Word rho_sigma = concat(rho, sigma);
    const Word rho_minus_w = word_remove(rho, omega);
    const Word lhs_word = word_remove(rho_sigma, omega);

    Scalar rhs = Scalar::zero(ring);
    for (Letter r : word_remove(rho_minus_w, Word{r1})) {
      const Word pair{r1, r};
      const int s = sign(rho_minus_w, concat(pair, word_remove(rho_minus_w, pair)));
      rhs += Scalar::from_int(ring, s) * pf_matchsum(t, pair) *
             pf_matchsum(t, word_remove(lhs_word, pair));
    }
    Scalar second = Scalar::zero(ring);
    for (Letter s_letter : sigma) {
      const Word single{s_letter};
      const int s = sign(sigma, concat(single, word_remove(sigma, single)));
      const Word pair{r1, s_letter};
      second += Scalar::from_int(ring, s) * pf_matchsum(t, pair) *
                pf_matchsum(t, word_remove(lhs_word, pair));
    }
    if ((rho_minus_w.size() - 1) % 2 == 1) second = -second;
    rhs += second;

    std::ostringstream what;
    what << "decomposition fails for rho=" << rho << " sigma=" << sigma
         << " w=" << omega;
    rec.check(kTwoSumDecomposition, rhs == pf_matchsum(t, lhs_word), trial,
              what.str());
  }
}

void minors(const SkewMatrix& t, std::size_t trial, Recorder& rec) {
  const std::size_t n = t.size();
  PfCache cache;
  PfCache doubled_cache;
  BrillOptions direct{.cache = &cache};
  BrillOptions via_double{.cache = &doubled_cache};
  BrillOptions no_skip{.skip_vanishing = false, .cache = &cache};
  for (std::size_t m = 0; m <= n; ++m) {
    const auto subsets = all_subsets(n, m);
    for (const IndexSet& r : subsets) {
      for (const IndexSet& s : subsets) {
        const Scalar expected = oracle_det(submatrix(t, r, s));
        const MinorReport brill = brill_minor(t, r, s, direct);
        rec.check(kOracleEquivalence, brill.value == expected, trial,
                  describe(r, s) + ": brill " + brill.value.to_string() +
                      " oracle " + expected.to_string());
        const MinorReport dbl = brill_minor_via_doubling(t, r, s, via_double);
        rec.check(kDoublingAgreement, dbl.value == brill.value, trial,
                  describe(r, s) + ": doubling " + dbl.value.to_string() +
                      " direct " + brill.value.to_string());
        if (std::any_of(r.begin(), r.end(), [&](int x) { return s.contains(x); })) {
          const MinorReport full = brill_minor(t, r, s, no_skip);
          rec.check(kVanishingTerms,
                    vanishing_term_check(t, r, s) && full.value == brill.value,
                    trial, describe(r, s) + ": vanishing terms do not vanish");
        }
      }
    }
  }
}

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyConfig& config) {
  Recorder rec;
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                      static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    const std::size_t n = 1 + trial % config.max_n;
    const SkewMatrix t = random_matrix(n, config, rng);
    evaluator_agreement(t, trial, rng, rec);
    tanner_expansion(t, trial, rng, rec);
    two_sum_decomposition(t, trial, rng, rec);
    minors(t, trial, rec);
  }
  return rec.take();
}

}  // namespace skewminor::cli
