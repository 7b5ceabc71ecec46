#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strattr/attractor.hpp"
#include "strattr/enumeration.hpp"

namespace strattr {

enum class WordFamily { fib, pd };

std::string_view to_string(WordFamily family);

enum class VerifierKind { efficient, naive };

struct CrosscheckOptions {
  bool prune_mus = false;
  VerifierKind verifier = VerifierKind::efficient;
  /// Lifts the period-doubling brute-force cap from 8 to 9.
  bool extended = false;
  /// Check orders on separate threads; report order is unaffected.
  bool parallel = true;
};

struct CrosscheckEntry {
  int n = 0;
  bool match = false;
  std::size_t closed_form_size = 0;
  std::size_t brute_force_size = 0;
  std::vector<PositionSet> only_closed_form;
  std::vector<PositionSet> only_brute_force;
  double millis = 0.0;
};

struct CrosscheckReport {
  WordFamily family = WordFamily::fib;
  CrosscheckOptions options;
  std::vector<CrosscheckEntry> entries;

  bool all_match() const;
};

/// Brute-force caps: Fibonacci 12 (efficient) or 10 (naive); period-doubling
/// 8, or 9 when extended.
int brute_force_cap(WordFamily family, const CrosscheckOptions& options);

/// Smallest attractors found with the requested verifier.
AttractorFamily brute_force_attractors(const Word& text, const CrosscheckOptions& options);

/// Closed form vs enumeration of Att(F_n), n_lo..n_hi; requires 7 <= n_lo.
CrosscheckReport crosscheck_fib(int n_lo, int n_hi, const CrosscheckOptions& options = {});

/// Closed form vs enumeration of Att(D_n), n_lo..n_hi; requires 2 <= n_lo.
CrosscheckReport crosscheck_pd(int n_lo, int n_hi, const CrosscheckOptions& options = {});

struct FuzzDisagreement {
  Word text;
  PositionSet gamma;
  VerifyOutcome naive;
  VerifyOutcome efficient;
};

struct FuzzReport {
  std::uint64_t trials = 0;
  std::uint64_t disagreements = 0;
  std::vector<FuzzDisagreement> examples;  // at most the first 5
};

/// Random words of length 1..max_len and position sets of size 0..3;
/// compares is_attractor with is_attractor_naive. Deterministic in `seed`.
FuzzReport verifier_fuzz(std::uint64_t trials, std::size_t max_len, std::uint64_t seed);

/// Every word of length 1..max_len and every position set of size 0..max_gamma.
FuzzReport verifier_sweep(std::size_t max_len, std::size_t max_gamma);

/// Att(F_n) or Att(D_n): the closed form where it applies (F_n for n >= 7,
/// D_n for n >= 2), brute-force enumeration below that.
struct KnownAttractors {
  Word word;
  AttractorFamily family;
  bool from_closed_form = false;
};

KnownAttractors smallest_attractors_of(WordFamily family, int n, const Caps& caps = {});

/// Fixed-width table; timings included only when asked.
std::string to_table(const CrosscheckReport& report, bool with_timing = false);

}  // namespace strattr
