#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "strattr/position_set.hpp"
#include "strattr/words.hpp"

namespace strattr {

namespace detail {
class SuffixAutomaton;
}

/// Result of an attractor check. When the set is not an attractor, `witness`
/// is the leftmost occurrence of a shortest substring none of whose
/// occurrences crosses the set.
struct VerifyOutcome {
  bool is_attractor = false;
  std::optional<Interval> witness;

  friend bool operator==(const VerifyOutcome&, const VerifyOutcome&) = default;
};

/// Reference check: enumerates every distinct non-empty substring and every
/// occurrence. Cubic time; meant for small words and as a test oracle.
VerifyOutcome is_attractor_naive(const Word& text, const PositionSet& gamma);

/// Linear-time check backed by a suffix automaton. Build once per word and
/// reuse for many candidate sets; `check` is const and thread-safe.
class AttractorVerifier {
 public:
  explicit AttractorVerifier(const Word& text);
  ~AttractorVerifier();
  AttractorVerifier(AttractorVerifier&&) noexcept;
  AttractorVerifier& operator=(AttractorVerifier&&) noexcept;

  std::size_t text_size() const { return size_; }

  VerifyOutcome check(const PositionSet& gamma) const;

  /// Flag-only variant over a sorted position list; skips witness selection.
  bool accepts(std::span<const Position> sorted_gamma) const;

 private:
  std::vector<std::uint32_t> best_distances(std::span<const Position> sorted_gamma) const;

  std::size_t size_ = 0;
  std::unique_ptr<detail::SuffixAutomaton> automaton_;
};

/// One-shot form of AttractorVerifier::check.
VerifyOutcome is_attractor(const Word& text, const PositionSet& gamma);

struct MusReport {
  std::vector<Interval> intervals;  // sorted by lo
  std::vector<Word> substrings;
};

/// Occurrences of all minimal unique substrings. A symbol occurring once is a
/// MUS of length 1 (ε counts as occurring at every boundary).
MusReport minimal_unique_substrings(const Word& text);

struct SearchOptions {
  /// Restrict candidates to sets hitting every MUS interval.
  bool prune_mus = false;
  /// Maximum number of candidate subsets examined per size.
  std::uint64_t budget = 10'000'000;
};

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Calls `visit` with every k-subset of 1..length (sorted, lexicographic
/// order) that hits all `must_hit` intervals. `must_hit` must be pairwise
/// non-nested (as MUS intervals are). Stops early when `visit` returns false.
/// Throws budget_exceeded once more than `budget` candidates were produced,
/// or up front when unpruned and C(length, k) > budget.
void for_each_candidate(std::size_t length, std::size_t k, std::span<const Interval> must_hit,
                        std::uint64_t budget,
                        const std::function<bool(std::span<const Position>)>& visit);

/// Size of a smallest attractor of `text`, if one of size <= k_max exists.
std::optional<std::size_t> smallest_attractor_size(const Word& text, std::size_t k_max,
                                                   const SearchOptions& options = {});

}  // namespace strattr
