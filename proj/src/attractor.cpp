#include "strattr/attractor.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "suffix_automaton.hpp"

namespace strattr {

namespace {

constexpr std::uint32_t kFar = std::numeric_limits<std::uint32_t>::max();

void require_verifiable(const Word& text, const PositionSet& gamma) {
  if (text.empty()) throw precondition_error("attractor check on the empty word");
  gamma.require_within(text.size());
}

// Keeps the (length, lo)-smallest candidate.
void offer_witness(std::optional<Interval>& current, Interval candidate) {
  if (!current || std::pair(candidate.length(), candidate.lo) <
                      std::pair(current->length(), current->lo)) {
    current = candidate;
  }
}

}  // namespace

VerifyOutcome is_attractor_naive(const Word& text, const PositionSet& gamma) {
  require_verifiable(text, gamma);
  const std::string s = text.str();
  struct Seen {
    bool covered = false;
    Position first_lo = 0;
  };
  std::map<std::string, Seen> substrings;
  for (Position i = 1; i <= s.size(); ++i) {
    for (Position j = i; j <= s.size(); ++j) {
      auto [it, fresh] = substrings.try_emplace(s.substr(i - 1, j - i + 1));
      if (fresh) it->second.first_lo = i;
      if (gamma.hits({i, j})) it->second.covered = true;
    }
  }
  VerifyOutcome out{true, std::nullopt};
  for (const auto& [sub, seen] : substrings) {
    if (seen.covered) continue;
    out.is_attractor = false;
    offer_witness(out.witness, {seen.first_lo, seen.first_lo + sub.size() - 1});
  }
  return out;
}

AttractorVerifier::AttractorVerifier(const Word& text)
    : size_(text.size()), automaton_(std::make_unique<detail::SuffixAutomaton>(text.symbols())) {
  if (text.empty()) throw precondition_error("attractor verifier on the empty word");
}

AttractorVerifier::~AttractorVerifier() = default;
AttractorVerifier::AttractorVerifier(AttractorVerifier&&) noexcept = default;
AttractorVerifier& AttractorVerifier::operator=(AttractorVerifier&&) noexcept = default;

// For each state v: min over end positions e in endpos(v) of e - g(e), where
// g(e) is the largest gamma position <= e. A substring of length l ending at e
// crosses gamma iff e - g(e) < l, so every substring of v is covered iff this
// minimum is below min_len(v).
std::vector<std::uint32_t> AttractorVerifier::best_distances(
    std::span<const Position> sorted_gamma) const {
  const auto& sam = *automaton_;
  std::vector<std::uint32_t> best(sam.states().size(), kFar);
  auto next_gamma = sorted_gamma.begin();
  std::optional<Position> prev;
  for (Position e = 1; e <= size_; ++e) {
    while (next_gamma != sorted_gamma.end() && *next_gamma <= e) prev = *next_gamma++;
    if (prev) best[static_cast<std::size_t>(sam.prefix_state(e))] = static_cast<std::uint32_t>(e - *prev);
  }
  const auto& states = sam.states();
  for (int v : sam.by_len_desc()) {
    auto& parent = best[static_cast<std::size_t>(states[v].link)];
    parent = std::min(parent, best[static_cast<std::size_t>(v)]);
  }
  return best;
}

bool AttractorVerifier::accepts(std::span<const Position> sorted_gamma) const {
  const auto best = best_distances(sorted_gamma);
  for (int v : automaton_->by_len_desc()) {
    if (best[static_cast<std::size_t>(v)] >= static_cast<std::uint32_t>(automaton_->min_len(v))) {
      return false;
    }
  }
  return true;
}

VerifyOutcome AttractorVerifier::check(const PositionSet& gamma) const {
  gamma.require_within(size_);
  const auto best = best_distances(gamma.positions());
  const auto& states = automaton_->states();
  VerifyOutcome out{true, std::nullopt};
  for (int v : automaton_->by_len_desc()) {
    const auto min_len = static_cast<std::size_t>(automaton_->min_len(v));
    if (best[static_cast<std::size_t>(v)] < min_len) continue;
    out.is_attractor = false;
    const Position end = states[v].first_end;
    offer_witness(out.witness, {end - min_len + 1, end});
  }
  return out;
}

VerifyOutcome is_attractor(const Word& text, const PositionSet& gamma) {
  require_verifiable(text, gamma);
  return AttractorVerifier(text).check(gamma);
}

MusReport minimal_unique_substrings(const Word& text) {
  if (text.empty()) throw precondition_error("minimal unique substrings of the empty word");
  const detail::SuffixAutomaton sam(text.symbols());
  const auto& states = sam.states();
  const auto& occ = sam.occurrences();

  // top[v]: the shallowest suffix-link ancestor of v (inclusive) that is
  // still unique. Parents are visited before children.
  std::vector<int> top(states.size(), -1);
  const auto& desc = sam.by_len_desc();
  for (auto it = desc.rbegin(); it != desc.rend(); ++it) {
    const int v = *it;
    if (occ[static_cast<std::size_t>(v)] != 1) continue;
    const int parent = states[v].link;
    top[v] = (parent != 0 && occ[static_cast<std::size_t>(parent)] == 1) ? top[parent] : v;
  }

  // T[s..e] is unique iff s <= last_unique_start(e).
  auto last_unique_start = [&](Position e) -> std::optional<Position> {
    const int v = sam.prefix_state(e);
    if (occ[static_cast<std::size_t>(v)] != 1) return std::nullopt;
    return e - static_cast<Position>(sam.min_len(top[v])) + 1;
  };

  MusReport report;
  std::optional<Position> previous;
  for (Position e = 1; e <= text.size(); ++e) {
    const auto start = last_unique_start(e);
    // T[start..e] is a MUS iff dropping its last symbol makes it repeat.
    if (start && (!previous || *previous < *start)) {
      report.intervals.push_back({*start, e});
      report.substrings.push_back(text.slice(*start, e));
    }
    previous = start;
  }
  return report;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

void for_each_candidate(std::size_t length, std::size_t k, std::span<const Interval> must_hit,
                        std::uint64_t budget,
                        const std::function<bool(std::span<const Position>)>& visit) {
  if (k == 0 || k > length) return;
  if (must_hit.empty() && binomial(length, k) > budget) {
    throw budget_exceeded("C(" + std::to_string(length) + ", " + std::to_string(k) +
                          ") exceeds search budget " + std::to_string(budget));
  }
  std::vector<Interval> intervals(must_hit.begin(), must_hit.end());
  std::sort(intervals.begin(), intervals.end());

  std::vector<Position> chosen(k);
  std::uint64_t produced = 0;
  bool stop = false;

  // Positions are chosen in increasing order, so the first interval not yet
  // hit must be hit by the next choice or never.
  auto descend = [&](auto& self, std::size_t depth, Position from, std::size_t unhit) -> void {
    if (depth == k) {
      if (unhit != intervals.size()) return;
      if (++produced > budget) {
        throw budget_exceeded("candidate count exceeds search budget " + std::to_string(budget));
      }
      stop = !visit(chosen);
      return;
    }
    Position last = length - (k - depth - 1);
    if (unhit < intervals.size()) last = std::min(last, intervals[unhit].hi);
    for (Position p = from; p <= last && !stop; ++p) {
      std::size_t next_unhit = unhit;
      while (next_unhit < intervals.size() && intervals[next_unhit].lo <= p) ++next_unhit;
      chosen[depth] = p;
      self(self, depth + 1, p + 1, next_unhit);
    }
  };
  descend(descend, 0, 1, 0);
}

std::optional<std::size_t> smallest_attractor_size(const Word& text, std::size_t k_max,
                                                   const SearchOptions& options) {
  if (text.empty()) throw precondition_error("smallest attractor of the empty word");
  const AttractorVerifier verifier(text);
  std::vector<Interval> mus;
  if (options.prune_mus) mus = minimal_unique_substrings(text).intervals;
  for (std::size_t k = 1; k <= std::min(k_max, text.size()); ++k) {
    bool found = false;
    for_each_candidate(text.size(), k, mus, options.budget, [&](std::span<const Position> gamma) {
      found = verifier.accepts(gamma);
      return !found;
    });
    if (found) return k;
  }
  return std::nullopt;
}

}  // namespace strattr
