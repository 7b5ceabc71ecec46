#include "strattr/enumeration.hpp"

#include <algorithm>

namespace strattr {

bool AttractorFamily::contains(const PositionSet& set) const {
  return std::binary_search(sets.begin(), sets.end(), set);
}

AttractorFamily make_family(std::size_t size_k, std::vector<PositionSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return {size_k, std::move(sets)};
}

std::vector<PositionSet> enumerate_attractors_of_size(const Word& text, std::size_t k,
                                                      const SearchOptions& options) {
  if (k == 0) throw precondition_error("attractor size must be positive");
  if (text.empty()) throw precondition_error("attractors of the empty word");
  const AttractorVerifier verifier(text);
  std::vector<Interval> mus;
  if (options.prune_mus) mus = minimal_unique_substrings(text).intervals;
  std::vector<PositionSet> found;
  for_each_candidate(text.size(), k, mus, options.budget, [&](std::span<const Position> gamma) {
    if (verifier.accepts(gamma)) {
      found.emplace_back(std::vector<Position>(gamma.begin(), gamma.end()));
    }
    return true;
  });
  // Candidates arrive in lexicographic order already.
  return found;
}

AttractorFamily enumerate_smallest_attractors(const Word& text, const SearchOptions& options) {
  const auto k = smallest_attractor_size(text, text.size(), options);
  // The full position set is always an attractor, so k is present.
  return make_family(*k, enumerate_attractors_of_size(text, *k, options));
}

AttractorFamily mirror(const AttractorFamily& family, std::size_t length) {
  std::vector<PositionSet> mapped;
  mapped.reserve(family.sets.size());
  for (const auto& set : family.sets) mapped.push_back(mirror(set, length));
  return make_family(family.size_k, std::move(mapped));
}

std::string to_text(const AttractorFamily& family) {
  std::string out;
  for (const auto& set : family.sets) {
    out += set.str();
    out += '\n';
  }
  return out;
}

}  // namespace strattr
