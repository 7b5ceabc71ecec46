#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "strattr/attractor.hpp"
#include "strattr/position_set.hpp"

namespace strattr {

/// A family of equal-size attractors, sorted lexicographically on the
/// sorted position tuples, without duplicates.
struct AttractorFamily {
  std::size_t size_k = 0;
  std::vector<PositionSet> sets;

  bool contains(const PositionSet& set) const;
  friend bool operator==(const AttractorFamily&, const AttractorFamily&) = default;
};

/// Sorts and deduplicates `sets`.
AttractorFamily make_family(std::size_t size_k, std::vector<PositionSet> sets);

/// All size-k attractors of `text`, in canonical order.
std::vector<PositionSet> enumerate_attractors_of_size(const Word& text, std::size_t k,
                                                      const SearchOptions& options = {});

/// All smallest attractors of `text`.
AttractorFamily enumerate_smallest_attractors(const Word& text, const SearchOptions& options = {});

/// {mirror(Γ) : Γ ∈ family}, re-sorted: the family mapped onto the reversed word.
AttractorFamily mirror(const AttractorFamily& family, std::size_t length);

/// One set per line, positions comma-separated.
std::string to_text(const AttractorFamily& family);

}  // namespace strattr
