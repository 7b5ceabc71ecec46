#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "strattr/words.hpp"

namespace strattr {

/// Closed interval [lo..hi] of 1-based positions, lo <= hi.
struct Interval {
  Position lo = 1;
  Position hi = 1;

  std::size_t length() const { return hi - lo + 1; }
  bool crosses(Position p) const { return lo <= p && p <= hi; }
  auto operator<=>(const Interval&) const = default;
};

/// Sorted, duplicate-free set of 1-based positions.
class PositionSet {
 public:
  PositionSet() = default;
  PositionSet(std::initializer_list<Position> positions)
      : PositionSet(std::vector<Position>(positions)) {}
  explicit PositionSet(std::vector<Position> positions) : positions_(std::move(positions)) {
    std::sort(positions_.begin(), positions_.end());
    positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
  }

  /// All positions lo..hi.
  static PositionSet range(Position lo, Position hi);

  std::size_t size() const { return positions_.size(); }
  bool empty() const { return positions_.empty(); }
  bool contains(Position p) const {
    return std::binary_search(positions_.begin(), positions_.end(), p);
  }
  Position min() const { return positions_.front(); }
  Position max() const { return positions_.back(); }

  const std::vector<Position>& positions() const { return positions_; }
  auto begin() const { return positions_.begin(); }
  auto end() const { return positions_.end(); }

  /// True when some position lies in [iv.lo..iv.hi].
  bool hits(const Interval& iv) const;

  /// Throws precondition_error unless every position lies in 1..length.
  void require_within(std::size_t length) const;

  /// "p,q,r"
  std::string str() const;
  /// Parses "p,q,r" (1-based decimal, "" for the empty set); throws precondition_error.
  static PositionSet parse(const std::string& text);

  auto operator<=>(const PositionSet&) const = default;

 private:
  std::vector<Position> positions_;
};

/// X ⊕ i = {x + i}.
PositionSet shift(const PositionSet& set, Position offset);
/// i ⊖ X = {i - x}; every x must be < i.
PositionSet reflect(Position pivot, const PositionSet& set);
PositionSet set_union(const PositionSet& lhs, const PositionSet& rhs);
PositionSet set_difference(const PositionSet& lhs, const PositionSet& rhs);
PositionSet restrict_to(const PositionSet& set, Position lo, Position hi);

/// X ⊗ Y as a sorted list of two-element sets. Equal elements (x == y) are
/// rejected with precondition_error since they would collapse to a singleton.
std::vector<PositionSet> pair_product(const PositionSet& lhs, const PositionSet& rhs);

/// Maps each position p of a word of the given length to length - p + 1.
PositionSet mirror(const PositionSet& set, std::size_t length);

}  // namespace strattr
