#include "strattr/position_set.hpp"

#include <charconv>
#include <iterator>

namespace strattr {

PositionSet PositionSet::range(Position lo, Position hi) {
  std::vector<Position> out;
  for (Position p = lo; p <= hi; ++p) out.push_back(p);
  return PositionSet(std::move(out));
}

bool PositionSet::hits(const Interval& iv) const {
  auto it = std::lower_bound(positions_.begin(), positions_.end(), iv.lo);
  return it != positions_.end() && *it <= iv.hi;
}

void PositionSet::require_within(std::size_t length) const {
  if (!positions_.empty() && (positions_.front() < 1 || positions_.back() > length)) {
    throw precondition_error("position set {" + str() + "} not within 1.." +
                             std::to_string(length));
  }
}

std::string PositionSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(positions_[i]);
  }
  return out;
}

PositionSet PositionSet::parse(const std::string& text) {
  std::vector<Position> out;
  if (text.empty()) return {};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const char* first = text.data() + start;
    const char* last = text.data() + comma;
    Position value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value == 0) {
      throw precondition_error("bad position list '" + text + "'");
    }
    out.push_back(value);
    start = comma + 1;
  }
  return PositionSet(std::move(out));
}

PositionSet shift(const PositionSet& set, Position offset) {
  std::vector<Position> out;
  out.reserve(set.size());
  for (Position p : set) out.push_back(p + offset);
  return PositionSet(std::move(out));
}

PositionSet reflect(Position pivot, const PositionSet& set) {
  std::vector<Position> out;
  out.reserve(set.size());
  for (Position p : set) {
    if (p >= pivot) throw precondition_error("reflect: element not below pivot");
    out.push_back(pivot - p);
  }
  return PositionSet(std::move(out));
}

PositionSet set_union(const PositionSet& lhs, const PositionSet& rhs) {
  std::vector<Position> out;
  std::set_union(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
  return PositionSet(std::move(out));
}

PositionSet set_difference(const PositionSet& lhs, const PositionSet& rhs) {
  std::vector<Position> out;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                      std::back_inserter(out));
  return PositionSet(std::move(out));
}

PositionSet restrict_to(const PositionSet& set, Position lo, Position hi) {
  std::vector<Position> out;
  for (Position p : set) {
    if (lo <= p && p <= hi) out.push_back(p);
  }
  return PositionSet(std::move(out));
}

std::vector<PositionSet> pair_product(const PositionSet& lhs, const PositionSet& rhs) {
  std::vector<PositionSet> out;
  out.reserve(lhs.size() * rhs.size());
  for (Position x : lhs) {
    for (Position y : rhs) {
      if (x == y) throw precondition_error("pair_product: coincident positions");
      out.push_back(PositionSet{x, y});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PositionSet mirror(const PositionSet& set, std::size_t length) {
  set.require_within(length);
  std::vector<Position> out;
  out.reserve(set.size());
  for (Position p : set) out.push_back(length - p + 1);
  return PositionSet(std::move(out));
}

}  // namespace strattr
