#include "strattr/fib_characterization.hpp"

#include <string>

namespace strattr {

namespace {

Position fib_pos(int n) { return static_cast<Position>(fib_number(n)); }

void require(bool ok, int n, const char* what) {
  if (!ok) throw order_error(std::string(what) + ": order " + std::to_string(n) + " out of range");
}

int classifiable(int n) {
  require(n >= 7, n, "fib_invalid_pair_reason");
  return n;
}

}  // namespace

std::string_view to_string(NodeRole role) {
  switch (role) {
    case NodeRole::root: return "root";
    case NodeRole::root_child: return "root-child";
    case NodeRole::left: return "left";
    case NodeRole::center: return "center";
    case NodeRole::right: return "right";
  }
  return "?";
}

std::string_view to_string(InvalidReason reason) {
  switch (reason) {
    case InvalidReason::outside_mus: return "outside-mus";
    case InvalidReason::center_crossed: return "center-crossed";
    case InvalidReason::second_half_rule: return "second-half-rule";
    case InvalidReason::none: return "none";
  }
  return "?";
}

ParseTree::ParseTree(int n, const Caps& caps) : n_(n), length_(0) {
  require(n >= 1 && n <= caps.fib_max, n, "singular_parse_tree");
  length_ = fib_pos(n);
  nodes_.push_back({0, NodeRole::root, {1, length_}, {}});
  Position next = 1;
  std::vector<std::size_t> top;
  for (int i = 0; i <= n - 2; ++i) {
    top.push_back(build(i, NodeRole::root_child, next));
    next += fib_pos(i);
  }
  top.push_back(build((n - 1) % 2, NodeRole::root_child, next));
  nodes_.front().children = std::move(top);

  // Difference array over the spans of every center child.
  std::vector<int> delta(length_ + 2, 0);
  for (const auto& node : nodes_) {
    if (node.role != NodeRole::center || node.span.empty()) continue;
    ++delta[node.span.lo];
    --delta[node.span.hi + 1];
  }
  std::vector<Position> crossed;
  int depth = 0;
  for (Position p = 1; p <= length_; ++p) {
    depth += delta[p];
    if (depth > 0) crossed.push_back(p);
  }
  center_ = PositionSet(std::move(crossed));
}

std::size_t ParseTree::build(int order, NodeRole role, Position start) {
  const std::size_t length = order < 0 ? 0 : fib_pos(order);
  const std::size_t index = nodes_.size();
  nodes_.push_back({order, role, {start, start + length - 1}, {}});
  if (order >= 2) {
    const std::size_t side = fib_pos(order - 2);
    const std::size_t middle = order - 3 < 0 ? 0 : fib_pos(order - 3);
    std::vector<std::size_t> kids;
    kids.push_back(build(order - 2, NodeRole::left, start));
    kids.push_back(build(order - 3, NodeRole::center, start + side));
    kids.push_back(build(order - 2, NodeRole::right, start + side + middle));
    nodes_[index].children = std::move(kids);
  }
  return index;
}

const ParseNode& ParseTree::first_occurrence(int k) const {
  require(k >= 0 && k <= n_ - 2, k, "first_occurrence");
  return nodes_[root().children[static_cast<std::size_t>(k)]];
}

PositionSet center_child_positions(int n, const Caps& caps) {
  require(n >= 5, n, "center_child_positions");
  return ParseTree(n, caps).center_positions();
}

LrlSets lrl_sets(int k, const Caps& caps) {
  require(k >= 2 && k <= caps.fib_max, k, "lrl_sets");
  LrlSets even{2, {3}, {4}, {3, 4}};
  LrlSets odd{3, {5}, {7}, {5}};
  LrlSets& target = k % 2 == 0 ? even : odd;
  while (target.k < k) {
    const int next = target.k + 2;
    LrlSets grown;
    grown.k = next;
    grown.left = shift(set_union(target.left, target.right), fib_pos(next));
    grown.right = shift(grown.left, fib_pos(next - 1));
    grown.left_prime = shift(target.left_prime, fib_pos(next));
    target = std::move(grown);
  }
  return target;
}

LrlSets lrl_sets_from_parse(const ParseTree& tree, int k) {
  require(k >= 2 && k <= tree.order() - 2, k, "lrl_sets_from_parse");
  const ParseNode& u = tree.first_occurrence(k);
  const ParseNode& left_child = tree.node(u.children[0]);
  const ParseNode& right_child = tree.node(u.children[2]);
  const PositionSet& center = tree.center_positions();

  LrlSets out;
  out.k = k;
  out.left = set_difference(PositionSet::range(left_child.span.lo, left_child.span.hi), center);
  out.right = set_difference(PositionSet::range(right_child.span.lo, right_child.span.hi), center);

  const int target = 2 - (k % 2);
  const ParseNode* walk = &u;
  while (walk->order != target) walk = &tree.node(walk->children.front());
  out.left_prime = PositionSet::range(walk->span.lo, walk->span.hi);
  return out;
}

LrlSets lrl_sets_from_parse(int k, int n, const Caps& caps) {
  return lrl_sets_from_parse(ParseTree(n, caps), k);
}

Interval lmus(int n) {
  require(n >= 5, n, "lmus");
  return {fib_pos(n - 2), fib_pos(n - 1) - 1};
}

Interval rmus(int n) {
  require(n >= 5, n, "rmus");
  return {fib_pos(n - 1), fib_pos(n) - 1};
}

FibPairClassifier::FibPairClassifier(int n, const Caps& caps)
    : n_(n), tree_(classifiable(n), caps),
      lmus_(lmus(n)), rmus_(rmus(n)) {
  const ParseNode& s = tree_.first_occurrence(n - 2);
  second_half_ = tree_.node(s.children[2]).span;
}

InvalidReason FibPairClassifier::reason(const PositionSet& pair) const {
  if (pair.size() != 2) throw precondition_error("expected a position pair");
  const Position u = pair.min();
  const Position v = pair.max();
  if (!lmus_.crosses(u) || !rmus_.crosses(v)) return InvalidReason::outside_mus;
  const PositionSet& center = tree_.center_positions();
  if (center.contains(u) || center.contains(v)) return InvalidReason::center_crossed;
  if (u > lmus_.lo + 1 && second_half_.contains(v)) return InvalidReason::second_half_rule;
  return InvalidReason::none;
}

InvalidReason fib_invalid_pair_reason(int n, const PositionSet& pair, const Caps& caps) {
  return FibPairClassifier(n, caps).reason(pair);
}

AttractorFamily fib_attractors_closed_form(int n, const Caps& caps) {
  require(n >= 7 && n <= caps.fib_max, n, "fib_attractors_closed_form");
  const LrlSets outer = lrl_sets(n - 3, caps);
  const LrlSets inner = lrl_sets(n - 2, caps);
  auto pairs = pair_product(set_union(outer.left, outer.right), inner.left);
  auto extra = pair_product(outer.left_prime, inner.right);
  pairs.insert(pairs.end(), extra.begin(), extra.end());
  return make_family(2, std::move(pairs));
}

std::uint64_t fib_attractor_count(int n) {
  require(n >= 7 && n <= 66, n, "fib_attractor_count");
  const int k = (n + 1) / 2;
  auto pow2 = [](int e) { return std::uint64_t{1} << e; };
  if (n % 2 == 1) return (pow2(k - 3) + 1) * pow2(k - 2);
  return (pow2(k - 2) + 1) * pow2(k - 2);
}

PositionSet mantaci_gamma1(int n) {
  require(n >= 3, n, "mantaci_gamma1");
  const Position f = fib_pos(n - 1);
  return {f - 1, f};
}

}  // namespace strattr
