#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "strattr/enumeration.hpp"
#include "strattr/position_set.hpp"
#include "strattr/words.hpp"

namespace strattr {

enum class NodeRole { root, root_child, left, center, right };

std::string_view to_string(NodeRole role);

/// Node of the singular-word derivation of F_n. `order` is the singular-word
/// index i of S_i; it is meaningless for the root.
struct ParseNode {
  int order = 0;
  NodeRole role = NodeRole::root;
  Span span;
  std::vector<std::size_t> children;  // indices into ParseTree::nodes()
};

/// Derivation tree of F_n under
///   F_n -> S_0 S_1 ... S_{n-2} S_{(n-1) mod 2},  S_i -> S_{i-2} S_{i-3} S_{i-2}.
/// Every occurrence of any S_i (i >= 0) in F_n is the span of some node.
class ParseTree {
 public:
  ParseTree(int n, const Caps& caps = {});

  int order() const { return n_; }
  std::size_t word_length() const { return length_; }
  const std::vector<ParseNode>& nodes() const { return nodes_; }
  const ParseNode& root() const { return nodes_.front(); }
  const ParseNode& node(std::size_t index) const { return nodes_[index]; }

  /// Node of the first occurrence of S_k (the root child of order k), k <= n-2.
  const ParseNode& first_occurrence(int k) const;

  /// Positions crossed by some center child.
  const PositionSet& center_positions() const { return center_; }

 private:
  std::size_t build(int order, NodeRole role, Position start);

  int n_;
  std::size_t length_;
  std::vector<ParseNode> nodes_;
  PositionSet center_;
};

inline ParseTree singular_parse_tree(int n, const Caps& caps = {}) { return ParseTree(n, caps); }

/// Positions of F_n crossed by a center child anywhere in its parse tree; n >= 5.
PositionSet center_child_positions(int n, const Caps& caps = {});

/// The sets L_k, R_k and L'_k inside the first occurrence of S_k.
struct LrlSets {
  int k = 0;
  PositionSet left;        // L_k
  PositionSet right;       // R_k
  PositionSet left_prime;  // L'_k

  friend bool operator==(const LrlSets&, const LrlSets&) = default;
};

/// By the shift recurrences from the base cases k = 2, 3.
LrlSets lrl_sets(int k, const Caps& caps = {});

/// Read directly off the parse tree of F_n; requires 2 <= k <= n-2.
LrlSets lrl_sets_from_parse(const ParseTree& tree, int k);
LrlSets lrl_sets_from_parse(int k, int n, const Caps& caps = {});

/// Occurrence ranges of the two MUSs S_{n-3}, S_{n-2} of F_n (n >= 5).
Interval lmus(int n);
Interval rmus(int n);

enum class InvalidReason { outside_mus, center_crossed, second_half_rule, none };

std::string_view to_string(InvalidReason reason);

/// Classifies position pairs of F_n (n >= 7) by the first applicable
/// invalidation rule, in the order outside_mus, center_crossed,
/// second_half_rule.
class FibPairClassifier {
 public:
  explicit FibPairClassifier(int n, const Caps& caps = {});

  InvalidReason reason(const PositionSet& pair) const;

 private:
  int n_;
  ParseTree tree_;
  Interval lmus_;
  Interval rmus_;
  Span second_half_;
};

InvalidReason fib_invalid_pair_reason(int n, const PositionSet& pair, const Caps& caps = {});

/// ((L_{n-3} ∪ R_{n-3}) ⊗ L_{n-2}) ∪ (L'_{n-3} ⊗ R_{n-2}); n >= 7.
AttractorFamily fib_attractors_closed_form(int n, const Caps& caps = {});

/// |Att(F_n)| by the odd/even split: n = 2k-1 gives (2^{k-3}+1) 2^{k-2},
/// n = 2k gives (2^{k-2}+1) 2^{k-2}. Defined for 7 <= n <= 66.
std::uint64_t fib_attractor_count(int n);

/// {f_{n-1} - 1, f_{n-1}}, a known attractor of F_n for n >= 3.
PositionSet mantaci_gamma1(int n);

}  // namespace strattr
