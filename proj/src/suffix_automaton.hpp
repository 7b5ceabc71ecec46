#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "strattr/words.hpp"

namespace strattr::detail {

// Suffix automaton over {a, b}. State 0 is the root (the empty string).
// Every distinct non-empty substring belongs to exactly one state v and has
// length in (len(link(v)), len(v)]; all substrings of v share the end-position
// set endpos(v).
class SuffixAutomaton {
 public:
  struct State {
    int len = 0;
    int link = -1;
    std::array<int, 2> next{-1, -1};
    Position first_end = 0;  // smallest element of endpos, 1-based
  };

  explicit SuffixAutomaton(std::span<const Symbol> text);

  std::size_t text_size() const { return prefix_state_.size(); }
  const std::vector<State>& states() const { return states_; }
  int min_len(int v) const { return states_[static_cast<std::size_t>(states_[v].link)].len + 1; }

  // State holding the whole prefix T[1..e].
  int prefix_state(Position e) const { return prefix_state_[e - 1]; }

  // Non-root states sorted by decreasing len (children before suffix-link parents).
  const std::vector<int>& by_len_desc() const { return by_len_desc_; }

  // |endpos(v)|
  const std::vector<std::uint32_t>& occurrences() const { return occurrences_; }

 private:
  std::vector<State> states_;
  std::vector<int> prefix_state_;
  std::vector<int> by_len_desc_;
  std::vector<std::uint32_t> occurrences_;
};

}  // namespace strattr::detail
