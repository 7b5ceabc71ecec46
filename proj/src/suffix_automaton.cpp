#include "suffix_automaton.hpp"

#include <algorithm>

namespace strattr::detail {

SuffixAutomaton::SuffixAutomaton(std::span<const Symbol> text) {
  states_.reserve(2 * text.size() + 1);
  states_.push_back({});
  std::vector<bool> cloned{false};
  int last = 0;
  Position e = 0;
  for (Symbol sym : text) {
    ++e;
    const auto c = static_cast<std::size_t>(sym);
    const int cur = static_cast<int>(states_.size());
    states_.push_back({states_[last].len + 1, -1, {-1, -1}, e});
    cloned.push_back(false);
    int p = last;
    while (p != -1 && states_[p].next[c] == -1) {
      states_[p].next[c] = cur;
      p = states_[p].link;
    }
    if (p == -1) {
      states_[cur].link = 0;
    } else {
      const int q = states_[p].next[c];
      if (states_[p].len + 1 == states_[q].len) {
        states_[cur].link = q;
      } else {
        const int clone = static_cast<int>(states_.size());
        State copy = states_[q];
        copy.len = states_[p].len + 1;
        states_.push_back(copy);
        cloned.push_back(true);
        while (p != -1 && states_[p].next[c] == q) {
          states_[p].next[c] = clone;
          p = states_[p].link;
        }
        states_[q].link = clone;
        states_[cur].link = clone;
      }
    }
    last = cur;
    prefix_state_.push_back(cur);
  }

  by_len_desc_.resize(states_.size() - 1);
  for (std::size_t v = 1; v < states_.size(); ++v) by_len_desc_[v - 1] = static_cast<int>(v);
  std::stable_sort(by_len_desc_.begin(), by_len_desc_.end(),
                   [&](int x, int y) { return states_[x].len > states_[y].len; });

  occurrences_.assign(states_.size(), 0);
  for (std::size_t v = 1; v < states_.size(); ++v) occurrences_[v] = cloned[v] ? 0 : 1;
  for (int v : by_len_desc_) occurrences_[static_cast<std::size_t>(states_[v].link)] += occurrences_[v];
}

}  // namespace strattr::detail
