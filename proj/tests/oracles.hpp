#pragma once

// Test-only reference computations on plain std::string, independent of the
// library's generators, automaton and parse tree.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline std::string fib(int n) {
  std::string prev = "b";
  std::string cur = "a";
  if (n == 0) return prev;
  for (int i = 2; i <= n; ++i) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline std::string singular(int n) {
  std::map<int, std::string> s{{-1, ""}, {0, "a"}, {1, "b"}};
  for (int i = 2; i <= n; ++i) s[i] = s[i - 2] + s[i - 3] + s[i - 2];
  return s[n];
}

inline std::string period_doubling(int n) {
  std::string w = "a";
  for (int i = 0; i < n; ++i) {
    std::string next;
    for (char c : w) next += c == 'a' ? "ab" : "aa";
    w = std::move(next);
  }
  return w;
}

inline std::size_t count_occurrences(const std::string& text, const std::string& sub) {
  std::size_t count = 0;
  for (std::size_t i = 0; i + sub.size() <= text.size(); ++i) {
    if (text.compare(i, sub.size(), sub) == 0) ++count;
  }
  return count;
}

/// MUS occurrences [lo, hi] by definition: unique, and both one-symbol
/// shortenings repeat (ε repeats by convention).
inline std::vector<std::pair<std::size_t, std::size_t>> mus(const std::string& t) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t len = 1; i + len <= t.size(); ++len) {
      const std::string w = t.substr(i, len);
      if (count_occurrences(t, w) != 1) continue;
      const bool minimal = len == 1 || (count_occurrences(t, w.substr(1)) >= 2 &&
                                        count_occurrences(t, w.substr(0, len - 1)) >= 2);
      if (minimal) out.push_back({i + 1, i + len});
    }
  }
  return out;
}

/// Position sets (1-based) with every distinct substring crossing one of them.
inline bool is_attractor(const std::string& t, const std::set<std::size_t>& gamma) {
  std::map<std::string, bool> covered;
  for (std::size_t i = 1; i <= t.size(); ++i) {
    for (std::size_t j = i; j <= t.size(); ++j) {
      auto& c = covered[t.substr(i - 1, j - i + 1)];
      auto it = gamma.lower_bound(i);
      c = c || (it != gamma.end() && *it <= j);
    }
  }
  for (const auto& [s, c] : covered) {
    if (!c) return false;
  }
  return true;
}

inline std::size_t fibnum(int n) {
  std::size_t a = 1, b = 1;
  for (int i = 2; i <= n; ++i) {
    std::size_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

/// Positions of F_n covered by center children, walking the derivation by
/// offsets alone.
inline std::set<std::size_t> center_positions(int n) {
  std::set<std::size_t> out;
  auto len = [](int i) { return i < 0 ? std::size_t{0} : fibnum(i); };
  auto walk = [&](auto& self, int i, std::size_t start, bool center) -> void {
    if (center) {
      for (std::size_t p = start; p < start + len(i); ++p) out.insert(p);
    }
    if (i >= 2) {
      self(self, i - 2, start, false);
      self(self, i - 3, start + len(i - 2), true);
      self(self, i - 2, start + len(i - 2) + len(i - 3), false);
    }
  };
  std::size_t start = 1;
  for (int i = 0; i <= n - 2; ++i) {
    walk(walk, i, start, false);
    start += len(i);
  }
  return out;
}

}  // namespace oracle
