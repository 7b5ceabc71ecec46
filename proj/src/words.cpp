#include "strattr/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace strattr {

namespace {

void require_fib_order(int n, int lowest, const Caps& caps, const char* what) {
  if (n < lowest || n > caps.fib_max) {
    throw order_error(std::string(what) + ": order " + std::to_string(n) +
                      " outside [" + std::to_string(lowest) + ", " +
                      std::to_string(caps.fib_max) + "]");
  }
}

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 0 || value > 62) {
    throw precondition_error(std::string(name) + " must be an integer in [0, 62]");
  }
  return static_cast<int>(value);
}

}  // namespace

Word Word::parse(std::string_view text) {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    if (c == 'a') {
      symbols.push_back(Symbol::a);
    } else if (c == 'b') {
      symbols.push_back(Symbol::b);
    } else {
      throw precondition_error(std::string("word contains non-{a,b} character '") + c + "'");
    }
  }
  return Word(std::move(symbols));
}

Symbol Word::at(Position pos) const {
  if (pos < 1 || pos > symbols_.size()) {
    throw std::out_of_range("position " + std::to_string(pos) + " outside 1.." +
                            std::to_string(symbols_.size()));
  }
  return symbols_[pos - 1];
}

Word Word::slice(Position lo, Position hi) const {
  if (lo < 1 || hi > symbols_.size() || lo > hi + 1) {
    throw std::out_of_range("slice [" + std::to_string(lo) + ".." + std::to_string(hi) +
                            "] outside 1.." + std::to_string(symbols_.size()));
  }
  return Word(std::vector<Symbol>(symbols_.begin() + (lo - 1), symbols_.begin() + hi));
}

Word Word::reversed() const {
  return Word(std::vector<Symbol>(symbols_.rbegin(), symbols_.rend()));
}

bool Word::is_palindrome() const {
  return std::equal(symbols_.begin(), symbols_.begin() + symbols_.size() / 2,
                    symbols_.rbegin());
}

std::string Word::str() const {
  std::string out(symbols_.size(), 'a');
  std::transform(symbols_.begin(), symbols_.end(), out.begin(), to_char);
  return out;
}

Word operator+(const Word& lhs, const Word& rhs) {
  std::vector<Symbol> joined;
  joined.reserve(lhs.size() + rhs.size());
  joined.insert(joined.end(), lhs.symbols_.begin(), lhs.symbols_.end());
  joined.insert(joined.end(), rhs.symbols_.begin(), rhs.symbols_.end());
  return Word(std::move(joined));
}

Caps caps_from_env() {
  Caps caps;
  caps.fib_max = env_int("STRATTR_FIB_CAP", caps.fib_max);
  caps.pd_max = env_int("STRATTR_PD_CAP", caps.pd_max);
  return caps;
}

std::uint64_t fib_number(int n) {
  if (n < 0) throw order_error("fib_number: negative order");
  std::uint64_t prev = 1;
  std::uint64_t cur = 1;
  for (int i = 2; i <= n; ++i) {
    if (cur > std::numeric_limits<std::uint64_t>::max() - prev) {
      throw order_error("fib_number: f_" + std::to_string(n) + " overflows 64 bits");
    }
    std::uint64_t next = cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Word fib_word(int n, const Caps& caps) {
  require_fib_order(n, 0, caps, "fib_word");
  if (n == 0) return Word({Symbol::b});
  std::vector<Symbol> prev{Symbol::b};
  std::vector<Symbol> cur{Symbol::a};
  for (int i = 2; i <= n; ++i) {
    std::vector<Symbol> next;
    next.reserve(cur.size() + prev.size());
    next.insert(next.end(), cur.begin(), cur.end());
    next.insert(next.end(), prev.begin(), prev.end());
    prev = std::move(cur);
    cur = std::move(next);
  }
  return Word(std::move(cur));
}

std::pair<Word, Word> g_delta(int n, const Caps& caps) {
  require_fib_order(n, 0, caps, "g_delta");
  Word delta_even = Word({Symbol::a, Symbol::b});
  Word delta_odd = Word({Symbol::b, Symbol::a});
  if (n < 2) return {Word(), n == 0 ? delta_even : delta_odd};
  Word f = fib_word(n, caps);
  return {f.slice(1, f.size() - 2), f.slice(f.size() - 1, f.size())};
}

Word singular_word(int n, const Caps& caps) {
  require_fib_order(n, -1, caps, "singular_word");
  // Rolling window over (S_{i-3}, S_{i-2}, S_{i-1}), starting at i = 2.
  std::vector<std::vector<Symbol>> s{{}, {Symbol::a}, {Symbol::b}};
  if (n < 2) return Word(s[static_cast<std::size_t>(n + 1)]);
  for (int i = 2; i <= n; ++i) {
    std::vector<Symbol> next;
    next.reserve(2 * s[1].size() + s[0].size());
    next.insert(next.end(), s[1].begin(), s[1].end());
    next.insert(next.end(), s[0].begin(), s[0].end());
    next.insert(next.end(), s[1].begin(), s[1].end());
    s.erase(s.begin());
    s.push_back(std::move(next));
  }
  return Word(std::move(s.back()));
}

SingularFactorization fib_singular_factorization(int n, const Caps& caps) {
  require_fib_order(n, 1, caps, "fib_singular_factorization");
  SingularFactorization out;
  out.n = n;
  Position next = 1;
  auto push = [&](int order) {
    Position len = static_cast<Position>(fib_number(order));
    out.factors.push_back(order);
    out.spans.push_back({next, next + len - 1});
    next += len;
  };
  for (int i = 0; i <= n - 2; ++i) push(i);
  push((n - 1) % 2);
  return out;
}

Word expand(const SingularFactorization& factorization, const Caps& caps) {
  std::vector<Symbol> joined;
  for (int order : factorization.factors) {
    Word s = singular_word(order, caps);
    joined.insert(joined.end(), s.symbols().begin(), s.symbols().end());
  }
  return Word(std::move(joined));
}

Word pd_word(int n, const Caps& caps) {
  if (n < 0 || n > caps.pd_max) {
    throw order_error("pd_word: order " + std::to_string(n) + " outside [0, " +
                      std::to_string(caps.pd_max) + "]");
  }
  std::vector<Symbol> cur{Symbol::a};
  for (int i = 1; i <= n; ++i) {
    std::vector<Symbol> next;
    next.reserve(2 * cur.size());
    for (Symbol s : cur) {
      next.push_back(Symbol::a);
      next.push_back(s == Symbol::a ? Symbol::b : Symbol::a);
    }
    cur = std::move(next);
  }
  return Word(std::move(cur));
}

template <class Make>
std::shared_ptr<const Word> WordGenerator::cached(Family family, int n, Make make) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find({family, n}); it != cache_.end()) return it->second;
  }
  // Built outside the lock; a racing duplicate build is discarded by emplace.
  auto built = std::make_shared<const Word>(make());
  std::lock_guard lock(mutex_);
  return cache_.emplace(std::pair{family, n}, std::move(built)).first->second;
}

std::shared_ptr<const Word> WordGenerator::fib(int n) {
  return cached(Family::fib, n, [&] { return fib_word(n, caps_); });
}

std::shared_ptr<const Word> WordGenerator::singular(int n) {
  return cached(Family::singular, n, [&] { return singular_word(n, caps_); });
}

std::shared_ptr<const Word> WordGenerator::period_doubling(int n) {
  return cached(Family::pd, n, [&] { return pd_word(n, caps_); });
}

}  // namespace strattr
