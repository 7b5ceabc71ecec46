#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strattr/errors.hpp"

namespace strattr {

/// 1-based position inside a word.
using Position = std::size_t;

enum class Symbol : std::uint8_t { a = 0, b = 1 };

constexpr char to_char(Symbol s) { return s == Symbol::a ? 'a' : 'b'; }
constexpr Symbol complement(Symbol s) {
  return s == Symbol::a ? Symbol::b : Symbol::a;
}

/// Immutable binary word over {a, b}. All positional accessors are 1-based.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  /// Parses 'a'/'b' text; any other character throws precondition_error.
  static Word parse(std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  /// Symbol at 1-based position `pos`; throws std::out_of_range.
  Symbol at(Position pos) const;

  std::span<const Symbol> symbols() const { return symbols_; }

  /// Substring [lo..hi], 1-based and inclusive. lo == hi + 1 yields ε.
  Word slice(Position lo, Position hi) const;

  Word reversed() const;
  bool is_palindrome() const;
  std::string str() const;

  friend Word operator+(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Upper bounds on generated word orders. Fibonacci order 30 has length
/// f_30 = 1,346,269; period-doubling order 21 has length 2^21.
struct Caps {
  int fib_max = 30;
  int pd_max = 21;
};

/// Reads STRATTR_FIB_CAP / STRATTR_PD_CAP on top of the defaults.
Caps caps_from_env();

/// f_n with f_0 = f_1 = 1. Throws order_error if n < 0 or f_n overflows 64 bits.
std::uint64_t fib_number(int n);

Word fib_word(int n, const Caps& caps = {});

/// (G_n, Δ_n) with F_n = G_n Δ_n. Orders 0 and 1 yield (ε, Δ_{n mod 2}).
std::pair<Word, Word> g_delta(int n, const Caps& caps = {});

/// S_n for n >= -1; S_{-1} is the empty word.
Word singular_word(int n, const Caps& caps = {});

struct Span {
  Position lo = 1;
  Position hi = 0;  // hi == lo - 1 encodes an empty span

  std::size_t length() const { return hi + 1 - lo; }
  bool empty() const { return hi + 1 == lo; }
  bool contains(Position p) const { return lo <= p && p <= hi; }
  friend bool operator==(const Span&, const Span&) = default;
};

/// F_n = S_0 S_1 ... S_{n-2} S_{(n-1) mod 2}.
struct SingularFactorization {
  int n = 0;
  std::vector<int> factors;  // singular-word orders
  std::vector<Span> spans;
};

SingularFactorization fib_singular_factorization(int n, const Caps& caps = {});

/// Concatenation of the factors, for checking against fib_word(n).
Word expand(const SingularFactorization& factorization, const Caps& caps = {});

/// D_n = φ^n(a) with φ(a) = ab, φ(b) = aa.
Word pd_word(int n, const Caps& caps = {});

/// Memoizing generator. Safe for concurrent use; returned words are shared
/// and immutable.
class WordGenerator {
 public:
  explicit WordGenerator(Caps caps = {}) : caps_(caps) {}

  const Caps& caps() const { return caps_; }

  std::shared_ptr<const Word> fib(int n);
  std::shared_ptr<const Word> singular(int n);
  std::shared_ptr<const Word> period_doubling(int n);

 private:
  enum class Family { fib, singular, pd };

  template <class Make>
  std::shared_ptr<const Word> cached(Family family, int n, Make make);

  Caps caps_;
  std::mutex mutex_;
  std::map<std::pair<Family, int>, std::shared_ptr<const Word>> cache_;
};

}  // namespace strattr
