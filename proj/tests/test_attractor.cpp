#include <doctest.h>

#include <chrono>
#include <set>
#include <thread>

#include "oracles.hpp"
#include "strattr/attractor.hpp"
#include "strattr/enumeration.hpp"

using namespace strattr;

namespace {

std::set<std::size_t> as_set(const PositionSet& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("naive check: examples") {
  const Word d2 = Word::parse("abaa");
  CHECK(is_attractor_naive(d2, {2, 3}).is_attractor);
  const auto no = is_attractor_naive(d2, {3, 4});
  CHECK_FALSE(no.is_attractor);
  REQUIRE(no.witness);
  CHECK(*no.witness == Interval{2, 2});
  CHECK(is_attractor_naive(Word::parse("aaaa"), {1}).is_attractor);
}

TEST_CASE("naive check agrees with the string oracle") {
  for (const char* text : {"a", "ab", "abaa", "abaababa", "babbab", "aabbaabb"}) {
    const Word w = Word::parse(text);
    for (std::size_t k = 1; k <= 2; ++k) {
      for_each_candidate(w.size(), k, {}, UINT64_MAX, [&](std::span<const Position> g) {
        const PositionSet gamma(std::vector<Position>(g.begin(), g.end()));
        CHECK(is_attractor_naive(w, gamma).is_attractor == oracle::is_attractor(text, as_set(gamma)));
        return true;
      });
    }
  }
}

TEST_CASE("efficient check: examples") {
  const Word f7 = fib_word(7);
  CHECK(is_attractor(f7, {8, 13}).is_attractor);
  CHECK_FALSE(is_attractor(f7, {10, 13}).is_attractor);
  // Frozen from the string oracle.
  CHECK(is_attractor(fib_word(5), {4, 5}).is_attractor);
  const auto abaa = is_attractor(Word::parse("abaa"), {3, 4});
  CHECK_FALSE(abaa.is_attractor);
  CHECK(*abaa.witness == Interval{2, 2});
}

TEST_CASE("empty gamma and range errors") {
  const Word w = Word::parse("ab");
  const auto empty = is_attractor(w, {});
  CHECK_FALSE(empty.is_attractor);
  CHECK(*empty.witness == Interval{1, 1});
  CHECK(is_attractor_naive(w, {}) == empty);
  CHECK_THROWS_AS(is_attractor(w, {3}), precondition_error);
  CHECK_THROWS_AS(is_attractor_naive(w, {0}), precondition_error);
  CHECK_THROWS_AS(is_attractor(Word(), {}), precondition_error);
}

TEST_CASE("efficient and naive outcomes coincide, witness included") {
  for (int n = 0; n <= 7; ++n) {
    const Word w = fib_word(n);
    const AttractorVerifier verifier(w);
    for (std::size_t k = 1; k <= 2; ++k) {
      for_each_candidate(w.size(), k, {}, UINT64_MAX, [&](std::span<const Position> g) {
        const PositionSet gamma(std::vector<Position>(g.begin(), g.end()));
        const auto fast = verifier.check(gamma);
        CHECK(fast == is_attractor_naive(w, gamma));
        CHECK(verifier.accepts(g) == fast.is_attractor);
        return true;
      });
    }
  }
}

TEST_CASE("witness soundness") {
  const Word w = Word::parse("abbabaabbaababbab");
  for (std::size_t k = 1; k <= 2; ++k) {
    for_each_candidate(w.size(), k, {}, UINT64_MAX, [&](std::span<const Position> g) {
      const PositionSet gamma(std::vector<Position>(g.begin(), g.end()));
      const auto outcome = is_attractor(w, gamma);
      if (outcome.is_attractor) return true;
      const std::string t = w.str();
      const std::string sub = w.slice(outcome.witness->lo, outcome.witness->hi).str();
      for (std::size_t i = 0; i + sub.size() <= t.size(); ++i) {
        if (t.compare(i, sub.size(), sub) == 0) CHECK_FALSE(gamma.hits({i + 1, i + sub.size()}));
      }
      return true;
    });
  }
}

TEST_CASE("efficient check scales to 1e5 symbols") {
  const Word f = fib_word(24);  // 75025 symbols
  const auto start = std::chrono::steady_clock::now();
  const AttractorVerifier verifier(f);
  const Position pivot = fib_number(23);
  CHECK(verifier.check({pivot - 1, pivot}).is_attractor);
  CHECK_FALSE(verifier.check({1, 2}).is_attractor);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
}

TEST_CASE("minimal unique substrings: examples") {
  const auto f7 = minimal_unique_substrings(fib_word(7));
  CHECK(f7.intervals == std::vector<Interval>{{8, 12}, {13, 20}});
  REQUIRE(f7.substrings.size() == 2);
  CHECK(f7.substrings[0].str() == "aabaa");
  CHECK(f7.substrings[1].str() == "babaabab");

  const auto unary = minimal_unique_substrings(Word::parse("aaaa"));
  CHECK(unary.intervals == std::vector<Interval>{{1, 4}});

  const auto ab = minimal_unique_substrings(Word::parse("ab"));
  CHECK(ab.intervals == std::vector<Interval>{{1, 1}, {2, 2}});

  CHECK_THROWS_AS(minimal_unique_substrings(Word()), precondition_error);
}

TEST_CASE("minimal unique substrings match the definition on all short words") {
  for (std::size_t len = 1; len <= 11; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::string t;
      for (std::size_t i = 0; i < len; ++i) t += (bits >> i) & 1 ? 'b' : 'a';
      const auto report = minimal_unique_substrings(Word::parse(t));
      std::vector<std::pair<std::size_t, std::size_t>> got;
      for (const auto& iv : report.intervals) got.push_back({iv.lo, iv.hi});
      CHECK_MESSAGE(got == oracle::mus(t), t);
    }
  }
}

TEST_CASE("MUS intervals of F_n") {
  for (int n = 5; n <= 18; ++n) {
    const auto report = minimal_unique_substrings(fib_word(n));
    REQUIRE(report.intervals.size() == 2);
    CHECK(report.intervals[0] == Interval{fib_number(n - 2), fib_number(n - 1) - 1});
    CHECK(report.intervals[1] == Interval{fib_number(n - 1), fib_number(n) - 1});
    CHECK(report.substrings[0] == singular_word(n - 3));
    CHECK(report.substrings[1] == singular_word(n - 2));
  }
}

TEST_CASE("smallest attractor size") {
  CHECK(smallest_attractor_size(fib_word(4), 3) == 2);
  CHECK(smallest_attractor_size(Word::parse("a"), 1) == 1);
  CHECK(smallest_attractor_size(Word::parse("ab"), 2) == 2);
  CHECK_FALSE(smallest_attractor_size(Word::parse("ab"), 1).has_value());
  SearchOptions pruned;
  pruned.prune_mus = true;
  for (int n = 2; n <= 10; ++n) {
    CHECK(smallest_attractor_size(fib_word(n), 3) == 2);
    CHECK(smallest_attractor_size(fib_word(n), 3, pruned) == 2);
  }
}

TEST_CASE("search budget") {
  SearchOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(smallest_attractor_size(fib_word(6), 2, tiny), budget_exceeded);
  CHECK(binomial(13, 2) == 78);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(200, 100) == UINT64_MAX);
  // Pruning counts only hitting candidates.
  tiny.prune_mus = true;
  tiny.budget = 100;
  CHECK(smallest_attractor_size(fib_word(7), 2, tiny) == 2);
}

TEST_CASE("candidate generation") {
  std::vector<std::vector<Position>> all;
  for_each_candidate(4, 2, {}, UINT64_MAX, [&](std::span<const Position> g) {
    all.emplace_back(g.begin(), g.end());
    return true;
  });
  CHECK(all == std::vector<std::vector<Position>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});

  // Hitting sets of [1,2] and [4,5], cross-checked by filtering all 2-subsets.
  const std::vector<Interval> must{{1, 2}, {4, 5}};
  std::vector<std::vector<Position>> hitting;
  for_each_candidate(5, 2, must, UINT64_MAX, [&](std::span<const Position> g) {
    hitting.emplace_back(g.begin(), g.end());
    return true;
  });
  std::vector<std::vector<Position>> filtered;
  for_each_candidate(5, 2, {}, UINT64_MAX, [&](std::span<const Position> g) {
    const PositionSet s(std::vector<Position>(g.begin(), g.end()));
    if (s.hits(must[0]) && s.hits(must[1])) filtered.emplace_back(g.begin(), g.end());
    return true;
  });
  CHECK(hitting == filtered);
  CHECK(hitting.size() == 4);
}

TEST_CASE("MUS hitting and superset closure") {
  for (const Word& w : {fib_word(7), pd_word(4), Word::parse("abbbaababbaa")}) {
    const auto mus = minimal_unique_substrings(w);
    const auto family = enumerate_smallest_attractors(w);
    for (const auto& gamma : family.sets) {
      for (const auto& iv : mus.intervals) CHECK(gamma.hits(iv));
      for (Position extra = 1; extra <= w.size(); ++extra) {
        if (gamma.contains(extra)) continue;
        std::vector<Position> bigger = gamma.positions();
        bigger.push_back(extra);
        CHECK(is_attractor(w, PositionSet(bigger)).is_attractor);
      }
    }
  }
}

TEST_CASE("reversal maps attractors to attractors") {
  for (const Word& w : {fib_word(6), fib_word(8), pd_word(5)}) {
    const Word r = w.reversed();
    for (const auto& gamma : enumerate_smallest_attractors(w).sets) {
      CHECK(is_attractor(r, mirror(gamma, w.size())).is_attractor);
    }
  }
}

TEST_CASE("concurrent verification over a shared verifier") {
  const Word f = fib_word(14);
  const AttractorVerifier verifier(f);
  std::vector<int> accepted(4, 0);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (Position u = 1; u <= f.size(); ++u) {
        const std::vector<Position> gamma{u, fib_number(13)};
        if (u < gamma[1] && verifier.accepts(gamma)) ++accepted[static_cast<std::size_t>(t)];
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int a : accepted) CHECK(a == accepted.front());
  CHECK(accepted.front() > 0);
}
