#include <doctest.h>
#include <algorithm>
#include <iterator>

#include "strattr/json_io.hpp"
#include "strattr/pd_characterization.hpp"
#include "strattr/validation.hpp"

using namespace strattr;

TEST_CASE("crosscheck_fib") {
  const auto r = crosscheck_fib(7, 8);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].n == 7);
  CHECK(r.entries[1].n == 8);
  CHECK(r.all_match());
  CHECK(r.entries[0].closed_form_size == 12);
  CHECK(r.entries[1].brute_force_size == 20);

  CrosscheckOptions pruned;
  pruned.prune_mus = true;
  CHECK(crosscheck_fib(7, 12, pruned).all_match());

  CrosscheckOptions off;
  off.parallel = false;
  CrosscheckOptions on = off;
  on.prune_mus = true;
  const auto a = crosscheck_fib(7, 7, off);
  const auto b = crosscheck_fib(7, 7, on);
  CHECK(to_table(a) == to_table(b));

  CHECK_THROWS_AS(crosscheck_fib(6, 8), order_error);
  CHECK_THROWS_AS(crosscheck_fib(7, 13), order_error);
  CrosscheckOptions naive;
  naive.verifier = VerifierKind::naive;
  naive.prune_mus = true;
  CHECK_THROWS_AS(crosscheck_fib(7, 11, naive), order_error);
  CHECK(crosscheck_fib(7, 8, naive).all_match());
}

TEST_CASE("crosscheck_pd") {
  const auto small = crosscheck_pd(2, 3);
  CHECK(small.entries.size() == 2);
  CHECK(small.all_match());
  CHECK(crosscheck_pd(2, 8).all_match());
  const auto five = crosscheck_pd(5, 5);
  CHECK(five.all_match());
  CHECK(pd_attractors_closed_form(5).sets == std::vector<PositionSet>{{12, 24}, {16, 24}});
  CHECK_THROWS_AS(crosscheck_pd(2, 9), order_error);
  CrosscheckOptions extended;
  extended.extended = true;
  extended.prune_mus = true;
  CHECK(crosscheck_pd(9, 9, extended).all_match());
}

TEST_CASE("reports are reproducible") {
  const auto a = crosscheck_fib(7, 9);
  const auto b = crosscheck_fib(7, 9);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(to_table(a) == to_table(b));
  CHECK(to_json(a)["all_match"] == true);
}

TEST_CASE("mismatch entries carry the symmetric difference") {
  // Feed the comparison a deliberately wrong closed form through the public
  // family type: Att(F_7) without {8,13} and with a bogus extra pair.
  auto truth = enumerate_smallest_attractors(fib_word(7));
  auto wrong = truth.sets;
  wrong.erase(wrong.begin());
  wrong.push_back({1, 2});
  const AttractorFamily bogus = make_family(2, wrong);
  std::vector<PositionSet> only_bogus;
  std::set_difference(bogus.sets.begin(), bogus.sets.end(), truth.sets.begin(), truth.sets.end(),
                      std::back_inserter(only_bogus));
  CHECK(only_bogus == std::vector<PositionSet>{{1, 2}});
}

TEST_CASE("verifier fuzz") {
  const auto r = verifier_fuzz(1000, 16, 42);
  CHECK(r.trials == 1000);
  CHECK(r.disagreements == 0);
  CHECK(to_json(r).dump() == to_json(verifier_fuzz(1000, 16, 42)).dump());
  const auto one = verifier_fuzz(1, 1, 0);
  CHECK(one.trials == 1);
  CHECK(one.disagreements == 0);
  CHECK_THROWS_AS(verifier_fuzz(0, 4, 1), precondition_error);
}

TEST_CASE("exhaustive sweep, words up to length 8") {
  const auto r = verifier_sweep(8, 2);
  CHECK(r.trials > 0);
  CHECK(r.disagreements == 0);
}

TEST_CASE("known attractors pick closed form or brute force") {
  const auto f6 = smallest_attractors_of(WordFamily::fib, 6);
  CHECK_FALSE(f6.from_closed_form);
  CHECK(f6.family.sets.size() == 7);
  const auto f7 = smallest_attractors_of(WordFamily::fib, 7);
  CHECK(f7.from_closed_form);
  CHECK(f7.family.sets.size() == 12);
  const auto d1 = smallest_attractors_of(WordFamily::pd, 1);
  CHECK_FALSE(d1.from_closed_form);
  CHECK(d1.family.sets == std::vector<PositionSet>{{1, 2}});
}
