#include "strattr/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <iterator>
#include <random>

#include "strattr/fib_characterization.hpp"
#include "strattr/pd_characterization.hpp"

namespace strattr {

std::string_view to_string(WordFamily family) {
  return family == WordFamily::fib ? "fib" : "pd";
}

bool CrosscheckReport::all_match() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.match; });
}

int brute_force_cap(WordFamily family, const CrosscheckOptions& options) {
  if (family == WordFamily::fib) return options.verifier == VerifierKind::naive ? 10 : 12;
  return options.extended ? 9 : 8;
}

AttractorFamily brute_force_attractors(const Word& text, const CrosscheckOptions& options) {
  SearchOptions search;
  search.prune_mus = options.prune_mus;
  if (options.verifier == VerifierKind::efficient) return enumerate_smallest_attractors(text, search);

  std::vector<Interval> mus;
  if (search.prune_mus) mus = minimal_unique_substrings(text).intervals;
  for (std::size_t k = 1; k <= text.size(); ++k) {
    std::vector<PositionSet> found;
    for_each_candidate(text.size(), k, mus, search.budget, [&](std::span<const Position> gamma) {
      PositionSet set(std::vector<Position>(gamma.begin(), gamma.end()));
      if (is_attractor_naive(text, set).is_attractor) found.push_back(std::move(set));
      return true;
    });
    if (!found.empty()) return make_family(k, std::move(found));
  }
  return {};
}

namespace {

CrosscheckEntry compare(int n, const AttractorFamily& closed, const AttractorFamily& brute) {
  CrosscheckEntry entry;
  entry.n = n;
  entry.closed_form_size = closed.sets.size();
  entry.brute_force_size = brute.sets.size();
  std::set_difference(closed.sets.begin(), closed.sets.end(), brute.sets.begin(),
                      brute.sets.end(), std::back_inserter(entry.only_closed_form));
  std::set_difference(brute.sets.begin(), brute.sets.end(), closed.sets.begin(),
                      closed.sets.end(), std::back_inserter(entry.only_brute_force));
  entry.match = closed.size_k == brute.size_k && entry.only_closed_form.empty() &&
                entry.only_brute_force.empty();
  return entry;
}

template <class CheckOrder>
CrosscheckReport run_orders(WordFamily family, int n_lo, int n_hi, const CrosscheckOptions& options,
                            CheckOrder check) {
  CrosscheckReport report{family, options, {}};
  auto timed = [&](int n) {
    const auto start = std::chrono::steady_clock::now();
    CrosscheckEntry entry = check(n);
    entry.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                       .count();
    return entry;
  };
  if (options.parallel) {
    std::vector<std::future<CrosscheckEntry>> pending;
    for (int n = n_lo; n <= n_hi; ++n) pending.push_back(std::async(std::launch::async, timed, n));
    for (auto& f : pending) report.entries.push_back(f.get());
  } else {
    for (int n = n_lo; n <= n_hi; ++n) report.entries.push_back(timed(n));
  }
  return report;
}

void require_orders(WordFamily family, int lowest, int n_lo, int n_hi,
                    const CrosscheckOptions& options) {
  const int cap = brute_force_cap(family, options);
  if (n_lo < lowest || n_hi < n_lo || n_hi > cap) {
    throw order_error("crosscheck " + std::string(to_string(family)) + ": orders [" +
                      std::to_string(n_lo) + ", " + std::to_string(n_hi) + "] outside [" +
                      std::to_string(lowest) + ", " + std::to_string(cap) + "]");
  }
}

}  // namespace

CrosscheckReport crosscheck_fib(int n_lo, int n_hi, const CrosscheckOptions& options) {
  require_orders(WordFamily::fib, 7, n_lo, n_hi, options);
  return run_orders(WordFamily::fib, n_lo, n_hi, options, [&](int n) {
    return compare(n, fib_attractors_closed_form(n), brute_force_attractors(fib_word(n), options));
  });
}

CrosscheckReport crosscheck_pd(int n_lo, int n_hi, const CrosscheckOptions& options) {
  require_orders(WordFamily::pd, 2, n_lo, n_hi, options);
  return run_orders(WordFamily::pd, n_lo, n_hi, options, [&](int n) {
    return compare(n, pd_attractors_closed_form(n), brute_force_attractors(pd_word(n), options));
  });
}

namespace {

void record(FuzzReport& report, const Word& text, const PositionSet& gamma) {
  ++report.trials;
  VerifyOutcome naive = is_attractor_naive(text, gamma);
  VerifyOutcome fast = is_attractor(text, gamma);
  if (naive == fast) return;
  ++report.disagreements;
  if (report.examples.size() < 5) report.examples.push_back({text, gamma, naive, fast});
}

}  // namespace

FuzzReport verifier_fuzz(std::uint64_t trials, std::size_t max_len, std::uint64_t seed) {
  if (trials == 0 || max_len == 0) throw precondition_error("verifier_fuzz needs trials, max_len >= 1");
  // Plain modular reduction keeps the stream identical across standard libraries.
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t bound) { return rng() % bound; };
  FuzzReport report;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::size_t len = 1 + below(max_len);
    std::vector<Symbol> symbols(len);
    for (auto& s : symbols) s = below(2) ? Symbol::b : Symbol::a;
    const std::size_t gamma_size = below(4);
    std::vector<Position> positions;
    for (std::size_t i = 0; i < gamma_size; ++i) positions.push_back(1 + below(len));
    record(report, Word(std::move(symbols)), PositionSet(std::move(positions)));
  }
  return report;
}

FuzzReport verifier_sweep(std::size_t max_len, std::size_t max_gamma) {
  FuzzReport report;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::vector<Symbol> symbols(len);
      for (std::size_t i = 0; i < len; ++i) symbols[i] = (bits >> i) & 1 ? Symbol::b : Symbol::a;
      const Word text(std::move(symbols));
      record(report, text, PositionSet{});
      for (std::size_t k = 1; k <= std::min(max_gamma, len); ++k) {
        for_each_candidate(len, k, {}, UINT64_MAX, [&](std::span<const Position> gamma) {
          record(report, text, PositionSet(std::vector<Position>(gamma.begin(), gamma.end())));
          return true;
        });
      }
    }
  }
  return report;
}

KnownAttractors smallest_attractors_of(WordFamily family, int n, const Caps& caps) {
  KnownAttractors out;
  if (family == WordFamily::fib) {
    out.word = fib_word(n, caps);
    out.from_closed_form = n >= 7;
    out.family = out.from_closed_form ? fib_attractors_closed_form(n, caps)
                                      : enumerate_smallest_attractors(out.word);
  } else {
    out.word = pd_word(n, caps);
    out.from_closed_form = n >= 2;
    out.family = out.from_closed_form ? pd_attractors_closed_form(n, caps)
                                      : enumerate_smallest_attractors(out.word);
  }
  return out;
}

std::string to_table(const CrosscheckReport& report, bool with_timing) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-6s %4s  %-8s %8s %8s%s\n", "family", "n", "status",
                "closed", "brute", with_timing ? "       ms" : "");
  out += line;
  for (const auto& e : report.entries) {
    std::snprintf(line, sizeof line, "%-6s %4d  %-8s %8zu %8zu", to_string(report.family).data(),
                  e.n, e.match ? "match" : "MISMATCH", e.closed_form_size, e.brute_force_size);
    out += line;
    if (with_timing) {
      std::snprintf(line, sizeof line, " %9.1f", e.millis);
      out += line;
    }
    out += '\n';
    for (const auto& s : e.only_closed_form) out += "    closed form only: {" + s.str() + "}\n";
    for (const auto& s : e.only_brute_force) out += "    brute force only: {" + s.str() + "}\n";
  }
  return out;
}

}  // namespace strattr
