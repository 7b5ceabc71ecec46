// strattr: generate Fibonacci / singular / period-doubling words, verify and
// enumerate string attractors, and check the closed forms against brute force.
//
// Exit status: 0 success or match, 1 verification false or mismatch, 2 usage
// or input error.

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "strattr/attractor.hpp"
#include "strattr/enumeration.hpp"
#include "strattr/fib_characterization.hpp"
#include "strattr/json_io.hpp"
#include "strattr/pd_characterization.hpp"
#include "strattr/plot.hpp"
#include "strattr/validation.hpp"
#include "strattr/words.hpp"

namespace {

using namespace strattr;

constexpr int kUsageError = 2;

// Literal when made only of 'a'/'b', otherwise a file holding such a word.
Word load_word(const std::string& arg) {
  if (!arg.empty() && arg.find_first_not_of("ab") == std::string::npos) return Word::parse(arg);
  std::ifstream in(arg);
  if (!in) throw precondition_error("'" + arg + "' is neither an a/b literal nor a readable file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return Word::parse(text);
}

WordFamily family_of(const std::string& name) { return name == "fib" ? WordFamily::fib : WordFamily::pd; }

void print_family(const AttractorFamily& family, bool json, const std::string& label) {
  if (json) {
    std::cout << to_json(family).dump() << '\n';
    return;
  }
  std::cout << "# k = " << family.size_k << ", " << family.sets.size() << " attractors";
  if (!label.empty()) std::cout << " (" << label << ")";
  std::cout << '\n' << to_text(family);
}

void print_report(const CrosscheckReport& report, bool json, bool timing) {
  if (json) {
    std::cout << to_json(report, timing).dump() << '\n';
  } else {
    std::cout << to_table(report, timing);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String attractors of Fibonacci and period-doubling words"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  std::string family;
  int order = 0;

  auto* gen = app.add_subcommand("gen", "Generate a word");
  bool factorization = false;
  gen->add_option("family", family, "fib | sing | pd")->required()->check(CLI::IsMember({"fib", "sing", "pd"}));
  gen->add_option("n", order, "Order")->required();
  gen->add_flag("--factorization", factorization, "Singular-word factorization of F_n");

  auto* verify = app.add_subcommand("verify", "Check whether a position set is an attractor");
  std::string word_arg;
  std::string gamma_arg;
  bool naive = false;
  verify->add_option("--word", word_arg, "a/b literal or file")->required();
  verify->add_option("--gamma", gamma_arg, "Comma-separated 1-based positions")->required();
  verify->add_flag("--naive", naive, "Use the direct enumeration check");

  auto* mus = app.add_subcommand("mus", "Minimal unique substrings");
  mus->add_option("--word", word_arg, "a/b literal or file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "All smallest attractors by exhaustive search");
  bool prune = false;
  enumerate->add_option("--word", word_arg, "a/b literal or file")->required();
  enumerate->add_flag("--prune", prune, "Only try sets hitting every MUS");

  auto* closed = app.add_subcommand("closed-form", "Smallest attractors from the closed forms");
  closed->add_option("family", family, "fib | pd")->required()->check(CLI::IsMember({"fib", "pd"}));
  closed->add_option("n", order, "Order")->required();

  auto* cross = app.add_subcommand("crosscheck", "Closed form vs brute force over an order range");
  int lo = 0;
  int hi = 0;
  bool extended = false;
  bool timing = false;
  cross->add_option("family", family, "fib | pd")->required()->check(CLI::IsMember({"fib", "pd"}));
  cross->add_option("lo", lo, "First order")->required();
  cross->add_option("hi", hi, "Last order")->required();
  cross->add_flag("--prune", prune, "Only try sets hitting every MUS");
  cross->add_flag("--naive", naive, "Brute force with the direct enumeration check");
  cross->add_flag("--extended", extended, "Allow period-doubling order 9");
  cross->add_flag("--timing", timing, "Include per-order timings");

  auto* count = app.add_subcommand("count", "Number of smallest attractors of F_n");
  count->add_option("family", family, "fib")->required()->check(CLI::IsMember({"fib"}));
  count->add_option("n", order, "Order (>= 7)")->required();

  auto* plot_cmd = app.add_subcommand("plot", "Draw the smallest attractors");
  bool svg = false;
  plot_cmd->add_option("family", family, "fib | pd")->required()->check(CLI::IsMember({"fib", "pd"}));
  plot_cmd->add_option("n", order, "Order")->required();
  plot_cmd->add_flag("--svg", svg, "SVG instead of text");

  auto* lrl = app.add_subcommand("lrl", "The sets L_k, R_k, L'_k");
  int tree_order = 0;
  lrl->add_option("k", order, "Order (>= 2)")->required();
  lrl->add_option("--from-parse", tree_order, "Read them off the parse tree of F_N instead");

  auto* tree = app.add_subcommand("parse-tree", "Singular-word parse tree of F_n (JSON)");
  tree->add_option("n", order, "Order")->required();

  auto* reason = app.add_subcommand("reason", "Why a pair of F_n positions is not an attractor");
  std::string pair_arg;
  reason->add_option("n", order, "Order (>= 7)")->required();
  reason->add_option("--pair", pair_arg, "u,v")->required();

  auto* fuzz = app.add_subcommand("fuzz", "Compare the efficient and direct checks on random input");
  std::uint64_t trials = 1000;
  std::size_t max_len = 16;
  std::uint64_t seed = 42;
  fuzz->add_option("trials", trials)->capture_default_str();
  fuzz->add_option("max_len", max_len)->capture_default_str();
  fuzz->add_option("seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    const Caps caps = caps_from_env();

    if (gen->parsed()) {
      if (factorization) {
        if (family != "fib") throw precondition_error("--factorization applies to fib only");
        const auto f = fib_singular_factorization(order, caps);
        if (json) {
          std::cout << to_json(f).dump() << '\n';
        } else {
          for (std::size_t i = 0; i < f.factors.size(); ++i) {
            std::cout << "S_" << f.factors[i] << " [" << f.spans[i].lo << "," << f.spans[i].hi << "]\n";
          }
        }
        return 0;
      }
      const Word w = family == "fib" ? fib_word(order, caps)
                     : family == "sing" ? singular_word(order, caps)
                                        : pd_word(order, caps);
      if (json) {
        std::cout << nlohmann::ordered_json{{"family", family}, {"n", order}, {"word", w.str()}}.dump() << '\n';
      } else {
        std::cout << w.str() << '\n';
      }
      return 0;
    }

    if (verify->parsed()) {
      const Word w = load_word(word_arg);
      const PositionSet gamma = PositionSet::parse(gamma_arg);
      const VerifyOutcome outcome = naive ? is_attractor_naive(w, gamma) : is_attractor(w, gamma);
      if (json) {
        std::cout << to_json(outcome).dump() << '\n';
      } else if (outcome.is_attractor) {
        std::cout << "attractor\n";
      } else {
        const Interval iv = *outcome.witness;
        std::cout << "not an attractor; witness [" << iv.lo << "," << iv.hi << "] \""
                  << w.slice(iv.lo, iv.hi).str() << "\"\n";
      }
      return outcome.is_attractor ? 0 : 1;
    }

    if (mus->parsed()) {
      const MusReport report = minimal_unique_substrings(load_word(word_arg));
      if (json) {
        std::cout << to_json(report).dump() << '\n';
      } else {
        for (std::size_t i = 0; i < report.intervals.size(); ++i) {
          std::cout << "[" << report.intervals[i].lo << "," << report.intervals[i].hi << "] "
                    << report.substrings[i].str() << '\n';
        }
      }
      return 0;
    }

    if (enumerate->parsed()) {
      SearchOptions options;
      options.prune_mus = prune;
      print_family(enumerate_smallest_attractors(load_word(word_arg), options), json, "brute force");
      return 0;
    }

    if (closed->parsed()) {
      const auto known = smallest_attractors_of(family_of(family), order, caps);
      print_family(known.family, json, known.from_closed_form ? "closed form" : "brute force");
      return 0;
    }

    if (cross->parsed()) {
      CrosscheckOptions options;
      options.prune_mus = prune;
      options.verifier = naive ? VerifierKind::naive : VerifierKind::efficient;
      options.extended = extended;
      const auto report = family == "fib" ? crosscheck_fib(lo, hi, options) : crosscheck_pd(lo, hi, options);
      print_report(report, json, timing);
      return report.all_match() ? 0 : 1;
    }

    if (count->parsed()) {
      const auto c = fib_attractor_count(order);
      if (json) {
        std::cout << nlohmann::ordered_json{{"n", order}, {"count", c}}.dump() << '\n';
      } else {
        std::cout << c << '\n';
      }
      return 0;
    }

    if (plot_cmd->parsed()) {
      std::cout << plot({family_of(family), order, svg ? PlotFormat::svg : PlotFormat::text}, caps);
      return 0;
    }

    if (lrl->parsed()) {
      const LrlSets sets = tree_order > 0 ? lrl_sets_from_parse(order, tree_order, caps) : lrl_sets(order, caps);
      if (json) {
        std::cout << to_json(sets).dump() << '\n';
      } else {
        std::cout << "L  = {" << sets.left.str() << "}\nR  = {" << sets.right.str() << "}\nL' = {"
                  << sets.left_prime.str() << "}\n";
      }
      return 0;
    }

    if (tree->parsed()) {
      std::cout << to_json(singular_parse_tree(order, caps)).dump(json ? -1 : 2) << '\n';
      return 0;
    }

    if (reason->parsed()) {
      const auto r = fib_invalid_pair_reason(order, PositionSet::parse(pair_arg), caps);
      if (json) {
        std::cout << nlohmann::ordered_json{{"n", order}, {"pair", PositionSet::parse(pair_arg).positions()},
                                    {"reason", to_string(r)}}.dump() << '\n';
      } else {
        std::cout << to_string(r) << '\n';
      }
      return 0;
    }

    if (fuzz->parsed()) {
      const FuzzReport report = verifier_fuzz(trials, max_len, seed);
      if (json) {
        std::cout << to_json(report).dump() << '\n';
      } else {
        std::cout << report.trials << " trials, " << report.disagreements << " disagreements\n";
      }
      return report.disagreements == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
