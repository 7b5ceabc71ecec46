#include "strattr/json_io.hpp"

namespace strattr {

using json = nlohmann::ordered_json;

namespace {

json positions(const PositionSet& set) { return json(set.positions()); }

json span_pair(Position lo, Position hi) { return json::array({lo, hi}); }

json node_json(const ParseTree& tree, std::size_t index) {
  const ParseNode& node = tree.node(index);
  json out;
  out["label"] = node.role == NodeRole::root ? "F_" + std::to_string(tree.order())
                                             : "S_" + std::to_string(node.order);
  out["role"] = to_string(node.role);
  out["span"] = node.span.empty() ? json::array() : span_pair(node.span.lo, node.span.hi);
  json kids = json::array();
  for (std::size_t child : node.children) kids.push_back(node_json(tree, child));
  out["children"] = std::move(kids);
  return out;
}

}  // namespace

json to_json(const SingularFactorization& factorization) {
  json spans = json::array();
  for (const auto& s : factorization.spans) spans.push_back(span_pair(s.lo, s.hi));
  return {{"n", factorization.n}, {"factors", factorization.factors}, {"spans", spans}};
}

json to_json(const VerifyOutcome& outcome) {
  return {{"attractor", outcome.is_attractor},
          {"witness", outcome.witness ? span_pair(outcome.witness->lo, outcome.witness->hi)
                                      : json(nullptr)}};
}

json to_json(const MusReport& report) {
  json entries = json::array();
  for (std::size_t i = 0; i < report.intervals.size(); ++i) {
    entries.push_back({{"span", span_pair(report.intervals[i].lo, report.intervals[i].hi)},
                       {"substring", report.substrings[i].str()}});
  }
  return {{"mus", entries}};
}

json to_json(const AttractorFamily& family) {
  json sets = json::array();
  for (const auto& s : family.sets) sets.push_back(positions(s));
  return {{"k", family.size_k}, {"attractors", sets}};
}

json to_json(const LrlSets& sets) {
  return {{"k", sets.k},
          {"L", positions(sets.left)},
          {"R", positions(sets.right)},
          {"Lp", positions(sets.left_prime)}};
}

json to_json(const ParseTree& tree) { return node_json(tree, 0); }

json to_json(const CrosscheckReport& report, bool with_timing) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json entry = {{"n", e.n},
                  {"status", e.match ? "match" : "mismatch"},
                  {"closed_form_size", e.closed_form_size},
                  {"brute_force_size", e.brute_force_size}};
    if (!e.match) {
      json only_closed = json::array();
      json only_brute = json::array();
      for (const auto& s : e.only_closed_form) only_closed.push_back(positions(s));
      for (const auto& s : e.only_brute_force) only_brute.push_back(positions(s));
      entry["only_closed_form"] = only_closed;
      entry["only_brute_force"] = only_brute;
    }
    if (with_timing) entry["millis"] = e.millis;
    entries.push_back(std::move(entry));
  }
  return {{"family", to_string(report.family)},
          {"prune", report.options.prune_mus},
          {"verifier", report.options.verifier == VerifierKind::naive ? "naive" : "efficient"},
          {"all_match", report.all_match()},
          {"orders", entries}};
}

json to_json(const FuzzReport& report) {
  json examples = json::array();
  for (const auto& d : report.examples) {
    examples.push_back({{"word", d.text.str()},
                        {"gamma", positions(d.gamma)},
                        {"naive", to_json(d.naive)},
                        {"efficient", to_json(d.efficient)}});
  }
  return {{"trials", report.trials}, {"disagreements", report.disagreements}, {"examples", examples}};
}

AttractorFamily family_from_json(const json& doc) {
  try {
    const auto k = doc.at("k").get<std::size_t>();
    std::vector<PositionSet> sets;
    for (const auto& entry : doc.at("attractors")) {
      auto raw = entry.get<std::vector<Position>>();
      PositionSet set(raw);
      if (set.size() != raw.size() || set.size() != k || (k > 0 && set.min() == 0)) {
        throw precondition_error("attractor entry does not match k or repeats positions");
      }
      sets.push_back(std::move(set));
    }
    return make_family(k, std::move(sets));
  } catch (const json::exception& e) {
    throw precondition_error(std::string("family JSON: ") + e.what());
  }
}

}  // namespace strattr
