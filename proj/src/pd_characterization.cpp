#include "strattr/pd_characterization.hpp"

#include <string>

#include "strattr/attractor.hpp"

namespace strattr {

PdAttractorTriple pd_triple(int n) {
  if (n < 3 || n > 62) throw order_error("pd_triple: order " + std::to_string(n) + " out of range");
  const Position unit = Position{1} << (n - 3);
  return {n, 3 * unit, 4 * unit, 6 * unit};
}

AttractorFamily pd_attractors_closed_form(int n, const Caps& caps) {
  if (n < 2 || n > caps.pd_max) {
    throw order_error("pd_attractors_closed_form: order " + std::to_string(n) + " out of range");
  }
  if (n == 2) return make_family(2, {{2, 3}, {2, 4}});
  const auto t = pd_triple(n);
  return make_family(2, {{t.p, t.r}, {t.q, t.r}});
}

bool pd_projection_check(int n, const PositionSet& pair, const Caps& caps) {
  if (n < 4) throw order_error("pd_projection_check: order " + std::to_string(n) + " below 4");
  if (pair.size() != 2) throw precondition_error("pd_projection_check: expected a pair");
  const Word d = pd_word(n, caps);
  pair.require_within(d.size());
  Position on_a = pair.min();
  Position on_b = pair.max();
  if (d.at(on_a) == Symbol::b) std::swap(on_a, on_b);
  if (d.at(on_a) != Symbol::a || d.at(on_b) != Symbol::b) {
    throw precondition_error("pd_projection_check: pair must cover one a and one b");
  }
  if (!is_attractor(d, pair).is_attractor) {
    throw precondition_error("pd_projection_check: {" + pair.str() + "} is not an attractor");
  }
  if (on_a % 2 != 0 || on_b % 2 != 0) return false;
  const PositionSet projected{on_a / 2, on_b / 2};
  return pd_attractors_closed_form(n - 1, caps).contains(projected);
}

}  // namespace strattr
