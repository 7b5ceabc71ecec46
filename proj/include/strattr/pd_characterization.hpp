#pragma once

#include "strattr/enumeration.hpp"
#include "strattr/position_set.hpp"
#include "strattr/words.hpp"

namespace strattr {

/// p = 3·2^{n-3}, q = 2^{n-1}, r = 3·2^{n-2}, for n >= 3.
struct PdAttractorTriple {
  int n = 0;
  Position p = 0;
  Position q = 0;
  Position r = 0;
};

PdAttractorTriple pd_triple(int n);

/// Att(D_n): {{2,3},{2,4}} for n = 2, {{p,r},{q,r}} for n >= 3.
AttractorFamily pd_attractors_closed_form(int n, const Caps& caps = {});

/// For a smallest attractor {p, q} of D_n (n >= 4) with D_n[p] = a and
/// D_n[q] = b: true iff p and q are even and {p/2, q/2} ∈ Att(D_{n-1}).
/// Throws precondition_error if the pair is not a smallest attractor or does
/// not carry one a and one b.
bool pd_projection_check(int n, const PositionSet& pair, const Caps& caps = {});

}  // namespace strattr
