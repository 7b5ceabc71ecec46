#pragma once

#include <json.hpp>

#include "strattr/attractor.hpp"
#include "strattr/enumeration.hpp"
#include "strattr/fib_characterization.hpp"
#include "strattr/validation.hpp"
#include "strattr/words.hpp"

// JSON shapes:
//   factorization  {"n": int, "factors": [int], "spans": [[lo,hi]]}
//   verify         {"attractor": bool, "witness": [lo,hi] | null}
//   mus            {"mus": [{"span": [lo,hi], "substring": "..."}]}
//   family         {"k": int, "attractors": [[int,...],...]}
//   lrl            {"k": int, "L": [...], "R": [...], "Lp": [...]}
//   parse tree     {"label": "F_n" | "S_i", "role": ..., "span": [lo,hi] | [], "children": [...]}
namespace strattr {

nlohmann::ordered_json to_json(const SingularFactorization& factorization);
nlohmann::ordered_json to_json(const VerifyOutcome& outcome);
nlohmann::ordered_json to_json(const MusReport& report);
nlohmann::ordered_json to_json(const AttractorFamily& family);
nlohmann::ordered_json to_json(const LrlSets& sets);
nlohmann::ordered_json to_json(const ParseTree& tree);
nlohmann::ordered_json to_json(const CrosscheckReport& report, bool with_timing = false);
nlohmann::ordered_json to_json(const FuzzReport& report);

/// Inverse of to_json(AttractorFamily); throws precondition_error on schema violations.
AttractorFamily family_from_json(const nlohmann::ordered_json& doc);

}  // namespace strattr
