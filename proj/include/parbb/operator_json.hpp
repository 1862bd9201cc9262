#pragma once

#include <cstddef>

#include "json.hpp"
#include "parbb/variation.hpp"

namespace parbb {

/// Resolves a probability given as a number or as a string "c/n", "1/n" or
/// "c" against the dimension n. ConfigError on anything else.
double resolve_probability(const nlohmann::json& value, std::size_t n);

/// {"kind": "standard-mutation", "p": "1/n"}, {"kind": "flip-exact", "r": 3},
/// {"kind": "single-bit"} or {"kind": "complement"}.
UnaryOperator operator_from_json(const nlohmann::json& j, std::size_t n);
nlohmann::json to_json(const UnaryOperator& op);

}  // namespace parbb
