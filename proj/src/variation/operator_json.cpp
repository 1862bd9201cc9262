#include "parbb/operator_json.hpp"

#include <charconv>
#include <string>

#include "parbb/errors.hpp"

namespace parbb {
namespace {

double parse_number(std::string_view text, const std::string& whole) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ConfigError("cannot parse probability '" + whole + "'");
  return value;
}

}  // namespace

double resolve_probability(const nlohmann::json& value, std::size_t n) {
  double p = 0.0;
  if (value.is_number()) {
    p = value.get<double>();
  } else if (value.is_string()) {
    const auto text = value.get<std::string>();
    std::string_view view(text);
    if (view.size() >= 2 && view.substr(view.size() - 2) == "/n") {
      if (n == 0) throw ConfigError("probability '" + text + "' needs n >= 1");
      p = parse_number(view.substr(0, view.size() - 2), text) / static_cast<double>(n);
    } else {
      p = parse_number(view, text);
    }
  } else {
    throw ConfigError("probability must be a number or a string such as \"1/n\"");
  }
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("probability " + std::to_string(p) + " outside [0, 1]");
  return p;
}

UnaryOperator operator_from_json(const nlohmann::json& j, std::size_t n) {
  if (!j.is_object() || !j.contains("kind")) throw ConfigError("operator descriptor needs a \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  UnaryOperator op;
  if (kind == "standard-mutation") {
    op = UnaryOperator::standard_mutation(j.contains("p") ? resolve_probability(j.at("p"), n)
                                                          : 1.0 / static_cast<double>(n));
  } else if (kind == "flip-exact") {
    if (!j.contains("r") || !j.at("r").is_number_integer() || j.at("r").get<std::int64_t>() < 0)
      throw ConfigError("flip-exact operator needs a non-negative integer \"r\"");
    op = UnaryOperator::flip_exact(j.at("r").get<std::size_t>());
  } else if (kind == "single-bit") {
    op = UnaryOperator::single_bit();
  } else if (kind == "complement") {
    op = UnaryOperator::complement();
  } else {
    throw ConfigError("unknown operator kind '" + kind + "'");
  }
  try {
    op.validate(n);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return op;
}

nlohmann::json to_json(const UnaryOperator& op) {
  nlohmann::json j{{"kind", to_string(op.kind)}};
  if (op.kind == OperatorKind::flip_exact) j["r"] = op.radius;
  if (op.kind == OperatorKind::standard_mutation) j["p"] = op.p;
  return j;
}

}  // namespace parbb
