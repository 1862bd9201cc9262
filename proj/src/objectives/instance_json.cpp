#include "parbb/instance_json.hpp"

#include <cstdlib>
#include <string>

#include "parbb/errors.hpp"

namespace parbb {
namespace {

// Runs a parser and turns json type/key errors into ConfigError.
template <class F>
auto guarded(const char* what, F&& parse) {
  try {
    return parse();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed ") + what + " document: " + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("invalid ") + what + ": " + e.what());
  } catch (const DimensionError& e) {
    throw ConfigError(std::string("invalid ") + what + ": " + e.what());
  }
}

}  // namespace

Json to_json(const SatInstance& inst) {
  Json clauses = Json::array();
  for (const Clause& c : inst.clauses) {
    Json row = Json::array();
    for (const Literal& l : c) {
      const auto v = static_cast<std::int64_t>(l.variable) + 1;
      row.push_back(l.negated ? -v : v);
    }
    clauses.push_back(std::move(row));
  }
  Json j{{"n", inst.n}, {"clauses", std::move(clauses)}};
  if (inst.planted) j["planted"] = inst.planted->to_string();
  return j;
}

Json to_json(const GraphInstance& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  return Json{{"n", g.n}, {"edges", std::move(edges)}};
}

Json to_json(const PartitionInstance& inst) { return Json{{"sizes", inst.sizes}}; }

Json to_json(const KnapsackInstance& inst) {
  return Json{{"weights", inst.weights}, {"values", inst.values}, {"capacity", inst.capacity}};
}

Json to_json(const MonotonePolynomial& poly) {
  Json monomials = Json::array();
  for (const Monomial& m : poly.monomials)
    monomials.push_back(Json{{"weight", m.weight}, {"variables", m.variables}});
  return Json{{"monomials", std::move(monomials)}};
}

Json to_json(const std::vector<PeakSpec>& peaks) {
  Json out = Json::array();
  for (const PeakSpec& p : peaks)
    out.push_back(Json{{"centre", p.centre.to_string()}, {"height", p.height}, {"slope", p.slope}});
  return out;
}

SatInstance sat_from_json(const Json& j) {
  return guarded("SAT instance", [&] {
    SatInstance inst;
    inst.n = j.at("n").get<std::size_t>();
    for (const Json& row : j.at("clauses")) {
      if (!row.is_array() || row.size() != 3) throw ConfigError("SAT clause must have exactly 3 literals");
      Clause c{};
      for (std::size_t k = 0; k < 3; ++k) {
        const auto lit = row[k].get<std::int64_t>();
        if (lit == 0 || static_cast<std::size_t>(std::llabs(lit)) > inst.n)
          throw ConfigError("SAT literal " + std::to_string(lit) + " out of range");
        c[k] = Literal{static_cast<std::uint32_t>(std::llabs(lit) - 1), lit < 0};
      }
      inst.clauses.push_back(c);
    }
    if (j.contains("planted")) inst.planted = BitString::from_string(j.at("planted").get<std::string>());
    validate(inst);
    return inst;
  });
}

GraphInstance graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    GraphInstance g;
    g.n = j.at("n").get<std::size_t>();
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ConfigError("edge must be a [u, v] pair");
      g.edges.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
    }
    validate(g);
    return g;
  });
}

PartitionInstance partition_from_json(const Json& j) {
  return guarded("partition instance", [&] {
    PartitionInstance inst{j.at("sizes").get<std::vector<double>>()};
    validate(inst);
    return inst;
  });
}

KnapsackInstance knapsack_from_json(const Json& j) {
  return guarded("knapsack instance", [&] {
    KnapsackInstance inst{j.at("weights").get<std::vector<std::int64_t>>(),
                          j.at("values").get<std::vector<std::int64_t>>(),
                          j.at("capacity").get<std::int64_t>()};
    validate(inst);
    return inst;
  });
}

MonotonePolynomial poly_from_json(const Json& j, std::size_t n) {
  return guarded("polynomial", [&] {
    MonotonePolynomial poly;
    for (const Json& m : j.at("monomials"))
      poly.monomials.push_back(
          Monomial{m.at("weight").get<double>(), m.at("variables").get<std::vector<std::uint32_t>>()});
    validate(poly, n);
    return poly;
  });
}

std::vector<PeakSpec> peaks_from_json(const Json& j) {
  return guarded("peak list", [&] {
    std::vector<PeakSpec> peaks;
    for (const Json& p : j)
      peaks.push_back(PeakSpec{BitString::from_string(p.at("centre").get<std::string>()),
                               p.at("height").get<double>(), p.at("slope").get<double>()});
    if (peaks.empty()) throw ConfigError("peak list is empty");
    for (const auto& p : peaks) {
      validate(p);
      if (p.centre.size() != peaks.front().centre.size())
        throw ConfigError("peak centres differ in length");
    }
    return peaks;
  });
}

}  // namespace parbb
