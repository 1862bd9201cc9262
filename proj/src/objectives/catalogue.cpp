#include "parbb/catalogue.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <queue>
#include <string>

#include "parbb/errors.hpp"

namespace parbb {
namespace {

std::size_t zeros_of(const BitString& x) { return x.count_zeros(); }
std::size_t ones_of(const BitString& x) { return x.count_ones(); }
std::size_t symmetric_distance(const BitString& x) {
  const std::size_t ones = x.count_ones();
  return std::min(ones, x.size() - ones);
}

void require_n(std::size_t n, std::size_t min, const char* name) {
  if (n < min)
    throw DomainError(std::string(name) + " needs n >= " + std::to_string(min));
}

// Two-colouring data of a graph: component id per vertex and a reference
// colouring that is proper when the graph is bipartite.
struct Colouring {
  std::vector<std::uint32_t> component;
  std::size_t components = 0;
  BitString reference;
  bool bipartite = true;
};

Colouring two_colour(const GraphInstance& g) {
  Colouring c{std::vector<std::uint32_t>(g.n, UINT32_MAX), 0, BitString(g.n), true};
  std::vector<std::vector<std::uint32_t>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (std::uint32_t s = 0; s < g.n; ++s) {
    if (c.component[s] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(c.components++);
    std::queue<std::uint32_t> queue;
    queue.push(s);
    c.component[s] = id;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop();
      for (const auto v : adj[u]) {
        if (c.component[v] == UINT32_MAX) {
          c.component[v] = id;
          c.reference.set(v, !c.reference.test(u));
          queue.push(v);
        } else if (c.reference.test(v) == c.reference.test(u)) {
          c.bipartite = false;
        }
      }
    }
  }
  return c;
}

}  // namespace

Objective make_onemax(std::size_t n) {
  Objective::Spec s;
  s.name = "onemax";
  s.n = n;
  s.evaluate = onemax;
  s.optimum_value = static_cast<Fitness>(n);
  s.optima_bound = 1;
  s.optima_distance = zeros_of;
  s.local_optima = [](const BitString& x) { return x.count_zeros() == 0; };
  s.local_optima_bound = 1;
  s.local_optima_distance = zeros_of;
  return Objective(std::move(s));
}

Objective make_leading_ones(std::size_t n) {
  Objective::Spec s;
  s.name = "leadingones";
  s.n = n;
  s.evaluate = leading_ones;
  s.optimum_value = static_cast<Fitness>(n);
  s.optima_bound = 1;
  s.optima_distance = zeros_of;
  s.local_optima = [](const BitString& x) { return x.count_zeros() == 0; };
  s.local_optima_bound = 1;
  s.local_optima_distance = zeros_of;
  return Objective(std::move(s));
}

Objective make_leading_zeros(std::size_t n) {
  Objective::Spec s;
  s.name = "leadingzeros";
  s.n = n;
  s.evaluate = leading_zeros;
  s.optimum_value = static_cast<Fitness>(n);
  s.optima_bound = 1;
  s.optima_distance = ones_of;
  s.local_optima = [](const BitString& x) { return x.count_ones() == 0; };
  s.local_optima_bound = 1;
  s.local_optima_distance = ones_of;
  return Objective(std::move(s));
}

Objective make_twomax(std::size_t n) {
  Objective::Spec s;
  s.name = "twomax";
  s.n = n;
  s.evaluate = twomax;
  s.optimum_value = static_cast<Fitness>(n);
  s.optima_bound = 2;
  s.optima_distance = symmetric_distance;
  s.local_optima = [](const BitString& x) { return symmetric_distance(x) == 0; };
  s.local_optima_bound = 2;
  s.local_optima_distance = symmetric_distance;
  return Objective(std::move(s));
}

Objective make_twomax_prime(std::size_t n) {
  Objective::Spec s;
  s.name = "twomax-prime";
  s.n = n;
  s.evaluate = twomax_prime;
  s.optimum_value = static_cast<Fitness>(n + 1);
  s.optima_bound = 1;
  s.optima_distance = zeros_of;
  s.local_optima = [](const BitString& x) { return symmetric_distance(x) == 0; };
  s.local_optima_bound = 2;
  s.local_optima_distance = symmetric_distance;
  return Objective(std::move(s));
}

Objective make_hiff(std::size_t n) {
  if (!std::has_single_bit(n)) throw DomainError("hiff: n must be a power of two");
  const auto levels = static_cast<std::size_t>(std::countr_zero(n)) + 1;
  Objective::Spec s;
  s.name = "hiff";
  s.n = n;
  s.evaluate = hiff;
  s.optimum_value = static_cast<Fitness>(n * levels);
  s.optima_bound = 2;
  s.optima_distance = symmetric_distance;
  return Objective(std::move(s));
}

Objective make_jump(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw DomainError("jump: gap width k must lie in [1, n]");
  Objective::Spec s;
  s.name = "jump";
  s.n = n;
  s.evaluate = [k](const BitString& x) { return jump(x, k); };
  s.optimum_value = static_cast<Fitness>(n + k);
  s.optima_bound = 1;
  s.optima_distance = zeros_of;
  if (k >= 2) {
    s.local_optima = [n, k](const BitString& x) {
      const std::size_t ones = x.count_ones();
      return ones == n || ones == n - k;
    };
    s.local_optima_bound = binomial(n, k) + 1;
    s.local_optima_distance = [n, k](const BitString& x) {
      const std::size_t ones = x.count_ones();
      const std::size_t ring = ones > n - k ? ones - (n - k) : (n - k) - ones;
      return std::min(ring, n - ones);
    };
  } else {
    s.local_optima = [](const BitString& x) { return x.count_zeros() == 0; };
    s.local_optima_bound = 1;
    s.local_optima_distance = zeros_of;
  }
  return Objective(std::move(s));
}

Objective make_cliff(std::size_t n, std::size_t d) {
  if (d < 1 || d > n) throw DomainError("cliff: depth d must lie in [1, n]");
  Objective::Spec s;
  s.name = "cliff";
  s.n = n;
  s.evaluate = [d](const BitString& x) { return cliff(x, d); };
  s.optimum_value = static_cast<Fitness>(n) - static_cast<Fitness>(d) + 0.5;
  s.optima_bound = 1;
  s.optima_distance = zeros_of;
  if (d >= 2) {
    s.local_optima = [n, d](const BitString& x) {
      const std::size_t ones = x.count_ones();
      return ones == n || ones == n - d;
    };
    s.local_optima_bound = binomial(n, d) + 1;
    s.local_optima_distance = [n, d](const BitString& x) {
      const std::size_t ones = x.count_ones();
      const std::size_t ring = ones > n - d ? ones - (n - d) : (n - d) - ones;
      return std::min(ring, n - ones);
    };
  } else {
    s.local_optima = [](const BitString& x) { return x.count_zeros() == 0; };
    s.local_optima_bound = 1;
    s.local_optima_distance = zeros_of;
  }
  return Objective(std::move(s));
}

Objective make_vertex_colouring(GraphInstance g, Direction direction) {
  validate(g);
  const auto colouring = std::make_shared<const Colouring>(two_colour(g));
  const auto graph = std::make_shared<const GraphInstance>(std::move(g));
  Objective::Spec s;
  s.name = direction == Direction::maximise ? "vertex-colouring" : "ising";
  s.n = graph->n;
  s.direction = direction;
  s.evaluate = [graph](const BitString& x) { return bichromatic_edges(*graph, x); };
  const bool closed_form = direction == Direction::minimise || colouring->bipartite;
  if (closed_form) {
    s.optimum_value =
        direction == Direction::maximise ? static_cast<Fitness>(graph->edges.size()) : 0.0;
    s.optima_bound = power_of_two(colouring->components);
    // Optimal colourings agree with (the complement of) the reference
    // colouring on each component independently.
    const bool proper = direction == Direction::maximise;
    s.optima_distance = [colouring, proper](const BitString& x) {
      std::vector<std::size_t> diff(colouring->components, 0);
      std::vector<std::size_t> size(colouring->components, 0);
      for (std::size_t v = 0; v < x.size(); ++v) {
        const bool want = proper ? colouring->reference.test(v) : false;
        const auto c = colouring->component[v];
        ++size[c];
        diff[c] += x.test(v) != want ? 1 : 0;
      }
      std::size_t total = 0;
      for (std::size_t c = 0; c < diff.size(); ++c) total += std::min(diff[c], size[c] - diff[c]);
      return total;
    };
  }
  return Objective(std::move(s));
}

Objective make_mincut(GraphInstance g) {
  validate(g);
  const auto graph = std::make_shared<const GraphInstance>(std::move(g));
  Objective::Spec s;
  s.name = "mincut";
  s.n = graph->n;
  s.direction = Direction::minimise;
  s.evaluate = [graph](const BitString& x) { return mincut_value(*graph, x); };
  return Objective(std::move(s));
}

Objective make_mincut_two_cliques(std::size_t n) {
  const auto graph = std::make_shared<const GraphInstance>(gen_two_cliques(n));
  BitString split(n);
  for (std::size_t v = n / 2; v < n; ++v) split.set(v, true);
  Objective::Spec s;
  s.name = "mincut-two-cliques";
  s.n = n;
  s.direction = Direction::minimise;
  s.evaluate = [graph](const BitString& x) { return mincut_value(*graph, x); };
  s.optimum_value = 0.0;
  s.optima_bound = 2;
  s.optima_distance = [split](const BitString& x) {
    const std::size_t d = hamming_distance(x, split);
    return std::min(d, x.size() - d);
  };
  if (n >= 6) {
    // Clique-aligned bipartitions plus every point with a single vertex on
    // its own side.
    s.local_optima = [split](const BitString& x) {
      const std::size_t ones = x.count_ones();
      if (ones == 1 || ones + 1 == x.size()) return true;
      const std::size_t d = hamming_distance(x, split);
      return d == 0 || d == x.size();
    };
    s.local_optima_bound = 2 * n + 2;
  } else {
    s.local_optima = [split](const BitString& x) {
      const std::size_t d = hamming_distance(x, split);
      return d == 0 || d == x.size();
    };
    s.local_optima_bound = 2;
  }
  return Objective(std::move(s));
}

Objective make_partition(PartitionInstance inst) {
  validate(inst);
  const auto instance = std::make_shared<const PartitionInstance>(std::move(inst));
  Objective::Spec s;
  s.name = "partition";
  s.n = instance->sizes.size();
  s.direction = Direction::minimise;
  s.evaluate = [instance](const BitString& x) { return partition_makespan(*instance, x); };
  return Objective(std::move(s));
}

Objective make_knapsack(KnapsackInstance inst) {
  validate(inst);
  const auto instance = std::make_shared<const KnapsackInstance>(std::move(inst));
  Objective::Spec s;
  s.name = "knapsack";
  s.n = instance->weights.size();
  s.evaluate = [instance](const BitString& x) { return knapsack_value(*instance, x); };
  return Objective(std::move(s));
}

Objective make_knapsack_hard(std::size_t n) {
  const auto instance = std::make_shared<const KnapsackInstance>(knapsack_hard_instance(n));
  const std::size_t small_count = (n + 1) / 2;
  BitString all_small(n);
  for (std::size_t i = 0; i < small_count; ++i) all_small.set(i, true);
  Objective::Spec s;
  s.name = "knapsack-hard";
  s.n = n;
  s.evaluate = [instance](const BitString& x) { return knapsack_value(*instance, x); };
  s.optimum_value = static_cast<Fitness>(instance->capacity);
  s.optima_bound = 1;
  s.optima_distance = [all_small](const BitString& x) { return hamming_distance(x, all_small); };
  // Hamming-1 local optima under the overweight penalty: the global optimum,
  // and every selection of (n-1)/2 objects containing at least one big one.
  s.local_optima = [all_small, small_count](const BitString& x) {
    if (x == all_small) return true;
    std::size_t small = 0;
    std::size_t big = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x.test(i)) continue;
      (i < small_count ? small : big) += 1;
    }
    return big >= 1 && small + big == (x.size() - 1) / 2;
  };
  s.local_optima_bound = binomial(n, (n - 1) / 2) - small_count + 1;
  return Objective(std::move(s));
}

Objective make_maxsat_hard(std::size_t n) {
  require_n(n, 3, "maxsat_hard");
  Objective::Spec s;
  s.name = "maxsat-hard";
  s.n = n;
  s.evaluate = maxsat_hard;
  s.optimum_value = static_cast<Fitness>(n * ((n - 1) * (n - 2) / 2) + n);
  s.optima_bound = 1;
  s.optima_distance = zeros_of;
  s.local_optima = [](const BitString& x) {
    const std::size_t ones = x.count_ones();
    return ones == 1 || ones == x.size();
  };
  s.local_optima_bound = n + 1;
  s.local_optima_distance = [](const BitString& x) {
    const std::size_t ones = x.count_ones();
    return std::min(ones == 0 ? std::size_t{1} : ones - 1, x.size() - ones);
  };
  return Objective(std::move(s));
}

Objective make_maxsat_hard_enumerated(std::size_t n) {
  require_n(n, 3, "maxsat_hard");
  Objective::Spec s;
  s.name = "maxsat-hard-enum";
  s.n = n;
  s.evaluate = maxsat_hard_enumerated;
  s.optimum_value = static_cast<Fitness>(n * ((n - 1) * (n - 2) / 2) + n);
  s.optima_bound = 1;
  s.optima_distance = zeros_of;
  return Objective(std::move(s));
}

Objective make_planted_sat(SatInstance inst) {
  validate(inst);
  const auto instance = std::make_shared<const SatInstance>(std::move(inst));
  Objective::Spec s;
  s.name = "planted-3sat";
  s.n = instance->n;
  s.evaluate = [instance](const BitString& x) { return sat_count(*instance, x); };
  if (instance->planted) s.optimum_value = static_cast<Fitness>(instance->clauses.size());
  return Objective(std::move(s));
}

namespace {

Objective make_peak_objective(std::vector<PeakSpec> peaks, bool weighted) {
  if (peaks.empty()) throw DomainError("nearest peak function needs at least one peak");
  const std::size_t n = peaks.front().centre.size();
  for (const auto& p : peaks) {
    validate(p);
    if (p.centre.size() != n) throw DimensionError("peak centres differ in length");
  }
  double tallest = peaks.front().height;
  for (const auto& p : peaks) tallest = std::max(tallest, p.height);
  auto summits = std::make_shared<std::vector<BitString>>();
  for (const auto& p : peaks)
    if (p.height == tallest && std::find(summits->begin(), summits->end(), p.centre) == summits->end())
      summits->push_back(p.centre);
  const auto shared = std::make_shared<const std::vector<PeakSpec>>(std::move(peaks));
  Objective::Spec s;
  s.name = weighted ? "weighted-nearest-peak" : "nearest-peak";
  s.n = n;
  if (weighted)
    s.evaluate = [shared](const BitString& x) { return weighted_nearest_peak(*shared, x); };
  else
    s.evaluate = [shared](const BitString& x) { return nearest_peak(*shared, x); };
  // Every fitness is at most the height of some peak, with equality only at
  // that peak's centre.
  s.optimum_value = tallest;
  s.optima_bound = summits->size();
  s.optima_distance = [summits = std::shared_ptr<const std::vector<BitString>>(summits)](const BitString& x) {
    std::size_t best = x.size();
    for (const auto& c : *summits) best = std::min(best, hamming_distance(x, c));
    return best;
  };
  return Objective(std::move(s));
}

}  // namespace

Objective make_nearest_peak(std::vector<PeakSpec> peaks) {
  return make_peak_objective(std::move(peaks), false);
}

Objective make_weighted_nearest_peak(std::vector<PeakSpec> peaks) {
  return make_peak_objective(std::move(peaks), true);
}

Objective make_monotone_poly(std::size_t n, MonotonePolynomial poly) {
  validate(poly, n);
  BitString used(n);
  for (const auto& m : poly.monomials)
    for (const auto v : m.variables) used.set(v, true);
  const auto shared = std::make_shared<const MonotonePolynomial>(std::move(poly));
  Objective::Spec s;
  s.name = "monotone-poly";
  s.n = n;
  s.evaluate = [shared](const BitString& x) { return monotone_poly(*shared, x); };
  s.optimum_value = monotone_poly(*shared, BitString::ones(n));
  s.optima_bound = power_of_two(used.count_zeros());
  // Optima are exactly the points with every used variable set.
  s.optima_distance = [used](const BitString& x) {
    std::size_t missing = 0;
    for (std::size_t i = 0; i < x.size(); ++i) missing += used.test(i) && !x.test(i) ? 1 : 0;
    return missing;
  };
  return Objective(std::move(s));
}

}  // namespace parbb
