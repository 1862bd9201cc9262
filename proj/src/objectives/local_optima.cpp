#include "parbb/local_optima.hpp"

#include <string>

#include "parbb/errors.hpp"

namespace parbb {

bool is_local_optimum(const Objective& obj, const BitString& x) {
  const Fitness fx = obj(x);
  BitString y = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    y.flip(i);
    const bool improves = obj.better(obj(y), fx);
    y.flip(i);
    if (improves) return false;
  }
  return true;
}

std::vector<BitString> enumerate_local_optima(const Objective& obj) {
  if (obj.n() > kExhaustiveLimit)
    throw CapacityError("local optima scan is limited to n <= " + std::to_string(kExhaustiveLimit));
  std::vector<BitString> optima;
  const std::uint64_t total = std::uint64_t{1} << obj.n();
  for (std::uint64_t i = 0; i < total; ++i) {
    BitString x = BitString::from_index(obj.n(), i);
    if (is_local_optimum(obj, x)) optima.push_back(std::move(x));
  }
  return optima;
}

TargetSet local_optima(const Objective& obj) {
  TargetSet::Predicate contains = obj.local_optima_closed_form();
  if (!contains) contains = [obj](const BitString& x) { return is_local_optimum(obj, x); };
  BigCount bound = obj.local_optima_bound() ? *obj.local_optima_bound() : power_of_two(obj.n());
  return TargetSet(TargetKind::local_optima, obj.n(), std::move(contains), std::move(bound),
                   obj.local_optima_distance());
}

}  // namespace parbb
