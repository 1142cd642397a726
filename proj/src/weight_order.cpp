#include "rhotensor/weight_order.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace rhotensor {

bool leq_root_order(const RootDatum& datum, const Weight& lambda, const Weight& mu) {
  const auto c = to_root_basis(datum, WeightQ(mu - lambda));
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_integer() && x.sign() >= 0; });
}

bool in_root_lattice(const RootDatum& datum, const Weight& lambda) {
  const auto c = to_root_basis(datum, WeightQ(lambda));
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_integer(); });
}

std::vector<Weight> enumerate_dominant_below(const RootDatum& datum, const Weight& mu, const ComputeLimits& limits) {
  if (!mu.is_dominant()) throw NonDominantInput("enumerate_dominant_below needs a dominant bound, got " + mu.to_string());
  const std::size_t r = datum.rank();

  // Root coordinates are tracked alongside the weight; they change by exactly
  // one unit per subtraction, so the positivity prune stays in integers after
  // scaling by the common denominator.
  const auto root_coords = to_root_basis(datum, WeightQ(mu));
  BigInt den = 1;
  for (const auto& c : root_coords) den = boost::multiprecision::lcm(den, c.denominator());
  const std::int64_t scale = narrow_int64(den);
  std::vector<std::int64_t> start(r);
  for (std::size_t i = 0; i < r; ++i) start[i] = (root_coords[i] * Rational(scale)).to_int64();

  struct Node {
    Weight weight;
    Weight depth;  // multiples of α_i subtracted so far
  };
  std::unordered_set<Weight, WeightHash> visited{mu};
  std::deque<Node> queue{{mu, Weight(r)}};
  std::vector<Weight> out;
  while (!queue.empty()) {
    Node n = std::move(queue.front());
    queue.pop_front();
    if (n.weight.is_dominant()) out.push_back(n.weight);
    for (std::size_t i = 0; i < r; ++i) {
      if (checked_mul(n.depth[i] + 1, scale) > start[i]) continue;
      Node next{n.weight - datum.simple_root(static_cast<int>(i) + 1), n.depth};
      next.depth[i] += 1;
      if (!visited.insert(next.weight).second) continue;
      if (visited.size() > limits.max_lattice_points) {
        throw ResourceLimit("lattice enumeration below " + mu.to_string() + " in " + datum.spec().name() +
                            " exceeds " + std::to_string(limits.max_lattice_points) + " points");
      }
      queue.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rhotensor
