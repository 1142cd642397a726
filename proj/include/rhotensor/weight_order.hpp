#pragma once

#include <vector>

#include "rhotensor/root_system.hpp"

namespace rhotensor {

/// The cone of dominant integral weights of a datum.
class DominantCone {
 public:
  explicit DominantCone(const RootDatum& datum) : datum_(&datum) {}
  bool contains(const Weight& w) const { return w.rank() == datum_->rank() && w.is_dominant(); }
  bool contains(const WeightQ& w) const { return w.rank() == datum_->rank() && w.is_dominant(); }

 private:
  const RootDatum* datum_;
};

/// λ ≤ μ: μ - λ is a non-negative integer combination of simple roots.
bool leq_root_order(const RootDatum& datum, const Weight& lambda, const Weight& mu);

/// True iff every simple-root coordinate of λ is an integer.
bool in_root_lattice(const RootDatum& datum, const Weight& lambda);

/// All dominant λ with λ ≤ μ, sorted lexicographically (ascending).
///
/// Breadth-first subtraction of simple roots from μ. A point whose
/// simple-root coordinates go negative cannot lie above a dominant weight
/// (dominant weights have non-negative root coordinates), so the search is
/// confined to a finite box. Throws ResourceLimit when more than
/// limits.max_lattice_points points are visited.
std::vector<Weight> enumerate_dominant_below(const RootDatum& datum, const Weight& mu,
                                             const ComputeLimits& limits = {});

}  // namespace rhotensor
