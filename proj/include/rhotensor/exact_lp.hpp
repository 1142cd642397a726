#pragma once

#include <optional>
#include <vector>

#include "rhotensor/arith.hpp"

namespace rhotensor {

/// Feasibility problem over exact rationals:
///   find x >= 0 with eq_rows · x = eq_rhs and le_rows · x <= le_rhs.
struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<std::vector<Rational>> eq_rows;
  std::vector<Rational> eq_rhs;
  std::vector<std::vector<Rational>> le_rows;
  std::vector<Rational> le_rhs;

  void add_equality(std::vector<Rational> row, Rational rhs);
  void add_upper_bound(std::vector<Rational> row, Rational rhs);
  /// Checks a candidate point exactly.
  bool satisfied_by(const std::vector<Rational>& x) const;
};

/// Phase-one simplex with Bland's rule; returns a feasible point or nullopt.
/// No floating point is involved, so infeasibility is a proof, not a
/// tolerance call.
std::optional<std::vector<Rational>> find_feasible_point(const LinearSystem& system);

}  // namespace rhotensor
