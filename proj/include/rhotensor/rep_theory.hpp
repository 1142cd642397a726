#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rhotensor/root_system.hpp"
#include "rhotensor/weight_order.hpp"

namespace rhotensor {

/// Weight multiplicities of an irreducible module V(λ), stored on dominant
/// weights only. The multiplicity of any weight β is that of dominate(β).
struct WeightMultiset {
  Weight highest;
  std::map<Weight, std::int64_t> dominant;
  /// Σ over all weights (full orbits) of the multiplicity; equals dim V(λ).
  BigInt total;

  std::int64_t multiplicity(const RootDatum& datum, const Weight& beta) const;
  /// Every weight with its multiplicity, orbits expanded.
  std::vector<std::pair<Weight, std::int64_t>> expand(const RootDatum& datum) const;
};

/// Multiplicities of the irreducible components of a tensor product.
struct IrrDecomposition {
  std::map<Weight, std::int64_t> entries;

  std::int64_t multiplicity(const Weight& nu) const {
    auto it = entries.find(nu);
    return it == entries.end() ? 0 : it->second;
  }
};

/// dim V(λ) = Π_{α>0} <λ+ρ, α∨> / <ρ, α∨>. Throws NonDominantInput.
BigInt weyl_dim(const RootDatum& datum, const Weight& lambda);

/// Freudenthal's recursion over the dominant weights of V(λ), highest first.
WeightMultiset freudenthal_multiplicities(const RootDatum& datum, const Weight& lambda,
                                          const ComputeLimits& limits = {});

/// β lies in the convex hull of W·λ_top, i.e. λ_top - dominate(β) is a
/// non-negative rational combination of simple roots.
bool hull_membership(const RootDatum& datum, const Weight& lambda_top, const WeightQ& beta);

/// β is a weight of V(ρ): β ∈ ρ + Q and β lies in the hull of W·ρ.
bool weight_of_v_rho(const RootDatum& datum, const Weight& beta);

/// V(λ) ⊗ V(μ) by the Klimyk (Brauer) formula, summing over the weights of
/// the factor of smaller dimension. With limits.threads > 1 the dominant
/// weights are sharded across worker threads.
IrrDecomposition tensor_decompose(const RootDatum& datum, const Weight& lambda, const Weight& mu,
                                  const ComputeLimits& limits = {});

/// Multiplicity of V(ν) in V(λ) ⊗ V(μ).
std::int64_t tensor_multiplicity(const RootDatum& datum, const Weight& lambda, const Weight& mu, const Weight& nu,
                                 const ComputeLimits& limits = {});

/// dim [V(λ) ⊗ V(μ) ⊗ V(ν)]^g.
std::int64_t invariant_dim_triple(const RootDatum& datum, const Weight& lambda, const Weight& mu, const Weight& nu,
                                  const ComputeLimits& limits = {});

}  // namespace rhotensor
