#pragma once

// Parabolic combinatorics for maximal parabolics P: minimal coset
// representatives W^P, the weights χ_w, and the linear identity and
// inequalities evaluated at the coweight x_P.

#include <cstdint>
#include <string>
#include <vector>

#include "rhotensor/root_system.hpp"

namespace rhotensor {

/// Maximal parabolic determined by the simple root it omits from its Levi.
struct MaximalParabolic {
  int node = 1;               // i_P
  NodeSet levi;               // I ∖ {i_P}
  WeightQ rho_levi;           // half sum of the positive roots of the Levi
  WeylWord longest_levi;      // w_o^P
};

MaximalParabolic maximal_parabolic(const RootDatum& datum, int node);

/// W^P: the w with w(α_j) > 0 for every Levi simple root α_j, as reduced
/// words ordered by length. Throws ResourceLimit above limits.max_coset_rank.
std::vector<WeylWord> minimal_coset_reps(const RootDatum& datum, const MaximalParabolic& P,
                                         const ComputeLimits& limits = {});

/// χ_w = ρ - 2ρ^L + w⁻¹ρ.
WeightQ chi(const RootDatum& datum, const MaximalParabolic& P, const WeylWord& w);

struct Eq4Values {
  Rational lhs;  // (χ_{w_o w w_o^P} - χ_u - χ_v)(x_P)
  Rational rhs;  // (-ρ - u⁻¹ρ - v⁻¹ρ - w⁻¹ρ)(x_P)
  bool holds() const { return lhs == rhs; }
};

Eq4Values eq4_values(const RootDatum& datum, const MaximalParabolic& P, const WeylWord& u, const WeylWord& v,
                     const WeylWord& w);
inline bool eq4_identity_check(const RootDatum& datum, const MaximalParabolic& P, const WeylWord& u,
                               const WeylWord& v, const WeylWord& w) {
  return eq4_values(datum, P, u, v, w).holds();
}

/// (ρ + u⁻¹ρ + v⁻¹ρ + w⁻¹ρ)(x_P). Reported as a value only; its sign is
/// not asserted.
Rational ineq3_check(const RootDatum& datum, const MaximalParabolic& P, const WeylWord& u, const WeylWord& v,
                     const WeylWord& w);

struct Eq4Sweep {
  int node = 0;
  std::size_t coset_size = 0;
  std::uint64_t triples_checked = 0;
  std::vector<std::string> failures;
};

/// Every triple in (W^P)^3.
Eq4Sweep eq4_sweep_exhaustive(const RootDatum& datum, int node, const ComputeLimits& limits = {});
/// `samples` triples drawn with a fixed-seed generator (deterministic).
Eq4Sweep eq4_sweep_sampled(const RootDatum& datum, int node, std::uint64_t samples, std::uint64_t seed,
                           const ComputeLimits& limits = {});

struct Ineq5Violation {
  int node = 0;
  WeylWord w;
  Rational lhs;  // λ*(w x_P)
  Rational rhs;  // (ρ + w⁻¹ρ)(x_P)
};

struct Ineq5Report {
  Weight lambda;
  Weight lambda_dual;
  std::uint64_t checks = 0;
  std::vector<Ineq5Violation> violations;
  bool pass() const { return violations.empty(); }
};

/// λ*(w x_P) <= (ρ + w⁻¹ρ)(x_P) for every maximal P and w ∈ W^P.
/// Throws PreconditionViolated unless λ is dominant and λ ≤ 2ρ.
Ineq5Report ineq5_check(const RootDatum& datum, const Weight& lambda, const ComputeLimits& limits = {});

/// W^P for every maximal parabolic, cached for sweeps over many λ.
class ParabolicTable {
 public:
  ParabolicTable(const RootDatum& datum, const ComputeLimits& limits = {});
  const std::vector<MaximalParabolic>& parabolics() const { return parabolics_; }
  const std::vector<WeylWord>& reps(int node) const { return reps_[node - 1]; }
  /// (ρ + w⁻¹ρ)(x_P) for the k-th representative of node's W^P.
  const Rational& ineq5_rhs(int node, std::size_t k) const { return rhs_[node - 1][k]; }

 private:
  std::vector<MaximalParabolic> parabolics_;
  std::vector<std::vector<WeylWord>> reps_;
  std::vector<std::vector<Rational>> rhs_;
};

Ineq5Report ineq5_check(const RootDatum& datum, const Weight& lambda, const ParabolicTable& table);

}  // namespace rhotensor
