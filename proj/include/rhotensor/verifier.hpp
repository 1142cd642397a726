#pragma once

// Named verification campaigns. Each returns a VerdictReport whose case list
// is deterministic for identical inputs; only wall_time_ms varies.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rhotensor/polytope.hpp"
#include "rhotensor/rep_theory.hpp"
#include "rhotensor/root_system.hpp"

namespace rhotensor {

struct VerdictCase {
  std::string subject;
  std::string expected;
  std::string observed;
  bool pass = true;
};

struct VerdictReport {
  std::string campaign;
  std::string spec;
  std::vector<VerdictCase> cases;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Exploratory campaigns report findings without asserting them.
  bool informational = false;
  /// Extra scalar facts (sizes, counts) keyed by snake_case names.
  std::map<std::string, std::string> facts;
  double wall_time_ms = 0;

  void add(std::string subject, std::string expected, std::string observed, bool pass);
  bool pass() const { return failed == 0; }
};

/// Saturation factor d from the published table: A 1, B 2, C 2, D 4, G2 2,
/// F4 144, E6 36, E7 144, E8 3600.
int saturation_factor(const RootSystemSpec& spec);

/// Every dominant λ ≤ 2ρ must give a component V(dλ) of V(dρ) ⊗ V(dρ); for
/// d = 1 every component ν must in turn satisfy ν ≤ 2ρ. E-types are refused
/// unless limits.allow_heavy is set.
VerdictReport kostant_check(const RootDatum& datum, int d, const ComputeLimits& limits = {});

/// 2^r · (dim V(ρ))^2 = 2^{dim g}.
VerdictReport exterior_dim_check(const RootDatum& datum);

/// Scans dominant triples with coordinates ≤ height_cap and λ+μ+ν ∈ Q for
/// triples with invariants at N ∈ {2, 3} but none at N = 1. Simply-laced
/// types only. Findings are reported, never asserted.
VerdictReport conjecture4_probe(const RootDatum& datum, int height_cap, const ComputeLimits& limits = {});

/// Vertex clauses and face intersections over all subsets.
VerdictReport lemma7_campaign(const RootDatum& datum, const ComputeLimits& limits = {});

/// Hull membership in conv{c_J} against the direct A ∩ C test on every
/// lattice point of the bounding box of the vertices, padded by one.
VerdictReport corollary8_campaign(const RootDatum& datum, const ComputeLimits& limits = {});

/// λ - ρ is a weight of V(ρ) for every dominant λ ≤ 2ρ, by both oracles, and
/// c_J - ρ = w_o^J(ρ) for every J.
VerdictReport prop9_campaign(const RootDatum& datum, const ComputeLimits& limits = {});

/// The λ*(w x_P) inequality for every dominant λ ≤ 2ρ, every maximal P and
/// every w ∈ W^P.
VerdictReport ineq5_campaign(const RootDatum& datum, const ComputeLimits& limits = {});

/// The χ identity over (W^P)^3 for every node, exhaustively when samples == 0,
/// otherwise `samples` fixed-seed random triples per node.
VerdictReport identity4_campaign(const RootDatum& datum, std::uint64_t samples = 0, const ComputeLimits& limits = {});

/// Per-node coset sanity: |W^P| · |W_L| = |W|, ρ^L(x_P) = 0, w_o^P(x_P) = x_P,
/// and every representative is reduced and keeps the Levi roots positive.
VerdictReport parabolic_campaign(const RootDatum& datum, const ComputeLimits& limits = {});

}  // namespace rhotensor
