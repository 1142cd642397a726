#pragma once

// The polytope A ∩ C, where A is the dominant cone and C = 2ρ - (cone of the
// simple roots), and its vertices c_J = 2ρ - b_J for node subsets J.

#include <optional>
#include <string>
#include <vector>

#include "rhotensor/rep_theory.hpp"
#include "rhotensor/root_system.hpp"

namespace rhotensor {

/// b_J: the sum of the positive roots supported on J.
WeightQ b_of_J(const RootDatum& datum, NodeSet J);

/// c_J = 2ρ - b_J.
WeightQ vertex_c(const RootDatum& datum, NodeSet J);

/// Zeroes every fundamental coordinate outside J.
WeightQ project_pi_J(const RootDatum& datum, const WeightQ& w, NodeSet J);

/// y ∈ A_{I∖H}: y_h = 0 for h ∈ H and y is dominant.
bool in_face_A_complement(const RootDatum& datum, const WeightQ& y, NodeSet H);
/// y ∈ C_K: 2ρ - y is a non-negative combination of {α_k : k ∈ K}.
bool in_face_C(const RootDatum& datum, const WeightQ& y, NodeSet K);

/// A point of A_{I∖H} ∩ C_K found by exact simplex, or nullopt when the
/// intersection is empty.
std::optional<WeightQ> face_intersection_point(const RootDatum& datum, NodeSet H, NodeSet K);

struct Lemma7SubsetResult {
  NodeSet J;
  WeightQ b;
  WeightQ c;
  bool b_shape = false;       // 2 on J, <= 0 off J
  bool c_in_A = false;        // c_J ∈ A_{I∖J}
  bool c_in_C = false;        // c_J ∈ C_J
  bool unique_point = false;  // the J-Cartan block is invertible, so the face meet is at most one point
  bool pass() const { return b_shape && c_in_A && c_in_C && unique_point; }
};

struct Lemma7Report {
  std::vector<Lemma7SubsetResult> subsets;  // in increasing bitmask order
  bool c_empty_is_2rho = false;
  bool c_full_is_zero = false;
  bool vertices_distinct = false;
  std::size_t empty_pairs_checked = 0;    // H ⊄ K
  std::size_t nonempty_found = 0;         // of those, intersections that were not empty
  std::size_t witness_pairs_checked = 0;  // H ⊊ K
  std::size_t witness_failures = 0;
  std::vector<std::string> failures;
  bool pass() const;
};

/// Checks the vertex and face-intersection clauses over all 2^r subsets
/// and all ordered pairs. Throws ResourceLimit above limits.max_subset_rank.
Lemma7Report lemma7_check(const RootDatum& datum, const ComputeLimits& limits = {});

/// λ ∈ conv{c_J}, decided by exact simplex over the 2^r generators.
bool corollary8_membership(const RootDatum& datum, const WeightQ& lambda, const ComputeLimits& limits = {});

/// λ ∈ A ∩ C directly: dominant and 2ρ - λ has non-negative root coordinates.
bool in_polytope_by_definition(const RootDatum& datum, const WeightQ& lambda);

struct Prop9Result {
  Weight beta;
  bool lattice_hull = false;         // β ∈ ρ + Q and β ∈ H_ρ
  std::optional<bool> freudenthal;   // β in the support of V(ρ), when computed
  std::int64_t multiplicity = 0;     // m_ρ(β) when the Freudenthal oracle ran
};

/// λ = ρ + β with β a weight of V(ρ), certified by the lattice-and-hull test
/// and, when `rho_character` is given, by Freudenthal support. Throws
/// PreconditionViolated unless λ is dominant and λ ≤ 2ρ, and
/// InternalConsistencyError if an oracle rejects β or the two disagree.
Prop9Result prop9_decompose(const RootDatum& datum, const Weight& lambda, const WeightMultiset* rho_character);

/// Convenience overload: computes V(ρ)'s character itself when rank <= 4.
Prop9Result prop9_decompose(const RootDatum& datum, const Weight& lambda, const ComputeLimits& limits = {});

}  // namespace rhotensor
