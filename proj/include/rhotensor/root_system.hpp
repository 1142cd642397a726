#pragma once

// Root data for the simple Lie algebras and the Weyl group actions built on
// them. Node indices are 1-based and follow Bourbaki's numbering:
//
//   A_r  1 - 2 - ... - r
//   B_r  1 - ... - (r-1) => r        (r short)
//   C_r  1 - ... - (r-1) <= r        (r long)
//   D_r  1 - ... - (r-2) < (r-1), r
//   E_r  1 - 3 - 4 - 5 - ... - r, with 2 attached to 4
//   F4   1 - 2 => 3 - 4              (1, 2 long)
//   G2   1 <= 2                      (2 long)
//
// Weights are written in the fundamental-weight basis. The simple root α_i has
// fundamental coordinates given by row i of the Cartan matrix.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rhotensor/arith.hpp"
#include "rhotensor/weight.hpp"

namespace rhotensor {

enum class Family { A, B, C, D, E, F, G };

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  /// "A2", "F4", ...
  std::string name() const;
  /// Parses "B3" style names; throws InvalidSpec.
  static RootSystemSpec parse(const std::string& text);
  bool simply_laced() const { return family == Family::A || family == Family::D || family == Family::E; }

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

/// Throws InvalidSpec unless the family/rank pair names a simple Lie algebra.
void validate(const RootSystemSpec& spec);

/// Set of Dynkin nodes, stored as a bitmask (bit i-1 for node i).
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint32_t mask) : mask_(mask) {}
  NodeSet(std::initializer_list<int> nodes);
  static constexpr NodeSet full(std::size_t rank) { return NodeSet((1u << rank) - 1u); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool contains(int node) const { return (mask_ >> (node - 1)) & 1u; }
  int size() const { return __builtin_popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool subset_of(NodeSet o) const { return (mask_ & ~o.mask_) == 0; }
  NodeSet complement(std::size_t rank) const { return NodeSet(full(rank).mask_ & ~mask_); }
  std::vector<int> nodes() const;
  /// "{1,3}"
  std::string to_string() const;

  friend constexpr bool operator==(NodeSet, NodeSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// A positive root with its precomputed coordinates.
struct PositiveRoot {
  std::vector<std::int64_t> simple;   // coordinates in the simple-root basis
  Weight weight;                      // fundamental-weight coordinates
  std::vector<std::int64_t> coroot;   // α∨ in the simple-coroot basis
  std::int64_t norm2 = 0;             // (α, α) in the datum's integral form
  std::int64_t height() const;
};

/// Immutable numerical description of a simple root system.
class RootDatum {
 public:
  const RootSystemSpec& spec() const { return spec_; }
  std::size_t rank() const { return cartan_.size(); }

  /// cartan()[i][j] = <α_i, α_j∨> (0-based indices).
  const std::vector<std::vector<std::int64_t>>& cartan() const { return cartan_; }
  const std::vector<std::vector<Rational>>& cartan_inverse() const { return cartan_inverse_; }
  /// Symmetric integral form on the simple roots, (α_i, α_j).
  const std::vector<std::vector<std::int64_t>>& gram() const { return gram_; }

  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
  std::size_t num_positive_roots() const { return positive_roots_.size(); }
  std::size_t dim_g() const { return 2 * positive_roots_.size() + rank(); }
  const Weight& rho() const { return rho_; }

  /// α_i in fundamental coordinates (1-based node).
  const Weight& simple_root(int node) const { return simple_roots_[node - 1]; }

  /// Invariant form on weights scaled by inner_scale() so that it is integral:
  /// scaled_inner(a, b) = inner_scale() * (a, b).
  std::int64_t scaled_inner(const Weight& a, const Weight& b) const;
  std::int64_t inner_scale() const { return inner_scale_; }
  Rational inner(const WeightQ& a, const WeightQ& b) const;

  /// <λ, α∨> for the k-th positive root.
  std::int64_t coroot_pairing(const Weight& w, std::size_t k) const;

  friend RootDatum build_root_datum(const RootSystemSpec& spec);

 private:
  RootSystemSpec spec_;
  std::vector<std::vector<std::int64_t>> gram_;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<std::vector<Rational>> cartan_inverse_;
  std::vector<std::vector<std::int64_t>> scaled_form_;
  std::int64_t inner_scale_ = 1;
  std::vector<Weight> simple_roots_;
  std::vector<PositiveRoot> positive_roots_;
  Weight rho_;
};

/// Builds the root datum; positive roots are generated by closing the simple
/// roots under the simple reflections. Throws InvalidSpec.
RootDatum build_root_datum(const RootSystemSpec& spec);

/// Number of positive roots from the classification, used to cross-check the
/// closure.
std::size_t expected_num_positive_roots(const RootSystemSpec& spec);

/// s_i w = w - <w, α_i∨> α_i.
WeightQ simple_reflection(const RootDatum& datum, int node, const WeightQ& w);
void reflect_in_place(const RootDatum& datum, int node, Weight& w);

/// Left action of the word on w (rightmost letter first).
WeightQ apply_word(const RootDatum& datum, const WeylWord& word, const WeightQ& w);
Weight apply_word(const RootDatum& datum, const WeylWord& word, const Weight& w);

/// Coordinates c with w = Σ c_i α_i.
std::vector<Rational> to_root_basis(const RootDatum& datum, const WeightQ& w);

/// w(x_j): the α_j coordinate of w in the simple-root basis.
Rational eval_coweight(const RootDatum& datum, const WeightQ& w, int node);

/// Dominant representative of the Weyl orbit of w together with the reduced
/// word taking w to it. Always reflects at the smallest node with a negative
/// coordinate.
std::pair<WeightQ, WeylWord> dominate(const RootDatum& datum, const WeightQ& w);
std::pair<Weight, WeylWord> dominate(const RootDatum& datum, const Weight& w);

/// Dominant representative of w and the parity of the reducing word, or
/// nullopt when w lies on a reflecting hyperplane (some <w, α∨> = 0).
struct RegularDominant {
  Weight weight;
  int sign = 1;
};
std::optional<RegularDominant> dominate_regular(const RootDatum& datum, Weight w);

/// Longest element of the parabolic subgroup W_J.
WeylWord longest_element(const RootDatum& datum, NodeSet nodes);

/// λ* = -w_o λ. Throws NonDominantInput.
Weight dual_weight(const RootDatum& datum, const Weight& lambda);

/// ℓ(w) = #{α > 0 : w α < 0}, computed from the action on positive roots.
std::size_t word_length(const RootDatum& datum, const WeylWord& word);
inline bool is_reduced(const RootDatum& datum, const WeylWord& word) {
  return word_length(datum, word) == word.length();
}

/// For a root given in fundamental coordinates: true iff it is positive.
bool is_positive_root_vector(const RootDatum& datum, const Weight& root);

/// |W|, by enumerating the orbit of ρ. Throws ResourceLimit above the cap.
std::uint64_t weyl_group_order(const RootDatum& datum, const ComputeLimits& limits = {});

/// Weyl orbit of a dominant weight; each element appears once.
std::vector<Weight> weyl_orbit(const RootDatum& datum, const Weight& dominant);

}  // namespace rhotensor
